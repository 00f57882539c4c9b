//! Direct construction of antipalindromes.
//!
//! An antipalindrome of length `L` is fixed by its first `⌊L/2⌋` digits (the
//! free prefix): the low half is the complement of the reversed prefix, and an
//! odd length forces the middle digit to `(b - 1) / 2`. For a fixed length the
//! value is strictly increasing in the prefix, and every length-`L` value is
//! below every length-`L+1` value, so walking lengths upward and prefixes
//! upward yields an ascending stream.

use crate::digits::{check_base, digit_count, SearchRange};
use crate::error::{Error, Result};

/// All antipalindromes with a given base and digit count, indexed by prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    base: u64,
    len: u32,
    half: u32,
    middle: Option<u64>,
    /// `b^half`
    low_scale: u128,
    /// `b^(len - half)`
    high_scale: u128,
}

impl Shape {
    /// Fails with [`Error::NoSuchShape`] for odd lengths in even bases and
    /// with [`Error::Overflow`] when the shape cannot hold any `u64`.
    pub fn new(base: u64, len: u32) -> Result<Self> {
        check_base(base)?;
        if len == 0 {
            return Err(Error::InvalidArgument("digit count must be positive".into()));
        }
        if len % 2 == 1 && base.is_multiple_of(2) {
            return Err(Error::NoSuchShape { base, len });
        }
        if len > digit_count(u64::MAX, base)? {
            return Err(Error::Overflow("antipalindromes of this length exceed 64 bits"));
        }
        let half = len / 2;
        let middle = (len % 2 == 1).then_some((base - 1) / 2);
        let b = base as u128;
        Ok(Shape {
            base,
            len,
            half,
            middle,
            low_scale: b.pow(half),
            high_scale: b.pow(len - half),
        })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digit_count(&self) -> u32 {
        self.len
    }

    /// Number of free prefix digits.
    pub fn half(&self) -> u32 {
        self.half
    }

    /// Half-open range of admissible prefixes (first digit nonzero). A
    /// one-digit shape has the single empty prefix `0`.
    pub fn prefixes(&self) -> (u64, u64) {
        if self.half == 0 {
            (0, 1)
        } else {
            ((self.low_scale / self.base as u128) as u64, self.low_scale as u64)
        }
    }

    /// The antipalindrome whose free prefix is `prefix`.
    #[inline]
    pub fn value(&self, prefix: u64) -> u128 {
        let b = self.base;
        let mut rest = prefix;
        let mut reversed: u128 = 0;
        for _ in 0..self.half {
            reversed = reversed * b as u128 + (rest % b) as u128;
            rest /= b;
        }
        let low = self.low_scale - 1 - reversed;
        let mid = self.middle.map_or(0, |d| d as u128 * self.low_scale);
        prefix as u128 * self.high_scale + mid + low
    }

    pub fn count(&self) -> u64 {
        let (lo, hi) = self.prefixes();
        hi - lo
    }

    /// Smallest admissible prefix whose value is at least `lo`.
    pub fn first_prefix_at_least(&self, lo: u64) -> Option<u64> {
        let (start, end) = self.prefixes();
        if lo <= 1 || digit_count(lo, self.base).ok()? < self.len {
            return Some(start);
        }
        if digit_count(lo, self.base).ok()? > self.len {
            return None;
        }
        let top = (lo as u128 / self.high_scale) as u64;
        let candidate = if self.value(top) >= lo as u128 { top } else { top + 1 };
        (candidate < end).then_some(candidate.max(start))
    }
}

/// Closed-form count of antipalindromes with exactly `len` digits.
pub fn count_antipalindromes_with_length(base: u64, len: u32) -> Result<u64> {
    check_base(base)?;
    if len == 0 {
        return Err(Error::InvalidArgument("digit count must be positive".into()));
    }
    if len % 2 == 1 && base.is_multiple_of(2) {
        return Ok(0);
    }
    if len == 1 {
        return Ok(1);
    }
    let exponent = len / 2 - 1;
    base.checked_pow(exponent)
        .and_then(|p| p.checked_mul(base - 1))
        .ok_or(Error::Overflow("antipalindrome count exceeds 64 bits"))
}

/// Lazy ascending stream of antipalindromes in a closed interval.
#[derive(Debug, Clone)]
pub struct Antipalindromes {
    base: u64,
    last: u64,
    max_len: u32,
    shape: Option<Shape>,
    prefix: u64,
    prefix_end: u64,
    done: bool,
}

impl Antipalindromes {
    /// Stream over `[lo, last]`, both inclusive.
    pub fn between(base: u64, lo: u64, last: u64) -> Result<Self> {
        check_base(base)?;
        let lo = lo.max(1);
        let mut it = Antipalindromes {
            base,
            last,
            max_len: 0,
            shape: None,
            prefix: 0,
            prefix_end: 0,
            done: lo > last,
        };
        if it.done {
            return Ok(it);
        }
        it.max_len = digit_count(last, base)?;
        let mut len = digit_count(lo, base)?;
        while len <= it.max_len {
            if let Ok(shape) = Shape::new(base, len) {
                if let Some(prefix) = shape.first_prefix_at_least(lo) {
                    it.shape = Some(shape);
                    it.prefix = prefix;
                    it.prefix_end = shape.prefixes().1;
                    return Ok(it);
                }
            }
            len += 1;
        }
        it.done = true;
        Ok(it)
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    fn advance_length(&mut self) {
        let mut len = self.shape.map_or(0, |s| s.digit_count()) + 1;
        while len <= self.max_len {
            if let Ok(shape) = Shape::new(self.base, len) {
                let (start, end) = shape.prefixes();
                self.shape = Some(shape);
                self.prefix = start;
                self.prefix_end = end;
                return;
            }
            len += 1;
        }
        self.done = true;
    }
}

impl Iterator for Antipalindromes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while !self.done {
            let shape = self.shape.expect("active shape");
            if self.prefix < self.prefix_end {
                let value = shape.value(self.prefix);
                if value > self.last as u128 {
                    self.done = true;
                    return None;
                }
                self.prefix += 1;
                return Some(value as u64);
            }
            self.advance_length();
        }
        None
    }
}

/// Antipalindromic numbers in `range`, ascending, built from their prefixes.
pub fn antipalindromes_in_range(base: u64, range: SearchRange) -> Result<Antipalindromes> {
    if range.is_empty() {
        return Antipalindromes::between(base, 2, 1);
    }
    Antipalindromes::between(base, range.lo(), range.hi() - 1)
}

/// Smallest antipalindrome in `base` strictly greater than `m`.
pub fn next_antipalindrome(base: u64, m: u64) -> Result<u64> {
    let start = m
        .checked_add(1)
        .ok_or(Error::Overflow("no successor within 64 bits"))?;
    Antipalindromes::between(base, start, u64::MAX)?
        .next()
        .ok_or(Error::Overflow("no successor within 64 bits"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::{is_antipalindromic_number, to_digits};
    use proptest::prelude::*;

    fn brute(base: u64, lo: u64, hi: u64) -> Vec<u64> {
        (lo..hi)
            .filter(|&m| is_antipalindromic_number(m, base).unwrap())
            .collect()
    }

    fn stream(base: u64, lo: u64, hi: u64) -> Vec<u64> {
        antipalindromes_in_range(base, SearchRange::new(lo, hi).unwrap())
            .unwrap()
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(brute(3, 1, 30), vec![1, 4, 6, 13, 21]);
        assert_eq!(stream(3, 1, 30), vec![1, 4, 6, 13, 21]);
        assert_eq!(brute(2, 1, 16), vec![2, 10, 12]);
        assert_eq!(stream(2, 1, 16), vec![2, 10, 12]);
        assert_eq!(stream(10, 3270, 3280), vec![3276]);
    }

    #[test]
    fn matches_brute_force_filter() {
        for base in 2..=12 {
            assert_eq!(stream(base, 1, 100_000), brute(base, 1, 100_000), "base {base}");
        }
        for (base, lo, hi) in [(3, 14, 22), (10, 18, 19), (7, 48, 2500), (5, 100, 101)] {
            assert_eq!(stream(base, lo, hi), brute(base, lo, hi));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_antipalindromes_with_length(2, 2).unwrap(), 1);
        assert_eq!(count_antipalindromes_with_length(3, 3).unwrap(), 2);
        assert_eq!(count_antipalindromes_with_length(10, 3).unwrap(), 0);
        assert_eq!(count_antipalindromes_with_length(10, 1).unwrap(), 0);
        assert_eq!(count_antipalindromes_with_length(9, 1).unwrap(), 1);
        assert!(count_antipalindromes_with_length(2, 200).is_err());
    }

    #[test]
    fn counts_agree_with_stream() {
        for base in 2..=7u64 {
            for len in 1..=8u32 {
                let lo = base.pow(len - 1);
                let hi = base.pow(len);
                let listed = stream(base, lo, hi);
                assert_eq!(
                    listed.len() as u64,
                    count_antipalindromes_with_length(base, len).unwrap()
                );
                assert!(listed.iter().all(|&m| to_digits(m, base).unwrap().len() == len as usize));
            }
        }
    }

    #[test]
    fn successor_examples() {
        let expected = (3277..).find(|&m| is_antipalindromic_number(m, 10).unwrap()).unwrap();
        assert_eq!(next_antipalindrome(10, 3276).unwrap(), expected);
        assert_eq!(expected, 3366);
        assert_eq!(next_antipalindrome(3, 1).unwrap(), 4);
        assert_eq!(next_antipalindrome(2, 2).unwrap(), 10);
        assert!(next_antipalindrome(2, u64::MAX).is_err());
    }

    #[test]
    fn reaches_the_top_of_the_range() {
        // Largest base-2 antipalindrome: 1^32 0^32.
        let top = u64::MAX << 32;
        let near: Vec<u64> = Antipalindromes::between(2, top - 1, u64::MAX).unwrap().collect();
        assert_eq!(near, vec![top]);
        assert!(next_antipalindrome(2, top).is_err());
        let big_base = 1u64 << 40;
        // two digits (1)(B-2)
        assert_eq!(next_antipalindrome(big_base, 1).unwrap(), 2 * big_base - 2);
    }

    #[test]
    fn ascending_and_lazy_over_full_range() {
        let first: Vec<u64> = antipalindromes_in_range(10, SearchRange::new(1, u64::MAX).unwrap())
            .unwrap()
            .take(12)
            .collect();
        assert_eq!(first, vec![18, 27, 36, 45, 54, 63, 72, 81, 90, 1098, 1188, 1278]);
        let all: Vec<u64> = Antipalindromes::between(7, 1, 10_000_000).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn split_ranges_concatenate_to_the_whole() {
        let whole = SearchRange::new(1, 200_000).unwrap();
        for base in [2u64, 3, 10] {
            let full: Vec<u64> = antipalindromes_in_range(base, whole).unwrap().collect();
            let pieces: Vec<u64> = whole
                .split(9)
                .into_iter()
                .flat_map(|r| antipalindromes_in_range(base, r).unwrap())
                .collect();
            assert_eq!(full, pieces);
        }
    }

    proptest! {
        #[test]
        fn successor_is_tight(base in 2u64..=16, m in 1u64..2_000_000) {
            let next = next_antipalindrome(base, m).unwrap();
            prop_assert!(next > m);
            prop_assert!(is_antipalindromic_number(next, base).unwrap());
            prop_assert!((m + 1..next).all(|x| !is_antipalindromic_number(x, base).unwrap()));
        }

        #[test]
        fn shape_values_are_antipalindromes(base in 2u64..=1000, len in 1u32..=6, pick in any::<u64>()) {
            if let Ok(shape) = Shape::new(base, len) {
                let (lo, hi) = shape.prefixes();
                let prefix = lo + pick % (hi - lo);
                let v = shape.value(prefix) as u64;
                let d = to_digits(v, base).unwrap();
                prop_assert_eq!(d.len(), len as usize);
                prop_assert!(d.is_antipalindrome());
                if prefix + 1 < hi {
                    prop_assert!(shape.value(prefix + 1) > shape.value(prefix));
                }
            }
        }
    }
}
