//! Radix expansions and the palindrome / antipalindrome predicates.
//!
//! Expansions are always most-significant digit first. A value `m` in base
//! `b` is antipalindromic when `d[j] + d[L-1-j] == b - 1` for every position.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest possible expansion of a `u64` (base 2).
pub(crate) const MAX_DIGITS: usize = 64;

/// Canonical base-`b` expansion of a positive integer.
///
/// The digit vector is never empty, every digit is below the base and the
/// leading digit is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDigitString")]
pub struct DigitString {
    base: u64,
    digits: Vec<u64>,
}

#[derive(Deserialize)]
struct RawDigitString {
    base: u64,
    digits: Vec<u64>,
}

impl TryFrom<RawDigitString> for DigitString {
    type Error = Error;

    fn try_from(raw: RawDigitString) -> Result<Self> {
        DigitString::new(raw.base, raw.digits)
    }
}

impl DigitString {
    /// Validates `digits` as a canonical expansion in `base`.
    pub fn new(base: u64, digits: Vec<u64>) -> Result<Self> {
        check_base(base)?;
        match digits.first() {
            None => return Err(Error::EmptyDigits),
            Some(0) => return Err(Error::LeadingZero),
            Some(_) => {}
        }
        if let Some(&digit) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::InvalidDigit { digit, base });
        }
        Ok(DigitString { base, digits })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn leading_digit(&self) -> u64 {
        self.digits[0]
    }

    /// The represented value; see [`from_digits`].
    pub fn value(&self) -> Result<u64> {
        from_digits(self)
    }

    /// The represented value in 128-bit arithmetic.
    pub fn value_wide(&self) -> Result<u128> {
        evaluate_wide(self.base, &self.digits)
    }

    pub fn digit_sum(&self) -> u128 {
        self.digits.iter().map(|&d| d as u128).sum()
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(self)
    }

    pub fn is_antipalindrome(&self) -> bool {
        is_antipalindrome(self)
    }

    /// Digits rendered as a single run of symbols for bases up to 10 and as
    /// space-separated decimal integers otherwise.
    pub fn render(&self) -> String {
        render_digits(self.base, &self.digits)
    }

    /// Space-separated decimal digits regardless of base.
    pub fn render_spaced(&self) -> String {
        let parts: Vec<String> = self.digits.iter().map(u64::to_string).collect();
        parts.join(" ")
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub(crate) fn render_digits(base: u64, digits: &[u64]) -> String {
    if base <= 10 {
        digits.iter().map(|d| char::from(b'0' + *d as u8)).collect()
    } else {
        let parts: Vec<String> = digits.iter().map(u64::to_string).collect();
        parts.join(" ")
    }
}

pub(crate) fn check_base(base: u64) -> Result<()> {
    if base < 2 {
        Err(Error::InvalidBase(base))
    } else {
        Ok(())
    }
}

fn check_value(m: u64, base: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::Zero);
    }
    check_base(base)
}

/// Writes the digits of `m` into `buf` least-significant first and returns
/// how many were written. `m` must be positive and `base >= 2`.
#[inline]
pub(crate) fn fill_digits_le(mut m: u64, base: u64, buf: &mut [u64; MAX_DIGITS]) -> usize {
    let mut len = 0;
    while m > 0 {
        buf[len] = m % base;
        m /= base;
        len += 1;
    }
    len
}

#[inline]
pub(crate) fn antipalindromic_unchecked(m: u64, base: u64) -> bool {
    let mut buf = [0u64; MAX_DIGITS];
    let len = fill_digits_le(m, base, &mut buf);
    let top = base - 1;
    (0..len / 2 + len % 2).all(|j| buf[j] + buf[len - 1 - j] == top)
}

#[inline]
pub(crate) fn palindromic_unchecked(m: u64, base: u64) -> bool {
    let mut buf = [0u64; MAX_DIGITS];
    let len = fill_digits_le(m, base, &mut buf);
    (0..len / 2).all(|j| buf[j] == buf[len - 1 - j])
}

/// Canonical expansion of `m` in `base`, most-significant digit first.
pub fn to_digits(m: u64, base: u64) -> Result<DigitString> {
    check_value(m, base)?;
    let mut buf = [0u64; MAX_DIGITS];
    let len = fill_digits_le(m, base, &mut buf);
    let digits = buf[..len].iter().rev().copied().collect();
    Ok(DigitString { base, digits })
}

/// Expansion of a 128-bit value, for constructions whose values leave the
/// 64-bit range.
pub fn to_digits_wide(m: u128, base: u64) -> Result<DigitString> {
    if m == 0 {
        return Err(Error::Zero);
    }
    check_base(base)?;
    let b = base as u128;
    let mut rest = m;
    let mut digits = Vec::new();
    while rest > 0 {
        digits.push((rest % b) as u64);
        rest /= b;
    }
    digits.reverse();
    Ok(DigitString { base, digits })
}

pub(crate) fn evaluate_wide(base: u64, digits: &[u64]) -> Result<u128> {
    digits.iter().try_fold(0u128, |acc, &d| {
        acc.checked_mul(base as u128)
            .and_then(|v| v.checked_add(d as u128))
            .ok_or(Error::Overflow("value does not fit in 128 bits"))
    })
}

/// Evaluates an expansion, signalling overflow instead of wrapping.
pub fn from_digits(d: &DigitString) -> Result<u64> {
    evaluate(d.base, &d.digits)
}

/// Evaluates a raw most-significant-first digit sequence in `base`.
pub(crate) fn evaluate(base: u64, digits: &[u64]) -> Result<u64> {
    digits.iter().try_fold(0u64, |acc, &d| {
        acc.checked_mul(base)
            .and_then(|v| v.checked_add(d))
            .ok_or(Error::Overflow("value does not fit in 64 bits"))
    })
}

/// Number of base-`b` digits of `m`.
pub fn digit_count(m: u64, base: u64) -> Result<u32> {
    check_value(m, base)?;
    let mut buf = [0u64; MAX_DIGITS];
    Ok(fill_digits_le(m, base, &mut buf) as u32)
}

pub fn is_palindrome(d: &DigitString) -> bool {
    d.digits.iter().eq(d.digits.iter().rev())
}

pub fn is_antipalindrome(d: &DigitString) -> bool {
    let top = d.base - 1;
    d.digits
        .iter()
        .zip(d.digits.iter().rev())
        .all(|(a, b)| a + b == top)
}

pub fn is_antipalindromic_number(m: u64, base: u64) -> Result<bool> {
    check_value(m, base)?;
    Ok(antipalindromic_unchecked(m, base))
}

pub fn is_palindromic_number(m: u64, base: u64) -> Result<bool> {
    check_value(m, base)?;
    Ok(palindromic_unchecked(m, base))
}

/// Reverses `digits` and replaces each digit `u` by `base - 1 - u`.
///
/// Leading zeros are allowed on input and may appear on output, so the result
/// is a raw sequence rather than a [`DigitString`]. Applying it twice returns
/// the input; antipalindromes are exactly its fixed points.
pub fn antipalindromic_complement(base: u64, digits: &[u64]) -> Result<Vec<u64>> {
    check_base(base)?;
    digits
        .iter()
        .rev()
        .map(|&u| {
            if u < base {
                Ok(base - 1 - u)
            } else {
                Err(Error::InvalidDigit { digit: u, base })
            }
        })
        .collect()
}

/// A divisor shared by every antipalindrome with `digit_count` digits in
/// `base`: `b - 1` for an even count and `(b - 1) / 2` for an odd count.
///
/// An odd count in an even base admits no antipalindromes at all, which is
/// reported as [`Error::NoSuchShape`].
pub fn guaranteed_divisor(base: u64, digit_count: u32) -> Result<u64> {
    check_base(base)?;
    if digit_count == 0 {
        return Err(Error::InvalidArgument("digit count must be positive".into()));
    }
    if digit_count.is_multiple_of(2) {
        Ok(base - 1)
    } else if base % 2 == 1 {
        Ok((base - 1) / 2)
    } else {
        Err(Error::NoSuchShape { base, len: digit_count })
    }
}

/// Half-open interval `[lo, hi)` of positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchRange {
    lo: u64,
    hi: u64,
}

impl SearchRange {
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo == 0 {
            return Err(Error::InvalidArgument("range must start at 1 or above".into()));
        }
        if hi < lo {
            return Err(Error::InvalidArgument(format!(
                "range upper bound {hi} is below lower bound {lo}"
            )));
        }
        Ok(SearchRange { lo, hi })
    }

    /// `[1, hi)`, empty when `hi <= 1`.
    pub fn below(hi: u64) -> Self {
        SearchRange { lo: 1, hi: hi.max(1) }
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }

    pub fn contains(&self, m: u64) -> bool {
        self.lo <= m && m < self.hi
    }

    /// Splits into at most `parts` contiguous, non-empty, ordered sub-ranges
    /// whose concatenation is `self`.
    pub fn split(&self, parts: usize) -> Vec<SearchRange> {
        if self.is_empty() {
            return Vec::new();
        }
        let parts = parts.max(1) as u64;
        let width = self.hi - self.lo;
        let step = width.div_ceil(parts).max(1);
        let mut out = Vec::new();
        let mut lo = self.lo;
        while lo < self.hi {
            let hi = lo.saturating_add(step).min(self.hi);
            out.push(SearchRange { lo, hi });
            lo = hi;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ds(base: u64, digits: &[u64]) -> DigitString {
        DigitString::new(base, digits.to_vec()).unwrap()
    }

    #[test]
    fn expansions_from_worked_examples() {
        assert_eq!(to_digits(1581, 3).unwrap().digits(), &[2, 0, 1, 1, 1, 2, 0]);
        assert_eq!(to_digits(52, 2).unwrap().digits(), &[1, 1, 0, 1, 0, 0]);
        assert_eq!(to_digits(7, 10).unwrap().digits(), &[7]);
    }

    #[test]
    fn evaluation() {
        assert_eq!(from_digits(&ds(2, &[1, 0])).unwrap(), 2);
        assert_eq!(from_digits(&ds(3, &[1, 1, 1])).unwrap(), 13);
        assert_eq!(from_digits(&ds(10, &[3, 2, 7, 6])).unwrap(), 3276);
    }

    #[test]
    fn evaluation_overflow_is_signalled() {
        let d = ds(10, &[1; 21]);
        assert!(matches!(from_digits(&d), Err(Error::Overflow(_))));
        let max = to_digits(u64::MAX, 7).unwrap();
        assert_eq!(from_digits(&max).unwrap(), u64::MAX);
        let wide = to_digits_wide(u64::MAX as u128 + 1, 2).unwrap();
        assert_eq!(wide.len(), 65);
        assert!(matches!(wide.value(), Err(Error::Overflow(_))));
        assert_eq!(wide.value_wide().unwrap(), 1u128 << 64);
        assert_eq!(to_digits_wide(3276, 64).unwrap(), to_digits(3276, 64).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(to_digits(0, 10), Err(Error::Zero));
        assert_eq!(to_digits(5, 1), Err(Error::InvalidBase(1)));
        assert_eq!(DigitString::new(10, vec![]), Err(Error::EmptyDigits));
        assert_eq!(DigitString::new(10, vec![0, 1]), Err(Error::LeadingZero));
        assert_eq!(
            DigitString::new(3, vec![1, 3]),
            Err(Error::InvalidDigit { digit: 3, base: 3 })
        );
    }

    #[test]
    fn palindrome_predicate() {
        assert!(is_palindrome(&ds(10, &[1, 2, 1])));
        assert!(!is_palindrome(&ds(2, &[1, 1, 0, 1, 0, 0])));
        assert!(is_palindrome(&ds(3, &[1, 1, 1])));
    }

    #[test]
    fn antipalindrome_predicate() {
        assert!(is_antipalindrome(&ds(10, &[3, 9, 5, 4, 0, 6])));
        assert!(is_antipalindrome(&ds(3, &[1])));
        assert!(!is_antipalindrome(&ds(2, &[1])));
        assert!(is_antipalindrome(&ds(2, &[1, 1, 0, 1, 0, 0])));
        assert!(is_antipalindrome(&ds(3, &[2, 0, 1, 1, 1, 2, 0])));
    }

    #[test]
    fn antipalindromic_numbers() {
        assert!(is_antipalindromic_number(3276, 10).unwrap());
        // 3276 = 11111100 in base 3
        assert_eq!(to_digits(3276, 3).unwrap().render(), "11111100");
        assert!(!is_antipalindromic_number(3276, 3).unwrap());
        for m in [1u64, 2, 17, 3276, 1 << 40] {
            assert!(is_antipalindromic_number(m, 2 * m + 1).unwrap());
        }
        assert!(is_antipalindromic_number(0, 3).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(antipalindromic_complement(10, &[3, 2, 7, 6]).unwrap(), vec![3, 2, 7, 6]);
        assert_eq!(antipalindromic_complement(3, &[0, 1, 0]).unwrap(), vec![2, 1, 2]);
        assert_eq!(antipalindromic_complement(64, &[51]).unwrap(), vec![12]);
        assert!(antipalindromic_complement(3, &[3]).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(guaranteed_divisor(10, 4).unwrap(), 9);
        assert_eq!(guaranteed_divisor(3, 5).unwrap(), 1);
        assert_eq!(guaranteed_divisor(28, 2).unwrap(), 27);
        assert_eq!(guaranteed_divisor(3, 1).unwrap(), 1);
        assert_eq!(
            guaranteed_divisor(10, 3),
            Err(Error::NoSuchShape { base: 10, len: 3 })
        );
    }

    #[test]
    fn render_switches_on_base() {
        assert_eq!(to_digits(3276, 64).unwrap().render(), "51 12");
        assert_eq!(to_digits(52, 2).unwrap().to_string(), "110100");
        assert_eq!(to_digits(52, 2).unwrap().render_spaced(), "1 1 0 1 0 0");
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for base in 2..=16 {
            for m in 1..=1_000_000u64 {
                let d = to_digits(m, base).unwrap();
                assert_eq!(from_digits(&d).unwrap(), m);
            }
        }
    }

    #[test]
    fn pal_and_antipal_only_with_middle_digits() {
        // Exhaustive over all strings of length 1..=4 for small odd bases.
        for base in [3u64, 5, 7, 9] {
            for len in 1..=4u32 {
                let total = base.pow(len);
                for code in 0..total {
                    let mut c = code;
                    let mut digits = vec![0; len as usize];
                    for slot in digits.iter_mut().rev() {
                        *slot = c % base;
                        c /= base;
                    }
                    let Ok(d) = DigitString::new(base, digits) else { continue };
                    let both = d.is_palindrome() && d.is_antipalindrome();
                    let all_middle = d.digits().iter().all(|&x| 2 * x == base - 1);
                    assert_eq!(both, all_middle, "{d:?}");
                }
            }
        }
    }

    #[test]
    fn digit_sum_lemma() {
        for base in 3..=12u64 {
            for m in 1..=100_000u64 {
                let sum = to_digits(m, base).unwrap().digit_sum();
                assert_eq!(m % (base - 1) == 0, sum.is_multiple_of((base - 1) as u128));
            }
        }
    }

    #[test]
    fn split_covers_range_in_order() {
        let r = SearchRange::new(5, 1000).unwrap();
        let parts = r.split(7);
        assert!(parts.len() <= 7);
        assert_eq!(parts.first().unwrap().lo(), 5);
        assert_eq!(parts.last().unwrap().hi(), 1000);
        for w in parts.windows(2) {
            assert_eq!(w[0].hi(), w[1].lo());
        }
        assert!(SearchRange::new(0, 5).is_err());
        assert!(SearchRange::new(5, 4).is_err());
        assert!(SearchRange::below(1).is_empty());
    }

    #[test]
    fn serde_rejects_non_canonical() {
        let ok: DigitString = serde_json::from_str(r#"{"base":10,"digits":[3,6]}"#).unwrap();
        assert_eq!(ok.value().unwrap(), 36);
        assert!(serde_json::from_str::<DigitString>(r#"{"base":10,"digits":[0,6]}"#).is_err());
        assert_eq!(serde_json::to_string(&ok).unwrap(), r#"{"base":10,"digits":[3,6]}"#);
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(base in 2u64..=1000, raw in proptest::collection::vec(any::<u64>(), 0..20)) {
            let digits: Vec<u64> = raw.into_iter().map(|d| d % base).collect();
            let once = antipalindromic_complement(base, &digits).unwrap();
            let twice = antipalindromic_complement(base, &once).unwrap();
            prop_assert_eq!(twice, digits);
        }

        #[test]
        fn antipalindrome_iff_complement_fixed_point(m in 1u64.., base in 2u64..=40) {
            let d = to_digits(m, base).unwrap();
            let fixed = antipalindromic_complement(base, d.digits()).unwrap() == d.digits();
            prop_assert_eq!(d.is_antipalindrome(), fixed);
            prop_assert_eq!(is_antipalindromic_number(m, base).unwrap(), fixed);
        }

        #[test]
        fn round_trip_full_range(m in 1u64.., base in 2u64..) {
            let d = to_digits(m, base).unwrap();
            prop_assert_eq!(from_digits(&d).unwrap(), m);
            prop_assert!(d.leading_digit() != 0);
            prop_assert!(d.digits().iter().all(|&x| x < base));
        }
    }
}
