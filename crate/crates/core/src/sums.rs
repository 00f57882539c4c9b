//! Writing integers as sums of at most three antipalindromes.

use serde::{Deserialize, Serialize};

use crate::digits::{check_base, palindromic_unchecked, SearchRange};
use crate::enumerate::Antipalindromes;
use crate::error::{Error, Result};

/// `target` as a sum of 1 to 3 antipalindromic `terms`, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub target: u64,
    pub base: u64,
    pub terms: Vec<u64>,
}

/// Largest `x` in `set` with `x <= cap` and `target - x` in `set`, keeping
/// the pair in descending order.
fn best_pair(set: &[u64], target: u64, cap: u64) -> Option<(u64, u64)> {
    let upper = set.partition_point(|&x| x <= cap.min(target.saturating_sub(1)));
    set[..upper]
        .iter()
        .rev()
        .take_while(|&&x| 2 * x >= target)
        .find(|&&x| set.binary_search(&(target - x)).is_ok())
        .map(|&x| (x, target - x))
}

/// Finds a decomposition of `n` into at most `max_terms` antipalindromes.
///
/// Fewer terms win; among decompositions with the same number of terms the
/// lexicographically greatest (terms in descending order) is returned.
/// Terms may repeat.
pub fn decompose(n: u64, base: u64, max_terms: usize) -> Result<Option<Decomposition>> {
    check_base(base)?;
    if n == 0 {
        return Err(Error::Zero);
    }
    if !(1..=3).contains(&max_terms) {
        return Err(Error::InvalidArgument(format!(
            "max_terms must be 1, 2 or 3, got {max_terms}"
        )));
    }
    let set: Vec<u64> = Antipalindromes::between(base, 1, n)?.collect();
    let found = |terms: Vec<u64>| Ok(Some(Decomposition { target: n, base, terms }));
    if set.binary_search(&n).is_ok() {
        return found(vec![n]);
    }
    if max_terms >= 2 {
        if let Some((x, y)) = best_pair(&set, n, n) {
            return found(vec![x, y]);
        }
    }
    if max_terms >= 3 {
        for &a in set.iter().rev() {
            if a >= n {
                continue;
            }
            if 3 * a < n {
                break;
            }
            if let Some((x, y)) = best_pair(&set, n - a, a) {
                return found(vec![a, x, y]);
            }
        }
    }
    Ok(None)
}

/// Fixed-length bit set with shifted OR, indexed from 0.
#[derive(Debug, Clone)]
struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)], len }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self |= other << shift`, discarding bits past `len`.
    fn or_shifted(&mut self, other: &BitSet, shift: usize) {
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        let n = self.words.len();
        if word_shift >= n {
            return;
        }
        if bit_shift == 0 {
            for (dst, src) in self.words[word_shift..].iter_mut().zip(&other.words) {
                *dst |= src;
            }
        } else {
            let dst = &mut self.words[word_shift..];
            dst[0] |= other.words[0] << bit_shift;
            for (i, slot) in dst.iter_mut().enumerate().skip(1) {
                *slot |= other.words[i] << bit_shift | other.words[i - 1] >> (64 - bit_shift);
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}

/// Which integers below a limit are sums of one, two or three antipalindromes.
#[derive(Debug, Clone)]
pub struct Reachability {
    base: u64,
    limit: u64,
    one: BitSet,
    two: BitSet,
    three: BitSet,
}

impl Reachability {
    /// Builds the three sum sets for `[0, limit)` once.
    pub fn build(base: u64, limit: u64) -> Result<Self> {
        check_base(base)?;
        let len = usize::try_from(limit.max(1))
            .map_err(|_| Error::Overflow("limit exceeds addressable memory"))?;
        let terms: Vec<usize> = if limit <= 1 {
            Vec::new()
        } else {
            Antipalindromes::between(base, 1, limit - 1)?.map(|a| a as usize).collect()
        };
        let mut one = BitSet::new(len);
        for &a in &terms {
            one.insert(a);
        }
        let mut two = BitSet::new(len);
        for &a in &terms {
            two.or_shifted(&one, a);
        }
        let mut three = BitSet::new(len);
        for &a in &terms {
            three.or_shifted(&two, a);
        }
        Ok(Reachability { base, limit, one, two, three })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest number of antipalindromic terms summing to `n`, if at most 3.
    pub fn min_terms(&self, n: u64) -> Option<usize> {
        if n == 0 || n >= self.limit {
            return None;
        }
        let i = n as usize;
        [&self.one, &self.two, &self.three]
            .iter()
            .position(|set| set.contains(i))
            .map(|p| p + 1)
    }

    pub fn is_reachable(&self, n: u64) -> bool {
        self.min_terms(n).is_some()
    }

    /// Unreachable `n` in `range`, clipped to `[1, limit)`, ascending.
    pub fn exceptions_in(&self, range: SearchRange) -> Vec<u64> {
        let hi = range.hi().min(self.limit);
        (range.lo()..hi).filter(|&n| !self.is_reachable(n)).collect()
    }

    /// Unreachable base-`b` palindromes in `range`, ascending.
    pub fn palindrome_exceptions_in(&self, range: SearchRange) -> Vec<u64> {
        self.exceptions_in(range)
            .into_iter()
            .filter(|&n| palindromic_unchecked(n, self.base))
            .collect()
    }
}

/// Every `n < limit` that is not a sum of at most three antipalindromes in
/// `base`.
pub fn sum_exceptions(base: u64, limit: u64) -> Result<Vec<u64>> {
    let reach = Reachability::build(base, limit)?;
    Ok(reach.exceptions_in(SearchRange::below(limit)))
}

/// Exceptions to the three-antipalindrome conjecture in base 3 below `limit`.
pub fn verify_sum_conjecture(limit: u64) -> Result<Vec<u64>> {
    sum_exceptions(3, limit)
}

/// Base-3 palindromes below `limit` that are not sums of at most three
/// base-3 antipalindromes.
pub fn verify_palindrome_sum_conjecture(limit: u64) -> Result<Vec<u64>> {
    let reach = Reachability::build(3, limit)?;
    Ok(reach.palindrome_exceptions_in(SearchRange::below(limit)))
}
