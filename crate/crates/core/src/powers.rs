//! Antipalindromic squares and higher powers.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::digits::{
    antipalindromic_unchecked, check_base, evaluate_wide, to_digits, to_digits_wide, DigitString,
};
use crate::error::{Error, Result};

/// An antipalindromic `k`-th power.
///
/// `value` is 128-bit because the odd-power construction leaves the 64-bit
/// range for modest parameters; searched hits always fit in 64 bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerHit {
    pub base: u64,
    pub exponent: u32,
    pub root: u64,
    pub value: u128,
    pub digits: DigitString,
}

/// Largest `r` with `r^k <= x`, by binary search on integers.
pub fn integer_root(x: u64, k: u32) -> u64 {
    assert!(k >= 1, "root index must be positive");
    if k == 1 || x < 2 {
        return x;
    }
    // 2^(64/k + 1) bounds every k-th root of a u64 from above.
    let mut lo = 1u64;
    let mut hi = 1u64.checked_shl(64 / k + 1).unwrap_or(u64::MAX).min(x);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match mid.checked_pow(k) {
            Some(p) if p <= x => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

fn check_exponent(k: u32) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidArgument(format!("exponent {k} must be at least 2")))
    } else {
        Ok(())
    }
}

/// Roots `m >= 1` with `m^k < limit`.
pub fn root_range(k: u32, limit: u64) -> Result<RangeInclusive<u64>> {
    check_exponent(k)?;
    if limit <= 1 {
        #[allow(clippy::reversed_empty_ranges)]
        return Ok(1..=0);
    }
    Ok(1..=integer_root(limit - 1, k))
}

/// Antipalindromic `k`-th powers whose roots lie in `roots`, ascending.
pub fn power_hits_for_roots(
    base: u64,
    k: u32,
    roots: RangeInclusive<u64>,
) -> Result<impl Iterator<Item = PowerHit>> {
    check_base(base)?;
    check_exponent(k)?;
    Ok(roots.filter_map(move |root| {
        let value = root.checked_pow(k)?;
        antipalindromic_unchecked(value, base).then(|| PowerHit {
            base,
            exponent: k,
            root,
            value: value as u128,
            digits: to_digits(value, base).expect("positive value"),
        })
    }))
}

/// All `m^k < limit` that are antipalindromic in `base`, ascending.
pub fn antipalindromic_powers(
    base: u64,
    k: u32,
    limit: u64,
) -> Result<impl Iterator<Item = PowerHit>> {
    power_hits_for_roots(base, k, root_range(k, limit)?)
}

pub fn count_powers_for_roots(base: u64, k: u32, roots: RangeInclusive<u64>) -> Result<u64> {
    check_base(base)?;
    check_exponent(k)?;
    Ok(roots
        .filter(|&m| m.checked_pow(k).is_some_and(|v| antipalindromic_unchecked(v, base)))
        .count() as u64)
}

/// Number of antipalindromic `k`-th powers strictly below `limit`.
pub fn count_antipalindromic_powers(base: u64, k: u32, limit: u64) -> Result<u64> {
    count_powers_for_roots(base, k, root_range(k, limit)?)
}

/// `(m * n)^k` as a two-digit antipalindrome `(m^k - 1)(b - m^k)` in base
/// `b = n^k + 1`, for `2 <= m <= n`.
pub fn construct_power_family(n: u64, k: u32, m: u64) -> Result<PowerHit> {
    check_exponent(k)?;
    if n < 2 || m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    let overflow = Error::Overflow("power family value exceeds 64 bits");
    let base = n
        .checked_pow(k)
        .and_then(|p| p.checked_add(1))
        .ok_or(overflow.clone())?;
    let root = m.checked_mul(n).ok_or(overflow.clone())?;
    let value = root.checked_pow(k).ok_or(overflow)?;
    let mk = m.pow(k);
    let formula = vec![mk - 1, base - mk];
    let digits = to_digits(value, base)?;
    if digits.digits() != formula.as_slice() || !digits.is_antipalindrome() {
        return Err(Error::Inconsistent(format!(
            "({root})^{k} in base {base}: expected {formula:?}, got {:?}",
            digits.digits()
        )));
    }
    Ok(PowerHit { base, exponent: k, root, value: value as u128, digits })
}

pub(crate) fn binomial(n: u32, r: u32) -> u128 {
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Smallest base from which `[m(b-1)]^k` is guaranteed antipalindromic:
/// `C(k, (k-1)/2) * m^k`.
pub fn odd_power_bound(m: u64, k: u32) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("m = {m} must exceed 1")));
    }
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("k = {k} must be odd and exceed 1")));
    }
    let mk = (m as u128)
        .checked_pow(k)
        .ok_or(Error::Overflow("m^k exceeds 128 bits"))?;
    binomial(k, (k - 1) / 2)
        .checked_mul(mk)
        .and_then(|c| u64::try_from(c).ok())
        .ok_or(Error::Overflow("base bound exceeds 64 bits"))
}

/// Digits of `[m(b-1)]^k` read off the alternating binomial expansion:
/// even positions carry `m^k C(k,i) - 1`, odd positions `b - m^k C(k,i)`.
pub fn odd_power_formula_digits(m: u64, k: u32, base: u64) -> Result<Vec<u64>> {
    let bound = odd_power_bound(m, k)?;
    if base < bound {
        return Err(Error::BelowBound { base, bound });
    }
    let mk = m.pow(k);
    Ok((0..=k)
        .map(|i| {
            // Each coefficient is at most the bound, which fits in u64.
            let coef = binomial(k, i) as u64 * mk;
            if i % 2 == 0 {
                coef - 1
            } else {
                base - coef
            }
        })
        .collect())
}

/// `[m(b-1)]^k` for odd `k > 1` in a base at or above [`odd_power_bound`].
/// The formula digits are checked against both their positional value and
/// the direct expansion. Values are computed in 128 bits.
pub fn construct_odd_power(m: u64, k: u32, base: u64) -> Result<PowerHit> {
    check_base(base)?;
    let formula = odd_power_formula_digits(m, k, base)?;
    let root = (base - 1)
        .checked_mul(m)
        .ok_or(Error::Overflow("m(b-1) exceeds 64 bits"))?;
    let value = (root as u128)
        .checked_pow(k)
        .ok_or(Error::Overflow("[m(b-1)]^k exceeds 128 bits"))?;
    let positional = evaluate_wide(base, &formula)?;
    let digits = to_digits_wide(value, base)?;
    if positional != value || digits.digits() != formula.as_slice() || !digits.is_antipalindrome() {
        return Err(Error::Inconsistent(format!(
            "[{m}*({base}-1)]^{k}: formula {formula:?} vs expansion {:?}",
            digits.digits()
        )));
    }
    Ok(PowerHit { base, exponent: k, root, value, digits })
}

/// One cell of a count table: bases `n^k + offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub n: u64,
    pub offset: u64,
    pub base: u64,
    pub exponent: u32,
    pub limit: u64,
    pub count: u64,
}

pub fn table_cell(n: u64, offset: u64, k: u32, limit: u64) -> Result<TableCell> {
    let base = n
        .checked_pow(k)
        .and_then(|p| p.checked_add(offset))
        .ok_or(Error::Overflow("table base exceeds 64 bits"))?;
    Ok(TableCell {
        n,
        offset,
        base,
        exponent: k,
        limit,
        count: count_antipalindromic_powers(base, k, limit)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::is_antipalindromic_number;

    fn values(b: u64, k: u32, limit: u64) -> Vec<u64> {
        antipalindromic_powers(b, k, limit).unwrap().map(|h| h.value as u64).collect()
    }

    #[test]
    fn integer_roots_are_exact_at_boundaries() {
        assert_eq!(integer_root(999_999_999_999, 2), 999_999);
        assert_eq!(integer_root(1_000_000_000_000, 2), 1_000_000);
        assert_eq!(integer_root(999_999_999_999_999, 4), 5623);
        assert_eq!(integer_root(u64::MAX, 2), u32::MAX as u64);
        assert_eq!(integer_root(u64::MAX, 64), 1);
        assert_eq!(integer_root(u64::MAX, 63), 2);
        assert_eq!(integer_root(0, 3), 0);
        for k in 2..=6u32 {
            for r in 1..200u64 {
                let p = r.pow(k);
                assert_eq!(integer_root(p, k), r);
                assert_eq!(integer_root(p - 1, k), r - 1);
            }
        }
    }

    #[test]
    fn worked_examples() {
        assert_eq!(values(10, 2, 100), vec![36, 81]);
        assert_eq!(values(28, 3, 1000), vec![216, 729]);
        assert!(values(10, 7, 3000).contains(&2187));
        assert_eq!(values(3, 2, 2), vec![1]);
        assert!(values(5, 2, 2).is_empty());
        assert!(values(10, 2, 1).is_empty());
    }

    #[test]
    fn limits_are_strict() {
        // 36 is a hit; a limit of 36 excludes it.
        assert_eq!(values(10, 2, 36), Vec::<u64>::new());
        assert_eq!(values(10, 2, 37), vec![36]);
    }

    #[test]
    fn hits_reverify() {
        for hit in antipalindromic_powers(401, 2, 1_000_000_000_000).unwrap() {
            assert_eq!(hit.root.pow(2) as u128, hit.value);
            assert!(hit.value < 1_000_000_000_000);
            assert!(is_antipalindromic_number(hit.value as u64, 401).unwrap());
            assert_eq!(hit.digits.value().unwrap() as u128, hit.value);
        }
    }

    #[test]
    fn family_examples() {
        let h = construct_power_family(3, 2, 2).unwrap();
        assert_eq!((h.value, h.base, h.digits.digits().to_vec()), (36, 10, vec![3, 6]));
        let h = construct_power_family(3, 3, 2).unwrap();
        assert_eq!((h.value, h.base, h.digits.digits().to_vec()), (216, 28, vec![7, 20]));
        let h = construct_power_family(3, 2, 3).unwrap();
        assert_eq!((h.value, h.base, h.digits.digits().to_vec()), (81, 10, vec![8, 1]));
        assert!(construct_power_family(3, 2, 4).is_err());
        assert!(construct_power_family(3, 2, 1).is_err());
        assert!(construct_power_family(3, 1, 2).is_err());
        assert!(matches!(construct_power_family(1 << 20, 4, 2), Err(Error::Overflow(_))));
    }

    #[test]
    fn family_is_found_by_search() {
        for n in 2..=9u64 {
            for k in 2..=4u32 {
                let base = n.pow(k) + 1;
                let found = values(base, k, (n * n).pow(k) + 1);
                for m in 2..=n {
                    let hit = construct_power_family(n, k, m).unwrap();
                    assert!(found.contains(&(hit.value as u64)), "n={n} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn odd_power_examples() {
        assert_eq!(odd_power_bound(2, 3).unwrap(), 24);
        let h = construct_odd_power(2, 3, 24).unwrap();
        assert_eq!(h.value, 97_336);
        assert_eq!(h.root, 46);
        assert_eq!(h.digits.digits(), &[7, 0, 23, 16]);
        assert_eq!(7 * 24u64.pow(3) + 23 * 24 + 16, 97_336);
        let h = construct_odd_power(2, 3, 25).unwrap();
        assert!(h.digits.is_antipalindrome());
        assert_eq!(
            construct_odd_power(2, 3, 23),
            Err(Error::BelowBound { base: 23, bound: 24 })
        );
        assert!(construct_odd_power(1, 3, 100).is_err());
        assert!(construct_odd_power(2, 4, 100).is_err());
    }

    #[test]
    fn odd_power_grid() {
        for m in [2u64, 3] {
            for k in [3u32, 5] {
                let bound = odd_power_bound(m, k).unwrap();
                for base in [bound, bound + 1, bound + 17] {
                    let hit = construct_odd_power(m, k, base).unwrap();
                    assert_eq!(hit.digits.len(), k as usize + 1);
                    assert!(hit.digits.is_antipalindrome());
                    assert_eq!(hit.digits.value_wide().unwrap(), hit.value);
                    if let Ok(v) = u64::try_from(hit.value) {
                        assert!(is_antipalindromic_number(v, base).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(3, 3), 1);
    }
}
