//! Numbers that are antipalindromic in several bases at once.

use serde::{Deserialize, Serialize};

use crate::digits::{
    antipalindromic_unchecked, check_base, is_antipalindromic_number, to_digits, DigitString,
};
use crate::enumerate::Antipalindromes;
use crate::error::{Error, Result};
use crate::primes::is_prime;

/// A number together with every listed base in which it is antipalindromic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultibaseReport {
    pub value: u64,
    /// Expansions ascending by base; each carries its own base.
    pub entries: Vec<DigitString>,
}

impl MultibaseReport {
    pub fn bases(&self) -> Vec<u64> {
        self.entries.iter().map(DigitString::base).collect()
    }

    fn from_bases(value: u64, bases: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut bases: Vec<u64> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let entries = bases
            .into_iter()
            .map(|b| verified_expansion(value, b))
            .collect::<Result<_>>()?;
        Ok(MultibaseReport { value, entries })
    }
}

fn verified_expansion(value: u64, base: u64) -> Result<DigitString> {
    let digits = to_digits(value, base)?;
    if !digits.is_antipalindrome() {
        return Err(Error::NotAntipalindromic { value, base });
    }
    Ok(digits)
}

fn mirror_base(m: u64) -> Result<u64> {
    m.checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("base 2m+1 exceeds 64 bits"))
}

/// Every base in `[2, 2m + 1]` where `m` is antipalindromic.
///
/// Above `m` the expansion is a single digit, which is antipalindromic only
/// in base `2m + 1`, so the scan covers `[2, m]` and appends that base.
pub fn antipalindromic_bases(m: u64) -> Result<MultibaseReport> {
    if m == 0 {
        return Err(Error::Zero);
    }
    let top = mirror_base(m)?;
    let mut entries: Vec<DigitString> = (2..=m)
        .filter(|&b| antipalindromic_unchecked(m, b))
        .map(|b| to_digits(m, b))
        .collect::<Result<_>>()?;
    entries.push(to_digits(m, top)?);
    Ok(MultibaseReport { value: m, entries })
}

/// Two bases in which a composite `a` is antipalindromic: `a/n + 1` for the
/// smallest prime factor `n` (digits `(n-1)(a/n - n + 1)`) and `2a + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBases {
    pub value: u64,
    pub first: DigitString,
    pub second: DigitString,
}

fn smallest_factor(a: u64) -> Option<u64> {
    if is_prime(a) {
        return None;
    }
    if a.is_multiple_of(2) {
        return (a > 2).then_some(2);
    }
    let mut d = 3u64;
    while d <= a / d {
        if a.is_multiple_of(d) {
            return Some(d);
        }
        d += 2;
    }
    None
}

pub fn composite_two_bases(a: u64) -> Result<TwoBases> {
    let n = match smallest_factor(a) {
        Some(n) if a >= 4 => n,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "{a} is not composite"
            )))
        }
    };
    let cofactor = a / n;
    let first = verified_expansion(a, cofactor + 1)?;
    let expected = [n - 1, cofactor - n + 1];
    if first.digits() != expected {
        return Err(Error::Inconsistent(format!(
            "{a} in base {}: expected {expected:?}, got {:?}",
            cofactor + 1,
            first.digits()
        )));
    }
    let second = verified_expansion(a, mirror_base(a)?)?;
    Ok(TwoBases { value: a, first, second })
}

/// `(2n)!` with its constructed bases `(2n)!/j + 1` for `j = 2..=n+1` and
/// `2 (2n)! + 1`, giving `n + 1` bases in all.
pub fn factorial_construction(n: u64) -> Result<MultibaseReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let a = (1..=n.checked_mul(2).ok_or(Error::Overflow("(2n)! exceeds 64 bits"))?)
        .try_fold(1u64, |acc, i| acc.checked_mul(i))
        .ok_or(Error::Overflow("(2n)! exceeds 64 bits"))?;
    let mut bases: Vec<u64> = (2..=n + 1).map(|j| a / j + 1).collect();
    bases.push(mirror_base(a)?);
    MultibaseReport::from_bases(a, bases)
}

/// A number antipalindromic in `base` and in a second base below itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairedBases {
    pub value: u64,
    pub first: DigitString,
    pub second: DigitString,
}

/// `12` in bases 2 and 4, `72` in bases 3 and 9, and `4(b-1)` in bases `b`
/// and `2b - 1` otherwise.
pub fn paired_base_construction(base: u64) -> Result<PairedBases> {
    check_base(base)?;
    let (value, other) = match base {
        2 => (12, 4),
        3 => (72, 9),
        b => {
            let value = (b - 1)
                .checked_mul(4)
                .ok_or(Error::Overflow("4(b-1) exceeds 64 bits"))?;
            (value, 2 * b - 1)
        }
    };
    let first = verified_expansion(value, base)?;
    let second = verified_expansion(value, other)?;
    debug_assert!(other < value);
    Ok(PairedBases { value, first, second })
}

/// `m = p' q' d` for `d = gcd(p, q)`, antipalindromic in bases `p + 1` and
/// `q + 1` with digits `(q'-1)(p+1-q')` and `(p'-1)(q+1-p')`.
pub fn gcd_construction(p: u64, q: u64) -> Result<PairedBases> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument("p and q must be positive".into()));
    }
    let d = gcd(p, q);
    let (pr, qr) = (p / d, q / d);
    let fail = |what: String| Err(Error::InvalidArgument(what));
    if qr <= 1 {
        return fail(format!("q' = {qr} must exceed 1"));
    }
    if pr <= 1 {
        return fail(format!("p' = {pr} must exceed 1"));
    }
    if p < qr {
        return fail(format!("p = {p} must be at least q' = {qr}"));
    }
    if q < pr {
        return fail(format!("q = {q} must be at least p' = {pr}"));
    }
    let value = p
        .checked_mul(qr)
        .ok_or(Error::Overflow("p q' exceeds 64 bits"))?;
    let first_base = p.checked_add(1).ok_or(Error::Overflow("p + 1 exceeds 64 bits"))?;
    let second_base = q.checked_add(1).ok_or(Error::Overflow("q + 1 exceeds 64 bits"))?;
    let first = verified_expansion(value, first_base)?;
    let second = verified_expansion(value, second_base)?;
    if first.digits() != [qr - 1, p + 1 - qr] || second.digits() != [pr - 1, q + 1 - pr] {
        return Err(Error::Inconsistent(format!("gcd construction for ({p}, {q})")));
    }
    Ok(PairedBases { value, first, second })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Block decomposition of an antipalindrome in base `b^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCheck {
    pub value: u64,
    pub base: u64,
    pub block_len: u32,
    /// Expansion in `b^n`.
    pub wide: DigitString,
    /// Each wide digit as a zero-padded width-`n` block in base `b`.
    pub blocks: Vec<Vec<u64>>,
    /// True when every block is a palindrome, i.e. `m` is also
    /// antipalindromic in base `b`.
    pub holds: bool,
}

/// Decides antipalindromy in base `b` of an antipalindrome in base `b^n`
/// whose top digit is at least `b^(n-1)`, by testing each width-`n` block
/// for palindromy.
pub fn block_palindrome_check(m: u64, base: u64, block_len: u32) -> Result<BlockCheck> {
    check_base(base)?;
    if block_len == 0 {
        return Err(Error::InvalidArgument("block length must be positive".into()));
    }
    let wide_base = base
        .checked_pow(block_len)
        .ok_or(Error::Overflow("b^n exceeds 64 bits"))?;
    let wide = to_digits(m, wide_base)?;
    if !wide.is_antipalindrome() {
        return Err(Error::NotAntipalindromic { value: m, base: wide_base });
    }
    let required = base.pow(block_len - 1);
    if wide.leading_digit() < required {
        return Err(Error::TopDigitTooSmall { top: wide.leading_digit(), required });
    }
    let blocks: Vec<Vec<u64>> = wide
        .digits()
        .iter()
        .map(|&u| {
            let mut block = vec![0u64; block_len as usize];
            let mut rest = u;
            for slot in block.iter_mut().rev() {
                *slot = rest % base;
                rest /= base;
            }
            block
        })
        .collect();
    let holds = blocks.iter().all(|b| b.iter().eq(b.iter().rev()));
    Ok(BlockCheck { value: m, base, block_len, wide, blocks, holds })
}

/// Stream of values below `limit` antipalindromic in both bases.
///
/// Candidates are constructed in the larger (sparser) base and filtered by
/// the smaller one.
pub fn common_antipalindromes(b1: u64, b2: u64, limit: u64) -> Result<impl Iterator<Item = u64>> {
    check_base(b1)?;
    check_base(b2)?;
    if b1 == b2 {
        return Err(Error::InvalidArgument(format!("bases must differ, got {b1} twice")));
    }
    let (sparse, dense) = if b1 > b2 { (b1, b2) } else { (b2, b1) };
    let candidates = if limit <= 1 {
        Antipalindromes::between(sparse, 2, 1)?
    } else {
        Antipalindromes::between(sparse, 1, limit - 1)?
    };
    Ok(candidates.filter(move |&m| antipalindromic_unchecked(m, dense)))
}

/// Like [`common_antipalindromes`] but restricted to candidates in
/// `[lo, last]`, for partitioned scans.
pub fn common_antipalindromes_between(
    b1: u64,
    b2: u64,
    lo: u64,
    last: u64,
) -> Result<impl Iterator<Item = u64>> {
    check_base(b1)?;
    check_base(b2)?;
    if b1 == b2 {
        return Err(Error::InvalidArgument(format!("bases must differ, got {b1} twice")));
    }
    let (sparse, dense) = if b1 > b2 { (b1, b2) } else { (b2, b1) };
    Ok(Antipalindromes::between(sparse, lo, last)?.filter(move |&m| antipalindromic_unchecked(m, dense)))
}

/// Convenience re-check of a report against the digit predicates.
pub fn report_is_consistent(report: &MultibaseReport) -> bool {
    report.entries.windows(2).all(|w| w[0].base() < w[1].base())
        && report.entries.iter().all(|d| {
            d.value().ok() == Some(report.value)
                && is_antipalindromic_number(report.value, d.base()).unwrap_or(false)
        })
}
