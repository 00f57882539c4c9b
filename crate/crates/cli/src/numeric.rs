//! Exact integer parsing for command-line flags.
//!
//! Accepts plain decimals (`13000`, `1_000_000`) and scientific shorthand
//! (`1e12`, `5e6`, `2.5e3`) as long as the value is a whole number that fits
//! in 64 bits.

use std::ops::RangeInclusive;

pub fn parse_u64(s: &str) -> Result<u64, String> {
    let cleaned: String = s.trim().chars().filter(|&c| c != '_').collect();
    if cleaned.is_empty() {
        return Err("empty number".into());
    }
    let (mantissa, exponent) = match cleaned.find(['e', 'E']) {
        Some(i) => (&cleaned[..i], parse_exponent(&cleaned[i + 1..])?),
        None => (cleaned.as_str(), 0),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(format!("`{s}` has no digits"));
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("`{s}` is not a non-negative integer"));
    }
    let frac = frac.trim_end_matches('0');
    let shift = exponent
        .checked_sub(frac.len() as u32)
        .ok_or_else(|| format!("`{s}` is not a whole number"))?;
    let digits = format!("{whole}{frac}");
    let mut value: u64 = 0;
    for c in digits.chars() {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(c as u64 - '0' as u64))
            .ok_or_else(|| format!("`{s}` exceeds 64 bits"))?;
    }
    if value == 0 {
        return Ok(0);
    }
    10u64
        .checked_pow(shift)
        .and_then(|p| value.checked_mul(p))
        .ok_or_else(|| format!("`{s}` exceeds 64 bits"))
}

fn parse_exponent(s: &str) -> Result<u32, String> {
    let s = s.strip_prefix('+').unwrap_or(s);
    s.parse::<u32>().map_err(|_| format!("bad exponent `{s}`"))
}

pub fn parse_u32(s: &str) -> Result<u32, String> {
    let v = parse_u64(s)?;
    u32::try_from(v).map_err(|_| format!("`{s}` exceeds 32 bits"))
}

/// `a..b` or `a..=b`, both inclusive, or a single value.
pub fn parse_inclusive(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse_u64(lo)?, parse_u64(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = parse_u64(s)?;
            (v, v)
        }
    };
    if hi < lo {
        return Err(format!("range `{s}` is empty"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_and_scientific() {
        assert_eq!(parse_u64("13000"), Ok(13000));
        assert_eq!(parse_u64("1_000_000"), Ok(1_000_000));
        assert_eq!(parse_u64("1e12"), Ok(1_000_000_000_000));
        assert_eq!(parse_u64("5E6"), Ok(5_000_000));
        assert_eq!(parse_u64("2.5e3"), Ok(2500));
        assert_eq!(parse_u64("1.50e2"), Ok(150));
        assert_eq!(parse_u64("0"), Ok(0));
        assert_eq!(parse_u64("1e19"), Ok(10_000_000_000_000_000_000));
        assert_eq!(parse_u64("18446744073709551615"), Ok(u64::MAX));
    }

    #[test]
    fn rejects_non_integers() {
        for bad in ["", "abc", "-3", "1.5", "1e20", "2.55e1", "1e", "e5", "18446744073709551616", "."] {
            assert!(parse_u64(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_inclusive("20..25"), Ok(20..=25));
        assert_eq!(parse_inclusive("4..=12"), Ok(4..=12));
        assert_eq!(parse_inclusive("7"), Ok(7..=7));
        assert!(parse_inclusive("5..4").is_err());
    }
}
