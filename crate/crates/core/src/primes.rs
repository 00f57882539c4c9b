//! Primality and antipalindromic primes.
//!
//! Outside base 3 an antipalindromic prime is forced: `2` in base 2 and the
//! single digit `(b - 1) / 2` in odd bases above 3. Base-3 antipalindromic
//! primes have an odd digit count of at least 3 and a leading digit of 1, so
//! the search only constructs those shapes and then tests primality.

use serde::{Deserialize, Serialize};

use crate::digits::{check_base, digit_count, is_antipalindromic_number, to_digits, DigitString, SearchRange};
use crate::enumerate::Shape;
use crate::error::Result;

/// Miller-Rabin witnesses. Testing against the first twelve primes is exact
/// for every n < 3.3 * 10^24, which covers all of `u64`.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for the whole `u64` domain.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A base-3 antipalindromic prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub value: u64,
    pub base3_digits: DigitString,
}

/// Ascending base-3 antipalindromic primes in a range.
pub struct Base3Primes {
    range: SearchRange,
    max_len: u32,
    len: u32,
    prefix: u64,
    prefix_end: u64,
    shape: Option<Shape>,
}

impl Base3Primes {
    fn new(range: SearchRange) -> Self {
        let max_len = if range.is_empty() {
            0
        } else {
            digit_count(range.hi() - 1, 3).unwrap_or(0)
        };
        let mut it = Base3Primes {
            range,
            max_len,
            len: 1,
            prefix: 0,
            prefix_end: 0,
            shape: None,
        };
        it.open_next_shape();
        it
    }

    /// Moves to the next odd length, restricted to prefixes starting with 1
    /// (`[3^(h-1), 2 * 3^(h-1))`) and at or above `range.lo`.
    fn open_next_shape(&mut self) {
        self.shape = None;
        while self.len + 2 <= self.max_len {
            self.len += 2;
            let shape = Shape::new(3, self.len).expect("odd length in base 3");
            let (start, _) = shape.prefixes();
            let end = 2 * start;
            if let Some(first) = shape.first_prefix_at_least(self.range.lo()) {
                if first < end {
                    self.shape = Some(shape);
                    self.prefix = first;
                    self.prefix_end = end;
                    return;
                }
            }
        }
    }
}

impl Iterator for Base3Primes {
    type Item = PrimeRecord;

    fn next(&mut self) -> Option<PrimeRecord> {
        loop {
            let shape = self.shape?;
            if self.prefix >= self.prefix_end {
                self.open_next_shape();
                continue;
            }
            let value = shape.value(self.prefix);
            if value >= self.range.hi() as u128 {
                self.shape = None;
                return None;
            }
            self.prefix += 1;
            let value = value as u64;
            if is_prime(value) {
                let base3_digits = to_digits(value, 3).expect("positive value");
                return Some(PrimeRecord { value, base3_digits });
            }
        }
    }
}

/// All primes in `range` whose base-3 expansion is antipalindromic.
pub fn antipalindromic_primes_base3(range: SearchRange) -> Base3Primes {
    Base3Primes::new(range)
}

/// Antipalindromic primes in an arbitrary base.
pub fn antipalindromic_primes_general(base: u64, range: SearchRange) -> Result<Vec<u64>> {
    check_base(base)?;
    let hits = match base {
        2 => vec![2],
        3 => return Ok(antipalindromic_primes_base3(range).map(|r| r.value).collect()),
        b if b % 2 == 1 => {
            let p = (b - 1) / 2;
            if is_prime(p) && is_antipalindromic_number(p, b)? {
                vec![p]
            } else {
                vec![]
            }
        }
        _ => vec![],
    };
    Ok(hits.into_iter().filter(|&p| range.contains(p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::is_antipalindromic_number;
    use crate::enumerate::antipalindromes_in_range;

    fn sieve(limit: usize) -> Vec<bool> {
        let mut flags = vec![true; limit];
        flags[0] = false;
        if limit > 1 {
            flags[1] = false;
        }
        let mut i = 2;
        while i * i < limit {
            if flags[i] {
                for j in (i * i..limit).step_by(i) {
                    flags[j] = false;
                }
            }
            i += 1;
        }
        flags
    }

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn agrees_with_sieve_below_a_million() {
        let flags = sieve(1_000_000);
        for (n, &p) in flags.iter().enumerate() {
            assert_eq!(is_prime(n as u64), p, "{n}");
        }
    }

    #[test]
    fn known_values() {
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(is_prime(12241));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(u64::MAX));
        // strong pseudoprimes to the witness prefixes {2,3,5,7} and {2..=23}
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(3_825_123_056_546_413_051));
    }

    #[test]
    fn trial_division_spot_checks_large() {
        for n in (1_000_000_000_000u64..1_000_000_010_000).step_by(7) {
            assert_eq!(is_prime(n), trial_division(n), "{n}");
        }
    }

    #[test]
    fn first_ten_base3_primes() {
        let got: Vec<(u64, String)> = antipalindromic_primes_base3(SearchRange::below(13_000))
            .map(|r| (r.value, r.base3_digits.render()))
            .collect();
        let expected = [
            (13, "111"),
            (97, "10121"),
            (853, "1011121"),
            (1021, "1101211"),
            (1093, "1111111"),
            (7873, "101210121"),
            (8161, "102012021"),
            (8377, "102111021"),
            (9337, "110210211"),
            (12241, "121210101"),
        ];
        let expected: Vec<(u64, String)> = expected.iter().map(|&(v, s)| (v, s.to_string())).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn range_edges() {
        assert_eq!(antipalindromic_primes_base3(SearchRange::below(13)).count(), 0);
        let hit: Vec<PrimeRecord> = antipalindromic_primes_base3(SearchRange::new(90, 100).unwrap()).collect();
        assert_eq!(hit.len(), 1);
        assert_eq!(hit[0].value, 97);
        assert_eq!(hit[0].base3_digits.digits(), &[1, 0, 1, 2, 1]);
        let sliced: Vec<u64> = antipalindromic_primes_base3(SearchRange::new(854, 8377).unwrap())
            .map(|r| r.value)
            .collect();
        assert_eq!(sliced, vec![1021, 1093, 7873, 8161]);
    }

    #[test]
    fn exhaustive_against_brute_force() {
        let brute: Vec<u64> = (1..100_000u64)
            .filter(|&m| is_prime(m) && is_antipalindromic_number(m, 3).unwrap())
            .collect();
        let fast: Vec<u64> = antipalindromic_primes_base3(SearchRange::below(100_000))
            .map(|r| r.value)
            .collect();
        assert_eq!(fast, brute);
    }

    #[test]
    fn record_invariants_hold() {
        for r in antipalindromic_primes_base3(SearchRange::below(50_000_000)) {
            assert_eq!(r.value % 6, 1);
            assert!(r.base3_digits.len() % 2 == 1 && r.base3_digits.len() >= 3);
            assert_eq!(r.base3_digits.leading_digit(), 1);
            assert!(r.base3_digits.is_antipalindrome());
        }
    }

    #[test]
    fn other_bases() {
        assert_eq!(antipalindromic_primes_general(2, SearchRange::below(100)).unwrap(), vec![2]);
        assert_eq!(antipalindromic_primes_general(11, SearchRange::below(100)).unwrap(), vec![5]);
        assert!(antipalindromic_primes_general(10, SearchRange::below(1_000_000)).unwrap().is_empty());
        assert!(antipalindromic_primes_general(9, SearchRange::below(1_000_000)).unwrap().is_empty());
        assert_eq!(antipalindromic_primes_general(2, SearchRange::new(3, 100).unwrap()).unwrap(), Vec::<u64>::new());
        assert_eq!(
            antipalindromic_primes_general(3, SearchRange::below(100)).unwrap(),
            vec![13, 97]
        );
    }

    #[test]
    fn no_other_antipalindromic_primes_in_bases_4_to_50() {
        for base in 4..=50u64 {
            let stray: Vec<u64> = antipalindromes_in_range(base, SearchRange::below(1_000_000))
                .unwrap()
                .filter(|&m| is_prime(m) && 2 * m + 1 != base)
                .collect();
            assert!(stray.is_empty(), "base {base}: {stray:?}");
            let general = antipalindromic_primes_general(base, SearchRange::below(1_000_000)).unwrap();
            let brute: Vec<u64> = (1..1_000_000u64)
                .filter(|&m| is_antipalindromic_number(m, base).unwrap() && is_prime(m))
                .collect();
            assert_eq!(general, brute, "base {base}");
        }
    }
}
