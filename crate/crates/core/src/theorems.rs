//! Executable checks of the structural facts about antipalindromes.
//!
//! Each suite scans a bounded domain and reports every counterexample it
//! finds. A passing suite has no violations.

use serde::Serialize;

use crate::digits::{
    antipalindromic_unchecked, from_digits, guaranteed_divisor, is_antipalindromic_number,
    is_palindromic_number, to_digits, to_digits_wide, DigitString, SearchRange,
};
use crate::enumerate::Antipalindromes;
use crate::multibase::{
    antipalindromic_bases, block_palindrome_check, composite_two_bases, factorial_construction,
    gcd_construction, paired_base_construction,
};
use crate::powers::{construct_odd_power, construct_power_family, odd_power_bound};
use crate::primes::{antipalindromic_primes_base3, is_prime};

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub limit: u64,
    pub checked: u64,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str, limit: u64) -> Self {
        SuiteReport { name, limit, checked: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.violations.len() < 100 {
            self.violations.push(what());
        }
    }
}

/// A named suite with the scan bound it uses when none is given.
pub struct Suite {
    pub name: &'static str,
    pub default_limit: u64,
    pub run: fn(u64) -> SuiteReport,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "round-trip", default_limit: 1_000_000, run: round_trip },
    Suite { name: "digit-sum", default_limit: 100_000, run: digit_sum },
    Suite { name: "divisibility", default_limit: 1_000_000, run: divisibility },
    Suite { name: "odd-length", default_limit: 1_000_000, run: odd_length },
    Suite { name: "pal-antipal", default_limit: 4, run: pal_antipal },
    Suite { name: "base3-primes", default_limit: 100_000_000, run: base3_primes },
    Suite { name: "prime-uniqueness", default_limit: 1_000_000, run: prime_uniqueness },
    Suite { name: "power-families", default_limit: 9, run: power_families },
    Suite { name: "multibase", default_limit: 10_000, run: multibase },
    Suite { name: "block", default_limit: 1_000_000, run: block },
];

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// `from_digits(to_digits(m, b)) == m` for `m <= limit`, `b` in 2..=16.
pub fn round_trip(limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("round-trip", limit);
    for b in 2..=16 {
        for m in 1..=limit {
            let back = to_digits(m, b).and_then(|d| from_digits(&d));
            r.expect(back == Ok(m), || format!("{m} in base {b} came back as {back:?}"));
        }
    }
    r
}

/// `(b-1) | m` iff `(b-1)` divides the digit sum, `b` in 3..=12.
pub fn digit_sum(limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("digit-sum", limit);
    for b in 3..=12u64 {
        for m in 1..=limit {
            let sum = to_digits(m, b).map(|d| d.digit_sum()).unwrap_or(0);
            let lhs = m % (b - 1) == 0;
            let rhs = sum.is_multiple_of((b - 1) as u128);
            r.expect(lhs == rhs, || format!("{m} in base {b}: digit sum {sum}"));
        }
    }
    r
}

fn antipalindromes_below(b: u64, limit: u64) -> impl Iterator<Item = DigitString> {
    Antipalindromes::between(b, 1, limit.saturating_sub(1))
        .expect("valid base")
        .map(move |m| to_digits(m, b).expect("positive"))
}

/// Every antipalindrome below `limit` in bases 2..=12 is divisible by its
/// guaranteed divisor.
pub fn divisibility(limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("divisibility", limit);
    for b in 2..=12 {
        for d in antipalindromes_below(b, limit) {
            let m = d.value().expect("fits");
            let div = guaranteed_divisor(b, d.len() as u32);
            r.expect(matches!(div, Ok(v) if m % v == 0), || {
                format!("{m} in base {b} ({d}) vs divisor {div:?}")
            });
        }
    }
    r
}

/// Odd-length antipalindromes only occur in odd bases, with middle digit
/// `(b-1)/2`.
pub fn odd_length(limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("odd-length", limit);
    for b in 2..=12u64 {
        for d in antipalindromes_below(b, limit) {
            if d.len() % 2 == 1 {
                let mid = d.digits()[d.len() / 2];
                r.expect(b % 2 == 1 && 2 * mid == b - 1, || format!("{d} in base {b}"));
            }
        }
    }
    r
}

/// Both palindromic and antipalindromic iff every digit is `(b-1)/2`, over
/// every digit string up to `max_len` digits in bases 3, 5, 7, 9.
pub fn pal_antipal(max_len: u64) -> SuiteReport {
    let mut r = SuiteReport::new("pal-antipal", max_len);
    for b in [3u64, 5, 7, 9] {
        for len in 1..=max_len as u32 {
            let lo = b.pow(len - 1);
            for m in lo..lo * b {
                let both = is_palindromic_number(m, b).unwrap_or(false)
                    && is_antipalindromic_number(m, b).unwrap_or(false);
                let digits = to_digits(m, b).expect("positive");
                let all_middle = digits.digits().iter().all(|&x| 2 * x == b - 1);
                r.expect(both == all_middle, || format!("{digits} in base {b}"));
            }
        }
    }
    r
}

/// Base-3 antipalindromic primes below `limit` are `6k+1`, have an odd digit
/// count of at least 3 and start with 1.
pub fn base3_primes(limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("base3-primes", limit);
    for rec in antipalindromic_primes_base3(SearchRange::below(limit)) {
        let d = &rec.base3_digits;
        r.expect(
            rec.value % 6 == 1 && d.len() % 2 == 1 && d.len() >= 3 && d.leading_digit() == 1,
            || format!("{} = ({d})_3", rec.value),
        );
    }
    r
}

/// In bases 2 and 4..=50 the only antipalindromic primes below `limit` are
/// 2 (base 2) and `(b-1)/2`.
pub fn prime_uniqueness(limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("prime-uniqueness", limit);
    for b in (2..=50u64).filter(|&b| b != 3) {
        for m in Antipalindromes::between(b, 1, limit.saturating_sub(1)).expect("valid base") {
            if is_prime(m) {
                let allowed = (b == 2 && m == 2) || 2 * m + 1 == b;
                r.expect(allowed, || format!("prime {m} is antipalindromic in base {b}"));
            }
        }
    }
    r
}

/// The two power constructions over `n` in 2..=max_n (`k` in 2..=4) and the
/// odd-power grid.
pub fn power_families(max_n: u64) -> SuiteReport {
    let mut r = SuiteReport::new("power-families", max_n);
    for n in 2..=max_n {
        for k in 2..=4u32 {
            for m in 2..=n {
                let hit = construct_power_family(n, k, m);
                r.expect(
                    matches!(&hit, Ok(h) if antipalindromic_unchecked(h.value as u64, h.base)),
                    || format!("({m}*{n})^{k}: {hit:?}"),
                );
            }
        }
    }
    for m in [2u64, 3] {
        for k in [3u32, 5] {
            let bound = odd_power_bound(m, k).expect("small bound");
            for b in [bound, bound + 1, bound + 17] {
                let hit = construct_odd_power(m, k, b);
                r.expect(
                    matches!(&hit, Ok(h) if h.digits.is_antipalindrome()
                        && h.digits.value_wide() == Ok(h.value)
                        && to_digits_wide(h.value, b).as_ref() == Ok(&h.digits)),
                    || format!("[{m}({b}-1)]^{k}: {hit:?}"),
                );
            }
        }
    }
    r
}

/// Multi-base constructions: composites up to `limit`, gcd pairs up to 50,
/// paired bases 2..=100, factorials up to 20! and the `2m+1` base.
pub fn multibase(limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("multibase", limit);
    for a in 4..=limit {
        if is_prime(a) {
            continue;
        }
        let bases = antipalindromic_bases(a).map(|rep| rep.bases());
        let two = composite_two_bases(a);
        r.expect(
            match (&two, &bases) {
                (Ok(t), Ok(all)) => all.contains(&t.first.base()) && all.contains(&t.second.base()),
                _ => false,
            },
            || format!("composite {a}: {two:?}"),
        );
    }
    for m in 1..=limit {
        let bases = antipalindromic_bases(m).map(|rep| rep.bases());
        r.expect(matches!(&bases, Ok(b) if b.contains(&(2 * m + 1))), || {
            format!("{m} missing base {}", 2 * m + 1)
        });
    }
    for p in 1..=50u64 {
        for q in 1..=50u64 {
            let d = gcd(p, q);
            let (pr, qr) = (p / d, q / d);
            if p >= qr && qr > 1 && q >= pr && pr > 1 {
                let g = gcd_construction(p, q);
                r.expect(
                    matches!(&g, Ok(g) if antipalindromic_unchecked(g.value, p + 1)
                        && antipalindromic_unchecked(g.value, q + 1)),
                    || format!("gcd ({p}, {q}): {g:?}"),
                );
            }
        }
    }
    for b in 2..=100u64 {
        let pb = paired_base_construction(b);
        r.expect(
            matches!(&pb, Ok(x) if x.second.base() < x.value
                && antipalindromic_unchecked(x.value, x.first.base())
                && antipalindromic_unchecked(x.value, x.second.base())),
            || format!("paired base {b}: {pb:?}"),
        );
    }
    for n in 1..=10u64 {
        let rep = factorial_construction(n);
        r.expect(
            matches!(&rep, Ok(rep) if rep.entries.len() as u64 == n + 1
                && rep.entries.iter().all(|d| antipalindromic_unchecked(rep.value, d.base()))),
            || format!("factorial n={n}: {rep:?}"),
        );
    }
    r
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Block theorem for `b = 3`, width 2: every base-9 antipalindrome below
/// `limit` with top digit at least 3.
pub fn block(limit: u64) -> SuiteReport {
    let mut r = SuiteReport::new("block", limit);
    for m in Antipalindromes::between(9, 1, limit.saturating_sub(1)).expect("valid base") {
        let top = to_digits(m, 9).expect("positive").leading_digit();
        if top < 3 {
            continue;
        }
        let check = block_palindrome_check(m, 3, 2);
        let direct = antipalindromic_unchecked(m, 3);
        r.expect(matches!(&check, Ok(c) if c.holds == direct), || {
            format!("{m}: blocks {check:?}, base-3 antipalindromic {direct}")
        });
    }
    r
}
