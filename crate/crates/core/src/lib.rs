//! Exact computation with antipalindromic numbers.
//!
//! A positive integer is antipalindromic in base `b` when its digits satisfy
//! `a_j + a_(n-j) = b - 1` at every position. This crate provides the digit
//! predicates, direct construction of antipalindromes, and searches for
//! antipalindromic primes, powers, multi-base numbers and sums.
//!
//! ```
//! use antipal::{digits, enumerate, primes, SearchRange};
//!
//! assert!(digits::is_antipalindromic_number(3276, 10).unwrap());
//!
//! let first: Vec<u64> = enumerate::antipalindromes_in_range(3, SearchRange::below(30))
//!     .unwrap()
//!     .collect();
//! assert_eq!(first, [1, 4, 6, 13, 21]);
//!
//! let p: Vec<u64> = primes::antipalindromic_primes_base3(SearchRange::below(100))
//!     .map(|r| r.value)
//!     .collect();
//! assert_eq!(p, [13, 97]);
//! ```

pub mod digits;
pub mod enumerate;
pub mod error;
pub mod multibase;
pub mod powers;
pub mod primes;
pub mod sums;
pub mod theorems;

pub use digits::{DigitString, SearchRange};
pub use error::{Error, Result};
pub use multibase::MultibaseReport;
pub use powers::PowerHit;
pub use primes::PrimeRecord;
pub use sums::Decomposition;
