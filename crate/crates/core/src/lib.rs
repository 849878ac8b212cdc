//! Exact computations for the cohomology of Frobenius kernels of unipotent and
//! parabolic group schemes and of small quantum groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`root_system`] and [`weyl`] hold the Lie-theoretic combinatorics,
//! * [`alcove`] has alcove predicates, weak linkage and the admissibility gates,
//! * [`character`] and [`kostant`] produce formal and graded characters,
//! * [`ring`] models the explicit cohomology rings (classical and quantum),
//! * [`koszul`] and [`restricted`] are brute-force homological oracles over
//!   finite fields,
//! * [`verify`] runs exhaustive weight searches and cross-checks.
//!
//! Everything is exact: integers, rationals, residues mod p, and formal powers
//! of a root of unity.

pub mod alcove;
pub mod character;
pub mod cyclo;
pub mod error;
pub mod kostant;
pub mod koszul;
pub mod linalg;
pub mod restricted;
pub mod ring;
pub mod root_system;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{CartanType, Family, Root, RootSystem, SimpleSet, Weight};
pub use weyl::{CosetSystem, WeylElement, WeylGroup};

/// Version string embedded in certificates.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub(crate) fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
