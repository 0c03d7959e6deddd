//! Exact rationals for starting sets.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

pub use num_rational::BigRational as ExactRational;

pub fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

pub fn ratio(numer: i64, denom: i64) -> ExactRational {
    ExactRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn one() -> ExactRational {
    ExactRational::one()
}

/// `Cat_n = C(2n, n) / (n + 1)`, exactly.
pub fn catalan(n: u32) -> BigUint {
    // C(2n, n) built as prod_{k=1}^{n} (n + k) / k; each partial product is
    // itself a binomial coefficient, so every division is exact.
    let mut binom = BigUint::one();
    for k in 1..=n {
        binom = binom * BigUint::from(n + k) / BigUint::from(k);
    }
    binom / BigUint::from(n + 1)
}
