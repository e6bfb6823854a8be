//! Exact scalars, univariate polynomials and homogeneous factors.

mod factor;
mod field;
mod homog;
mod poly;

use thiserror::Error;

pub use factor::{divisor_of_degree, factor_gfp, factor_rational, Factorization};
pub use field::{Field, Gfp, Rationals};
pub use homog::{hlcm_deg, HomogFactor};
pub use poly::{poly_gcd, poly_lcm, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("lower bound does not divide upper bound")]
    NotDivisible,
    #[error("degree {w} outside [{lo}, {hi}]")]
    DegreeOutOfRange { w: usize, lo: usize, hi: usize },
    #[error("no divisor of degree {needed} exists over this field (quotient {quotient} does not split far enough)")]
    FieldObstruction { needed: usize, quotient: String },
}
