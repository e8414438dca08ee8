//! Exact scalar arithmetic: rationals, simple algebraic number fields,
//! multivariate parameter polynomials and exact/modular linear algebra.
//!
//! Everything downstream is generic over [`Ring`], so the same algebra code
//! runs symbolically (over [`PolyRing`]), over a number field, or modulo a
//! prime.

mod linalg;
mod modpoly;
mod numfield;
mod poly;
mod ring;
mod sparse;

pub use linalg::{
    certified_rank, det, det_poly, identity, kernel, mat_add, mat_mul, mat_scale, mat_sub, rank, rank_exact,
    rank_mod_p, solve, transpose, Matrix, RankCert,
};
pub use modpoly::{is_prime, poly_roots, prime_one_mod};
pub use numfield::{NumberField, NumberFieldElem};
pub use poly::{ParamPoly, PolyRing, Vars};
pub use ring::{Field, ModP, Rationals, Ring};
pub use sparse::{SparseVec, SparseVecExt};

use num_bigint::BigInt;
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("polynomials use different variable lists")]
    VarMismatch,
    #[error("no value supplied for variable `{0}`")]
    MissingVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("denominator divisible by {0}")]
    BadPrime(u64),
    #[error("polynomial division is not exact")]
    NotExact,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("modular ranks disagree for every prime pair tried")]
    NoPrimeAgreement,
}
