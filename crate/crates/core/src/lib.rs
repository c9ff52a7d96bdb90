//! Exact Coxeter invariants of Nakayama algebras, the reference algebras of
//! weighted projective lines with three weights, and tilting checks in the
//! stable category of vector bundles.
//!
//! All arithmetic is exact. Linear algebra is generic over [`Scalar`]; the
//! public entry points work with [`IntMatrix`] and [`IntPolynomial`].

pub mod classify;
pub mod coxeter;
pub mod error;
pub mod homcalc;
pub mod lgroup;
pub mod matrix;
pub mod nakayama;
pub mod poly;
pub mod reftypes;
pub mod scalar;
pub mod zvect;

pub use error::{Error, Result};
pub use lgroup::{LElement, WeightTriple};
pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::Scalar;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = Matrix<num_bigint::BigInt>;
/// Arbitrary-precision integer polynomial.
pub type IntPolynomial = Poly<num_bigint::BigInt>;
