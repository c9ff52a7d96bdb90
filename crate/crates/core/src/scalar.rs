//! Exact integer scalars.
//!
//! The linear algebra in this crate is written once against [`Scalar`] and
//! instantiated for machine integers (`i64`, `i128`) and for [`BigInt`].
//! Fixed-width instantiations report overflow instead of wrapping, so a
//! caller can run the fast path first and fall back to `BigInt` only when a
//! result does not fit.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};

/// An exact integer type usable as a matrix or polynomial coefficient.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;
    fn to_bigint(&self) -> BigInt;
    /// `None` if the value does not fit.
    fn from_bigint(v: &BigInt) -> Option<Self>;

    fn checked_neg_(&self) -> Option<Self> {
        Self::zero().checked_sub(self)
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

/// Marker error: a fixed-width computation left its range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_add(b).ok_or(Overflow)
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_sub(b).ok_or(Overflow)
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_mul(b).ok_or(Overflow)
}

pub(crate) fn neg<T: Scalar>(a: &T) -> Result<T, Overflow> {
    a.checked_neg_().ok_or(Overflow)
}

/// Runs `fast` on `i128` and retries with `BigInt` on overflow.
pub(crate) fn with_fallback<R>(
    fast: impl FnOnce() -> Result<R, Overflow>,
    exact: impl FnOnce() -> Result<R, Overflow>,
) -> R {
    match fast() {
        Ok(r) => r,
        Err(Overflow) => exact().expect("BigInt arithmetic cannot overflow"),
    }
}
