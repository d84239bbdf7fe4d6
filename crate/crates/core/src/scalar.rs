//! Scalar abstraction shared by the numeric kernels.
//!
//! Everything that only needs field arithmetic (Schur evaluation, power sums
//! with integer exponents, the Wright chi-square series, exact Schur-Weyl
//! tables) is generic over [`Scalar`], which covers `f32`, `f64` and exact
//! big rationals. Code that needs logarithms or real exponents asks for
//! [`Real`] instead.

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_biguint(value: &BigUint) -> Self;

    fn from_bigint(value: &BigInt) -> Self;

    /// Slack allowed when checking that a probability vector sums to one.
    fn unit_sum_tolerance() -> Self;

    fn to_f64_lossy(&self) -> f64;

    fn from_usize_exact(value: usize) -> Self {
        Self::from_usize(value).expect("usize is representable")
    }

    /// Integer power by repeated squaring; `0^0 = 1`.
    fn powi_exact(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for f64 {
    fn from_biguint(value: &BigUint) -> Self {
        value.to_f64().unwrap_or(f64::INFINITY)
    }

    fn from_bigint(value: &BigInt) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }

    fn unit_sum_tolerance() -> Self {
        1e-12
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }

    fn powi_exact(&self, exp: u32) -> Self {
        match i32::try_from(exp) {
            Ok(e) => self.powi(e),
            Err(_) => self.powf(f64::from(exp)),
        }
    }
}

impl Scalar for f32 {
    fn from_biguint(value: &BigUint) -> Self {
        value.to_f32().unwrap_or(f32::INFINITY)
    }

    fn from_bigint(value: &BigInt) -> Self {
        value.to_f32().unwrap_or(f32::NAN)
    }

    fn unit_sum_tolerance() -> Self {
        1e-5
    }

    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }

    fn powi_exact(&self, exp: u32) -> Self {
        match i32::try_from(exp) {
            Ok(e) => self.powi(e),
            Err(_) => self.powf(exp as f32),
        }
    }
}

impl Scalar for BigRational {
    fn from_biguint(value: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(value.clone()))
    }

    fn from_bigint(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn unit_sum_tolerance() -> Self {
        BigRational::zero()
    }

    fn to_f64_lossy(&self) -> f64 {
        ratio_to_f64(self)
    }
}

/// Converts a big rational to the nearest-ish `f64`, staying finite when
/// numerator and denominator individually overflow.
pub fn ratio_to_f64(value: &BigRational) -> f64 {
    if let Some(v) = value.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let numer = value.numer();
    let denom = value.denom();
    let shift = numer.bits().max(denom.bits()).saturating_sub(1000);
    let n = (numer >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (denom >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Floating-point scalars: everything that needs `ln`, `powf` and friends.
pub trait Real: Scalar + Float {}

impl Real for f64 {}
impl Real for f32 {}

/// Relative comparison with an absolute floor: `|a - b| <= max(rel * max(|a|, |b|), abs)`.
pub fn approx_eq(a: f64, b: f64, rel: f64, abs: f64) -> bool {
    if a == b {
        return true;
    }
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= (rel * scale).max(abs)
}
