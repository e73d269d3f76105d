//! Scalar abstraction for the numeric core.
//!
//! Everything in this crate is generic over a real floating-point scalar;
//! `f32` works at loose tolerances, `f64` is the supported precision for the
//! verification suites (see the crate-root aliases).

use std::fmt;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar type underlying all complex arithmetic in this crate.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal must convert into the scalar type")
}

/// Complex number from real and imaginary `f64` literals.
#[inline]
pub fn c<T: Scalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(lit(re), lit(im))
}

/// Purely real complex number.
#[inline]
pub fn cr<T: Scalar>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// The imaginary unit.
#[inline]
pub fn i_unit<T: Scalar>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}
