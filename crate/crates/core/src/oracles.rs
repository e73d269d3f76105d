//! Independent numerical oracles used by the verification suites and tests.
//!
//! Nothing here is on any production code path of the constructions it
//! checks; the routines share no arithmetic with the closed forms.

use num_complex::Complex;

use crate::linalg::CMatrix;
use crate::scalar::{cr, lit, Scalar};

/// Matrix exponential by scaling-and-squaring of the Taylor series,
/// truncated when the term norm falls below 1e-16.
pub fn expm_series<T: Scalar, const N: usize>(a: &CMatrix<T, N>) -> CMatrix<T, N> {
    let norm = a.max_abs();
    let mut squarings = 0u32;
    let mut scale = T::one();
    if norm > T::one() {
        // 2^s >= norm
        squarings = norm.log2().ceil().to_u32().unwrap_or(0) + 1;
        scale = lit::<T>(0.5).powi(squarings as i32);
    }
    let b = a.scaled(cr(scale));
    let mut sum = CMatrix::identity();
    let mut term: CMatrix<T, N> = CMatrix::identity();
    let cutoff = lit::<T>(1e-16);
    for k in 1..200 {
        term = term * b;
        term = term.scaled(Complex::new(
            T::one() / T::from_usize(k).unwrap(),
            T::zero(),
        ));
        sum = sum + term;
        if term.max_abs() < cutoff {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}
