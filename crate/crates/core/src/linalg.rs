//! Small dense complex matrices and vectors.
//!
//! Fixed-size value types cover everything the operator algebra needs:
//! 4×4 tensors, 8×8 direct sums and complex 4-vectors. A cyclic-Jacobi
//! eigensolver for Hermitian matrices serves as the spectrum oracle.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;

use crate::scalar::{cr, Scalar};

/// Dense N×N complex matrix stored by rows. Equality is only ever
/// checked through `approx_eq` with an explicit tolerance.
#[derive(Clone, Copy, Debug)]
pub struct CMatrix<T, const N: usize> {
    entries: [[Complex<T>; N]; N],
}

/// Complex N-vector.
#[derive(Clone, Copy, Debug)]
pub struct CVector<T, const N: usize> {
    entries: [Complex<T>; N],
}

impl<T: Scalar, const N: usize> Default for CMatrix<T, N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar, const N: usize> CMatrix<T, N> {
    pub fn zero() -> Self {
        Self {
            entries: [[Complex::new(T::zero(), T::zero()); N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for d in 0..N {
            m.entries[d][d] = cr(T::one());
        }
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zero();
        for r in 0..N {
            for c in 0..N {
                m.entries[r][c] = f(r, c);
            }
        }
        m
    }

    pub fn scaled(&self, s: Complex<T>) -> Self {
        Self::from_fn(|r, c| self.entries[r][c] * s)
    }

    /// Complex-conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].conj())
    }

    pub fn conjugated(&self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c].conj())
    }

    pub fn transposed(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r])
    }

    pub fn trace(&self) -> Complex<T> {
        let mut t = Complex::new(T::zero(), T::zero());
        for d in 0..N {
            t = t + self.entries[d][d];
        }
        t
    }

    /// Largest entry modulus; the norm used for tolerance comparisons.
    pub fn max_abs(&self) -> T {
        let mut m = T::zero();
        for row in &self.entries {
            for e in row {
                m = m.max(e.norm());
            }
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| e.re.is_finite() && e.im.is_finite())
    }

    /// Entrywise comparison with an explicit absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (*self - *other).max_abs() <= tol
    }

    pub fn mul_vec(&self, v: &CVector<T, N>) -> CVector<T, N> {
        let mut out = CVector::zero();
        for r in 0..N {
            let mut acc = Complex::new(T::zero(), T::zero());
            for c in 0..N {
                acc = acc + self.entries[r][c] * v.entries[c];
            }
            out.entries[r] = acc;
        }
        out
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = *self;
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl<T: Scalar, const N: usize> Add for CMatrix<T, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c] + rhs.entries[r][c])
    }
}

impl<T: Scalar, const N: usize> Sub for CMatrix<T, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c] - rhs.entries[r][c])
    }
}

impl<T: Scalar, const N: usize> Neg for CMatrix<T, N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|r, c| -self.entries[r][c])
    }
}

impl<T: Scalar, const N: usize> Mul for CMatrix<T, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for r in 0..N {
            for k in 0..N {
                let a = self.entries[r][k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for c in 0..N {
                    out.entries[r][c] = out.entries[r][c] + a * rhs.entries[k][c];
                }
            }
        }
        out
    }
}

impl<T, const N: usize> Index<(usize, usize)> for CMatrix<T, N> {
    type Output = Complex<T>;
    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        &self.entries[r][c]
    }
}

impl<T, const N: usize> IndexMut<(usize, usize)> for CMatrix<T, N> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[r][c]
    }
}

impl<T: Scalar, const N: usize> Default for CVector<T, N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar, const N: usize> CVector<T, N> {
    pub fn zero() -> Self {
        Self {
            entries: [Complex::new(T::zero(), T::zero()); N],
        }
    }

    pub fn from_fn(f: impl Fn(usize) -> Complex<T>) -> Self {
        let mut v = Self::zero();
        for k in 0..N {
            v.entries[k] = f(k);
        }
        v
    }

    pub fn conjugated(&self) -> Self {
        Self::from_fn(|k| self.entries[k].conj())
    }

    pub fn scaled(&self, s: Complex<T>) -> Self {
        Self::from_fn(|k| self.entries[k] * s)
    }

    /// Plain bilinear dot product, no conjugation.
    pub fn dot(&self, other: &Self) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for k in 0..N {
            acc = acc + self.entries[k] * other.entries[k];
        }
        acc
    }

    /// Conjugate-linear in `self`: sum of conj(self_k) * other_k.
    pub fn dot_conj(&self, other: &Self) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for k in 0..N {
            acc = acc + self.entries[k].conj() * other.entries[k];
        }
        acc
    }

    pub fn norm(&self) -> T {
        self.dot_conj(self).re.sqrt()
    }

    pub fn max_abs(&self) -> T {
        let mut m = T::zero();
        for e in &self.entries {
            m = m.max(e.norm());
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.re.is_finite() && e.im.is_finite())
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (*self - *other).max_abs() <= tol
    }

    /// Outer product self_r * conj(other_c).
    pub fn outer_conj(&self, other: &Self) -> CMatrix<T, N> {
        CMatrix::from_fn(|r, c| self.entries[r] * other.entries[c].conj())
    }
}

impl<T: Scalar, const N: usize> Add for CVector<T, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|k| self.entries[k] + rhs.entries[k])
    }
}

impl<T: Scalar, const N: usize> Sub for CVector<T, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|k| self.entries[k] - rhs.entries[k])
    }
}

impl<T: Scalar, const N: usize> Neg for CVector<T, N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|k| -self.entries[k])
    }
}

impl<T, const N: usize> Index<usize> for CVector<T, N> {
    type Output = Complex<T>;
    fn index(&self, k: usize) -> &Complex<T> {
        &self.entries[k]
    }
}

impl<T, const N: usize> IndexMut<usize> for CVector<T, N> {
    fn index_mut(&mut self, k: usize) -> &mut Complex<T> {
        &mut self.entries[k]
    }
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps with complex
/// Givens rotations, returned sorted ascending.
///
/// Quadratically convergent for the small matrices used here; panics are
/// impossible but the result is meaningless for non-Hermitian input.
pub fn hermitian_eigenvalues<T: Scalar, const N: usize>(a: &CMatrix<T, N>) -> [T; N] {
    let mut a = *a;
    let scale = a.max_abs().max(T::one());
    let stop = scale * T::epsilon() * T::from_usize(N * N).unwrap();
    for _sweep in 0..64 {
        let mut off = T::zero();
        for p in 0..N {
            for q in (p + 1)..N {
                off = off.max(a[(p, q)].norm());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[(p, q)];
                let b = apq.norm();
                if b <= stop {
                    continue;
                }
                // Factor out the phase of a_pq, then a real Jacobi rotation.
                let phase = apq / cr(b);
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (b + b);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let cth = T::one() / (T::one() + t * t).sqrt();
                let sth = t * cth;
                // U = diag(phase, 1) * [[c, s], [-s, c]] acting on columns p,q.
                let upp = phase * cr(cth);
                let upq = phase * cr(sth);
                let uqp = cr(-sth);
                let uqq = cr(cth);
                for k in 0..N {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * upp + akq * uqp;
                    a[(k, q)] = akp * upq + akq * uqq;
                }
                for k in 0..N {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = upp.conj() * apk + uqp.conj() * aqk;
                    a[(q, k)] = upq.conj() * apk + uqq.conj() * aqk;
                }
            }
        }
    }
    let mut eig = [T::zero(); N];
    for d in 0..N {
        eig[d] = a[(d, d)].re;
    }
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eig
}
