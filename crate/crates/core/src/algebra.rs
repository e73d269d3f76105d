//! The chi operator algebra: generators, exponentials, momentum
//! contractions and the 8x8 direct-sum machinery.
//!
//! The four chi operators act on complex 4-component columns in a space
//! where the time direction carries imaginary weight, so the spatial chi
//! form a Euclidean Clifford algebra and all generators are Hermitian.

use num_complex::Complex;

use crate::axis::{epsilon, Axis};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};
use crate::momentum::FourMomentum;
use crate::scalar::{c, cr, i_unit, lit, Scalar};

/// 4x4 complex operator.
pub type Tensor4<T> = CMatrix<T, 4>;
/// Complex 4-component column.
pub type Vector4<T> = CVector<T, 4>;

/// The chi operator with index `mu` in 0..=3; chi(0) is the identity.
pub fn chi<T: Scalar>(mu: usize) -> Result<Tensor4<T>> {
    match mu {
        0 => Ok(Tensor4::identity()),
        1..=3 => Ok(chi_spatial(Axis::from_index(mu)?)),
        _ => Err(Error::IndexOutOfRange {
            what: "chi operator",
            index: mu,
        }),
    }
}

/// Spatial chi operator: the sum of the spin and boost generators.
pub fn chi_spatial<T: Scalar>(axis: Axis) -> Tensor4<T> {
    spin_generator(axis) + boost_generator(axis)
}

/// Spin-one rotation generator about `axis`: spatial entries -i eps_ijk,
/// time row and column zero.
pub fn spin_generator<T: Scalar>(axis: Axis) -> Tensor4<T> {
    let i = axis.index();
    Tensor4::from_fn(|r, col| {
        if r == 0 || col == 0 {
            c(0.0, 0.0)
        } else {
            c(0.0, -(epsilon(i, r, col) as f64))
        }
    })
}

/// Vector boost generator along `axis`: entries i on the time row,
/// -i on the time column, spatial block zero.
pub fn boost_generator<T: Scalar>(axis: Axis) -> Tensor4<T> {
    let i = axis.index();
    let mut m = Tensor4::zero();
    m[(0, i)] = i_unit();
    m[(i, 0)] = -i_unit::<T>();
    m
}

/// Closed form of e^{kappa S_i}: K_i^2 + S_i^2 cosh(kappa) + S_i sinh(kappa).
///
/// This is a bivector boost, not a rotation.
pub fn exp_spin<T: Scalar>(axis: Axis, kappa: T) -> Tensor4<T> {
    let s = spin_generator(axis);
    let k = boost_generator(axis);
    k * k + (s * s).scaled(cr(kappa.cosh())) + s.scaled(cr(kappa.sinh()))
}

/// Closed form of e^{kappa K_i}: S_i^2 + K_i^2 cosh(kappa) + K_i sinh(kappa).
pub fn exp_boost<T: Scalar>(axis: Axis, kappa: T) -> Tensor4<T> {
    let s = spin_generator(axis);
    let k = boost_generator(axis);
    s * s + (k * k).scaled(cr(kappa.cosh())) + k.scaled(cr(kappa.sinh()))
}

/// Rotation operator e^{-i theta S_axis} in Rodrigues form.
///
/// The matrix is real orthogonal; its spatial block rotates vectors
/// counterclockwise about the axis, e.g. rotation about 3 by pi/2 maps
/// the 1-direction onto the 2-direction.
pub fn rotation_operator<T: Scalar>(axis: Axis, theta: T) -> Tensor4<T> {
    let s = spin_generator(axis);
    let minus_i_sin = Complex::new(T::zero(), -theta.sin());
    Tensor4::identity() + s.scaled(minus_i_sin) + (s * s).scaled(cr(theta.cos() - T::one()))
}

/// chi^mu p_mu = -p0 I + sum_j p_j chi_j, the positive-helicity equation
/// operator (index lowering under the (-+++) signature).
pub fn covariant_contraction<T: Scalar>(p: &FourMomentum<T>) -> Tensor4<T> {
    momentum_contraction(p) - Tensor4::identity().scaled(cr(p.energy()))
}

/// +p0 I + sum_j p_j chi_j, the opposite-helicity equation operator.
pub fn contravariant_contraction<T: Scalar>(p: &FourMomentum<T>) -> Tensor4<T> {
    momentum_contraction(p) + Tensor4::identity().scaled(cr(p.energy()))
}

/// The Hamiltonian operator sum_j p_j chi_j.
pub fn momentum_contraction<T: Scalar>(p: &FourMomentum<T>) -> Tensor4<T> {
    let mut acc = Tensor4::zero();
    for axis in Axis::ALL {
        acc = acc + chi_spatial(axis).scaled(cr(p.spatial_component(axis)));
    }
    acc
}

/// Orientation of the axis-relabeling cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleDirection {
    /// 1 -> 2 -> 3 -> 1
    Forward,
    /// 1 <- 2 <- 3 <- 1, the square (= inverse) of the forward cycle.
    Reverse,
}

/// The axis-cycle operator e^{-2 pi i (S1+S2+S3)/(3 sqrt 3)}: a rotation by
/// 2 pi/3 about the (1,1,1) diagonal that advances seeds and vector
/// solutions one axis forward. Its cube is the identity.
pub fn axis_cycle_operator<T: Scalar>(direction: CycleDirection) -> Tensor4<T> {
    let inv_sqrt3 = cr(T::one() / lit::<T>(3.0).sqrt());
    let s_diag = (spin_generator(Axis::X1) + spin_generator(Axis::X2) + spin_generator(Axis::X3))
        .scaled(inv_sqrt3);
    let theta = lit::<T>(2.0) * T::PI() / lit::<T>(3.0);
    let forward = Tensor4::identity()
        + s_diag.scaled(Complex::new(T::zero(), -theta.sin()))
        + (s_diag * s_diag).scaled(cr(theta.cos() - T::one()));
    match direction {
        CycleDirection::Forward => forward,
        CycleDirection::Reverse => forward * forward,
    }
}

/// 8x8 operator on the direct sum of the two helicity sectors.
#[derive(Clone, Copy, Debug)]
pub struct DirectSum<T> {
    matrix: CMatrix<T, 8>,
}

impl<T: Scalar> DirectSum<T> {
    pub fn from_diagonal_blocks(top_left: Tensor4<T>, bottom_right: Tensor4<T>) -> Self {
        let mut m = CMatrix::zero();
        for r in 0..4 {
            for col in 0..4 {
                m[(r, col)] = top_left[(r, col)];
                m[(r + 4, col + 4)] = bottom_right[(r, col)];
            }
        }
        Self { matrix: m }
    }

    pub fn from_antidiagonal_blocks(top_right: Tensor4<T>, bottom_left: Tensor4<T>) -> Self {
        let mut m = CMatrix::zero();
        for r in 0..4 {
            for col in 0..4 {
                m[(r, col + 4)] = top_right[(r, col)];
                m[(r + 4, col)] = bottom_left[(r, col)];
            }
        }
        Self { matrix: m }
    }

    pub fn matrix(&self) -> &CMatrix<T, 8> {
        &self.matrix
    }

    fn block(&self, row_off: usize, col_off: usize) -> Tensor4<T> {
        Tensor4::from_fn(|r, c_| self.matrix[(r + row_off, c_ + col_off)])
    }

    pub fn top_left(&self) -> Tensor4<T> {
        self.block(0, 0)
    }

    pub fn top_right(&self) -> Tensor4<T> {
        self.block(0, 4)
    }

    pub fn bottom_left(&self) -> Tensor4<T> {
        self.block(4, 0)
    }

    pub fn bottom_right(&self) -> Tensor4<T> {
        self.block(4, 4)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.matrix.approx_eq(&other.matrix, tol)
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self {
            matrix: self.matrix * rhs.matrix,
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            matrix: -self.matrix,
        }
    }
}

/// Block-diagonal Hamiltonian diag(sum p_j chi_j, -sum p_j chi_j); its
/// spectrum is {+p0, -p0}, each four-fold, for null p.
pub fn direct_sum_hamiltonian<T: Scalar>(p: &FourMomentum<T>) -> DirectSum<T> {
    let h = momentum_contraction(p);
    DirectSum::from_diagonal_blocks(h, -h)
}

/// The momentum-space field operator G(p) = diag(chi^mu p_mu, -chi^mu p^mu)
/// acting on the direct sum of positive- and negative-helicity sectors.
pub fn field_operator<T: Scalar>(p: &FourMomentum<T>) -> DirectSum<T> {
    DirectSum::from_diagonal_blocks(covariant_contraction(p), -contravariant_contraction(p))
}

/// Which reflection to conjugate with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reflection {
    Time,
    Space,
}

/// R_T = [[0, -1], [1, 0]] in 4x4 blocks; squares to minus the identity.
pub fn time_reflection<T: Scalar>() -> DirectSum<T> {
    DirectSum::from_antidiagonal_blocks(-Tensor4::identity(), Tensor4::identity())
}

/// R_S = [[0, 1], [1, 0]] in 4x4 blocks; squares to the identity.
pub fn space_reflection<T: Scalar>() -> DirectSum<T> {
    DirectSum::from_antidiagonal_blocks(Tensor4::identity(), Tensor4::identity())
}

/// Conjugates the field operator with the chosen reflection:
/// R_T G(p) R_T = G(p0 -> -p0) and R_S G(p) R_S = G(p -> -p).
pub fn reflection_conjugation<T: Scalar>(which: Reflection, p: &FourMomentum<T>) -> DirectSum<T> {
    let r = match which {
        Reflection::Time => time_reflection(),
        Reflection::Space => space_reflection(),
    };
    r.compose(&field_operator(p)).compose(&r)
}

/// Seeds of the positive-helicity bivector eigensolutions, one per axis.
pub fn seed_components<T: Scalar>(axis: Axis) -> Vector4<T> {
    let inv_sqrt2 = 1.0 / std::f64::consts::SQRT_2;
    let table: [[(f64, f64); 4]; 3] = [
        [(0.0, 0.0), (0.0, 0.0), (0.0, -1.0), (1.0, 0.0)],
        [(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, -1.0)],
        [(0.0, 0.0), (0.0, -1.0), (1.0, 0.0), (0.0, 0.0)],
    ];
    let row = &table[axis.index() - 1];
    Vector4::from_fn(|k| c(row[k].0 * inv_sqrt2, row[k].1 * inv_sqrt2))
}

/// Time-imaginary vector solutions (i, e_axis)/sqrt(2), the longitudinal
/// seeds.
pub fn vector_seed_components<T: Scalar>(axis: Axis) -> Vector4<T> {
    let inv_sqrt2 = lit::<T>(1.0 / std::f64::consts::SQRT_2);
    let mut v = Vector4::zero();
    v[0] = Complex::new(T::zero(), inv_sqrt2);
    v[axis.index()] = cr(inv_sqrt2);
    v
}
