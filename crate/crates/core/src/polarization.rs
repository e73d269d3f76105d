//! Polarization bivectors: seeds, the rotated transverse constructions
//! z1/z2/z3, the symmetric combination z_S, the longitudinal z_T, the
//! reversed-order constructions, field-amplitude decomposition and the
//! projection operators.
//!
//! Conventions pinned by the closed-form/composed-rotation cross-check:
//! written rotation products apply right-to-left, so the construction
//! labeled e^{-i a S_2} e^{-i b S_3} psi performs the S_3 rotation first.
//! z_j is singular for pure motion along j and is built from the seed of
//! axis j-1 (cyclically); the reversed-order construction from seed s is
//! singular for pure motion along s-1.

use num_complex::Complex;

use crate::algebra::{
    chi_spatial, contravariant_contraction, covariant_contraction, momentum_contraction,
    rotation_operator, seed_components, vector_seed_components, Tensor4, Vector4,
};
use crate::axis::{epsilon, Axis};
use crate::error::{Error, Result};
use crate::momentum::FourMomentum;
use crate::scalar::{cr, lit, Scalar};

/// Relative tolerance below which a construction's normalization
/// denominator counts as vanished.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Sign of the helicity, selecting the covariant (+) or contravariant (-)
/// field equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn sign<T: Scalar>(self) -> T {
        match self {
            Helicity::Plus => T::one(),
            Helicity::Minus => -T::one(),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Helicity::Plus => Helicity::Minus,
            Helicity::Minus => Helicity::Plus,
        }
    }
}

/// Which construction produced a bivector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Pure-axis eigensolution seed.
    Seed(Axis),
    /// Transverse construction z_j, singular for pure j-motion.
    ZAxis(Axis),
    /// Normalized symmetric sum, singular on the (1,1,1) direction.
    ZSymmetric,
    /// Longitudinal (time-like polarization) solution.
    ZLongitudinal,
    /// Reversed-rotation-order construction y_j, singular for pure j-motion.
    Reversed(Axis),
    /// Anything produced by transport or ad-hoc assembly.
    Custom,
}

/// A polarization state: complex 4-component column tagged with its
/// helicity, construction and momentum.
#[derive(Clone, Copy, Debug)]
pub struct Bivector<T> {
    components: Vector4<T>,
    helicity: Helicity,
    basis: Basis,
    momentum: FourMomentum<T>,
}

impl<T: Scalar> Bivector<T> {
    pub fn from_parts(
        components: Vector4<T>,
        helicity: Helicity,
        basis: Basis,
        momentum: FourMomentum<T>,
    ) -> Self {
        Self {
            components,
            helicity,
            basis,
            momentum,
        }
    }

    pub fn components(&self) -> &Vector4<T> {
        &self.components
    }

    pub fn component(&self, mu: usize) -> Complex<T> {
        self.components[mu]
    }

    pub fn helicity(&self) -> Helicity {
        self.helicity
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn momentum(&self) -> &FourMomentum<T> {
        &self.momentum
    }

    /// The opposite-helicity state: componentwise complex conjugate.
    pub fn conjugated(&self) -> Self {
        Self {
            components: self.components.conjugated(),
            helicity: self.helicity.flipped(),
            basis: self.basis,
            momentum: self.momentum,
        }
    }

    /// conj(z) . z, unity for every construction here.
    pub fn norm_sq(&self) -> T {
        self.components.dot_conj(&self.components).re
    }

    /// Residual of the bivector's own field equation: the covariant
    /// contraction for positive helicity, contravariant for negative.
    pub fn equation_residual(&self) -> T {
        let op = match self.helicity {
            Helicity::Plus => covariant_contraction(&self.momentum),
            Helicity::Minus => contravariant_contraction(&self.momentum),
        };
        op.mul_vec(&self.components).max_abs()
    }

    /// Residual of the helicity eigenvalue relation
    /// (sum_j p_j chi_j / p0) z = (+/-) z.
    pub fn helicity_residual(&self) -> T {
        let h = momentum_contraction(&self.momentum).scaled(cr(T::one() / self.momentum.energy()));
        let want = self.components.scaled(cr(self.helicity.sign::<T>()));
        (h.mul_vec(&self.components) - want).max_abs()
    }
}

/// Inner product conj(a) . b, conjugate-linear in the first argument.
pub fn inner_product<T: Scalar>(a: &Bivector<T>, b: &Bivector<T>) -> Complex<T> {
    a.components().dot_conj(b.components())
}

/// Pure-axis bivector seed; the positive-helicity seeds are
/// (0,0,-i,1)/sqrt2, (0,1,0,-i)/sqrt2, (0,-i,1,0)/sqrt2 for axes 1,2,3 and
/// negative helicity conjugates them.
pub fn seed_bivector<T: Scalar>(axis: Axis, helicity: Helicity) -> Bivector<T> {
    let plus = seed_components::<T>(axis);
    let components = match helicity {
        Helicity::Plus => plus,
        Helicity::Minus => plus.conjugated(),
    };
    let mut dir = [T::zero(); 3];
    dir[axis.index() - 1] = T::one();
    let momentum = FourMomentum::from_direction(dir, T::one()).expect("unit axis momentum");
    Bivector::from_parts(components, helicity, Basis::Seed(axis), momentum)
}

fn check_denominator<T: Scalar>(denominator: T, p0: T) -> Result<()> {
    if denominator <= lit::<T>(DEGENERACY_TOL) * p0 {
        Err(Error::DegenerateDirection {
            denominator: denominator.to_f64().unwrap_or(f64::NAN),
            tolerance: (lit::<T>(DEGENERACY_TOL) * p0).to_f64().unwrap_or(f64::NAN),
        })
    } else {
        Ok(())
    }
}

/// Rotation angles of the forward construction from the seed of `seed`:
/// first about axis seed+2 by arcsin(p_{seed+1}/|p|), then about axis
/// seed+1 by arcsin(-p_{seed+2}/sqrt(p_seed^2 + p_{seed+2}^2)).
fn forward_angles<T: Scalar>(p: &FourMomentum<T>, seed: Axis) -> [(Axis, T); 2] {
    let p0 = p.energy();
    let ps = p.spatial_component(seed);
    let pn = p.spatial_component(seed.next());
    let pp = p.spatial_component(seed.prev());
    let first = (seed.prev(), (pn / p0).asin());
    let second = (seed.next(), (-pp / (ps * ps + pp * pp).sqrt()).asin());
    [first, second]
}

/// Angles of the reversed-order construction from the seed of `seed`:
/// first about axis seed+1 by arcsin(-p_{seed+2}/|p|), then about axis
/// seed+2 by arcsin(p_{seed+1}/sqrt(p_seed^2 + p_{seed+1}^2)).
fn reversed_angles<T: Scalar>(p: &FourMomentum<T>, seed: Axis) -> [(Axis, T); 2] {
    let p0 = p.energy();
    let ps = p.spatial_component(seed);
    let pn = p.spatial_component(seed.next());
    let pp = p.spatial_component(seed.prev());
    let first = (seed.next(), (-pp / p0).asin());
    let second = (seed.prev(), (pn / (ps * ps + pn * pn).sqrt()).asin());
    [first, second]
}

/// Transverse construction z_j by its closed form. `j` labels the singular
/// direction; the underlying seed is the axis before it in the cycle.
///
/// Cyclic component pattern (indices mod 3 in 1..=3, D the denominator):
/// z_j[j]   = -i (p_{j-1}^2 + p_{j+1}^2) / D
/// z_j[j-1] = (i p_{j-1} p_j - p0 p_{j+1}) / D
/// z_j[j+1] = (p0 p_{j-1} + i p_j p_{j+1}) / D
/// D = sqrt(2) p0 sqrt(p_{j-1}^2 + p_{j+1}^2)
pub fn z_axis<T: Scalar>(p: &FourMomentum<T>, j: Axis, helicity: Helicity) -> Result<Bivector<T>> {
    p.require_null()?;
    let denom_core = p.transverse_norm(j);
    check_denominator(denom_core, p.energy())?;
    let p0 = p.energy();
    let pj = p.spatial_component(j);
    let pm = p.spatial_component(j.prev());
    let pp = p.spatial_component(j.next());
    let d = lit::<T>(std::f64::consts::SQRT_2) * p0 * denom_core;
    let mut v = Vector4::zero();
    v[j.index()] = Complex::new(T::zero(), -(pm * pm + pp * pp)) / cr(d);
    v[j.prev().index()] = Complex::new(-p0 * pp, pm * pj) / cr(d);
    v[j.next().index()] = Complex::new(p0 * pm, pj * pp) / cr(d);
    let components = match helicity {
        Helicity::Plus => v,
        Helicity::Minus => v.conjugated(),
    };
    Ok(Bivector::from_parts(
        components,
        helicity,
        Basis::ZAxis(j),
        *p,
    ))
}

/// The same z_j by composing the two seed rotations; the independent
/// oracle for the closed form. Exact agreement requires p_{seed} > 0 so
/// the principal arcsin branch recovers the first rotation's cosine.
pub fn z_axis_by_rotations<T: Scalar>(
    p: &FourMomentum<T>,
    j: Axis,
    helicity: Helicity,
) -> Result<Bivector<T>> {
    p.require_null()?;
    check_denominator(p.transverse_norm(j), p.energy())?;
    let seed = j.prev();
    let mut state = match helicity {
        Helicity::Plus => seed_components::<T>(seed),
        Helicity::Minus => seed_components::<T>(seed).conjugated(),
    };
    for (axis, angle) in forward_angles(p, seed) {
        state = rotation_operator(axis, angle).mul_vec(&state);
    }
    Ok(Bivector::from_parts(state, helicity, Basis::ZAxis(j), *p))
}

/// Normalized symmetric combination z_S from its component closed form:
/// z_S[0] = 0, z_S[j] = sum_k (-p0 eps_jkm p_m + i (p_j p_k - p_k^2)) / N,
/// N = sqrt(2) p0 sqrt((p1-p2)^2 + (p1-p3)^2 + (p2-p3)^2).
pub fn z_symmetric<T: Scalar>(p: &FourMomentum<T>, helicity: Helicity) -> Result<Bivector<T>> {
    p.require_null()?;
    let diff = p.pairwise_diff_norm();
    check_denominator(diff, p.energy())?;
    let p0 = p.energy();
    let n = lit::<T>(std::f64::consts::SQRT_2) * p0 * diff;
    let sp = p.spatial();
    let mut v = Vector4::zero();
    for j in 1..=3usize {
        let mut re = T::zero();
        let mut im = T::zero();
        for k in 1..=3usize {
            for m in 1..=3usize {
                re = re - p0 * lit::<T>(epsilon(j, k, m) as f64) * sp[m - 1];
            }
            im = im + sp[j - 1] * sp[k - 1] - sp[k - 1] * sp[k - 1];
        }
        v[j] = Complex::new(re, im) / cr(n);
    }
    let components = match helicity {
        Helicity::Plus => v,
        Helicity::Minus => v.conjugated(),
    };
    Ok(Bivector::from_parts(
        components,
        helicity,
        Basis::ZSymmetric,
        *p,
    ))
}

/// The weighted-sum route to z_S, kept as the cross-check of the component
/// closed form: (w1 z1 + w2 z2 + w3 z3)/sqrt(sum of squared differences)
/// with w_j the transverse norm for direction j.
pub fn z_symmetric_by_sum<T: Scalar>(
    p: &FourMomentum<T>,
    helicity: Helicity,
) -> Result<Bivector<T>> {
    p.require_null()?;
    check_denominator(p.pairwise_diff_norm(), p.energy())?;
    let mut acc = Vector4::zero();
    for j in Axis::ALL {
        check_denominator(p.transverse_norm(j), p.energy())?;
        let w = cr(p.transverse_norm(j));
        acc = acc + z_axis(p, j, helicity)?.components().scaled(w);
    }
    let components = acc.scaled(cr(T::one() / p.pairwise_diff_norm()));
    Ok(Bivector::from_parts(
        components,
        helicity,
        Basis::ZSymmetric,
        *p,
    ))
}

/// Longitudinal solution z_T = (i p0, p1, p2, p3) / (sqrt(2) p0); the same
/// result arises from rotating any of the three vector seeds, so it
/// carries no phase freedom.
pub fn z_longitudinal<T: Scalar>(p: &FourMomentum<T>) -> Result<Bivector<T>> {
    p.require_null()?;
    if p.energy() <= T::zero() {
        return Err(Error::NonPositiveEnergy {
            p0: p.energy().to_f64().unwrap_or(f64::NAN),
        });
    }
    let d = lit::<T>(std::f64::consts::SQRT_2) * p.energy();
    let mut v = Vector4::zero();
    v[0] = Complex::new(T::zero(), p.energy() / d);
    for j in 1..=3usize {
        v[j] = cr(p.spatial()[j - 1] / d);
    }
    Ok(Bivector::from_parts(
        v,
        Helicity::Plus,
        Basis::ZLongitudinal,
        *p,
    ))
}

/// z_T by rotating the vector seed of `seed` with the forward angles; all
/// three seeds give the same result. Oracle route for `z_longitudinal`.
pub fn z_longitudinal_by_rotations<T: Scalar>(
    p: &FourMomentum<T>,
    seed: Axis,
) -> Result<Bivector<T>> {
    p.require_null()?;
    check_denominator(p.transverse_norm(seed.next()), p.energy())?;
    let mut state = vector_seed_components::<T>(seed);
    for (axis, angle) in forward_angles(p, seed) {
        state = rotation_operator(axis, angle).mul_vec(&state);
    }
    Ok(Bivector::from_parts(
        state,
        Helicity::Plus,
        Basis::ZLongitudinal,
        *p,
    ))
}

/// Reversed-rotation-order construction from the seed of `seed_axis`;
/// singular for pure motion along seed_axis - 1 (cyclically), e.g. the
/// seed-1 reversed construction is ill-defined for pure 3-motion.
pub fn reversed_order_bivector<T: Scalar>(
    p: &FourMomentum<T>,
    seed_axis: Axis,
    helicity: Helicity,
) -> Result<Bivector<T>> {
    p.require_null()?;
    let singular = seed_axis.prev();
    check_denominator(p.transverse_norm(singular), p.energy())?;
    let mut state = match helicity {
        Helicity::Plus => seed_components::<T>(seed_axis),
        Helicity::Minus => seed_components::<T>(seed_axis).conjugated(),
    };
    for (axis, angle) in reversed_angles(p, seed_axis) {
        state = rotation_operator(axis, angle).mul_vec(&state);
    }
    Ok(Bivector::from_parts(
        state,
        helicity,
        Basis::Reversed(singular),
        *p,
    ))
}

/// Real electric and magnetic amplitude triples of a transverse state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldAmplitudes<T> {
    pub e_part: [T; 3],
    pub b_part: [T; 3],
}

/// Splits a transverse bivector into electric (real) and magnetic
/// (imaginary) spatial amplitudes.
pub fn decompose<T: Scalar>(z: &Bivector<T>) -> Result<FieldAmplitudes<T>> {
    let t = z.component(0).norm();
    if t > lit::<T>(1e-9) {
        return Err(Error::NotTransverse {
            time_component: t.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut e = [T::zero(); 3];
    let mut b = [T::zero(); 3];
    for j in 0..3 {
        e[j] = z.component(j + 1).re;
        b[j] = z.component(j + 1).im;
    }
    Ok(FieldAmplitudes {
        e_part: e,
        b_part: b,
    })
}

/// Closed form of the electric amplitude of z_S:
/// ze_j = p0 (p_{j+1} - p_{j+2}) / N. Evaluates the raw formula, so
/// reflected (non-physical) argument tuples are allowed.
pub fn ze_closed_form<T: Scalar>(p: &FourMomentum<T>) -> [T; 3] {
    let p0 = p.energy();
    let n = symmetric_denominator(p);
    let mut out = [T::zero(); 3];
    for j in Axis::ALL {
        out[j.index() - 1] =
            p0 * (p.spatial_component(j.next()) - p.spatial_component(j.prev())) / n;
    }
    out
}

/// Closed form of the magnetic amplitude of z_S:
/// zb_j = (-p0^2 + p_j sum_k p_k) / N.
pub fn zb_closed_form<T: Scalar>(p: &FourMomentum<T>) -> [T; 3] {
    let p0 = p.energy();
    let n = symmetric_denominator(p);
    let [s1, s2, s3] = p.spatial();
    let total = s1 + s2 + s3;
    let mut out = [T::zero(); 3];
    for (j, s) in p.spatial().iter().enumerate() {
        out[j] = (-(p0 * p0) + *s * total) / n;
    }
    out
}

fn symmetric_denominator<T: Scalar>(p: &FourMomentum<T>) -> T {
    lit::<T>(std::f64::consts::SQRT_2) * p.energy() * p.pairwise_diff_norm()
}

/// Residuals of the amplitude reflection symmetries: ze flips under
/// spatial reflection with zb unchanged, zb flips under time reflection
/// with ze unchanged. All four residuals should vanish identically.
#[derive(Clone, Copy, Debug)]
pub struct AmplitudeSymmetryReport<T> {
    pub spatial_flip_ze_negates: T,
    pub spatial_flip_zb_fixed: T,
    pub time_flip_zb_negates: T,
    pub time_flip_ze_fixed: T,
}

impl<T: Scalar> AmplitudeSymmetryReport<T> {
    pub fn max_residual(&self) -> T {
        self.spatial_flip_ze_negates
            .max(self.spatial_flip_zb_fixed)
            .max(self.time_flip_zb_negates)
            .max(self.time_flip_ze_fixed)
    }
}

fn max_abs_diff<T: Scalar>(a: [T; 3], b: [T; 3]) -> T {
    let mut m = T::zero();
    for k in 0..3 {
        m = m.max((a[k] - b[k]).abs());
    }
    m
}

/// Evaluates the ze/zb closed forms on reflected momentum tuples and
/// reports the symmetry residuals.
pub fn amplitude_symmetries<T: Scalar>(p: &FourMomentum<T>) -> AmplitudeSymmetryReport<T> {
    let ze = ze_closed_form(p);
    let zb = zb_closed_form(p);
    let ps = p.space_reversed();
    let pt = p.time_reversed();
    let neg = |v: [T; 3]| [-v[0], -v[1], -v[2]];
    AmplitudeSymmetryReport {
        spatial_flip_ze_negates: max_abs_diff(ze_closed_form(&ps), neg(ze)),
        spatial_flip_zb_fixed: max_abs_diff(zb_closed_form(&ps), zb),
        time_flip_zb_negates: max_abs_diff(zb_closed_form(&pt), neg(zb)),
        time_flip_ze_fixed: max_abs_diff(ze_closed_form(&pt), ze),
    }
}

/// Helicity-summed projection matrix z_S (x) conj(z_S) + conj(z_S) (x) z_S;
/// equals delta_{mu nu} - p_mu p_nu / p0^2 on the spatial block and zero on
/// the time row and column.
pub fn projection_sum<T: Scalar>(p: &FourMomentum<T>) -> Result<Tensor4<T>> {
    let z = z_symmetric(p, Helicity::Plus)?;
    let zc = z.conjugated();
    Ok(z.components().outer_conj(z.components()) + zc.components().outer_conj(zc.components()))
}

/// Positive-energy projector P+ = (p0 I + sum_j p_j chi_j) / (2 p0);
/// also the sum of the longitudinal and transverse outer products.
pub fn projector_positive<T: Scalar>(p: &FourMomentum<T>) -> Result<Tensor4<T>> {
    p.require_null()?;
    let half = cr(T::one() / (lit::<T>(2.0) * p.energy()));
    Ok((momentum_contraction(p) + Tensor4::identity().scaled(cr(p.energy()))).scaled(half))
}

/// Negative-energy projector P- = (p0 I - sum_j p_j chi_j) / (2 p0).
pub fn projector_negative<T: Scalar>(p: &FourMomentum<T>) -> Result<Tensor4<T>> {
    p.require_null()?;
    let half = cr(T::one() / (lit::<T>(2.0) * p.energy()));
    Ok((Tensor4::identity().scaled(cr(p.energy())) - momentum_contraction(p)).scaled(half))
}

/// Phase-equivalence test: r = conj(a).b must have unit modulus and
/// b = r a within `tol`. Returns the ratio on success.
pub fn proportional_by_phase<T: Scalar>(
    a: &Bivector<T>,
    b: &Bivector<T>,
    tol: T,
) -> Option<Complex<T>> {
    let r = inner_product(a, b);
    if (r.norm() - T::one()).abs() > tol {
        return None;
    }
    let residual = (*b.components() - a.components().scaled(r)).max_abs();
    (residual <= tol).then_some(r)
}

/// Spatial chi contraction helper used by current bilinears and tests.
pub fn spatial_contraction<T: Scalar>(p: &FourMomentum<T>) -> Tensor4<T> {
    let mut acc = Tensor4::zero();
    for axis in Axis::ALL {
        acc = acc + chi_spatial(axis).scaled(cr(p.spatial_component(axis)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    type P = FourMomentum<f64>;

    fn p3221() -> P {
        P::physical(3.0, 2.0, 2.0, 1.0).unwrap()
    }

    #[test]
    fn seed_values() {
        let s1 = seed_bivector::<f64>(Axis::X1, Helicity::Plus);
        let r = 1.0 / 2.0f64.sqrt();
        assert!((s1.component(2) - c(0.0, -r)).norm() < 1e-16);
        assert!((s1.component(3) - c(r, 0.0)).norm() < 1e-16);
        let s3 = seed_bivector::<f64>(Axis::X3, Helicity::Plus);
        assert!((s3.component(1) - c(0.0, -r)).norm() < 1e-16);
        assert!((s3.component(2) - c(r, 0.0)).norm() < 1e-16);
        assert!((s1.norm_sq() - 1.0).abs() < 1e-15);
        assert!(s1.equation_residual() < 1e-15);
        assert!(seed_bivector::<f64>(Axis::X2, Helicity::Minus).equation_residual() < 1e-15);
    }

    #[test]
    fn z2_at_pure_one_motion_is_the_seed() {
        let p = P::physical(1.0, 1.0, 0.0, 0.0).unwrap();
        let z = z_axis(&p, Axis::X2, Helicity::Plus).unwrap();
        let s = seed_bivector::<f64>(Axis::X1, Helicity::Plus);
        assert!(z.components().approx_eq(s.components(), 1e-15));
    }

    #[test]
    fn z2_spot_value_and_rotation_oracle() {
        let p = p3221();
        let z = z_axis(&p, Axis::X2, Helicity::Plus).unwrap();
        // Denominator 3 sqrt(10): components (0, -3+4i, -5i, 6+2i)/(3 sqrt 10).
        let d = 3.0 * 10.0f64.sqrt();
        assert!((z.component(0)).norm() < 1e-16);
        assert!((z.component(1) - c(-3.0 / d, 4.0 / d)).norm() < 1e-14);
        assert!((z.component(2) - c(0.0, -5.0 / d)).norm() < 1e-14);
        assert!((z.component(3) - c(6.0 / d, 2.0 / d)).norm() < 1e-14);
        let by_rot = z_axis_by_rotations(&p, Axis::X2, Helicity::Plus).unwrap();
        assert!(z.components().approx_eq(by_rot.components(), 1e-14));
        assert!(z.equation_residual() < 1e-14);
    }

    #[test]
    fn z_axis_rejects_degenerate_and_offshell() {
        let pure2 = P::physical(3.0, 0.0, 3.0, 0.0).unwrap();
        assert!(matches!(
            z_axis(&pure2, Axis::X2, Helicity::Plus),
            Err(Error::DegenerateDirection { .. })
        ));
        let offshell = P::new(1.0, 1.0, 1.0, 1.0);
        assert!(matches!(
            z_axis(&offshell, Axis::X2, Helicity::Plus),
            Err(Error::NotNull { .. })
        ));
    }

    #[test]
    fn z_symmetric_spot_value() {
        let z = z_symmetric(&p3221(), Helicity::Plus).unwrap();
        assert!((z.component(1) - c(3.0 / 6.0, 1.0 / 6.0)).norm() < 1e-14);
        assert!((z.component(2) - c(-3.0 / 6.0, 1.0 / 6.0)).norm() < 1e-14);
        assert!((z.component(3) - c(0.0, -4.0 / 6.0)).norm() < 1e-14);
        assert!(z.component(0).norm() == 0.0);
        // Weighted-sum route agrees.
        let by_sum = z_symmetric_by_sum(&p3221(), Helicity::Plus).unwrap();
        assert!(z.components().approx_eq(by_sum.components(), 1e-14));
    }

    #[test]
    fn constructions_reject_offshell_momenta() {
        let offshell = P::new(2.0, 1.0, 1.0, 1.0);
        assert!(matches!(
            z_symmetric(&offshell, Helicity::Plus),
            Err(Error::NotNull { .. })
        ));
        assert!(matches!(
            z_longitudinal(&offshell),
            Err(Error::NotNull { .. })
        ));
        assert!(matches!(
            reversed_order_bivector(&offshell, Axis::X1, Helicity::Plus),
            Err(Error::NotNull { .. })
        ));
    }

    #[test]
    fn z_symmetric_degenerate_direction() {
        let t = 2.2;
        let p = P::from_direction([1.0, 1.0, 1.0], 3.0f64.sqrt() * t).unwrap();
        assert!(matches!(
            z_symmetric(&p, Helicity::Plus),
            Err(Error::DegenerateDirection { .. })
        ));
    }

    #[test]
    fn z_symmetric_norm_and_isotropy() {
        let z = z_symmetric(&p3221(), Helicity::Plus).unwrap();
        assert!((z.norm_sq() - 1.0).abs() < 1e-14);
        let plain = z.components().dot(z.components());
        assert!(plain.norm() < 1e-14);
        assert!(z.helicity_residual() < 1e-14);
        let zm = z_symmetric(&p3221(), Helicity::Minus).unwrap();
        assert!(zm.equation_residual() < 1e-14);
    }

    #[test]
    fn z_longitudinal_values_and_oracle() {
        let p1 = P::physical(1.0, 1.0, 0.0, 0.0).unwrap();
        let z = z_longitudinal(&p1).unwrap();
        let r = 1.0 / 2.0f64.sqrt();
        assert!((z.component(0) - c(0.0, r)).norm() < 1e-15);
        assert!((z.component(1) - c(r, 0.0)).norm() < 1e-15);
        let p = p3221();
        let zt = z_longitudinal(&p).unwrap();
        let d = 3.0 * 2.0f64.sqrt();
        assert!((zt.component(0) - c(0.0, 3.0 / d)).norm() < 1e-15);
        assert!((zt.component(3) - c(1.0 / d, 0.0)).norm() < 1e-15);
        for seed in Axis::ALL {
            let by_rot = z_longitudinal_by_rotations(&p, seed).unwrap();
            assert!(
                zt.components().approx_eq(by_rot.components(), 1e-12),
                "seed {:?}",
                seed
            );
        }
        assert!(zt.equation_residual() < 1e-14);
    }

    #[test]
    fn reversed_order_at_pure_motion_is_seed() {
        let p = P::physical(1.0, 1.0, 0.0, 0.0).unwrap();
        let y = reversed_order_bivector(&p, Axis::X1, Helicity::Plus).unwrap();
        let s = seed_bivector::<f64>(Axis::X1, Helicity::Plus);
        assert!(y.components().approx_eq(s.components(), 1e-15));
    }

    #[test]
    fn reversed_order_unit_phase_against_forward() {
        let p = p3221();
        for seed in Axis::ALL {
            let y = reversed_order_bivector(&p, seed, Helicity::Plus).unwrap();
            assert!(y.equation_residual() < 1e-14, "seed {:?}", seed);
            let z = z_axis(&p, seed.next(), Helicity::Plus).unwrap();
            let r = inner_product(&z, &y);
            assert!((r.norm() - 1.0).abs() < 1e-13);
        }
        // Seed 1 ratio carries the loop phase arctan(p2 p3/(p0 p1)).
        let y3 = reversed_order_bivector(&p, Axis::X1, Helicity::Plus).unwrap();
        let z2 = z_axis(&p, Axis::X2, Helicity::Plus).unwrap();
        let r = inner_product(&z2, &y3);
        assert!((r.arg() + (1.0f64 / 3.0).atan()).abs() < 1e-13);
    }

    #[test]
    fn reversed_order_degenerate_direction() {
        // Seed 1 reversed is ill-defined for pure 3-motion.
        let p = P::physical(2.0, 0.0, 0.0, 2.0).unwrap();
        assert!(matches!(
            reversed_order_bivector(&p, Axis::X1, Helicity::Plus),
            Err(Error::DegenerateDirection { .. })
        ));
    }

    #[test]
    fn decompose_spot_values() {
        let z = z_symmetric(&p3221(), Helicity::Plus).unwrap();
        let f = decompose(&z).unwrap();
        let ze = [0.5, -0.5, 0.0];
        let zb = [1.0 / 6.0, 1.0 / 6.0, -2.0 / 3.0];
        for k in 0..3 {
            assert!((f.e_part[k] - ze[k]).abs() < 1e-14);
            assert!((f.b_part[k] - zb[k]).abs() < 1e-14);
        }
        let dot: f64 = (0..3).map(|k| f.e_part[k] * f.b_part[k]).sum();
        assert!(dot.abs() < 1e-14);
        // Closed forms agree with the decomposition.
        let zec = ze_closed_form(&p3221());
        let zbc = zb_closed_form(&p3221());
        for k in 0..3 {
            assert!((zec[k] - ze[k]).abs() < 1e-14);
            assert!((zbc[k] - zb[k]).abs() < 1e-14);
        }
    }

    #[test]
    fn decompose_rejects_longitudinal() {
        let zt = z_longitudinal(&p3221()).unwrap();
        assert!(matches!(decompose(&zt), Err(Error::NotTransverse { .. })));
    }

    #[test]
    fn amplitude_symmetry_report() {
        let rep = amplitude_symmetries(&p3221());
        assert!(rep.max_residual() < 1e-14);
        // Double flip composes both rules.
        let p = p3221();
        let both = p.space_reversed().time_reversed();
        let ze = ze_closed_form(&p);
        let zb = zb_closed_form(&p);
        let zeb = ze_closed_form(&both);
        let zbb = zb_closed_form(&both);
        for k in 0..3 {
            assert!((zeb[k] + ze[k]).abs() < 1e-14);
            assert!((zbb[k] + zb[k]).abs() < 1e-14);
        }
    }

    #[test]
    fn projection_sum_matches_transverse_projector() {
        let p = p3221();
        let m = projection_sum(&p).unwrap();
        assert!((m[(1, 1)] - c(5.0 / 9.0, 0.0)).norm() < 1e-14);
        for mu in 0..4 {
            assert!(m[(0, mu)].norm() < 1e-14);
            assert!(m[(mu, 0)].norm() < 1e-14);
        }
        let spatial_trace = m[(1, 1)] + m[(2, 2)] + m[(3, 3)];
        assert!((spatial_trace - c(2.0, 0.0)).norm() < 1e-13);
        // Full spatial closed form and the amplitude form.
        let z = z_symmetric(&p, Helicity::Plus).unwrap();
        let f = decompose(&z).unwrap();
        for r in 1..4 {
            for col in 1..4 {
                let delta = if r == col { 1.0 } else { 0.0 };
                let want = delta - p.get(r) * p.get(col) / (p.energy() * p.energy());
                assert!((m[(r, col)] - c(want, 0.0)).norm() < 1e-13);
                let amp = 2.0
                    * (f.e_part[r - 1] * f.e_part[col - 1] + f.b_part[r - 1] * f.b_part[col - 1]);
                assert!((m[(r, col)] - c(amp, 0.0)).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn projectors_idempotent_and_complete() {
        let p = p3221();
        let pp = projector_positive(&p).unwrap();
        let pm = projector_negative(&p).unwrap();
        assert!((pp + pm).approx_eq(&Tensor4::identity(), 1e-14));
        assert!((pp * pp - pp).max_abs() < 1e-14);
        assert!((pm * pm - pm).max_abs() < 1e-14);
        assert!((pp * pm).max_abs() < 1e-14);
        assert!((pp[(0, 0)] - c(0.5, 0.0)).norm() < 1e-15);
        // P+ equals the outer-product resolution over z_T and z_S.
        let zt = z_longitudinal(&p).unwrap();
        let zs = z_symmetric(&p, Helicity::Plus).unwrap();
        let outer = zt.components().outer_conj(zt.components())
            + zs.components().outer_conj(zs.components());
        assert!(pp.approx_eq(&outer, 1e-13));
        // Annihilation and eigenstate relations.
        let zsc = zs.conjugated();
        assert!((pp.mul_vec(zs.components()) - *zs.components()).max_abs() < 1e-13);
        assert!((pp.mul_vec(zt.components()) - *zt.components()).max_abs() < 1e-13);
        assert!(pp.mul_vec(zsc.components()).max_abs() < 1e-13);
        assert!(pm.mul_vec(zs.components()).max_abs() < 1e-13);
        assert!((pm.mul_vec(zsc.components()) - *zsc.components()).max_abs() < 1e-13);
    }

    #[test]
    fn orthogonality_table() {
        let p = p3221();
        let zt = z_longitudinal(&p).unwrap();
        let zs = z_symmetric(&p, Helicity::Plus).unwrap();
        assert!((inner_product(&zt, &zt) - c(1.0, 0.0)).norm() < 1e-14);
        assert!((inner_product(&zs, &zs) - c(1.0, 0.0)).norm() < 1e-14);
        assert!(inner_product(&zt, &zs).norm() < 1e-14);
        assert!(inner_product(&zs, &zt).norm() < 1e-14);
        assert!(inner_product(&zs, &zs.conjugated()).norm() < 1e-14);
    }

    #[test]
    fn transverse_constructions_pairwise_proportional() {
        let p = p3221();
        let all = [
            z_axis(&p, Axis::X1, Helicity::Plus).unwrap(),
            z_axis(&p, Axis::X2, Helicity::Plus).unwrap(),
            z_axis(&p, Axis::X3, Helicity::Plus).unwrap(),
            z_symmetric(&p, Helicity::Plus).unwrap(),
        ];
        for a in &all {
            for b in &all {
                assert!(proportional_by_phase(a, b, 1e-10).is_some());
            }
        }
    }

    #[test]
    fn contravariant_annihilates_conjugate() {
        let p = p3221();
        let zs = z_symmetric(&p, Helicity::Plus).unwrap();
        let res = contravariant_contraction(&p).mul_vec(zs.conjugated().components());
        assert!(res.max_abs() < 1e-12);
    }
}
