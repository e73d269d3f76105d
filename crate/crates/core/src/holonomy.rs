//! Parallel transport of polarization states along rotation paths and the
//! geometric phase accumulated around closed circuits.

use num_complex::Complex;

use crate::algebra::rotation_operator;
use crate::axis::Axis;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::momentum::FourMomentum;
use crate::polarization::{
    inner_product, seed_bivector, z_longitudinal, Basis, Bivector, Helicity, DEGENERACY_TOL,
};
use crate::scalar::{lit, Scalar};

/// One rotation arc: axis and angle, applied as e^{-i angle S_axis}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationStep<T> {
    pub axis: Axis,
    pub angle: T,
}

impl<T: Scalar> RotationStep<T> {
    pub fn new(axis: Axis, angle: T) -> Self {
        Self { axis, angle }
    }

    pub fn inverse(self) -> Self {
        Self {
            axis: self.axis,
            angle: -self.angle,
        }
    }
}

/// Applies the steps to the state in list order, each as a left
/// multiplication by its rotation operator; the first listed step acts
/// first. Norms are preserved exactly up to rounding.
pub fn transport<T: Scalar>(z: &Bivector<T>, path: &[RotationStep<T>]) -> Bivector<T> {
    let mut components = *z.components();
    let mut momentum = *z.momentum();
    for step in path {
        components = rotation_operator(step.axis, step.angle).mul_vec(&components);
        momentum = momentum.rotated(step.axis, step.angle);
    }
    Bivector::from_parts(components, z.helicity(), Basis::Custom, momentum)
}

fn check_loop_denominator<T: Scalar>(value: T, p0: T) -> Result<()> {
    if value <= lit::<T>(DEGENERACY_TOL) * p0 {
        Err(Error::DegenerateDirection {
            denominator: value.to_f64().unwrap_or(f64::NAN),
            tolerance: (lit::<T>(DEGENERACY_TOL) * p0).to_f64().unwrap_or(f64::NAN),
        })
    } else {
        Ok(())
    }
}

/// Outward rotation path of the seed-1 forward construction: first about
/// axis 3 by arcsin(p2/p0), then about axis 2 by
/// arcsin(-p3/sqrt(p1^2+p3^2)).
pub fn forward_path<T: Scalar>(p: &FourMomentum<T>) -> Result<[RotationStep<T>; 2]> {
    p.require_null()?;
    let p0 = p.energy();
    check_loop_denominator(p.transverse_norm(Axis::X2), p0)?;
    let [p1, p2, p3] = p.spatial();
    Ok([
        RotationStep::new(Axis::X3, (p2 / p0).asin()),
        RotationStep::new(Axis::X2, (-p3 / (p1 * p1 + p3 * p3).sqrt()).asin()),
    ])
}

/// Outward rotation path of the seed-1 reversed-order construction: first
/// about axis 2 by arcsin(-p3/p0), then about axis 3 by
/// arcsin(p2/sqrt(p1^2+p2^2)).
pub fn reversed_path<T: Scalar>(p: &FourMomentum<T>) -> Result<[RotationStep<T>; 2]> {
    p.require_null()?;
    let p0 = p.energy();
    check_loop_denominator(p.transverse_norm(Axis::X3), p0)?;
    let [p1, p2, p3] = p.spatial();
    Ok([
        RotationStep::new(Axis::X2, (-p3 / p0).asin()),
        RotationStep::new(Axis::X3, (p2 / (p1 * p1 + p2 * p2).sqrt()).asin()),
    ])
}

/// The closed circuit: outward by the forward-order arcs, back by the
/// inverse of the reversed-order arcs. Requires p1 > 0; the principal
/// branches close the loop at the reflected momentum otherwise.
pub fn loop_path<T: Scalar>(p: &FourMomentum<T>) -> Result<[RotationStep<T>; 4]> {
    check_loop_denominator(p.spatial_component(Axis::X1), p.energy())?;
    let [f1, f2] = forward_path(p)?;
    let [r1, r2] = reversed_path(p)?;
    Ok([f1, f2, r2.inverse(), r1.inverse()])
}

/// Result of a closed-circuit transport.
#[derive(Clone, Copy, Debug)]
pub struct HolonomyResult<T> {
    /// Accumulated phase in (-pi, pi].
    pub phase: T,
    /// Deviation of the return overlap modulus from unity.
    pub residual: T,
    /// Triangulated area of the comparison region on the momentum sphere,
    /// when the loop lies in the chart where it is defined.
    pub solid_angle_estimate: Option<T>,
}

/// Phase difference between two states: r = <reference, candidate>,
/// phase = arg r, residual = |1 - |r||. Meaningful only when the residual
/// is small; an overlap modulus below 1e-6 is an error.
pub fn extract_phase<T: Scalar>(
    reference: &Bivector<T>,
    candidate: &Bivector<T>,
) -> Result<(T, T)> {
    let r = inner_product(reference, candidate);
    let modulus = r.norm();
    if modulus < lit::<T>(1e-6) {
        return Err(Error::ZeroOverlap {
            modulus: modulus.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok((r.arg(), (T::one() - modulus).abs()))
}

/// Transports the axis-1 seed around the loop for `p` and extracts the
/// regenerated phase; equals +/- arctan(p2 p3 / (p0 p1)) by helicity.
pub fn loop_phase<T: Scalar>(p: &FourMomentum<T>, helicity: Helicity) -> Result<HolonomyResult<T>> {
    let path = loop_path(p)?;
    let seed = seed_bivector::<T>(Axis::X1, helicity);
    let out = transport(&seed, &path);
    let (phase, residual) = extract_phase(&seed, &out)?;
    if residual > lit::<T>(1e-10) {
        return Err(Error::NonProportionalReturn {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let [p1, p2, p3] = p.spatial();
    let theta = (p3 / p.energy()).acos();
    let phi = p2.atan2(p1);
    Ok(HolonomyResult {
        phase,
        residual,
        solid_angle_estimate: Some(spherical_rectangle_area(theta, phi, AREA_SAMPLES)),
    })
}

/// Closed form arctan(p2 p3 / (p0 p1)). The boolean flags the singular
/// line p1 = 0 with p2 p3 != 0, where the value is the +/- pi/2 limit.
pub fn closed_form_phase<T: Scalar>(p: &FourMomentum<T>) -> (T, bool) {
    let [p1, p2, p3] = p.spatial();
    let numerator = p2 * p3;
    if p1 == T::zero() {
        if numerator == T::zero() {
            (T::zero(), false)
        } else {
            (numerator.signum() * T::FRAC_PI_2(), true)
        }
    } else {
        ((numerator / (p.energy() * p1)).atan(), false)
    }
}

/// Spherical-coordinate form arctan(cos(theta) tan(phi)) with the polar
/// angle measured from the 3-axis and azimuth from the 1-axis.
pub fn spherical_form_phase<T: Scalar>(theta: T, phi: T) -> T {
    (theta.cos() * phi.tan()).atan()
}

const AREA_SAMPLES: usize = 2600;

/// Signed area of a closed spherical polygon given by its ordered boundary
/// samples, as the spherical-excess sum of the triangle fan from the
/// normalized centroid. Deterministic: fixed order, plain summation.
pub fn spherical_polygon_area<T: Scalar>(boundary: &[[T; 3]]) -> T {
    let mut centroid = [T::zero(); 3];
    for p in boundary {
        for k in 0..3 {
            centroid[k] = centroid[k] + p[k];
        }
    }
    let norm =
        (centroid[0] * centroid[0] + centroid[1] * centroid[1] + centroid[2] * centroid[2]).sqrt();
    if norm == T::zero() {
        return T::zero();
    }
    for c in centroid.iter_mut() {
        *c = *c / norm;
    }
    let mut total = T::zero();
    let n = boundary.len();
    for i in 0..n {
        let a = boundary[i];
        let b = boundary[(i + 1) % n];
        let cross = [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ];
        let num = centroid[0] * cross[0] + centroid[1] * cross[1] + centroid[2] * cross[2];
        let den = T::one()
            + (centroid[0] * a[0] + centroid[1] * a[1] + centroid[2] * a[2])
            + (centroid[0] * b[0] + centroid[1] * b[1] + centroid[2] * b[2])
            + (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
        total = total + lit::<T>(2.0) * num.atan2(den);
    }
    total
}

fn unit_from_angles<T: Scalar>(colat: T, azimuth: T) -> [T; 3] {
    [
        azimuth.cos() * colat.sin(),
        azimuth.sin() * colat.sin(),
        colat.cos(),
    ]
}

/// Boundary samples of the coordinate rectangle [0, phi] x [theta, pi/2]
/// on the unit sphere: equator out to azimuth phi, meridian up to
/// colatitude theta, colatitude circle back, meridian down. The two
/// return edges are the reversed-order rotation path of the loop.
fn rectangle_boundary<T: Scalar>(theta: T, phi: T, samples_per_edge: usize) -> Vec<[T; 3]> {
    let mut pts = Vec::with_capacity(4 * samples_per_edge);
    let half_pi = T::FRAC_PI_2();
    let m = T::from_usize(samples_per_edge).unwrap();
    for k in 0..samples_per_edge {
        let t = T::from_usize(k).unwrap() / m;
        pts.push(unit_from_angles(half_pi, phi * t));
    }
    for k in 0..samples_per_edge {
        let t = T::from_usize(k).unwrap() / m;
        pts.push(unit_from_angles(half_pi + (theta - half_pi) * t, phi));
    }
    for k in 0..samples_per_edge {
        let t = T::from_usize(k).unwrap() / m;
        pts.push(unit_from_angles(theta, phi * (T::one() - t)));
    }
    for k in 0..samples_per_edge {
        let t = T::from_usize(k).unwrap() / m;
        pts.push(unit_from_angles(theta + (half_pi - theta) * t, T::zero()));
    }
    pts
}

/// Triangulated area of the rectangle region for the loop at (theta, phi).
pub fn spherical_rectangle_area<T: Scalar>(theta: T, phi: T, samples_per_edge: usize) -> T {
    spherical_polygon_area(&rectangle_boundary(theta, phi, samples_per_edge))
}

/// Compares the closed-form phase with the numerically integrated area of
/// the loop's comparison region; the ratio approaches one as theta -> 0.
/// Returns (phase, area).
pub fn solid_angle_check<T: Scalar>(theta: T, phi: T) -> (T, T) {
    (
        spherical_form_phase(theta, phi),
        spherical_rectangle_area(theta, phi, AREA_SAMPLES),
    )
}

const MAX_SPIN_ORDER: usize = 4;

/// Applies a 4x4 operator to one tensor slot of a 4^n-component state.
fn apply_to_slot<T: Scalar>(
    state: &mut [Complex<T>],
    op: &CMatrix<T, 4>,
    slot: usize,
    order: usize,
) {
    let stride = 4usize.pow((order - 1 - slot) as u32);
    let block = stride * 4;
    let len = state.len();
    let mut scratch = [Complex::new(T::zero(), T::zero()); 4];
    let mut base = 0;
    while base < len {
        for offset in 0..stride {
            let start = base + offset;
            for (r, s) in scratch.iter_mut().enumerate() {
                let mut acc = Complex::new(T::zero(), T::zero());
                for c_ in 0..4 {
                    acc = acc + op[(r, c_)] * state[start + c_ * stride];
                }
                *s = acc;
            }
            for (r, s) in scratch.iter().enumerate() {
                state[start + r * stride] = *s;
            }
        }
        base += block;
    }
}

/// Transports the n-fold outer power of the axis-1 seed around the loop,
/// applying every rotation as its n-fold tensor power, and extracts the
/// regenerated phase. Scales as n times the spin-1 phase.
pub fn spin_n_phase<T: Scalar>(p: &FourMomentum<T>, n: usize) -> Result<T> {
    if n == 0 || n > MAX_SPIN_ORDER {
        return Err(Error::DimensionLimit {
            n,
            max: MAX_SPIN_ORDER,
        });
    }
    let path = loop_path(p)?;
    let seed = seed_bivector::<T>(Axis::X1, Helicity::Plus);
    // Product state: n-fold tensor power of the seed.
    let mut state = vec![Complex::new(T::one(), T::zero())];
    for _ in 0..n {
        let mut next = Vec::with_capacity(state.len() * 4);
        for amp in &state {
            for k in 0..4 {
                next.push(*amp * seed.component(k));
            }
        }
        state = next;
    }
    let reference = state.clone();
    for step in path {
        let op = rotation_operator(step.axis, step.angle);
        for slot in 0..n {
            apply_to_slot(&mut state, &op, slot, n);
        }
    }
    let mut overlap = Complex::new(T::zero(), T::zero());
    for (r, s) in reference.iter().zip(state.iter()) {
        overlap = overlap + r.conj() * *s;
    }
    let residual = (T::one() - overlap.norm()).abs();
    if residual > lit::<T>(1e-9) {
        return Err(Error::NonProportionalReturn {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(overlap.arg())
}

/// Transports the longitudinal solution of the pure-1 momentum around the
/// same loop; polar vectors acquire no phase, so the result is zero.
pub fn longitudinal_control<T: Scalar>(p: &FourMomentum<T>) -> Result<(T, T)> {
    let path = loop_path(p)?;
    let pure1 = FourMomentum::from_direction([T::one(), T::zero(), T::zero()], p.energy())?;
    let zt = z_longitudinal(&pure1)?;
    let out = transport(&zt, &path);
    extract_phase(&zt, &out)
}

/// Scales a state by a pure phase; test helper for extract_phase and the
/// suites.
pub fn with_phase<T: Scalar>(z: &Bivector<T>, phase: T) -> Bivector<T> {
    Bivector::from_parts(
        z.components().scaled(Complex::from_polar(T::one(), phase)),
        z.helicity(),
        z.basis(),
        *z.momentum(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarization::z_axis;

    type P = FourMomentum<f64>;

    fn p3221() -> P {
        P::physical(3.0, 2.0, 2.0, 1.0).unwrap()
    }

    #[test]
    fn empty_path_is_identity() {
        let seed = seed_bivector::<f64>(Axis::X1, Helicity::Plus);
        let out = transport(&seed, &[]);
        assert!(out.components().approx_eq(seed.components(), 0.0));
    }

    #[test]
    fn forward_path_reproduces_z2() {
        let p = p3221();
        let seed = seed_bivector::<f64>(Axis::X1, Helicity::Plus);
        let out = transport(&seed, &forward_path(&p).unwrap());
        let z2 = z_axis(&p, Axis::X2, Helicity::Plus).unwrap();
        assert!(out.components().approx_eq(z2.components(), 1e-12));
        // The transported momentum label follows the arcs onto the
        // direction of p (the seed carries unit energy).
        for k in 0..3 {
            let got = out.momentum().spatial()[k] / out.momentum().energy();
            assert!((got - p.spatial()[k] / p.energy()).abs() < 1e-12);
        }
    }

    #[test]
    fn transport_then_inverse_returns_input() {
        let p = p3221();
        let path = forward_path(&p).unwrap();
        let back: Vec<_> = path.iter().rev().map(|s| s.inverse()).collect();
        let seed = seed_bivector::<f64>(Axis::X2, Helicity::Minus);
        let out = transport(&transport(&seed, &path), &back);
        assert!(out.components().approx_eq(seed.components(), 1e-12));
    }

    #[test]
    fn transport_preserves_norm() {
        let p = p3221();
        let path = loop_path(&p).unwrap();
        let mut z = seed_bivector::<f64>(Axis::X1, Helicity::Plus);
        for _ in 0..3 {
            z = transport(&z, &path);
            assert!((z.norm_sq() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn loop_phase_spot_value() {
        let want = (1.0f64 / 3.0).atan();
        let plus = loop_phase(&p3221(), Helicity::Plus).unwrap();
        assert!((plus.phase - want).abs() < 1e-12);
        assert!(plus.residual < 1e-12);
        let minus = loop_phase(&p3221(), Helicity::Minus).unwrap();
        assert!((minus.phase + want).abs() < 1e-12);
        assert!((plus.phase - 0.3217505543966422).abs() < 1e-10);
    }

    #[test]
    fn loop_phase_vanishes_without_both_transverse_components() {
        let p = P::physical(13.0f64.sqrt(), 2.0, 0.0, 3.0).unwrap();
        let r = loop_phase(&p, Helicity::Plus).unwrap();
        assert!(r.phase.abs() < 1e-12);
        let q = P::physical(13.0f64.sqrt(), 2.0, 3.0, 0.0).unwrap();
        assert!(loop_phase(&q, Helicity::Plus).unwrap().phase.abs() < 1e-12);
    }

    #[test]
    fn loop_phase_rejects_degenerate() {
        // Pure 2-motion: forward construction undefined.
        let p = P::physical(1.0, 0.0, 1.0, 0.0).unwrap();
        assert!(matches!(
            loop_phase(&p, Helicity::Plus),
            Err(Error::DegenerateDirection { .. })
        ));
    }

    #[test]
    fn closed_form_values() {
        let (v, flag) = closed_form_phase(&p3221());
        assert!((v - (1.0f64 / 3.0).atan()).abs() < 1e-15);
        assert!(!flag);
        let (lim, at_limit) = closed_form_phase(&P::new(3.0, 0.0, 2.0, 1.0));
        assert!(at_limit);
        assert!((lim - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let (z, f2) = closed_form_phase(&P::new(1.0, 0.0, 1.0, 0.0));
        assert!(z == 0.0 && !f2);
    }

    #[test]
    fn spherical_and_cartesian_forms_agree() {
        let (theta, phi) = (0.7, 0.4);
        let p = P::from_spherical(2.3, theta, phi).unwrap();
        let (cart, _) = closed_form_phase(&p);
        let sph = spherical_form_phase(theta, phi);
        assert!((cart - sph).abs() < 1e-14);
        assert!(spherical_form_phase(std::f64::consts::FRAC_PI_2, 1.1).abs() < 1e-15);
    }

    #[test]
    fn solid_angle_small_theta() {
        let (phase, area) = solid_angle_check(0.01f64, 0.5);
        assert!((phase / area - 1.0).abs() <= 1e-3, "{} {}", phase, area);
        // Reversing the traversal flips the sign of the area.
        let pts = rectangle_boundary(0.01f64, 0.5, 600);
        let fwd = spherical_polygon_area(&pts);
        let rev_pts: Vec<_> = pts.iter().rev().copied().collect();
        let rev = spherical_polygon_area(&rev_pts);
        assert!((fwd + rev).abs() < 1e-12);
        // Equatorial loop: no phase, no area.
        let (p0, a0) = solid_angle_check(std::f64::consts::FRAC_PI_2, 0.8);
        assert!(p0.abs() < 1e-15);
        assert!(a0.abs() < 1e-10);
    }

    #[test]
    fn solid_angle_ratio_improves_toward_small_theta() {
        let (p1, a1) = solid_angle_check(0.1f64, 0.5);
        let (p2, a2) = solid_angle_check(0.01f64, 0.5);
        assert!((p2 / a2 - 1.0).abs() < (p1 / a1 - 1.0).abs());
    }

    #[test]
    fn spin_n_scaling() {
        let p = p3221();
        let base = loop_phase(&p, Helicity::Plus).unwrap().phase;
        assert!((spin_n_phase(&p, 1).unwrap() - base).abs() < 1e-12);
        let two = spin_n_phase(&p, 2).unwrap();
        assert!((two - 2.0 * base).abs() < 1e-9);
        assert!((two - 0.6435011087932844).abs() < 1e-9);
        let three = spin_n_phase(&p, 3).unwrap();
        assert!((three - 3.0 * base).abs() < 1e-9);
        assert!((spin_n_phase(&p, 4).unwrap() - 4.0 * base).abs() < 1e-9);
        assert!(matches!(
            spin_n_phase(&p, 0),
            Err(Error::DimensionLimit { .. })
        ));
        assert!(matches!(
            spin_n_phase(&p, 5),
            Err(Error::DimensionLimit { .. })
        ));
    }

    #[test]
    fn extract_phase_conventions() {
        let z = z_axis(&p3221(), Axis::X2, Helicity::Plus).unwrap();
        let (phase, residual) = extract_phase(&z, &z).unwrap();
        assert!(phase.abs() < 1e-15 && residual < 1e-15);
        let rotated = with_phase(&z, std::f64::consts::PI / 5.0);
        let (phase, residual) = extract_phase(&z, &rotated).unwrap();
        assert!((phase - std::f64::consts::PI / 5.0).abs() < 1e-14);
        assert!(residual < 1e-14);
        let zt = z_longitudinal(&p3221()).unwrap();
        assert!(matches!(
            extract_phase(&z, &zt),
            Err(Error::ZeroOverlap { .. })
        ));
    }

    #[test]
    fn longitudinal_transport_has_no_phase() {
        let (phase, residual) = longitudinal_control(&p3221()).unwrap();
        assert!(phase.abs() < 1e-12);
        assert!(residual < 1e-12);
    }

    #[test]
    fn path_reversal_negates_phase() {
        let p = p3221();
        let path = loop_path(&p).unwrap();
        let back: Vec<_> = path.iter().rev().map(|s| s.inverse()).collect();
        let seed = seed_bivector::<f64>(Axis::X1, Helicity::Plus);
        let out = transport(&seed, &back);
        let (phase, _) = extract_phase(&seed, &out).unwrap();
        let fwd = loop_phase(&p, Helicity::Plus).unwrap().phase;
        assert!((phase + fwd).abs() < 1e-12);
    }
}
