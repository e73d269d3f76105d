//! Bilinear currents, stress-energy elements and their transformation laws.

use num_complex::Complex;

use crate::algebra::{chi, exp_spin, rotation_operator, Tensor4};
use crate::axis::{epsilon, Axis};
use crate::error::{Error, Result};
use crate::polarization::{projector_negative, projector_positive, Bivector, Helicity};
use crate::scalar::{cr, lit, Scalar};

/// A generalized-velocity current: time and spatial components in units of
/// p^mu / p0. `imag_residual` records the largest imaginary part discarded
/// when storing the real components; it vanishes for free (Hermitian)
/// fields.
#[derive(Clone, Copy, Debug)]
pub struct CurrentTensor<T> {
    pub time_component: T,
    pub spatial: [T; 3],
    pub full_tensor: Option<[[T; 4]; 4]>,
    pub imag_residual: T,
}

impl<T: Scalar> CurrentTensor<T> {
    fn from_complex(components: [Complex<T>; 4]) -> Self {
        let mut imag = T::zero();
        for c_ in &components {
            imag = imag.max(c_.im.abs());
        }
        Self {
            time_component: components[0].re,
            spatial: [components[1].re, components[2].re, components[3].re],
            full_tensor: None,
            imag_residual: imag,
        }
    }

    /// time^2 - |spatial|^2; zero for currents of null momenta.
    pub fn null_residual(&self) -> T {
        let [x, y, z] = self.spatial;
        self.time_component * self.time_component - x * x - y * y - z * z
    }
}

/// Current bilinear conj(z) chi^mu z; equals p^mu / p0 for the
/// positive-helicity z_S and z_T constructions.
pub fn bilinear_current<T: Scalar>(z: &Bivector<T>, mu: usize) -> Result<Complex<T>> {
    let op = chi::<T>(mu)?;
    Ok(z.components().dot_conj(&op.mul_vec(z.components())))
}

/// All four current components of a state.
pub fn current_vector<T: Scalar>(z: &Bivector<T>) -> CurrentTensor<T> {
    let mut comps = [Complex::new(T::zero(), T::zero()); 4];
    for (mu, slot) in comps.iter_mut().enumerate() {
        *slot = bilinear_current(z, mu).expect("mu in range");
    }
    CurrentTensor::from_complex(comps)
}

/// Stress-energy bilinear conj(z) chi^alpha P chi^beta z with the on-shell
/// projector of the state's helicity inserted between the factors; equals
/// p^alpha p^beta / p0^2 for positive-helicity z_S and z_T.
///
/// The bare product chi^alpha chi^beta cannot reproduce the stress-energy
/// tensor (the Clifford relation forces its diagonal to unity); the mixed
/// z_S/z_T bilinears vanish, so projecting the intermediate contraction
/// onto the solution space recovers the tensor exactly.
pub fn stress_energy_bilinear<T: Scalar>(
    z: &Bivector<T>,
    alpha: usize,
    beta: usize,
) -> Result<Complex<T>> {
    let left = chi::<T>(alpha)?;
    let right = chi::<T>(beta)?;
    let projector = match z.helicity() {
        Helicity::Plus => projector_positive(z.momentum())?,
        Helicity::Minus => projector_negative(z.momentum())?,
    };
    let v = (left * projector * right).mul_vec(z.components());
    Ok(z.components().dot_conj(&v))
}

/// Momentum and energy currents assembled from independent field and
/// adjoint amplitudes (all real triples). With the Hermitian free-field
/// constraint (daggered amplitudes equal to the plain ones) the imaginary
/// parts cancel and the classical expressions emerge:
/// energy (b.b + e.e)/(2 p0), momentum (+/-) eps_ijk (e_j b_k - e_k b_j)/(2 p0).
pub fn field_currents<T: Scalar>(
    e: [T; 3],
    b: [T; 3],
    e_dag: [T; 3],
    b_dag: [T; 3],
    helicity: Helicity,
    p0: T,
) -> Result<CurrentTensor<T>> {
    if p0 <= T::zero() {
        return Err(Error::NonPositiveEnergy {
            p0: p0.to_f64().unwrap_or(f64::NAN),
        });
    }
    let sign = helicity.sign::<T>();
    let two_p0 = lit::<T>(2.0) * p0;
    let mut comps = [Complex::new(T::zero(), T::zero()); 4];
    // Energy: (b^.b + e^.e + sign * i (e^.b - b^.e)) / (2 p0).
    let mut bb = T::zero();
    let mut ee = T::zero();
    let mut eb = T::zero();
    let mut be = T::zero();
    for j in 0..3 {
        bb = bb + b_dag[j] * b[j];
        ee = ee + e_dag[j] * e[j];
        eb = eb + e_dag[j] * b[j];
        be = be + b_dag[j] * e[j];
    }
    comps[0] = Complex::new(bb + ee, sign * (eb - be)) / cr(two_p0);
    // Momentum: sign * eps_ijk (e^_j b_k - b^_j e_k - sign * i (b^_j b_k + e^_j e_k)) / (2 p0).
    for i in 1..=3usize {
        let mut re = T::zero();
        let mut im = T::zero();
        for j in 1..=3usize {
            for k in 1..=3usize {
                let eps = lit::<T>(epsilon(i, j, k) as f64);
                re = re + eps * (e_dag[j - 1] * b[k - 1] - b_dag[j - 1] * e[k - 1]);
                im = im - eps * (b_dag[j - 1] * b[k - 1] + e_dag[j - 1] * e[k - 1]);
            }
        }
        comps[i] = Complex::new(sign * re, sign * sign * im) / cr(two_p0);
    }
    Ok(CurrentTensor::from_complex(comps))
}

/// Spatial stress-energy element from field and adjoint amplitudes,
/// evaluated exactly as written (no energy normalization):
/// delta_lm (b^.b + e^.e +/- i(e^.b - b^.e))
///   - (b^_l b_m + b^_m b_l + e^_l e_m + e^_m e_l
///   +/- i (e^_l b_m - b^_m e_l + e^_m b_l - b^_l e_m)).
pub fn stress_energy_field<T: Scalar>(
    e: [T; 3],
    b: [T; 3],
    e_dag: [T; 3],
    b_dag: [T; 3],
    helicity: Helicity,
    l: usize,
    m: usize,
) -> Result<Complex<T>> {
    for (what, idx) in [("stress index l", l), ("stress index m", m)] {
        if !(1..=3).contains(&idx) {
            return Err(Error::IndexOutOfRange { what, index: idx });
        }
    }
    let sign = helicity.sign::<T>();
    let (l, m) = (l - 1, m - 1);
    let mut bb = T::zero();
    let mut ee = T::zero();
    let mut eb = T::zero();
    let mut be = T::zero();
    for j in 0..3 {
        bb = bb + b_dag[j] * b[j];
        ee = ee + e_dag[j] * e[j];
        eb = eb + e_dag[j] * b[j];
        be = be + b_dag[j] * e[j];
    }
    let delta = if l == m { T::one() } else { T::zero() };
    let iso = Complex::new(delta * (bb + ee), delta * sign * (eb - be));
    let overlap_re = b_dag[l] * b[m] + b_dag[m] * b[l] + e_dag[l] * e[m] + e_dag[m] * e[l];
    let overlap_im = sign * (e_dag[l] * b[m] - b_dag[m] * e[l] + e_dag[m] * b[l] - b_dag[l] * e[m]);
    Ok(iso - Complex::new(overlap_re, overlap_im))
}

/// Full current tensor of a state: the generalized-velocity components
/// plus the 4x4 stress-energy array T^{alpha beta} = p^a p^b / p0^2.
pub fn stress_energy_tensor<T: Scalar>(z: &Bivector<T>) -> Result<CurrentTensor<T>> {
    let mut current = current_vector(z);
    let mut tensor = [[T::zero(); 4]; 4];
    let mut imag = current.imag_residual;
    for (alpha, row) in tensor.iter_mut().enumerate() {
        for (beta, slot) in row.iter_mut().enumerate() {
            let v = stress_energy_bilinear(z, alpha, beta)?;
            *slot = v.re;
            imag = imag.max(v.im.abs());
        }
    }
    current.full_tensor = Some(tensor);
    current.imag_residual = imag;
    Ok(current)
}

/// Kind of transformation applied to a state before re-evaluating its
/// current.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Bivector boost: congruence with e^{kappa S} on both sides, a
    /// reflection-type transformation. The current follows the actively
    /// boosted momentum (rapidity kappa along the axis) up to the Doppler
    /// scale carried by the time component.
    Boost,
    /// Rotation: congruence with the unitary rotation operator. The
    /// current's spatial part rotates by the same SO(3) rotation applied
    /// to the momentum.
    Rotation,
}

/// Current of the transformed state.
pub fn transform_current<T: Scalar>(
    z: &Bivector<T>,
    kind: Transform,
    axis: Axis,
    kappa: T,
) -> CurrentTensor<T> {
    let op: Tensor4<T> = match kind {
        Transform::Boost => exp_spin(axis, kappa),
        Transform::Rotation => rotation_operator(axis, kappa),
    };
    let w = op.mul_vec(z.components());
    let mut comps = [Complex::new(T::zero(), T::zero()); 4];
    for (mu, slot) in comps.iter_mut().enumerate() {
        let c_ = chi::<T>(mu).expect("mu in range");
        *slot = w.dot_conj(&c_.mul_vec(&w));
    }
    CurrentTensor::from_complex(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::momentum::FourMomentum;
    use crate::polarization::{decompose, z_longitudinal, z_symmetric};

    type P = FourMomentum<f64>;

    fn p3221() -> P {
        P::physical(3.0, 2.0, 2.0, 1.0).unwrap()
    }

    #[test]
    fn generalized_velocity_spot_values() {
        let zs = z_symmetric(&p3221(), Helicity::Plus).unwrap();
        let zt = z_longitudinal(&p3221()).unwrap();
        assert!((bilinear_current(&zs, 0).unwrap() - cr(1.0)).norm() < 1e-14);
        assert!((bilinear_current(&zs, 1).unwrap() - cr(2.0 / 3.0)).norm() < 1e-14);
        assert!((bilinear_current(&zt, 3).unwrap() - cr(1.0 / 3.0)).norm() < 1e-14);
        for mu in 0..4 {
            let want = p3221().get(mu) / 3.0;
            assert!((bilinear_current(&zs, mu).unwrap() - cr(want)).norm() < 1e-14);
            assert!((bilinear_current(&zt, mu).unwrap() - cr(want)).norm() < 1e-14);
        }
        assert!(bilinear_current(&zs, 4).is_err());
    }

    #[test]
    fn current_is_null() {
        let zs = z_symmetric(&p3221(), Helicity::Plus).unwrap();
        let j = current_vector(&zs);
        assert!(j.null_residual().abs() < 1e-12);
        assert!(j.imag_residual < 1e-14);
        assert!((j.time_component - 1.0).abs() < 1e-14);
    }

    #[test]
    fn stress_energy_identity() {
        let p = p3221();
        let zs = z_symmetric(&p, Helicity::Plus).unwrap();
        let zt = z_longitudinal(&p).unwrap();
        assert!((stress_energy_bilinear(&zs, 0, 0).unwrap() - cr(1.0)).norm() < 1e-14);
        assert!((stress_energy_bilinear(&zs, 1, 2).unwrap() - cr(4.0 / 9.0)).norm() < 1e-14);
        let mut diag_sum = Complex::new(0.0, 0.0);
        for a in 1..=3 {
            diag_sum += stress_energy_bilinear(&zs, a, a).unwrap();
        }
        assert!((diag_sum - cr(1.0)).norm() < 1e-13);
        for alpha in 0..4 {
            for beta in 0..4 {
                let want = p.get(alpha) * p.get(beta) / 9.0;
                for z in [&zs, &zt] {
                    let got = stress_energy_bilinear(z, alpha, beta).unwrap();
                    assert!((got - cr(want)).norm() < 1e-13, "{} {}", alpha, beta);
                }
            }
        }
    }

    #[test]
    fn full_tensor_rows_match_current() {
        let p = p3221();
        let zs = z_symmetric(&p, Helicity::Plus).unwrap();
        let t = stress_energy_tensor(&zs).unwrap();
        let full = t.full_tensor.unwrap();
        assert!(t.imag_residual < 1e-13);
        for beta in 0..4 {
            // Time row is the generalized velocity itself.
            let want = p.get(beta) / p.energy();
            assert!((full[0][beta] - want).abs() < 1e-13);
        }
        for alpha in 0..4 {
            for beta in 0..4 {
                let want = p.get(alpha) * p.get(beta) / (p.energy() * p.energy());
                assert!((full[alpha][beta] - want).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn field_currents_classical_reduction() {
        let e = [1.0f64, 0.0, 0.0];
        let b = [0.0f64, 1.0, 0.0];
        let j = field_currents(e, b, e, b, Helicity::Plus, 1.0).unwrap();
        assert!((j.time_component - 1.0).abs() < 1e-15);
        // Unit flux along the propagation direction e x b (axis 3 here);
        // the reduced formula gives eps_ijk (e_j b_k - e_k b_j)/2 = (e x b)_i.
        assert!(j.spatial[0].abs() < 1e-15);
        assert!(j.spatial[1].abs() < 1e-15);
        assert!((j.spatial[2] - 1.0).abs() < 1e-15);
        assert!(j.imag_residual < 1e-15);
        let zero =
            field_currents([0.0; 3], [0.0; 3], [0.0; 3], [0.0; 3], Helicity::Plus, 2.0).unwrap();
        assert!(zero.time_component == 0.0 && zero.spatial == [0.0; 3]);
        assert!(field_currents(e, b, e, b, Helicity::Plus, 0.0).is_err());
    }

    #[test]
    fn field_currents_match_bilinears() {
        // Amplitudes from the decomposition, scaled by sqrt(2 p0), feed the
        // field formulas and reproduce the momentum-space bilinears.
        let p = p3221();
        let zs = z_symmetric(&p, Helicity::Plus).unwrap();
        let f = decompose(&zs).unwrap();
        let s = (2.0 * p.energy()).sqrt();
        let e = [f.e_part[0] * s, f.e_part[1] * s, f.e_part[2] * s];
        let b = [f.b_part[0] * s, f.b_part[1] * s, f.b_part[2] * s];
        let j = field_currents(e, b, e, b, Helicity::Plus, p.energy()).unwrap();
        assert!((j.time_component - 1.0).abs() < 1e-12);
        for k in 0..3 {
            let want = bilinear_current(&zs, k + 1).unwrap().re;
            assert!((j.spatial[k] - want).abs() < 1e-12);
        }
        assert!(j.imag_residual < 1e-12);
    }

    #[test]
    fn stress_energy_field_spot_values() {
        let e = [1.0f64, 0.0, 0.0];
        let b = [0.0f64, 1.0, 0.0];
        let d33 = stress_energy_field(e, b, e, b, Helicity::Plus, 3, 3).unwrap();
        assert!((d33 - cr(2.0)).norm() < 1e-15);
        // Off-diagonal with disjoint support: only the iso term vanishes and
        // the cross terms cancel under the Hermitian constraint.
        let d12 = stress_energy_field(e, b, e, b, Helicity::Plus, 1, 2).unwrap();
        assert!(d12.im.abs() < 1e-15);
        let zero =
            stress_energy_field([0.0; 3], [0.0; 3], [0.0; 3], [0.0; 3], Helicity::Plus, 2, 1)
                .unwrap();
        assert!(zero.norm() == 0.0);
        assert!(stress_energy_field(e, b, e, b, Helicity::Plus, 0, 2).is_err());
        // Direct substitution check for a non-trivial off-diagonal element.
        let e2 = [0.4, -1.1, 0.3];
        let b2 = [0.9, 0.2, -0.5];
        let got = stress_energy_field(e2, b2, e2, b2, Helicity::Plus, 1, 2).unwrap();
        let want = -(b2[0] * b2[1] + b2[1] * b2[0] + e2[0] * e2[1] + e2[1] * e2[0]);
        assert!((got - cr(want)).norm() < 1e-14);
    }

    #[test]
    fn transform_identity_at_zero() {
        let zs = z_symmetric(&p3221(), Helicity::Plus).unwrap();
        let base = current_vector(&zs);
        for kind in [Transform::Boost, Transform::Rotation] {
            let j = transform_current(&zs, kind, Axis::X2, 0.0);
            assert!((j.time_component - base.time_component).abs() < 1e-14);
            for k in 0..3 {
                assert!((j.spatial[k] - base.spatial[k]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn rotation_transforms_current_with_momentum() {
        let p = p3221();
        let zs = z_symmetric(&p, Helicity::Plus).unwrap();
        let theta = std::f64::consts::FRAC_PI_2;
        let j = transform_current(&zs, Transform::Rotation, Axis::X3, theta);
        let q = p.rotated(Axis::X3, theta);
        assert!((j.time_component - 1.0).abs() < 1e-13);
        for k in 0..3 {
            assert!((j.spatial[k] - q.get(k + 1) / q.energy()).abs() < 1e-12);
        }
        assert!(j.imag_residual < 1e-13);
    }

    #[test]
    fn boost_transforms_current_with_momentum_up_to_doppler() {
        let p = p3221();
        let zs = z_symmetric(&p, Helicity::Plus).unwrap();
        let kappa = 0.5;
        for axis in Axis::ALL {
            let j = transform_current(&zs, Transform::Boost, axis, kappa);
            let q = p.boosted(axis, kappa);
            // Proportional to the boosted generalized velocity after
            // renormalizing by the returned time component.
            for k in 0..3 {
                let got = j.spatial[k] / j.time_component;
                let want = q.get(k + 1) / q.energy();
                assert!((got - want).abs() < 1e-12, "axis {:?}", axis);
            }
            assert!(j.null_residual().abs() < 1e-11);
        }
    }
}
