//! Executable verification suites: every algebraic identity as a named
//! check with an explicit tolerance. The CLI `verify` command and the
//! acceptance tests drive these.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    axis_cycle_operator, boost_generator, chi_spatial, contravariant_contraction,
    covariant_contraction, direct_sum_hamiltonian, exp_boost, exp_spin, field_operator,
    momentum_contraction, reflection_conjugation, rotation_operator, seed_components,
    spin_generator, vector_seed_components, CycleDirection, Reflection, Tensor4,
};
use crate::axis::{epsilon, Axis};
use crate::currents::{
    bilinear_current, current_vector, field_currents, stress_energy_bilinear, transform_current,
    Transform,
};
use crate::holonomy::{
    closed_form_phase, extract_phase, longitudinal_control, loop_path, loop_phase,
    solid_angle_check, spherical_form_phase, spin_n_phase, transport,
};
use crate::linalg::hermitian_eigenvalues;
use crate::momentum::FourMomentum;
use crate::oracles::expm_series;
use crate::polarization::{
    amplitude_symmetries, decompose, inner_product, projection_sum, projector_negative,
    projector_positive, proportional_by_phase, reversed_order_bivector, seed_bivector, z_axis,
    z_axis_by_rotations, z_longitudinal, z_longitudinal_by_rotations, z_symmetric,
    z_symmetric_by_sum, zb_closed_form, ze_closed_form, Bivector, Helicity,
};
use crate::sampling::{
    random_loop_momentum, random_null_momentum, random_positive_quadrant_momentum,
};
use crate::scalar::cr;
use crate::wavepacket::{
    bivector_momentum, bivector_momentum_quadrature, envelope_derivative_integral,
    envelope_derivative_integral_quadrature, fourier_spectrum_check, interference_closed_form,
    interference_term, superposition_currents, superposition_vector_potential_currents,
    vector_potential_momentum, vector_potential_momentum_quadrature, GaussianEnvelope,
};

/// Check tolerances: exact arithmetic, transcendental/eigen-solver paths,
/// and quadrature comparisons.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub exact: f64,
    pub transcendental: f64,
    pub quadrature: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            exact: 1e-14,
            transcendental: 1e-12,
            quadrature: 1e-8,
        }
    }
}

/// Configuration of a suite run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides each suite's default random-sample count.
    pub samples: Option<usize>,
    pub tol: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            samples: None,
            tol: Tolerances::default(),
        }
    }
}

impl SuiteConfig {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

/// One executed check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn close(name: impl Into<String>, expected: f64, actual: f64, tolerance: f64) -> Self {
        let pass = actual.is_finite() && (expected - actual).abs() <= tolerance;
        Self {
            name: name.into(),
            expected,
            actual,
            tolerance,
            pass,
        }
    }

    pub fn residual(name: impl Into<String>, actual: f64, tolerance: f64) -> Self {
        Self::close(name, 0.0, actual, tolerance)
    }

    /// Passes when `actual` is at least `floor`; for signals that must be
    /// present rather than absent.
    pub fn at_least(name: impl Into<String>, floor: f64, actual: f64) -> Self {
        Self {
            name: name.into(),
            expected: floor,
            actual,
            tolerance: 0.0,
            pass: actual.is_finite() && actual >= floor,
        }
    }
}

pub fn overall_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

/// Suite selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Algebra,
    Polarization,
    Holonomy,
    Currents,
    Wavepacket,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "algebra" => Ok(Suite::Algebra),
            "polarization" => Ok(Suite::Polarization),
            "holonomy" => Ok(Suite::Holonomy),
            "currents" => Ok(Suite::Currents),
            "wavepacket" => Ok(Suite::Wavepacket),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

/// Runs the selected suite(s).
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<Check> {
    match suite {
        Suite::All => {
            let mut all = algebra_suite(cfg);
            all.extend(polarization_suite(cfg));
            all.extend(holonomy_suite(cfg));
            all.extend(currents_suite(cfg));
            all.extend(wavepacket_suite(cfg));
            all
        }
        Suite::Algebra => algebra_suite(cfg),
        Suite::Polarization => polarization_suite(cfg),
        Suite::Holonomy => holonomy_suite(cfg),
        Suite::Currents => currents_suite(cfg),
        Suite::Wavepacket => wavepacket_suite(cfg),
    }
}

fn p3221() -> FourMomentum<f64> {
    FourMomentum::physical(3.0, 2.0, 2.0, 1.0).expect("reference momentum")
}

/// Operator-algebra identities, exponentials and the direct-sum structure.
pub fn algebra_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut rng = cfg.rng();
    let tol = cfg.tol;
    let mut checks = Vec::new();
    let id = Tensor4::<f64>::identity();

    let mut clifford = 0.0f64;
    let mut quaternion = 0.0f64;
    for i in Axis::ALL {
        for j in Axis::ALL {
            let anti = chi_spatial::<f64>(i) * chi_spatial(j) + chi_spatial(j) * chi_spatial(i);
            let delta = if i == j { 2.0 } else { 0.0 };
            clifford = clifford.max((anti - id.scaled(cr(delta))).max_abs());
            let comm = chi_spatial::<f64>(i) * chi_spatial(j) - chi_spatial(j) * chi_spatial(i);
            let mut rhs = Tensor4::zero();
            for k in Axis::ALL {
                let e = epsilon(i.index(), j.index(), k.index()) as f64;
                rhs = rhs + chi_spatial::<f64>(k).scaled(num_complex::Complex::new(0.0, 2.0 * e));
            }
            quaternion = quaternion.max((comm - rhs).max_abs());
        }
    }
    checks.push(Check::residual(
        "algebra.clifford_relation",
        clifford,
        tol.exact,
    ));
    checks.push(Check::residual(
        "algebra.quaternion_lie_algebra",
        quaternion,
        tol.exact,
    ));

    let mut commutators = 0.0f64;
    let mut completeness = 0.0f64;
    for i in Axis::ALL {
        for j in Axis::ALL {
            let mut s_rhs = Tensor4::zero();
            let mut k_rhs = Tensor4::zero();
            for k in Axis::ALL {
                let e = epsilon(i.index(), j.index(), k.index()) as f64;
                let phase = num_complex::Complex::new(0.0, e);
                s_rhs = s_rhs + spin_generator::<f64>(k).scaled(phase);
                k_rhs = k_rhs + boost_generator::<f64>(k).scaled(phase);
            }
            let ss = spin_generator::<f64>(i) * spin_generator(j)
                - spin_generator::<f64>(j) * spin_generator(i);
            let kk = boost_generator::<f64>(i) * boost_generator(j)
                - boost_generator::<f64>(j) * boost_generator(i);
            let sk = spin_generator::<f64>(i) * boost_generator(j)
                - boost_generator::<f64>(j) * spin_generator(i);
            commutators = commutators
                .max((ss - s_rhs).max_abs())
                .max((kk - s_rhs).max_abs())
                .max((sk - k_rhs).max_abs());
        }
        let s = spin_generator::<f64>(i);
        let k = boost_generator::<f64>(i);
        completeness = completeness.max((s * s + k * k - id).max_abs());
    }
    checks.push(Check::residual(
        "algebra.generator_commutators",
        commutators,
        tol.exact,
    ));
    checks.push(Check::residual(
        "algebra.completeness_s2_plus_k2",
        completeness,
        tol.exact,
    ));

    let kappa_count = cfg.count(20);
    let mut exp_residual = 0.0f64;
    let mut unitarity = 0.0f64;
    for _ in 0..kappa_count {
        let kappa = rng.gen_range(-3.0..3.0);
        let axis = Axis::ALL[rng.gen_range(0..3)];
        let series_s = expm_series(&spin_generator::<f64>(axis).scaled(cr(kappa)));
        let series_k = expm_series(&boost_generator::<f64>(axis).scaled(cr(kappa)));
        exp_residual = exp_residual
            .max((exp_spin::<f64>(axis, kappa) - series_s).max_abs())
            .max((exp_boost::<f64>(axis, kappa) - series_k).max_abs());
        let theta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let u = rotation_operator::<f64>(axis, theta);
        unitarity = unitarity.max((u.adjoint() * u - id).max_abs());
    }
    checks.push(Check::residual(
        "algebra.closed_form_exponentials_vs_series",
        exp_residual,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "algebra.rotation_unitarity",
        unitarity,
        tol.transcendental,
    ));

    let forward = axis_cycle_operator::<f64>(CycleDirection::Forward);
    checks.push(Check::residual(
        "algebra.axis_cycle_cubed_is_identity",
        (forward.pow(3) - id).max_abs(),
        tol.transcendental,
    ));
    let mut cycle_map = 0.0f64;
    for a in Axis::ALL {
        cycle_map = cycle_map
            .max(
                (forward.mul_vec(&seed_components::<f64>(a)) - seed_components(a.next())).max_abs(),
            )
            .max(
                (forward.mul_vec(&vector_seed_components::<f64>(a))
                    - vector_seed_components(a.next()))
                .max_abs(),
            );
    }
    checks.push(Check::residual(
        "algebra.axis_cycle_advances_seeds",
        cycle_map,
        tol.transcendental,
    ));
    let reverse = axis_cycle_operator::<f64>(CycleDirection::Reverse);
    checks.push(Check::residual(
        "algebra.axis_cycle_reverse_is_inverse",
        (forward * reverse - id).max_abs(),
        tol.transcendental,
    ));

    let spectrum_count = cfg.count(50);
    let mut spectrum = 0.0f64;
    for _ in 0..spectrum_count {
        let p: FourMomentum<f64> = random_null_momentum(&mut rng);
        let eig = hermitian_eigenvalues(&momentum_contraction(&p));
        let p0 = p.energy();
        let want = [-p0, -p0, p0, p0];
        for (g, w) in eig.iter().zip(want.iter()) {
            spectrum = spectrum.max((g - w).abs() / p0);
        }
    }
    checks.push(Check::residual(
        "algebra.hamiltonian_spectrum_doubly_degenerate",
        spectrum,
        tol.transcendental,
    ));

    let p = p3221();
    let h8 = direct_sum_hamiltonian(&p);
    let eig8 = hermitian_eigenvalues(h8.matrix());
    let mut eight = 0.0f64;
    for k in 0..4 {
        eight = eight
            .max((eig8[k] + 3.0).abs())
            .max((eig8[k + 4] - 3.0).abs());
    }
    checks.push(Check::residual(
        "algebra.direct_sum_spectrum_quadruply_degenerate",
        eight,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "algebra.direct_sum_trace",
        h8.matrix().trace().norm(),
        tol.exact,
    ));

    let t_reflect = reflection_conjugation(Reflection::Time, &p);
    let s_reflect = reflection_conjugation(Reflection::Space, &p);
    let t_target = field_operator(&p.time_reversed());
    let s_target = field_operator(&p.space_reversed());
    checks.push(Check::residual(
        "algebra.time_reflection_conjugation",
        (*t_reflect.matrix() - *t_target.matrix()).max_abs(),
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "algebra.space_reflection_conjugation",
        (*s_reflect.matrix() - *s_target.matrix()).max_abs(),
        tol.transcendental,
    ));

    let psi_plus = seed_components::<f64>(Axis::X1);
    let p1 = FourMomentum::physical(1.0, 1.0, 0.0, 0.0).expect("pure 1-motion");
    checks.push(Check::residual(
        "algebra.covariant_annihilates_seed",
        covariant_contraction(&p1).mul_vec(&psi_plus).max_abs(),
        tol.exact,
    ));
    checks.push(Check::residual(
        "algebra.contravariant_annihilates_conjugate_seed",
        contravariant_contraction(&p1)
            .mul_vec(&psi_plus.conjugated())
            .max_abs(),
        tol.exact,
    ));
    checks
}

fn all_transverse(p: &FourMomentum<f64>, h: Helicity) -> Vec<Bivector<f64>> {
    let mut v = Vec::with_capacity(4);
    for j in Axis::ALL {
        v.push(z_axis(p, j, h).expect("non-degenerate sample"));
    }
    v.push(z_symmetric(p, h).expect("non-degenerate sample"));
    v
}

/// Polarization constructions: equations, norms, orthogonality,
/// projections and transformation behavior.
pub fn polarization_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut rng = cfg.rng();
    let tol = cfg.tol;
    let mut checks = Vec::new();
    let n = cfg.count(100);

    let mut equation = 0.0f64;
    let mut helicity_eig = 0.0f64;
    let mut unit_norm = 0.0f64;
    let mut transversality = 0.0f64;
    let mut orthogonality = 0.0f64;
    let mut projection = 0.0f64;
    let mut proportionality_fail = 0usize;
    let mut rotation_cov = 0.0f64;
    let mut boost_eq = 0.0f64;
    let mut boost_scale_dev = 0.0f64;
    let mut zt_boost = 0.0f64;
    let mut amplitude_props = 0.0f64;
    let mut projector_ids = 0.0f64;
    let mut symmetry = 0.0f64;

    for _ in 0..n {
        let p: FourMomentum<f64> = random_null_momentum(&mut rng);
        let p0 = p.energy();
        let zs = z_symmetric(&p, Helicity::Plus).expect("sampled momentum");
        let zt = z_longitudinal(&p).expect("sampled momentum");

        for h in [Helicity::Plus, Helicity::Minus] {
            for z in all_transverse(&p, h) {
                equation = equation.max(z.equation_residual() / p0);
                helicity_eig = helicity_eig.max(z.helicity_residual());
                unit_norm = unit_norm.max((z.norm_sq() - 1.0).abs());
                transversality = transversality
                    .max(z.component(0).norm())
                    .max(z.components().dot(z.components()).norm());
            }
        }
        equation = equation.max(zt.equation_residual() / p0);
        unit_norm = unit_norm.max((zt.norm_sq() - 1.0).abs());

        // Orthogonality table.
        orthogonality = orthogonality
            .max((inner_product(&zt, &zt) - cr(1.0)).norm())
            .max((inner_product(&zs, &zs) - cr(1.0)).norm())
            .max(inner_product(&zt, &zs).norm())
            .max(inner_product(&zs, &zt).norm())
            .max(inner_product(&zs, &zs.conjugated()).norm());

        // Projection matrix equality.
        let proj = projection_sum(&p).expect("sampled momentum");
        let mut want = Tensor4::<f64>::zero();
        for r in 1..4 {
            for c_ in 1..4 {
                let delta = if r == c_ { 1.0 } else { 0.0 };
                want[(r, c_)] = cr(delta - p.get(r) * p.get(c_) / (p0 * p0));
            }
        }
        projection = projection.max((proj - want).max_abs());

        // Pairwise proportionality with unit-modulus ratio.
        let family = all_transverse(&p, Helicity::Plus);
        for a in &family {
            for b in &family {
                if proportional_by_phase(a, b, 1e-10).is_none() {
                    proportionality_fail += 1;
                }
            }
        }

        // Rotation covariance at a random axis and angle.
        let axis = Axis::ALL[rng.gen_range(0..3)];
        let theta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let rotated = rotation_operator::<f64>(axis, theta).mul_vec(zs.components());
        let q = p.rotated(axis, theta);
        rotation_cov = rotation_cov
            .max(covariant_contraction(&q).mul_vec(&rotated).max_abs() / p0)
            .max((rotated.dot_conj(&rotated).re - 1.0).abs());

        // Bivector boost: equation satisfied at the boosted momentum; the
        // state is phase-proportional to the construction there, with the
        // norm carrying the Doppler factor q0/p0 rather than strict
        // equality.
        let kappa = rng.gen_range(-1.5..1.5);
        let boosted = exp_spin::<f64>(axis, kappa).mul_vec(zs.components());
        let q = p.boosted(axis, kappa);
        let norm = boosted.dot_conj(&boosted).re.sqrt();
        boost_eq = boost_eq
            .max(covariant_contraction(&q).mul_vec(&boosted).max_abs() / (q.energy() * norm));
        boost_scale_dev = boost_scale_dev.max((norm - q.energy() / p0).abs() / norm);
        let zs_q = z_symmetric(&q, Helicity::Plus);
        if let Ok(zs_q) = zs_q {
            let overlap = zs_q.components().dot_conj(&boosted);
            boost_scale_dev = boost_scale_dev
                .max(((boosted - zs_q.components().scaled(overlap)).max_abs()) / norm);
        }

        // Longitudinal boost law: e^{kappa K} z_T(p) lands on z_T of the
        // boosted momentum with the positive Doppler scale.
        let bt = exp_boost::<f64>(axis, kappa).mul_vec(zt.components());
        let zt_q = z_longitudinal(&q).expect("boosted momentum");
        let scale = q.energy() / p0;
        zt_boost = zt_boost.max((bt - zt_q.components().scaled(cr(scale))).max_abs());

        // Amplitude identities.
        let f = decompose(&zs).expect("transverse");
        let ze_dot_zb: f64 = (0..3).map(|k| f.e_part[k] * f.b_part[k]).sum();
        let ze_sq: f64 = f.e_part.iter().map(|x| x * x).sum();
        let zb_sq: f64 = f.b_part.iter().map(|x| x * x).sum();
        let zt_ze: f64 = (0..3).map(|k| zt.component(k + 1).re * f.e_part[k]).sum();
        let zt_zb: f64 = (0..3).map(|k| zt.component(k + 1).re * f.b_part[k]).sum();
        amplitude_props = amplitude_props
            .max(ze_dot_zb.abs())
            .max((ze_sq - 0.5).abs())
            .max((zb_sq - 0.5).abs())
            .max(zt_ze.abs() * (2.0 * p0).sqrt() / p0)
            .max(zt_zb.abs() * (2.0 * p0).sqrt() / p0);
        symmetry = symmetry.max(amplitude_symmetries(&p).max_residual());

        // Projector identities.
        let pp = projector_positive(&p).expect("null momentum");
        let pm = projector_negative(&p).expect("null momentum");
        projector_ids = projector_ids
            .max((pp * pp - pp).max_abs())
            .max((pm * pm - pm).max_abs())
            .max((pp * pm).max_abs())
            .max((pm * pp).max_abs())
            .max((pp.mul_vec(zs.components()) - *zs.components()).max_abs())
            .max((pp.mul_vec(zt.components()) - *zt.components()).max_abs())
            .max(pp.mul_vec(zs.conjugated().components()).max_abs())
            .max(pm.mul_vec(zs.components()).max_abs());
    }

    checks.push(Check::residual(
        "polarization.helicity_equation",
        equation,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.helicity_eigenvalue",
        helicity_eig,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.unit_norm",
        unit_norm,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.transversality",
        transversality,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.orthogonality_table",
        orthogonality,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.projection_matrix",
        projection,
        tol.transcendental,
    ));
    checks.push(Check::close(
        "polarization.pairwise_proportionality_failures",
        0.0,
        proportionality_fail as f64,
        0.0,
    ));
    checks.push(Check::residual(
        "polarization.rotation_covariance",
        rotation_cov,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.boost_equation_satisfaction",
        boost_eq,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.boost_doppler_proportionality",
        boost_scale_dev,
        1e-10,
    ));
    checks.push(Check::residual(
        "polarization.longitudinal_boost_law",
        zt_boost,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.amplitude_properties",
        amplitude_props,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.amplitude_reflection_symmetries",
        symmetry,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.projector_identities",
        projector_ids,
        tol.transcendental,
    ));

    // Composed-rotation oracles on the positive quadrant.
    let mut composition = 0.0f64;
    let mut reversed_unit = 0.0f64;
    for _ in 0..cfg.count(100).min(100) {
        let p: FourMomentum<f64> = random_positive_quadrant_momentum(&mut rng);
        for j in Axis::ALL {
            let closed = z_axis(&p, j, Helicity::Plus).expect("sampled");
            let by_rot = z_axis_by_rotations(&p, j, Helicity::Plus).expect("sampled");
            composition = composition.max((*closed.components() - *by_rot.components()).max_abs());
            let y = reversed_order_bivector(&p, j, Helicity::Plus).expect("sampled");
            reversed_unit = reversed_unit
                .max(y.equation_residual() / p.energy())
                .max((inner_product(&closed, &y).norm() - 1.0).abs().min(1.0));
        }
        let zt = z_longitudinal(&p).expect("sampled");
        for seed in Axis::ALL {
            let by_rot = z_longitudinal_by_rotations(&p, seed).expect("sampled");
            composition = composition.max((*zt.components() - *by_rot.components()).max_abs());
        }
        let zs = z_symmetric(&p, Helicity::Plus).expect("sampled");
        let by_sum = z_symmetric_by_sum(&p, Helicity::Plus).expect("sampled");
        composition = composition.max((*zs.components() - *by_sum.components()).max_abs());
    }
    checks.push(Check::residual(
        "polarization.closed_form_vs_composed_rotations",
        composition,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "polarization.reversed_order_solutions",
        reversed_unit,
        tol.transcendental,
    ));

    // Spot value at the reference momentum against the amplitude closed
    // forms (the independent route).
    let p = p3221();
    let zs = z_symmetric(&p, Helicity::Plus).expect("reference");
    let ze = ze_closed_form(&p);
    let zb = zb_closed_form(&p);
    let mut spot = 0.0f64;
    for k in 0..3 {
        spot = spot.max((zs.component(k + 1).re - ze[k]).abs());
        spot = spot.max((zs.component(k + 1).im - zb[k]).abs());
    }
    let want = [(0.5, 1.0 / 6.0), (-0.5, 1.0 / 6.0), (0.0, -2.0 / 3.0)];
    for (k, (re, im)) in want.iter().enumerate() {
        spot = spot.max((zs.component(k + 1).re - re).abs());
        spot = spot.max((zs.component(k + 1).im - im).abs());
    }
    checks.push(Check::residual(
        "polarization.z_symmetric_spot_3221",
        spot,
        tol.exact,
    ));

    // Seed normalization.
    let mut seeds = 0.0f64;
    for a in Axis::ALL {
        for h in [Helicity::Plus, Helicity::Minus] {
            let s = seed_bivector::<f64>(a, h);
            seeds = seeds
                .max((s.norm_sq() - 1.0).abs())
                .max(s.equation_residual());
        }
    }
    checks.push(Check::residual(
        "polarization.seed_normalization",
        seeds,
        tol.exact,
    ));
    checks
}

/// Geometric-phase transport: closed forms, scaling, controls and the
/// area comparison.
pub fn holonomy_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut rng = cfg.rng();
    let tol = cfg.tol;
    let mut checks = Vec::new();
    let n = cfg.count(200);

    let mut phase_vs_closed = 0.0f64;
    let mut conjugation = 0.0f64;
    let mut reversal = 0.0f64;
    let mut norm_drift = 0.0f64;
    let mut residuals = 0.0f64;
    let mut spherical_id = 0.0f64;
    for _ in 0..n {
        let p: FourMomentum<f64> = random_loop_momentum(&mut rng);
        let plus = loop_phase(&p, Helicity::Plus).expect("loop momentum");
        let (closed, _) = closed_form_phase(&p);
        phase_vs_closed = phase_vs_closed.max((plus.phase - closed).abs());
        residuals = residuals.max(plus.residual);
        let minus = loop_phase(&p, Helicity::Minus).expect("loop momentum");
        conjugation = conjugation.max((plus.phase + minus.phase).abs());

        let path = loop_path(&p).expect("loop momentum");
        let back: Vec<_> = path.iter().rev().map(|s| s.inverse()).collect();
        let seed = seed_bivector::<f64>(Axis::X1, Helicity::Plus);
        let out = transport(&seed, &back);
        let (rev_phase, _) = extract_phase(&seed, &out).expect("loop momentum");
        reversal = reversal.max((rev_phase + plus.phase).abs());
        // Accumulated drift over twelve rotation steps (three circuits).
        let mut circling = seed;
        for _ in 0..3 {
            circling = transport(&circling, &path);
        }
        norm_drift = norm_drift
            .max((out.norm_sq() - 1.0).abs())
            .max((circling.norm_sq() - 1.0).abs());

        let theta = (p.get(3) / p.energy()).acos();
        let phi = p.get(2).atan2(p.get(1));
        spherical_id = spherical_id.max((closed - spherical_form_phase(theta, phi)).abs());
    }
    checks.push(Check::residual(
        "holonomy.loop_phase_vs_closed_form",
        phase_vs_closed,
        1e-10,
    ));
    checks.push(Check::residual(
        "holonomy.return_proportionality_residual",
        residuals,
        1e-10,
    ));
    checks.push(Check::residual(
        "holonomy.helicity_conjugation_negates_phase",
        conjugation,
        1e-10,
    ));
    checks.push(Check::residual(
        "holonomy.path_reversal_negates_phase",
        reversal,
        1e-10,
    ));
    checks.push(Check::residual(
        "holonomy.transport_norm_preservation",
        norm_drift,
        1e-10,
    ));
    checks.push(Check::residual(
        "holonomy.spherical_form_identity",
        spherical_id,
        tol.exact,
    ));

    let p = p3221();
    let spot = loop_phase(&p, Helicity::Plus).expect("reference");
    checks.push(Check::close(
        "holonomy.spot_phase_3221",
        0.321750554397,
        spot.phase,
        1e-10,
    ));
    let base = spot.phase;
    let two = spin_n_phase(&p, 2).expect("reference");
    let three = spin_n_phase(&p, 3).expect("reference");
    checks.push(Check::close(
        "holonomy.spin_2_scaling",
        2.0 * base,
        two,
        1e-9,
    ));
    checks.push(Check::close(
        "holonomy.spin_3_scaling",
        3.0 * base,
        three,
        1e-9,
    ));
    let (zt_phase, zt_resid) = longitudinal_control(&p).expect("reference");
    checks.push(Check::residual(
        "holonomy.longitudinal_control_phase",
        zt_phase.abs().max(zt_resid),
        1e-10,
    ));
    let (phase, area) = solid_angle_check(0.01f64, 0.5);
    checks.push(Check::residual(
        "holonomy.gauss_bonnet_small_theta_ratio",
        (phase / area - 1.0).abs(),
        1e-3,
    ));
    checks
}

/// Current bilinears, stress-energy identities and transformation laws.
pub fn currents_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut rng = cfg.rng();
    let tol = cfg.tol;
    let mut checks = Vec::new();
    let n = cfg.count(100);

    let mut velocity = 0.0f64;
    let mut stress = 0.0f64;
    let mut reality = 0.0f64;
    let mut cross_module = 0.0f64;
    let mut null_current = 0.0f64;
    let mut rotation_law = 0.0f64;
    let mut boost_law = 0.0f64;
    for _ in 0..n {
        let p: FourMomentum<f64> = random_null_momentum(&mut rng);
        let p0 = p.energy();
        let zs = z_symmetric(&p, Helicity::Plus).expect("sampled");
        let zt = z_longitudinal(&p).expect("sampled");
        for z in [&zs, &zt] {
            for mu in 0..4 {
                let got = bilinear_current(z, mu).expect("mu in range");
                velocity = velocity.max((got - cr(p.get(mu) / p0)).norm());
            }
            for alpha in 0..4 {
                for beta in 0..4 {
                    let got = stress_energy_bilinear(z, alpha, beta).expect("indices in range");
                    let want = p.get(alpha) * p.get(beta) / (p0 * p0);
                    stress = stress.max((got - cr(want)).norm());
                }
            }
        }
        let j = current_vector(&zs);
        reality = reality.max(j.imag_residual);
        null_current = null_current.max(j.null_residual().abs());

        // Field amplitudes scaled by sqrt(2 p0) reproduce the bilinears.
        let f = decompose(&zs).expect("transverse");
        let s = (2.0 * p0).sqrt();
        let e = [f.e_part[0] * s, f.e_part[1] * s, f.e_part[2] * s];
        let b = [f.b_part[0] * s, f.b_part[1] * s, f.b_part[2] * s];
        let jf = field_currents(e, b, e, b, Helicity::Plus, p0).expect("positive energy");
        reality = reality.max(jf.imag_residual);
        cross_module = cross_module.max((jf.time_component - j.time_component).abs());
        for k in 0..3 {
            cross_module = cross_module.max((jf.spatial[k] - j.spatial[k]).abs());
        }

        // Transformation laws against independently transformed momenta.
        let axis = Axis::ALL[rng.gen_range(0..3)];
        let theta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let jr = transform_current(&zs, Transform::Rotation, axis, theta);
        let q = p.rotated(axis, theta);
        for k in 0..3 {
            rotation_law = rotation_law.max((jr.spatial[k] - q.get(k + 1) / q.energy()).abs());
        }
        rotation_law = rotation_law.max((jr.time_component - 1.0).abs());
        let kappa = rng.gen_range(-1.5..1.5);
        let jb = transform_current(&zs, Transform::Boost, axis, kappa);
        let qb = p.boosted(axis, kappa);
        for k in 0..3 {
            boost_law = boost_law
                .max((jb.spatial[k] / jb.time_component - qb.get(k + 1) / qb.energy()).abs());
        }
    }
    checks.push(Check::residual(
        "currents.generalized_velocity",
        velocity,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "currents.stress_energy_identity",
        stress,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "currents.hermitian_reality",
        reality,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "currents.field_amplitude_cross_module",
        cross_module,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "currents.null_current_property",
        null_current,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "currents.rotation_transform_law",
        rotation_law,
        tol.transcendental,
    ));
    checks.push(Check::residual(
        "currents.boost_transform_law",
        boost_law,
        1e-11,
    ));

    // Spot values at the reference momentum.
    let p = p3221();
    let zs = z_symmetric(&p, Helicity::Plus).expect("reference");
    let zt = z_longitudinal(&p).expect("reference");
    checks.push(Check::close(
        "currents.spot_zs_mu1",
        2.0 / 3.0,
        bilinear_current(&zs, 1).expect("mu").re,
        tol.transcendental,
    ));
    checks.push(Check::close(
        "currents.spot_zt_mu3",
        1.0 / 3.0,
        bilinear_current(&zt, 3).expect("mu").re,
        tol.transcendental,
    ));
    checks.push(Check::close(
        "currents.spot_stress_12",
        4.0 / 9.0,
        stress_energy_bilinear(&zs, 1, 2).expect("indices").re,
        tol.transcendental,
    ));
    checks
}

/// Wavepacket integrals: envelope corrections, spectra and superposition
/// interference.
pub fn wavepacket_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let tol = cfg.tol;
    let mut checks = Vec::new();

    let mut norm_dev = 0.0f64;
    for sigma in [0.3f64, 1.0, 3.0] {
        let env = GaussianEnvelope::<f64>::new(sigma, 1.0).expect("valid width");
        norm_dev = norm_dev.max((env.normalization_integral(1e-10) - 1.0).abs());
    }
    checks.push(Check::residual(
        "wavepacket.envelope_normalization",
        norm_dev,
        tol.quadrature,
    ));

    checks.push(Check::close(
        "wavepacket.derivative_integral_sigma_1",
        0.25,
        envelope_derivative_integral::<f64>(1.0).expect("positive width"),
        tol.exact,
    ));
    let mut deriv_dev = 0.0f64;
    for sigma in [0.5, 1.0, 2.0] {
        let closed = envelope_derivative_integral::<f64>(sigma).expect("positive width");
        let quad = envelope_derivative_integral_quadrature(sigma, 1e-10).expect("positive width");
        deriv_dev = deriv_dev.max((closed - quad).abs());
    }
    checks.push(Check::residual(
        "wavepacket.derivative_integral_quadrature",
        deriv_dev,
        tol.quadrature,
    ));

    let mut vector_dev = 0.0f64;
    let mut bivector_dev = 0.0f64;
    let mut gap_dev = 0.0f64;
    for sigma in [0.5f64, 1.0, 2.0] {
        let env = GaussianEnvelope::<f64>::new(sigma, 1.0).expect("valid width");
        let closed = vector_potential_momentum(&env, 1.0).expect("valid");
        let quad = vector_potential_momentum_quadrature(&env, 1.0, 1e-10).expect("valid");
        for mu in 0..4 {
            let denom = closed.per_mode[mu].abs().max(1.0);
            vector_dev = vector_dev.max((quad[mu] - closed.per_mode[mu]).abs() / denom);
        }
        let bv = bivector_momentum(&env, 1.0).expect("valid");
        let bq = bivector_momentum_quadrature(&env, 1.0, 1e-10).expect("valid");
        for mu in 0..4 {
            bivector_dev = bivector_dev.max((bq[mu] - bv.per_mode[mu]).abs());
        }
        let gap = closed.per_mode[0] - bv.per_mode[0];
        gap_dev = gap_dev.max((gap - 1.0 / (4.0 * sigma * sigma)).abs());
    }
    checks.push(Check::residual(
        "wavepacket.vector_potential_quadrature",
        vector_dev,
        1e-6,
    ));
    checks.push(Check::residual(
        "wavepacket.bivector_momentum_quadrature",
        bivector_dev,
        1e-6,
    ));
    checks.push(Check::residual(
        "wavepacket.discrimination_gap",
        gap_dev,
        tol.exact,
    ));

    let env = GaussianEnvelope::<f64>::new(1.0, 1.0).expect("valid width");
    let fourier = fourier_spectrum_check(&env, 1e-10).expect("valid");
    checks.push(Check::residual(
        "wavepacket.fourier_spectrum",
        fourier.max_relative_deviation,
        1e-6,
    ));

    let f = GaussianEnvelope::<f64>::new(1.0, 1.0).expect("valid width");
    let g = GaussianEnvelope::<f64>::new(1.0, -1.0).expect("valid width");
    let mut pointwise = 0.0f64;
    for step in 0..=16 {
        let x0 = -2.0 + 0.25 * step as f64;
        for jstep in 0..=16 {
            let x1 = -2.0 + 0.25 * jstep as f64;
            let direct = interference_term(&f, &g, x0, x1);
            let closed = interference_closed_form(&f, x0, x1);
            pointwise = pointwise.max((direct - closed).abs());
        }
    }
    checks.push(Check::residual(
        "wavepacket.interference_closed_form_pointwise",
        pointwise,
        tol.quadrature,
    ));

    let mut net_momentum = 0.0f64;
    let mut energy_drift = 0.0f64;
    let mut energies = Vec::new();
    for x0 in [0.0, 0.5, 1.0, 2.0] {
        let s = superposition_currents(&f, &g, 1.0, x0, 1e-10).expect("matched modes");
        net_momentum = net_momentum.max(s.momentum[0].abs());
        energies.push(s.energy);
    }
    for e in &energies {
        energy_drift = energy_drift
            .max((e - energies[0]).abs())
            .max((e - 2.0).abs());
    }
    checks.push(Check::residual(
        "wavepacket.superposition_net_momentum",
        net_momentum,
        1e-6,
    ));
    checks.push(Check::residual(
        "wavepacket.superposition_energy_conservation",
        energy_drift,
        1e-6,
    ));

    let vrep =
        superposition_vector_potential_currents(&f, &g, 1.0, 0.5, 1e-10).expect("matched modes");
    checks.push(Check::at_least(
        "wavepacket.vector_superposition_imaginary_content",
        1e-3,
        vrep.imag_pointwise_max,
    ));
    checks.push(Check::residual(
        "wavepacket.vector_superposition_even_asymmetry",
        vrep.per_mode_real[1].abs(),
        1e-6,
    ));
    checks
}
