//! Random null momenta for the verification suites.
//!
//! Directions are uniform on the sphere and energies log-uniform in
//! [0.1, 10]. Raw draws happen in f64 so a given seed produces identical
//! momenta for every scalar type.

use rand::Rng;

use crate::axis::Axis;
use crate::momentum::FourMomentum;
use crate::scalar::{lit, Scalar};

/// Default rejection threshold for construction denominators, relative to
/// the energy. Generous compared to the 1e-9 construction limit so the
/// sampled checks keep full double precision.
pub const SAMPLER_REJECT: f64 = 0.01;

fn raw_direction<R: Rng>(rng: &mut R) -> [f64; 3] {
    let cos_theta: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let sin_theta = (1.0 - cos_theta * cos_theta).sqrt();
    [phi.cos() * sin_theta, phi.sin() * sin_theta, cos_theta]
}

fn raw_energy<R: Rng>(rng: &mut R) -> f64 {
    let log_e = rng.gen_range((0.1f64).ln()..(10.0f64).ln());
    log_e.exp()
}

/// A null momentum clear of every transverse-construction degeneracy:
/// all three axis denominators and the symmetric-combination denominator
/// exceed `SAMPLER_REJECT` times the energy.
pub fn random_null_momentum<T: Scalar, R: Rng>(rng: &mut R) -> FourMomentum<T> {
    loop {
        let d = raw_direction(rng);
        let e = raw_energy(rng);
        let p = FourMomentum::<T>::from_direction([lit(d[0]), lit(d[1]), lit(d[2])], lit(e))
            .expect("sampled direction is valid");
        let threshold = lit::<T>(SAMPLER_REJECT) * p.energy();
        let clear = Axis::ALL.iter().all(|&a| p.transverse_norm(a) > threshold)
            && p.pairwise_diff_norm() > threshold;
        if clear {
            return p;
        }
    }
}

/// A null momentum additionally restricted to the chart where the closed
/// loop is defined: positive 1-component and sign-definite quadrant
/// requirements of the principal-branch compositions.
pub fn random_loop_momentum<T: Scalar, R: Rng>(rng: &mut R) -> FourMomentum<T> {
    loop {
        let p = random_null_momentum::<T, R>(rng);
        let [p1, _, _] = p.spatial();
        if p1 > lit::<T>(SAMPLER_REJECT) * p.energy() {
            return p;
        }
    }
}

/// A null momentum with all spatial components positive; the quadrant on
/// which every principal-branch rotation composition matches its closed
/// form.
pub fn random_positive_quadrant_momentum<T: Scalar, R: Rng>(rng: &mut R) -> FourMomentum<T> {
    loop {
        let p = random_null_momentum::<T, R>(rng);
        let [p1, p2, p3] = p.spatial();
        let threshold = lit::<T>(SAMPLER_REJECT) * p.energy();
        if p1 > threshold && p2 > threshold && p3 > threshold {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampled_momenta_are_null_and_non_degenerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p: FourMomentum<f64> = random_null_momentum(&mut rng);
            assert!(p.null_residual() < 1e-12 * p.energy() * p.energy());
            assert!(p.pairwise_diff_norm() > 0.01 * p.energy());
            assert!((0.1..=10.0).contains(&p.energy()));
        }
    }

    #[test]
    fn seeded_sampling_is_reproducible() {
        let draw = || {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            let p: FourMomentum<f64> = random_loop_momentum(&mut rng);
            (p.energy(), p.spatial())
        };
        assert_eq!(draw(), draw());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p: FourMomentum<f64> = random_positive_quadrant_momentum(&mut rng);
            let [p1, p2, p3] = p.spatial();
            assert!(p1 > 0.0 && p2 > 0.0 && p3 > 0.0);
        }
    }
}
