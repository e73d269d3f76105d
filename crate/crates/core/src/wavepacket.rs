//! Gaussian-modulated single-mode wavelets: envelope corrections to the
//! vector-potential momentum, the envelope-free bivector translation
//! expectation, the momentum-space spectrum, and counter-propagating
//! superposition currents.
//!
//! The envelope argument is always the scalar phase u = k_mu x^mu, and the
//! prime denotes d/du. Modes are pure 1-direction: k = (k0, +/-k0, 0, 0),
//! so u = k1 x1 - k0 x0 and every spatial integral reduces to one
//! dimension with unit transverse factors.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::momentum::FourMomentum;
use crate::quadrature::{integrate, integrate_complex};
use crate::scalar::{cr, lit, Scalar};

/// Normalized Gaussian wavelet envelope
/// f(u) = (2 pi sigma^2 / k0^2)^{-1/4} exp(-u^2 / (4 sigma^2))
/// for a discrete mode with wavenumber k1 (sign = propagation direction).
#[derive(Clone, Copy, Debug)]
pub struct GaussianEnvelope<T> {
    sigma: T,
    k: FourMomentum<T>,
}

impl<T: Scalar> GaussianEnvelope<T> {
    /// Width in phase units and signed mode wavenumber along axis 1.
    pub fn new(sigma: T, k1: T) -> Result<Self> {
        if sigma <= T::zero() || !sigma.is_finite() {
            return Err(Error::NonPositiveWidth {
                sigma: sigma.to_f64().unwrap_or(f64::NAN),
            });
        }
        let k0 = k1.abs();
        if k0 <= T::zero() {
            return Err(Error::NonPositiveEnergy { p0: 0.0 });
        }
        Ok(Self {
            sigma,
            k: FourMomentum::new(k0, k1, T::zero(), T::zero()),
        })
    }

    pub fn sigma(&self) -> T {
        self.sigma
    }

    pub fn mode_momentum(&self) -> &FourMomentum<T> {
        &self.k
    }

    fn k0(&self) -> T {
        self.k.energy()
    }

    fn k1(&self) -> T {
        self.k.get(1)
    }

    /// Phase argument u = k_mu x^mu = k1 x1 - k0 x0.
    pub fn phase(&self, x0: T, x1: T) -> T {
        self.k1() * x1 - self.k0() * x0
    }

    fn normalization(&self) -> T {
        let two_pi = lit::<T>(2.0) * T::PI();
        (two_pi * self.sigma * self.sigma / (self.k0() * self.k0())).powf(lit::<T>(-0.25))
    }

    /// Envelope value f(u).
    pub fn value(&self, u: T) -> T {
        let s2 = self.sigma * self.sigma;
        self.normalization() * (-u * u / (lit::<T>(4.0) * s2)).exp()
    }

    /// df/du.
    pub fn derivative(&self, u: T) -> T {
        -u / (lit::<T>(2.0) * self.sigma * self.sigma) * self.value(u)
    }

    /// Positive-frequency wavelet f(u) e^{iu} at a spacetime point.
    pub fn positive_frequency(&self, x0: T, x1: T) -> Complex<T> {
        let u = self.phase(x0, x1);
        Complex::from_polar(self.value(u), u)
    }

    /// Integration half-width covering the support at `x0`.
    fn window(&self, x0: T) -> T {
        lit::<T>(12.0) * self.sigma / self.k0() + x0.abs() + T::one()
    }

    /// Quadrature check of the normalization constraint: integral of f^2
    /// over x1 at x0 = 0 (unity by construction).
    pub fn normalization_integral(&self, tol: T) -> T {
        let l = self.window(T::zero());
        integrate(
            |x1| {
                let u = self.phase(T::zero(), x1);
                let f = self.value(u);
                f * f
            },
            -l,
            l,
            tol,
        )
    }
}

/// Closed form of the squared-derivative envelope integral
/// \int dx1 (df/du)^2 = 1/(4 sigma^2) for a pure 1-motion mode.
pub fn envelope_derivative_integral<T: Scalar>(sigma: T) -> Result<T> {
    if sigma <= T::zero() || !sigma.is_finite() {
        return Err(Error::NonPositiveWidth {
            sigma: sigma.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(T::one() / (lit::<T>(4.0) * sigma * sigma))
}

/// Adaptive-quadrature route to the same integral, evaluated pointwise
/// from the envelope derivative at x0 = 0.
pub fn envelope_derivative_integral_quadrature<T: Scalar>(sigma: T, tol: T) -> Result<T> {
    let env = GaussianEnvelope::new(sigma, T::one())?;
    let l = env.window(T::zero());
    Ok(integrate(
        |x1| {
            let fp = env.derivative(env.phase(T::zero(), x1));
            fp * fp
        },
        -l,
        l,
        tol,
    ))
}

/// Mode-momentum expectation per quantum, in units of k^mu.
#[derive(Clone, Copy, Debug)]
pub struct MomentumExpectation<T> {
    pub per_mode: [T; 4],
    pub occupation: T,
}

/// Vector-potential wavelet momentum: occupation * k^mu * (1 + 1/(4 sigma^2)).
/// The modulation envelope feeds its squared derivative into the current.
pub fn vector_potential_momentum<T: Scalar>(
    env: &GaussianEnvelope<T>,
    occupation: T,
) -> Result<MomentumExpectation<T>> {
    let correction = T::one() + envelope_derivative_integral(env.sigma())?;
    let mut per_mode = [T::zero(); 4];
    for mu in 0..4 {
        per_mode[mu] = occupation * env.mode_momentum().get(mu) * correction;
    }
    Ok(MomentumExpectation {
        per_mode,
        occupation,
    })
}

/// Quadrature route for the vector-potential momentum: integrates
/// -2 Re[ d_0 A^-(x) d^mu A^+(x) ] with the complex field products
/// assembled pointwise, at x0 = 0.
pub fn vector_potential_momentum_quadrature<T: Scalar>(
    env: &GaussianEnvelope<T>,
    occupation: T,
    tol: T,
) -> Result<[T; 4]> {
    let x0 = T::zero();
    let l = env.window(x0);
    let k0 = env.mode_momentum().energy();
    let two = lit::<T>(2.0);
    let mut out = [T::zero(); 4];
    for mu in 0..4 {
        let k_mu = env.mode_momentum().get(mu);
        out[mu] = integrate(
            |x1| {
                let u = env.phase(x0, x1);
                let f = env.value(u);
                let fp = env.derivative(u);
                let phase = Complex::from_polar(T::one(), u);
                // A^+ = f e^{iu} / sqrt(2 k0); derivatives via the chain rule.
                // d0 A^- = (-k0)(f' - i f) e^{-iu} / sqrt(2 k0)
                // d^mu A^+ = k^mu (f' + i f) e^{iu} / sqrt(2 k0)
                let da_minus = phase.conj() * Complex::new(fp, -f) * cr(-k0);
                let da_plus = phase * Complex::new(fp, f) * cr(k_mu);
                -(da_minus * da_plus).re * two / (two * k0)
            },
            -l,
            l,
            tol,
        ) * occupation;
    }
    Ok(out)
}

/// Bivector translation-operator momentum: exactly occupation * k^mu; the
/// symmetrized integrand's envelope-derivative terms cancel.
pub fn bivector_momentum<T: Scalar>(
    env: &GaussianEnvelope<T>,
    occupation: T,
) -> Result<MomentumExpectation<T>> {
    let mut per_mode = [T::zero(); 4];
    for mu in 0..4 {
        per_mode[mu] = occupation * env.mode_momentum().get(mu);
    }
    Ok(MomentumExpectation {
        per_mode,
        occupation,
    })
}

/// Quadrature route for the bivector momentum: integrates the symmetrized
/// translation-operator integrand (-i/2)[B^- d^mu B^+ - B^+ d^mu B^-].
pub fn bivector_momentum_quadrature<T: Scalar>(
    env: &GaussianEnvelope<T>,
    occupation: T,
    tol: T,
) -> Result<[T; 4]> {
    let x0 = T::zero();
    let l = env.window(x0);
    let half = lit::<T>(0.5);
    let mut out = [T::zero(); 4];
    for mu in 0..4 {
        let k_mu = env.mode_momentum().get(mu);
        out[mu] = integrate(
            |x1| {
                let u = env.phase(x0, x1);
                let f = env.value(u);
                let fp = env.derivative(u);
                let phase = Complex::from_polar(T::one(), u);
                let b_plus = phase * cr(f);
                let b_minus = b_plus.conj();
                let db_plus = phase * Complex::new(fp, f) * cr(k_mu);
                let db_minus = db_plus.conj();
                let integrand =
                    (b_minus * db_plus - b_plus * db_minus) * Complex::new(T::zero(), -half);
                integrand.re
            },
            -l,
            l,
            tol,
        ) * occupation;
    }
    Ok(out)
}

/// Momentum-space spectrum check of the positive-frequency wavelet on the
/// mass shell.
#[derive(Clone, Debug)]
pub struct FourierReport<T> {
    /// Sampled (p1, numeric transform, closed form) triples.
    pub samples: Vec<(T, T, T)>,
    pub peak_value_closed: T,
    pub max_relative_deviation: T,
}

/// Evaluates the spatial Fourier transform of f(u) e^{iu} on the slice
/// x0 = 0, p0 = p1 and compares with the closed-form Gaussian spectrum
/// (8 pi sigma^2 / k0^2)^{1/4} exp(-sigma^2 (p1 - k1)^2 / k1^2).
pub fn fourier_spectrum_check<T: Scalar>(
    env: &GaussianEnvelope<T>,
    tol: T,
) -> Result<FourierReport<T>> {
    let k0 = env.mode_momentum().energy();
    let k1 = env.k1();
    let sigma = env.sigma();
    let peak = (lit::<T>(8.0) * T::PI() * sigma * sigma / (k0 * k0)).powf(lit::<T>(0.25));
    let l = env.window(T::zero());
    let mut samples = Vec::new();
    let mut max_rel = T::zero();
    // Sample within two spectral widths of the peak.
    let width = k1.abs() / sigma;
    for step in -8i32..=8 {
        let p1 = k1 + width * lit::<T>(step as f64 / 4.0);
        let numeric = integrate_complex(
            |x1| env.positive_frequency(T::zero(), x1) * Complex::from_polar(T::one(), -p1 * x1),
            -l,
            l,
            tol,
        );
        let delta = (p1 - k1) / k1;
        let closed = peak * (-(sigma * sigma) * delta * delta).exp();
        let rel = (numeric.re - closed).abs() / closed;
        max_rel = max_rel.max(rel).max(numeric.im.abs() / closed);
        samples.push((p1, numeric.re, closed));
    }
    Ok(FourierReport {
        samples,
        peak_value_closed: peak,
        max_relative_deviation: max_rel,
    })
}

/// Superposed counter-propagating bivector packets sharing one mode.
#[derive(Clone, Debug)]
pub struct SuperpositionCurrents<T> {
    /// Spatial momentum integral in units of k1 (only the 1-component is
    /// nonzero for pure 1-motion modes).
    pub momentum: [T; 3],
    /// Energy integral in units of k0.
    pub energy: T,
    /// Energy carried by the two packets alone (f^2 + g^2 term).
    pub packet_energy: T,
    /// Integrated cosine interference contribution to the energy.
    pub cos_interference_energy: T,
    /// Integrated sine interference contribution to the energy.
    pub sin_interference_energy: T,
    /// Sampled (x1, interference value) pairs of the momentum integrand's
    /// interference term at the requested x0.
    pub interference_samples: Vec<(T, T)>,
}

fn require_counter_propagating<T: Scalar>(
    f: &GaussianEnvelope<T>,
    g: &GaussianEnvelope<T>,
) -> Result<()> {
    let kf = f.k1();
    let kg = g.k1();
    let mismatch = (kf.abs() - kg.abs()).abs() > lit::<T>(1e-12) * kf.abs();
    if mismatch || kf * kg >= T::zero() {
        return Err(Error::MismatchedModes {
            left: kf.to_f64().unwrap_or(f64::NAN),
            right: kg.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Pointwise interference term of the superposed momentum integrand:
/// sin(2 k1 x1) (f' g + f g').
pub fn interference_term<T: Scalar>(
    f: &GaussianEnvelope<T>,
    g: &GaussianEnvelope<T>,
    x0: T,
    x1: T,
) -> T {
    let u = f.phase(x0, x1);
    let v = g.phase(x0, x1);
    (lit::<T>(2.0) * f.k1() * x1).sin()
        * (f.derivative(u) * g.value(v) + f.value(u) * g.derivative(v))
}

/// Closed form of the interference term for equal-width Gaussian packets:
/// (1/sqrt(2 pi sigma^2)) e^{-(p0^2 x0^2 + p1^2 x1^2)/(2 sigma^2)} / sigma^2
///   * p0^2 x0 sin(2 p1 x1).
pub fn interference_closed_form<T: Scalar>(env: &GaussianEnvelope<T>, x0: T, x1: T) -> T {
    let sigma = env.sigma();
    let s2 = sigma * sigma;
    let p0 = env.mode_momentum().energy();
    let p1 = env.k1().abs();
    let prefactor = T::one() / (lit::<T>(2.0) * T::PI() * s2).sqrt();
    let gauss = (-(p0 * p0 * x0 * x0 + p1 * p1 * x1 * x1) / (lit::<T>(2.0) * s2)).exp();
    prefactor * gauss / s2 * p0 * p0 * x0 * (lit::<T>(2.0) * p1 * x1).sin()
}

/// Momentum and energy integrals of the superposed field at time `x0`,
/// from the translation operator:
/// momentum ~ k1 * Int[f^2 - g^2 + sin(2 k1 x1)(f'g + f g')],
/// energy   ~ k0 * Int[f^2 + g^2 + 2 f g cos(2 k1 x1) + sin(2 k1 x1)(f'g - f g')].
pub fn superposition_currents<T: Scalar>(
    f: &GaussianEnvelope<T>,
    g: &GaussianEnvelope<T>,
    occupation: T,
    x0: T,
    tol: T,
) -> Result<SuperpositionCurrents<T>> {
    require_counter_propagating(f, g)?;
    let l = f.window(x0).max(g.window(x0));
    let two = lit::<T>(2.0);
    let k0 = f.mode_momentum().energy();
    let k1 = f.k1();
    let momentum_integral = integrate(
        |x1| {
            let u = f.phase(x0, x1);
            let v = g.phase(x0, x1);
            let ff = f.value(u);
            let gg = g.value(v);
            ff * ff - gg * gg + interference_term(f, g, x0, x1)
        },
        -l,
        l,
        tol,
    );
    let packet_energy = integrate(
        |x1| {
            let ff = f.value(f.phase(x0, x1));
            let gg = g.value(g.phase(x0, x1));
            ff * ff + gg * gg
        },
        -l,
        l,
        tol,
    );
    let cos_term = integrate(
        |x1| {
            let ff = f.value(f.phase(x0, x1));
            let gg = g.value(g.phase(x0, x1));
            two * ff * gg * (two * k1 * x1).cos()
        },
        -l,
        l,
        tol,
    );
    let sin_term = integrate(
        |x1| {
            let u = f.phase(x0, x1);
            let v = g.phase(x0, x1);
            (two * k1 * x1).sin() * (f.derivative(u) * g.value(v) - f.value(u) * g.derivative(v))
        },
        -l,
        l,
        tol,
    );
    let mut samples = Vec::new();
    for step in -10i32..=10 {
        let x1 = lit::<T>(step as f64 / 2.5) * f.sigma() / k0;
        samples.push((x1, interference_term(f, g, x0, x1)));
    }
    Ok(SuperpositionCurrents {
        momentum: [occupation * k1 * momentum_integral, T::zero(), T::zero()],
        energy: occupation * k0 * (packet_energy + cos_term + sin_term),
        packet_energy: occupation * k0 * packet_energy,
        cos_interference_energy: occupation * k0 * cos_term,
        sin_interference_energy: occupation * k0 * sin_term,
        interference_samples: samples,
    })
}

/// Vector-potential analysis of the same superposition.
#[derive(Clone, Debug)]
pub struct VectorSuperpositionReport<T> {
    /// Real part of the integrated expectation per component.
    pub per_mode_real: [T; 4],
    /// Imaginary part of the integrated expectation per component; nonzero
    /// imaginary content on the spatial components is the discriminating
    /// signature of the vector-potential current.
    pub per_mode_imag: [T; 4],
    /// Largest pointwise imaginary magnitude of the integrand seen on a
    /// fixed sample grid.
    pub imag_pointwise_max: T,
}

/// Evaluates the vector-potential current of the superposed field,
/// -Int[ d_0 A^- d^mu A^+ ], including the imaginary interference terms
/// that distinguish it from the bivector translation expectation.
pub fn superposition_vector_potential_currents<T: Scalar>(
    f: &GaussianEnvelope<T>,
    g: &GaussianEnvelope<T>,
    occupation: T,
    x0: T,
    tol: T,
) -> Result<VectorSuperpositionReport<T>> {
    require_counter_propagating(f, g)?;
    let l = f.window(x0).max(g.window(x0));
    let k0 = f.mode_momentum().energy();
    let two = lit::<T>(2.0);
    let integrand = |mu: usize, x1: T| -> Complex<T> {
        let u = f.phase(x0, x1);
        let v = g.phase(x0, x1);
        let (fv, fp) = (f.value(u), f.derivative(u));
        let (gv, gp) = (g.value(v), g.derivative(v));
        let ephase_f = Complex::from_polar(T::one(), u);
        let ephase_g = Complex::from_polar(T::one(), v);
        let k_f = f.mode_momentum().get(mu);
        let k_g = g.mode_momentum().get(mu);
        // d0 A^- and d^mu A^+ for the two-packet field, assembled pointwise.
        let da_minus = (ephase_f.conj() * Complex::new(fp, -fv)
            + ephase_g.conj() * Complex::new(gp, -gv))
            * cr(-k0);
        let da_plus =
            ephase_f * Complex::new(fp, fv) * cr(k_f) + ephase_g * Complex::new(gp, gv) * cr(k_g);
        -da_minus * da_plus / cr(two * k0)
    };
    let mut re = [T::zero(); 4];
    let mut im = [T::zero(); 4];
    let mut pointwise = T::zero();
    for mu in 0..4 {
        let total = integrate_complex(|x1| integrand(mu, x1), -l, l, tol);
        re[mu] = occupation * total.re;
        im[mu] = occupation * total.im;
        for step in -10i32..=10 {
            let x1 = lit::<T>(step as f64 / 2.5) * f.sigma() / k0;
            pointwise = pointwise.max(integrand(mu, x1).im.abs());
        }
    }
    Ok(VectorSuperpositionReport {
        per_mode_real: re,
        per_mode_imag: im,
        imag_pointwise_max: pointwise,
    })
}
