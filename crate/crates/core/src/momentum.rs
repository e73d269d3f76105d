//! Four-momenta with signature (-+++) and natural units.

use crate::axis::Axis;
use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

/// Relative tolerance on the null constraint |p0^2 - |p|^2| <= tol * p0^2.
/// Loose enough to accept momenta entered with seven significant digits;
/// exactly-null construction goes through `from_direction`.
pub const NULL_TOL: f64 = 1e-6;

/// Real four-momentum (p0, p1, p2, p3), contravariant components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourMomentum<T> {
    components: [T; 4],
}

impl<T: Scalar> FourMomentum<T> {
    /// Raw constructor; no physicality checks. Used for reflected and
    /// otherwise off-shell tuples in symmetry evaluations.
    pub fn new(p0: T, p1: T, p2: T, p3: T) -> Self {
        Self {
            components: [p0, p1, p2, p3],
        }
    }

    /// Physical constructor: requires p0 > 0 and the null constraint.
    pub fn physical(p0: T, p1: T, p2: T, p3: T) -> Result<Self> {
        let p = Self::new(p0, p1, p2, p3);
        if p0 <= T::zero() {
            return Err(Error::NonPositiveEnergy {
                p0: p0.to_f64().unwrap_or(f64::NAN),
            });
        }
        p.require_null()?;
        Ok(p)
    }

    /// Exactly null momentum from a direction and an energy; the direction
    /// is normalized so no user rounding can violate the constraint.
    pub fn from_direction(direction: [T; 3], energy: T) -> Result<Self> {
        if energy <= T::zero() {
            return Err(Error::NonPositiveEnergy {
                p0: energy.to_f64().unwrap_or(f64::NAN),
            });
        }
        let norm = (direction[0] * direction[0]
            + direction[1] * direction[1]
            + direction[2] * direction[2])
            .sqrt();
        if norm <= T::zero() {
            return Err(Error::NonPositiveEnergy { p0: 0.0 });
        }
        let s = energy / norm;
        Ok(Self::new(
            energy,
            direction[0] * s,
            direction[1] * s,
            direction[2] * s,
        ))
    }

    /// Null momentum from spherical angles: p3 along the polar axis,
    /// azimuth measured from the 1-axis.
    pub fn from_spherical(energy: T, theta: T, phi: T) -> Result<Self> {
        Self::from_direction(
            [
                phi.cos() * theta.sin(),
                phi.sin() * theta.sin(),
                theta.cos(),
            ],
            energy,
        )
    }

    pub fn energy(&self) -> T {
        self.components[0]
    }

    /// Contravariant component by index 0..=3.
    pub fn get(&self, mu: usize) -> T {
        self.components[mu]
    }

    pub fn spatial(&self) -> [T; 3] {
        [self.components[1], self.components[2], self.components[3]]
    }

    pub fn spatial_component(&self, axis: Axis) -> T {
        self.components[axis.index()]
    }

    pub fn spatial_norm_sq(&self) -> T {
        let [x, y, z] = self.spatial();
        x * x + y * y + z * z
    }

    /// |p0^2 - |p|^2|
    pub fn null_residual(&self) -> T {
        (self.components[0] * self.components[0] - self.spatial_norm_sq()).abs()
    }

    pub fn is_null(&self) -> bool {
        self.null_residual() <= lit::<T>(NULL_TOL) * self.components[0] * self.components[0]
    }

    pub fn require_null(&self) -> Result<()> {
        if self.is_null() {
            Ok(())
        } else {
            Err(Error::NotNull {
                residual: self.null_residual().to_f64().unwrap_or(f64::NAN),
                tolerance: (lit::<T>(NULL_TOL) * self.components[0] * self.components[0])
                    .to_f64()
                    .unwrap_or(f64::NAN),
            })
        }
    }

    /// sqrt of the sum of squared spatial components orthogonal to `axis`;
    /// the normalization denominator of the corresponding transverse
    /// construction.
    pub fn transverse_norm(&self, axis: Axis) -> T {
        let a = self.spatial_component(axis.next());
        let b = self.spatial_component(axis.prev());
        (a * a + b * b).sqrt()
    }

    /// sqrt of the sum of squared pairwise differences of the spatial
    /// components; vanishes exactly on the (1,1,1) direction.
    pub fn pairwise_diff_norm(&self) -> T {
        let [x, y, z] = self.spatial();
        ((x - y) * (x - y) + (x - z) * (x - z) + (y - z) * (y - z)).sqrt()
    }

    /// Active boost with rapidity `kappa` along `axis`.
    pub fn boosted(&self, axis: Axis, kappa: T) -> Self {
        let ch = kappa.cosh();
        let sh = kappa.sinh();
        let mut c = self.components;
        let j = axis.index();
        let (e, pj) = (c[0], c[j]);
        c[0] = e * ch + pj * sh;
        c[j] = pj * ch + e * sh;
        Self { components: c }
    }

    /// Counterclockwise rotation of the spatial part about `axis`.
    pub fn rotated(&self, axis: Axis, theta: T) -> Self {
        let ct = theta.cos();
        let st = theta.sin();
        let j = axis.next().index();
        let k = axis.prev().index();
        let mut c = self.components;
        let (a, b) = (c[j], c[k]);
        c[j] = a * ct - b * st;
        c[k] = a * st + b * ct;
        Self { components: c }
    }

    pub fn time_reversed(&self) -> Self {
        let mut c = self.components;
        c[0] = -c[0];
        Self { components: c }
    }

    pub fn space_reversed(&self) -> Self {
        let mut c = self.components;
        for x in c.iter_mut().skip(1) {
            *x = -*x;
        }
        Self { components: c }
    }
}
