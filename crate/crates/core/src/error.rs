//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by constructions and operations in this crate.
///
/// Diagnostic payloads are reported in `f64` regardless of the working
/// scalar type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: &'static str, index: usize },

    #[error("energy must be positive, got p0 = {p0}")]
    NonPositiveEnergy { p0: f64 },

    #[error("momentum is not null: |p0^2 - |p|^2| = {residual} exceeds {tolerance}")]
    NotNull { residual: f64, tolerance: f64 },

    #[error("degenerate direction: normalization denominator {denominator} below {tolerance}")]
    DegenerateDirection { denominator: f64, tolerance: f64 },

    #[error("bivector is not transverse: |time component| = {time_component}")]
    NotTransverse { time_component: f64 },

    #[error("loop did not return a state proportional to the start: residual {residual}")]
    NonProportionalReturn { residual: f64 },

    #[error("overlap modulus {modulus} too small to extract a phase")]
    ZeroOverlap { modulus: f64 },

    #[error("spin order {n} outside the supported range 1..={max}")]
    DimensionLimit { n: usize, max: usize },

    #[error("envelope width must be positive, got sigma = {sigma}")]
    NonPositiveWidth { sigma: f64 },

    #[error(
        "superposed modes must be counter-propagating with equal |k1|: got {left} and {right}"
    )]
    MismatchedModes { left: f64, right: f64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
