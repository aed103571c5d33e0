//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two points coincide where a Green tensor or scattered field diverges.
    #[error("coincident points: the Green tensor diverges at zero separation")]
    CoincidentPoints,

    /// Singular vector spherical modes (Hankel radial functions) evaluated at
    /// the origin.
    #[error("outgoing/incoming spherical modes are singular at the origin")]
    SingularAtOrigin,

    /// Clausius-Mossotti pole at epsilon = -2.
    #[error("polarizability pole: epsilon = -2 exactly")]
    PolarizabilityPole,

    /// The radiative-reaction denominator 1 - i k^3 alpha_0 / 6 pi vanished.
    #[error("radiative reaction singularity: 1 - i k^3 alpha_0 / 6 pi = 0")]
    RadiativeReactionSingular,

    /// I - X is numerically singular: the ensemble sits on a collective
    /// resonance at this frequency.
    #[error(
        "collective resonance: I - X numerically singular \
         (1-norm condition estimate {condition:.3e})"
    )]
    Resonance { condition: f64 },

    /// A radial function in a mode-decomposition denominator is too close to
    /// zero at the chosen sphere radius.
    #[error(
        "radial function {function}_{l}({x}) = {value:.3e} is below the safe \
         division threshold; choose another decomposition radius"
    )]
    RadialNearZero {
        function: &'static str,
        l: usize,
        x: f64,
        value: f64,
    },

    /// det(I - X(i xi)) <= 0: the real log-determinant is undefined, which
    /// signals a pathological geometry or polarizability model.
    #[error("det(I - X(i xi)) = {det:.6e} <= 0 at xi = {xi:.6e}")]
    NonPositiveDeterminant { det: f64, xi: f64 },

    /// Zero-norm coefficient vector where a normalized field is required.
    #[error("zero-norm field coefficients")]
    ZeroNorm,

    /// Spheres overlap in a constructed geometry.
    #[error("spheres overlap: separation {separation} <= 2 R = {diameter}")]
    Overlap { separation: f64, diameter: f64 },

    /// Invalid configuration of a geometry or run parameter.
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
