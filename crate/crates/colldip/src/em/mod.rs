//! Electromagnetic primitives: the vacuum Green tensor, dipole
//! polarizability models, canonical spherical-mode indexing, vector spherical
//! mode evaluation, field decomposition by surface quadrature, plane-wave
//! multipole coefficients, and the F / Q operators connecting Cartesian
//! dipole quantities to the mode basis.
//!
//! Electric fields are expressed in units of P0/sqrt(epsilon_0) and magnetic
//! fields in units of P0/sqrt(mu_0) throughout, which makes every quantity
//! here dimensionless apart from lengths entering through k r.

mod decompose;
mod green;
mod modes;
mod operators;
mod polarizability;

pub use decompose::{decompose_field, sphere_quadrature, suggested_radius, SphereQuadrature};
pub use green::{green_tensor, green_tensor_imag_freq};
pub use modes::{
    eval_field, eval_vector_mode, plane_wave_coeffs, Block, FieldComponent, FieldKind, ModeIndex,
    RadialKind, SphericalFieldCoeffs, VectorMode,
};
pub use operators::{f_matrix, q_matrix};
pub use polarizability::{
    bare_polarizability, dressed_polarizability, model_radius, Frequency, PolarizabilityModel,
};

/// Real Cartesian vector (positions, directions).
pub type Vec3 = nalgebra::Vector3<f64>;
/// Complex Cartesian vector (field amplitudes).
pub type CVec3 = nalgebra::Vector3<num_complex::Complex64>;
