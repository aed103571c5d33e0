//! Collective light scattering by ensembles of interacting point dipoles.
//!
//! The crate builds the scattering matrix of $N$ coupled electric dipoles in a
//! basis of vector spherical modes, resumming recurrent multiple scattering to
//! all orders through the coupled-dipole structure matrix. On top of that
//! machinery it provides
//!
//! - the collective diffusion matrix $\mathcal{D}$, scattering matrix
//!   $\mathcal{S} = I + 2\mathcal{D}$ and absorption operator
//!   $\mathcal{A} = I - \mathcal{S}^\dagger \mathcal{S}$ ([`scattering`]),
//! - the mode decomposition of $\mathcal{A}$ and projection-based absorbed
//!   fractions for arbitrary incident fields,
//! - collective radiative corrections: phase shifts from log-determinants of
//!   the structure matrix and ground-state dispersion energies from an
//!   imaginary-frequency integral ([`dispersion`]),
//! - study geometries: Platonic-solid shells around a central absorber and
//!   1D/2D/3D nanoparticle lattices ([`geometry`]).
//!
//! Fields are stored in units of $P_0/\sqrt{\varepsilon_0}$ (electric) and
//! $P_0/\sqrt{\mu_0}$ (magnetic), so all scattering quantities are
//! dimensionless functions of reduced lengths $k r$. Physical constants enter
//! only in [`dispersion`], where energies are reported in Joules.

pub mod em;
pub mod error;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};

/// Physical constants (SI).
pub mod constants {
    /// Speed of light in vacuum, m/s.
    pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
    /// Reduced Planck constant, J s.
    pub const HBAR: f64 = 1.054_571_817e-34;
    /// Electron-volt, J.
    pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;
}
