//! Special functions feeding the spherical-mode machinery: associated
//! Legendre polynomials and spherical harmonics, Riccati-Bessel and
//! Riccati-Hankel functions, spherical Bessel functions, and Clebsch-Gordan
//! coefficients with the product coefficients of the translation theorems.
//!
//! Everything here is a pure function of its arguments and safe to call from
//! any number of threads.

mod clebsch;
mod factorial;
mod legendre;
mod riccati;

pub use clebsch::{a_coeff, clebsch_gordan_column, CgColumn};
pub use legendre::{assoc_legendre, spherical_harmonic, AngularTables};
pub use riccati::{
    riccati_bessel, riccati_bessel_complex, riccati_hankel, riccati_psi_table,
    riccati_psi_table_complex, riccati_xi_table, spherical_bessel_j, spherical_j_table,
    HankelKind,
};
