//! The F and Q operators: evaluation of a free field at the origin, and the
//! multipole expansion of point-dipole radiation.
//!
//! F is 3 x N_sph with nonzero entries only in the three A-block l = 1
//! columns (the values of N^{(j)}_{1,m} at the origin); Q = i F^dagger maps a
//! dipole orientation to the outgoing coefficients of its radiated field,
//! phi_sca = k^3 alpha Q E(0). Both are pseudo-unitary:
//! F F^dagger = Q^dagger Q = I/(6 pi) and Q F = i I_(A,l=1)/(6 pi).

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::modes::{Block, ModeIndex};

/// F: evaluates the electric field of a free coefficient vector at the
/// origin, in Cartesian components and units of P0/sqrt(eps_0).
pub fn f_matrix(l_max: usize) -> DMatrix<Complex64> {
    let index = ModeIndex::new(l_max).expect("l_max >= 1");
    let mut f = DMatrix::zeros(3, index.n_sph());
    let c = 1.0 / (12.0 * std::f64::consts::PI).sqrt();
    let i = Complex64::i();
    // Columns are N^{(j)}_{1,m}(0) for m = -1, 0, 1.
    let col = index.index(Block::A, 1, -1);
    f[(0, col)] = c * i;
    f[(1, col)] = c.into();
    let col = index.index(Block::A, 1, 0);
    f[(2, col)] = std::f64::consts::SQRT_2 * c * i;
    let col = index.index(Block::A, 1, 1);
    f[(0, col)] = -c * i;
    f[(1, col)] = c.into();
    f
}

/// Q = i F^dagger: outgoing multipole coefficients of unit-dipole radiation.
pub fn q_matrix(l_max: usize) -> DMatrix<Complex64> {
    let f = f_matrix(l_max);
    f.adjoint() * Complex64::i()
}
