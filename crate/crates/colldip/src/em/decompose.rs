//! Decomposition of a field into spherical-mode coefficients from the radial
//! field components on a sphere.
//!
//! The multipole coefficients follow from the orthogonality of the spherical
//! harmonics:
//!
//!   A_l^m = (k a)^2 / (i sqrt(l(l+1)) f_l(k a)) int E_r Y_lm^* dOmega,
//!
//! with f_l = xi^(1)_l for outgoing fields and psi_l for free fields, and the
//! same for B_l^m with the radial magnetic component. The surface integral is
//! a Gauss-Legendre rule in cos(theta) times a uniform trapezoid in phi,
//! exact for the spherical-harmonic bandwidth involved.

use nalgebra::DVector;
use num_complex::Complex64;

use super::modes::{Block, FieldKind, ModeIndex, SphericalFieldCoeffs};
use super::Vec3;
use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;
use crate::specfun::{riccati_psi_table, riccati_xi_table, AngularTables, HankelKind};

/// Threshold below which dividing by a radial function is refused.
const RADIAL_DIVISION_FLOOR: f64 = 1e-13;

/// Surface quadrature nodes (theta, phi, solid-angle weight).
pub struct SphereQuadrature {
    pub nodes: Vec<(f64, f64, f64)>,
}

/// Product rule with n_theta = 2 l_max + 2 Gauss-Legendre nodes in cos theta
/// and n_phi = 4 l_max + 4 uniform nodes in phi; integrates products of
/// spherical harmonics up to degree 2 l_max + 1 exactly.
pub fn sphere_quadrature(l_max: usize) -> SphereQuadrature {
    let n_theta = 2 * l_max + 2;
    let n_phi = 4 * l_max + 4;
    let (xs, ws) = gauss_legendre(n_theta);
    let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut nodes = Vec::with_capacity(n_theta * n_phi);
    for (x, w) in xs.iter().zip(&ws) {
        let theta = x.acos();
        for j in 0..n_phi {
            nodes.push((theta, dphi * j as f64, w * dphi));
        }
    }
    SphereQuadrature { nodes }
}

/// Coefficients of a field from its radial components sampled on the sphere
/// of radius `a`.
///
/// `sampler` returns (E . u_r, H . u_r) at a surface point, in units of
/// P0/sqrt(eps_0) and P0/sqrt(mu_0). `kind` selects the radial functions in
/// the denominators: `Outgoing` divides by xi^(1)_l(ka), `Free` by psi_l(ka).
pub fn decompose_field<F>(
    sampler: F,
    kind: FieldKind,
    a: f64,
    l_max: usize,
    k: f64,
) -> Result<SphericalFieldCoeffs>
where
    F: Fn(&Vec3) -> (Complex64, Complex64),
{
    if !(a > 0.0 && k > 0.0) {
        return Err(Error::Domain("decomposition needs a > 0 and k > 0".into()));
    }
    let ka = k * a;
    let radial: Vec<Complex64> = match kind {
        FieldKind::Free => riccati_psi_table(l_max, ka)
            .0
            .into_iter()
            .map(Complex64::from)
            .collect(),
        FieldKind::Outgoing => riccati_xi_table(HankelKind::Outgoing, l_max, ka)?.0,
        FieldKind::Incoming => {
            return Err(Error::Domain(
                "decomposition is defined for free and outgoing fields only".into(),
            ))
        }
    };
    let fname = match kind {
        FieldKind::Free => "psi",
        _ => "xi1",
    };
    for (l, f) in radial.iter().enumerate().skip(1) {
        if f.norm() < RADIAL_DIVISION_FLOOR {
            return Err(Error::RadialNearZero {
                function: fname,
                l,
                x: ka,
                value: f.norm(),
            });
        }
    }

    let index = ModeIndex::new(l_max)?;
    let half = index.half();
    let mut int_e = DVector::<Complex64>::zeros(half);
    let mut int_h = DVector::<Complex64>::zeros(half);
    let quad = sphere_quadrature(l_max);
    for &(theta, phi, w) in &quad.nodes {
        let (st, ct) = (theta.sin(), theta.cos());
        let point = Vec3::new(a * st * phi.cos(), a * st * phi.sin(), a * ct);
        let (er, hr) = sampler(&point);
        if er.norm_sqr() == 0.0 && hr.norm_sqr() == 0.0 {
            continue;
        }
        let tables = AngularTables::new(l_max, theta);
        for (i, (l, m)) in index.half_labels().enumerate() {
            let y_conj = tables.p(l, m) * Complex64::new(0.0, -(m as f64) * phi).exp();
            int_e[i] += w * er * y_conj;
            int_h[i] += w * hr * y_conj;
        }
    }

    let mut out = SphericalFieldCoeffs::zeros(kind, l_max)?;
    for (i, (l, m)) in index.half_labels().enumerate() {
        let lam = (l * (l + 1)) as f64;
        let front = ka * ka / (Complex64::i() * lam.sqrt() * radial[l]);
        out.set(Block::A, l, m, front * int_e[i]);
        out.set(Block::B, l, m, front * int_h[i]);
    }
    Ok(out)
}

/// A reduced decomposition radius k a in [l_max + 1, l_max + 4] keeping every
/// radial denominator |f_l(ka)|, l <= l_max, as large as possible (away from
/// the zeros of the Riccati-Bessel functions).
pub fn suggested_radius(kind: FieldKind, l_max: usize) -> f64 {
    let mut best = (l_max + 1) as f64;
    let mut best_min = 0.0f64;
    let mut ka = (l_max + 1) as f64;
    while ka <= (l_max + 4) as f64 {
        let min_val = match kind {
            FieldKind::Free => riccati_psi_table(l_max, ka)
                .0
                .iter()
                .skip(1)
                .map(|v| v.abs())
                .fold(f64::INFINITY, f64::min),
            _ => riccati_xi_table(HankelKind::Outgoing, l_max, ka)
                .map(|(xi, _)| xi.iter().skip(1).map(|v| v.norm()).fold(f64::INFINITY, f64::min))
                .unwrap_or(0.0),
        };
        if min_val > best_min {
            best_min = min_val;
            best = ka;
        }
        ka += 0.05;
    }
    best
}
