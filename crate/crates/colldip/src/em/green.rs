//! Vacuum Green tensor at real and imaginary frequency.

use nalgebra::Matrix3;
use num_complex::Complex64;

use super::Vec3;
use crate::error::{Error, Result};

/// Dimensionless vacuum Green tensor G0(target, source, omega)/k,
///
///   G0/k = e^{i k r}/(4 pi k r) [ f1(kr) Id - f2(kr) u_r (x) u_r ],
///   f1(x) = (x^2 + i x - 1)/x^2,   f2(x) = (x^2 + 3 i x - 3)/x^2,
///
/// with r the separation and u_r the unit vector from source to target.
pub fn green_tensor(target: &Vec3, source: &Vec3, k: f64) -> Result<Matrix3<Complex64>> {
    let sep = target - source;
    let r = sep.norm();
    if r == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    let x = k * r;
    let ix = Complex64::new(0.0, x);
    let x2 = x * x;
    let f1 = (Complex64::new(x2 - 1.0, 0.0) + ix) / x2;
    let f2 = (Complex64::new(x2 - 3.0, 0.0) + 3.0 * ix) / x2;
    let prefactor = ix.exp() / (4.0 * std::f64::consts::PI * x);
    let u = sep / r;
    let mut g = Matrix3::zeros();
    for a in 0..3 {
        for b in 0..3 {
            let id = if a == b { 1.0 } else { 0.0 };
            g[(a, b)] = prefactor * (f1 * id - f2 * (u[a] * u[b]));
        }
    }
    Ok(g)
}

/// Green tensor continued to imaginary frequency omega = i xi, normalized by
/// kappa = xi / c:
///
///   G0(target, source, i xi)/kappa
///     = e^{-u}/(4 pi u) [ (1 + 1/u + 1/u^2) Id - (1 + 3/u + 3/u^2) u_r (x) u_r ],
///
/// with u = kappa r. Real, symmetric and exponentially decaying.
pub fn green_tensor_imag_freq(target: &Vec3, source: &Vec3, kappa: f64) -> Result<Matrix3<f64>> {
    if !(kappa > 0.0) {
        return Err(Error::Domain(format!(
            "imaginary wavenumber must be positive, got {kappa}"
        )));
    }
    let sep = target - source;
    let r = sep.norm();
    if r == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    let u = kappa * r;
    let a = 1.0 + 1.0 / u + 1.0 / (u * u);
    let b = 1.0 + 3.0 / u + 3.0 / (u * u);
    let prefactor = (-u).exp() / (4.0 * std::f64::consts::PI * u);
    let ur = sep / r;
    let mut g = Matrix3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            let id = if i == j { 1.0 } else { 0.0 };
            g[(i, j)] = prefactor * (a * id - b * ur[i] * ur[j]);
        }
    }
    Ok(g)
}
