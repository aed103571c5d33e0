//! Associated Legendre polynomials, spherical harmonics and the angular
//! functions of the vector spherical modes.
//!
//! The Condon-Shortley phase is included throughout, so that
//! P_1^1(cos theta) = -sin theta and Y_{1,1} = -sqrt(3/8 pi) sin theta e^{i phi}.

use num_complex::Complex64;

use super::factorial::ln_factorial;
use crate::error::{Error, Result};

/// Associated Legendre polynomial P_l^m(x), Condon-Shortley phase.
///
/// Negative orders use P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
pub fn assoc_legendre(l: u32, m: i32, x: f64) -> Result<f64> {
    if m.unsigned_abs() > l {
        return Err(Error::Domain(format!("|m| = {} exceeds l = {}", m.abs(), l)));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("argument x = {x} outside [-1, 1]")));
    }
    let ma = m.unsigned_abs();
    let mut value = positive_order_legendre(l, ma, x);
    if m < 0 {
        let ratio = (ln_factorial(l - ma) - ln_factorial(l + ma)).exp();
        value *= ratio * if ma % 2 == 0 { 1.0 } else { -1.0 };
    }
    Ok(value)
}

/// P_l^m for m >= 0 by the standard diagonal-then-upward recurrence.
fn positive_order_legendre(l: u32, m: u32, x: f64) -> f64 {
    let s = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
    // P_m^m = (-1)^m (2m - 1)!! s^m
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= -((2 * k - 1) as f64) * s;
    }
    if l == m {
        return pmm;
    }
    let mut p_prev = pmm;
    let mut p = x * (2 * m + 1) as f64 * pmm;
    for ll in (m + 2)..=l {
        let llf = ll as f64;
        let mf = m as f64;
        let next = ((2.0 * llf - 1.0) * x * p - (llf + mf - 1.0) * p_prev) / (llf - mf);
        p_prev = p;
        p = next;
    }
    p
}

/// Spherical harmonic Y_{l,m}(theta, phi), orthonormal over the unit sphere.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if m.unsigned_abs() > l {
        return Err(Error::Domain(format!("|m| = {} exceeds l = {}", m.abs(), l)));
    }
    let tables = AngularTables::new(l as usize, theta);
    Ok(tables.y(l as usize, m as i64, phi))
}

/// Normalized associated Legendre values and the two angular functions of the
/// vector spherical modes, tabulated at a fixed polar angle for all
/// `0 <= m <= l <= l_max`.
///
/// Stored quantities (norm = sqrt((2l+1)(l-m)!/(4 pi (l+m)!))):
/// - `p`:   norm * P_l^m(cos theta)               (so Y = p e^{i m phi})
/// - `r`:   norm * P_l^m(cos theta) / sin theta   (regular at the poles, m >= 1)
/// - `tau`: norm * d P_l^m(cos theta) / d theta
pub struct AngularTables {
    l_max: usize,
    p: Vec<f64>,
    r: Vec<f64>,
    tau: Vec<f64>,
}

#[inline]
fn tri(l: usize, m: usize) -> usize {
    l * (l + 1) / 2 + m
}

impl AngularTables {
    pub fn new(l_max: usize, theta: f64) -> Self {
        let x = theta.cos();
        let s = theta.sin();
        let len = tri(l_max, l_max) + 1;
        let mut p = vec![0.0; len];
        let mut r = vec![0.0; len];
        let mut tau = vec![0.0; len];

        let inv_sqrt_4pi = 0.5 / std::f64::consts::PI.sqrt();
        p[tri(0, 0)] = inv_sqrt_4pi;

        // Diagonal seeds: p_m^m carries s^m, r_m^m carries s^{m-1}.
        if l_max >= 1 {
            r[tri(1, 1)] = -(1.5f64).sqrt() * inv_sqrt_4pi;
            p[tri(1, 1)] = r[tri(1, 1)] * s;
        }
        for m in 2..=l_max {
            let f = -((2 * m + 1) as f64 / (2 * m) as f64).sqrt() * s;
            p[tri(m, m)] = f * p[tri(m - 1, m - 1)];
            r[tri(m, m)] = f * r[tri(m - 1, m - 1)];
        }
        // First off-diagonal and upward recurrence, identical for p and r.
        for m in 0..l_max {
            let f = ((2 * m + 3) as f64).sqrt() * x;
            p[tri(m + 1, m)] = f * p[tri(m, m)];
            r[tri(m + 1, m)] = f * r[tri(m, m)];
            for l in (m + 2)..=l_max {
                let lf = l as f64;
                let mf = m as f64;
                let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
                let b = (((lf - 1.0) * (lf - 1.0) - mf * mf)
                    / (4.0 * (lf - 1.0) * (lf - 1.0) - 1.0))
                    .sqrt();
                p[tri(l, m)] = a * (x * p[tri(l - 1, m)] - b * p[tri(l - 2, m)]);
                r[tri(l, m)] = a * (x * r[tri(l - 1, m)] - b * r[tri(l - 2, m)]);
            }
        }
        // tau_l^0 = sqrt(l(l+1)) p_l^1; tau_l^m = l x r_l^m - c r_{l-1}^m.
        for l in 1..=l_max {
            let lf = l as f64;
            tau[tri(l, 0)] = (lf * (lf + 1.0)).sqrt() * p[tri(l, 1)];
            for m in 1..=l {
                let mf = m as f64;
                let mut t = lf * x * r[tri(l, m)];
                if l > m {
                    let c = ((lf * lf - mf * mf) * (2.0 * lf + 1.0) / (2.0 * lf - 1.0)).sqrt();
                    t -= c * r[tri(l - 1, m)];
                }
                tau[tri(l, m)] = t;
            }
        }

        Self { l_max, p, r, tau }
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    /// Sign factor (-1)^m mapping a negative order onto the stored m >= 0 one.
    #[inline]
    fn signed(&self, table: &[f64], l: usize, m: i64) -> f64 {
        let ma = m.unsigned_abs() as usize;
        debug_assert!(l <= self.l_max && ma <= l);
        let v = table[tri(l, ma)];
        if m < 0 && ma % 2 == 1 {
            -v
        } else {
            v
        }
    }

    /// Normalized P_l^m(cos theta) with signed m.
    #[inline]
    pub fn p(&self, l: usize, m: i64) -> f64 {
        self.signed(&self.p, l, m)
    }

    /// Normalized P_l^m(cos theta)/sin(theta) with signed m (m != 0).
    #[inline]
    pub fn r(&self, l: usize, m: i64) -> f64 {
        self.signed(&self.r, l, m)
    }

    /// Normalized d P_l^m(cos theta)/d theta with signed m.
    #[inline]
    pub fn tau(&self, l: usize, m: i64) -> f64 {
        self.signed(&self.tau, l, m)
    }

    /// Y_{l,m}(theta, phi) assembled from the table.
    #[inline]
    pub fn y(&self, l: usize, m: i64, phi: f64) -> Complex64 {
        self.p(l, m) * Complex64::new(0.0, m as f64 * phi).exp()
    }
}
