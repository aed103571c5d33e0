//! Riccati-Bessel functions psi_l(x) = x j_l(x), Riccati-Hankel functions
//! xi_l^{(q)}(x) = x h_l^{(q)}(x) and spherical Bessel functions.
//!
//! psi tables use Miller's downward recurrence (with rescaling) for x below
//! the top order and plain upward recurrence above it; the Neumann part of xi
//! is always computed upward, which is its stable direction. Derivatives come
//! from f_l' = f_{l-1} - (l/x) f_l, shared by every member of the family.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Which Riccati-Hankel function: q = 1 outgoing, q = 2 incoming.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelKind {
    Outgoing,
    Incoming,
}

const RESCALE_THRESHOLD: f64 = 1e250;
const MILLER_MARGIN: usize = 26;

/// Spherical Bessel functions j_0 .. j_{l_max} at x >= 0.
pub fn spherical_j_table(l_max: usize, x: f64) -> Vec<f64> {
    assert!(x >= 0.0 && x.is_finite(), "argument must be finite and >= 0");
    if x == 0.0 {
        let mut j = vec![0.0; l_max + 1];
        j[0] = 1.0;
        return j;
    }
    if x >= 2.0 * l_max as f64 + 4.0 {
        // Every computed order stays well below the turning point l ~ x,
        // where upward recurrence keeps full accuracy. Closer to the turning
        // point it loses digits, so the downward branch takes over there.
        let mut j = vec![0.0; l_max + 1];
        j[0] = x.sin() / x;
        if l_max >= 1 {
            j[1] = x.sin() / (x * x) - x.cos() / x;
        }
        for l in 1..l_max {
            j[l + 1] = (2 * l + 1) as f64 / x * j[l] - j[l - 1];
        }
        return j;
    }
    // Miller's algorithm: seed two orders above the top with an arbitrary
    // small value, recur downward, then normalize against the closed forms
    // for j_0 and j_1 (whichever is larger, so zeros of sin x are harmless).
    let start = l_max + MILLER_MARGIN + x as usize;
    let mut j = vec![0.0; start + 2];
    j[start + 1] = 0.0;
    j[start] = 1e-30;
    for l in (1..=start).rev() {
        let next = (2 * l + 1) as f64 / x * j[l] - j[l + 1];
        j[l - 1] = next;
        if next.abs() > RESCALE_THRESHOLD {
            for v in j[l - 1..].iter_mut() {
                *v /= RESCALE_THRESHOLD;
            }
        }
    }
    let j0 = x.sin() / x;
    let j1 = x.sin() / (x * x) - x.cos() / x;
    let scale = if j0.abs() >= j1.abs() {
        j0 / j[0]
    } else {
        j1 / j[1]
    };
    j.truncate(l_max + 1);
    for v in &mut j {
        *v *= scale;
    }
    j
}

/// Riccati-Bessel values psi_0..psi_{l_max} and derivatives at x >= 0.
pub fn riccati_psi_table(l_max: usize, x: f64) -> (Vec<f64>, Vec<f64>) {
    let j = spherical_j_table(l_max, x);
    let psi: Vec<f64> = j.iter().map(|&j| x * j).collect();
    let mut dpsi = vec![0.0; l_max + 1];
    dpsi[0] = x.cos();
    for l in 1..=l_max {
        // psi_l' = psi_{l-1} - l j_l, valid at x = 0 as well.
        dpsi[l] = psi[l - 1] - l as f64 * j[l];
    }
    (psi, dpsi)
}

/// Complex-argument Riccati-Bessel table (needed on the imaginary frequency
/// axis); same Miller scheme in complex arithmetic.
pub fn riccati_psi_table_complex(l_max: usize, z: Complex64) -> (Vec<Complex64>, Vec<Complex64>) {
    let zero = Complex64::new(0.0, 0.0);
    if z == zero {
        let mut dpsi = vec![zero; l_max + 1];
        dpsi[0] = Complex64::new(1.0, 0.0);
        return (vec![zero; l_max + 1], dpsi);
    }
    let r = z.norm();
    let mut j = if r >= 2.0 * l_max as f64 + 4.0 {
        let mut j = vec![zero; l_max + 1];
        j[0] = z.sin() / z;
        if l_max >= 1 {
            j[1] = z.sin() / (z * z) - z.cos() / z;
        }
        for l in 1..l_max {
            j[l + 1] = (2 * l + 1) as f64 / z * j[l] - j[l - 1];
        }
        j
    } else {
        let start = l_max + MILLER_MARGIN + r as usize;
        let mut j = vec![zero; start + 2];
        j[start] = Complex64::new(1e-30, 0.0);
        for l in (1..=start).rev() {
            let next = (2 * l + 1) as f64 / z * j[l] - j[l + 1];
            j[l - 1] = next;
            if next.norm() > RESCALE_THRESHOLD {
                for v in j[l - 1..].iter_mut() {
                    *v /= RESCALE_THRESHOLD;
                }
            }
        }
        let j0 = z.sin() / z;
        let j1 = z.sin() / (z * z) - z.cos() / z;
        let scale = if j0.norm() >= j1.norm() {
            j0 / j[0]
        } else {
            j1 / j[1]
        };
        j.truncate(l_max + 1);
        for v in &mut j {
            *v *= scale;
        }
        j
    };
    for v in &mut j {
        *v *= z;
    }
    let psi = j;
    let mut dpsi = vec![zero; l_max + 1];
    dpsi[0] = z.cos();
    for l in 1..=l_max {
        dpsi[l] = psi[l - 1] - l as f64 / z * psi[l];
    }
    (psi, dpsi)
}

/// Riccati-Hankel values xi^{(q)}_0..xi^{(q)}_{l_max} and derivatives, x > 0.
pub fn riccati_xi_table(
    kind: HankelKind,
    l_max: usize,
    x: f64,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "Riccati-Hankel functions require x > 0, got {x}"
        )));
    }
    let (psi, _) = riccati_psi_table(l_max, x);
    // zeta_l = x y_l(x): the Neumann part, stable upward.
    let mut zeta = vec![0.0; l_max + 1];
    zeta[0] = -x.cos();
    if l_max >= 1 {
        zeta[1] = -x.cos() / x - x.sin();
    }
    for l in 1..l_max {
        zeta[l + 1] = (2 * l + 1) as f64 / x * zeta[l] - zeta[l - 1];
    }
    let sign = match kind {
        HankelKind::Outgoing => 1.0,
        HankelKind::Incoming => -1.0,
    };
    let xi: Vec<Complex64> = psi
        .iter()
        .zip(&zeta)
        .map(|(&p, &z)| Complex64::new(p, sign * z))
        .collect();
    let mut dxi = vec![Complex64::new(0.0, 0.0); l_max + 1];
    dxi[0] = Complex64::new(x.cos(), sign * x.sin());
    for l in 1..=l_max {
        dxi[l] = xi[l - 1] - l as f64 / x * xi[l];
    }
    Ok((xi, dxi))
}

/// (psi_l(x), psi_l'(x)) for real argument (any finite x, by parity).
pub fn riccati_bessel(l: usize, x: f64) -> (f64, f64) {
    if x < 0.0 {
        // psi_l(-x) = (-1)^{l+1} psi_l(x), so psi_l'(-x) = (-1)^l psi_l'(x).
        let (p, dp) = riccati_bessel(l, -x);
        let s = if l % 2 == 0 { 1.0 } else { -1.0 };
        return (-s * p, s * dp);
    }
    let (psi, dpsi) = riccati_psi_table(l, x);
    (psi[l], dpsi[l])
}

/// (psi_l(z), psi_l'(z)) for complex argument.
pub fn riccati_bessel_complex(l: usize, z: Complex64) -> (Complex64, Complex64) {
    let (psi, dpsi) = riccati_psi_table_complex(l, z);
    (psi[l], dpsi[l])
}

/// (xi^{(q)}_l(x), xi^{(q)}_l'(x)), x > 0.
pub fn riccati_hankel(kind: HankelKind, l: usize, x: f64) -> Result<(Complex64, Complex64)> {
    let (xi, dxi) = riccati_xi_table(kind, l, x)?;
    Ok((xi[l], dxi[l]))
}

/// Spherical Bessel function j_l(x); limit values at x = 0.
pub fn spherical_bessel_j(l: usize, x: f64) -> f64 {
    if x < 0.0 {
        let s = if l % 2 == 0 { 1.0 } else { -1.0 };
        return s * spherical_bessel_j(l, -x);
    }
    spherical_j_table(l, x)[l]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Direct power series, independent of the recurrences.
    fn j_series(l: usize, x: f64) -> f64 {
        let mut double_fact = 1.0; // (2l+1)!!
        for k in 0..=l {
            double_fact *= (2 * k + 1) as f64;
        }
        let mut term = x.powi(l as i32) / double_fact;
        let mut sum = term;
        for s in 1..60 {
            term *= -(x * x / 2.0) / (s as f64 * (2 * (l + s) + 1) as f64);
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum
    }

    #[test]
    fn psi0_closed_form() {
        let x = std::f64::consts::FRAC_PI_2;
        let (psi, dpsi) = riccati_bessel(0, x);
        assert_relative_eq!(psi, 1.0, epsilon = 1e-15);
        assert_relative_eq!(dpsi, x.cos(), epsilon = 1e-15);
    }

    #[test]
    fn psi1_small_argument() {
        for &x in &[1e-4, 1e-6, 1e-8] {
            let (psi, dpsi) = riccati_bessel(1, x);
            assert_relative_eq!(psi, x * x / 3.0, max_relative = 1e-7);
            assert_relative_eq!(dpsi, 2.0 * x / 3.0, max_relative = 1e-7);
        }
        // Tighter at 1e-6 where the x^2/10 correction is 1e-13.
        let (psi, _) = riccati_bessel(1, 1e-6);
        assert_relative_eq!(psi, 1e-12 / 3.0, max_relative = 1e-12);
    }

    #[test]
    fn psi_is_mean_of_hankel_pair() {
        for &x in &[0.5, 5.0, 50.0] {
            let (xi1, dxi1) = riccati_xi_table(HankelKind::Outgoing, 24, x).unwrap();
            let (xi2, dxi2) = riccati_xi_table(HankelKind::Incoming, 24, x).unwrap();
            let (psi, dpsi) = riccati_psi_table(24, x);
            for l in 0..=24 {
                let mean = (xi1[l] + xi2[l]) / 2.0;
                let dmean = (dxi1[l] + dxi2[l]) / 2.0;
                assert_relative_eq!(mean.re, psi[l], max_relative = 1e-10, epsilon = 1e-12);
                assert!(mean.im.abs() < 1e-12 * (1.0 + xi1[l].norm()));
                assert_relative_eq!(dmean.re, dpsi[l], max_relative = 1e-10, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn hankel_pair_conjugate_on_real_axis() {
        let (xi1, _) = riccati_xi_table(HankelKind::Outgoing, 12, 3.3).unwrap();
        let (xi2, _) = riccati_xi_table(HankelKind::Incoming, 12, 3.3).unwrap();
        for l in 0..=12 {
            assert_relative_eq!(xi2[l].re, xi1[l].re, epsilon = 1e-14);
            assert_relative_eq!(xi2[l].im, -xi1[l].im, epsilon = 1e-14);
        }
    }

    #[test]
    fn xi1_order_one_closed_form() {
        // xi_1^{(1)}(x) = -i(-i x + 1) e^{ix}/x
        for &x in &[0.7, 2.0, 9.4] {
            let (xi, _) = riccati_hankel(HankelKind::Outgoing, 1, x).unwrap();
            let expected = -Complex64::i() * (-Complex64::i() * x + 1.0)
                * (Complex64::i() * x).exp()
                / x;
            assert_relative_eq!(xi.re, expected.re, epsilon = 1e-13);
            assert_relative_eq!(xi.im, expected.im, epsilon = 1e-13);
        }
    }

    #[test]
    fn wronskian_identity() {
        // psi_l xi_l' - psi_l' xi_l = i for the outgoing kind.
        for &x in &[1.0, 10.0] {
            let (psi, dpsi) = riccati_psi_table(24, x);
            let (xi, dxi) = riccati_xi_table(HankelKind::Outgoing, 24, x).unwrap();
            for l in 0..=24 {
                let w = psi[l] * dxi[l] - dpsi[l] * xi[l];
                assert_relative_eq!(w.re, 0.0, epsilon = 1e-10);
                assert_relative_eq!(w.im, 1.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn j_limits_at_zero() {
        assert_eq!(spherical_bessel_j(0, 0.0), 1.0);
        assert_eq!(spherical_bessel_j(3, 0.0), 0.0);
        for &x in &[1e-8, 1e-4] {
            assert_relative_eq!(spherical_bessel_j(1, x), x / 3.0, max_relative = 1e-7);
        }
    }

    #[test]
    fn downward_recurrence_matches_series() {
        // Two independent evaluation paths agree to 1e-12.
        assert_relative_eq!(spherical_bessel_j(5, 10.0), j_series(5, 10.0), max_relative = 1e-12);
        // The alternating series cancels catastrophically beyond x ~ 10, so
        // the oracle comparison stays below that.
        for l in 0..=24 {
            for &x in &[0.3, 2.0, 7.5] {
                assert_relative_eq!(
                    spherical_bessel_j(l, x),
                    j_series(l, x),
                    max_relative = 1e-11,
                    epsilon = 1e-290
                );
            }
        }
        // Upward and downward branches agree where they meet.
        for l_max in [4usize, 10] {
            let x = 2.0 * l_max as f64 + 4.0;
            let up = spherical_j_table(l_max, x);
            let down = spherical_j_table(l_max, x - 1e-9);
            for l in 0..=l_max {
                assert_relative_eq!(up[l], down[l], max_relative = 1e-7);
            }
        }
    }

    #[test]
    fn complex_table_matches_real_axis_and_series() {
        let z = Complex64::new(2.5, 0.0);
        let (psi_c, dpsi_c) = riccati_psi_table_complex(16, z);
        let (psi, dpsi) = riccati_psi_table(16, 2.5);
        for l in 0..=16 {
            assert_relative_eq!(psi_c[l].re, psi[l], max_relative = 1e-12, epsilon = 1e-300);
            assert_relative_eq!(dpsi_c[l].re, dpsi[l], max_relative = 1e-12, epsilon = 1e-300);
        }
        // Off-axis: psi_0(z) = sin z.
        let z = Complex64::new(1.2, 0.8);
        let (psi_c, _) = riccati_psi_table_complex(8, z);
        let s = z.sin();
        assert_relative_eq!(psi_c[0].re, s.re, epsilon = 1e-14);
        assert_relative_eq!(psi_c[0].im, s.im, epsilon = 1e-14);
    }

    #[test]
    fn hankel_domain_error() {
        assert!(riccati_hankel(HankelKind::Outgoing, 1, 0.0).is_err());
        assert!(riccati_hankel(HankelKind::Outgoing, 1, -2.0).is_err());
    }
}
