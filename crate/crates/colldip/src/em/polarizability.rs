//! Dipole polarizability models and radiative-reaction dressing.
//!
//! Polarizabilities carry the dimension of a volume, so k^3 alpha is the
//! dimensionless coupling strength appearing in the structure matrix.

use num_complex::Complex64;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};

/// Evaluation frequency. Both variants are expressed as wavenumbers (inverse
/// length, in the same unit system as the positions): `Wavenumber(k)` for a
/// real frequency omega = c k, `ImaginaryWavenumber(kappa)` for omega = i xi
/// with kappa = xi / c.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Frequency {
    Wavenumber(f64),
    ImaginaryWavenumber(f64),
}

/// Scatterer polarizability model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PolarizabilityModel {
    /// Frequency-independent bare polarizability (a volume).
    Bare { alpha0: Complex64 },
    /// Dielectric sphere of radius R and fixed permittivity:
    /// alpha0 = 4 pi R^3 (eps - 1)/(eps + 2).
    ClausiusMossotti { radius: f64, epsilon: Complex64 },
    /// Metallic sphere with plasma permittivity eps(omega) = 1 - omega_p^2/omega^2,
    /// i.e. eps(i xi) = 1 + omega_p^2/xi^2, fed through Clausius-Mossotti.
    /// `omega_p` in rad/s; positions must then be in meters.
    Plasma { radius: f64, omega_p: f64 },
}

/// Sphere radius of the model, zero for a bare polarizability (used by
/// geometry overlap validation).
pub fn model_radius(model: &PolarizabilityModel) -> f64 {
    match model {
        PolarizabilityModel::Bare { .. } => 0.0,
        PolarizabilityModel::ClausiusMossotti { radius, .. }
        | PolarizabilityModel::Plasma { radius, .. } => *radius,
    }
}

fn clausius_mossotti(radius: f64, epsilon: Complex64) -> Result<Complex64> {
    if epsilon + 2.0 == Complex64::new(0.0, 0.0) {
        return Err(Error::PolarizabilityPole);
    }
    Ok(4.0 * std::f64::consts::PI * radius.powi(3) * (epsilon - 1.0) / (epsilon + 2.0))
}

/// Bare polarizability alpha_0 of the model at the given frequency.
///
/// At imaginary frequency the result must be real (passive response on the
/// imaginary axis); models that cannot guarantee that are rejected.
pub fn bare_polarizability(model: &PolarizabilityModel, freq: Frequency) -> Result<Complex64> {
    match (*model, freq) {
        (PolarizabilityModel::Bare { alpha0 }, Frequency::Wavenumber(_)) => Ok(alpha0),
        (PolarizabilityModel::Bare { alpha0 }, Frequency::ImaginaryWavenumber(_)) => {
            if alpha0.im != 0.0 {
                return Err(Error::Invalid(
                    "complex bare polarizability is ill-defined at imaginary frequency".into(),
                ));
            }
            Ok(alpha0)
        }
        (PolarizabilityModel::ClausiusMossotti { radius, epsilon }, Frequency::Wavenumber(_)) => {
            clausius_mossotti(radius, epsilon)
        }
        (
            PolarizabilityModel::ClausiusMossotti { radius, epsilon },
            Frequency::ImaginaryWavenumber(_),
        ) => {
            if epsilon.im != 0.0 {
                return Err(Error::Invalid(
                    "fixed complex permittivity has no continuation to imaginary frequency"
                        .into(),
                ));
            }
            clausius_mossotti(radius, epsilon)
        }
        (PolarizabilityModel::Plasma { radius, omega_p }, Frequency::Wavenumber(k)) => {
            let omega = k * SPEED_OF_LIGHT;
            let eps = Complex64::new(1.0 - omega_p * omega_p / (omega * omega), 0.0);
            clausius_mossotti(radius, eps)
        }
        (PolarizabilityModel::Plasma { radius, omega_p }, Frequency::ImaginaryWavenumber(kappa)) => {
            let xi = kappa * SPEED_OF_LIGHT;
            let eps = Complex64::new(1.0 + omega_p * omega_p / (xi * xi), 0.0);
            clausius_mossotti(radius, eps)
        }
    }
}

/// Radiative-reaction dressed polarizability
/// alpha = alpha_0 / (1 - i k^3 alpha_0 / 6 pi).
///
/// For real alpha_0 the result saturates the optical theorem,
/// Im alpha = k^3 |alpha|^2 / 6 pi.
pub fn dressed_polarizability(alpha0: Complex64, k: f64) -> Result<Complex64> {
    let denom = Complex64::new(1.0, 0.0)
        - Complex64::i() * k.powi(3) * alpha0 / (6.0 * std::f64::consts::PI);
    if denom.norm() == 0.0 {
        return Err(Error::RadiativeReactionSingular);
    }
    Ok(alpha0 / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn vacuum_sphere_does_not_scatter() {
        let model = PolarizabilityModel::ClausiusMossotti {
            radius: 2.0,
            epsilon: Complex64::new(1.0, 0.0),
        };
        let a = bare_polarizability(&model, Frequency::Wavenumber(1.0)).unwrap();
        assert_eq!(a, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn conductor_limit() {
        let r = 1.7;
        let model = PolarizabilityModel::ClausiusMossotti {
            radius: r,
            epsilon: Complex64::new(1e12, 0.0),
        };
        let a = bare_polarizability(&model, Frequency::Wavenumber(1.0)).unwrap();
        assert_relative_eq!(a.re, 4.0 * std::f64::consts::PI * r.powi(3), max_relative = 1e-10);
    }

    #[test]
    fn epsilon_ten() {
        // eps = 10: alpha0 = 4 pi R^3 * 9/12 = 3 pi R^3.
        let r = 0.8;
        let model = PolarizabilityModel::ClausiusMossotti {
            radius: r,
            epsilon: Complex64::new(10.0, 0.0),
        };
        let a = bare_polarizability(&model, Frequency::Wavenumber(1.0)).unwrap();
        assert_relative_eq!(a.re, 3.0 * std::f64::consts::PI * r.powi(3), epsilon = 1e-14);
        assert_eq!(a.im, 0.0);
    }

    #[test]
    fn pole_detected() {
        let model = PolarizabilityModel::ClausiusMossotti {
            radius: 1.0,
            epsilon: Complex64::new(-2.0, 0.0),
        };
        assert!(matches!(
            bare_polarizability(&model, Frequency::Wavenumber(1.0)),
            Err(Error::PolarizabilityPole)
        ));
    }

    #[test]
    fn plasma_static_limit_is_conductor() {
        let model = PolarizabilityModel::Plasma { radius: 20e-9, omega_p: 1.4e16 };
        // xi << omega_p: eps -> infinity, alpha0 -> 4 pi R^3.
        let a = bare_polarizability(
            &model,
            Frequency::ImaginaryWavenumber(1e10 / SPEED_OF_LIGHT),
        )
        .unwrap();
        assert_relative_eq!(
            a.re,
            4.0 * std::f64::consts::PI * 20e-9f64.powi(3),
            max_relative = 1e-10
        );
    }

    #[test]
    fn dressed_zero_is_zero() {
        let a = dressed_polarizability(Complex64::new(0.0, 0.0), 2.0).unwrap();
        assert_eq!(a, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn weak_coupling_expansion() {
        // alpha = alpha0 (1 + i k^3 alpha0/6 pi) + O(alpha0^3) at k^3 alpha0 = 1e-4.
        let k = 1.0;
        let alpha0 = Complex64::new(1e-4, 0.0);
        let a = dressed_polarizability(alpha0, k).unwrap();
        let second = alpha0 * (Complex64::new(1.0, 0.0)
            + Complex64::i() * k.powi(3) * alpha0 / (6.0 * std::f64::consts::PI));
        assert!((a - second).norm() < 1e-11 * alpha0.norm());
    }

    proptest! {
        #[test]
        fn optical_theorem_saturated_for_real_alpha0(
            alpha0 in 1e-3..1e2f64,
            k in 0.2..3.0f64,
        ) {
            let a = dressed_polarizability(Complex64::new(alpha0, 0.0), k).unwrap();
            let lhs = a.im;
            let rhs = k.powi(3) * a.norm_sqr() / (6.0 * std::f64::consts::PI);
            prop_assert!((lhs - rhs).abs() <= 1e-14 * lhs.abs().max(1e-300));
        }
    }
}
