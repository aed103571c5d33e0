//! Clebsch-Gordan coefficients by downward recurrence, and the product
//! coefficients entering the spherical translation theorems.
//!
//! For fixed (l1, m1, l2, m2) the whole column <alpha, beta | l1 m1 l2 m2>
//! (beta = m1 + m2) is generated in one sweep: the alpha = l1 + l2 seed has a
//! closed form, everything above is zero, and each lower alpha follows from a
//! three-term recurrence. Seeds are assembled in log space so columns stay
//! finite up to the 2 l_max = 48 needed by the translation operators.

use super::factorial::ln_factorial;
use crate::error::{Error, Result};

/// One Clebsch-Gordan column: <alpha, beta | l1 m1 l2 m2> for all alpha.
#[derive(Clone, Debug)]
pub struct CgColumn {
    pub l1: u32,
    pub m1: i32,
    pub l2: u32,
    pub m2: i32,
    /// Indexed by alpha from 0 to l1 + l2; entries below
    /// max(|beta|, |l1 - l2|) are exactly zero.
    values: Vec<f64>,
}

impl CgColumn {
    /// beta = m1 + m2, the only total projection with nonzero entries.
    pub fn beta(&self) -> i32 {
        self.m1 + self.m2
    }

    /// <alpha, beta | l1 m1 l2 m2>; zero outside the allowed alpha range.
    pub fn value(&self, alpha: u32) -> f64 {
        self.values.get(alpha as usize).copied().unwrap_or(0.0)
    }

    /// Smallest alpha with a (possibly) nonzero entry.
    pub fn alpha_min(&self) -> u32 {
        (self.beta().unsigned_abs()).max(self.l1.abs_diff(self.l2))
    }

    pub fn alpha_max(&self) -> u32 {
        self.l1 + self.l2
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Full column of Clebsch-Gordan coefficients by downward recurrence.
pub fn clebsch_gordan_column(l1: u32, m1: i32, l2: u32, m2: i32) -> Result<CgColumn> {
    if m1.unsigned_abs() > l1 || m2.unsigned_abs() > l2 {
        return Err(Error::Domain(format!(
            "projection out of range: |{m1}| > {l1} or |{m2}| > {l2}"
        )));
    }
    let top = (l1 + l2) as usize;
    let mut values = vec![0.0; top + 1];

    // Seed: closed form at alpha = l1 + l2.
    let beta = m1 + m2;
    let lb = (l1 + l2) as i32;
    let ln_top = 0.5
        * (ln_factorial((lb + beta) as u32) + ln_factorial((lb - beta) as u32)
            - ln_factorial((l1 as i32 + m1) as u32)
            - ln_factorial((l1 as i32 - m1) as u32)
            - ln_factorial((l2 as i32 + m2) as u32)
            - ln_factorial((l2 as i32 - m2) as u32))
        + 0.5
            * (ln_factorial(2 * l1) + ln_factorial(2 * l2) - ln_factorial(2 * l1 + 2 * l2));
    values[top] = ln_top.exp();

    // Downward recurrence; entries above the seed are zero by construction.
    let betaf = beta as f64;
    let lam1 = (l1 * (l1 + 1)) as f64;
    let lam2 = (l2 * (l2 + 1)) as f64;
    let ldiff = (l2 as f64 - l1 as f64).powi(2);
    let lsum = ((l1 + l2 + 1) as f64).powi(2);
    let xi = |alpha: usize| -> f64 {
        let ap1 = (alpha + 1) as f64;
        (ap1 * ap1 - betaf * betaf) * (ap1 * ap1 - ldiff) * (lsum - ap1 * ap1)
            / (ap1 * ap1 * (4.0 * ap1 * ap1 - 1.0))
    };
    let zeta = |alpha: usize| -> f64 {
        let ap1 = (alpha + 1) as f64;
        (m1 - m2) as f64 - betaf * (lam1 - lam2) / (ap1 * (ap1 + 1.0))
    };
    let alpha_min = (beta.unsigned_abs()).max(l1.abs_diff(l2)) as usize;
    for alpha in (alpha_min..top).rev() {
        let above1 = values[alpha + 1];
        let above2 = if alpha + 2 <= top { values[alpha + 2] } else { 0.0 };
        values[alpha] = zeta(alpha) / xi(alpha).sqrt() * above1
            - (xi(alpha + 1) / xi(alpha)).sqrt() * above2;
    }

    Ok(CgColumn { l1, m1, l2, m2, values })
}

/// Product coefficient of the translation theorems,
/// a(alpha, beta | l1 m1 l2 m2)
///   = sqrt((2l1+1)(2l2+1) / (4 pi (2 alpha + 1)))
///     <alpha beta | l1 m1 l2 m2> <alpha 0 | l1 0 l2 0>.
pub fn a_coeff(alpha: u32, beta: i32, l1: u32, m1: i32, l2: u32, m2: i32) -> Result<f64> {
    if beta != m1 + m2 {
        return Err(Error::Domain(format!(
            "beta = {beta} inconsistent with m1 + m2 = {}",
            m1 + m2
        )));
    }
    let col = clebsch_gordan_column(l1, m1, l2, m2)?;
    let col0 = clebsch_gordan_column(l1, 0, l2, 0)?;
    let norm = (((2 * l1 + 1) * (2 * l2 + 1)) as f64
        / (4.0 * std::f64::consts::PI * (2 * alpha + 1) as f64))
        .sqrt();
    Ok(norm * col.value(alpha) * col0.value(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Racah's closed-form sum, an evaluation path fully independent of the
    /// downward recurrence. Factorials stay exact in f64 for the l <= 6 range
    /// exercised here.
    fn racah_cg(l1: i32, m1: i32, l2: i32, m2: i32, j: i32, m: i32) -> f64 {
        if m != m1 + m2 || j < (l1 - l2).abs() || j > l1 + l2 || m.abs() > j {
            return 0.0;
        }
        let fact = |n: i32| -> f64 {
            assert!(n >= 0);
            (1..=n).map(|k| k as f64).product::<f64>().max(1.0)
        };
        let delta = fact(l1 + l2 - j) * fact(l1 - l2 + j) * fact(-l1 + l2 + j)
            / fact(l1 + l2 + j + 1);
        let prefactor = ((2 * j + 1) as f64
            * delta
            * fact(j + m)
            * fact(j - m)
            * fact(l1 + m1)
            * fact(l1 - m1)
            * fact(l2 + m2)
            * fact(l2 - m2))
        .sqrt();
        let t_min = 0.max(l2 - j - m1).max(l1 - j + m2);
        let t_max = (l1 + l2 - j).min(l1 - m1).min(l2 + m2);
        let mut sum = 0.0;
        for t in t_min..=t_max {
            let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign
                / (fact(t)
                    * fact(l1 + l2 - j - t)
                    * fact(l1 - m1 - t)
                    * fact(l2 + m2 - t)
                    * fact(j - l2 + m1 + t)
                    * fact(j - l1 - m2 + t));
        }
        prefactor * sum
    }

    #[test]
    fn stretched_state_is_unity() {
        let col = clebsch_gordan_column(1, 1, 1, 1).unwrap();
        assert_relative_eq!(col.value(2), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn top_value_closed_form() {
        for (l1, m1, l2, m2) in [(2u32, 1i32, 1u32, 0i32), (3, -2, 2, 2), (4, 0, 4, 3)] {
            let col = clebsch_gordan_column(l1, m1, l2, m2).unwrap();
            let beta = m1 + m2;
            let lb = (l1 + l2) as i32;
            let fact = |n: i32| -> f64 { (1..=n).map(|k| k as f64).product::<f64>().max(1.0) };
            let expected = (fact(lb + beta) * fact(lb - beta)
                / (fact(l1 as i32 + m1)
                    * fact(l1 as i32 - m1)
                    * fact(l2 as i32 + m2)
                    * fact(l2 as i32 - m2)))
            .sqrt()
                * (fact(2 * l1 as i32) * fact(2 * l2 as i32) / fact(2 * (l1 + l2) as i32)).sqrt();
            assert_relative_eq!(col.value(l1 + l2), expected, max_relative = 1e-13);
        }
    }

    #[test]
    fn one_one_table_against_racah() {
        // Full 9-column table for l1 = l2 = 1.
        for m1 in -1..=1 {
            for m2 in -1..=1 {
                let col = clebsch_gordan_column(1, m1, 1, m2).unwrap();
                for alpha in 0..=2u32 {
                    let expected = racah_cg(1, m1, 1, m2, alpha as i32, m1 + m2);
                    assert_relative_eq!(col.value(alpha), expected, epsilon = 1e-13);
                }
            }
        }
    }

    #[test]
    fn recurrence_vs_racah_to_l4() {
        // Every column with l1, l2 <= 4 agrees with the independent oracle.
        let mut worst: f64 = 0.0;
        for l1 in 0..=4u32 {
            for l2 in 0..=4u32 {
                for m1 in -(l1 as i32)..=(l1 as i32) {
                    for m2 in -(l2 as i32)..=(l2 as i32) {
                        let col = clebsch_gordan_column(l1, m1, l2, m2).unwrap();
                        for alpha in 0..=(l1 + l2) {
                            let oracle =
                                racah_cg(l1 as i32, m1, l2 as i32, m2, alpha as i32, m1 + m2);
                            worst = worst.max((col.value(alpha) - oracle).abs());
                        }
                    }
                }
            }
        }
        assert!(worst <= 1e-12, "max |recurrence - Racah| = {worst:.3e}");
    }

    #[test]
    fn columns_are_orthonormal() {
        // Completeness over alpha for each fixed projection pair.
        for l1 in 0..=4u32 {
            for l2 in 0..=4u32 {
                for m1 in -(l1 as i32)..=(l1 as i32) {
                    for m2 in -(l2 as i32)..=(l2 as i32) {
                        let col = clebsch_gordan_column(l1, m1, l2, m2).unwrap();
                        let total: f64 = col.values().iter().map(|v| v * v).sum();
                        assert_relative_eq!(total, 1.0, epsilon = 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn zeros_below_alpha_min() {
        let col = clebsch_gordan_column(4, 3, 2, 1).unwrap();
        assert_eq!(col.alpha_min(), 4);
        for alpha in 0..col.alpha_min() {
            assert_eq!(col.value(alpha), 0.0);
        }
    }

    #[test]
    fn a_coeff_parity_selection() {
        // <alpha 0 | l1 0 l2 0> vanishes when alpha + l1 + l2 is odd.
        for (alpha, l1, l2) in [(1u32, 1u32, 1u32), (2, 2, 1), (3, 2, 2)] {
            for m in -(l1.min(l2) as i32)..=(l1.min(l2) as i32) {
                let a = a_coeff(alpha, 0, l1, m, l2, -m).unwrap();
                assert!(
                    a.abs() < 1e-14,
                    "a({alpha}, 0 | {l1} {m} {l2} {}) = {a:.3e} should vanish",
                    -m
                );
            }
        }
    }

    #[test]
    fn a_coeff_explicit_values() {
        // a(0, 0 | 1 m 1 -m) folds in <0 0|1 m 1 -m> = (-1)^{1-m}/sqrt(3).
        let pi = std::f64::consts::PI;
        for m in -1..=1i32 {
            let a = a_coeff(0, 0, 1, m, 1, -m).unwrap();
            let cg = racah_cg(1, m, 1, -m, 0, 0);
            let cg0 = racah_cg(1, 0, 1, 0, 0, 0);
            let expected = (9.0 / (4.0 * pi)).sqrt() * cg * cg0;
            assert_relative_eq!(a, expected, epsilon = 1e-14);
            assert_relative_eq!(
                cg,
                if (1 - m) % 2 == 0 { 1.0 } else { -1.0 } / 3.0f64.sqrt(),
                epsilon = 1e-14
            );
        }
        // a(2, 0 | 1 0 1 0) = sqrt(9/20 pi) <2 0|1 0 1 0>^2 with <2 0|1 0 1 0> = sqrt(2/3).
        let a = a_coeff(2, 0, 1, 0, 1, 0).unwrap();
        assert_relative_eq!(racah_cg(1, 0, 1, 0, 2, 0), (2.0f64 / 3.0).sqrt(), epsilon = 1e-14);
        assert_relative_eq!(a, (9.0 / (20.0 * pi)).sqrt() * (2.0 / 3.0), max_relative = 1e-13);
    }

    #[test]
    fn invalid_projections_rejected() {
        assert!(clebsch_gordan_column(1, 2, 1, 0).is_err());
        assert!(a_coeff(2, 1, 1, 0, 1, 0).is_err()); // beta != m1 + m2
    }

    #[test]
    fn large_l_columns_stay_finite() {
        // Translation operators need columns up to l1 + l2 = 48.
        let col = clebsch_gordan_column(24, 7, 24, -3).unwrap();
        assert!(col.values().iter().all(|v| v.is_finite()));
        let total: f64 = col.values().iter().map(|v| v * v).sum();
        assert_relative_eq!(total, 1.0, epsilon = 1e-10);
    }
}
