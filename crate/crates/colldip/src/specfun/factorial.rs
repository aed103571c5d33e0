//! Log-factorials for Clebsch-Gordan seed values.
//!
//! The closed-form seed of the downward recurrence involves factorials up to
//! (2 l1 + 2 l2)!, which overflows f64 around l = 85; all factorial ratios
//! are therefore assembled in log space.

use std::sync::OnceLock;

const TABLE_LEN: usize = 512;

fn table() -> &'static [f64; TABLE_LEN] {
    static TABLE: OnceLock<[f64; TABLE_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0.0; TABLE_LEN];
        for n in 2..TABLE_LEN {
            t[n] = t[n - 1] + (n as f64).ln();
        }
        t
    })
}

/// ln(n!) for n >= 0.
pub(crate) fn ln_factorial(n: u32) -> f64 {
    let n = n as usize;
    assert!(n < TABLE_LEN, "ln_factorial table exceeded: {n}");
    table()[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn matches_direct_products() {
        assert_eq!(ln_factorial(0), 0.0);
        assert_eq!(ln_factorial(1), 0.0);
        assert_relative_eq!(ln_factorial(5), 120f64.ln(), epsilon = 1e-15);
        assert_relative_eq!(ln_factorial(20), 2.43290200817664e18f64.ln(), epsilon = 1e-14);
    }
}
