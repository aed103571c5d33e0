//! Gauss-Legendre quadrature nodes and weights.
//!
//! Used for the surface integrals of the spherical-mode decomposition and,
//! through the rational map of [`semi_infinite_rule`], for the
//! imaginary-frequency dispersion integral.

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
///
/// Newton iteration on the Legendre recurrence; accurate to machine precision
/// for the orders used here (up to a few hundred points).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "quadrature order must be at least 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    // Symmetric rule: compute the non-negative half and mirror.
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..120 {
            let (p, d) = legendre_pair(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x.abs();
        nodes[n - 1 - i] = x.abs();
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// P_n(x) and P_n'(x) by upward recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for l in 1..n {
        let lf = l as f64;
        let p2 = ((2.0 * lf + 1.0) * x * p1 - lf * p0) / (lf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Nodes and weights for `int_0^inf f(xi) d xi` with the rational substitution
/// `xi = xi0 (1 + t) / (1 - t)`, `t` on the `n`-point Gauss-Legendre grid.
///
/// The scale `xi0` maps the node cluster to where the integrand lives; the
/// weights already contain the Jacobian `2 xi0 / (1 - t)^2`.
pub fn semi_infinite_rule(n: usize, xi0: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(xi0 > 0.0, "mapping scale must be positive");
    let (t, w) = gauss_legendre(n);
    let nodes = t.iter().map(|&t| xi0 * (1.0 + t) / (1.0 - t)).collect();
    let weights = t
        .iter()
        .zip(&w)
        .map(|(&t, &w)| w * 2.0 * xi0 / ((1.0 - t) * (1.0 - t)))
        .collect();
    (nodes, weights)
}
