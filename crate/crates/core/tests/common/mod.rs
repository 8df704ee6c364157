//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;

/// Composite Simpson rule for the substituted Fuchs integrand
/// `(u - u^3)(1 - e^{-w/u})/(1 - p e^{-w/u})` on `[0, 1]` with `panels`
/// subintervals (rounded up to even). Written directly from the formula,
/// without any of the library's evaluation code.
pub fn simpson_fuchs(w: Complex64, p: f64, panels: usize) -> Complex64 {
    let n = panels + panels % 2;
    let h = 1.0 / n as f64;
    let f = |u: f64| -> Complex64 {
        if u == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let e = (-w / u).exp();
        (1.0 - e) / (1.0 - p * e) * (u - u * u * u)
    };
    let mut odd = Complex64::new(0.0, 0.0);
    let mut even = Complex64::new(0.0, 0.0);
    for i in 1..n {
        let v = f(i as f64 * h);
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    (f(0.0) + f(1.0) + odd * 4.0 + even * 2.0) * (h / 3.0)
}

/// Midpoint Riemann sum of the integrand in the original variable on
/// `[1, t_max]`, plus the analytic tail of `t^-3 - t^-5` beyond `t_max`
/// (valid when `e^{-w t_max}` is negligible).
pub fn riemann_fuchs_t(w: Complex64, p: f64, t_max: f64, points: usize) -> Complex64 {
    let h = (t_max - 1.0) / points as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..points {
        let t = 1.0 + (i as f64 + 0.5) * h;
        let e = (-w * t).exp();
        sum += (1.0 - e) / (1.0 - p * e) * (t.powi(-3) - t.powi(-5));
    }
    let tail = 0.5 / (t_max * t_max) - 0.25 / t_max.powi(4);
    sum * h + tail
}

/// The 20 (w, p) points used for the quadrature cross-check, spanning
/// Im(w)/Re(w) from 0 to -1e3.
pub const QUADRATURE_POINTS: [(f64, f64, f64); 20] = [
    (0.05, 0.0, 0.0),
    (0.05, -0.5, 0.3),
    (0.05, -5.0, 0.7),
    (0.05, -50.0, 0.5),
    (0.2, 0.0, 0.5),
    (0.2, -2.0, 0.0),
    (0.2, -20.0, 0.9),
    (0.2, -200.0, 0.3),
    (1.0, 0.0, 0.3),
    (1.0, 1.0, 0.5),
    (1.0, -10.0, 0.7),
    (1.0, -100.0, 0.0),
    (1.0, -1000.0, 0.5),
    (5.0, 0.0, 0.9),
    (5.0, -50.0, 0.3),
    (5.0, -500.0, 0.7),
    (5.0, -5000.0, 0.0),
    (20.0, 0.0, 0.5),
    (20.0, -200.0, 0.0),
    (50.0, -50000.0, 0.3),
];
