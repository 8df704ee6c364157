//! Globally adaptive 21-point Gauss-Kronrod quadrature for complex-valued
//! integrands on a finite interval.
//!
//! The real and imaginary parts share one panel tree; a panel is refined
//! while it carries the largest error estimate. The per-panel error is the
//! modulus of the difference between the Kronrod and embedded Gauss sums.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};

// Abscissae and weights of the 10-point Gauss / 21-point Kronrod pair.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Result of a converged integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: Complex64,
    /// Absolute error estimate (sum over panels of |K21 - G10|).
    pub error: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    abs_value: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod21<F>(f: &F, a: f64, b: f64) -> Panel
where
    F: Fn(f64) -> Complex64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut abs_sum = fc.norm() * WGK[10];

    for (j, (&x, &wk)) in XGK.iter().zip(WGK.iter()).take(10).enumerate() {
        let dx = half * x;
        let lo = f(center - dx);
        let hi = f(center + dx);
        let pair = lo + hi;
        kronrod += pair * wk;
        abs_sum += (lo.norm() + hi.norm()) * wk;
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }

    let width = half.abs();
    Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
        abs_value: abs_sum * width,
    }
}

/// Integrates `f` over `[a, b]` until the summed error estimate drops below
/// `rel_tol * |I|` (or the floating-point floor `50 eps * integral of |f|`).
///
/// Fails with [`Error::QuadratureFailure`] carrying the best estimate when
/// `max_panels` panels are in use without meeting the target.
pub fn integrate<F>(f: F, a: f64, b: f64, rel_tol: f64, max_panels: usize) -> Result<Quadrature>
where
    F: Fn(f64) -> Complex64,
{
    if !(rel_tol > 0.0 && rel_tol.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: rel_tol,
            reason: "must be positive and finite",
        });
    }
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::InvalidParameter {
            name: "b",
            value: b,
            reason: "integration bounds must be finite with a < b",
        });
    }
    let max_panels = max_panels.max(1);

    let first = kronrod21(&f, a, b);
    let mut heap = BinaryHeap::with_capacity(max_panels + 1);
    heap.push(first);

    let mut value = first.value;
    let mut error = first.error;
    let mut abs_value = first.abs_value;

    loop {
        let target = (rel_tol * value.norm()).max(50.0 * f64::EPSILON * abs_value);
        if error <= target {
            // Re-sum to shed drift from the running totals before accepting.
            let (v, e, s) = totals(&heap);
            value = v;
            error = e;
            abs_value = s;
            let target = (rel_tol * value.norm()).max(50.0 * f64::EPSILON * abs_value);
            if error <= target {
                return Ok(Quadrature {
                    value,
                    error,
                    panels: heap.len(),
                });
            }
        }
        if heap.len() >= max_panels {
            break;
        }

        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel cannot be split any further in f64.
            heap.push(worst);
            break;
        }
        let left = kronrod21(&f, worst.a, mid);
        let right = kronrod21(&f, mid, worst.b);

        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        abs_value += left.abs_value + right.abs_value - worst.abs_value;
        heap.push(left);
        heap.push(right);
    }

    let (value, error, _) = totals(&heap);
    Err(Error::QuadratureFailure {
        estimate: value,
        error,
        panels: heap.len(),
    })
}

fn totals(heap: &BinaryHeap<Panel>) -> (Complex64, f64, f64) {
    heap.iter()
        .fold((Complex64::new(0.0, 0.0), 0.0, 0.0), |(v, e, s), p| {
            (v + p.value, e + p.error, s + p.abs_value)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_is_exact_on_one_panel() {
        let q = integrate(
            |x| Complex64::new(x.powi(7), -3.0 * x * x),
            0.0,
            2.0,
            1e-12,
            100,
        )
        .unwrap();
        assert_eq!(q.panels, 1);
        assert_relative_eq!(q.value.re, 32.0, max_relative = 1e-14);
        assert_relative_eq!(q.value.im, -8.0, max_relative = 1e-14);
    }

    #[test]
    fn oscillatory_exponential() {
        // integral_0^1 exp(i 200 x) dx = (exp(200 i) - 1) / (200 i)
        let k = 200.0;
        let exact = (Complex64::new(0.0, k).exp() - 1.0) / Complex64::new(0.0, k);
        let q = integrate(
            |x| Complex64::new(0.0, k * x).exp(),
            0.0,
            1.0,
            1e-12,
            10_000,
        )
        .unwrap();
        assert!((q.value - exact).norm() <= 1e-12 * exact.norm());
        assert!(q.panels > 1);
    }

    #[test]
    fn endpoint_singularity_converges() {
        // integral_0^1 x^-1/2 dx = 2
        let q = integrate(
            |x| Complex64::new(x.powf(-0.5), 0.0),
            0.0,
            1.0,
            1e-10,
            10_000,
        )
        .unwrap();
        assert_relative_eq!(q.value.re, 2.0, max_relative = 1e-9);
    }

    #[test]
    fn budget_exhaustion_reports_best_estimate() {
        let err =
            integrate(|x| Complex64::new((1.0 / x).sin(), 0.0), 0.0, 1.0, 1e-14, 8).unwrap_err();
        match err {
            Error::QuadratureFailure {
                panels,
                error,
                estimate,
            } => {
                assert_eq!(panels, 8);
                assert!(error > 0.0);
                assert!(estimate.re.is_finite());
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let f = |_: f64| Complex64::new(1.0, 0.0);
        assert!(integrate(f, 0.0, 1.0, 0.0, 10).is_err());
        assert!(integrate(f, 1.0, 0.0, 1e-8, 10).is_err());
        assert!(integrate(f, 0.0, f64::INFINITY, 1e-8, 10).is_err());
    }
}
