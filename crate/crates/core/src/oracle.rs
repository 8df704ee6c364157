//! Exact s-wave solution for a slab with a local (position-independent)
//! conductivity, used to check the thin-film formulas.
//!
//! Eliminating `H_z` from the slab field equations gives `E'' + q^2 E = 0`
//! with `q^2 = k^2 cos^2 theta + 4 pi i omega sigma / c^2`. Imposing
//! `E(0) = -E(d)` and `E(0) = E(d)` gives
//!
//! ```text
//! z1 = -(i k / q) tan(q d / 2)
//! z2 =  (i k / q) cot(q d / 2)
//! ```
//!
//! Both are evaluated through the even function `tan(x)/x` of `x = q d / 2`,
//! so the choice of square-root branch for `q` drops out.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::conductivity::drude_conductivity;
use crate::error::{ensure_finite, ensure_in_range, ensure_positive, Error, Result};
use crate::material::{derive_bulk, FilmSetup, MaterialParams, SPEED_OF_LIGHT};
use crate::optics::{film_coefficients, tra_from_impedances, ImpedancePair, OpticalCoefficients};

/// `|cos(qd/2)|` or `|sin(qd/2)|` below this is treated as a slab resonance.
pub const RESONANCE_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalSlabParams {
    /// Local conductivity, 1/s.
    pub sigma_local: Complex64,
    pub thickness: f64,
    pub theta: f64,
    pub omega: f64,
}

impl LocalSlabParams {
    pub fn validate(&self) -> Result<()> {
        ensure_finite("re_sigma", self.sigma_local.re)?;
        ensure_finite("im_sigma", self.sigma_local.im)?;
        if self.sigma_local.re < 0.0 {
            return Err(Error::InvalidParameter {
                name: "re_sigma",
                value: self.sigma_local.re,
                reason: "local conductivity must be passive",
            });
        }
        ensure_positive("d", self.thickness)?;
        ensure_in_range("theta", self.theta, 0.0, FRAC_PI_2)?;
        ensure_in_range("omega", self.omega, 0.0, f64::MAX)
    }

    fn k(&self) -> f64 {
        self.omega / SPEED_OF_LIGHT
    }

    /// `q^2 = k^2 cos^2 theta + 4 pi i omega sigma / c^2`, 1/cm^2.
    pub fn wavevector_squared(&self) -> Complex64 {
        let k = self.k();
        let cos = self.theta.cos();
        Complex64::new(k * k * cos * cos, 0.0)
            + Complex64::i()
                * self.sigma_local
                * (4.0 * PI * self.omega / (SPEED_OF_LIGHT * SPEED_OF_LIGHT))
    }
}

/// Principal root of `q^2`: `Re(q) >= 0`, and `Im(q) >= 0` when `Re(q) = 0`.
pub fn slab_wavevector(lp: &LocalSlabParams) -> Complex64 {
    let q = lp.wavevector_squared().sqrt();
    if q.re == 0.0 && q.im < 0.0 {
        -q
    } else {
        q
    }
}

/// `tan(x)` that stays finite for large `|Im x|`.
fn stable_tan(x: Complex64) -> Complex64 {
    if x.im.abs() > 20.0 {
        // tan(a + ib) -> i sign(b), correction ~ exp(-4|b|)
        return Complex64::new(0.0, x.im.signum());
    }
    x.tan()
}

/// `tan(x) / x`, with its Taylor series near the origin.
fn tan_over_x(x: Complex64) -> Complex64 {
    if x.norm() < 1e-4 {
        let x2 = x * x;
        1.0 + x2 / 3.0 + x2 * x2 * (2.0 / 15.0)
    } else {
        stable_tan(x) / x
    }
}

fn check_resonance(x: Complex64) -> Result<()> {
    if x.im.abs() > 20.0 {
        return Ok(());
    }
    let near_tan_pole = x.cos().norm() < RESONANCE_THRESHOLD;
    // sin(x) = 0 at the origin is a removable point of x/tan(x).
    let near_cot_pole = x.norm() > 1.0 && x.sin().norm() < RESONANCE_THRESHOLD;
    if near_tan_pole || near_cot_pole {
        Err(Error::Resonance { half_phase: x })
    } else {
        Ok(())
    }
}

/// Exact impedances for a given root `q` of `q^2` (either sign).
pub fn impedances_for_wavevector(lp: &LocalSlabParams, q: Complex64) -> Result<ImpedancePair> {
    lp.validate()?;
    let d = lp.thickness;
    let k = lp.k();
    let x = q * (d / 2.0);
    check_resonance(x)?;

    let i = Complex64::i();
    let ratio = tan_over_x(x);
    // (i k / q) cot(x) = 2 i k / (q^2 d) * x / tan(x), and 2 i k / q^2 is
    // rewritten so that it stays finite at omega = 0.
    let cos2 = lp.theta.cos().powi(2);
    let thin_z2 =
        2.0 * SPEED_OF_LIGHT / (d * (4.0 * PI * lp.sigma_local - i * SPEED_OF_LIGHT * k * cos2));
    Ok(ImpedancePair {
        z1: -i * k * (d / 2.0) * ratio,
        z2: thin_z2 / ratio,
    })
}

pub fn exact_impedances(lp: &LocalSlabParams) -> Result<ImpedancePair> {
    impedances_for_wavevector(lp, slab_wavevector(lp))
}

pub fn exact_tra(lp: &LocalSlabParams) -> Result<OpticalCoefficients> {
    let z = exact_impedances(lp)?;
    Ok(tra_from_impedances(&z, lp.theta))
}

/// Field penetration depth `1 / Im(q)` at normal incidence, cm.
/// Infinite when the medium does not attenuate.
pub fn skin_depth(sigma: Complex64, omega: f64) -> f64 {
    let lp = LocalSlabParams {
        sigma_local: sigma,
        thickness: 1.0,
        theta: 0.0,
        omega,
    };
    let q = slab_wavevector(&lp);
    let im = q.im.abs();
    if im > 0.0 {
        1.0 / im
    } else {
        f64::INFINITY
    }
}

/// One row of the thin-film versus exact-slab comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationPoint {
    pub setup: FilmSetup,
    pub sigma: Complex64,
    pub thin: OpticalCoefficients,
    pub exact: OpticalCoefficients,
    /// `w = (d / l)(1 - i omega tau)`.
    pub w: Complex64,
    pub kd: f64,
    pub d_over_delta: f64,
}

impl ValidationPoint {
    pub fn deviations(&self) -> [f64; 3] {
        [
            (self.thin.transmission - self.exact.transmission).abs(),
            (self.thin.reflection - self.exact.reflection).abs(),
            (self.thin.absorption - self.exact.absorption).abs(),
        ]
    }

    pub fn max_deviation(&self) -> f64 {
        self.thin.max_abs_diff(&self.exact)
    }
}

/// Compares the thin-film B route against the exact local slab on each setup.
///
/// Only specular surfaces (`p = 1`) have a local counterpart; any other
/// specularity is rejected.
pub fn validate_thin_film(
    m: &MaterialParams,
    setups: &[FilmSetup],
) -> Result<Vec<ValidationPoint>> {
    let bulk = derive_bulk(m)?;
    setups
        .iter()
        .map(|s| {
            s.validate()?;
            if s.specularity != 1.0 {
                return Err(Error::InvalidParameter {
                    name: "p",
                    value: s.specularity,
                    reason: "the local-slab comparison needs specular surfaces (p = 1)",
                });
            }
            let sigma = drude_conductivity(m, s.omega)?;
            let thin = film_coefficients(sigma, s.thickness, s.theta)?;
            let exact = exact_tra(&LocalSlabParams {
                sigma_local: sigma,
                thickness: s.thickness,
                theta: s.theta,
                omega: s.omega,
            })?;
            Ok(ValidationPoint {
                setup: *s,
                sigma,
                thin,
                exact,
                w: Complex64::new(1.0, -s.omega * bulk.tau) * (s.thickness / bulk.mean_free_path),
                kd: s.kd(),
                d_over_delta: s.thickness / skin_depth(sigma, s.omega),
            })
        })
        .collect()
}
