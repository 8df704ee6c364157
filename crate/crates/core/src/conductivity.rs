//! Thickness-averaged conductivity of a thin film with partially diffuse
//! surface scattering (Fuchs-Sondheimer kernel), extended to finite
//! frequency by replacing `l -> v_F tau / (1 - i omega tau)` and
//! `sigma_0 -> sigma_0 / (1 - i omega tau)`.
//!
//! With `w = (d / l)(1 - i omega tau)` the averaged conductivity is
//!
//! ```text
//! sigma_d = sigma_0 / (1 - i omega tau) * w / Phi(w)
//! 1/Phi(w) = 1/w - 3 / (2 w^2) (1 - p) I(w, p)
//! I(w, p)  = int_1^inf (t^-3 - t^-5) (1 - e^{-w t}) / (1 - p e^{-w t}) dt
//! ```
//!
//! `I` is evaluated after the substitution `t = 1/u`, which turns the
//! semi-infinite integral into a bounded integrand on `(0, 1]`.

use num_complex::Complex64;

use crate::error::{ensure_in_range, Error, Result};
use crate::material::{derive_bulk, FilmSetup, MaterialParams};
use crate::quadrature;

/// Default relative tolerance of the Fuchs integral.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Maximum number of quadrature panels before giving up.
pub const PANEL_BUDGET: usize = 10_000;

// exp(-745) underflows to zero in f64.
const EXP_UNDERFLOW: f64 = 745.0;

/// Dimensionless complex thickness `w = (d / l)(1 - i omega tau)`, with `Re(w) > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexW(Complex64);

impl ComplexW {
    pub fn new(w: Complex64) -> Result<Self> {
        if w.re.is_finite() && w.im.is_finite() && w.re > 0.0 {
            Ok(Self(w))
        } else {
            Err(Error::Domain { w })
        }
    }

    pub fn real(w: f64) -> Result<Self> {
        Self::new(Complex64::new(w, 0.0))
    }

    pub fn from_film(d: f64, mean_free_path: f64, omega_tau: f64) -> Result<Self> {
        Self::new(Complex64::new(1.0, -omega_tau) * (d / mean_free_path))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }
}

/// Conductivity of a film together with the kernel values that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConductivityResult {
    /// Thickness-averaged conductivity, 1/s.
    pub sigma_d: Complex64,
    /// `1 / Phi(w)`.
    pub phi_inverse: Complex64,
    pub w: Complex64,
    /// Absolute error estimate of the Fuchs integral `I(w, p)`.
    pub quad_error_estimate: f64,
}

/// Value of the Fuchs integral with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuchsIntegral {
    pub value: Complex64,
    pub error: f64,
}

fn check_specularity(p: f64) -> Result<()> {
    ensure_in_range("p", p, 0.0, 1.0)
}

/// `(1 - e^{-x}) / (1 - p e^{-x})` for `Re(x) > 0`.
fn scattering_ratio(x: Complex64, p: f64) -> Complex64 {
    if x.re >= EXP_UNDERFLOW {
        return Complex64::new(1.0, 0.0);
    }
    let e = (-x).exp();
    (1.0 - e) / (1.0 - p * e)
}

/// Integrand of the Fuchs integral in the original variable `t >= 1`.
pub fn fuchs_integrand(t: f64, w: ComplexW, p: f64) -> Result<Complex64> {
    check_specularity(p)?;
    if t.is_nan() || t < 1.0 {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t,
            reason: "must be >= 1",
        });
    }
    if t.is_infinite() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let t2 = t * t;
    let prefactor = (1.0 - 1.0 / t2) / (t2 * t);
    Ok(scattering_ratio(w.0 * t, p) * prefactor)
}

/// Integrand after `t = 1/u`: `(u - u^3) (1 - e^{-w/u}) / (1 - p e^{-w/u})`.
fn substituted_integrand(u: f64, w: Complex64, p: f64) -> Complex64 {
    if u <= 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let prefactor = u - u * u * u;
    if w.re >= EXP_UNDERFLOW * u {
        return Complex64::new(prefactor, 0.0);
    }
    scattering_ratio(w / u, p) * prefactor
}

/// `I(w, p) = int_1^inf fuchs_integrand(t) dt` to relative tolerance `tol`.
pub fn integrate_fuchs(w: ComplexW, p: f64, tol: f64) -> Result<FuchsIntegral> {
    check_specularity(p)?;
    let wv = w.0;
    let q = quadrature::integrate(
        |u| substituted_integrand(u, wv, p),
        0.0,
        1.0,
        tol,
        PANEL_BUDGET,
    )?;
    Ok(FuchsIntegral {
        value: q.value,
        error: q.error,
    })
}

/// Size factor `w / Phi(w) = 1 - (3 / (2 w)) (1 - p) I(w, p)`.
///
/// This is also the bracket multiplying the bulk Drude term in the B factor.
/// Returns the factor and the absolute error estimate of `I`.
pub fn size_factor(w: ComplexW, p: f64, tol: f64) -> Result<(Complex64, f64)> {
    check_specularity(p)?;
    if p == 1.0 {
        return Ok((Complex64::new(1.0, 0.0), 0.0));
    }
    let integral = integrate_fuchs(w, p, tol)?;
    let factor = 1.0 - integral.value * (1.5 * (1.0 - p)) / w.0;
    Ok((factor, integral.error))
}

/// `1 / Phi(w) = 1/w - 3 / (2 w^2) (1 - p) I(w, p)`; exactly `1/w` for `p = 1`.
pub fn phi_inverse(w: ComplexW, p: f64, tol: f64) -> Result<Complex64> {
    check_specularity(p)?;
    if p == 1.0 {
        return Ok(w.0.inv());
    }
    let integral = integrate_fuchs(w, p, tol)?;
    Ok(w.0.inv() - integral.value * (1.5 * (1.0 - p)) / (w.0 * w.0))
}

/// Bulk Drude conductivity `sigma_0 / (1 - i omega tau)`.
pub fn drude_conductivity(m: &MaterialParams, omega: f64) -> Result<Complex64> {
    let bulk = derive_bulk(m)?;
    Ok(bulk.sigma_0 / Complex64::new(1.0, -omega * bulk.tau))
}

/// Thickness-averaged conductivity of the film described by `s`.
pub fn sigma_d(m: &MaterialParams, s: &FilmSetup, tol: f64) -> Result<ConductivityResult> {
    s.validate()?;
    let bulk = derive_bulk(m)?;
    let omega_tau = s.omega * bulk.tau;
    let drude = bulk.sigma_0 / Complex64::new(1.0, -omega_tau);
    let w = ComplexW::from_film(s.thickness, bulk.mean_free_path, omega_tau)?;

    if s.specularity == 1.0 {
        return Ok(ConductivityResult {
            sigma_d: drude,
            phi_inverse: w.0.inv(),
            w: w.0,
            quad_error_estimate: 0.0,
        });
    }

    let (factor, err) = size_factor(w, s.specularity, tol)?;
    Ok(ConductivityResult {
        sigma_d: drude * factor,
        phi_inverse: factor / w.0,
        w: w.0,
        quad_error_estimate: err,
    })
}
