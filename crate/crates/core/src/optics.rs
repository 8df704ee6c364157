//! Transmission, reflection and absorption of an s-wave by a thin film.
//!
//! Two routes are provided. The B route uses the compact form
//! `T = 1/|1+B|^2`, `R = |B|^2/|1+B|^2`, `A = 2 Re B/|1+B|^2` with
//! `B = 2 pi d sigma_d / (c cos theta)` and is the canonical one. The
//! impedance route goes through the surface impedances of the
//! antisymmetric (`z1`) and symmetric (`z2`) field configurations and the
//! reflection amplitudes `P = (Z cos theta - 1)/(Z cos theta + 1)`:
//! `T = |P1 - P2|^2 / 4`, `R = |P1 + P2|^2 / 4`, `A = 1 - T - R`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{ensure_finite, ensure_in_range, ensure_positive, Error, Result};
use crate::material::SPEED_OF_LIGHT;

/// Energy coefficients of the film. Not clamped: small excursions outside
/// [0, 1] are rounding and stay visible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticalCoefficients {
    pub transmission: f64,
    pub reflection: f64,
    pub absorption: f64,
}

impl OpticalCoefficients {
    pub const GRAZING: Self = Self {
        transmission: 0.0,
        reflection: 1.0,
        absorption: 0.0,
    };

    pub fn sum(&self) -> f64 {
        self.transmission + self.reflection + self.absorption
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.transmission - other.transmission)
            .abs()
            .max((self.reflection - other.reflection).abs())
            .max((self.absorption - other.absorption).abs())
    }
}

/// `B = 2 pi d sigma_d / (c cos theta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BFactor(pub Complex64);

/// Surface impedances of the antisymmetric-E (`z1`) and symmetric-E (`z2`)
/// configurations, dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpedancePair {
    pub z1: Complex64,
    pub z2: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PFactors {
    pub p1: Complex64,
    pub p2: Complex64,
}

/// Which thin-slab impedance expressions to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImpedanceForm {
    /// First order in `kd`: `z1 = -i k d / 2`, `z2 = 2c / (4 pi d sigma - i c k d cos^2 theta)`.
    Full,
    /// `kd -> 0`: `z1 = 0`, `z2 = c / (2 pi d sigma)`.
    ThinLimit,
}

fn check_thickness_angle(d: f64, theta: f64) -> Result<()> {
    ensure_positive("d", d)?;
    ensure_in_range("theta", theta, 0.0, FRAC_PI_2)
}

fn check_sigma(sigma: Complex64) -> Result<()> {
    ensure_finite("re_sigma", sigma.re)?;
    ensure_finite("im_sigma", sigma.im)
}

pub fn b_factor(sigma: Complex64, d: f64, theta: f64) -> Result<BFactor> {
    check_sigma(sigma)?;
    check_thickness_angle(d, theta)?;
    if theta == FRAC_PI_2 {
        return Err(Error::GrazingIncidence);
    }
    Ok(BFactor(
        sigma * (2.0 * PI * d / (SPEED_OF_LIGHT * theta.cos())),
    ))
}

pub fn tra_from_b(b: BFactor) -> Result<OpticalCoefficients> {
    let b = b.0;
    if b.re.is_nan() || b.im.is_nan() {
        return Err(Error::InvalidParameter {
            name: "B",
            value: f64::NAN,
            reason: "must not be NaN",
        });
    }
    if b.re < 0.0 {
        return Err(Error::PassivityViolation { re_b: b.re });
    }
    if !b.re.is_finite() || !b.im.is_finite() {
        return Ok(OpticalCoefficients::GRAZING);
    }
    let denom = (1.0 + b).norm_sqr();
    if !denom.is_finite() {
        return Ok(OpticalCoefficients::GRAZING);
    }
    Ok(OpticalCoefficients {
        transmission: 1.0 / denom,
        reflection: b.norm_sqr() / denom,
        absorption: 2.0 * b.re / denom,
    })
}

/// Coefficients of a film with averaged conductivity `sigma`, including the
/// grazing-incidence limit `(0, 1, 0)` at `theta = pi/2`.
pub fn film_coefficients(sigma: Complex64, d: f64, theta: f64) -> Result<OpticalCoefficients> {
    match b_factor(sigma, d, theta) {
        Ok(b) => tra_from_b(b),
        Err(Error::GrazingIncidence) => Ok(OpticalCoefficients::GRAZING),
        Err(e) => Err(e),
    }
}

pub fn thin_impedances(
    sigma: Complex64,
    d: f64,
    theta: f64,
    omega: f64,
    form: ImpedanceForm,
) -> Result<ImpedancePair> {
    check_sigma(sigma)?;
    check_thickness_angle(d, theta)?;
    ensure_in_range("omega", omega, 0.0, f64::MAX)?;
    let c = SPEED_OF_LIGHT;
    let i = Complex64::i();
    let z = match form {
        ImpedanceForm::ThinLimit => ImpedancePair {
            z1: Complex64::new(0.0, 0.0),
            z2: c / (2.0 * PI * d * sigma),
        },
        ImpedanceForm::Full => {
            let kd = omega * d / c;
            let cos2 = theta.cos().powi(2);
            ImpedancePair {
                z1: -i * kd / 2.0,
                z2: 2.0 * c / (4.0 * PI * d * sigma - i * c * kd * cos2),
            }
        }
    };
    Ok(z)
}

fn reflection_amplitude(z: Complex64, cos_theta: f64) -> Complex64 {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Complex64::new(1.0, 0.0);
    }
    let zc = z * cos_theta;
    (zc - 1.0) / (zc + 1.0)
}

pub fn p_factors(z: &ImpedancePair, theta: f64) -> PFactors {
    let cos_theta = theta.cos();
    PFactors {
        p1: reflection_amplitude(z.z1, cos_theta),
        p2: reflection_amplitude(z.z2, cos_theta),
    }
}

pub fn tra_from_p(p: &PFactors) -> OpticalCoefficients {
    let transmission = 0.25 * (p.p1 - p.p2).norm_sqr();
    let reflection = 0.25 * (p.p1 + p.p2).norm_sqr();
    OpticalCoefficients {
        transmission,
        reflection,
        absorption: 1.0 - transmission - reflection,
    }
}

pub fn tra_from_impedances(z: &ImpedancePair, theta: f64) -> OpticalCoefficients {
    tra_from_p(&p_factors(z, theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn b_factor_values() {
        assert_eq!(b_factor(c(0.0, 0.0), 1e-7, 0.3).unwrap().0, c(0.0, 0.0));
        let d = 1e-6;
        let sigma = SPEED_OF_LIGHT / (2.0 * PI * d);
        assert_relative_eq!(
            b_factor(c(sigma, 0.0), d, 0.0).unwrap().0.re,
            1.0,
            max_relative = 1e-15
        );
        assert!(matches!(
            b_factor(c(1.0, 0.0), d, FRAC_PI_2),
            Err(Error::GrazingIncidence)
        ));
    }

    #[test]
    fn tra_special_values() {
        let t = tra_from_b(BFactor(c(0.0, 0.0))).unwrap();
        assert_eq!(
            (t.transmission, t.reflection, t.absorption),
            (1.0, 0.0, 0.0)
        );
        let t = tra_from_b(BFactor(c(1.0, 0.0))).unwrap();
        assert_eq!(
            (t.transmission, t.reflection, t.absorption),
            (0.25, 0.25, 0.5)
        );
        let t = tra_from_b(BFactor(c(0.0, 1.0))).unwrap();
        assert_relative_eq!(t.transmission, 0.5, max_relative = 1e-15);
        assert_relative_eq!(t.reflection, 0.5, max_relative = 1e-15);
        assert_eq!(t.absorption, 0.0);
        let t = tra_from_b(BFactor(c(f64::INFINITY, 0.0))).unwrap();
        assert_eq!(t, OpticalCoefficients::GRAZING);
    }

    #[test]
    fn passivity_violation() {
        assert!(matches!(
            tra_from_b(BFactor(c(-1e-3, 0.2))),
            Err(Error::PassivityViolation { .. })
        ));
    }

    #[test]
    fn grazing_limit() {
        let sigma = c(1.5e16, 1.1e16);
        assert_eq!(
            film_coefficients(sigma, 1e-7, FRAC_PI_2).unwrap(),
            OpticalCoefficients::GRAZING
        );
        let near = film_coefficients(sigma, 1e-7, FRAC_PI_2 - 1e-6).unwrap();
        assert!(near.reflection > 0.999);
        assert!(near.transmission < 1e-3 && near.absorption < 1e-3);
    }

    #[test]
    fn thin_impedance_limits() {
        let z = thin_impedances(c(1e16, 1e15), 1e-7, 0.0, 0.0, ImpedanceForm::Full).unwrap();
        assert_eq!(z.z1, c(0.0, 0.0));
        let z = thin_impedances(c(1e40, 0.0), 1e-7, 0.0, 1e13, ImpedanceForm::Full).unwrap();
        assert!(z.z2.norm() < 1e-20);
    }

    #[test]
    fn thin_impedance_kd_correction_is_small() {
        // sodium at omega = 1e-2 omega_p, d = 1e-7 cm
        let sigma = c(1.550_560_575_933_558_9e16, 1.131_259_423_996_302_9e16);
        let (d, omega) = (1e-7, 6.5e13);
        let full = thin_impedances(sigma, d, 0.0, omega, ImpedanceForm::Full).unwrap();
        let thin = thin_impedances(sigma, d, 0.0, omega, ImpedanceForm::ThinLimit).unwrap();
        let kd = omega * d / SPEED_OF_LIGHT;
        let rel = (full.z2 - thin.z2).norm() / thin.z2.norm();
        assert!(rel < 1e-3, "relative kd correction {rel}");
        assert!(rel < 10.0 * kd);
        assert_relative_eq!(full.z1.im, -kd / 2.0, max_relative = 1e-15);
    }

    #[test]
    fn vacuum_full_form_is_transparent() {
        let z = thin_impedances(c(0.0, 0.0), 1e-5, 0.4, 1e14, ImpedanceForm::Full).unwrap();
        let t = tra_from_impedances(&z, 0.4);
        assert_relative_eq!(t.transmission, 1.0, max_relative = 1e-12);
        assert!(t.reflection < 1e-12);
    }

    #[test]
    fn equal_impedances_block_transmission() {
        let z = ImpedancePair {
            z1: c(0.3, -0.2),
            z2: c(0.3, -0.2),
        };
        assert_eq!(tra_from_impedances(&z, 0.5).transmission, 0.0);
    }

    #[test]
    fn open_short_duality() {
        let z = ImpedancePair {
            z1: c(0.0, 0.0),
            z2: c(f64::INFINITY, 0.0),
        };
        let p = p_factors(&z, 0.0);
        assert_eq!((p.p1, p.p2), (c(-1.0, 0.0), c(1.0, 0.0)));
        let t = tra_from_p(&p);
        assert_eq!((t.transmission, t.reflection), (1.0, 0.0));
    }

    #[test]
    fn reactive_film_does_not_absorb() {
        let t = film_coefficients(c(0.0, 3e15), 2e-7, 0.7).unwrap();
        assert_eq!(t.absorption, 0.0);
    }

    #[test]
    fn eq8_closed_form_matches() {
        let (sigma, d, theta) = (c(2.3e16, -4.0e15), 3e-7, 0.6);
        let t = film_coefficients(sigma, d, theta).unwrap();
        let cc = SPEED_OF_LIGHT * theta.cos();
        let s = sigma * (2.0 * PI * d);
        let den = (cc + s).norm_sqr();
        assert_relative_eq!(t.transmission, cc * cc / den, max_relative = 1e-13);
        assert_relative_eq!(t.reflection, s.norm_sqr() / den, max_relative = 1e-13);
        assert_relative_eq!(
            t.absorption,
            4.0 * cc * PI * sigma.re * d / den,
            max_relative = 1e-13
        );
    }

    proptest! {
        #[test]
        fn energy_conserved_in_right_half_plane(re in 0.0f64..1e3, im in -1e3f64..1e3) {
            let t = tra_from_b(BFactor(c(re, im))).unwrap();
            prop_assert!((t.sum() - 1.0).abs() <= 1e-12);
            for v in [t.transmission, t.reflection, t.absorption] {
                prop_assert!((-1e-12..=1.0 + 1e-12).contains(&v));
            }
        }

        #[test]
        fn p_swap_symmetry(a in -5.0f64..5.0, b in -5.0f64..5.0, x in -5.0f64..5.0, y in -5.0f64..5.0) {
            let p = PFactors { p1: c(a, b), p2: c(x, y) };
            let q = PFactors { p1: p.p2, p2: p.p1 };
            prop_assert_eq!(tra_from_p(&p), tra_from_p(&q));
        }

        #[test]
        fn impedance_and_b_routes_agree(
            log_re in 10.0f64..19.0,
            ratio in -10.0f64..10.0,
            log_d in -9.0f64..-5.0,
            theta in 0.0f64..1.5,
        ) {
            let re = 10f64.powf(log_re);
            let sigma = c(re, re * ratio);
            let d = 10f64.powf(log_d);
            let z = thin_impedances(sigma, d, theta, 0.0, ImpedanceForm::ThinLimit).unwrap();
            let a = tra_from_impedances(&z, theta);
            let b = film_coefficients(sigma, d, theta).unwrap();
            prop_assert!(a.max_abs_diff(&b) <= 1e-12, "{a:?} vs {b:?}");
        }
    }
}
