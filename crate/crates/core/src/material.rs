//! Bulk metal parameters and film geometry.
//!
//! All quantities are Gaussian CGS: lengths in cm, times in s, angular
//! frequencies in rad/s and conductivities in 1/s.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{ensure_finite, ensure_in_range, ensure_positive, Result};

/// Speed of light in vacuum, cm/s.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e10;

/// Bulk properties of a free-electron metal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParams {
    /// Plasma frequency, rad/s.
    pub plasma_frequency: f64,
    /// Fermi velocity, cm/s.
    pub fermi_velocity: f64,
    /// Volume collision frequency, 1/s.
    pub collision_frequency: f64,
}

/// Quantities derived from [`MaterialParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedBulk {
    /// Relaxation time, s.
    pub tau: f64,
    /// Mean free path, cm.
    pub mean_free_path: f64,
    /// Static bulk conductivity, 1/s.
    pub sigma_0: f64,
    /// Infrared (minimal) skin depth c/omega_p, cm.
    pub delta_0: f64,
}

impl MaterialParams {
    pub fn new(
        plasma_frequency: f64,
        fermi_velocity: f64,
        collision_frequency: f64,
    ) -> Result<Self> {
        let m = Self {
            plasma_frequency,
            fermi_velocity,
            collision_frequency,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("omega_p", self.plasma_frequency)?;
        ensure_positive("v_F", self.fermi_velocity)?;
        ensure_positive("nu", self.collision_frequency)
    }

    pub fn derive(&self) -> Result<DerivedBulk> {
        derive_bulk(self)
    }
}

/// Sodium: omega_p = 6.5e15 rad/s, v_F = 8.52e7 cm/s, nu = 1e-3 omega_p.
pub fn sodium_preset() -> MaterialParams {
    MaterialParams {
        plasma_frequency: 6.5e15,
        fermi_velocity: 8.52e7,
        collision_frequency: 6.5e12,
    }
}

/// Looks up a material preset by name.
pub fn preset(name: &str) -> Option<MaterialParams> {
    match name.to_ascii_lowercase().as_str() {
        "sodium" | "na" => Some(sodium_preset()),
        _ => None,
    }
}

pub fn derive_bulk(m: &MaterialParams) -> Result<DerivedBulk> {
    m.validate()?;
    let tau = 1.0 / m.collision_frequency;
    let bulk = DerivedBulk {
        tau,
        mean_free_path: m.fermi_velocity * tau,
        sigma_0: m.plasma_frequency * m.plasma_frequency * tau / (4.0 * PI),
        delta_0: SPEED_OF_LIGHT / m.plasma_frequency,
    };
    // Extreme inputs can still overflow the derived quantities.
    ensure_positive("tau", bulk.tau)?;
    ensure_positive("l", bulk.mean_free_path)?;
    ensure_positive("sigma_0", bulk.sigma_0)?;
    ensure_positive("delta_0", bulk.delta_0)?;
    Ok(bulk)
}

/// Film geometry and illumination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilmSetup {
    /// Film thickness, cm.
    pub thickness: f64,
    /// Angle of incidence, radians in [0, pi/2].
    pub theta: f64,
    /// Field angular frequency, rad/s.
    pub omega: f64,
    /// Specularity coefficient in [0, 1]; 1 is mirror-like surface scattering.
    pub specularity: f64,
}

impl FilmSetup {
    pub fn new(thickness: f64, theta: f64, omega: f64, specularity: f64) -> Result<Self> {
        let s = Self {
            thickness,
            theta,
            omega,
            specularity,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("d", self.thickness)?;
        ensure_in_range("theta", self.theta, 0.0, FRAC_PI_2)?;
        ensure_finite("omega", self.omega)?;
        ensure_in_range("omega", self.omega, 0.0, f64::MAX)?;
        ensure_in_range("p", self.specularity, 0.0, 1.0)
    }

    /// Free-space wave number times thickness, omega*d/c.
    pub fn kd(&self) -> f64 {
        self.omega * self.thickness / SPEED_OF_LIGHT
    }
}
