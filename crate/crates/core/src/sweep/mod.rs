//! Parameter sweeps over one film parameter, with CSV output and the
//! preset sweeps behind the published figures.

mod config;
mod csv;
mod figures;

pub use config::{parse_config, SweepBuilder};
pub use csv::{emit_csv, emit_validation_csv, write_csv, CSV_HEADER, VALIDATION_HEADER};
pub use figures::{figure_preset, FigurePreset, Series, FIGURE_NAMES};

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::conductivity::{sigma_d, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};
use crate::material::{FilmSetup, MaterialParams};
use crate::optics::{film_coefficients, OpticalCoefficients};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweptParameter {
    Theta,
    Thickness,
    Specularity,
    /// Frequency as a fraction of the plasma frequency.
    Omega,
}

impl SweptParameter {
    /// Name written to the `swept_name` column.
    pub fn column_name(self) -> &'static str {
        match self {
            Self::Theta => "theta",
            Self::Thickness => "d",
            Self::Specularity => "p",
            Self::Omega => "omega_over_omega_p",
        }
    }

    fn bounds(self) -> (f64, f64) {
        match self {
            Self::Theta => (0.0, FRAC_PI_2),
            Self::Thickness => (f64::MIN_POSITIVE, f64::MAX),
            Self::Specularity => (0.0, 1.0),
            Self::Omega => (0.0, f64::MAX),
        }
    }
}

impl FromStr for SweptParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta" => Ok(Self::Theta),
            "d" | "thickness" => Ok(Self::Thickness),
            "p" | "specularity" => Ok(Self::Specularity),
            "omega" | "omega-frac" | "omega_over_omega_p" => Ok(Self::Omega),
            other => Err(Error::Usage(format!(
                "unknown swept parameter `{other}` (expected theta, d, p or omega)"
            ))),
        }
    }
}

impl fmt::Display for SweptParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.column_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScale {
    Linear,
    Log,
}

impl FromStr for GridScale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" | "lin" => Ok(Self::Linear),
            "log" => Ok(Self::Log),
            other => Err(Error::Usage(format!(
                "unknown grid scale `{other}` (expected linear or log)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: GridScale,
}

impl Grid {
    pub fn linear(min: f64, max: f64, count: usize) -> Self {
        Self {
            min,
            max,
            count,
            scale: GridScale::Linear,
        }
    }

    pub fn log(min: f64, max: f64, count: usize) -> Self {
        Self {
            min,
            max,
            count,
            scale: GridScale::Log,
        }
    }

    /// Grid values; the end points are reproduced exactly.
    pub fn values(&self) -> Vec<f64> {
        let n = self.count;
        let last = n.saturating_sub(1).max(1) as f64;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i + 1 == n {
                    return self.max;
                }
                let frac = i as f64 / last;
                match self.scale {
                    GridScale::Linear => self.min + (self.max - self.min) * frac,
                    GridScale::Log => {
                        (self.min.ln() + (self.max.ln() - self.min.ln()) * frac).exp()
                    }
                }
            })
            .collect()
    }
}

/// Values of the parameters that are held fixed. `omega_frac` is omega / omega_p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedValues {
    pub thickness: f64,
    pub theta: f64,
    pub omega_frac: f64,
    pub specularity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub swept: SweptParameter,
    pub grid: Grid,
    pub fixed: FixedValues,
    pub material: MaterialParams,
    pub tol: f64,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        self.material.validate()?;
        if self.grid.count < 2 {
            return Err(Error::Usage(format!(
                "grid count must be >= 2, got {}",
                self.grid.count
            )));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "tol",
                value: self.tol,
                reason: "must be positive and finite",
            });
        }
        let (lo, hi) = self.swept.bounds();
        for (name, v) in [("min", self.grid.min), ("max", self.grid.max)] {
            if !(v.is_finite() && v >= lo && v <= hi) {
                return Err(Error::InvalidParameter {
                    name,
                    value: v,
                    reason: "grid bound outside the swept parameter's domain",
                });
            }
        }
        if self.grid.min > self.grid.max {
            return Err(Error::Usage("grid min must not exceed max".into()));
        }
        if self.grid.scale == GridScale::Log && self.grid.min <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "min",
                value: self.grid.min,
                reason: "log grids need a positive lower bound",
            });
        }
        // Every grid point must describe a valid film.
        self.setup_at(self.grid.min)?.validate()?;
        self.setup_at(self.grid.max)?.validate()
    }

    /// Film setup with the swept parameter set to `value`.
    pub fn setup_at(&self, value: f64) -> Result<FilmSetup> {
        let f = &self.fixed;
        let mut setup = FilmSetup {
            thickness: f.thickness,
            theta: f.theta,
            omega: f.omega_frac * self.material.plasma_frequency,
            specularity: f.specularity,
        };
        match self.swept {
            SweptParameter::Theta => setup.theta = value,
            SweptParameter::Thickness => setup.thickness = value,
            SweptParameter::Specularity => setup.specularity = value,
            SweptParameter::Omega => setup.omega = value * self.material.plasma_frequency,
        }
        setup.validate()?;
        Ok(setup)
    }
}

/// Quantities computed at one grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowValues {
    pub coefficients: OpticalCoefficients,
    pub sigma_d: Complex64,
    pub w: Complex64,
    pub quad_err: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub swept_value: f64,
    pub kd: f64,
    /// Error text when the point could not be evaluated.
    pub outcome: std::result::Result<RowValues, String>,
}

fn evaluate(spec: &SweepSpec, value: f64) -> SweepRow {
    let setup = spec.setup_at(value);
    let kd = setup.as_ref().map(|s| s.kd()).unwrap_or(f64::NAN);
    let outcome = setup
        .and_then(|s| {
            let cond = sigma_d(&spec.material, &s, spec.tol)?;
            let coefficients = film_coefficients(cond.sigma_d, s.thickness, s.theta)?;
            Ok(RowValues {
                coefficients,
                sigma_d: cond.sigma_d,
                w: cond.w,
                quad_err: cond.quad_error_estimate,
            })
        })
        .map_err(|e| e.to_string());
    SweepRow {
        swept_value: value,
        kd,
        outcome,
    }
}

/// Evaluates every grid point (in parallel) and returns rows in grid order.
/// Failures at individual points are recorded in the row.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    Ok(spec
        .grid
        .values()
        .into_par_iter()
        .map(|v| evaluate(spec, v))
        .collect())
}

impl Default for FixedValues {
    fn default() -> Self {
        Self {
            thickness: 1e-7,
            theta: 0.0,
            omega_frac: 1e-2,
            specularity: 0.5,
        }
    }
}

pub(crate) fn default_tol() -> f64 {
    DEFAULT_TOLERANCE
}
