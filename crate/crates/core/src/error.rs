use std::path::PathBuf;

use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the film model, the quadrature engine and the sweep front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("Fuchs kernel requires Re(w) > 0, got w = {w}")]
    Domain { w: Complex64 },

    #[error(
        "quadrature did not converge after {panels} panels: \
         estimate {estimate}, error estimate {error:e}"
    )]
    QuadratureFailure {
        estimate: Complex64,
        error: f64,
        panels: usize,
    },

    #[error("grazing incidence (theta = pi/2): B factor is unbounded")]
    GrazingIncidence,

    #[error("passivity violated: Re(B) = {re_b:e} < 0")]
    PassivityViolation { re_b: f64 },

    #[error("slab resonance at q*d/2 = {half_phase}")]
    Resonance { half_phase: Complex64 },

    #[error("usage: {0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite",
        })
    }
}

pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<()> {
    ensure_finite(name, value)?;
    if value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be strictly positive",
        })
    }
}

pub(crate) fn ensure_in_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<()> {
    ensure_finite(name, value)?;
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "outside the allowed range",
        })
    }
}
