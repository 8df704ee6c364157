//! Optics of thin metal films under s-polarized illumination.
//!
//! The film conductivity is averaged over the thickness with the
//! Fuchs-Sondheimer kernel, which accounts for partially diffuse electron
//! scattering at the surfaces, and then mapped to transmission, reflection
//! and absorption coefficients valid for films thinner than the skin depth.
//!
//! Gaussian CGS units are used throughout.

pub mod conductivity;
pub mod error;
pub mod material;
pub mod optics;
pub mod oracle;
pub mod quadrature;
pub mod sweep;

pub use conductivity::{phi_inverse, sigma_d, ComplexW, ConductivityResult, DEFAULT_TOLERANCE};
pub use error::{Error, Result};
pub use material::{
    derive_bulk, sodium_preset, DerivedBulk, FilmSetup, MaterialParams, SPEED_OF_LIGHT,
};
pub use optics::{film_coefficients, tra_from_b, BFactor, OpticalCoefficients};
pub use sweep::{figure_preset, run_sweep, SweepRow, SweepSpec};
