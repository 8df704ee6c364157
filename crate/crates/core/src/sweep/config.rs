//! Flat `key = value` sweep configuration.
//!
//! Keys are the CLI flag names without the leading `--`. Blank lines and
//! lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::material::{preset, sodium_preset, MaterialParams};

use super::{default_tol, FixedValues, Grid, GridScale, SweepSpec, SweptParameter};

pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .enumerate()
        .filter_map(|(n, line)| {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                return None;
            }
            Some(match line.split_once('=') {
                Some((k, v)) => Ok((k.trim().to_string(), v.trim().to_string())),
                None => Err(Error::Usage(format!(
                    "config line {}: expected `key = value`, got `{line}`",
                    n + 1
                ))),
            })
        })
        .collect()
}

/// Accumulates sweep settings from a config file and command-line flags;
/// later assignments override earlier ones.
#[derive(Debug, Clone, Default)]
pub struct SweepBuilder {
    pub material: Option<String>,
    pub omega_p: Option<f64>,
    pub v_f: Option<f64>,
    pub nu: Option<f64>,
    pub swept: Option<SweptParameter>,
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub count: Option<usize>,
    pub scale: Option<GridScale>,
    pub d: Option<f64>,
    pub theta: Option<f64>,
    pub omega_frac: Option<f64>,
    pub p: Option<f64>,
    pub tol: Option<f64>,
    pub out: Option<String>,
}

fn number(key: &str, value: &str) -> Result<f64> {
    value
        .parse()
        .map_err(|_| Error::Usage(format!("`{key}`: cannot parse `{value}` as a number")))
}

impl SweepBuilder {
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "material" => self.material = Some(value.to_string()),
            "omega-p" => self.omega_p = Some(number(key, value)?),
            "v-f" => self.v_f = Some(number(key, value)?),
            "nu" => self.nu = Some(number(key, value)?),
            "swept" => self.swept = Some(value.parse()?),
            "min" => self.min = Some(number(key, value)?),
            "max" => self.max = Some(number(key, value)?),
            "count" => {
                self.count = Some(value.parse().map_err(|_| {
                    Error::Usage(format!("`count`: cannot parse `{value}` as an integer"))
                })?)
            }
            "scale" => self.scale = Some(value.parse()?),
            "d" => self.d = Some(number(key, value)?),
            "theta" => self.theta = Some(number(key, value)?),
            "omega-frac" => self.omega_frac = Some(number(key, value)?),
            "p" => self.p = Some(number(key, value)?),
            "tol" => self.tol = Some(number(key, value)?),
            "out" => self.out = Some(value.to_string()),
            other => return Err(Error::Usage(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    pub fn apply_config(&mut self, text: &str) -> Result<()> {
        for (k, v) in parse_config(text)? {
            self.set(&k, &v)?;
        }
        Ok(())
    }

    /// Copies every value set in `other` over this builder.
    pub fn merge(&mut self, other: &SweepBuilder) {
        macro_rules! take {
            ($($field:ident),*) => {
                $(if other.$field.is_some() { self.$field = other.$field.clone(); })*
            };
        }
        take!(
            material, omega_p, v_f, nu, swept, min, max, count, scale, d, theta, omega_frac, p,
            tol, out
        );
    }

    pub fn material_params(&self) -> Result<MaterialParams> {
        let base = match self.material.as_deref() {
            Some(name) => {
                preset(name).ok_or_else(|| Error::Usage(format!("unknown material `{name}`")))?
            }
            None => sodium_preset(),
        };
        MaterialParams::new(
            self.omega_p.unwrap_or(base.plasma_frequency),
            self.v_f.unwrap_or(base.fermi_velocity),
            self.nu.unwrap_or(base.collision_frequency),
        )
    }

    pub fn build(&self) -> Result<SweepSpec> {
        let swept = self
            .swept
            .ok_or_else(|| Error::Usage("`swept` is required".into()))?;
        let min = self
            .min
            .ok_or_else(|| Error::Usage("`min` is required".into()))?;
        let max = self
            .max
            .ok_or_else(|| Error::Usage("`max` is required".into()))?;
        let defaults = FixedValues::default();
        let spec = SweepSpec {
            swept,
            grid: Grid {
                min,
                max,
                count: self.count.unwrap_or(200),
                scale: self.scale.unwrap_or(GridScale::Linear),
            },
            fixed: FixedValues {
                thickness: self.d.unwrap_or(defaults.thickness),
                theta: self.theta.unwrap_or(defaults.theta),
                omega_frac: self.omega_frac.unwrap_or(defaults.omega_frac),
                specularity: self.p.unwrap_or(defaults.specularity),
            },
            material: self.material_params()?,
            tol: self.tol.unwrap_or_else(default_tol),
        };
        spec.validate()?;
        Ok(spec)
    }
}
