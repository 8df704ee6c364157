//! Sweep presets reproducing the five published figures for sodium.
//!
//! The frequency range of figures 4 and 5 is not given with the figures;
//! both sweep omega / omega_p over [1e-3, 1] on a 200-point log grid.
//! The fixed value of the swept parameter is set to the grid minimum.

use std::f64::consts::FRAC_PI_2;

use crate::conductivity::DEFAULT_TOLERANCE;
use crate::error::{Error, Result};
use crate::material::sodium_preset;

use super::{FixedValues, Grid, SweepSpec, SweptParameter};

pub const FIGURE_NAMES: [&str; 5] = ["fig1", "fig2", "fig3", "fig4", "fig5"];

const POINTS: usize = 200;

/// Thicknesses of the three curves in figures 4 and 5, cm.
pub const FREQUENCY_SERIES_THICKNESSES: [f64; 3] = [1e-7, 2e-7, 3e-7];

/// One curve family of a figure.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    /// Empty for single-series figures, otherwise e.g. `d1e-7`.
    pub label: String,
    pub spec: SweepSpec,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigurePreset {
    pub name: &'static str,
    pub series: Vec<Series>,
}

fn single(name: &'static str, spec: SweepSpec) -> FigurePreset {
    FigurePreset {
        name,
        series: vec![Series {
            label: String::new(),
            spec,
        }],
    }
}

fn frequency_figure(name: &'static str, specularity: f64) -> FigurePreset {
    let series = FREQUENCY_SERIES_THICKNESSES
        .iter()
        .map(|&d| Series {
            label: format!("d{d:e}"),
            spec: SweepSpec {
                swept: SweptParameter::Omega,
                grid: Grid::log(1e-3, 1.0, POINTS),
                fixed: FixedValues {
                    thickness: d,
                    theta: 0.0,
                    omega_frac: 1e-3,
                    specularity,
                },
                material: sodium_preset(),
                tol: DEFAULT_TOLERANCE,
            },
        })
        .collect();
    FigurePreset { name, series }
}

pub fn figure_preset(name: &str) -> Result<FigurePreset> {
    let sodium = sodium_preset();
    let spec = |swept, grid, thickness, theta, omega_frac, specularity| SweepSpec {
        swept,
        grid,
        fixed: FixedValues {
            thickness,
            theta,
            omega_frac,
            specularity,
        },
        material: sodium,
        tol: DEFAULT_TOLERANCE,
    };
    let preset = match name {
        "fig1" => single(
            "fig1",
            spec(
                SweptParameter::Theta,
                Grid::linear(0.0, FRAC_PI_2, POINTS),
                1e-7,
                0.0,
                1e-2,
                0.5,
            ),
        ),
        "fig2" => single(
            "fig2",
            spec(
                SweptParameter::Thickness,
                Grid::linear(1e-7, 1e-6, POINTS),
                1e-7,
                0.0,
                1e-1,
                0.5,
            ),
        ),
        "fig3" => single(
            "fig3",
            spec(
                SweptParameter::Specularity,
                Grid::linear(0.0, 1.0, POINTS),
                1e-7,
                0.0,
                1e-1,
                0.0,
            ),
        ),
        "fig4" => frequency_figure("fig4", 0.0),
        "fig5" => frequency_figure("fig5", 1.0),
        other => {
            return Err(Error::Usage(format!(
                "unknown figure `{other}` (expected one of {})",
                FIGURE_NAMES.join(", ")
            )))
        }
    };
    Ok(preset)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_parameters() {
        let f = figure_preset("fig1").unwrap();
        let s = &f.series[0].spec;
        assert_eq!(s.swept, SweptParameter::Theta);
        assert_eq!((s.grid.min, s.grid.max), (0.0, FRAC_PI_2));
        assert_eq!(
            (s.fixed.thickness, s.fixed.omega_frac, s.fixed.specularity),
            (1e-7, 1e-2, 0.5)
        );
        s.validate().unwrap();
    }

    #[test]
    fn fig3_parameters() {
        let s = figure_preset("fig3").unwrap().series[0].spec.clone();
        assert_eq!(s.swept, SweptParameter::Specularity);
        assert_eq!((s.grid.min, s.grid.max), (0.0, 1.0));
        assert_eq!(
            (s.fixed.theta, s.fixed.omega_frac, s.fixed.thickness),
            (0.0, 1e-1, 1e-7)
        );
    }

    #[test]
    fn fig5_has_three_specular_series() {
        let f = figure_preset("fig5").unwrap();
        assert_eq!(f.series.len(), 3);
        let labels: Vec<_> = f.series.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, ["d1e-7", "d2e-7", "d3e-7"]);
        for s in &f.series {
            assert_eq!(s.spec.swept, SweptParameter::Omega);
            assert_eq!((s.spec.fixed.specularity, s.spec.fixed.theta), (1.0, 0.0));
            s.spec.validate().unwrap();
        }
        assert_eq!(
            figure_preset("fig4").unwrap().series[0]
                .spec
                .fixed
                .specularity,
            0.0
        );
    }

    #[test]
    fn all_presets_validate() {
        for name in FIGURE_NAMES {
            for s in figure_preset(name).unwrap().series {
                s.spec.validate().unwrap();
            }
        }
        assert!(matches!(figure_preset("fig6"), Err(Error::Usage(_))));
    }
}
