use std::f64::consts::FRAC_PI_2;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use thinfilm::material::{derive_bulk, FilmSetup};
use thinfilm::oracle::validate_thin_film;
use thinfilm::sweep::{
    emit_csv, emit_validation_csv, figure_preset, run_sweep, write_csv, Grid, SweepBuilder,
    SweepRow,
};
use thinfilm::{Error, Result};

/// Transmission, reflection and absorption of s-waves by thin metal films.
#[derive(Parser)]
#[command(name = "thinfilm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one parameter (theta, d, p or omega) and write CSV.
    Sweep(SweepArgs),
    /// Reproduce one of the preset figures (fig1 .. fig5).
    Figure {
        name: String,
        /// Output file; multi-series figures get a `_<label>` suffix per series.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the thin-film formulas against the exact local slab (p = 1).
    Validate(ValidateArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Flat `key = value` file; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    material: Option<String>,
    /// Plasma frequency override, rad/s.
    #[arg(long = "omega-p")]
    omega_p: Option<f64>,
    /// Fermi velocity override, cm/s.
    #[arg(long = "v-f")]
    v_f: Option<f64>,
    /// Collision frequency override, 1/s.
    #[arg(long)]
    nu: Option<f64>,
    /// theta, d, p or omega
    #[arg(long)]
    swept: Option<String>,
    #[arg(long)]
    min: Option<f64>,
    #[arg(long)]
    max: Option<f64>,
    #[arg(long)]
    count: Option<usize>,
    /// linear or log
    #[arg(long)]
    scale: Option<String>,
    /// Thickness, cm.
    #[arg(long)]
    d: Option<f64>,
    /// Angle of incidence, rad.
    #[arg(long)]
    theta: Option<f64>,
    /// omega / omega_p.
    #[arg(long = "omega-frac")]
    omega_frac: Option<f64>,
    /// Specularity coefficient.
    #[arg(long)]
    p: Option<f64>,
    /// Relative tolerance of the Fuchs integral.
    #[arg(long)]
    tol: Option<f64>,
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long, default_value = "sodium")]
    material: String,
    #[arg(long = "omega-frac", default_value_t = 1e-2)]
    omega_frac: f64,
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    /// Smallest thickness, cm.
    #[arg(long = "d-min", default_value_t = 1e-9)]
    d_min: f64,
    /// Largest thickness, cm (default: 10 c / omega_p).
    #[arg(long = "d-max")]
    d_max: Option<f64>,
    #[arg(long, default_value_t = 41)]
    count: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SweepArgs {
    fn builder(&self) -> Result<SweepBuilder> {
        let mut flags = SweepBuilder::default();
        let text = [
            ("material", self.material.clone()),
            ("swept", self.swept.clone()),
            ("scale", self.scale.clone()),
        ];
        for (k, v) in text {
            if let Some(v) = v {
                flags.set(k, &v)?;
            }
        }
        let numbers = [
            ("omega-p", self.omega_p),
            ("v-f", self.v_f),
            ("nu", self.nu),
            ("min", self.min),
            ("max", self.max),
            ("d", self.d),
            ("theta", self.theta),
            ("omega-frac", self.omega_frac),
            ("p", self.p),
            ("tol", self.tol),
        ];
        for (k, v) in numbers {
            if let Some(v) = v {
                flags.set(k, &v.to_string())?;
            }
        }
        flags.count = self.count;

        let mut builder = SweepBuilder::default();
        if let Some(path) = &self.config {
            let text = fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            builder.apply_config(&text)?;
        }
        builder.merge(&flags);
        if let Some(out) = &self.out {
            builder.out = Some(out.display().to_string());
        }
        Ok(builder)
    }
}

fn with_output<F>(out: Option<&Path>, write: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match out {
        Some(path) => {
            let io_err = |source| Error::Io {
                path: path.to_path_buf(),
                source,
            };
            let mut w = BufWriter::new(fs::File::create(path).map_err(io_err)?);
            write(&mut w).map_err(io_err)?;
            w.flush().map_err(io_err)
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock).map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })
        }
    }
}

fn report_failures(rows: &[SweepRow]) {
    let failed = rows.iter().filter(|r| r.outcome.is_err()).count();
    if failed > 0 {
        eprintln!(
            "warning: {failed} of {} points failed; see the error column",
            rows.len()
        );
    }
}

fn series_path(out: &Path, label: &str) -> PathBuf {
    if label.is_empty() {
        return out.to_path_buf();
    }
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("figure");
    let name = match out.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}_{label}.{ext}"),
        None => format!("{stem}_{label}"),
    };
    out.with_file_name(name)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sweep(args) => {
            let builder = args.builder()?;
            let spec = builder.build()?;
            let rows = run_sweep(&spec)?;
            report_failures(&rows);
            let out = builder.out.as_deref().map(Path::new);
            with_output(out, |w| emit_csv(&rows, spec.swept, w))
        }
        Command::Figure { name, out } => {
            let preset = figure_preset(&name)?;
            let out = out.unwrap_or_else(|| PathBuf::from(format!("{}.csv", preset.name)));
            for series in &preset.series {
                let rows = run_sweep(&series.spec)?;
                report_failures(&rows);
                let path = series_path(&out, &series.label);
                write_csv(&path, &rows, series.spec.swept)?;
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Validate(args) => {
            let m = thinfilm::material::preset(&args.material)
                .ok_or_else(|| Error::Usage(format!("unknown material `{}`", args.material)))?;
            let bulk = derive_bulk(&m)?;
            if !(args.theta >= 0.0 && args.theta < FRAC_PI_2) {
                return Err(Error::Usage("validate needs 0 <= theta < pi/2".into()));
            }
            let d_max = args.d_max.unwrap_or(10.0 * bulk.delta_0);
            if args.count < 2 || !(args.d_min > 0.0 && args.d_min <= d_max) {
                return Err(Error::Usage(
                    "validate needs count >= 2 and 0 < d-min <= d-max".into(),
                ));
            }
            let omega = args.omega_frac * m.plasma_frequency;
            let setups = Grid::log(args.d_min, d_max, args.count)
                .values()
                .into_iter()
                .map(|d| FilmSetup::new(d, args.theta, omega, 1.0))
                .collect::<Result<Vec<_>>>()?;
            let points = validate_thin_film(&m, &setups)?;
            with_output(args.out.as_deref(), |w| emit_validation_csv(&points, w))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
