use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::oracle::ValidationPoint;

use super::{SweepRow, SweptParameter};

pub const CSV_HEADER: &str =
    "swept_name,swept_value,T,R,A,re_sigma_d,im_sigma_d,re_w,im_w,kd,quad_err,error";

pub const VALIDATION_HEADER: &str =
    "swept_name,swept_value,T,R,A,re_sigma_d,im_sigma_d,re_w,im_w,kd,quad_err,error,\
T_exact,R_exact,A_exact,dT,dR,dA,d_over_delta";

// Shortest round-trip representation in scientific notation.
fn num(x: f64) -> String {
    format!("{x:e}")
}

fn sanitize(msg: &str) -> String {
    msg.replace([',', '\n', '\r'], ";")
}

fn write_row<W: Write + ?Sized>(
    out: &mut W,
    swept: SweptParameter,
    row: &SweepRow,
) -> io::Result<()> {
    let name = swept.column_name();
    match &row.outcome {
        Ok(v) => {
            let c = &v.coefficients;
            let fields = [
                row.swept_value,
                c.transmission,
                c.reflection,
                c.absorption,
                v.sigma_d.re,
                v.sigma_d.im,
                v.w.re,
                v.w.im,
                row.kd,
                v.quad_err,
            ];
            write!(out, "{name}")?;
            for f in fields {
                write!(out, ",{}", num(f))?;
            }
            writeln!(out, ",")
        }
        Err(msg) => {
            write!(out, "{name},{}", num(row.swept_value))?;
            for _ in 0..7 {
                write!(out, ",NaN")?;
            }
            writeln!(out, ",{},NaN,{}", num(row.kd), sanitize(msg))
        }
    }
}

/// Writes the header and one line per row.
pub fn emit_csv<W: Write + ?Sized>(
    rows: &[SweepRow],
    swept: SweptParameter,
    out: &mut W,
) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        write_row(out, swept, row)?;
    }
    Ok(())
}

pub fn write_csv(path: &Path, rows: &[SweepRow], swept: SweptParameter) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::Usage("refusing to write an empty sweep".into()));
    }
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut out = BufWriter::new(file);
    emit_csv(rows, swept, &mut out).map_err(io_err)?;
    out.flush().map_err(io_err)
}

pub fn emit_validation_csv<W: Write + ?Sized>(
    points: &[ValidationPoint],
    out: &mut W,
) -> io::Result<()> {
    writeln!(out, "{VALIDATION_HEADER}")?;
    for pt in points {
        let [dt, dr, da] = pt.deviations();
        let fields = [
            pt.setup.thickness,
            pt.thin.transmission,
            pt.thin.reflection,
            pt.thin.absorption,
            pt.sigma.re,
            pt.sigma.im,
            pt.w.re,
            pt.w.im,
            pt.kd,
            0.0,
        ];
        write!(out, "d")?;
        for f in fields {
            write!(out, ",{}", num(f))?;
        }
        write!(out, ",")?;
        for f in [
            pt.exact.transmission,
            pt.exact.reflection,
            pt.exact.absorption,
            dt,
            dr,
            da,
            pt.d_over_delta,
        ] {
            write!(out, ",{}", num(f))?;
        }
        writeln!(out)?;
    }
    Ok(())
}
