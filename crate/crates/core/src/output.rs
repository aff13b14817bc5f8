//! Field snapshots and artifact headers.
//!
//! 1-D fields are CSV with conserved and primitive columns. 2-D fields are
//! a flat little-endian `f64` file plus a CSV header that describes it.

use std::io::{self, Write};

use crate::solver::{CaseConfig, FieldState};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `#` lines that open every artifact: library version, subcommand, seed
/// and the normalized configuration.
pub fn artifact_header(subcommand: &str, seed: u64, normalized: &str) -> String {
    let mut h = format!("# weno3z {VERSION}\n# subcommand = {subcommand}\n# seed = {seed}\n");
    for line in normalized.lines() {
        if line.is_empty() {
            h.push_str("#\n");
        } else {
            h.push_str("# ");
            h.push_str(line);
            h.push('\n');
        }
    }
    h
}

/// Values per 2-D cell in the binary dump, in this order.
pub const FIELD2D_COLUMNS: [&str; 7] = ["rho", "rho_u", "rho_v", "E", "u", "v", "p"];

/// CSV dump of a 1-D field: `x` then conserved then primitive columns.
pub fn write_field_1d(state: &FieldState, cfg: &CaseConfig, w: &mut impl Write) -> io::Result<()> {
    let xs = cfg.x_coords();
    match state {
        FieldState::Scalar(f) => {
            writeln!(w, "x,u")?;
            for (x, q) in xs.iter().zip(f.interior()) {
                writeln!(w, "{:.17e},{:.17e}", x, q[0])?;
            }
        }
        FieldState::Euler1(f) => {
            writeln!(w, "x,rho,rho_u,E,u,p")?;
            let prims = state.primitives(cfg.gas.gamma);
            for (i, (x, q)) in xs.iter().zip(f.interior()).enumerate() {
                let (u, p) = prims.as_ref().map_or((f64::NAN, f64::NAN), |v| (v[i].u, v[i].p));
                writeln!(w, "{x:.17e},{:.17e},{:.17e},{:.17e},{u:.17e},{p:.17e}", q[0], q[1], q[2])?;
            }
        }
        FieldState::Euler2(_) => {
            return Err(io::Error::new(io::ErrorKind::InvalidInput, "2-D fields use the binary dump"))
        }
    }
    Ok(())
}

/// Binary dump of a 2-D field, rows of x with y outermost, seven values per
/// cell; `header` receives the matching description.
pub fn write_field_2d(
    state: &FieldState,
    cfg: &CaseConfig,
    data: &mut impl Write,
    header: &mut impl Write,
) -> io::Result<()> {
    let FieldState::Euler2(f) = state else {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "not a 2-D field"));
    };
    let prims = state.primitives(cfg.gas.gamma);
    let ((x0, x1), (y0, y1)) = cfg.domain();
    writeln!(header, "nx,ny,x0,x1,y0,y1,t,values_per_cell,layout,columns")?;
    writeln!(
        header,
        "{},{},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{},f64-le-row-major-y-outer,{}",
        f.nx,
        f.ny,
        x0,
        x1,
        y0,
        y1,
        f.t,
        FIELD2D_COLUMNS.len(),
        FIELD2D_COLUMNS.join(";")
    )?;
    let mut k = 0;
    for j in 0..f.ny {
        for i in 0..f.nx {
            let q = f.at(i, j);
            let (u, v, p) = prims.as_ref().map_or((f64::NAN, f64::NAN, f64::NAN), |w| (w[k].u, w[k].v, w[k].p));
            for x in [q[0], q[1], q[2], q[3], u, v, p] {
                data.write_all(&x.to_le_bytes())?;
            }
            k += 1;
        }
    }
    Ok(())
}
