//! A coarse four-quadrant Riemann problem with its field written to disk.
//!
//! `cargo run --release --example riemann_2d -- 120 out_dir`

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;

use weno3z::output::write_field_2d;
use weno3z::solver::{run_case, CaseConfig, CaseTag};
use weno3z::weights::{SchemeKind, SchemeSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(80, |a| a.parse().expect("grid size"));
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "riemann_out".into()));
    let mut cfg = CaseConfig::new(CaseTag::Riemann2d, SchemeSpec::new(SchemeKind::Zm3));
    cfg.n = n;
    cfg.ny = n;
    let out = run_case(&cfg).unwrap();
    println!("{} steps, min rho {:.4}, min p {:.4}", out.stats.steps, out.stats.min_rho, out.stats.min_p);
    fs::create_dir_all(&dir).unwrap();
    let mut data = BufWriter::new(File::create(dir.join("field.bin")).unwrap());
    let mut header = File::create(dir.join("field.csv")).unwrap();
    write_field_2d(&out.state, &cfg, &mut data, &mut header).unwrap();
    println!("wrote {}", dir.display());
}
