//! Refinement table for the advection of the shifted sine profile.
//!
//! `cargo run --release --example advection_convergence -- ZM3 0.25`

use std::io;

use weno3z::harness::{convergence_study, DYADIC_LADDER};
use weno3z::solver::CaseTag;
use weno3z::weights::{SchemeKind, SchemeSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let kind = args
        .next()
        .map(|t| SchemeKind::from_tag(&t).expect("unknown scheme tag"))
        .unwrap_or(SchemeKind::Zes3);
    let cfl: f64 = args.next().map_or(0.4, |c| c.parse().expect("CFL"));
    let report = convergence_study(&SchemeSpec::new(kind), CaseTag::SineCp, cfl, &DYADIC_LADDER).unwrap();
    println!("{} on {} at CFL {cfl}", kind.label(), report.case);
    report.write_csv(&mut io::stdout()).unwrap();
}
