//! One-dimensional gas dynamics: the strong shock tube, the blast waves and
//! Shu–Osher, with the minimum density and pressure seen along the way.

use weno3z::solver::{run_case, CaseConfig, CaseTag};
use weno3z::weights::{SchemeKind, SchemeSpec};

fn main() {
    for case in [CaseTag::StrongShock, CaseTag::Blast, CaseTag::ShuOsher] {
        for kind in [SchemeKind::Js3, SchemeKind::Z3, SchemeKind::Zm3, SchemeKind::PPlus3] {
            let cfg = CaseConfig::new(case, SchemeSpec::new(kind));
            match run_case(&cfg) {
                Ok(out) => println!(
                    "{case:<12} {:<7} {:>5} steps  min rho {:.4e}  min p {:.4e}",
                    kind.tag(),
                    out.stats.steps,
                    out.stats.min_rho,
                    out.stats.min_p
                ),
                Err(e) => println!("{case:<12} {:<7} {e}", kind.tag()),
            }
        }
    }
}
