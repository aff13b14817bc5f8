//! Shu–Osher rerun with scaled density and pressure, or scaled lengths,
//! and the deviation after undoing the scaling.
//!
//! `cargo run --release --example scale_independence -- ZES3 F3`

use weno3z::harness::{scale_independence_check, ScaleMode};
use weno3z::weights::{SchemeKind, SchemeSpec};

fn main() {
    let tags: Vec<String> = std::env::args().skip(1).collect();
    let kinds: Vec<SchemeKind> = if tags.is_empty() {
        vec![SchemeKind::Zm3, SchemeKind::Zes3, SchemeKind::F3, SchemeKind::PPlus3]
    } else {
        tags.iter().map(|t| SchemeKind::from_tag(t).expect("unknown scheme tag")).collect()
    };
    for kind in kinds {
        for mode in [ScaleMode::variable(), ScaleMode::length()] {
            match scale_independence_check(&SchemeSpec::new(kind), mode) {
                Ok(c) => println!("{:<7} {:<14} deviation {:.3e}", kind.tag(), mode.to_string(), c.deviation),
                Err(e) => println!("{:<7} {:<14} {e}", kind.tag(), mode.to_string()),
            }
        }
    }
}
