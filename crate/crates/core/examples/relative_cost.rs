//! Wall-clock cost of a few schemes relative to WENO3-JS.

use weno3z::harness::relative_timing;
use weno3z::weights::SchemeKind;

fn main() {
    let schemes = [SchemeKind::Z3, SchemeKind::Zm3, SchemeKind::Zes3, SchemeKind::Pz3];
    let rows = relative_timing(&schemes, 20, 120).unwrap();
    for r in rows {
        println!("{:<6} {:>8.3}s {:>8.2}", r.scheme.tag(), r.elapsed.as_secs_f64(), r.relative);
    }
}
