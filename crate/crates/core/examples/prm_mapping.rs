//! The piecewise rational mapping used by WENO3-ZM for both linear weights.

use weno3z::weights::{prm_map, MappingParams};

fn main() {
    let d0 = MappingParams::zm3_d0();
    let d1 = MappingParams::zm3_d1();
    println!("{:>10} {:>16} {:>16}", "w", "M_d0(w)", "M_d1(w)");
    for w in [1e-4, 1e-2, 0.1, 1.0, 5.0, 20.0, 35.0, 50.0, 55.0, 80.0] {
        println!("{w:>10} {:>16.8e} {:>16.8e}", prm_map(w, &d0), prm_map(w, &d1));
    }
}
