//! Nonlinear weights of the two-candidate schemes for one set of
//! indicators, and what happens when the data are rescaled by s.

use weno3z::weights::{nonlinear_weights, SchemeKind, SchemeSpec};

fn main() {
    let betas = [4.0e-4, 2.5e-3];
    let tau = 1.0e-5;
    let dx = 0.01;
    let s2 = 1.0e-2;
    println!("{:<8} {:>12} {:>12} {:>14}", "scheme", "omega0", "omega1", "after s^2");
    for kind in SchemeKind::ALL {
        if kind == SchemeKind::Js5 {
            continue;
        }
        let spec = SchemeSpec::new(kind);
        let w = nonlinear_weights(&betas, tau, dx, &spec).unwrap();
        let scaled = nonlinear_weights(&[betas[0] * s2, betas[1] * s2], tau * s2, dx, &spec).unwrap();
        println!(
            "{:<8} {:>12.8} {:>12.8} {:>14.3e}",
            kind.tag(),
            w[0],
            w[1],
            (scaled[0] - w[0]).abs()
        );
    }
    let js5 = nonlinear_weights(&[1e-3, 2e-3, 4e-3], 0.0, dx, &SchemeSpec::new(SchemeKind::Js5)).unwrap();
    println!("JS5 weights {:?}", &js5[..]);
}
