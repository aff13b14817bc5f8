//! Reconstruct `f̂_{j+1/2}` of a smooth profile with every scheme and
//! compare against the exact cell-interface value.

use weno3z::solver::{reconstruct_interface, Wind};
use weno3z::weights::{scheme_stencil_width, SchemeKind, SchemeSpec};

fn main() {
    // f(x) = sin(x) + 0.3 sampled at the nodes
    let f = |x: f64| x.sin() + 0.3;
    let dx = 0.05;
    let xj = 0.4;
    println!("{:<8} {:>22} {:>12}", "scheme", "f̂(j+1/2)", "error");
    for kind in SchemeKind::ALL {
        let spec = SchemeSpec::new(kind);
        let width = scheme_stencil_width(&spec);
        let first = if width == 5 { -2 } else { -1 };
        let values: Vec<f64> = (0..width).map(|i| f(xj + (first + i as i32) as f64 * dx)).collect();
        let h = reconstruct_interface(&values, &spec, Wind::Positive, dx).unwrap();
        // h with (1/dx)∫h = f over each cell, at x_{j+1/2}
        let exact = 0.3 + (xj + 0.5 * dx).sin() * (0.5 * dx) / (0.5 * dx).sin();
        println!("{:<8} {:>22.16} {:>12.3e}", kind.tag(), h, (h - exact).abs());
    }
}
