//! Smoothness indicators, the global indicators τ and the undivided
//! differences on one stencil, near and away from a critical point.

use weno3z::indicators::{tau, TauKind};
use weno3z::stencil::{finite_delta, smoothness_beta, DeltaTag, StencilWindow};

fn main() {
    let dx = 0.02;
    for (label, x0) in [("smooth", 0.3), ("near f' = 0", 0.5 * std::f64::consts::PI / 3.0)] {
        let values: Vec<f64> = (-2..=2).map(|i| (3.0 * (x0 + i as f64 * dx)).sin()).collect();
        let w = StencilWindow::new(&values, 2, dx).unwrap();
        println!("{label}: x_j = {x0:.4}");
        for (r, k) in [(2, 0), (2, 1), (3, 0), (3, 2)] {
            println!("  beta{r}_{k} = {:.6e}", smoothness_beta(&w, r, k).unwrap());
        }
        let kinds = [
            ("tau3", TauKind::Tau3),
            ("tauN", TauKind::TauN),
            ("tauF3", TauKind::TauF3),
            ("tauP", TauKind::TauP),
            ("tauCP1", TauKind::TauCp1),
            ("tauCP2", TauKind::TauCp2 { c: 1.0 }),
        ];
        for (name, kind) in kinds {
            println!("  {name:<7}= {:.6e}", tau(&w, kind).unwrap());
        }
        for tag in DeltaTag::ALL {
            println!("  {tag:?} = {:.6e}", finite_delta(&w, tag).unwrap());
        }
    }
}
