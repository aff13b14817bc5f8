//! Property tests over random stencils, indicators and gas states.

mod common;

use proptest::prelude::*;
use weno3z::indicators::{tau, TauKind};
use weno3z::solver::Primitive;
use weno3z::stencil::{smoothness_beta, StencilWindow};
use weno3z::weights::{nonlinear_weights, SchemeKind, SchemeSpec};

fn magnitude() -> impl Strategy<Value = f64> {
    (-12.0f64..4.0).prop_map(|e| 10f64.powf(e))
}

/// States whose pressure survives the trip through total energy.
fn gas_state() -> impl Strategy<Value = Primitive> {
    (magnitude(), -5.0f64..5.0, -5.0f64..5.0, magnitude())
        .prop_map(|(rho, u, v, p)| Primitive { rho, u, v, p })
        .prop_filter("internal energy lost to round-off", |w| w.p > 1e-8 * w.rho * (w.u * w.u + w.v * w.v))
}

proptest! {
    #[test]
    fn weights_sum_to_one(b0 in magnitude(), b1 in magnitude(), b2 in magnitude(), t in magnitude(), dx in 1e-4f64..1.0) {
        prop_assert!(common::weight_sum([b0, b1, b2], t, dx) < 1e-14);
    }

    #[test]
    fn zero_indicators_give_linear_weights(dx in 1e-4f64..1.0) {
        for kind in SchemeKind::ALL {
            if !kind.is_z_family() {
                continue;
            }
            let w = nonlinear_weights(&[0.0, 0.0], 0.0, dx, &SchemeSpec::new(kind)).unwrap();
            prop_assert!((w[0] - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn scale_free_weights_ignore_scaling(b0 in magnitude(), b1 in magnitude(), t in magnitude(), s in (-6.0f64..6.0).prop_map(|e| 10f64.powf(e))) {
        prop_assert!(common::weight_scale_invariance([b0, b1], t, s) < 1e-12);
    }

    #[test]
    fn default_guard_keeps_scale_freedom(b0 in 1e-12f64..1e2, b1 in 1e-12f64..1e2, t in 1e-12f64..1e2, s in 1e-4f64..1e4) {
        for kind in [SchemeKind::Zm3, SchemeKind::Zes3] {
            let spec = SchemeSpec::new(kind);
            let a = nonlinear_weights(&[b0, b1], t, 0.1, &spec).unwrap();
            let b = nonlinear_weights(&[b0 * s * s, b1 * s * s], t * s * s, 0.1, &spec).unwrap();
            prop_assert!((a[0] - b[0]).abs() < 1e-10, "{kind}: {} vs {}", a[0], b[0]);
        }
    }

    #[test]
    fn tau_cp1_factored_matches_quadratic_form(f in prop::array::uniform4(-10.0f64..10.0)) {
        prop_assert!(common::tau_cp1_forms(f) < 1e-15);
    }

    #[test]
    fn second_difference_taus(f in prop::array::uniform3(-10.0f64..10.0)) {
        prop_assert!(common::tau_second_difference_forms(f) < 1e-15);
    }

    #[test]
    fn indicators_shift_and_scale(f in prop::array::uniform5(-1.0f64..1.0), c in -100.0f64..100.0, s in 0.01f64..100.0) {
        let w = StencilWindow::new(&f, 2, 0.1).unwrap();
        let shifted: Vec<f64> = f.iter().map(|x| x + c).collect();
        let scaled: Vec<f64> = f.iter().map(|x| x * s).collect();
        let ws = StencilWindow::new(&shifted, 2, 0.1).unwrap();
        let wk = StencilWindow::new(&scaled, 2, 0.1).unwrap();
        for (r, k) in [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)] {
            let b = smoothness_beta(&w, r, k).unwrap();
            let tol = 1e-11 * (1.0 + c.abs()).powi(2);
            prop_assert!((smoothness_beta(&ws, r, k).unwrap() - b).abs() < tol);
            let rel = (smoothness_beta(&wk, r, k).unwrap() - s * s * b).abs();
            prop_assert!(rel <= 1e-12 * s * s * (1.0 + b));
        }
        for kind in [TauKind::Tau3, TauKind::TauN, TauKind::TauCp1, TauKind::TauCp2 { c: 1.0 }] {
            let t = tau(&w, kind).unwrap();
            let tol = 1e-10 * (1.0 + c.abs()).powi(2);
            prop_assert!((tau(&ws, kind).unwrap() - t).abs() < tol);
            prop_assert!((tau(&wk, kind).unwrap() - s * s * t).abs() <= 1e-12 * s * s * (1.0 + t));
        }
    }

    #[test]
    fn steger_warming_split_identity(w in gas_state()) {
        prop_assert!(common::split_identity(w) < 1e-14);
    }

    #[test]
    fn characteristic_round_trip(wl in gas_state(), wr in gas_state(), x in prop::array::uniform4(-1.0f64..1.0)) {
        prop_assert!(common::characteristic_round_trip(wl, wr, x) < 1e-14);
    }
}
