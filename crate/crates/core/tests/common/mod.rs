//! Identity checks shared by the property tests and the acceptance suite.
//! Each returns the scaled discrepancy, which round-off keeps near 1e-16.

#![allow(dead_code)]

use weno3z::indicators::{tau, TauKind, TAU_F3_COEFF, TAU_N_COEFF, TAU_P_COEFF};
use weno3z::solver::euler::{
    flux1, flux2, interface_eigensystem_1d, interface_eigensystem_2d, steger_warming_split,
    steger_warming_split_2d, Gas, Primitive,
};
use weno3z::stencil::StencilWindow;
use weno3z::weights::{nonlinear_weights, SchemeKind, SchemeSpec};

pub const CP1_LEFT: [f64; 4] = [-23.0, 21.0, 3.0, -1.0];
pub const CP1_RIGHT: [f64; 4] = [-1.0, 3.0, -3.0, 1.0];

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// τ_CP1 against `¼|vᵀAv|` with `A` the symmetrized outer product of the
/// two coefficient rows; `f` is `f_{j-1}..f_{j+2}`.
pub fn tau_cp1_forms(f: [f64; 4]) -> f64 {
    let w = StencilWindow::new(&f, 1, 0.1).unwrap();
    let lib = tau(&w, TauKind::TauCp1).unwrap();
    let mut quad = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            let sym = 0.5 * (CP1_LEFT[a] * CP1_RIGHT[b] + CP1_LEFT[b] * CP1_RIGHT[a]);
            quad += f[a] * sym * f[b];
        }
    }
    let combo = 0.25 * quad.abs();
    let scale: f64 = f.iter().map(|x| x.abs()).sum::<f64>().powi(2) * 48.0;
    (lib - combo).abs() / scale.max(f64::MIN_POSITIVE)
}

/// τ_N, τ_P and τ_F3 against `{10, 3, 2}/12 · (f_{j+1} - 2f_j + f_{j-1})²`.
pub fn tau_second_difference_forms(f: [f64; 3]) -> f64 {
    let w = StencilWindow::new(&f, 1, 0.1).unwrap();
    let d = f[2] - 2.0 * f[1] + f[0];
    let scale = (f.iter().map(|x| x.abs()).sum::<f64>() * 4.0).powi(2);
    let mut worst: f64 = 0.0;
    for (kind, c) in [(TauKind::TauN, TAU_N_COEFF), (TauKind::TauP, TAU_P_COEFF), (TauKind::TauF3, TAU_F3_COEFF)] {
        let lib = tau(&w, kind).unwrap();
        worst = worst.max((lib - c * d * d).abs() / scale.max(f64::MIN_POSITIVE));
    }
    assert_eq!(TAU_N_COEFF, 10.0 / 12.0);
    assert_eq!(TAU_P_COEFF, 3.0 / 12.0);
    assert_eq!(TAU_F3_COEFF, 2.0 / 12.0);
    worst
}

/// `|Σω - 1|` over every scheme.
pub fn weight_sum(betas: [f64; 3], tau_value: f64, dx: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for kind in SchemeKind::ALL {
        let spec = SchemeSpec::new(kind);
        let b = &betas[..kind.candidates()];
        let w = nonlinear_weights(b, tau_value, dx, &spec).unwrap();
        assert!(w.iter().all(|x| *x >= 0.0), "{kind}: {:?}", &w[..]);
        worst = worst.max((w.iter().sum::<f64>() - 1.0).abs());
    }
    worst
}

fn scale_of(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

fn split_error(p: &[f64], m: &[f64], f: &[f64]) -> f64 {
    (0..f.len())
        .map(|c| (p[c] + m[c] - f[c]).abs() / (p[c].abs() + m[c].abs() + f[c].abs()).max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max)
}

/// `F⁺ + F⁻ - F` in 1-D and 2-D, per component relative to the size of
/// the parts.
pub fn split_identity(w: Primitive) -> f64 {
    let gas = Gas::default();
    let q1 = w.conserved1(gas.gamma);
    let (p, m) = steger_warming_split(&q1, &gas).unwrap();
    let e1 = split_error(&p, &m, &flux1(&q1, gas.gamma).unwrap());
    let q2 = w.conserved2(gas.gamma);
    let (p, m) = steger_warming_split_2d(&q2, &gas).unwrap();
    let e2 = split_error(&p, &m, &flux2(&q2, gas.gamma).unwrap());
    e1.max(e2)
}

fn norm_inf<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    m.iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// `R(Lx) - x` for the interface eigensystems of two states, relative to
/// `‖R‖ ‖L‖ ‖x‖`.
pub fn characteristic_round_trip(wl: Primitive, wr: Primitive, x: [f64; 4]) -> f64 {
    let gas = Gas::default();
    let e2 = interface_eigensystem_2d(&wl.conserved2(gas.gamma), &wr.conserved2(gas.gamma), &gas).unwrap();
    let back = e2.unproject(&e2.project(&x));
    let r2 = (0..4).map(|c| (back[c] - x[c]).abs()).fold(0.0, f64::max) / (norm_inf(&e2.left) * norm_inf(&e2.right));
    let e1 = interface_eigensystem_1d(&wl.conserved1(gas.gamma), &wr.conserved1(gas.gamma), &gas).unwrap();
    let x1 = [x[0], x[1], x[3]];
    let back = e1.unproject(&e1.project(&x1));
    let r1 = (0..3).map(|c| (back[c] - x1[c]).abs()).fold(0.0, f64::max) / (norm_inf(&e1.left) * norm_inf(&e1.right));
    r1.max(r2) / scale_of(&x).max(f64::MIN_POSITIVE)
}

/// ZM3 and ZES3 weights before and after scaling every indicator by `s²`.
pub fn weight_scale_invariance(betas: [f64; 2], tau_value: f64, s: f64) -> f64 {
    let s2 = s * s;
    let mut worst: f64 = 0.0;
    for kind in [SchemeKind::Zm3, SchemeKind::Zes3, SchemeKind::Z3] {
        let spec = SchemeSpec::new(kind).with_eps(0.0).unwrap();
        let a = nonlinear_weights(&betas, tau_value, 0.1, &spec).unwrap();
        let b = nonlinear_weights(&[betas[0] * s2, betas[1] * s2], tau_value * s2, 0.1, &spec).unwrap();
        worst = worst.max((a[0] - b[0]).abs()).max((a[1] - b[1]).abs());
    }
    worst
}
