//! Interface reconstruction `f̂_{j+1/2} = Σ ω_k q_k`.

use crate::error::{ReconstructError, StencilError};
use crate::indicators::tau_unchecked;
use crate::stencil::{beta_unchecked, candidate_unchecked, StencilWindow};
use crate::weights::{
    nonlinear_weights, scheme_stencil_width, weights_js5, weights_pair, SchemeKind, SchemeSpec,
};

/// Upwind direction of the flux part being reconstructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wind {
    Positive,
    Negative,
}

/// Reconstruct the value at the interface `j+1/2`.
///
/// `values` holds exactly `scheme_stencil_width(spec)` samples in
/// left-to-right order. For positive wind they are `f_{j-1}..` (width 3 or 4)
/// or `f_{j-2}..f_{j+2}` (width 5). For negative wind the window is the
/// mirror image about `j+1/2`: `..f_{j+2}` for width 3, `f_{j-1}..f_{j+2}`
/// for width 4 and `f_{j-1}..f_{j+3}` for width 5.
pub fn reconstruct_interface(
    values: &[f64],
    spec: &SchemeSpec,
    wind: Wind,
    dx: f64,
) -> Result<f64, ReconstructError> {
    let width = scheme_stencil_width(spec);
    if values.len() != width {
        return Err(StencilError::BadLength(values.len()).into());
    }
    let mut buf = [0.0; 5];
    let buf = &mut buf[..width];
    buf.copy_from_slice(values);
    if wind == Wind::Negative {
        buf.reverse();
    }
    let offset = if width == 5 { 2 } else { 1 };
    let w = StencilWindow::new(buf, offset, dx)?;
    let kind = spec.kind;
    if kind == SchemeKind::Js5 {
        let q: Vec<f64> = (0..3).map(|k| candidate_unchecked(&w, 3, k)).collect();
        let b: Vec<f64> = (0..3).map(|k| beta_unchecked(&w, 3, k)).collect();
        let om = nonlinear_weights(&b, 0.0, dx, spec)?;
        return Ok(om.iter().zip(&q).map(|(o, q)| o * q).sum());
    }
    let q = [candidate_unchecked(&w, 2, 0), candidate_unchecked(&w, 2, 1)];
    let b = pair_betas(&w, kind);
    let tau = spec.tau_kind().map_or(0.0, |t| tau_unchecked(&w, t));
    let om = nonlinear_weights(&b, tau, dx, spec)?;
    Ok(om[0] * q[0] + om[1] * q[1])
}

#[inline]
fn pair_betas(w: &StencilWindow, kind: SchemeKind) -> [f64; 2] {
    match kind {
        SchemeKind::Zm3 => [beta_unchecked(w, 2, 0), beta_unchecked(w, 3, 2)],
        SchemeKind::Zes3 => [beta_unchecked(w, 3, 0), beta_unchecked(w, 3, 2)],
        _ => [beta_unchecked(w, 2, 0), beta_unchecked(w, 2, 1)],
    }
}

/// Positive-wind reconstruction from `f_{j-2}..f_{j+2}` without validation.
/// Schemes with narrower stencils ignore the unused end points.
#[inline]
pub(crate) fn reconstruct_positive(f: &[f64; 5], spec: &SchemeSpec, dx: f64) -> f64 {
    let w = StencilWindow::trusted(f, 2, dx);
    if spec.kind == SchemeKind::Js5 {
        let b = [
            beta_unchecked(&w, 3, 0),
            beta_unchecked(&w, 3, 1),
            beta_unchecked(&w, 3, 2),
        ];
        let om = weights_js5(b, spec.eps);
        return om[0] * candidate_unchecked(&w, 3, 0)
            + om[1] * candidate_unchecked(&w, 3, 1)
            + om[2] * candidate_unchecked(&w, 3, 2);
    }
    let b = pair_betas(&w, spec.kind);
    let tau = spec.tau_kind().map_or(0.0, |t| tau_unchecked(&w, t));
    let om = weights_pair(b, tau, dx, spec);
    om[0] * candidate_unchecked(&w, 2, 0) + om[1] * candidate_unchecked(&w, 2, 1)
}
