//! Global smoothness indicators τ.
//!
//! All indicators are built from undivided differences, so no grid spacing
//! enters them. The one-parameter indicators τ_N, τ_F3 and τ_P are
//! evaluated in their reduced form `c·(δ^{(2)2})²`.

use crate::error::StencilError;
use crate::stencil::{beta_unchecked, delta_unchecked, DeltaTag, StencilWindow};

/// Which global indicator to evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TauKind {
    /// `|β^{(2)}_0 - β^{(2)}_1|`
    Tau3,
    /// `(10/12)(δ^{(2)2})²`
    TauN,
    /// `(2/12)(δ^{(2)2})²`
    TauF3,
    /// `(3/12)(δ^{(2)2})²`
    TauP,
    /// Four-point indicator with optimal behaviour at first-order critical
    /// points, including those at half nodes.
    TauCp1,
    /// `c·(δ^{(4)2})²` on five points.
    TauCp2 { c: f64 },
}

impl TauKind {
    /// Relative index range the indicator reads.
    pub fn support(self) -> (isize, isize) {
        match self {
            TauKind::Tau3 | TauKind::TauN | TauKind::TauF3 | TauKind::TauP => (-1, 1),
            TauKind::TauCp1 => (-1, 2),
            TauKind::TauCp2 { .. } => (-2, 2),
        }
    }
}

pub const TAU_N_COEFF: f64 = 10.0 / 12.0;
pub const TAU_F3_COEFF: f64 = 2.0 / 12.0;
pub const TAU_P_COEFF: f64 = 3.0 / 12.0;

/// Evaluate the global smoothness indicator `kind` on `w`.
pub fn tau(w: &StencilWindow, kind: TauKind) -> Result<f64, StencilError> {
    if let TauKind::TauCp2 { c } = kind {
        if !(c.is_finite() && c > 0.0) {
            return Err(StencilError::BadScale(c));
        }
    }
    let (lo, hi) = kind.support();
    w.require(lo, hi)?;
    Ok(tau_unchecked(w, kind))
}

#[inline]
pub(crate) fn tau_unchecked(w: &StencilWindow, kind: TauKind) -> f64 {
    match kind {
        TauKind::Tau3 => (beta_unchecked(w, 2, 0) - beta_unchecked(w, 2, 1)).abs(),
        TauKind::TauN => TAU_N_COEFF * delta_unchecked(w, DeltaTag::D2o2).powi(2),
        TauKind::TauF3 => TAU_F3_COEFF * delta_unchecked(w, DeltaTag::D2o2).powi(2),
        TauKind::TauP => TAU_P_COEFF * delta_unchecked(w, DeltaTag::D2o2).powi(2),
        TauKind::TauCp1 => {
            let lead = -w.f(2) + 3.0 * w.f(1) + 21.0 * w.f(0) - 23.0 * w.f(-1);
            0.25 * (lead * delta_unchecked(w, DeltaTag::D3o1)).abs()
        }
        TauKind::TauCp2 { c } => c * delta_unchecked(w, DeltaTag::D4o2).powi(2),
    }
}

/// Coefficients of the general three-point quadratic indicator
/// `|a1 (f_j - f_{j-1})² + a2 (f_{j+1} - f_j)² + a3 (f_{j+1} - f_{j-1})² + b (δ^{(2)2})²|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauStarCoeffs {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub b: f64,
}

impl TauStarCoeffs {
    /// The family whose error is `O(Δx⁴)`: `a1 = a2 = a`, `a3 = -a/2`.
    pub fn fourth_order_family(a: f64, b: f64) -> Self {
        TauStarCoeffs {
            a1: a,
            a2: a,
            a3: -0.5 * a,
            b,
        }
    }
}

pub fn tau_star(w: &StencilWindow, coeffs: &TauStarCoeffs) -> Result<f64, StencilError> {
    w.require(-1, 1)?;
    let (fm, f0, fp) = (w.f(-1), w.f(0), w.f(1));
    let d2 = fp - 2.0 * f0 + fm;
    let v = coeffs.a1 * (f0 - fm).powi(2)
        + coeffs.a2 * (fp - f0).powi(2)
        + coeffs.a3 * (fp - fm).powi(2)
        + coeffs.b * d2 * d2;
    Ok(v.abs())
}
