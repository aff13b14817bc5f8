//! Nonlinear weights for the third-order WENO-Z family (plus WENO3/5-JS).
//!
//! Each scheme combines the same two candidates `q^{(2)}_0`, `q^{(2)}_1`
//! (three r = 3 candidates for JS5) and differs only in which smoothness
//! indicators and which global indicator feed the non-normalized weight α.

use std::fmt;
use std::ops::Deref;

use crate::error::{ParamError, WeightError};
use crate::indicators::TauKind;
use crate::stencil::{D2, D3};

/// Piecewise rational mapping parameters `(n, m, m1; c1, c2, c3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappingParams {
    pub n: u32,
    pub m: u32,
    pub m1: u32,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl MappingParams {
    pub fn new(n: u32, m: u32, m1: u32, c1: f64, c2: f64, c3: f64) -> Result<Self, ParamError> {
        let p = MappingParams {
            n,
            m,
            m1,
            c1,
            c2,
            c3,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let bad = |msg: String| Err(ParamError::Invalid(msg));
        if self.n < 1 {
            return bad(format!("mapping n must be >= 1, got {}", self.n));
        }
        if self.m1 < self.m + 1 {
            return bad(format!(
                "mapping requires m1 >= m + 1, got m = {}, m1 = {}",
                self.m, self.m1
            ));
        }
        if !(self.c1.is_finite() && self.c1 > 0.0) {
            return bad(format!("mapping c1 must be > 0, got {}", self.c1));
        }
        if !(self.c2.is_finite() && self.c2 >= 0.0) {
            return bad(format!("mapping c2 must be >= 0, got {}", self.c2));
        }
        if !(self.c3.is_finite() && self.c3 > 0.0) {
            return bad(format!("mapping c3 must be > 0, got {}", self.c3));
        }
        Ok(())
    }

    /// Tabulated parameters for the candidate with `d_0 = 1/3`.
    pub const fn zm3_d0() -> Self {
        MappingParams {
            n: 2,
            m: 1,
            m1: 2,
            c1: 1.2,
            c2: 0.1,
            c3: 55.0,
        }
    }

    /// Tabulated parameters for the candidate with `d_1 = 2/3`.
    pub const fn zm3_d1() -> Self {
        MappingParams {
            n: 2,
            m: 1,
            m1: 2,
            c1: 1.2,
            c2: 0.1,
            c3: 35.0,
        }
    }
}

/// Piecewise rational map: flat of order `n` at 0, identity beyond `c3`.
///
/// `M(w) = w^{n+1} / (w^n + c2 w (c3 - w)^{m1} + c1 (c3 - w)^{m+1})` for
/// `w <= c3` and `M(w) = w` otherwise.
#[inline]
pub fn prm_map(w: f64, params: &MappingParams) -> f64 {
    if w <= 0.0 {
        return 0.0;
    }
    if w > params.c3 {
        return w;
    }
    let gap = params.c3 - w;
    let wn = w.powi(params.n as i32);
    let den = wn
        + params.c2 * w * gap.powi(params.m1 as i32)
        + params.c1 * gap.powi(params.m as i32 + 1);
    wn * w / den
}

/// Scheme tags. `Z3Pow` is WENO3-Z with the `τ₃^p/β` weight form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    Js3,
    Z3,
    Z3Pow,
    Np3,
    F3,
    Nn3,
    Pz3,
    PPlus3,
    Zm3,
    Zes3,
    Js5,
}

impl SchemeKind {
    pub const ALL: [SchemeKind; 11] = [
        SchemeKind::Js3,
        SchemeKind::Z3,
        SchemeKind::Z3Pow,
        SchemeKind::Np3,
        SchemeKind::F3,
        SchemeKind::Nn3,
        SchemeKind::Pz3,
        SchemeKind::PPlus3,
        SchemeKind::Zm3,
        SchemeKind::Zes3,
        SchemeKind::Js5,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SchemeKind::Js3 => "JS3",
            SchemeKind::Z3 => "Z3",
            SchemeKind::Z3Pow => "Z3POW",
            SchemeKind::Np3 => "NP3",
            SchemeKind::F3 => "F3",
            SchemeKind::Nn3 => "NN3",
            SchemeKind::Pz3 => "PZ3",
            SchemeKind::PPlus3 => "PPLUS3",
            SchemeKind::Zm3 => "ZM3",
            SchemeKind::Zes3 => "ZES3",
            SchemeKind::Js5 => "JS5",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SchemeKind::Js3 => "WENO3-JS",
            SchemeKind::Z3 => "WENO3-Z",
            SchemeKind::Z3Pow => "WENO3-Z (tau3^p/beta)",
            SchemeKind::Np3 => "WENO-NP3",
            SchemeKind::F3 => "WENO-F3",
            SchemeKind::Nn3 => "WENO-NN3",
            SchemeKind::Pz3 => "WENO-PZ3",
            SchemeKind::PPlus3 => "WENO-P+3",
            SchemeKind::Zm3 => "WENO3-ZM",
            SchemeKind::Zes3 => "WENO3-ZES",
            SchemeKind::Js5 => "WENO5-JS",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        let t = tag.trim().to_ascii_uppercase();
        SchemeKind::ALL.into_iter().find(|k| k.tag() == t)
    }

    pub fn valid_tags() -> Vec<&'static str> {
        SchemeKind::ALL.iter().map(|k| k.tag()).collect()
    }

    pub fn candidates(self) -> usize {
        if self == SchemeKind::Js5 {
            3
        } else {
            2
        }
    }

    pub fn linear_weights(self) -> &'static [f64] {
        if self == SchemeKind::Js5 {
            &D3
        } else {
            &D2
        }
    }

    /// Global indicator used by the scheme, if any.
    pub fn tau_kind(self, c: f64) -> Option<TauKind> {
        match self {
            SchemeKind::Js3 | SchemeKind::Js5 => None,
            SchemeKind::Z3 | SchemeKind::Z3Pow | SchemeKind::Pz3 => Some(TauKind::Tau3),
            SchemeKind::Np3 | SchemeKind::Nn3 => Some(TauKind::TauN),
            SchemeKind::F3 => Some(TauKind::TauF3),
            SchemeKind::PPlus3 => Some(TauKind::TauP),
            SchemeKind::Zm3 => Some(TauKind::TauCp1),
            SchemeKind::Zes3 => Some(TauKind::TauCp2 { c }),
        }
    }

    fn default_p(self) -> f64 {
        match self {
            SchemeKind::Z3Pow | SchemeKind::Np3 | SchemeKind::F3 => 1.5,
            SchemeKind::Nn3 | SchemeKind::Pz3 => 0.5,
            _ => 1.0,
        }
    }

    /// True when the weight form has a free exponent `p`.
    pub fn has_exponent(self) -> bool {
        self.p_range().is_some()
    }

    /// Admissible exponent interval `(lo, hi]` or `[lo, hi]`, or `None` when
    /// the scheme has no free exponent.
    fn p_range(self) -> Option<(f64, f64, bool, &'static str)> {
        match self {
            SchemeKind::Z3 => Some((1.0, 2.0, true, "[1, 2]")),
            SchemeKind::Z3Pow | SchemeKind::Np3 | SchemeKind::F3 => {
                Some((1.5, f64::INFINITY, true, "[3/2, inf)"))
            }
            SchemeKind::Nn3 => Some((0.0, 0.75, false, "(0, 3/4]")),
            SchemeKind::Pz3 => Some((0.0, 0.5, false, "(0, 1/2]")),
            _ => None,
        }
    }

    /// Default division guard: `1e-6` for the Jiang–Shu weights, `1e-40`
    /// for the Z family.
    pub fn default_eps(self) -> f64 {
        match self {
            SchemeKind::Js3 | SchemeKind::Js5 => 1e-6,
            _ => 1e-40,
        }
    }

    pub fn is_z_family(self) -> bool {
        !matches!(self, SchemeKind::Js3 | SchemeKind::Js5)
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A fully parameterised reconstruction scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeSpec {
    pub kind: SchemeKind,
    /// Exponent of the weight form (ignored by schemes without one).
    pub p: f64,
    /// Scale of τ_CP2 (ZES3 only).
    pub c: f64,
    pub eps: f64,
    /// Mapping per candidate (ZM3 only).
    pub mapping: [MappingParams; 2],
}

impl SchemeSpec {
    pub fn new(kind: SchemeKind) -> Self {
        SchemeSpec {
            kind,
            p: kind.default_p(),
            c: 1.0,
            eps: kind.default_eps(),
            mapping: [MappingParams::zm3_d0(), MappingParams::zm3_d1()],
        }
    }

    pub fn with_p(mut self, p: f64) -> Result<Self, ParamError> {
        self.p = p;
        self.validate()?;
        Ok(self)
    }

    pub fn with_eps(mut self, eps: f64) -> Result<Self, ParamError> {
        self.eps = eps;
        self.validate()?;
        Ok(self)
    }

    pub fn with_c(mut self, c: f64) -> Result<Self, ParamError> {
        self.c = c;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if let Some((lo, hi, closed_lo, range)) = self.kind.p_range() {
            let lo_ok = if closed_lo { self.p >= lo } else { self.p > lo };
            if !(self.p.is_finite() && lo_ok && self.p <= hi) {
                return Err(ParamError::Exponent {
                    scheme: self.kind.tag(),
                    p: self.p,
                    range,
                });
            }
        }
        if !(self.eps.is_finite() && self.eps >= 0.0) {
            return Err(ParamError::Invalid(format!("eps must be >= 0, got {}", self.eps)));
        }
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(ParamError::Invalid(format!("c must be > 0, got {}", self.c)));
        }
        for m in &self.mapping {
            m.validate()?;
        }
        Ok(())
    }

    pub fn tau_kind(&self) -> Option<TauKind> {
        self.kind.tau_kind(self.c)
    }
}

/// Number of points the positive-wind reconstruction reads.
pub fn scheme_stencil_width(spec: &SchemeSpec) -> usize {
    match spec.kind {
        SchemeKind::Zm3 => 4,
        SchemeKind::Zes3 | SchemeKind::Js5 => 5,
        _ => 3,
    }
}

/// Normalized weights, at most three.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weights {
    values: [f64; 3],
    len: usize,
}

impl Deref for Weights {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.values[..self.len]
    }
}

fn check(name: &'static str, v: f64) -> Result<(), WeightError> {
    if !v.is_finite() {
        return Err(WeightError::NonFinite { name, value: v });
    }
    if v < 0.0 {
        return Err(WeightError::Negative { name, value: v });
    }
    Ok(())
}

const BETA_NAMES: [&str; 3] = ["beta[0]", "beta[1]", "beta[2]"];

/// Normalized nonlinear weights `ω_k = α_k / Σ α`.
///
/// `dx` is only read by WENO-P+3; `tau` is ignored by the Jiang–Shu schemes.
pub fn nonlinear_weights(
    betas: &[f64],
    tau: f64,
    dx: f64,
    spec: &SchemeSpec,
) -> Result<Weights, WeightError> {
    let expected = spec.kind.candidates();
    if betas.len() != expected {
        return Err(WeightError::BetaCount {
            kind: spec.kind.tag(),
            expected,
            got: betas.len(),
        });
    }
    for (b, name) in betas.iter().zip(BETA_NAMES) {
        check(name, *b)?;
    }
    check("tau", tau)?;
    let mut out = Weights {
        values: [0.0; 3],
        len: expected,
    };
    if expected == 3 {
        out.values = weights_js5([betas[0], betas[1], betas[2]], spec.eps);
    } else {
        let w = weights_pair([betas[0], betas[1]], tau, dx, spec);
        out.values[..2].copy_from_slice(&w);
    }
    for v in out.iter() {
        check("omega", *v)?;
    }
    Ok(out)
}

/// Non-normalized weights for the two-candidate schemes.
#[inline]
pub(crate) fn alphas_pair(b: [f64; 2], tau: f64, dx: f64, spec: &SchemeSpec) -> [f64; 2] {
    let eps = spec.eps;
    let p = spec.p;
    let mut a = [0.0; 2];
    for k in 0..2 {
        let bk = b[k] + eps;
        let d = D2[k];
        a[k] = match spec.kind {
            SchemeKind::Js3 => d / (bk * bk),
            SchemeKind::Z3 => {
                let r = ratio(tau, bk);
                d * (1.0 + if p == 1.0 { r } else { r.powf(p) })
            }
            SchemeKind::Z3Pow | SchemeKind::Np3 | SchemeKind::F3 => d * (1.0 + ratio(tau.powf(p), bk)),
            SchemeKind::Nn3 | SchemeKind::Pz3 => d * (1.0 + ratio(tau, bk.powf(p))),
            SchemeKind::PPlus3 => d * (1.0 + ratio(tau, bk) + dx.powf(1.0 / 6.0) * bk / (tau + eps)),
            SchemeKind::Zm3 => d * (1.0 + prm_map(ratio(tau, bk), &spec.mapping[k])),
            SchemeKind::Zes3 => d * (1.0 + ratio(tau, bk)),
            SchemeKind::Js5 => unreachable!("JS5 uses three candidates"),
        };
    }
    a
}

/// `num / den` with `0/0 = 0`.
#[inline]
fn ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else {
        num / den
    }
}

#[inline]
pub(crate) fn weights_pair(b: [f64; 2], tau: f64, dx: f64, spec: &SchemeSpec) -> [f64; 2] {
    let a = alphas_pair(b, tau, dx, spec);
    let s = a[0] + a[1];
    if s.is_finite() {
        return [a[0] / s, a[1] / s];
    }
    // overflowed ratios: keep the limit of the weights
    match (a[0].is_finite(), a[1].is_finite()) {
        (false, true) => [1.0, 0.0],
        (true, false) => [0.0, 1.0],
        _ => {
            let l = [D2[0] / (b[0] + spec.eps), D2[1] / (b[1] + spec.eps)];
            let s = l[0] + l[1];
            if s.is_finite() {
                [l[0] / s, l[1] / s]
            } else {
                D2
            }
        }
    }
}

#[inline]
pub(crate) fn weights_js5(b: [f64; 3], eps: f64) -> [f64; 3] {
    let mut a = [0.0; 3];
    for k in 0..3 {
        let bk = b[k] + eps;
        a[k] = D3[k] / (bk * bk);
    }
    let s = a[0] + a[1] + a[2];
    [a[0] / s, a[1] / s, a[2] / s]
}
