//! Stencil kernels: candidate reconstructions, Jiang–Shu smoothness
//! indicators and undivided finite differences on small point windows.
//!
//! Every kernel addresses samples relative to the window centre `j`, so
//! `f(-1)` is `f_{j-1}`. Coefficient tables follow the usual WENO-JS layout:
//! for sub-stencil size `r` and candidate `k` the samples used are
//! `f_{j-r+k+1} ..= f_{j+k}`.

use crate::error::StencilError;

/// Candidate coefficients `a^r_{kl}` for r = 2.
pub const A2: [[f64; 2]; 2] = [[-0.5, 1.5], [0.5, 0.5]];
/// Linear weights for r = 2.
pub const D2: [f64; 2] = [1.0 / 3.0, 2.0 / 3.0];
/// Candidate coefficients `a^r_{kl}` for r = 3.
pub const A3: [[f64; 3]; 3] = [
    [2.0 / 6.0, -7.0 / 6.0, 11.0 / 6.0],
    [-1.0 / 6.0, 5.0 / 6.0, 2.0 / 6.0],
    [2.0 / 6.0, 5.0 / 6.0, -1.0 / 6.0],
];
/// Linear weights for r = 3.
pub const D3: [f64; 3] = [0.1, 0.6, 0.3];

/// Indicator rows `b^r_{kml}` for r = 2 (one row per candidate).
pub const B2: [[[f64; 2]; 1]; 2] = [[[-1.0, 1.0]], [[-1.0, 1.0]]];
/// Outer indicator weights `c^r_m` for r = 2.
pub const C2: [f64; 1] = [1.0];
/// Indicator rows `b^r_{kml}` for r = 3; m = 0 is the first-derivative row,
/// m = 1 the second difference.
pub const B3: [[[f64; 3]; 2]; 3] = [
    [[1.0, -4.0, 3.0], [1.0, -2.0, 1.0]],
    [[-1.0, 0.0, 1.0], [1.0, -2.0, 1.0]],
    [[3.0, -4.0, 1.0], [1.0, -2.0, 1.0]],
];
/// Outer indicator weights `c^r_m` for r = 3.
pub const C3: [f64; 2] = [0.25, 13.0 / 12.0];

/// A short run of point samples around a centre index, with its spacing.
#[derive(Debug, Clone, Copy)]
pub struct StencilWindow<'a> {
    values: &'a [f64],
    offset: usize,
    dx: f64,
}

impl<'a> StencilWindow<'a> {
    /// Validated constructor: 3 to 5 finite values, `offset` inside the
    /// window and a positive finite spacing.
    pub fn new(values: &'a [f64], offset: usize, dx: f64) -> Result<Self, StencilError> {
        if !(3..=5).contains(&values.len()) {
            return Err(StencilError::BadLength(values.len()));
        }
        if offset >= values.len() {
            return Err(StencilError::BadOffset {
                offset,
                len: values.len(),
            });
        }
        if !(dx.is_finite() && dx > 0.0) {
            return Err(StencilError::BadSpacing(dx));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(StencilError::NonFinite {
                index: i,
                value: values[i],
            });
        }
        Ok(StencilWindow { values, offset, dx })
    }

    /// Window without the finiteness and length checks. Used by the solver
    /// on buffers it has already validated.
    pub(crate) fn trusted(values: &'a [f64], offset: usize, dx: f64) -> Self {
        debug_assert!(offset < values.len());
        StencilWindow { values, offset, dx }
    }

    pub fn values(&self) -> &'a [f64] {
        self.values
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Lowest and highest relative index covered by the window.
    pub fn span(&self) -> (isize, isize) {
        let lo = -(self.offset as isize);
        (lo, lo + self.values.len() as isize - 1)
    }

    /// `f_{j+l}`; panics outside the window, callers check with [`Self::require`].
    #[inline]
    pub(crate) fn f(&self, l: isize) -> f64 {
        self.values[(self.offset as isize + l) as usize]
    }

    /// Errors unless relative indices `lo..=hi` are all inside the window.
    pub fn require(&self, lo: isize, hi: isize) -> Result<(), StencilError> {
        let (have_lo, have_hi) = self.span();
        if lo < have_lo || hi > have_hi {
            Err(StencilError::TooShort {
                need: (lo, hi),
                have: (have_lo, have_hi),
            })
        } else {
            Ok(())
        }
    }
}

fn check_candidate(r: usize, k: usize) -> Result<(), StencilError> {
    match r {
        2 | 3 if k < r => Ok(()),
        _ => Err(StencilError::UnsupportedCandidate { r, k }),
    }
}

/// Relative index of the first sample of candidate `(r, k)`.
#[inline]
fn first(r: usize, k: usize) -> isize {
    k as isize + 1 - r as isize
}

/// Candidate value `q^r_k`, the sub-stencil approximation of `h(x_{j+1/2})`.
pub fn candidate_reconstruct(w: &StencilWindow, r: usize, k: usize) -> Result<f64, StencilError> {
    check_candidate(r, k)?;
    let lo = first(r, k);
    w.require(lo, lo + r as isize - 1)?;
    Ok(candidate_unchecked(w, r, k))
}

#[inline]
pub(crate) fn candidate_unchecked(w: &StencilWindow, r: usize, k: usize) -> f64 {
    let lo = first(r, k);
    match r {
        2 => A2[k][0] * w.f(lo) + A2[k][1] * w.f(lo + 1),
        _ => A3[k][0] * w.f(lo) + A3[k][1] * w.f(lo + 1) + A3[k][2] * w.f(lo + 2),
    }
}

/// Smoothness indicator `β^{(r)}_k = Σ_m c_m (Σ_l b_{kml} f)²`.
pub fn smoothness_beta(w: &StencilWindow, r: usize, k: usize) -> Result<f64, StencilError> {
    check_candidate(r, k)?;
    let lo = first(r, k);
    w.require(lo, lo + r as isize - 1)?;
    Ok(beta_unchecked(w, r, k))
}

#[inline]
pub(crate) fn beta_unchecked(w: &StencilWindow, r: usize, k: usize) -> f64 {
    let lo = first(r, k);
    match r {
        2 => {
            let s = B2[k][0][0] * w.f(lo) + B2[k][0][1] * w.f(lo + 1);
            C2[0] * s * s
        }
        _ => {
            let (f0, f1, f2) = (w.f(lo), w.f(lo + 1), w.f(lo + 2));
            let mut acc = 0.0;
            for (m, row) in B3[k].iter().enumerate() {
                let s = row[0] * f0 + row[1] * f1 + row[2] * f2;
                acc += C3[m] * s * s;
            }
            acc
        }
    }
}

/// Undivided difference operators. The name encodes derivative order and
/// formal accuracy, e.g. `D3o1` approximates `Δx³ f'''_j` to first order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaTag {
    /// `f_{j+1} - f_{j-1}`
    D1o2,
    /// `f_{j+1} - 2f_j + f_{j-1}`
    D2o2,
    /// `-f_{j+2} + 6f_{j+1} - 3f_j - 2f_{j-1}`
    D1o3,
    /// `f_{j+2} - 3f_{j+1} + 3f_j - f_{j-1}`
    D3o1,
    /// `-f_{j+2} + 8f_{j+1} - 8f_{j-1} + f_{j-2}`
    D1o4,
    /// `-f_{j+2} + 16f_{j+1} - 30f_j + 16f_{j-1} - f_{j-2}`
    D2o4,
    /// `f_{j+2} - 2f_{j+1} + 2f_{j-1} - f_{j-2}`
    D3o2,
    /// `f_{j+2} - 4f_{j+1} + 6f_j - 4f_{j-1} + f_{j-2}`
    D4o2,
}

impl DeltaTag {
    pub const ALL: [DeltaTag; 8] = [
        DeltaTag::D1o2,
        DeltaTag::D2o2,
        DeltaTag::D1o3,
        DeltaTag::D3o1,
        DeltaTag::D1o4,
        DeltaTag::D2o4,
        DeltaTag::D3o2,
        DeltaTag::D4o2,
    ];

    /// First relative index and coefficients, left to right.
    pub fn coefficients(self) -> (isize, &'static [f64]) {
        match self {
            DeltaTag::D1o2 => (-1, &[-1.0, 0.0, 1.0]),
            DeltaTag::D2o2 => (-1, &[1.0, -2.0, 1.0]),
            DeltaTag::D1o3 => (-1, &[-2.0, -3.0, 6.0, -1.0]),
            DeltaTag::D3o1 => (-1, &[-1.0, 3.0, -3.0, 1.0]),
            DeltaTag::D1o4 => (-2, &[1.0, -8.0, 0.0, 8.0, -1.0]),
            DeltaTag::D2o4 => (-2, &[-1.0, 16.0, -30.0, 16.0, -1.0]),
            DeltaTag::D3o2 => (-2, &[-1.0, 2.0, 0.0, -2.0, 1.0]),
            DeltaTag::D4o2 => (-2, &[1.0, -4.0, 6.0, -4.0, 1.0]),
        }
    }
}

/// Undivided difference named by `tag`; no powers of Δx are applied.
pub fn finite_delta(w: &StencilWindow, tag: DeltaTag) -> Result<f64, StencilError> {
    let (lo, c) = tag.coefficients();
    w.require(lo, lo + c.len() as isize - 1)?;
    Ok(delta_unchecked(w, tag))
}

#[inline]
pub(crate) fn delta_unchecked(w: &StencilWindow, tag: DeltaTag) -> f64 {
    // Summed over first differences so constant data gives exactly zero.
    let (lo, c) = tag.coefficients();
    let mut partial = 0.0;
    let mut acc = 0.0;
    for (i, ci) in c[..c.len() - 1].iter().enumerate() {
        partial += ci;
        let l = lo + i as isize;
        acc -= partial * (w.f(l + 1) - w.f(l));
    }
    acc
}
