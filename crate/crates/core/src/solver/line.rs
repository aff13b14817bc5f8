//! One-dimensional flux-difference operator shared by every case.
//!
//! A line holds `n` interior cells padded by `ghost` cells on both sides.
//! The operator splits the flux at every point, projects each interface's
//! stencil onto characteristic fields when the system has them, reconstructs
//! both wind directions and maps the result back.

use crate::error::PhysicsError;
use crate::solver::euler::{
    interface_eigensystem_1d, interface_eigensystem_2d, steger_warming_split,
    steger_warming_split_2d, Eigensystem, Gas,
};
use crate::solver::reconstruct::reconstruct_positive;
use crate::weights::{scheme_stencil_width, SchemeSpec};

pub const GHOST: usize = 3;

pub(crate) trait LineSystem<const NC: usize>: Sync {
    /// True when the flux has no negative-wind part.
    const UPWIND_ONLY: bool = false;

    fn split(&self, q: &[f64; NC]) -> Result<([f64; NC], [f64; NC]), PhysicsError>;

    /// `None` reconstructs component-wise.
    fn eigen(&self, ql: &[f64; NC], qr: &[f64; NC])
        -> Result<Option<Eigensystem<NC>>, PhysicsError>;
}

/// Linear advection `u_t + u_x = 0`.
pub(crate) struct Advection;

impl LineSystem<1> for Advection {
    const UPWIND_ONLY: bool = true;

    #[inline]
    fn split(&self, q: &[f64; 1]) -> Result<([f64; 1], [f64; 1]), PhysicsError> {
        Ok((*q, [0.0]))
    }

    fn eigen(&self, _: &[f64; 1], _: &[f64; 1]) -> Result<Option<Eigensystem<1>>, PhysicsError> {
        Ok(None)
    }
}

impl LineSystem<3> for Gas {
    #[inline]
    fn split(&self, q: &[f64; 3]) -> Result<([f64; 3], [f64; 3]), PhysicsError> {
        steger_warming_split(q, self)
    }

    #[inline]
    fn eigen(&self, ql: &[f64; 3], qr: &[f64; 3]) -> Result<Option<Eigensystem<3>>, PhysicsError> {
        interface_eigensystem_1d(ql, qr, self).map(Some)
    }
}

impl LineSystem<4> for Gas {
    #[inline]
    fn split(&self, q: &[f64; 4]) -> Result<([f64; 4], [f64; 4]), PhysicsError> {
        steger_warming_split_2d(q, self)
    }

    #[inline]
    fn eigen(&self, ql: &[f64; 4], qr: &[f64; 4]) -> Result<Option<Eigensystem<4>>, PhysicsError> {
        interface_eigensystem_2d(ql, qr, self).map(Some)
    }
}

/// Where and why a line evaluation failed; `cell` is a line index.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct LineFault {
    pub cell: usize,
    pub reason: String,
}

#[derive(Debug, Default)]
pub(crate) struct LineScratch<const NC: usize> {
    fp: Vec<[f64; NC]>,
    fm: Vec<[f64; NC]>,
}

/// Interface fluxes `F̂_{i+1/2}` for the `n + 1` interfaces of the line;
/// `out[k]` sits between line cells `ghost - 1 + k` and `ghost + k`.
pub(crate) fn line_fluxes<const NC: usize, S: LineSystem<NC>>(
    sys: &S,
    q: &[[f64; NC]],
    ghost: usize,
    spec: &SchemeSpec,
    dx: f64,
    scratch: &mut LineScratch<NC>,
    out: &mut [[f64; NC]],
) -> Result<(), LineFault> {
    let len = q.len();
    let n = len - 2 * ghost;
    debug_assert_eq!(out.len(), n + 1);
    scratch.fp.resize(len, [0.0; NC]);
    scratch.fm.resize(len, [0.0; NC]);
    for (i, qi) in q.iter().enumerate() {
        let (p, m) = sys.split(qi).map_err(|e| LineFault {
            cell: i,
            reason: e.to_string(),
        })?;
        scratch.fp[i] = p;
        scratch.fm[i] = m;
    }
    let width = scheme_stencil_width(spec);
    // stencil reach: positive wind reads j-back..=j+fwd
    let back = if width == 5 { 2 } else { 1 };
    let fwd = if width >= 4 { 2 } else { 1 };
    for (k, flux) in out.iter_mut().enumerate() {
        let j = ghost - 1 + k;
        let eig = sys.eigen(&q[j], &q[j + 1]).map_err(|e| LineFault {
            cell: j,
            reason: format!("interface average: {e}"),
        })?;
        let mut pos = [[0.0; 5]; NC];
        let mut neg = [[0.0; 5]; NC];
        // pos[c][2 + l] = f⁺_{j+l}; neg[c][2 + l] = f⁻_{j+1-l}
        for l in -(back as isize)..=fwd as isize {
            let v = scratch.fp[(j as isize + l) as usize];
            let v = match &eig {
                Some(e) => e.project(&v),
                None => v,
            };
            for c in 0..NC {
                pos[c][(2 + l) as usize] = v[c];
            }
            if !S::UPWIND_ONLY {
                let v = scratch.fm[(j as isize + 1 - l) as usize];
                let v = match &eig {
                    Some(e) => e.project(&v),
                    None => v,
                };
                for c in 0..NC {
                    neg[c][(2 + l) as usize] = v[c];
                }
            }
        }
        let mut h = [0.0; NC];
        for c in 0..NC {
            h[c] = reconstruct_positive(&pos[c], spec, dx);
            if !S::UPWIND_ONLY {
                h[c] += reconstruct_positive(&neg[c], spec, dx);
            }
        }
        *flux = match &eig {
            Some(e) => e.unproject(&h),
            None => h,
        };
    }
    Ok(())
}

/// Accumulate `-(F̂_{i+1/2} - F̂_{i-1/2}) / dx` into the interior of `rhs`.
#[inline]
pub(crate) fn accumulate_divergence<const NC: usize>(
    flux: &[[f64; NC]],
    dx: f64,
    rhs: &mut [[f64; NC]],
) {
    for (i, r) in rhs.iter_mut().enumerate() {
        for c in 0..NC {
            r[c] -= (flux[i + 1][c] - flux[i][c]) / dx;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::euler::Primitive;
    use crate::weights::SchemeKind;

    #[test]
    fn uniform_flow_gives_exact_physical_flux() {
        let gas = Gas::default();
        let q0 = Primitive {
            rho: 1.3,
            u: 0.4,
            v: -0.2,
            p: 0.9,
        }
        .conserved2(1.4);
        let q = vec![q0; 10 + 2 * GHOST];
        let f = crate::solver::euler::flux2(&q0, 1.4).unwrap();
        for kind in SchemeKind::ALL {
            let spec = SchemeSpec::new(kind);
            let mut out = vec![[0.0; 4]; 11];
            line_fluxes(&gas, &q, GHOST, &spec, 0.1, &mut LineScratch::default(), &mut out)
                .unwrap();
            for fl in &out {
                for c in 0..4 {
                    assert!((fl[c] - f[c]).abs() < 1e-12 * (1.0 + f[c].abs()), "{kind}");
                }
            }
        }
    }

    #[test]
    fn nonphysical_cell_is_located() {
        let gas = Gas::default();
        let mut q = vec![[1.0, 0.0, 2.5]; 10 + 2 * GHOST];
        q[7][2] = -1.0;
        let mut out = vec![[0.0; 3]; 11];
        let spec = SchemeSpec::new(SchemeKind::Js3);
        let err = line_fluxes(&gas, &q, GHOST, &spec, 0.1, &mut LineScratch::default(), &mut out)
            .unwrap_err();
        assert_eq!(err.cell, 7);
    }
}
