//! Explicit Runge–Kutta integrators over a flat state vector.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Integrator {
    /// Classical fourth-order Runge–Kutta.
    Rk4,
    /// Third-order strong-stability-preserving (TVD) Runge–Kutta.
    TvdRk3,
}

impl Integrator {
    pub fn tag(self) -> &'static str {
        match self {
            Integrator::Rk4 => "RK4",
            Integrator::TvdRk3 => "TVDRK3",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag.trim().to_ascii_uppercase().as_str() {
            "RK4" => Some(Integrator::Rk4),
            "TVDRK3" => Some(Integrator::TvdRk3),
            _ => None,
        }
    }
}

impl fmt::Display for Integrator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Advance `u` by one step of size `dt` from time `t`.
///
/// `rhs(state, time, out)` overwrites `out` with `L(state)`; it may update
/// ghost entries of `state` in place.
pub(crate) fn rk_step<const NC: usize, E>(
    integ: Integrator,
    u: &mut [[f64; NC]],
    t: f64,
    dt: f64,
    mut rhs: impl FnMut(&mut [[f64; NC]], f64, &mut [[f64; NC]]) -> Result<(), E>,
) -> Result<(), E> {
    let n = u.len();
    let mut stage = u.to_vec();
    let mut l = vec![[0.0; NC]; n];
    match integ {
        Integrator::TvdRk3 => {
            rhs(u, t, &mut l)?;
            combine(&mut stage, u, &l, |u, _, l| u + dt * l);
            rhs(&mut stage, t + dt, &mut l)?;
            combine(&mut stage, u, &l, |u, s, l| 0.75 * u + 0.25 * (s + dt * l));
            rhs(&mut stage, t + 0.5 * dt, &mut l)?;
            let s = stage.clone();
            combine(u, &s, &l, |s, u, l| u / 3.0 + 2.0 / 3.0 * (s + dt * l));
        }
        Integrator::Rk4 => {
            let mut acc = vec![[0.0; NC]; n];
            rhs(u, t, &mut l)?;
            combine(&mut acc, u, &l, |_, _, l| l);
            combine(&mut stage, u, &l, |u, _, l| u + 0.5 * dt * l);
            rhs(&mut stage, t + 0.5 * dt, &mut l)?;
            combine(&mut acc, u, &l, |_, a, l| a + 2.0 * l);
            combine(&mut stage, u, &l, |u, _, l| u + 0.5 * dt * l);
            rhs(&mut stage, t + 0.5 * dt, &mut l)?;
            combine(&mut acc, u, &l, |_, a, l| a + 2.0 * l);
            combine(&mut stage, u, &l, |u, _, l| u + dt * l);
            rhs(&mut stage, t + dt, &mut l)?;
            let a = acc;
            combine(u, &a, &l, |a, u, l| u + dt / 6.0 * (a + l));
        }
    }
    Ok(())
}

/// `dst[i] = op(src[i], dst[i], l[i])` component-wise.
#[inline]
fn combine<const NC: usize>(
    dst: &mut [[f64; NC]],
    src: &[[f64; NC]],
    l: &[[f64; NC]],
    op: impl Fn(f64, f64, f64) -> f64,
) {
    for ((d, s), l) in dst.iter_mut().zip(src).zip(l) {
        for c in 0..NC {
            d[c] = op(s[c], d[c], l[c]);
        }
    }
}
