//! Ideal-gas Euler physics: primitive decoding, Steger–Warming flux vector
//! splitting and the characteristic eigensystem of the flux Jacobian.
//!
//! Two-dimensional states are `(ρ, ρu, ρv, E)` and all 2-D routines act in
//! the x direction; the y direction is handled by swapping the momentum
//! components before and after the call.

use crate::error::PhysicsError;

/// Interface state used for the characteristic projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Average {
    #[default]
    Arithmetic,
    Roe,
}

impl Average {
    pub fn tag(self) -> &'static str {
        match self {
            Average::Arithmetic => "arithmetic",
            Average::Roe => "roe",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag.trim().to_ascii_lowercase().as_str() {
            "arithmetic" => Some(Average::Arithmetic),
            "roe" => Some(Average::Roe),
            _ => None,
        }
    }
}

/// Gas model and the free parameters of the Euler discretization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gas {
    pub gamma: f64,
    /// Entropy smoothing δ in `λ± = (λ ± sqrt(λ² + δ²))/2`; 0 gives the exact split.
    pub smoothing: f64,
    pub average: Average,
}

impl Default for Gas {
    fn default() -> Self {
        Gas {
            gamma: 1.4,
            smoothing: 0.0,
            average: Average::Arithmetic,
        }
    }
}

/// Primitive variables `(ρ, u, v, p)`; `v = 0` in 1-D.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Primitive {
    pub rho: f64,
    pub u: f64,
    pub v: f64,
    pub p: f64,
}

impl Primitive {
    pub fn sound_speed(&self, gamma: f64) -> f64 {
        (gamma * self.p / self.rho).sqrt()
    }

    pub fn conserved1(&self, gamma: f64) -> [f64; 3] {
        [
            self.rho,
            self.rho * self.u,
            self.p / (gamma - 1.0) + 0.5 * self.rho * self.u * self.u,
        ]
    }

    pub fn conserved2(&self, gamma: f64) -> [f64; 4] {
        [
            self.rho,
            self.rho * self.u,
            self.rho * self.v,
            self.p / (gamma - 1.0) + 0.5 * self.rho * (self.u * self.u + self.v * self.v),
        ]
    }
}

fn checked(rho: f64, u: f64, v: f64, p: f64) -> Result<Primitive, PhysicsError> {
    if rho > 0.0 && p > 0.0 && rho.is_finite() && p.is_finite() && u.is_finite() && v.is_finite() {
        Ok(Primitive { rho, u, v, p })
    } else {
        Err(PhysicsError { rho, p })
    }
}

pub fn primitive1(q: &[f64; 3], gamma: f64) -> Result<Primitive, PhysicsError> {
    let rho = q[0];
    let u = q[1] / rho;
    let p = (gamma - 1.0) * (q[2] - 0.5 * rho * u * u);
    checked(rho, u, 0.0, p)
}

pub fn primitive2(q: &[f64; 4], gamma: f64) -> Result<Primitive, PhysicsError> {
    let rho = q[0];
    let u = q[1] / rho;
    let v = q[2] / rho;
    let p = (gamma - 1.0) * (q[3] - 0.5 * rho * (u * u + v * v));
    checked(rho, u, v, p)
}

/// Exact 1-D flux `F(U)`.
pub fn flux1(q: &[f64; 3], gamma: f64) -> Result<[f64; 3], PhysicsError> {
    let w = primitive1(q, gamma)?;
    Ok([q[1], q[1] * w.u + w.p, (q[2] + w.p) * w.u])
}

/// Exact 2-D x-direction flux `F(U)`.
pub fn flux2(q: &[f64; 4], gamma: f64) -> Result<[f64; 4], PhysicsError> {
    let w = primitive2(q, gamma)?;
    Ok([q[1], q[1] * w.u + w.p, q[1] * w.v, (q[3] + w.p) * w.u])
}

#[inline]
fn split_eig(l: f64, smoothing: f64) -> (f64, f64) {
    let m = if smoothing == 0.0 {
        l.abs()
    } else {
        (l * l + smoothing * smoothing).sqrt()
    };
    (0.5 * (l + m), 0.5 * (l - m))
}

/// Steger–Warming flux for one set of eigenvalues `(λ1, λ2, λ3)` in the
/// x direction, with transverse velocity `v`.
#[inline]
fn sw_flux(w: &Primitive, a: f64, gamma: f64, l: [f64; 3]) -> [f64; 4] {
    let (u, v) = (w.u, w.v);
    let s = w.rho / (2.0 * gamma);
    let mass = 2.0 * (gamma - 1.0) * l[1] + l[0] + l[2];
    let energy = (gamma - 1.0) * l[1] * (u * u + v * v)
        + 0.5 * l[0] * ((u - a) * (u - a) + v * v)
        + 0.5 * l[2] * ((u + a) * (u + a) + v * v)
        + (3.0 - gamma) * (l[0] + l[2]) * a * a / (2.0 * (gamma - 1.0));
    [
        s * mass,
        s * (2.0 * (gamma - 1.0) * l[1] * u + l[0] * (u - a) + l[2] * (u + a)),
        s * mass * v,
        s * energy,
    ]
}

fn split_primitive(w: &Primitive, gas: &Gas) -> ([f64; 4], [f64; 4]) {
    let a = w.sound_speed(gas.gamma);
    let (p1, m1) = split_eig(w.u - a, gas.smoothing);
    let (p2, m2) = split_eig(w.u, gas.smoothing);
    let (p3, m3) = split_eig(w.u + a, gas.smoothing);
    (
        sw_flux(w, a, gas.gamma, [p1, p2, p3]),
        sw_flux(w, a, gas.gamma, [m1, m2, m3]),
    )
}

/// Steger–Warming split `F = F⁺ + F⁻` of a 1-D state.
pub fn steger_warming_split(
    q: &[f64; 3],
    gas: &Gas,
) -> Result<([f64; 3], [f64; 3]), PhysicsError> {
    let w = primitive1(q, gas.gamma)?;
    let (fp, fm) = split_primitive(&w, gas);
    Ok(([fp[0], fp[1], fp[3]], [fm[0], fm[1], fm[3]]))
}

/// Steger–Warming split of a 2-D state in the x direction.
pub fn steger_warming_split_2d(
    q: &[f64; 4],
    gas: &Gas,
) -> Result<([f64; 4], [f64; 4]), PhysicsError> {
    let w = primitive2(q, gas.gamma)?;
    Ok(split_primitive(&w, gas))
}

/// Left (rows) and right (columns) eigenvectors of the flux Jacobian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigensystem<const NC: usize> {
    pub left: [[f64; NC]; NC],
    pub right: [[f64; NC]; NC],
}

impl<const NC: usize> Eigensystem<NC> {
    #[inline]
    pub fn project(&self, x: &[f64; NC]) -> [f64; NC] {
        mat_vec(&self.left, x)
    }

    #[inline]
    pub fn unproject(&self, x: &[f64; NC]) -> [f64; NC] {
        mat_vec(&self.right, x)
    }
}

#[inline]
fn mat_vec<const NC: usize>(m: &[[f64; NC]; NC], x: &[f64; NC]) -> [f64; NC] {
    let mut out = [0.0; NC];
    for (o, row) in out.iter_mut().zip(m) {
        *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
    }
    out
}

/// Velocity, total enthalpy and sound speed at the interface.
fn interface_state(
    wl: &Primitive,
    el: f64,
    wr: &Primitive,
    er: f64,
    gas: &Gas,
) -> Result<(f64, f64, f64, f64), PhysicsError> {
    let g = gas.gamma;
    let (u, v, h) = match gas.average {
        Average::Arithmetic => {
            let rho = 0.5 * (wl.rho + wr.rho);
            let mu = 0.5 * (wl.rho * wl.u + wr.rho * wr.u);
            let mv = 0.5 * (wl.rho * wl.v + wr.rho * wr.v);
            let e = 0.5 * (el + er);
            let (u, v) = (mu / rho, mv / rho);
            let p = (g - 1.0) * (e - 0.5 * rho * (u * u + v * v));
            checked(rho, u, v, p)?;
            (u, v, (e + p) / rho)
        }
        Average::Roe => {
            let (sl, sr) = (wl.rho.sqrt(), wr.rho.sqrt());
            let avg = |a: f64, b: f64| (sl * a + sr * b) / (sl + sr);
            let hl = (el + wl.p) / wl.rho;
            let hr = (er + wr.p) / wr.rho;
            (avg(wl.u, wr.u), avg(wl.v, wr.v), avg(hl, hr))
        }
    };
    let a2 = (g - 1.0) * (h - 0.5 * (u * u + v * v));
    if !(a2 > 0.0 && a2.is_finite()) {
        return Err(PhysicsError { rho: f64::NAN, p: a2 });
    }
    Ok((u, v, h, a2.sqrt()))
}

fn eigen_from(u: f64, v: f64, h: f64, a: f64, gamma: f64) -> Eigensystem<4> {
    let q2 = u * u + v * v;
    let b1 = (gamma - 1.0) / (a * a);
    let b2 = 0.5 * b1 * q2;
    let right_cols = [
        [1.0, u - a, v, h - u * a],
        [1.0, u, v, 0.5 * q2],
        [0.0, 0.0, 1.0, v],
        [1.0, u + a, v, h + u * a],
    ];
    let mut right = [[0.0; 4]; 4];
    for (c, col) in right_cols.iter().enumerate() {
        for (r, x) in col.iter().enumerate() {
            right[r][c] = *x;
        }
    }
    let left = [
        [0.5 * (b2 + u / a), -0.5 * (b1 * u + 1.0 / a), -0.5 * b1 * v, 0.5 * b1],
        [1.0 - b2, b1 * u, b1 * v, -b1],
        [-v, 0.0, 1.0, 0.0],
        [0.5 * (b2 - u / a), -0.5 * (b1 * u - 1.0 / a), -0.5 * b1 * v, 0.5 * b1],
    ];
    Eigensystem { left, right }
}

/// Eigensystem at the interface between two 2-D states (x direction).
pub fn interface_eigensystem_2d(
    ql: &[f64; 4],
    qr: &[f64; 4],
    gas: &Gas,
) -> Result<Eigensystem<4>, PhysicsError> {
    let wl = primitive2(ql, gas.gamma)?;
    let wr = primitive2(qr, gas.gamma)?;
    let (u, v, h, a) = interface_state(&wl, ql[3], &wr, qr[3], gas)?;
    Ok(eigen_from(u, v, h, a, gas.gamma))
}

/// Eigensystem at the interface between two 1-D states.
pub fn interface_eigensystem_1d(
    ql: &[f64; 3],
    qr: &[f64; 3],
    gas: &Gas,
) -> Result<Eigensystem<3>, PhysicsError> {
    let wl = primitive1(ql, gas.gamma)?;
    let wr = primitive1(qr, gas.gamma)?;
    let (u, _, h, a) = interface_state(&wl, ql[2], &wr, qr[2], gas)?;
    let full = eigen_from(u, 0.0, h, a, gas.gamma);
    // drop the shear wave and the transverse momentum component
    let keep = [0, 1, 3];
    let mut left = [[0.0; 3]; 3];
    let mut right = [[0.0; 3]; 3];
    for (i, &ki) in keep.iter().enumerate() {
        for (k, &kk) in keep.iter().enumerate() {
            left[i][k] = full.left[ki][kk];
            right[i][k] = full.right[ki][kk];
        }
    }
    Ok(Eigensystem { left, right })
}

/// Project a window of flux vectors onto characteristic fields.
pub fn characteristic_project<const NC: usize>(
    window: &[[f64; NC]],
    eig: &Eigensystem<NC>,
) -> Vec<[f64; NC]> {
    window.iter().map(|x| eig.project(x)).collect()
}

/// Map characteristic values back to conserved components.
pub fn characteristic_unproject<const NC: usize>(
    window: &[[f64; NC]],
    eig: &Eigensystem<NC>,
) -> Vec<[f64; NC]> {
    window.iter().map(|x| eig.unproject(x)).collect()
}
