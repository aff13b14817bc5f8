//! Grid fields with ghost layers, initial data and boundary conditions.

use crate::solver::cases::{
    advection_profile, dmr_shock_x, gas_profile, CaseConfig, CaseTag, DMR_POST, DMR_PRE,
};
use crate::solver::euler::{primitive1, primitive2, Primitive};
use crate::solver::line::GHOST;

/// A 1-D field: `n` interior values with `ghost` cells on each side.
#[derive(Debug, Clone, PartialEq)]
pub struct Field1D<const NC: usize> {
    pub q: Vec<[f64; NC]>,
    pub n: usize,
    pub ghost: usize,
    pub dx: f64,
    pub t: f64,
}

impl<const NC: usize> Field1D<NC> {
    pub fn interior(&self) -> &[[f64; NC]] {
        &self.q[self.ghost..self.ghost + self.n]
    }

    pub fn interior_mut(&mut self) -> &mut [[f64; NC]] {
        &mut self.q[self.ghost..self.ghost + self.n]
    }
}

/// A 2-D field stored row by row, x fastest, ghosts included.
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D {
    pub q: Vec<[f64; 4]>,
    pub nx: usize,
    pub ny: usize,
    pub ghost: usize,
    pub dx: f64,
    pub dy: f64,
    pub t: f64,
}

impl Field2D {
    pub fn stride(&self) -> usize {
        self.nx + 2 * self.ghost
    }

    /// Storage index of interior cell `(i, j)`.
    pub fn idx(&self, i: usize, j: usize) -> usize {
        (j + self.ghost) * self.stride() + i + self.ghost
    }

    pub fn at(&self, i: usize, j: usize) -> &[f64; 4] {
        &self.q[self.idx(i, j)]
    }
}

/// The evolving state of any case.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldState {
    Scalar(Field1D<1>),
    Euler1(Field1D<3>),
    Euler2(Field2D),
}

impl FieldState {
    pub fn t(&self) -> f64 {
        match self {
            FieldState::Scalar(f) => f.t,
            FieldState::Euler1(f) => f.t,
            FieldState::Euler2(f) => f.t,
        }
    }

    /// Interior values of the scalar field.
    pub fn scalar(&self) -> Option<Vec<f64>> {
        match self {
            FieldState::Scalar(f) => Some(f.interior().iter().map(|v| v[0]).collect()),
            _ => None,
        }
    }

    /// Interior primitive states in storage order (rows of x for 2-D).
    pub fn primitives(&self, gamma: f64) -> Option<Vec<Primitive>> {
        match self {
            FieldState::Scalar(_) => None,
            FieldState::Euler1(f) => f
                .interior()
                .iter()
                .map(|q| primitive1(q, gamma).ok())
                .collect(),
            FieldState::Euler2(f) => (0..f.ny)
                .flat_map(|j| (0..f.nx).map(move |i| (i, j)))
                .map(|(i, j)| primitive2(f.at(i, j), gamma).ok())
                .collect(),
        }
    }

    /// Interior conserved values flattened in storage order.
    pub fn conserved(&self) -> Vec<f64> {
        match self {
            FieldState::Scalar(f) => f.interior().as_flattened().to_vec(),
            FieldState::Euler1(f) => f.interior().as_flattened().to_vec(),
            FieldState::Euler2(f) => (0..f.ny)
                .flat_map(|j| {
                    let s = f.idx(0, j);
                    f.q[s..s + f.nx].iter().flatten().copied()
                })
                .collect(),
        }
    }
}

fn scaled(w: Primitive, cfg: &CaseConfig) -> Primitive {
    Primitive {
        rho: w.rho * cfg.var_scale,
        p: w.p * cfg.var_scale,
        ..w
    }
}

/// Initial state for `cfg` at `t = 0` (ghosts filled on the first step).
pub fn initial_state(cfg: &CaseConfig) -> FieldState {
    let g = cfg.gas.gamma;
    let s = cfg.length_scale;
    let xs = cfg.x_coords();
    let uniform = cfg.uniform.as_deref();
    if cfg.case.is_advection() {
        let mut q = vec![[0.0]; cfg.n + 2 * GHOST];
        for (i, x) in xs.iter().enumerate() {
            q[GHOST + i] = [uniform.map_or_else(|| advection_profile(cfg.case, x / s), |u| u[0])];
        }
        return FieldState::Scalar(Field1D {
            q,
            n: cfg.n,
            ghost: GHOST,
            dx: cfg.dx(),
            t: 0.0,
        });
    }
    if !cfg.case.is_2d() {
        let mut q = vec![[0.0; 3]; cfg.n + 2 * GHOST];
        for (i, x) in xs.iter().enumerate() {
            let w = match uniform {
                Some(u) => Primitive {
                    rho: u[0],
                    u: u[1],
                    v: 0.0,
                    p: u[2],
                },
                None => scaled(gas_profile(cfg.case, x / s, 0.0), cfg),
            };
            q[GHOST + i] = w.conserved1(g);
        }
        return FieldState::Euler1(Field1D {
            q,
            n: cfg.n,
            ghost: GHOST,
            dx: cfg.dx(),
            t: 0.0,
        });
    }
    let ys = cfg.y_coords();
    let mut f = Field2D {
        q: vec![[0.0; 4]; (cfg.n + 2 * GHOST) * (cfg.ny + 2 * GHOST)],
        nx: cfg.n,
        ny: cfg.ny,
        ghost: GHOST,
        dx: cfg.dx(),
        dy: cfg.dy(),
        t: 0.0,
    };
    for (j, y) in ys.iter().enumerate() {
        for (i, x) in xs.iter().enumerate() {
            let w = match uniform {
                Some(u) => Primitive {
                    rho: u[0],
                    u: u[1],
                    v: u[2],
                    p: u[3],
                },
                None => scaled(gas_profile(cfg.case, x / s, y / s), cfg),
            };
            let k = f.idx(i, j);
            f.q[k] = w.conserved2(g);
        }
    }
    FieldState::Euler2(f)
}

/// Boundary treatment of one side of a line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Side {
    Periodic,
    Outflow,
    /// Mirror with the normal momentum component negated.
    Wall,
}

/// Fill the ghost cells of a 1-D line; `normal` is the momentum component
/// flipped at walls.
pub(crate) fn fill_line<const NC: usize>(
    q: &mut [[f64; NC]],
    g: usize,
    left: Side,
    right: Side,
    normal: usize,
) {
    let n = q.len() - 2 * g;
    for k in 0..g {
        q[g - 1 - k] = match left {
            Side::Periodic => q[g + n - 1 - k],
            Side::Outflow => q[g],
            Side::Wall => {
                let mut v = q[g + k];
                v[normal] = -v[normal];
                v
            }
        };
        q[g + n + k] = match right {
            Side::Periodic => q[g + k],
            Side::Outflow => q[g + n - 1],
            Side::Wall => {
                let mut v = q[g + n - 1 - k];
                v[normal] = -v[normal];
                v
            }
        };
    }
}

pub(crate) fn sides_1d(case: CaseTag) -> (Side, Side) {
    match case {
        CaseTag::SineCp | CaseTag::Sine | CaseTag::ComboWaves => (Side::Periodic, Side::Periodic),
        CaseTag::Blast => (Side::Wall, Side::Wall),
        _ => (Side::Outflow, Side::Outflow),
    }
}

/// Fill every ghost cell of a 2-D field at time `t` (interior corners of
/// the ghost frame are never read by the dimension-by-dimension sweeps).
pub(crate) fn fill_2d(f: &mut [[f64; 4]], cfg: &CaseConfig, nx: usize, ny: usize, t: f64) {
    let g = GHOST;
    let stride = nx + 2 * g;
    let gamma = cfg.gas.gamma;
    // x direction: rows
    for j in g..g + ny {
        let row = &mut f[j * stride..(j + 1) * stride];
        match cfg.case {
            CaseTag::Dmr => {
                let post = scaled(DMR_POST, cfg).conserved2(gamma);
                for k in 0..g {
                    row[k] = post;
                    row[g + nx + k] = row[g + nx - 1];
                }
            }
            _ => fill_line(row, g, Side::Outflow, Side::Outflow, 1),
        }
    }
    // y direction: columns
    let dx = cfg.dx();
    let dy = cfg.dy();
    let s = cfg.length_scale;
    let ((x0, _), (y0, _)) = cfg.domain();
    for i in g..g + nx {
        let cell = |j: usize| j * stride + i;
        match cfg.case {
            CaseTag::Dmr => {
                let x = (x0 + (i - g) as f64 * dx + 0.5 * dx) / s;
                let post = scaled(DMR_POST, cfg).conserved2(gamma);
                let pre = scaled(DMR_PRE, cfg).conserved2(gamma);
                for k in 0..g {
                    // bottom: inflow ahead of the wedge, wall behind it
                    f[cell(g - 1 - k)] = if x < 1.0 / 6.0 {
                        post
                    } else {
                        let mut v = f[cell(g + k)];
                        v[2] = -v[2];
                        v
                    };
                    // top: exact moving shock
                    let y = (y0 + (ny + k) as f64 * dy + 0.5 * dy) / s;
                    f[cell(g + ny + k)] = if x < dmr_shock_x(y, t / s) {
                        post
                    } else {
                        pre
                    };
                }
            }
            _ => {
                for k in 0..g {
                    f[cell(g - 1 - k)] = f[cell(g)];
                    f[cell(g + ny + k)] = f[cell(g + ny - 1)];
                }
            }
        }
    }
}
