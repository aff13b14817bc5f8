//! Time marching for every case, with positivity bookkeeping and
//! robustness-failure records.

use rayon::prelude::*;

use crate::error::{FailureRecord, SolverError};
use crate::solver::cases::{CaseConfig, TimeStep};
use crate::solver::euler::{primitive1, primitive2, Gas};
use crate::solver::field::{
    fill_2d, fill_line, initial_state, sides_1d, Field2D, FieldState, Side,
};
use crate::solver::line::{accumulate_divergence, line_fluxes, Advection, LineFault, LineScratch};
use crate::solver::time::rk_step;

/// Per-step positivity record (Euler cases).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepRecord {
    pub step: usize,
    pub t: f64,
    pub dt: f64,
    pub min_rho: f64,
    pub min_p: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunStats {
    pub steps: usize,
    /// Minimum density over all recorded steps, including the initial state.
    pub min_rho: f64,
    pub min_p: f64,
    pub history: Vec<StepRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub state: FieldState,
    pub stats: RunStats,
}

/// Set up the initial state of `cfg` and advance it to the end time.
pub fn run_case(cfg: &CaseConfig) -> Result<RunOutcome, SolverError> {
    cfg.validate()?;
    advance(initial_state(cfg), cfg)
}

/// Advance `state` to the configured end time; the last step is truncated
/// to land on it exactly.
pub fn advance(state: FieldState, cfg: &CaseConfig) -> Result<RunOutcome, SolverError> {
    drive(state, cfg, None)
}

/// Advance by at most `steps` time steps (still stopping at the end time).
pub fn advance_steps(
    state: FieldState,
    cfg: &CaseConfig,
    steps: usize,
) -> Result<RunOutcome, SolverError> {
    drive(state, cfg, Some(steps))
}

struct Fault {
    cell: (usize, usize),
    reason: String,
    t: f64,
}

fn record(cfg: &CaseConfig, step: usize, f: Fault) -> SolverError {
    SolverError::Robustness(Box::new(FailureRecord {
        case: cfg.case.tag().to_string(),
        scheme: cfg.scheme.kind.tag().to_string(),
        step,
        time: f.t,
        cell: f.cell,
        reason: f.reason,
    }))
}

fn drive(
    mut state: FieldState,
    cfg: &CaseConfig,
    limit: Option<usize>,
) -> Result<RunOutcome, SolverError> {
    let t_end = cfg.scaled_t_end();
    let mut t = state.t();
    let mut stats = RunStats::default();
    let (min_rho, min_p) = positivity(&state, cfg).map_err(|f| record(cfg, 0, f))?;
    stats.min_rho = min_rho;
    stats.min_p = min_p;
    while t < t_end && limit.is_none_or(|l| stats.steps < l) {
        let step = stats.steps + 1;
        let mut dt = match cfg.scaled_step() {
            TimeStep::Fixed(dt) => dt,
            TimeStep::Cfl(c) => c / max_rate(&state, cfg).map_err(|f| record(cfg, step, f))?,
        };
        let last = t + dt >= t_end || t_end - (t + dt) < 1e-12 * t_end;
        if last {
            dt = t_end - t;
        }
        step_once(&mut state, cfg, t, dt).map_err(|f| record(cfg, step, f))?;
        t = if last { t_end } else { t + dt };
        set_time(&mut state, t);
        let (rho, p) = positivity(&state, cfg).map_err(|f| record(cfg, step, f))?;
        stats.steps = step;
        stats.min_rho = stats.min_rho.min(rho);
        stats.min_p = stats.min_p.min(p);
        stats.history.push(StepRecord {
            step,
            t,
            dt,
            min_rho: rho,
            min_p: p,
        });
    }
    Ok(RunOutcome { state, stats })
}

fn set_time(state: &mut FieldState, t: f64) {
    match state {
        FieldState::Scalar(f) => f.t = t,
        FieldState::Euler1(f) => f.t = t,
        FieldState::Euler2(f) => f.t = t,
    }
}

/// Minimum density and pressure over the interior (`+inf` for advection);
/// also rejects non-finite values.
fn positivity(state: &FieldState, cfg: &CaseConfig) -> Result<(f64, f64), Fault> {
    let g = cfg.gas.gamma;
    let t = state.t();
    let fault = |cell, reason: String| Fault { cell, reason, t };
    match state {
        FieldState::Scalar(f) => {
            if let Some(i) = f.interior().iter().position(|v| !v[0].is_finite()) {
                return Err(fault((i, 0), "non-finite solution value".into()));
            }
            Ok((f64::INFINITY, f64::INFINITY))
        }
        FieldState::Euler1(f) => {
            let mut m = (f64::INFINITY, f64::INFINITY);
            for (i, q) in f.interior().iter().enumerate() {
                let w = primitive1(q, g).map_err(|e| fault((i, 0), e.to_string()))?;
                m = (m.0.min(w.rho), m.1.min(w.p));
            }
            Ok(m)
        }
        FieldState::Euler2(f) => {
            let mut m = (f64::INFINITY, f64::INFINITY);
            for j in 0..f.ny {
                for i in 0..f.nx {
                    let w = primitive2(f.at(i, j), g).map_err(|e| fault((i, j), e.to_string()))?;
                    m = (m.0.min(w.rho), m.1.min(w.p));
                }
            }
            Ok(m)
        }
    }
}

/// `Δt = CFL / rate`: `1/Δx` for advection, `max(|u| + a)/Δx` in 1-D and
/// `max((|u| + a)/Δx + (|v| + a)/Δy)` in 2-D.
fn max_rate(state: &FieldState, cfg: &CaseConfig) -> Result<f64, Fault> {
    let g = cfg.gas.gamma;
    let t = state.t();
    let fault = |cell, reason: String| Fault { cell, reason, t };
    match state {
        FieldState::Scalar(f) => Ok(1.0 / f.dx),
        FieldState::Euler1(f) => {
            let mut m: f64 = 0.0;
            for (i, q) in f.interior().iter().enumerate() {
                let w = primitive1(q, g).map_err(|e| fault((i, 0), e.to_string()))?;
                m = m.max(w.u.abs() + w.sound_speed(g));
            }
            Ok(m / f.dx)
        }
        FieldState::Euler2(f) => {
            let mut m: f64 = 0.0;
            for j in 0..f.ny {
                for i in 0..f.nx {
                    let w = primitive2(f.at(i, j), g).map_err(|e| fault((i, j), e.to_string()))?;
                    let a = w.sound_speed(g);
                    m = m.max((w.u.abs() + a) / f.dx + (w.v.abs() + a) / f.dy);
                }
            }
            Ok(m)
        }
    }
}

fn step_once(state: &mut FieldState, cfg: &CaseConfig, t: f64, dt: f64) -> Result<(), Fault> {
    let integ = cfg.integrator;
    let spec = cfg.scheme;
    match state {
        FieldState::Scalar(f) => {
            let (n, g, dx) = (f.n, f.ghost, f.dx);
            let mut scratch = LineScratch::default();
            let mut flux = vec![[0.0]; n + 1];
            rk_step(integ, &mut f.q, t, dt, |q, ts, out| {
                advection_rhs(q, g, &spec, dx, &mut scratch, &mut flux, out).map_err(|e| Fault {
                    cell: (e.cell.saturating_sub(g).min(n - 1), 0),
                    reason: e.reason,
                    t: ts,
                })
            })
        }
        FieldState::Euler1(f) => {
            let (n, g, dx) = (f.n, f.ghost, f.dx);
            let gas = cfg.gas;
            let (left, right) = sides_1d(cfg.case);
            let mut scratch = LineScratch::default();
            let mut flux = vec![[0.0; 3]; n + 1];
            rk_step(integ, &mut f.q, t, dt, |q, ts, out| {
                fill_line(q, g, left, right, 1);
                line_fluxes(&gas, q, g, &spec, dx, &mut scratch, &mut flux).map_err(|e| Fault {
                    cell: (e.cell.saturating_sub(g).min(n - 1), 0),
                    reason: e.reason,
                    t: ts,
                })?;
                out.fill([0.0; 3]);
                accumulate_divergence(&flux, dx, &mut out[g..g + n]);
                Ok(())
            })
        }
        FieldState::Euler2(f) => {
            let (nx, ny) = (f.nx, f.ny);
            let (dx, dy) = (f.dx, f.dy);
            rk_step(integ, &mut f.q, t, dt, |q, ts, out| {
                fill_2d(q, cfg, nx, ny, ts);
                rhs_2d(q, cfg, nx, ny, dx, dy, out).map_err(|(cell, reason)| Fault {
                    cell,
                    reason,
                    t: ts,
                })
            })
        }
    }
}

/// `(ρ, ρu, ρv, E) ↔ (ρ, ρv, ρu, E)`: lets the y sweep reuse the x-direction
/// physics.
#[inline]
fn swap_uv(q: &[f64; 4]) -> [f64; 4] {
    [q[0], q[2], q[1], q[3]]
}

fn rhs_2d(
    q: &[[f64; 4]],
    cfg: &CaseConfig,
    nx: usize,
    ny: usize,
    dx: f64,
    dy: f64,
    out: &mut [[f64; 4]],
) -> Result<(), ((usize, usize), String)> {
    let g = crate::solver::line::GHOST;
    let stride = nx + 2 * g;
    let gas: Gas = cfg.gas;
    let spec = cfg.scheme;
    out.fill([0.0; 4]);
    // x sweep, one row per task
    out.par_chunks_mut(stride)
        .enumerate()
        .skip(g)
        .take(ny)
        .try_for_each_init(
            || (LineScratch::default(), vec![[0.0; 4]; nx + 1]),
            |(scratch, flux), (j, orow)| {
                let row = &q[j * stride..(j + 1) * stride];
                line_fluxes(&gas, row, g, &spec, dx, scratch, flux).map_err(|e| {
                    (
                        (e.cell.saturating_sub(g).min(nx - 1), j - g),
                        e.reason,
                    )
                })?;
                accumulate_divergence(flux, dx, &mut orow[g..g + nx]);
                Ok(())
            },
        )?;
    // y sweep, one column per task
    let cols: Vec<Vec<[f64; 4]>> = (g..g + nx)
        .into_par_iter()
        .map_init(
            || (LineScratch::default(), vec![[0.0; 4]; ny + 1], Vec::new()),
            |(scratch, flux, col): &mut (LineScratch<4>, Vec<[f64; 4]>, Vec<[f64; 4]>), i| {
                col.clear();
                col.extend((0..ny + 2 * g).map(|j| swap_uv(&q[j * stride + i])));
                line_fluxes(&gas, col, g, &spec, dy, scratch, flux).map_err(|e: LineFault| {
                    (
                        (i - g, e.cell.saturating_sub(g).min(ny - 1)),
                        e.reason,
                    )
                })?;
                let mut div = vec![[0.0; 4]; ny];
                accumulate_divergence(flux, dy, &mut div);
                Ok(div)
            },
        )
        .collect::<Result<_, _>>()?;
    for (ci, div) in cols.iter().enumerate() {
        let i = g + ci;
        for (jj, d) in div.iter().enumerate() {
            let o = &mut out[(g + jj) * stride + i];
            let d = swap_uv(d);
            for c in 0..4 {
                o[c] += d[c];
            }
        }
    }
    Ok(())
}

/// Interior values of a 2-D field transposed with `u ↔ v`, for symmetry
/// checks.
pub fn transpose_2d(f: &Field2D) -> Vec<[f64; 4]> {
    let mut out = Vec::with_capacity(f.nx * f.ny);
    for j in 0..f.nx {
        for i in 0..f.ny {
            out.push(swap_uv(f.at(j, i)));
        }
    }
    out
}

fn advection_rhs(
    q: &mut [[f64; 1]],
    g: usize,
    spec: &crate::weights::SchemeSpec,
    dx: f64,
    scratch: &mut LineScratch<1>,
    flux: &mut [[f64; 1]],
    out: &mut [[f64; 1]],
) -> Result<(), LineFault> {
    let n = q.len() - 2 * g;
    fill_line(q, g, Side::Periodic, Side::Periodic, 0);
    line_fluxes(&Advection, q, g, spec, dx, scratch, flux)?;
    out.fill([0.0]);
    accumulate_divergence(flux, dx, &mut out[g..g + n]);
    Ok(())
}
