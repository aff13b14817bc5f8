//! Test-case catalogue: geometry, initial data, boundary conditions and
//! default run parameters.

use std::f64::consts::PI;
use std::fmt;

use crate::error::SolverError;
use crate::solver::euler::{Gas, Primitive};
use crate::solver::time::Integrator;
use crate::weights::SchemeSpec;

/// Critical-point shift of the sinusoidal-like advection profile.
pub const SINE_SHIFT: f64 = 0.5966831869112089637212;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `sin(π(x-x_c) - sin(π(x-x_c))/π)` on [-1, 1].
    SineCp,
    /// The same profile with `x_c = 0`.
    Sine,
    /// Gaussian, square, triangle and ellipse pulses on [-1, 1].
    ComboWaves,
    /// Pressure ratio 10⁶ shock tube on [-5, 5].
    StrongShock,
    /// Interacting blast waves on [0, 1] between solid walls.
    Blast,
    /// Mach 3 shock running into an entropy wave on [-5, 5].
    ShuOsher,
    /// Four-quadrant Riemann problem on [0, 1]².
    Riemann2d,
    /// Double Mach reflection on [0, 3] × [0, 1].
    Dmr,
}

impl CaseTag {
    pub const ALL: [CaseTag; 8] = [
        CaseTag::SineCp,
        CaseTag::Sine,
        CaseTag::ComboWaves,
        CaseTag::StrongShock,
        CaseTag::Blast,
        CaseTag::ShuOsher,
        CaseTag::Riemann2d,
        CaseTag::Dmr,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CaseTag::SineCp => "SINE_CP",
            CaseTag::Sine => "SINE",
            CaseTag::ComboWaves => "COMBO_WAVES",
            CaseTag::StrongShock => "STRONG_SHOCK",
            CaseTag::Blast => "BLAST",
            CaseTag::ShuOsher => "SHU_OSHER",
            CaseTag::Riemann2d => "RIEMANN2D",
            CaseTag::Dmr => "DMR",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        let t = tag.trim().to_ascii_uppercase();
        CaseTag::ALL.into_iter().find(|c| c.tag() == t)
    }

    pub fn valid_tags() -> Vec<&'static str> {
        CaseTag::ALL.iter().map(|c| c.tag()).collect()
    }

    pub fn is_advection(self) -> bool {
        matches!(self, CaseTag::SineCp | CaseTag::Sine | CaseTag::ComboWaves)
    }

    pub fn is_2d(self) -> bool {
        matches!(self, CaseTag::Riemann2d | CaseTag::Dmr)
    }

    /// Number of conserved components.
    pub fn components(self) -> usize {
        if self.is_advection() {
            1
        } else if self.is_2d() {
            4
        } else {
            3
        }
    }

    /// `(x0, x1)` and, for 2-D cases, `(y0, y1)`, before length scaling.
    pub fn domain(self) -> ((f64, f64), (f64, f64)) {
        match self {
            CaseTag::SineCp | CaseTag::Sine | CaseTag::ComboWaves => ((-1.0, 1.0), (0.0, 0.0)),
            CaseTag::StrongShock | CaseTag::ShuOsher => ((-5.0, 5.0), (0.0, 0.0)),
            CaseTag::Blast => ((0.0, 1.0), (0.0, 0.0)),
            CaseTag::Riemann2d => ((0.0, 1.0), (0.0, 1.0)),
            CaseTag::Dmr => ((0.0, 3.0), (0.0, 1.0)),
        }
    }

    pub fn default_n(self) -> (usize, usize) {
        match self {
            CaseTag::SineCp | CaseTag::Sine => (640, 1),
            CaseTag::ComboWaves => (800, 1),
            CaseTag::StrongShock | CaseTag::Blast => (200, 1),
            CaseTag::ShuOsher => (240, 1),
            CaseTag::Riemann2d => (240, 240),
            CaseTag::Dmr => (480, 120),
        }
    }

    pub fn default_t_end(self) -> f64 {
        match self {
            CaseTag::SineCp | CaseTag::Sine | CaseTag::ComboWaves => 2.0,
            CaseTag::StrongShock => 0.01,
            CaseTag::Blast => 0.038,
            CaseTag::ShuOsher => 1.8,
            CaseTag::Riemann2d => 0.8,
            CaseTag::Dmr => 0.2,
        }
    }

    pub fn default_step(self) -> TimeStep {
        match self {
            CaseTag::SineCp | CaseTag::Sine => TimeStep::Cfl(0.4),
            CaseTag::ComboWaves => TimeStep::Cfl(0.1),
            CaseTag::ShuOsher => TimeStep::Fixed(0.003),
            _ => TimeStep::Cfl(0.5),
        }
    }

    pub fn default_integrator(self) -> Integrator {
        match self {
            CaseTag::SineCp | CaseTag::Sine => Integrator::Rk4,
            _ => Integrator::TvdRk3,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeStep {
    /// `Δt = CFL·Δx` (advection) or `CFL·Δx / max(|u| + a)` (Euler).
    Cfl(f64),
    Fixed(f64),
}

/// Everything needed to set up and advance one run.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseConfig {
    pub case: CaseTag,
    pub n: usize,
    /// Cells in y; 1 for 1-D cases.
    pub ny: usize,
    pub t_end: f64,
    pub step: TimeStep,
    pub scheme: SchemeSpec,
    pub integrator: Integrator,
    pub gas: Gas,
    /// Replaces the initial data by a constant state: `[u]`, `[ρ, u, p]` or
    /// `[ρ, u, v, p]`.
    pub uniform: Option<Vec<f64>>,
    /// Factor applied to the initial density and pressure.
    pub var_scale: f64,
    /// Factor applied to all lengths; the end time and a fixed time step
    /// scale with it so the rescaled run describes the same flow.
    pub length_scale: f64,
}

impl CaseConfig {
    pub fn new(case: CaseTag, scheme: SchemeSpec) -> Self {
        let (n, ny) = case.default_n();
        CaseConfig {
            case,
            n,
            ny,
            t_end: case.default_t_end(),
            step: case.default_step(),
            scheme,
            integrator: case.default_integrator(),
            gas: Gas::default(),
            uniform: None,
            var_scale: 1.0,
            length_scale: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        let bad = |m: String| Err(SolverError::Config(m));
        if self.n < 10 {
            return bad(format!("N must be >= 10, got {}", self.n));
        }
        if self.case.is_2d() && self.ny < 10 {
            return bad(format!("Ny must be >= 10, got {}", self.ny));
        }
        if !(self.t_end.is_finite() && self.t_end >= 0.0) {
            return bad(format!("end time must be >= 0, got {}", self.t_end));
        }
        match self.step {
            TimeStep::Cfl(c) if !(c.is_finite() && c > 0.0) => {
                return bad(format!("CFL must be > 0, got {c}"))
            }
            TimeStep::Fixed(dt) if !(dt.is_finite() && dt > 0.0) => {
                return bad(format!("fixed dt must be > 0, got {dt}"))
            }
            _ => {}
        }
        for (name, s) in [("var_scale", self.var_scale), ("length_scale", self.length_scale)] {
            if !(s.is_finite() && s > 0.0) {
                return bad(format!("{name} must be > 0, got {s}"));
            }
        }
        if !(self.gas.gamma > 1.0) {
            return bad(format!("gamma must be > 1, got {}", self.gas.gamma));
        }
        if let Some(u) = &self.uniform {
            let want = self.case.components();
            if u.len() != want {
                return bad(format!(
                    "uniform state for {} needs {} values, got {}",
                    self.case,
                    want,
                    u.len()
                ));
            }
            if !self.case.is_advection() {
                let (rho, p) = (u[0], u[u.len() - 1]);
                if !(rho > 0.0 && p > 0.0) {
                    return bad(format!("uniform state must have rho, p > 0, got {rho}, {p}"));
                }
            }
        }
        self.scheme
            .validate()
            .map_err(|e| SolverError::Config(e.to_string()))
    }

    /// Physical extent after length scaling.
    pub fn domain(&self) -> ((f64, f64), (f64, f64)) {
        let ((x0, x1), (y0, y1)) = self.case.domain();
        let s = self.length_scale;
        ((x0 * s, x1 * s), (y0 * s, y1 * s))
    }

    pub fn dx(&self) -> f64 {
        let ((x0, x1), _) = self.domain();
        (x1 - x0) / self.n as f64
    }

    pub fn dy(&self) -> f64 {
        let (_, (y0, y1)) = self.domain();
        if self.case.is_2d() {
            (y1 - y0) / self.ny as f64
        } else {
            1.0
        }
    }

    pub fn scaled_t_end(&self) -> f64 {
        self.t_end * self.length_scale
    }

    pub fn scaled_step(&self) -> TimeStep {
        match self.step {
            TimeStep::Fixed(dt) => TimeStep::Fixed(dt * self.length_scale),
            s => s,
        }
    }

    /// Sample positions of the interior: nodes for advection, cell centres
    /// for gas dynamics.
    pub fn x_coords(&self) -> Vec<f64> {
        let ((x0, _), _) = self.domain();
        let dx = self.dx();
        let shift = if self.case.is_advection() { 0.0 } else { 0.5 };
        (0..self.n).map(|i| x0 + (i as f64 + shift) * dx).collect()
    }

    pub fn y_coords(&self) -> Vec<f64> {
        let (_, (y0, _)) = self.domain();
        let dy = self.dy();
        (0..self.ny).map(|j| y0 + (j as f64 + 0.5) * dy).collect()
    }
}

/// Initial advection profile at unscaled position `x`.
pub fn advection_profile(case: CaseTag, x: f64) -> f64 {
    match case {
        CaseTag::SineCp => sine_cp(x, SINE_SHIFT),
        CaseTag::Sine => sine_cp(x, 0.0),
        CaseTag::ComboWaves => combo_waves(x),
        _ => panic!("{case} is not an advection case"),
    }
}

/// Exact advection solution at time `t`: the periodic translate by `t`.
pub fn advection_exact(case: CaseTag, x: f64, t: f64) -> f64 {
    let y = (x - t + 1.0).rem_euclid(2.0) - 1.0;
    advection_profile(case, y)
}

fn sine_cp(x: f64, xc: f64) -> f64 {
    let s = PI * (x - xc);
    (s - s.sin() / PI).sin()
}

fn combo_waves(x: f64) -> f64 {
    const A: f64 = 0.5;
    const Z: f64 = -0.7;
    const DELTA: f64 = 0.005;
    const ALPHA: f64 = 10.0;
    let beta = 2f64.ln() / (36.0 * DELTA * DELTA);
    let g = |z: f64| (-beta * (x - z).powi(2)).exp();
    let f = |a: f64| (1.0 - ALPHA * ALPHA * (x - a).powi(2)).max(0.0).sqrt();
    if (-0.8..=-0.6).contains(&x) {
        (g(Z - DELTA) + g(Z + DELTA) + 4.0 * g(Z)) / 6.0
    } else if (-0.4..=-0.2).contains(&x) {
        1.0
    } else if (0.0..=0.2).contains(&x) {
        1.0 - (10.0 * (x - 0.1)).abs()
    } else if (0.4..=0.6).contains(&x) {
        (f(A - DELTA) + f(A + DELTA) + 4.0 * f(A)) / 6.0
    } else {
        0.0
    }
}

fn prim(rho: f64, u: f64, v: f64, p: f64) -> Primitive {
    Primitive { rho, u, v, p }
}

/// Post-shock state of the double Mach reflection.
pub const DMR_POST: Primitive = Primitive {
    rho: 8.0,
    u: 7.145,
    v: -4.125,
    p: 116.5,
};
pub const DMR_PRE: Primitive = Primitive {
    rho: 1.4,
    u: 0.0,
    v: 0.0,
    p: 1.0,
};

/// Shock position on the line `y` at time `t` (unscaled coordinates).
pub fn dmr_shock_x(y: f64, t: f64) -> f64 {
    1.0 / 6.0 + (y + 20.0 * t) / 3f64.sqrt()
}

/// Initial gas state at unscaled position `(x, y)`, before variable scaling.
pub fn gas_profile(case: CaseTag, x: f64, y: f64) -> Primitive {
    match case {
        CaseTag::StrongShock => {
            if x < 0.0 {
                prim(1.0, 0.0, 0.0, 0.1 * 1e6)
            } else {
                prim(1.0, 0.0, 0.0, 0.1)
            }
        }
        CaseTag::Blast => {
            if x < 0.1 {
                prim(1.0, 0.0, 0.0, 1000.0)
            } else if x <= 0.9 {
                prim(1.0, 0.0, 0.0, 0.01)
            } else {
                prim(1.0, 0.0, 0.0, 100.0)
            }
        }
        CaseTag::ShuOsher => {
            if x < -4.0 {
                prim(3.857143, 2.629369, 0.0, 10.3333)
            } else {
                prim(1.0 + 0.2 * (5.0 * x).sin(), 0.0, 0.0, 1.0)
            }
        }
        CaseTag::Riemann2d => match (x >= 0.8, y >= 0.8) {
            (true, true) => prim(1.5, 0.0, 0.0, 1.5),
            (false, true) => prim(0.5323, 1.206, 0.0, 0.3),
            (false, false) => prim(0.138, 1.206, 1.206, 0.029),
            (true, false) => prim(0.5323, 0.0, 1.206, 0.3),
        },
        CaseTag::Dmr => {
            if x < dmr_shock_x(y, 0.0) {
                DMR_POST
            } else {
                DMR_PRE
            }
        }
        _ => panic!("{case} is not a gas-dynamics case"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::SchemeKind;

    #[test]
    fn sine_cp_has_critical_point_at_origin() {
        let h = 1e-6;
        let d = (advection_profile(CaseTag::SineCp, h) - advection_profile(CaseTag::SineCp, -h))
            / (2.0 * h);
        assert!(d.abs() < 1e-8, "{d}");
    }

    #[test]
    fn exact_solution_is_periodic_translate() {
        for x in [-0.9, -0.1, 0.35, 0.99] {
            let a = advection_exact(CaseTag::SineCp, x, 2.0);
            assert!((a - advection_profile(CaseTag::SineCp, x)).abs() < 1e-12);
        }
        assert_eq!(advection_exact(CaseTag::ComboWaves, -0.3 + 0.5, 0.5), 1.0);
    }

    #[test]
    fn combo_waves_pieces() {
        assert!((advection_profile(CaseTag::ComboWaves, -0.7) - 1.0).abs() < 1e-2);
        assert_eq!(advection_profile(CaseTag::ComboWaves, 0.1), 1.0);
        assert!((advection_profile(CaseTag::ComboWaves, 0.5) - 1.0).abs() < 1e-3);
        assert_eq!(advection_profile(CaseTag::ComboWaves, 0.9), 0.0);
    }

    #[test]
    fn riemann_data_is_diagonally_symmetric() {
        for (x, y) in [(0.1, 0.9), (0.9, 0.2), (0.3, 0.4), (0.85, 0.95)] {
            let a = gas_profile(CaseTag::Riemann2d, x, y);
            let b = gas_profile(CaseTag::Riemann2d, y, x);
            assert_eq!((a.rho, a.u, a.v, a.p), (b.rho, b.v, b.u, b.p));
        }
    }

    #[test]
    fn config_validation() {
        let spec = SchemeSpec::new(SchemeKind::Zm3);
        let mut cfg = CaseConfig::new(CaseTag::Blast, spec);
        assert!(cfg.validate().is_ok());
        cfg.n = 9;
        assert!(cfg.validate().is_err());
        cfg.n = 20;
        cfg.uniform = Some(vec![1.0, 0.0]);
        assert!(cfg.validate().is_err());
        cfg.uniform = Some(vec![1.0, 0.0, -1.0]);
        assert!(cfg.validate().is_err());
        cfg.uniform = Some(vec![1.0, 0.0, 1.0]);
        assert!(cfg.validate().is_ok());
        cfg.step = TimeStep::Cfl(0.0);
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn tags_round_trip() {
        for c in CaseTag::ALL {
            assert_eq!(CaseTag::from_tag(c.tag()), Some(c));
        }
        assert_eq!(CaseTag::from_tag("riemann2d"), Some(CaseTag::Riemann2d));
    }
}
