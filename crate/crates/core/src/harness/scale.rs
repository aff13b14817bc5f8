//! Scale-independence runs on the shock/entropy-wave interaction.

use std::fmt;

use crate::error::SolverError;
use crate::solver::{run_case, CaseConfig, CaseTag, TimeStep};
use crate::weights::SchemeSpec;

pub const SCALE_GRID: usize = 400;
pub const VARIABLE_DT: f64 = 0.0015;
pub const VARIABLE_FACTOR: f64 = 0.1;
pub const LENGTH_CFL: f64 = 0.06;
pub const LENGTH_FACTOR: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScaleMode {
    /// Density and pressure multiplied by the factor; fixed time step.
    Variable(f64),
    /// All lengths multiplied by the factor; CFL-driven time step.
    Length(f64),
}

impl ScaleMode {
    pub fn variable() -> Self {
        ScaleMode::Variable(VARIABLE_FACTOR)
    }

    pub fn length() -> Self {
        ScaleMode::Length(LENGTH_FACTOR)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ScaleMode::Variable(_) => "variable",
            ScaleMode::Length(_) => "length",
        }
    }

    pub fn factor(&self) -> f64 {
        match *self {
            ScaleMode::Variable(r) | ScaleMode::Length(r) => r,
        }
    }
}

impl fmt::Display for ScaleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.tag(), self.factor())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScaleCheck {
    pub scheme: SchemeSpec,
    pub mode: ScaleMode,
    /// Max-norm difference of the conserved variables after undoing the
    /// scaling.
    pub deviation: f64,
}

/// Original and scaled configurations for `mode`.
pub fn scale_pair(spec: &SchemeSpec, mode: ScaleMode) -> (CaseConfig, CaseConfig) {
    let mut base = CaseConfig::new(CaseTag::ShuOsher, *spec);
    base.n = SCALE_GRID;
    base.step = match mode {
        ScaleMode::Variable(_) => TimeStep::Fixed(VARIABLE_DT),
        ScaleMode::Length(_) => TimeStep::Cfl(LENGTH_CFL),
    };
    let mut scaled = base.clone();
    match mode {
        ScaleMode::Variable(r) => scaled.var_scale = r,
        ScaleMode::Length(r) => scaled.length_scale = r,
    }
    (base, scaled)
}

/// Run the original and the scaled problem and compare.
pub fn scale_independence_check(spec: &SchemeSpec, mode: ScaleMode) -> Result<ScaleCheck, SolverError> {
    let (base, scaled) = scale_pair(spec, mode);
    let a = run_case(&base)?.state.conserved();
    let b = run_case(&scaled)?.state.conserved();
    let undo = match mode {
        ScaleMode::Variable(r) => 1.0 / r,
        ScaleMode::Length(_) => 1.0,
    };
    let deviation = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (y * undo - x).abs())
        .fold(0.0, f64::max);
    Ok(ScaleCheck {
        scheme: *spec,
        mode,
        deviation,
    })
}
