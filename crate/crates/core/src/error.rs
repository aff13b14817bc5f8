use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StencilError {
    #[error("stencil window must hold 3 to 5 values, got {0}")]
    BadLength(usize),
    #[error("centre offset {offset} outside window of length {len}")]
    BadOffset { offset: usize, len: usize },
    #[error("grid spacing must be positive and finite, got {0}")]
    BadSpacing(f64),
    #[error("window value {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },
    #[error("window covers {have:?} relative to the centre but {need:?} is required")]
    TooShort {
        need: (isize, isize),
        have: (isize, isize),
    },
    #[error("indicator scale must be positive and finite, got {0}")]
    BadScale(f64),
    #[error("no candidate with r = {r}, k = {k}")]
    UnsupportedCandidate { r: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeightError {
    #[error("non-finite {name} = {value} reached the weight evaluation")]
    NonFinite { name: &'static str, value: f64 },
    #[error("{kind} expects {expected} smoothness indicators, got {got}")]
    BetaCount {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("negative {name} = {value}")]
    Negative { name: &'static str, value: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("{scheme}: exponent p = {p} outside admissible range {range}")]
    Exponent {
        scheme: &'static str,
        p: f64,
        range: &'static str,
    },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReconstructError {
    #[error(transparent)]
    Stencil(#[from] StencilError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// Gas state that cannot be decoded (non-positive density or pressure).
#[derive(Debug, Clone, PartialEq, Error)]
#[error("non-physical state: density {rho}, pressure {p}")]
pub struct PhysicsError {
    pub rho: f64,
    pub p: f64,
}

/// One line of the robustness log: where and why a run stopped.
#[derive(Debug, Clone, PartialEq)]
pub struct FailureRecord {
    pub case: String,
    pub scheme: String,
    pub step: usize,
    pub time: f64,
    pub cell: (usize, usize),
    pub reason: String,
}

impl fmt::Display for FailureRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "case={} scheme={} step={} time={:.17e} cell={},{} reason=\"{}\"",
            self.case, self.scheme, self.step, self.time, self.cell.0, self.cell.1, self.reason
        )
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("robustness failure: {0}")]
    Robustness(Box<FailureRecord>),
    #[error("invalid case configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error("constraint matrix is ill-conditioned near the rank threshold (condition estimate {condition:.3e})")]
    IllConditioned { condition: f64 },
    #[error("{0}")]
    Invalid(String),
}
