//! Wall-clock cost of the schemes on the four-quadrant Riemann problem,
//! normalized to WENO3-JS = 100.

use std::time::{Duration, Instant};

use crate::error::SolverError;
use crate::solver::{advance_steps, initial_state, CaseConfig, CaseTag};
use crate::weights::{SchemeKind, SchemeSpec};

pub const TIMING_STEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct TimingRow {
    pub scheme: SchemeKind,
    pub elapsed: Duration,
    pub steps: usize,
    /// `100 · elapsed / elapsed(JS3)`.
    pub relative: f64,
}

/// Time `steps` steps of every scheme on an `n × n` grid. JS3 is always
/// timed as the reference and listed first.
pub fn relative_timing(schemes: &[SchemeKind], steps: usize, n: usize) -> Result<Vec<TimingRow>, SolverError> {
    let mut order = vec![SchemeKind::Js3];
    order.extend(schemes.iter().copied().filter(|k| *k != SchemeKind::Js3));
    let mut rows = Vec::with_capacity(order.len());
    for kind in order {
        let mut cfg = CaseConfig::new(CaseTag::Riemann2d, SchemeSpec::new(kind));
        cfg.n = n;
        cfg.ny = n;
        cfg.validate()?;
        let state = initial_state(&cfg);
        let t0 = Instant::now();
        let out = advance_steps(state, &cfg, steps)?;
        rows.push(TimingRow {
            scheme: kind,
            elapsed: t0.elapsed(),
            steps: out.stats.steps,
            relative: 0.0,
        });
    }
    let base = rows[0].elapsed.as_secs_f64();
    for r in &mut rows[1..] {
        r.relative = 100.0 * r.elapsed.as_secs_f64() / base;
    }
    rows[0].relative = 100.0;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_is_one_hundred() {
        let rows = relative_timing(&[SchemeKind::Z3, SchemeKind::Js3], 2, 16).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].scheme, SchemeKind::Js3);
        assert_eq!(rows[0].relative, 100.0);
        assert_eq!(rows[1].steps, 2);
    }
}
