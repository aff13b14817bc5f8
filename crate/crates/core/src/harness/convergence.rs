//! Grid-refinement studies on the periodic advection cases.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::error::HarnessError;
use crate::solver::cases::advection_exact;
use crate::solver::{error_norms, run_case, CaseConfig, CaseTag, ErrorNorms, TimeStep};
use crate::weights::SchemeSpec;

/// The refinement ladder of the refinement studies: 10, 20, ..., 640.
pub const DYADIC_LADDER: [usize; 7] = [10, 20, 40, 80, 160, 320, 640];

/// One refinement level. `errors` is `Err` with the failure record when the
/// run aborted.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    /// Nominal step `CFL·Δx`.
    pub dt: f64,
    pub errors: Result<ErrorNorms, String>,
    pub l1_order: Option<f64>,
    pub linf_order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub scheme: SchemeSpec,
    pub case: CaseTag,
    pub cfl: f64,
    pub t_end: f64,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    pub fn row(&self, n: usize) -> Option<&ConvergenceRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// The finest row that carries orders.
    pub fn finest(&self) -> Option<&ConvergenceRow> {
        self.rows.last()
    }

    pub fn failures(&self) -> impl Iterator<Item = (usize, &str)> {
        self.rows
            .iter()
            .filter_map(|r| r.errors.as_ref().err().map(|e| (r.n, e.as_str())))
    }

    /// Table layout: N, Δt, L1 error and order, L∞ error and order.
    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(w, "N,dt,L1_error,L1_order,Linf_error,Linf_order,status")?;
        for r in &self.rows {
            let order = |o: Option<f64>| o.map_or(String::new(), |o| format!("{o:.3}"));
            match &r.errors {
                Ok(e) => writeln!(
                    w,
                    "{},{},{:.16e},{},{:.16e},{},ok",
                    r.n,
                    short(r.dt),
                    e.l1,
                    order(r.l1_order),
                    e.linf,
                    order(r.linf_order)
                )?,
                Err(msg) => writeln!(w, "{},{},,,,,\"failed: {}\"", r.n, short(r.dt), msg.replace('"', "'"))?,
            }
        }
        Ok(())
    }
}

/// Twelve significant digits with trailing zeros dropped.
pub(crate) fn short(x: f64) -> String {
    let s = format!("{:.11e}", x);
    let v: f64 = s.parse().unwrap_or(x);
    format!("{v}")
}

/// `log2(e_coarse / e_fine)`.
pub fn pairwise_order(coarse: f64, fine: f64) -> f64 {
    (coarse / fine).log2()
}

/// Run `spec` on an advection case at every `N` of `ns` with `Δt = CFL·Δx`
/// and compare against the translated initial profile.
pub fn convergence_study(
    spec: &SchemeSpec,
    case: CaseTag,
    cfl: f64,
    ns: &[usize],
) -> Result<ConvergenceReport, HarnessError> {
    let mut base = CaseConfig::new(case, *spec);
    base.step = TimeStep::Cfl(cfl);
    convergence_study_from(&base, ns)
}

/// As [`convergence_study`] but starting from a full configuration whose
/// `n` is overridden per level. A uniform initial state is its own exact
/// solution.
pub fn convergence_study_from(
    base: &CaseConfig,
    ns: &[usize],
) -> Result<ConvergenceReport, HarnessError> {
    let case = base.case;
    if !case.is_advection() {
        return Err(HarnessError::Invalid(format!(
            "convergence studies need an advection case, got {case}"
        )));
    }
    let TimeStep::Cfl(cfl) = base.step else {
        return Err(HarnessError::Invalid("convergence studies are CFL driven".into()));
    };
    if ns.is_empty() || ns.windows(2).any(|w| w[1] <= w[0]) {
        return Err(HarnessError::Invalid(
            "refinement levels must be non-empty and strictly increasing".into(),
        ));
    }
    let mut probe = base.clone();
    probe.n = ns[0];
    probe
        .validate()
        .map_err(|e| HarnessError::Invalid(e.to_string()))?;

    let levels: Vec<(usize, f64, Result<ErrorNorms, String>)> = ns
        .par_iter()
        .map(|&n| {
            let mut cfg = base.clone();
            cfg.n = n;
            let errors = run_case(&cfg).map_err(|e| e.to_string()).map(|out| {
                let exact: Vec<f64> = cfg
                    .x_coords()
                    .iter()
                    .map(|&x| match &cfg.uniform {
                        Some(u) => u[0],
                        None => advection_exact(case, x, cfg.t_end),
                    })
                    .collect();
                error_norms(&out.state.scalar().expect("advection state"), &exact)
            });
            (n, cfl * cfg.dx(), errors)
        })
        .collect();

    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(levels.len());
    for (n, dt, errors) in levels {
        let (l1_order, linf_order) = match (rows.last().map(|r| &r.errors), &errors) {
            (Some(Ok(c)), Ok(f)) => (
                Some(pairwise_order(c.l1, f.l1)),
                Some(pairwise_order(c.linf, f.linf)),
            ),
            _ => (None, None),
        };
        rows.push(ConvergenceRow {
            n,
            dt,
            errors,
            l1_order,
            linf_order,
        });
    }
    Ok(ConvergenceReport {
        scheme: base.scheme,
        case,
        cfl,
        t_end: base.t_end,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::SchemeKind;

    #[test]
    fn rows_and_orders() {
        let spec = SchemeSpec::new(SchemeKind::Zes3);
        let r = convergence_study(&spec, CaseTag::SineCp, 0.4, &[10, 20, 40]).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert!(r.rows[0].l1_order.is_none());
        let o = r.rows[2].linf_order.unwrap();
        assert!(o > 2.0 && o < 3.5, "{o}");
        assert_eq!(r.rows[1].dt, 0.4 * 0.1);
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().nth(2).unwrap().starts_with("20,0.04,"));
    }

    #[test]
    fn constant_data_has_no_error() {
        for kind in SchemeKind::ALL {
            let mut base = CaseConfig::new(CaseTag::SineCp, SchemeSpec::new(kind));
            base.step = TimeStep::Cfl(0.4);
            base.t_end = 0.5;
            base.uniform = Some(vec![0.7]);
            let r = convergence_study_from(&base, &[10, 20, 40]).unwrap();
            for row in &r.rows {
                let e = row.errors.as_ref().unwrap();
                assert!(e.linf < 1e-14, "{kind}: {}", e.linf);
            }
        }
    }

    #[test]
    fn rejects_gas_cases_and_bad_ladders() {
        let spec = SchemeSpec::new(SchemeKind::Js3);
        assert!(convergence_study(&spec, CaseTag::Blast, 0.4, &[10]).is_err());
        assert!(convergence_study(&spec, CaseTag::Sine, 0.4, &[20, 10]).is_err());
        assert!(convergence_study(&spec, CaseTag::Sine, 0.4, &[5]).is_err());
    }
}
