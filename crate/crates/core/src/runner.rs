//! Orchestration behind the `weno3` binary: read a config, run one study,
//! write its artifacts and decide the exit status.
//!
//! Exit status is 0 when every assertion holds, 1 when an assertion fails
//! and 2 when a run stops on a robustness failure that the config does not
//! mark as expected.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::config::{validate_config, ConfigError, RunConfig};
use crate::error::{FailureRecord, SolverError};
use crate::harness::{
    acp_order_probe, convergence_study_from, proposition_check, quadratic_form_nullspace,
    relative_timing, scale_independence_check, NullspaceTargets,
};
use crate::output::{artifact_header, write_field_1d, write_field_2d};
use crate::solver::{run_case, CaseConfig, FieldState};
use crate::weights::SchemeSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subcommand {
    Solve,
    Converge,
    Acp,
    Props,
    Nullspace,
    Scale,
    Bench,
}

impl Subcommand {
    pub const ALL: [Subcommand; 7] = [
        Subcommand::Solve,
        Subcommand::Converge,
        Subcommand::Acp,
        Subcommand::Props,
        Subcommand::Nullspace,
        Subcommand::Scale,
        Subcommand::Bench,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Subcommand::Solve => "solve",
            Subcommand::Converge => "converge",
            Subcommand::Acp => "acp",
            Subcommand::Props => "props",
            Subcommand::Nullspace => "nullspace",
            Subcommand::Scale => "scale",
            Subcommand::Bench => "bench",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Subcommand::ALL.into_iter().find(|s| s.tag() == tag)
    }
}

impl fmt::Display for Subcommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub subcommand: Subcommand,
    /// `None` runs on the defaults alone.
    pub config: Option<PathBuf>,
    pub out_dir: PathBuf,
    pub seed: u64,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
    pub full_scale: bool,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{path}: {source}")]
    Config { path: String, source: ConfigError },
    #[error("{subcommand} needs a [{section}] section")]
    MissingSection { subcommand: Subcommand, section: &'static str },
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> RunError + '_ {
    move |source| RunError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Pass,
    AssertionFailed,
    RobustnessFailure,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Pass => 0,
            ExitStatus::AssertionFailed => 1,
            ExitStatus::RobustnessFailure => 2,
        }
    }
}

/// One checked assertion or recorded observation.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    pub observed: String,
    pub expected: String,
}

impl Verdict {
    fn new(check: impl Into<String>, passed: bool, observed: impl Into<String>, expected: impl Into<String>) -> Self {
        Verdict {
            check: check.into(),
            passed,
            observed: observed.into(),
            expected: expected.into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} (expected {})", self.check, self.observed, self.expected)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub status: ExitStatus,
    pub verdicts: Vec<Verdict>,
    /// Robustness failures, expected or not.
    pub failures: Vec<FailureRecord>,
    pub artifacts: Vec<PathBuf>,
}

/// Collects artifact contents; files are written once the study is done.
struct Collector {
    header: String,
    files: Vec<(String, Vec<u8>)>,
    verdicts: Vec<Verdict>,
    failures: Vec<FailureRecord>,
    unexpected_failure: bool,
}

impl Collector {
    fn csv(&mut self, name: &str, body: impl FnOnce(&mut Vec<u8>) -> io::Result<()>) {
        let mut buf = self.header.clone().into_bytes();
        body(&mut buf).expect("writing to memory");
        self.files.push((name.to_string(), buf));
    }

    fn raw(&mut self, name: &str, data: Vec<u8>) {
        self.files.push((name.to_string(), data));
    }

    fn check(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    fn robustness(&mut self, rec: FailureRecord, expected: bool) {
        self.check(Verdict::new(
            format!("{} {} completes", rec.case, rec.scheme),
            expected,
            format!("failed at step {} (t = {:.6e})", rec.step, rec.time),
            if expected { "failure allowed" } else { "completion" },
        ));
        self.unexpected_failure |= !expected;
        self.failures.push(rec);
    }
}

fn num(v: f64) -> String {
    if (1e-3..1e4).contains(&v.abs()) {
        format!("{v:.6}")
    } else {
        format!("{v:.6e}")
    }
}

fn bound_checks(c: &mut Collector, name: &str, value: f64, min: Option<f64>, max: Option<f64>) {
    if let Some(lo) = min {
        c.check(Verdict::new(name, value >= lo, num(value), format!(">= {lo}")));
    }
    if let Some(hi) = max {
        c.check(Verdict::new(name, value <= hi, num(value), format!("<= {hi}")));
    }
}

/// Read and validate the manifest's config file (or the defaults).
pub fn load_config(manifest: &RunManifest) -> Result<RunConfig, RunError> {
    let (text, path) = match &manifest.config {
        Some(p) => (fs::read_to_string(p).map_err(io_err(p))?, p.display().to_string()),
        None => (String::new(), "<defaults>".to_string()),
    };
    validate_config(&text, manifest.full_scale).map_err(|source| RunError::Config { path, source })
}

/// Execute the manifest and write its artifacts into the output directory.
pub fn run(manifest: &RunManifest) -> Result<RunSummary, RunError> {
    let cfg = load_config(manifest)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(manifest.threads)
        .build()
        .map_err(|e| RunError::Invalid(format!("thread pool: {e}")))?;
    let mut c = Collector {
        header: artifact_header(manifest.subcommand.tag(), manifest.seed, &cfg.to_text()),
        files: Vec::new(),
        verdicts: Vec::new(),
        failures: Vec::new(),
        unexpected_failure: false,
    };
    pool.install(|| dispatch(manifest, &cfg, &mut c))?;

    let mut verdicts = c.header.clone().into_bytes();
    writeln!(verdicts, "check,status,observed,expected").ok();
    for v in &c.verdicts {
        let status = if v.passed { "pass" } else { "fail" };
        writeln!(verdicts, "\"{}\",{status},\"{}\",\"{}\"", v.check, v.observed, v.expected).ok();
    }
    c.raw("verdict.csv", verdicts);

    let dir = &manifest.out_dir;
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut artifacts = Vec::new();
    for (name, data) in &c.files {
        let path = dir.join(name);
        fs::write(&path, data).map_err(io_err(&path))?;
        artifacts.push(path);
    }
    let status = if c.unexpected_failure {
        ExitStatus::RobustnessFailure
    } else if c.verdicts.iter().all(|v| v.passed) {
        ExitStatus::Pass
    } else {
        ExitStatus::AssertionFailed
    };
    Ok(RunSummary {
        status,
        verdicts: c.verdicts,
        failures: c.failures,
        artifacts,
    })
}

fn need_case(m: &RunManifest, cfg: &RunConfig) -> Result<CaseConfig, RunError> {
    cfg.case.clone().ok_or(RunError::MissingSection {
        subcommand: m.subcommand,
        section: "case",
    })
}

fn need_scheme(m: &RunManifest, cfg: &RunConfig) -> Result<SchemeSpec, RunError> {
    cfg.scheme.ok_or(RunError::MissingSection {
        subcommand: m.subcommand,
        section: "scheme",
    })
}

fn dispatch(m: &RunManifest, cfg: &RunConfig, c: &mut Collector) -> Result<(), RunError> {
    match m.subcommand {
        Subcommand::Solve => solve(&need_case(m, cfg)?, cfg, c),
        Subcommand::Converge => converge(&need_case(m, cfg)?, cfg, c),
        Subcommand::Acp => acp(cfg, m.seed, c),
        Subcommand::Props => props(cfg, m.seed, c),
        Subcommand::Nullspace => nullspace(cfg, m.seed, c),
        Subcommand::Scale => scale(&need_scheme(m, cfg)?, cfg, c),
        Subcommand::Bench => bench(cfg, c),
    }
}

fn solve(case: &CaseConfig, cfg: &RunConfig, c: &mut Collector) -> Result<(), RunError> {
    let expect_fail = cfg.expect.fail;
    match run_case(case) {
        Ok(out) => {
            let s = &out.stats;
            c.csv("solve.csv", |w| {
                writeln!(w, "case,scheme,nx,ny,t,steps,min_rho,min_p,status")?;
                writeln!(
                    w,
                    "{},{},{},{},{:.17e},{},{:.17e},{:.17e},ok",
                    case.case,
                    case.scheme.kind,
                    case.n,
                    case.ny,
                    out.state.t(),
                    s.steps,
                    s.min_rho,
                    s.min_p
                )
            });
            c.check(Verdict::new(
                format!("{} {} completes", case.case, case.scheme.kind),
                true,
                format!("{} steps", s.steps),
                "completion",
            ));
            if !case.case.is_advection() {
                c.check(Verdict::new(
                    "positivity",
                    s.min_rho > 0.0 && s.min_p > 0.0,
                    format!("min rho {:.6e}, min p {:.6e}", s.min_rho, s.min_p),
                    "rho, p > 0",
                ));
            }
            if cfg.run.dump {
                dump_field(&out.state, case, c);
            }
        }
        Err(SolverError::Robustness(rec)) => {
            c.csv("solve.csv", |w| {
                writeln!(w, "case,scheme,nx,ny,t,steps,min_rho,min_p,status")?;
                writeln!(
                    w,
                    "{},{},{},{},{:.17e},{},,,failed",
                    case.case, case.scheme.kind, case.n, case.ny, rec.time, rec.step
                )
            });
            let line = format!("{rec}\n");
            c.csv("failure.log", |w| w.write_all(line.as_bytes()));
            c.robustness(*rec, expect_fail);
        }
        Err(e) => return Err(RunError::Invalid(e.to_string())),
    }
    Ok(())
}

fn dump_field(state: &FieldState, case: &CaseConfig, c: &mut Collector) {
    if case.case.is_2d() {
        let mut data = Vec::new();
        let mut header = Vec::new();
        write_field_2d(state, case, &mut data, &mut header).expect("writing to memory");
        c.csv("field.csv", |w| w.write_all(&header));
        c.raw("field.bin", data);
    } else {
        c.csv("field.csv", |w| write_field_1d(state, case, w));
    }
}

fn converge(case: &CaseConfig, cfg: &RunConfig, c: &mut Collector) -> Result<(), RunError> {
    let report = convergence_study_from(case, &cfg.run.ns).map_err(|e| RunError::Invalid(e.to_string()))?;
    c.csv("convergence.csv", |w| report.write_csv(w));
    let failed: Vec<String> = report.failures().map(|(n, msg)| format!("N={n}: {msg}\n")).collect();
    if !failed.is_empty() {
        let text = failed.concat();
        c.csv("failure.log", |w| w.write_all(text.as_bytes()));
        c.check(Verdict::new(
            format!("{} {} levels complete", case.case, case.scheme.kind),
            cfg.expect.fail,
            format!("{} failed", failed.len()),
            if cfg.expect.fail { "failure allowed" } else { "all complete" },
        ));
        c.unexpected_failure |= !cfg.expect.fail;
        return Ok(());
    }
    let e = &cfg.expect;
    let start = report.rows.len().saturating_sub(e.levels).max(1);
    for row in &report.rows[start..] {
        let n = row.n;
        if let Some(o) = row.l1_order {
            bound_checks(c, &format!("L1 order N={n}"), o, e.l1_order_min, e.l1_order_max);
        }
        if let Some(o) = row.linf_order {
            bound_checks(c, &format!("Linf order N={n}"), o, e.linf_order_min, e.linf_order_max);
        }
    }
    if let Some(Ok(err)) = report.finest().map(|r| &r.errors) {
        let n = report.finest().map_or(0, |r| r.n);
        bound_checks(c, &format!("Linf error N={n}"), err.linf, e.linf_error_min, e.linf_error_max);
    }
    Ok(())
}

fn acp(cfg: &RunConfig, seed: u64, c: &mut Collector) -> Result<(), RunError> {
    let r = &cfg.run;
    let res = acp_order_probe(r.quantity, r.lambda, r.cp_order, seed).map_err(|e| RunError::Invalid(e.to_string()))?;
    c.csv("probe.csv", |w| {
        writeln!(w, "quantity,lambda,cp_order,slope,residual,draw_slopes,conclusive")?;
        let draws: Vec<String> = res.draws.iter().map(|d| format!("{d:.6}")).collect();
        writeln!(
            w,
            "{},{},{},{:.6},{:.3e},{},{}",
            res.quantity,
            res.lambda,
            res.cp_order,
            res.slope,
            res.residual,
            draws.join(";"),
            res.conclusive
        )
    });
    c.check(Verdict::new("probe conclusive", res.conclusive, format!("residual {:.3e}", res.residual), "conclusive fit"));
    if let Some(s) = cfg.expect.slope {
        let tol = cfg.expect.slope_tol;
        c.check(Verdict::new(
            format!("{} slope (CP{}, λ = {})", res.quantity, res.cp_order, res.lambda),
            (res.slope - s).abs() <= tol,
            format!("{:.3}", res.slope),
            format!("{s} ± {tol}"),
        ));
    }
    Ok(())
}

fn props(cfg: &RunConfig, seed: u64, c: &mut Collector) -> Result<(), RunError> {
    let mut tallies = Vec::new();
    for &p in &cfg.run.props {
        let t = proposition_check(p, cfg.run.samples, seed.wrapping_add(p as u64))
            .map_err(|e| RunError::Invalid(e.to_string()))?;
        tallies.push(t);
    }
    c.csv("props.csv", |w| {
        writeln!(w, "prop,samples,passed,ties,counterexamples")?;
        for t in &tallies {
            writeln!(w, "{},{},{},{},{}", t.prop, t.samples, t.passed, t.ties, t.counterexamples.len())?;
        }
        Ok(())
    });
    let lines: String = tallies
        .iter()
        .flat_map(|t| t.counterexamples.iter().map(|x| format!("{x}\n")))
        .collect();
    c.csv("counterexamples.txt", |w| w.write_all(lines.as_bytes()));
    let max = cfg.expect.counterexamples_max.unwrap_or(0);
    for t in &tallies {
        c.check(Verdict::new(
            format!("proposition {}", t.prop),
            t.counterexamples.len() <= max,
            format!("{} counterexamples in {} samples", t.counterexamples.len(), t.samples),
            format!("<= {max}"),
        ));
    }
    Ok(())
}

fn nullspace(cfg: &RunConfig, seed: u64, c: &mut Collector) -> Result<(), RunError> {
    let r = &cfg.run;
    let targets = NullspaceTargets {
        generic: r.generic_order,
        half_node: (r.half_node_order > 0).then_some(r.half_node_order),
    };
    let res = match quadratic_form_nullspace(r.points, targets, seed) {
        Ok(res) => res,
        Err(e @ crate::error::HarnessError::IllConditioned { .. }) => {
            c.check(Verdict::new("nullspace rank decision", false, e.to_string(), "clear singular-value gap"));
            return Ok(());
        }
        Err(e) => return Err(RunError::Invalid(e.to_string())),
    };
    c.csv("nullspace.csv", |w| {
        writeln!(w, "points,constraint_set,dimension,residual")?;
        writeln!(w, "{},{},{},{:.3e}", res.points, res.constraint_set, res.dimension, res.residual)
    });
    c.csv("nullspace_basis.csv", |w| {
        let cols: Vec<String> = (0..res.points).map(|k| format!("a{k}")).collect();
        writeln!(w, "basis,row,{}", cols.join(","))?;
        for (b, m) in res.basis.iter().enumerate() {
            for i in 0..m.nrows() {
                let vals: Vec<String> = (0..m.ncols()).map(|j| format!("{:.12e}", m[(i, j)])).collect();
                writeln!(w, "{b},{i},{}", vals.join(","))?;
            }
        }
        Ok(())
    });
    c.check(Verdict::new("nullspace residual", res.residual < 1e-8, format!("{:.3e}", res.residual), "< 1e-8"));
    if let Some(d) = cfg.expect.dimension {
        c.check(Verdict::new(
            format!("{}-point {} dimension", res.points, res.constraint_set),
            res.dimension == d,
            res.dimension.to_string(),
            d.to_string(),
        ));
    }
    Ok(())
}

fn scale(spec: &SchemeSpec, cfg: &RunConfig, c: &mut Collector) -> Result<(), RunError> {
    let mut rows = Vec::new();
    for &mode in &cfg.run.modes {
        match scale_independence_check(spec, mode) {
            Ok(check) => rows.push(check),
            Err(SolverError::Robustness(rec)) => c.robustness(*rec, cfg.expect.fail),
            Err(e) => return Err(RunError::Invalid(e.to_string())),
        }
    }
    c.csv("scale.csv", |w| {
        writeln!(w, "scheme,mode,factor,deviation")?;
        for r in &rows {
            writeln!(w, "{},{},{},{:.6e}", r.scheme.kind, r.mode.tag(), r.mode.factor(), r.deviation)?;
        }
        Ok(())
    });
    let e = &cfg.expect;
    for r in &rows {
        bound_checks(c, &format!("{} {} deviation", r.scheme.kind, r.mode), r.deviation, e.deviation_min, e.deviation_max);
    }
    Ok(())
}

fn bench(cfg: &RunConfig, c: &mut Collector) -> Result<(), RunError> {
    let r = &cfg.run;
    match relative_timing(&r.schemes, r.steps, r.grid) {
        Ok(rows) => c.csv("bench.csv", |w| {
            writeln!(w, "scheme,steps,elapsed_s,relative")?;
            for t in &rows {
                writeln!(w, "{},{},{:.6},{:.2}", t.scheme, t.steps, t.elapsed.as_secs_f64(), t.relative)?;
            }
            Ok(())
        }),
        Err(SolverError::Robustness(rec)) => c.robustness(*rec, cfg.expect.fail),
        Err(e) => return Err(RunError::Invalid(e.to_string())),
    }
    Ok(())
}
