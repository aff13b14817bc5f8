//! Run configuration: a flat `key = value` text format in named sections.
//!
//! ```text
//! [case]
//! tag = "SINE_CP"
//! cfl = 0.25
//!
//! [scheme]
//! tag = "ZM3"
//!
//! [run]
//! ns = [10, 20, 40, 80, 160, 320, 640]
//!
//! [expect]
//! linf_order_min = 2.9
//! ```
//!
//! [`validate_config`] fills in every default, so [`RunConfig::to_text`]
//! is a complete recipe for the run.

use std::fmt::Write as _;

use thiserror::Error;
use toml::{Table, Value};

use crate::harness::{ProbeQuantity, ScaleMode, DYADIC_LADDER, TIMING_STEPS};
use crate::harness::scale::{LENGTH_FACTOR, VARIABLE_FACTOR};
use crate::solver::{Average, CaseConfig, CaseTag, Integrator, TimeStep};
use crate::weights::{MappingParams, SchemeKind, SchemeSpec};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("malformed config: {0}")]
    Parse(String),
    #[error("[{section}] {key}: {message}")]
    Field {
        section: &'static str,
        key: String,
        message: String,
    },
    #[error("[{section}] {key}: unknown tag '{value}'; valid tags: {}", valid.join(", "))]
    UnknownTag {
        section: &'static str,
        key: &'static str,
        value: String,
        valid: Vec<String>,
    },
    #[error("[{section}] unknown key '{key}'; valid keys: {}", valid.join(", "))]
    UnknownKey {
        section: String,
        key: String,
        valid: Vec<&'static str>,
    },
    #[error("missing [{0}] section")]
    MissingSection(&'static str),
}

fn field(section: &'static str, key: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::Field {
        section,
        key: key.to_string(),
        message: message.into(),
    }
}

/// Study parameters of the non-`solve` subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSettings {
    /// Grid ladder of `converge`.
    pub ns: Vec<usize>,
    /// `acp` probe.
    pub quantity: ProbeQuantity,
    pub lambda: f64,
    pub cp_order: u32,
    /// `props`: propositions and samples per proposition.
    pub props: Vec<u8>,
    pub samples: usize,
    /// `nullspace`: stencil points and target orders (0 disables the
    /// half-node target).
    pub points: usize,
    pub generic_order: usize,
    pub half_node_order: usize,
    /// `scale` modes.
    pub modes: Vec<ScaleMode>,
    /// `bench`: timed schemes, steps and `n × n` grid.
    pub schemes: Vec<SchemeKind>,
    pub steps: usize,
    pub grid: usize,
    /// Write the field dump after `solve`.
    pub dump: bool,
}

impl RunSettings {
    fn defaults(full_scale: bool) -> Self {
        RunSettings {
            ns: DYADIC_LADDER.to_vec(),
            quantity: ProbeQuantity::Tau(crate::indicators::TauKind::TauCp1),
            lambda: -0.5,
            cp_order: 1,
            props: vec![1, 2, 3, 4],
            samples: 10_000,
            points: 4,
            generic_order: 5,
            half_node_order: 7,
            modes: vec![ScaleMode::variable(), ScaleMode::length()],
            schemes: vec![SchemeKind::Js3, SchemeKind::Z3, SchemeKind::Zm3, SchemeKind::Zes3],
            steps: TIMING_STEPS,
            grid: if full_scale { 960 } else { 240 },
            dump: true,
        }
    }
}

/// Assertions checked after the run; unset bounds are not checked.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Expectations {
    /// A robustness failure is an observation rather than an error.
    pub fail: bool,
    /// Number of finest `converge` rows the order bounds apply to.
    pub levels: usize,
    pub l1_order_min: Option<f64>,
    pub l1_order_max: Option<f64>,
    pub linf_order_min: Option<f64>,
    pub linf_order_max: Option<f64>,
    /// Finest-level L∞ error.
    pub linf_error_max: Option<f64>,
    pub linf_error_min: Option<f64>,
    pub slope: Option<f64>,
    pub slope_tol: f64,
    pub counterexamples_max: Option<usize>,
    pub dimension: Option<usize>,
    pub deviation_max: Option<f64>,
    pub deviation_min: Option<f64>,
}

/// A validated configuration with every default made explicit.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub scheme: Option<SchemeSpec>,
    /// Carries a copy of `scheme`.
    pub case: Option<CaseConfig>,
    pub run: RunSettings,
    pub expect: Expectations,
}

const SECTIONS: [&str; 4] = ["case", "scheme", "run", "expect"];
const CASE_KEYS: [&str; 13] = [
    "tag",
    "n",
    "ny",
    "t_end",
    "cfl",
    "dt",
    "integrator",
    "gamma",
    "smoothing",
    "average",
    "uniform",
    "var_scale",
    "length_scale",
];
const SCHEME_KEYS: [&str; 6] = ["tag", "p", "c", "eps", "mapping_d0", "mapping_d1"];
const RUN_KEYS: [&str; 14] = [
    "ns",
    "quantity",
    "lambda",
    "cp_order",
    "props",
    "samples",
    "points",
    "generic_order",
    "half_node_order",
    "modes",
    "schemes",
    "steps",
    "grid",
    "dump",
];
const EXPECT_KEYS: [&str; 14] = [
    "fail",
    "levels",
    "l1_order_min",
    "l1_order_max",
    "linf_order_min",
    "linf_order_max",
    "linf_error_max",
    "linf_error_min",
    "slope",
    "slope_tol",
    "counterexamples_max",
    "dimension",
    "deviation_max",
    "deviation_min",
];

struct Section<'a> {
    name: &'static str,
    table: &'a Table,
}

impl<'a> Section<'a> {
    fn check_keys(&self, valid: &[&'static str]) -> Result<(), ConfigError> {
        match self.table.keys().find(|k| !valid.contains(&k.as_str())) {
            Some(k) => Err(ConfigError::UnknownKey {
                section: self.name.to_string(),
                key: k.clone(),
                valid: valid.to_vec(),
            }),
            None => Ok(()),
        }
    }

    fn has(&self, key: &str) -> bool {
        self.table.contains_key(key)
    }

    fn f64(&self, key: &str) -> Result<Option<f64>, ConfigError> {
        match self.table.get(key) {
            None => Ok(None),
            Some(v) => number(v).map(Some).ok_or_else(|| field(self.name, key, "expected a number")),
        }
    }

    fn usize(&self, key: &str) -> Result<Option<usize>, ConfigError> {
        match self.table.get(key) {
            None => Ok(None),
            Some(Value::Integer(i)) if *i >= 0 => Ok(Some(*i as usize)),
            Some(_) => Err(field(self.name, key, "expected a non-negative integer")),
        }
    }

    fn bool(&self, key: &str) -> Result<Option<bool>, ConfigError> {
        match self.table.get(key) {
            None => Ok(None),
            Some(Value::Boolean(b)) => Ok(Some(*b)),
            Some(_) => Err(field(self.name, key, "expected true or false")),
        }
    }

    fn str(&self, key: &str) -> Result<Option<&'a str>, ConfigError> {
        match self.table.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.as_str())),
            Some(_) => Err(field(self.name, key, "expected a string")),
        }
    }

    fn array(&self, key: &str) -> Result<Option<&'a Vec<Value>>, ConfigError> {
        match self.table.get(key) {
            None => Ok(None),
            Some(Value::Array(a)) => Ok(Some(a)),
            Some(_) => Err(field(self.name, key, "expected an array")),
        }
    }

    fn f64s(&self, key: &str) -> Result<Option<Vec<f64>>, ConfigError> {
        let Some(a) = self.array(key)? else {
            return Ok(None);
        };
        a.iter()
            .map(|v| number(v).ok_or_else(|| field(self.name, key, "expected an array of numbers")))
            .collect::<Result<_, _>>()
            .map(Some)
    }

    fn strs(&self, key: &str) -> Result<Option<Vec<&'a str>>, ConfigError> {
        let Some(a) = self.array(key)? else {
            return Ok(None);
        };
        a.iter()
            .map(|v| match v {
                Value::String(s) => Ok(s.as_str()),
                _ => Err(field(self.name, key, "expected an array of strings")),
            })
            .collect::<Result<_, _>>()
            .map(Some)
    }
}

fn number(v: &Value) -> Option<f64> {
    match v {
        Value::Float(f) => Some(*f),
        Value::Integer(i) => Some(*i as f64),
        _ => None,
    }
}

fn unknown_tag(section: &'static str, key: &'static str, value: &str, valid: Vec<&str>) -> ConfigError {
    ConfigError::UnknownTag {
        section,
        key,
        value: value.to_string(),
        valid: valid.into_iter().map(String::from).collect(),
    }
}

fn positive(section: &'static str, key: &str, v: f64) -> Result<f64, ConfigError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(field(section, key, format!("must be > 0, got {v}")))
    }
}

/// Parse and validate `text`. `full_scale` switches the 2-D defaults to
/// the full-resolution grids.
pub fn validate_config(text: &str, full_scale: bool) -> Result<RunConfig, ConfigError> {
    let root: Table = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string().trim().to_string()))?;
    let empty = Table::new();
    let mut sections = [&empty; 4];
    for (name, value) in &root {
        let Some(i) = SECTIONS.iter().position(|s| s == name) else {
            return Err(ConfigError::UnknownKey {
                section: "top level".into(),
                key: name.clone(),
                valid: SECTIONS.to_vec(),
            });
        };
        match value {
            Value::Table(t) => sections[i] = t,
            _ => return Err(ConfigError::Parse(format!("'{name}' must be a [{name}] section"))),
        }
    }
    let section = |i: usize| Section {
        name: SECTIONS[i],
        table: sections[i],
    };
    let scheme = if root.contains_key("scheme") {
        Some(parse_scheme(&section(1))?)
    } else {
        None
    };
    let case = if root.contains_key("case") {
        let s = scheme.ok_or(ConfigError::MissingSection("scheme"))?;
        Some(parse_case(&section(0), s, full_scale)?)
    } else {
        None
    };
    Ok(RunConfig {
        scheme,
        case,
        run: parse_run(&section(2), full_scale)?,
        expect: parse_expect(&section(3))?,
    })
}

fn parse_scheme(s: &Section) -> Result<SchemeSpec, ConfigError> {
    s.check_keys(&SCHEME_KEYS)?;
    let tag = s.str("tag")?.ok_or_else(|| field("scheme", "tag", "required"))?;
    let kind = SchemeKind::from_tag(tag)
        .ok_or_else(|| unknown_tag("scheme", "tag", tag, SchemeKind::valid_tags()))?;
    let mut spec = SchemeSpec::new(kind);
    if let Some(p) = s.f64("p")? {
        if !kind.has_exponent() {
            return Err(field("scheme", "p", format!("{kind} has no exponent")));
        }
        spec.p = p;
    }
    if let Some(c) = s.f64("c")? {
        if kind != SchemeKind::Zes3 {
            return Err(field("scheme", "c", format!("{kind} has no τ scale")));
        }
        spec.c = c;
    }
    if let Some(eps) = s.f64("eps")? {
        spec.eps = eps;
    }
    for (k, key) in ["mapping_d0", "mapping_d1"].into_iter().enumerate() {
        let Some(v) = s.f64s(key)? else {
            continue;
        };
        if kind != SchemeKind::Zm3 {
            return Err(field("scheme", key, format!("{kind} has no mapping")));
        }
        let [n, m, m1, c1, c2, c3] = v[..] else {
            return Err(field("scheme", key, "expected [n, m, m1, c1, c2, c3]"));
        };
        let int = |x: f64| {
            if x >= 0.0 && x.fract() == 0.0 {
                Ok(x as u32)
            } else {
                Err(field("scheme", key, "n, m, m1 must be non-negative integers"))
            }
        };
        spec.mapping[k] = MappingParams::new(int(n)?, int(m)?, int(m1)?, c1, c2, c3)
            .map_err(|e| field("scheme", key, e.to_string()))?;
    }
    spec.validate().map_err(|e| field("scheme", "p/c/eps", e.to_string()))?;
    Ok(spec)
}

fn parse_case(s: &Section, scheme: SchemeSpec, full_scale: bool) -> Result<CaseConfig, ConfigError> {
    s.check_keys(&CASE_KEYS)?;
    let tag = s.str("tag")?.ok_or_else(|| field("case", "tag", "required"))?;
    let case = CaseTag::from_tag(tag).ok_or_else(|| unknown_tag("case", "tag", tag, CaseTag::valid_tags()))?;
    let mut cfg = CaseConfig::new(case, scheme);
    if full_scale {
        match case {
            CaseTag::Riemann2d => (cfg.n, cfg.ny) = (960, 960),
            CaseTag::Dmr => (cfg.n, cfg.ny) = (1920, 480),
            _ => {}
        }
    }
    if let Some(n) = s.usize("n")? {
        if n < 10 {
            return Err(field("case", "n", format!("must be >= 10, got {n}")));
        }
        cfg.n = n;
        if case == CaseTag::Riemann2d && !s.has("ny") {
            cfg.ny = n;
        }
    }
    if let Some(ny) = s.usize("ny")? {
        if !case.is_2d() && ny != 1 {
            return Err(field("case", "ny", format!("{case} is one-dimensional")));
        }
        if case.is_2d() && ny < 10 {
            return Err(field("case", "ny", format!("must be >= 10, got {ny}")));
        }
        cfg.ny = ny;
    }
    if let Some(t) = s.f64("t_end")? {
        if !(t.is_finite() && t >= 0.0) {
            return Err(field("case", "t_end", format!("must be >= 0, got {t}")));
        }
        cfg.t_end = t;
    }
    match (s.f64("cfl")?, s.f64("dt")?) {
        (Some(_), Some(_)) => return Err(field("case", "cfl", "give either cfl or dt, not both")),
        (Some(c), None) => cfg.step = TimeStep::Cfl(positive("case", "cfl", c)?),
        (None, Some(dt)) => cfg.step = TimeStep::Fixed(positive("case", "dt", dt)?),
        (None, None) => {}
    }
    if let Some(t) = s.str("integrator")? {
        cfg.integrator = Integrator::from_tag(t)
            .ok_or_else(|| unknown_tag("case", "integrator", t, vec!["RK4", "TVDRK3"]))?;
    }
    if let Some(g) = s.f64("gamma")? {
        if !(g.is_finite() && g > 1.0) {
            return Err(field("case", "gamma", format!("must be > 1, got {g}")));
        }
        cfg.gas.gamma = g;
    }
    if let Some(d) = s.f64("smoothing")? {
        if !(d.is_finite() && d >= 0.0) {
            return Err(field("case", "smoothing", format!("must be >= 0, got {d}")));
        }
        cfg.gas.smoothing = d;
    }
    if let Some(a) = s.str("average")? {
        cfg.gas.average = Average::from_tag(a)
            .ok_or_else(|| unknown_tag("case", "average", a, vec!["arithmetic", "roe"]))?;
    }
    cfg.uniform = s.f64s("uniform")?;
    if let Some(v) = s.f64("var_scale")? {
        cfg.var_scale = positive("case", "var_scale", v)?;
    }
    if let Some(v) = s.f64("length_scale")? {
        cfg.length_scale = positive("case", "length_scale", v)?;
    }
    cfg.validate().map_err(|e| field("case", "tag", e.to_string()))?;
    Ok(cfg)
}

fn parse_run(s: &Section, full_scale: bool) -> Result<RunSettings, ConfigError> {
    s.check_keys(&RUN_KEYS)?;
    let mut r = RunSettings::defaults(full_scale);
    if let Some(a) = s.array("ns")? {
        let ns: Vec<usize> = a
            .iter()
            .map(|v| match v {
                Value::Integer(i) if *i >= 10 => Ok(*i as usize),
                _ => Err(field("run", "ns", format!("grid sizes must be integers >= 10, got {v}"))),
            })
            .collect::<Result<_, _>>()?;
        if ns.len() < 2 || ns.windows(2).any(|w| w[1] <= w[0]) {
            return Err(field("run", "ns", "need at least two strictly increasing sizes"));
        }
        r.ns = ns;
    }
    if let Some(q) = s.str("quantity")? {
        r.quantity = q.parse().map_err(|e: crate::error::HarnessError| field("run", "quantity", e.to_string()))?;
    }
    if let Some(l) = s.f64("lambda")? {
        if !(l > -1.0 && l < 2.0) {
            return Err(field("run", "lambda", format!("must lie in (-1, 2), got {l}")));
        }
        r.lambda = l;
    }
    if let Some(c) = s.usize("cp_order")? {
        if c > 2 {
            return Err(field("run", "cp_order", format!("must be 0, 1 or 2, got {c}")));
        }
        r.cp_order = c as u32;
    }
    if let Some(a) = s.array("props")? {
        r.props = a
            .iter()
            .map(|v| match v {
                Value::Integer(i @ 1..=4) => Ok(*i as u8),
                _ => Err(field("run", "props", format!("propositions are 1 to 4, got {v}"))),
            })
            .collect::<Result<_, _>>()?;
    }
    if let Some(n) = s.usize("samples")? {
        r.samples = n;
    }
    if let Some(p) = s.usize("points")? {
        if !(p == 3 || p == 4) {
            return Err(field("run", "points", format!("must be 3 or 4, got {p}")));
        }
        r.points = p;
        if p == 3 && !s.has("half_node_order") {
            r.half_node_order = 0;
        }
    }
    if let Some(o) = s.usize("generic_order")? {
        r.generic_order = o;
    }
    if let Some(o) = s.usize("half_node_order")? {
        r.half_node_order = o;
    }
    if let Some(modes) = s.strs("modes")? {
        r.modes = modes
            .iter()
            .map(|m| match m.to_ascii_lowercase().as_str() {
                "variable" => Ok(ScaleMode::Variable(VARIABLE_FACTOR)),
                "length" => Ok(ScaleMode::Length(LENGTH_FACTOR)),
                _ => Err(unknown_tag("run", "modes", m, vec!["variable", "length"])),
            })
            .collect::<Result<_, _>>()?;
    }
    if let Some(tags) = s.strs("schemes")? {
        r.schemes = tags
            .iter()
            .map(|t| SchemeKind::from_tag(t).ok_or_else(|| unknown_tag("run", "schemes", t, SchemeKind::valid_tags())))
            .collect::<Result<_, _>>()?;
    }
    if let Some(n) = s.usize("steps")? {
        r.steps = n;
    }
    if let Some(n) = s.usize("grid")? {
        if n < 10 {
            return Err(field("run", "grid", format!("must be >= 10, got {n}")));
        }
        r.grid = n;
    }
    if let Some(d) = s.bool("dump")? {
        r.dump = d;
    }
    Ok(r)
}

fn parse_expect(s: &Section) -> Result<Expectations, ConfigError> {
    s.check_keys(&EXPECT_KEYS)?;
    let levels = s.usize("levels")?.unwrap_or(1);
    if levels == 0 {
        return Err(field("expect", "levels", "must be >= 1"));
    }
    Ok(Expectations {
        fail: s.bool("fail")?.unwrap_or(false),
        levels,
        l1_order_min: s.f64("l1_order_min")?,
        l1_order_max: s.f64("l1_order_max")?,
        linf_order_min: s.f64("linf_order_min")?,
        linf_order_max: s.f64("linf_order_max")?,
        linf_error_max: s.f64("linf_error_max")?,
        linf_error_min: s.f64("linf_error_min")?,
        slope: s.f64("slope")?,
        slope_tol: s.f64("slope_tol")?.unwrap_or(0.3),
        counterexamples_max: s.usize("counterexamples_max")?,
        dimension: s.usize("dimension")?,
        deviation_max: s.f64("deviation_max")?,
        deviation_min: s.f64("deviation_min")?,
    })
}

fn float(x: f64) -> String {
    let s = format!("{x:?}");
    match s.as_str() {
        "inf" => "inf".into(),
        "-inf" => "-inf".into(),
        _ => s,
    }
}

fn list<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    let parts: Vec<String> = items.iter().map(f).collect();
    format!("[{}]", parts.join(", "))
}

impl RunConfig {
    /// The normalized configuration in the input format; parsing it back
    /// gives the same `RunConfig`.
    pub fn to_text(&self) -> String {
        let mut o = String::new();
        if let Some(c) = &self.case {
            let _ = writeln!(o, "[case]");
            let _ = writeln!(o, "tag = \"{}\"", c.case);
            let _ = writeln!(o, "n = {}", c.n);
            let _ = writeln!(o, "ny = {}", c.ny);
            let _ = writeln!(o, "t_end = {}", float(c.t_end));
            match c.step {
                TimeStep::Cfl(v) => writeln!(o, "cfl = {}", float(v)),
                TimeStep::Fixed(v) => writeln!(o, "dt = {}", float(v)),
            }
            .ok();
            let _ = writeln!(o, "integrator = \"{}\"", c.integrator);
            let _ = writeln!(o, "gamma = {}", float(c.gas.gamma));
            let _ = writeln!(o, "smoothing = {}", float(c.gas.smoothing));
            let _ = writeln!(o, "average = \"{}\"", c.gas.average.tag());
            if let Some(u) = &c.uniform {
                let _ = writeln!(o, "uniform = {}", list(u, |x| float(*x)));
            }
            let _ = writeln!(o, "var_scale = {}", float(c.var_scale));
            let _ = writeln!(o, "length_scale = {}", float(c.length_scale));
            o.push('\n');
        }
        if let Some(s) = &self.scheme {
            let _ = writeln!(o, "[scheme]");
            let _ = writeln!(o, "tag = \"{}\"", s.kind);
            if s.kind.has_exponent() {
                let _ = writeln!(o, "p = {}", float(s.p));
            }
            if s.kind == SchemeKind::Zes3 {
                let _ = writeln!(o, "c = {}", float(s.c));
            }
            let _ = writeln!(o, "eps = {}", float(s.eps));
            if s.kind == SchemeKind::Zm3 {
                for (k, m) in s.mapping.iter().enumerate() {
                    let _ = writeln!(
                        o,
                        "mapping_d{k} = [{}, {}, {}, {}, {}, {}]",
                        m.n,
                        m.m,
                        m.m1,
                        float(m.c1),
                        float(m.c2),
                        float(m.c3)
                    );
                }
            }
            o.push('\n');
        }
        let r = &self.run;
        let _ = writeln!(o, "[run]");
        let _ = writeln!(o, "ns = {}", list(&r.ns, |n| n.to_string()));
        let _ = writeln!(o, "quantity = \"{}\"", r.quantity);
        let _ = writeln!(o, "lambda = {}", float(r.lambda));
        let _ = writeln!(o, "cp_order = {}", r.cp_order);
        let _ = writeln!(o, "props = {}", list(&r.props, |p| p.to_string()));
        let _ = writeln!(o, "samples = {}", r.samples);
        let _ = writeln!(o, "points = {}", r.points);
        let _ = writeln!(o, "generic_order = {}", r.generic_order);
        let _ = writeln!(o, "half_node_order = {}", r.half_node_order);
        let _ = writeln!(o, "modes = {}", list(&r.modes, |m| format!("\"{}\"", m.tag())));
        let _ = writeln!(o, "schemes = {}", list(&r.schemes, |k| format!("\"{k}\"")));
        let _ = writeln!(o, "steps = {}", r.steps);
        let _ = writeln!(o, "grid = {}", r.grid);
        let _ = writeln!(o, "dump = {}", r.dump);
        o.push('\n');
        let e = &self.expect;
        let _ = writeln!(o, "[expect]");
        let _ = writeln!(o, "fail = {}", e.fail);
        let _ = writeln!(o, "levels = {}", e.levels);
        let bounds = [
            ("l1_order_min", e.l1_order_min),
            ("l1_order_max", e.l1_order_max),
            ("linf_order_min", e.linf_order_min),
            ("linf_order_max", e.linf_order_max),
            ("linf_error_max", e.linf_error_max),
            ("linf_error_min", e.linf_error_min),
            ("slope", e.slope),
        ];
        for (k, v) in bounds {
            if let Some(v) = v {
                let _ = writeln!(o, "{k} = {}", float(v));
            }
        }
        let _ = writeln!(o, "slope_tol = {}", float(e.slope_tol));
        if let Some(v) = e.counterexamples_max {
            let _ = writeln!(o, "counterexamples_max = {v}");
        }
        if let Some(v) = e.dimension {
            let _ = writeln!(o, "dimension = {v}");
        }
        for (k, v) in [("deviation_max", e.deviation_max), ("deviation_min", e.deviation_min)] {
            if let Some(v) = v {
                let _ = writeln!(o, "{k} = {}", float(v));
            }
        }
        o
    }
}
