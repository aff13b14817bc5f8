//! Empirical Taylor orders of stencil quantities around a critical point
//! placed inside a cell.
//!
//! The sample function is `f(x) = (x - x_c)^{n+1} g(x) + c` with a random
//! degree-six `g` whose value and slope at `x_c` are kept away from zero,
//! so `f` has a critical point of exactly order `n` at `x_c = λΔx`. The
//! quantity is evaluated on `x_i = iΔx`, `i = -2..=2`, over a dyadic
//! ladder of spacings and its magnitude is fitted against `Δx` in log2
//! space.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::HarnessError;
use crate::indicators::{tau, TauKind};
use crate::stencil::{finite_delta, smoothness_beta, DeltaTag, StencilWindow};

/// Spacings `2^-7 .. 2^-11`.
pub const PROBE_LADDER: [i32; 5] = [7, 8, 9, 10, 11];
/// Independent draws of `g` per probe.
pub const PROBE_DRAWS: usize = 3;
/// Largest spread of the per-draw slopes for a conclusive probe.
pub const SLOPE_AGREEMENT: f64 = 0.3;
/// Largest RMS fit residual (in log2 units) for a conclusive probe.
pub const RESIDUAL_LIMIT: f64 = 0.15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProbeQuantity {
    /// `β^{(r)}_k`.
    Beta { r: usize, k: usize },
    Tau(TauKind),
    /// Product of two undivided differences, e.g. `(δ^{(4)2})²`.
    DeltaProduct(DeltaTag, DeltaTag),
}

impl ProbeQuantity {
    pub fn evaluate(&self, w: &StencilWindow) -> Result<f64, HarnessError> {
        let v = match *self {
            ProbeQuantity::Beta { r, k } => smoothness_beta(w, r, k),
            ProbeQuantity::Tau(kind) => tau(w, kind),
            ProbeQuantity::DeltaProduct(a, b) => {
                finite_delta(w, a).and_then(|x| finite_delta(w, b).map(|y| x * y))
            }
        };
        v.map_err(|e| HarnessError::Invalid(e.to_string()))
    }
}

fn delta_name(t: DeltaTag) -> &'static str {
    match t {
        DeltaTag::D1o2 => "d12",
        DeltaTag::D2o2 => "d22",
        DeltaTag::D1o3 => "d13",
        DeltaTag::D3o1 => "d31",
        DeltaTag::D1o4 => "d14",
        DeltaTag::D2o4 => "d24",
        DeltaTag::D3o2 => "d32",
        DeltaTag::D4o2 => "d42",
    }
}

impl fmt::Display for ProbeQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeQuantity::Beta { r, k } => write!(f, "beta{r}_{k}"),
            ProbeQuantity::Tau(k) => match k {
                TauKind::Tau3 => f.write_str("tau3"),
                TauKind::TauN => f.write_str("tauN"),
                TauKind::TauF3 => f.write_str("tauF3"),
                TauKind::TauP => f.write_str("tauP"),
                TauKind::TauCp1 => f.write_str("tauCP1"),
                TauKind::TauCp2 { c } => write!(f, "tauCP2({c})"),
            },
            ProbeQuantity::DeltaProduct(a, b) => write!(f, "{}*{}", delta_name(*a), delta_name(*b)),
        }
    }
}

impl FromStr for ProbeQuantity {
    type Err = HarnessError;

    /// Accepts `beta2_0`, `beta3_2`, `tau3`, `tauN`, `tauF3`, `tauP`,
    /// `tauCP1`, `tauCP2`, `tauCP2(c)` and products such as `d42*d42`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HarnessError::Invalid(format!("unknown probe quantity '{s}'"));
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("beta") {
            let (r, k) = rest.split_once('_').ok_or_else(bad)?;
            return Ok(ProbeQuantity::Beta {
                r: r.parse().map_err(|_| bad())?,
                k: k.parse().map_err(|_| bad())?,
            });
        }
        if let Some((a, b)) = t.split_once('*') {
            let find = |n: &str| {
                DeltaTag::ALL
                    .into_iter()
                    .find(|d| delta_name(*d) == n.trim())
                    .ok_or_else(bad)
            };
            return Ok(ProbeQuantity::DeltaProduct(find(a)?, find(b)?));
        }
        let lower = t.to_ascii_lowercase();
        if let Some(c) = lower.strip_prefix("taucp2(").and_then(|r| r.strip_suffix(')')) {
            let c: f64 = c.trim().parse().map_err(|_| bad())?;
            return Ok(ProbeQuantity::Tau(TauKind::TauCp2 { c }));
        }
        let kind = match lower.as_str() {
            "tau3" => TauKind::Tau3,
            "taun" => TauKind::TauN,
            "tauf3" => TauKind::TauF3,
            "taup" => TauKind::TauP,
            "taucp1" => TauKind::TauCp1,
            "taucp2" => TauKind::TauCp2 { c: 1.0 },
            _ => return Err(bad()),
        };
        Ok(ProbeQuantity::Tau(kind))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderProbeResult {
    pub quantity: ProbeQuantity,
    pub lambda: f64,
    pub cp_order: u32,
    /// Median of the per-draw slopes.
    pub slope: f64,
    /// Largest per-draw RMS residual of the log2 fit.
    pub residual: f64,
    pub draws: Vec<f64>,
    /// False when the fit is poor or the draws disagree.
    pub conclusive: bool,
}

/// Random sample function with a critical point of order `cp_order` at `xc`.
#[derive(Clone, Copy)]
struct ProbeFunction {
    xc: f64,
    power: i32,
    g: [f64; 7],
    c: f64,
}

impl ProbeFunction {
    fn draw(rng: &mut ChaCha8Rng, xc: f64, cp_order: u32) -> Self {
        let mut g = [0.0; 7];
        for (i, gi) in g.iter_mut().enumerate() {
            *gi = if i < 2 {
                let s = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                s * rng.gen_range(0.5..1.5)
            } else {
                rng.gen_range(-1.0..1.0)
            };
        }
        ProbeFunction {
            xc,
            power: cp_order as i32 + 1,
            g,
            c: rng.gen_range(-1.0..1.0),
        }
    }

    fn eval(&self, x: f64) -> f64 {
        let s = x - self.xc;
        let g = self.g.iter().rev().fold(0.0, |acc, gi| acc * s + gi);
        s.powi(self.power) * g + self.c
    }
}

/// Least-squares slope of `ys` against `xs` and the RMS residual.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - my - slope * (x - mx)).powi(2))
        .sum();
    (slope, (rss / n).sqrt())
}

/// Fitted order of `quantity` near a critical point of order `cp_order`
/// at `x_j + λΔx`.
pub fn acp_order_probe(
    quantity: ProbeQuantity,
    lambda: f64,
    cp_order: u32,
    seed: u64,
) -> Result<OrderProbeResult, HarnessError> {
    if !(lambda > -1.0 && lambda < 2.0) {
        return Err(HarnessError::Invalid(format!("λ must lie in (-1, 2), got {lambda}")));
    }
    if cp_order > 2 {
        return Err(HarnessError::Invalid(format!(
            "critical-point order must be 0, 1 or 2, got {cp_order}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::with_capacity(PROBE_DRAWS);
    let mut residual: f64 = 0.0;
    let mut degenerate = false;
    for _ in 0..PROBE_DRAWS {
        // x_c sits at λΔx for every Δx of the ladder, so g is drawn in the
        // local coordinate once per draw.
        let proto = ProbeFunction::draw(&mut rng, 0.0, cp_order);
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for &e in &PROBE_LADDER {
            let dx = (-(e as f64)).exp2();
            let f = ProbeFunction {
                xc: lambda * dx,
                ..proto
            };
            let values: Vec<f64> = (-2..=2).map(|i| f.eval(i as f64 * dx)).collect();
            let w = StencilWindow::new(&values, 2, dx)
                .map_err(|e| HarnessError::Invalid(e.to_string()))?;
            let q = quantity.evaluate(&w)?.abs();
            if q == 0.0 || !q.is_finite() {
                degenerate = true;
                break;
            }
            xs.push(dx.log2());
            ys.push(q.log2());
        }
        if degenerate {
            break;
        }
        let (s, r) = fit_slope(&xs, &ys);
        draws.push(s);
        residual = residual.max(r);
    }
    let slope = if draws.is_empty() {
        f64::NAN
    } else {
        let mut sorted = draws.clone();
        sorted.sort_by(f64::total_cmp);
        sorted[sorted.len() / 2]
    };
    let spread = draws.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - draws.iter().cloned().fold(f64::INFINITY, f64::min);
    let conclusive = !degenerate
        && draws.len() == PROBE_DRAWS
        && spread <= SLOPE_AGREEMENT
        && residual <= RESIDUAL_LIMIT;
    Ok(OrderProbeResult {
        quantity,
        lambda,
        cp_order,
        slope,
        residual,
        draws,
        conclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_function_has_the_requested_critical_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for order in 0..=2u32 {
            let f = ProbeFunction::draw(&mut rng, 0.2, order);
            let h = 1e-3;
            let d1 = (f.eval(0.2 + h) - f.eval(0.2 - h)) / (2.0 * h);
            let d2 = (f.eval(0.2 + h) - 2.0 * f.eval(0.2) + f.eval(0.2 - h)) / (h * h);
            match order {
                0 => assert!(d1.abs() > 0.4),
                1 => assert!(d1.abs() < 1e-5 && d2.abs() > 0.9),
                _ => assert!(d1.abs() < 1e-5 && d2.abs() < 1e-2),
            }
        }
    }

    #[test]
    fn smooth_beta_slope() {
        // β^{(2)}_0 ~ f'^2 Δx^2 away from critical points
        let r = acp_order_probe(ProbeQuantity::Beta { r: 2, k: 0 }, 0.3, 0, 1).unwrap();
        assert!(r.conclusive);
        assert!((r.slope - 2.0).abs() < 0.3, "{}", r.slope);
    }

    #[test]
    fn tags_round_trip() {
        for s in ["beta2_0", "beta3_2", "tau3", "tauCP1", "d42*d42", "d13*d31", "tauCP2(2.5)"] {
            let q: ProbeQuantity = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert!("beta".parse::<ProbeQuantity>().is_err());
        assert!("d99*d42".parse::<ProbeQuantity>().is_err());
    }

    #[test]
    fn rejects_out_of_range_inputs() {
        let q = ProbeQuantity::Tau(TauKind::Tau3);
        assert!(acp_order_probe(q, 2.0, 1, 0).is_err());
        assert!(acp_order_probe(q, 0.0, 3, 0).is_err());
    }
}
