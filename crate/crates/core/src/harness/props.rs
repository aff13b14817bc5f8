//! Randomized checks of the weight-ratio propositions.
//!
//! Each proposition compares `ω_D/ω_C`, the weight of a rough sub-stencil
//! over the weight of a smooth one, for two values of a parameter of the
//! non-normalized weight:
//!
//! 1. `α = d(1 + τ/β^p)`: larger for the smaller `p`, when
//!    `0 < p1 < p2 ≤ 1` and `β_C < β_D ≤ e`.
//! 2. `α = d(1 + τ^p/β)`, `1 ≤ p1 < p2`: smaller for `p1` when `τ < 1`,
//!    larger when `τ > 1`, equal when `τ = 1`.
//! 3. `α = d(1 + cτ/β)`: smaller for the larger `c`.
//! 4. `α = d(1 + (τ/β)^p)`, `p ≤ 1`: smaller for the larger `p` when
//!    `0.278 < τ/β_D < τ/β_C`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::HarnessError;

pub const SAMPLE_LO: f64 = 1e-6;
pub const SAMPLE_HI: f64 = 1e2;
/// Relative tolerance below which two ratios count as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;
/// Lower bound on `τ/β_D` for the fourth proposition.
pub const PROP4_THRESHOLD: f64 = 0.278;
/// Upper end of the exponent range sampled for the second proposition.
pub const PROP2_P_MAX: f64 = 4.0;

/// `ω_D/ω_C` for proposition `prop` with parameter `param` (`p` or `c`).
pub fn weight_ratio(prop: u8, tau: f64, beta_c: f64, beta_d: f64, param: f64) -> f64 {
    match prop {
        1 => (1.0 + tau / beta_d.powf(param)) / (1.0 + tau / beta_c.powf(param)),
        2 => (1.0 + tau.powf(param) / beta_d) / (1.0 + tau.powf(param) / beta_c),
        3 => (1.0 + param * tau / beta_d) / (1.0 + param * tau / beta_c),
        4 => (1.0 + (tau / beta_d).powf(param)) / (1.0 + (tau / beta_c).powf(param)),
        _ => panic!("no proposition {prop}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropSample {
    pub tau: f64,
    pub beta_c: f64,
    pub beta_d: f64,
    /// The two parameter values in the order the proposition names them.
    pub param1: f64,
    pub param2: f64,
}

/// A sample that violates the stated relation.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub prop: u8,
    pub sample: PropSample,
    pub ratio1: f64,
    pub ratio2: f64,
    pub expected: &'static str,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.sample;
        write!(
            f,
            "prop={} tau={:e} beta_c={:e} beta_d={:e} param1={:e} param2={:e} ratio1={:.17e} ratio2={:.17e} expected=\"{}\"",
            self.prop, s.tau, s.beta_c, s.beta_d, s.param1, s.param2, self.ratio1, self.ratio2, self.expected
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropositionTally {
    pub prop: u8,
    pub samples: usize,
    pub passed: usize,
    /// Strict relations that collapsed to round-off equality.
    pub ties: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl PropositionTally {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

fn ordered_pair(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> (f64, f64) {
    loop {
        let a = log_uniform(rng, lo, hi);
        let b = log_uniform(rng, lo, hi);
        if a != b {
            return (a.min(b), a.max(b));
        }
    }
}

fn open_pair(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> (f64, f64) {
    loop {
        let a: f64 = rng.gen_range(lo..hi);
        let b: f64 = rng.gen_range(lo..hi);
        if a != b && a > lo && b > lo {
            return (a.min(b), a.max(b));
        }
    }
}

/// Draw one admissible sample; `index` forces the `τ = 1` branch of the
/// second proposition on every tenth sample.
fn draw(prop: u8, rng: &mut ChaCha8Rng, index: usize) -> PropSample {
    loop {
        let tau = log_uniform(rng, SAMPLE_LO, SAMPLE_HI);
        let (beta_c, beta_d) = ordered_pair(rng, SAMPLE_LO, SAMPLE_HI);
        let s = match prop {
            1 => {
                if beta_d > std::f64::consts::E {
                    continue;
                }
                let (p1, p2) = open_pair(rng, 0.0, 1.0);
                let p2 = if index.is_multiple_of(7) { 1.0 } else { p2 };
                PropSample { tau, beta_c, beta_d, param1: p1, param2: p2 }
            }
            2 => {
                let (p1, p2) = open_pair(rng, 1.0, PROP2_P_MAX);
                let p1 = if index.is_multiple_of(5) { 1.0 } else { p1 };
                let tau = if index.is_multiple_of(10) { 1.0 } else { tau };
                PropSample { tau, beta_c, beta_d, param1: p1, param2: p2 }
            }
            3 => {
                let (c2, c1) = ordered_pair(rng, SAMPLE_LO, SAMPLE_HI);
                PropSample { tau, beta_c, beta_d, param1: c1, param2: c2 }
            }
            4 => {
                if tau / beta_d <= PROP4_THRESHOLD {
                    continue;
                }
                let (p2, p1) = open_pair(rng, 0.0, 1.0);
                PropSample { tau, beta_c, beta_d, param1: p1, param2: p2 }
            }
            _ => unreachable!(),
        };
        return s;
    }
}

/// Expected sign of `ratio1 - ratio2`, or 0 for equality.
fn expected_sign(prop: u8, s: &PropSample) -> (i8, &'static str) {
    match prop {
        1 => (1, "ratio(p1) > ratio(p2)"),
        2 if s.tau < 1.0 => (-1, "ratio(p1) < ratio(p2) for tau < 1"),
        2 if s.tau > 1.0 => (1, "ratio(p1) > ratio(p2) for tau > 1"),
        2 => (0, "ratio(p1) = ratio(p2) for tau = 1"),
        3 => (-1, "ratio(c1) < ratio(c2) for c1 > c2"),
        _ => (-1, "ratio(p1) < ratio(p2) for p1 > p2"),
    }
}

/// Check proposition `prop` on `samples` seeded draws from its admissible
/// region.
pub fn proposition_check(prop: u8, samples: usize, seed: u64) -> Result<PropositionTally, HarnessError> {
    if !(1..=4).contains(&prop) {
        return Err(HarnessError::Invalid(format!("propositions are numbered 1-4, got {prop}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (prop as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut tally = PropositionTally {
        prop,
        samples,
        passed: 0,
        ties: 0,
        counterexamples: Vec::new(),
    };
    for i in 0..samples {
        let s = draw(prop, &mut rng, i);
        let r1 = weight_ratio(prop, s.tau, s.beta_c, s.beta_d, s.param1);
        let r2 = weight_ratio(prop, s.tau, s.beta_c, s.beta_d, s.param2);
        let diff = r1 - r2;
        let tol = TIE_TOLERANCE * r1.abs().max(r2.abs());
        let (sign, expected) = expected_sign(prop, &s);
        let ok = match sign {
            0 => diff.abs() <= tol,
            _ if diff.abs() <= tol => {
                tally.ties += 1;
                true
            }
            _ => (diff > 0.0) == (sign > 0),
        };
        if ok {
            tally.passed += 1;
        } else {
            tally.counterexamples.push(Counterexample {
                prop,
                sample: s,
                ratio1: r1,
                ratio2: r2,
                expected,
            });
        }
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_proposition_example() {
        // (1 + 2·1/1)/(1 + 2·1/0.1) = 3/21 and (1 + 1)/(1 + 10) = 2/11
        let r1 = weight_ratio(3, 1.0, 0.1, 1.0, 2.0);
        let r2 = weight_ratio(3, 1.0, 0.1, 1.0, 1.0);
        assert!((r1 - 3.0 / 21.0).abs() < 1e-15);
        assert!((r2 - 2.0 / 11.0).abs() < 1e-15);
        assert!(r1 < r2);
    }

    #[test]
    fn second_proposition_equality_at_unit_tau() {
        for (p1, p2) in [(1.0, 1.5), (1.2, 3.9)] {
            let a = weight_ratio(2, 1.0, 0.3, 7.0, p1);
            let b = weight_ratio(2, 1.0, 0.3, 7.0, p2);
            assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn samples_respect_domains() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..2000 {
            for prop in 1..=4 {
                let s = draw(prop, &mut rng, i);
                assert!(s.beta_c < s.beta_d);
                match prop {
                    1 => assert!(s.beta_d <= std::f64::consts::E && s.param1 < s.param2 && s.param2 <= 1.0),
                    2 => assert!(s.param1 >= 1.0 && s.param1 < s.param2),
                    3 => assert!(s.param1 > s.param2),
                    _ => assert!(s.tau / s.beta_d > PROP4_THRESHOLD && s.param1 > s.param2 && s.param1 <= 1.0),
                }
            }
        }
    }

    #[test]
    fn small_runs_hold() {
        for prop in 1..=4 {
            let t = proposition_check(prop, 500, 5).unwrap();
            assert!(t.holds(), "{:?}", t.counterexamples.first());
        }
        assert!(proposition_check(5, 10, 0).is_err());
    }

    #[test]
    fn a_wrong_relation_is_caught() {
        // outside the first proposition's domain (β_D > e) the relation can flip
        let (tau, bc, bd) = (1.0, 50.0, 90.0);
        let r1 = weight_ratio(1, tau, bc, bd, 0.2);
        let r2 = weight_ratio(1, tau, bc, bd, 1.0);
        assert!(r1 < r2);
    }
}
