//! Seeded sampling of the four weight-ratio propositions.

use weno3z::harness::proposition_check;

fn main() {
    for prop in 1..=4 {
        let t = proposition_check(prop, 10_000, 2024).unwrap();
        println!(
            "proposition {prop}: {} samples, {} passed, {} round-off ties, {} counterexamples",
            t.samples,
            t.passed,
            t.ties,
            t.counterexamples.len()
        );
        for c in t.counterexamples.iter().take(3) {
            println!("  {c}");
        }
    }
}
