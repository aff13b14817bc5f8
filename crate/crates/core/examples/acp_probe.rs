//! Fitted orders of indicators near a critical point placed at
//! `x_j + λΔx`.

use weno3z::harness::{acp_order_probe, ProbeQuantity};

fn main() {
    let cells = [
        ("beta2_0", 0.3, 1),
        ("beta2_0", -0.5, 1),
        ("tau3", 0.3, 1),
        ("tau3", 0.0, 1),
        ("tauCP1", 0.0, 1),
        ("tauCP1", -0.5, 1),
        ("tauCP2", 0.2, 1),
        ("d42*d42", 0.0, 0),
        ("d42*d42", 0.0, 1),
        ("d42*d42", 0.0, 2),
    ];
    println!("{:<10} {:>6} {:>3} {:>8} {:>10}", "quantity", "lambda", "CP", "slope", "residual");
    for (q, lambda, cp) in cells {
        let quantity: ProbeQuantity = q.parse().unwrap();
        let r = acp_order_probe(quantity, lambda, cp, 11).unwrap();
        println!(
            "{:<10} {:>6} {:>3} {:>8.3} {:>10.2e}{}",
            q,
            lambda,
            cp,
            r.slope,
            r.residual,
            if r.conclusive { "" } else { "  (inconclusive)" }
        );
    }
}
