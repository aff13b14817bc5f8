//! Which quadratic forms on three or four points reach the target orders
//! near a first-order critical point.

use weno3z::harness::nullspace::{form_alignment, product_form};
use weno3z::harness::{quadratic_form_nullspace, NullspaceTargets};

fn main() {
    let generic = NullspaceTargets {
        generic: 5,
        half_node: None,
    };
    let r3 = quadratic_form_nullspace(3, generic, 1).unwrap();
    println!("3 points, {}: dimension {}", r3.constraint_set, r3.dimension);

    let with_half = NullspaceTargets {
        generic: 5,
        half_node: Some(7),
    };
    let r4 = quadratic_form_nullspace(4, with_half, 1).unwrap();
    println!("4 points, {}: dimension {}, residual {:.2e}", r4.constraint_set, r4.dimension, r4.residual);
    if let Some(b) = r4.basis.first() {
        println!("basis{b:.6}");
        let target = product_form(&[-23.0, 21.0, 3.0, -1.0], &[-1.0, 3.0, -3.0, 1.0]);
        println!("alignment with the tauCP1 form: {:.15}", form_alignment(b, &target));
    }

    let relaxed = NullspaceTargets {
        generic: 3,
        half_node: None,
    };
    let r = quadratic_form_nullspace(3, relaxed, 1).unwrap();
    println!("3 points, {}: dimension {}", r.constraint_set, r.dimension);
}
