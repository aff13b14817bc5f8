//! Which quadratic forms of stencil values vanish to a prescribed order at
//! a first-order critical point.
//!
//! A candidate indicator is `τ(f) = vᵀAv` with `v` the point values on
//! three (`j-1..j+1`) or four (`j-1..j+2`) nodes and `A` symmetric. With the
//! critical point at `x_c = x_j + λΔx`, each `v_a` expands as
//! `Σ_m f^{(m)}(x_c) ((a-λ)Δx)^m / m!` with `f'(x_c) = 0`, so every power
//! of `Δx` in `τ` is linear in the entries of `A`. Requiring the low powers
//! to vanish for many random Taylor coefficient sets and offsets gives a
//! homogeneous system whose nullspace is the admissible family.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::HarnessError;

/// Singular values below this fraction of the largest count as zero.
pub const RANK_THRESHOLD: f64 = 1e-8;
/// The smallest retained singular value must clear this fraction of the
/// largest, otherwise the rank decision has no clear gap.
pub const GAP_FLOOR: f64 = 1e-6;
/// Random `(λ, f)` draws per constraint block.
const DRAWS: usize = 24;

/// Orders the indicator must reach: `generic` for every offset and
/// optionally `half_node` for the critical point at `λ = -1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NullspaceTargets {
    pub generic: usize,
    pub half_node: Option<usize>,
}

impl NullspaceTargets {
    pub fn id(&self) -> String {
        match self.half_node {
            Some(h) => format!("generic{}+half{}", self.generic, h),
            None => format!("generic{}", self.generic),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NullspaceResult {
    pub points: usize,
    pub constraint_set: String,
    pub dimension: usize,
    /// Symmetric coefficient matrices, Frobenius-normalized with the
    /// largest-magnitude entry positive.
    pub basis: Vec<DMatrix<f64>>,
    /// Largest `|C x|` over the basis vectors.
    pub residual: f64,
    /// Singular values of the row-normalized constraint matrix, descending.
    pub singular_values: Vec<f64>,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Index pairs `(a, b)` with `a <= b` in row-major order.
fn unknowns(points: usize) -> Vec<(usize, usize)> {
    (0..points)
        .flat_map(|a| (a..points).map(move |b| (a, b)))
        .collect()
}

/// Coefficient of `Δx^n` in `τ` for every unknown, given the offset and
/// the Taylor coefficients `d[m] = f^{(m)}(x_c)`.
fn power_row(points: usize, lambda: f64, d: &[f64], n: usize) -> Vec<f64> {
    let pos: Vec<f64> = (0..points).map(|a| a as f64 - 1.0 - lambda).collect();
    unknowns(points)
        .into_iter()
        .map(|(a, b)| {
            let mut s = 0.0;
            for m1 in 0..=n {
                let m2 = n - m1;
                s += d[m1] * d[m2] * pos[a].powi(m1 as i32) * pos[b].powi(m2 as i32)
                    / (factorial(m1) * factorial(m2));
            }
            if a == b {
                s
            } else {
                2.0 * s
            }
        })
        .collect()
}

fn taylor_draw(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len)
        .map(|m| match m {
            1 => 0.0,
            2 | 3 => {
                let s = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                s * rng.gen_range(0.5..2.0)
            }
            _ => rng.gen_range(-2.0..2.0),
        })
        .collect()
}

/// Assemble the constraint matrix, one row per vanishing power.
pub fn constraint_matrix(points: usize, targets: NullspaceTargets, seed: u64) -> DMatrix<f64> {
    let lam_hi = points as f64 - 2.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let max_order = targets.generic.max(targets.half_node.unwrap_or(0));
    for _ in 0..DRAWS {
        let lambda = rng.gen_range(-1.0..lam_hi);
        let d = taylor_draw(&mut rng, max_order + 1);
        for n in 0..targets.generic {
            rows.push(power_row(points, lambda, &d, n));
        }
    }
    if let Some(h) = targets.half_node {
        for _ in 0..DRAWS {
            let d = taylor_draw(&mut rng, max_order + 1);
            for n in targets.generic..h {
                rows.push(power_row(points, -0.5, &d, n));
            }
        }
    }
    let cols = points * (points + 1) / 2;
    let mut c = DMatrix::zeros(rows.len(), cols);
    for (i, r) in rows.iter().enumerate() {
        let norm = r.iter().map(|x| x * x).sum::<f64>().sqrt();
        let scale = if norm > 0.0 { 1.0 / norm } else { 0.0 };
        for (j, x) in r.iter().enumerate() {
            c[(i, j)] = x * scale;
        }
    }
    c
}

/// Vector of unknowns for a symmetric matrix.
pub fn to_unknowns(a: &DMatrix<f64>) -> DVector<f64> {
    let n = a.nrows();
    DVector::from_iterator(
        n * (n + 1) / 2,
        unknowns(n).into_iter().map(|(i, j)| 0.5 * (a[(i, j)] + a[(j, i)])),
    )
}

fn from_unknowns(points: usize, x: &DVector<f64>) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(points, points);
    for (k, (i, j)) in unknowns(points).into_iter().enumerate() {
        a[(i, j)] = x[k];
        a[(j, i)] = x[k];
    }
    a
}

/// Frobenius-normalize and fix the sign by the largest-magnitude entry.
pub fn normalize_form(a: &DMatrix<f64>) -> DMatrix<f64> {
    let sym = (a + a.transpose()) * 0.5;
    let norm = sym.norm();
    let pivot = sym
        .iter()
        .copied()
        .max_by(|x, y| x.abs().total_cmp(&y.abs()))
        .unwrap_or(0.0);
    if norm == 0.0 {
        return sym;
    }
    sym * (pivot.signum() / norm)
}

/// Symmetrized outer product `(u vᵀ + v uᵀ)/2`: the matrix of the form
/// `(u·f)(v·f)`.
pub fn product_form(u: &[f64], v: &[f64]) -> DMatrix<f64> {
    let n = u.len();
    DMatrix::from_fn(n, n, |i, j| 0.5 * (u[i] * v[j] + u[j] * v[i]))
}

/// Nullspace of the order constraints for `points` ∈ {3, 4}.
pub fn quadratic_form_nullspace(
    points: usize,
    targets: NullspaceTargets,
    seed: u64,
) -> Result<NullspaceResult, HarnessError> {
    if !(3..=4).contains(&points) {
        return Err(HarnessError::Invalid(format!("stencil must have 3 or 4 points, got {points}")));
    }
    if targets.generic == 0 || targets.half_node.is_some_and(|h| h <= targets.generic) {
        return Err(HarnessError::Invalid(format!("inconsistent targets {targets:?}")));
    }
    let c = constraint_matrix(points, targets, seed);
    let cols = c.ncols();
    // Gram matrix keeps the SVD small; squared singular values come out of it.
    let svd = c.clone().svd(false, true);
    let v_t = svd.v_t.as_ref().expect("right singular vectors");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let sv: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    let smax = sv.first().copied().unwrap_or(0.0);
    let rank = sv.iter().filter(|&&s| s > RANK_THRESHOLD * smax).count();
    if rank > 0 && sv[rank - 1] < GAP_FLOOR * smax {
        return Err(HarnessError::IllConditioned {
            condition: smax / sv[rank - 1],
        });
    }
    // when there are fewer rows than unknowns the missing singular values
    // are zero and the matching directions come from the complement
    let mut basis_vecs: Vec<DVector<f64>> = order[rank..]
        .iter()
        .map(|&i| v_t.row(i).transpose())
        .collect();
    if sv.len() < cols {
        return Err(HarnessError::Invalid(format!(
            "only {} constraints for {} unknowns",
            sv.len(),
            cols
        )));
    }
    basis_vecs.truncate(cols - rank);
    let residual = basis_vecs
        .iter()
        .map(|x| (&c * x).amax())
        .fold(0.0, f64::max);
    let basis = basis_vecs
        .iter()
        .map(|x| normalize_form(&from_unknowns(points, x)))
        .collect::<Vec<_>>();
    Ok(NullspaceResult {
        points,
        constraint_set: targets.id(),
        dimension: basis.len(),
        basis,
        residual,
        singular_values: sv,
    })
}

/// `|⟨a, b⟩|` after normalizing both forms; 1 means equal up to scale.
pub fn form_alignment(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    let na = normalize_form(a);
    let nb = normalize_form(b);
    na.dot(&nb).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    const CP1_LEAD: [f64; 4] = [-23.0, 21.0, 3.0, -1.0];
    const CP1_THIRD: [f64; 4] = [-1.0, 3.0, -3.0, 1.0];

    #[test]
    fn three_points_have_no_fifth_order_form() {
        let r = quadratic_form_nullspace(3, NullspaceTargets { generic: 5, half_node: None }, 1).unwrap();
        assert_eq!(r.dimension, 0);
    }

    #[test]
    fn four_points_single_form() {
        let t = NullspaceTargets { generic: 5, half_node: Some(7) };
        let r = quadratic_form_nullspace(4, t, 2).unwrap();
        assert_eq!(r.dimension, 1);
        assert!(r.residual < 1e-8);
        let want = product_form(&CP1_LEAD, &CP1_THIRD);
        assert!((form_alignment(&r.basis[0], &want) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn relaxed_three_point_system_keeps_second_difference_squares() {
        let t = NullspaceTargets { generic: 3, half_node: None };
        let r = quadratic_form_nullspace(3, t, 3).unwrap();
        assert!(r.dimension >= 2);
        let c = constraint_matrix(3, t, 3);
        let d22 = product_form(&[1.0, -2.0, 1.0], &[1.0, -2.0, 1.0]);
        assert!((&c * to_unknowns(&d22)).amax() < 1e-12);
    }

    #[test]
    fn appendix_matrix_is_the_same_form() {
        let upper = DMatrix::from_row_slice(
            4,
            4,
            &[
                -23.0, 90.0, -66.0, 22.0, 0.0, -63.0, 54.0, -18.0, 0.0, 0.0, 9.0, -6.0, 0.0, 0.0, 0.0, 1.0,
            ],
        );
        let want = product_form(&CP1_LEAD, &CP1_THIRD);
        assert!((form_alignment(&upper, &want) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_requests() {
        let t = NullspaceTargets { generic: 5, half_node: None };
        assert!(quadratic_form_nullspace(5, t, 0).is_err());
        let t = NullspaceTargets { generic: 5, half_node: Some(4) };
        assert!(quadratic_form_nullspace(4, t, 0).is_err());
    }
}
