//! Discrete error norms.

/// `L1 = (1/N) Σ|e_i|` and `L∞ = max|e_i|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorNorms {
    pub l1: f64,
    pub linf: f64,
}

/// Error norms of `numerical - exact`; the sum runs in index order.
pub fn error_norms(numerical: &[f64], exact: &[f64]) -> ErrorNorms {
    assert_eq!(numerical.len(), exact.len(), "fields live on different grids");
    let mut sum = 0.0;
    let mut linf: f64 = 0.0;
    for (a, b) in numerical.iter().zip(exact) {
        let e = (a - b).abs();
        sum += e;
        linf = linf.max(e);
    }
    ErrorNorms {
        l1: sum / numerical.len().max(1) as f64,
        linf,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let z = error_norms(&[1.0, 2.0], &[1.0, 2.0]);
        assert_eq!((z.l1, z.linf), (0.0, 0.0));
        let e = error_norms(&[1.0, -1.0, 0.0, 0.0], &[0.0; 4]);
        assert_eq!((e.l1, e.linf), (0.5, 1.0));
    }
}
