//! Perron root of a nonnegative matrix by power iteration.

use super::{vec_ops, Matrix};
use crate::error::{Error, Result};
use crate::tol;

#[derive(Debug, Clone)]
pub struct Perron {
    /// Spectral radius estimate.
    pub rho: f64,
    /// Nonnegative eigenvector, normalized to unit inf-norm.
    pub vector: Vec<f64>,
    pub iterations: usize,
}

/// Spectral radius and Perron vector of an entrywise nonnegative matrix.
///
/// Iterates with `B + I` from the start vector `e`: the shift leaves the
/// eigenvectors unchanged, makes `rho + 1` the unique eigenvalue of largest
/// modulus, and keeps every iterate strictly positive, so periodic and
/// reducible inputs converge too.
pub fn spectral_radius_nonneg(b: &Matrix) -> Result<Perron> {
    let n = b.square_dim("spectral_radius_nonneg")?;
    let t = tol::current();
    if !b.all_nonneg(0.0) {
        return Err(Error::InvalidArgument(
            "spectral_radius_nonneg needs an entrywise nonnegative matrix".into(),
        ));
    }

    let mut x = vec![1.0; n];
    let mut prev = rayleigh(b, &x);
    for it in 1..=t.perron_max_iter {
        let mut y = b.mul_vec(&x);
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += xi;
        }
        let scale = vec_ops::norm_inf(&y);
        x = vec_ops::scale(&y, 1.0 / scale);
        let q = rayleigh(b, &x);
        if (q - prev).abs() < t.perron {
            return Ok(Perron {
                rho: q.max(0.0),
                vector: x,
                iterations: it,
            });
        }
        prev = q;
    }
    Err(Error::NoConvergence {
        iterations: t.perron_max_iter,
    })
}

fn rayleigh(b: &Matrix, x: &[f64]) -> f64 {
    vec_ops::dot(x, &b.mul_vec(x)) / vec_ops::dot(x, x)
}

/// `rho(B)` for a nonnegative matrix.
pub fn spectral_radius(b: &Matrix) -> Result<f64> {
    spectral_radius_nonneg(b).map(|p| p.rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaled_identity() {
        let p = spectral_radius_nonneg(&Matrix::identity(2).scale(1.0 / 3.0)).unwrap();
        assert!((p.rho - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn rank_one_bump_has_eigenvector_e() {
        let b = Matrix::identity(2)
            .scale(1.0 / 3.0)
            .add(&Matrix::from_rows(&[[1.0, 1.0], [1.0, 1.0]]).scale(1.0 / 12.0));
        let p = spectral_radius_nonneg(&b).unwrap();
        assert!((p.rho - 0.5).abs() < 1e-12);
        assert!((p.vector[0] - p.vector[1]).abs() < 1e-12);
    }

    #[test]
    fn permutation_is_periodic_but_converges() {
        let p = spectral_radius_nonneg(&Matrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]])).unwrap();
        assert!((p.rho - 1.0).abs() < 1e-12);
        let q = spectral_radius_nonneg(&Matrix::from_rows(&[[0.0, 4.0], [1.0, 0.0]])).unwrap();
        assert!((q.rho - 2.0).abs() < 1e-10);
    }

    #[test]
    fn defective_block_hits_the_iteration_cap() {
        // Jordan blocks converge sublinearly under power iteration.
        let r = spectral_radius_nonneg(&Matrix::from_rows(&[[0.0, 1.0], [0.0, 0.0]]));
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn reducible_triangular() {
        let p = spectral_radius_nonneg(&Matrix::from_rows(&[[0.5, 1.0], [0.0, 0.25]])).unwrap();
        assert!((p.rho - 0.5).abs() < 1e-10);
    }

    #[test]
    fn rejects_negative_entries() {
        assert!(spectral_radius_nonneg(&Matrix::from_rows(&[[0.0, -1.0], [1.0, 0.0]])).is_err());
    }
}
