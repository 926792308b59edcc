//! Jacobi rotation methods for symmetric eigenproblems and singular values.
//!
//! Singular values use the one-sided (Hestenes) variant: rotations chosen to
//! diagonalize `A^T A` are applied to the columns of `A` instead of forming
//! the product, which keeps small singular values accurate.

use super::Matrix;
use crate::tol;

/// Eigen-decomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: Matrix,
}

/// Cyclic Jacobi on a symmetric matrix. Only the upper triangle is trusted.
pub fn symmetric_eigen(s: &Matrix) -> SymmetricEigen {
    assert!(s.is_square(), "eigen-decomposition needs a square matrix");
    let n = s.rows();
    let t = tol::current();
    let mut a = Matrix::from_fn(n, n, |i, j| if i <= j { s[(i, j)] } else { s[(j, i)] });
    let mut v = Matrix::identity(n);

    let frob: f64 = a.as_slice().iter().map(|x| x * x).sum::<f64>().sqrt();
    for _ in 0..t.jacobi_max_sweeps {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].powi(2))
            .sum::<f64>()
            .sqrt();
        if off <= t.jacobi * frob || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let tan = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (tan * tan + 1.0).sqrt();
                let sn = tan * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - sn * akq;
                    a[(k, q)] = sn * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - sn * aqk;
                    a[(q, k)] = sn * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - sn * vkq;
                    v[(k, q)] = sn * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    SymmetricEigen {
        values: order.iter().map(|&i| a[(i, i)]).collect(),
        vectors: Matrix::from_fn(n, n, |r, c| v[(r, order[c])]),
    }
}

/// Singular values and right singular vectors.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Singular values in descending order.
    pub sigma: Vec<f64>,
    /// Column `k` is the right singular vector for `sigma[k]`.
    pub v: Matrix,
}

impl Svd {
    pub fn sigma_max(&self) -> f64 {
        self.sigma[0]
    }

    pub fn sigma_min(&self) -> f64 {
        *self.sigma.last().expect("empty svd")
    }

    /// Right singular vector belonging to the smallest singular value.
    pub fn min_vector(&self) -> Vec<f64> {
        let k = self.sigma.len() - 1;
        (0..self.v.rows()).map(|i| self.v[(i, k)]).collect()
    }
}

/// One-sided Jacobi SVD of a square matrix.
pub fn svd(a: &Matrix) -> Svd {
    assert!(a.is_square(), "svd is implemented for square matrices");
    let n = a.rows();
    let t = tol::current();
    // Work on columns: store U column-major for contiguous access.
    let mut u: Vec<Vec<f64>> = (0..n).map(|j| (0..n).map(|i| a[(i, j)]).collect()).collect();
    let mut v = Matrix::identity(n);

    for _ in 0..t.jacobi_max_sweeps {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = u[p].iter().map(|x| x * x).sum();
                let beta: f64 = u[q].iter().map(|x| x * x).sum();
                let gamma: f64 = u[p].iter().zip(&u[q]).map(|(x, y)| x * y).sum();
                if gamma == 0.0 || gamma.abs() <= t.jacobi * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let tan = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let tan = if zeta == 0.0 { 1.0 } else { tan };
                let c = 1.0 / (1.0 + tan * tan).sqrt();
                let s = c * tan;
                let (up, uq) = split_pair(&mut u, p, q);
                for (x, y) in up.iter_mut().zip(uq.iter_mut()) {
                    let (xp, xq) = (*x, *y);
                    *x = c * xp - s * xq;
                    *y = s * xp + c * xq;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<f64> = u.iter().map(|col| super::vec_ops::norm_two(col)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));
    Svd {
        sigma: order.iter().map(|&i| norms[i]).collect(),
        v: Matrix::from_fn(n, n, |r, c| v[(r, order[c])]),
    }
}

fn split_pair(u: &mut [Vec<f64>], p: usize, q: usize) -> (&mut Vec<f64>, &mut Vec<f64>) {
    debug_assert!(p < q);
    let (lo, hi) = u.split_at_mut(q);
    (&mut lo[p], &mut hi[0])
}

/// Smallest singular value; 0 for exactly singular input.
pub fn sigma_min(a: &Matrix) -> f64 {
    svd(a).sigma_min()
}

/// Largest singular value, i.e. the spectral norm.
pub fn sigma_max(a: &Matrix) -> f64 {
    svd(a).sigma_max()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_sigma_min_is_sqrt2() {
        let a = Matrix::from_rows(&[[2.0, 1.0], [-2.0, 1.0]]);
        assert!((sigma_min(&a) - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn sigma_min_two_by_two_closed_form() {
        // A^T A = [[5,1],[1,1]] has eigenvalues 3 +- sqrt(5).
        let a = Matrix::from_rows(&[[1.0, 1.0], [-2.0, 0.0]]);
        let expected = (3.0 - 5f64.sqrt()).sqrt();
        assert!(((sigma_min(&a) - expected) / expected).abs() < 1e-12);
        assert!((sigma_min(&a) - 0.87403).abs() < 1e-5);
    }

    #[test]
    fn identity_and_singular() {
        assert_eq!(sigma_min(&Matrix::identity(3)), 1.0);
        let s = Matrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        assert!(sigma_min(&s) < 1e-15);
    }

    #[test]
    fn symmetric_eigen_of_tridiagonal() {
        let a = Matrix::from_rows(&[[3.0, -1.0], [-1.0, 3.0]]);
        let e = symmetric_eigen(&a);
        assert!((e.values[0] - 2.0).abs() < 1e-14);
        assert!((e.values[1] - 4.0).abs() < 1e-14);
        let v0: Vec<f64> = (0..2).map(|i| e.vectors[(i, 0)]).collect();
        let av = a.mul_vec(&v0);
        assert!((av[0] - 2.0 * v0[0]).abs() < 1e-14 && (av[1] - 2.0 * v0[1]).abs() < 1e-14);
    }

    #[test]
    fn min_singular_vector_spans_null_space() {
        let s = Matrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        let v = svd(&s).min_vector();
        let r = s.mul_vec(&v);
        assert!(r.iter().all(|x| x.abs() < 1e-14));
    }
}
