//! Gaussian elimination with partial pivoting.

use super::Matrix;
use crate::error::{Error, Result};
use crate::tol;

/// Packed LU factors of a square matrix, `P A = L U`.
///
/// Factoring never fails; singularity is judged afterwards against the
/// smallest pivot so the same factorization can serve determinant signs.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
    swaps: usize,
    scale: f64,
}

impl Lu {
    pub fn factor(a: &Matrix) -> Self {
        assert!(a.is_square(), "LU needs a square matrix");
        let n = a.rows();
        let scale = a.norm_inf();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;

        for k in 0..n {
            let (p, _) = (k..n)
                .map(|i| (i, lu[(i, k)].abs()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if p != k {
                for j in 0..n {
                    let t = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = t;
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let pivot = lu[(k, k)];
            if pivot == 0.0 {
                continue;
            }
            for i in k + 1..n {
                let f = lu[(i, k)] / pivot;
                lu[(i, k)] = f;
                if f != 0.0 {
                    for j in k + 1..n {
                        lu[(i, j)] -= f * lu[(k, j)];
                    }
                }
            }
        }
        Self { lu, perm, swaps, scale }
    }

    pub fn dim(&self) -> usize {
        self.lu.rows()
    }

    pub fn det(&self) -> f64 {
        let d: f64 = (0..self.dim()).map(|i| self.lu[(i, i)]).product();
        if self.swaps.is_multiple_of(2) {
            d
        } else {
            -d
        }
    }

    /// Smallest pivot magnitude.
    pub fn min_pivot(&self) -> f64 {
        (0..self.dim())
            .map(|i| self.lu[(i, i)].abs())
            .fold(f64::INFINITY, f64::min)
    }

    fn pivot_threshold(&self) -> f64 {
        tol::current().singular_pivot * self.scale
    }

    pub fn is_singular(&self) -> bool {
        self.min_pivot() <= self.pivot_threshold()
    }

    fn check(&self) -> Result<()> {
        if self.is_singular() {
            Err(Error::SingularMatrix {
                pivot: self.min_pivot(),
                threshold: self.pivot_threshold(),
            })
        } else {
            Ok(())
        }
    }

    fn solve_unchecked(&self, b: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        let dot = |row: &[f64], x: &[f64]| -> f64 { row.iter().zip(x).map(|(a, b)| a * b).sum() };
        for i in 0..n {
            x[i] -= dot(&self.lu.row(i)[..i], &x[..i]);
        }
        for i in (0..n).rev() {
            let s = x[i] - dot(&self.lu.row(i)[i + 1..], &x[i + 1..]);
            x[i] = s / self.lu[(i, i)];
        }
        x
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        if b.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.dim()
            )));
        }
        self.check()?;
        Ok(self.solve_unchecked(b))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.check()?;
        let n = self.dim();
        let mut inv = Matrix::zeros(n, n);
        let mut e = vec![0.0; n];
        for j in 0..n {
            e.iter_mut().for_each(|v| *v = 0.0);
            e[j] = 1.0;
            let col = self.solve_unchecked(&e);
            for (i, v) in col.into_iter().enumerate() {
                inv[(i, j)] = v;
            }
        }
        Ok(inv)
    }
}

/// `A^{-1}`; fails with `SingularMatrix` when a pivot falls below
/// `1e-12 * ||A||_inf` (default tolerance).
pub fn invert(a: &Matrix) -> Result<Matrix> {
    a.square_dim("invert")?;
    Lu::factor(a).inverse()
}

pub fn solve(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    a.square_dim("solve")?;
    Lu::factor(a).solve(b)
}

pub fn det(a: &Matrix) -> f64 {
    Lu::factor(a).det()
}
