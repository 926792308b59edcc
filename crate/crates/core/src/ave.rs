//! Absolute value equations `Ax - b = |x|`: residuals, the sign-enumeration
//! solver and the feasibility test of the concave reformulation.

use serde::Serialize;

use crate::dense::{vec_ops, Lu, Matrix};
use crate::error::{Error, Result};
use crate::{tol, vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct AveProblem {
    pub a: Matrix,
    pub b: Vec<f64>,
}

impl AveProblem {
    pub fn new(a: Matrix, b: Vec<f64>) -> Result<Self> {
        let n = a.square_dim("AveProblem")?;
        if b.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, matrix is {n}x{n}",
                b.len()
            )));
        }
        if !vec_ops::all_finite(&b) {
            return Err(Error::InvalidArgument("right-hand side has non-finite entries".into()));
        }
        Ok(Self { a, b })
    }

    pub fn dim(&self) -> usize {
        self.b.len()
    }

    fn check_point(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "point has length {}, problem has dimension {}",
                x.len(),
                self.dim()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AveSolution {
    pub x_star: Vec<f64>,
    /// Sign of each component of `x_star`, zero for exact zeros.
    pub sign_vector: Vec<i8>,
    pub residual_norm_inf: f64,
}

/// Every sign-consistent root found by enumeration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveAll {
    pub solutions: Vec<AveSolution>,
    /// Sign patterns whose linear system `A - diag(s)` was singular.
    pub singular_branches: usize,
}

/// `phi(x) = Ax - b - |x|`.
pub fn residual(p: &AveProblem, x: &[f64]) -> Result<Vec<f64>> {
    p.check_point(x)?;
    let ax = p.a.mul_vec(x);
    Ok(ax
        .iter()
        .zip(&p.b)
        .zip(x)
        .map(|((ai, bi), xi)| ai - bi - xi.abs())
        .collect())
}

fn sign_of(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// Solve `(A - diag(s)) x = b` for every `s` with `|s| = e` and keep the
/// roots with `s_i x_i >= -slack`. Roots closer than the dedup tolerance in
/// the inf-norm are merged, the earliest sign pattern winning.
pub fn solve_all(p: &AveProblem) -> Result<SolveAll> {
    let n = p.dim();
    vertex::check_dim(n, "sign enumeration")?;
    let t = tol::current();
    let branches = vertex::map_all(n, |s| {
        let lu = Lu::factor(&p.a.sub_signs(s));
        if lu.is_singular() {
            return None;
        }
        let x = lu.solve(&p.b).ok()?;
        let consistent = s
            .iter()
            .zip(&x)
            .all(|(&si, &xi)| f64::from(si) * xi >= -t.sign_slack);
        Some(consistent.then_some(x))
    });

    let mut singular_branches = 0;
    let mut solutions: Vec<AveSolution> = Vec::new();
    for branch in branches {
        let Some(found) = branch else {
            singular_branches += 1;
            continue;
        };
        let Some(x) = found else { continue };
        let dup = solutions
            .iter()
            .any(|s| vec_ops::norm_inf(&vec_ops::sub(&s.x_star, &x)) < t.dedup);
        if dup {
            continue;
        }
        let r = residual(p, &x)?;
        solutions.push(AveSolution {
            sign_vector: x.iter().map(|&v| sign_of(v)).collect(),
            residual_norm_inf: vec_ops::norm_inf(&r),
            x_star: x,
        });
    }
    Ok(SolveAll {
        solutions,
        singular_branches,
    })
}

/// The unique solution, or `NoSolution` / `MultipleSolutions`.
pub fn solve_exact(p: &AveProblem) -> Result<AveSolution> {
    let mut all = solve_all(p)?;
    match all.solutions.len() {
        0 => Err(Error::NoSolution {
            singular_branches: all.singular_branches,
        }),
        1 => Ok(all.solutions.remove(0)),
        count => Err(Error::MultipleSolutions { count }),
    }
}

/// `(A + I)x >= b` and `(A - I)x >= b`, entrywise up to the feasibility slack.
pub fn concave_feasible(p: &AveProblem, x: &[f64]) -> Result<bool> {
    p.check_point(x)?;
    let slack = tol::current().feasibility_slack;
    let ax = p.a.mul_vec(x);
    Ok(ax.iter().zip(&p.b).zip(x).all(|((ai, bi), xi)| {
        ai + xi - bi >= -slack && ai - xi - bi >= -slack
    }))
}

/// Fixed-point iteration `x <- A^-1 (|x| + b)`, stopping after `max_iter`
/// steps or once successive iterates agree to the step tolerance.
pub fn picard_iterate(p: &AveProblem, x0: &[f64], max_iter: usize) -> Result<Vec<f64>> {
    p.check_point(x0)?;
    let lu = Lu::factor(&p.a);
    let step = tol::current().picard_step;
    let mut x = x0.to_vec();
    for _ in 0..max_iter {
        let next = lu.solve(&vec_ops::add(&vec_ops::abs(&x), &p.b))?;
        let moved = vec_ops::norm_inf(&vec_ops::sub(&next, &x));
        x = next;
        if moved < step {
            break;
        }
    }
    Ok(x)
}
