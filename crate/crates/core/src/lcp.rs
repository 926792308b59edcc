//! Linear complementarity problems `z >= 0, w = Mz + q >= 0, z^T w = 0` and
//! their absolute value equation form.
//!
//! With `x = w - z` (so `z = (|x| - x)/2`, `w = (|x| + x)/2`) the LCP becomes
//! `Ax - b = |x|` for `A = (M + I)(M - I)^{-1}` and `b = 2 (M - I)^{-1} q`.

use serde::Serialize;

use crate::ave::AveProblem;
use crate::cond::{BoundMethod, CondKind, CondResult};
use crate::dense::{self, vec_ops, Lu, Matrix, NormSpec};
use crate::error::{Error, Result};
use crate::regularity::{self, Verdict};
use crate::{tol, vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct LcpProblem {
    pub m: Matrix,
    pub q: Vec<f64>,
}

impl LcpProblem {
    pub fn new(m: Matrix, q: Vec<f64>) -> Result<Self> {
        let n = m.square_dim("LcpProblem")?;
        if q.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "q has length {}, M is {n}x{n}",
                q.len()
            )));
        }
        Ok(Self { m, q })
    }

    pub fn dim(&self) -> usize {
        self.q.len()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LcpSolution {
    pub z: Vec<f64>,
    pub w: Vec<f64>,
    pub complementarity_gap: f64,
}

/// `(M - I)^{-1}`, or `OneIsEigenvalue` when `|det(M - I)| <= det_zero ||M||_inf^n`.
fn shifted_inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    let shifted = m.sub_diag(&vec![1.0; n]);
    let lu = Lu::factor(&shifted);
    let det = lu.det();
    let thr = tol::current().det_zero * m.norm_inf().powi(n as i32);
    if det.abs() <= thr || lu.is_singular() {
        return Err(Error::OneIsEigenvalue { det });
    }
    lu.inverse()
}

/// `A = (M + I)(M - I)^{-1}`.
pub fn transform_matrix(m: &Matrix) -> Result<Matrix> {
    let n = m.square_dim("transform_matrix")?;
    let inv = shifted_inverse(m)?;
    Ok(m.add_diag(&vec![1.0; n]).mul(&inv))
}

/// The equivalent absolute value equation.
pub fn lcp_to_ave(lp: &LcpProblem) -> Result<AveProblem> {
    let n = lp.dim();
    let inv = shifted_inverse(&lp.m)?;
    let a = lp.m.add_diag(&vec![1.0; n]).mul(&inv);
    let b = vec_ops::scale(&inv.mul_vec(&lp.q), 2.0);
    AveProblem::new(a, b)
}

/// Forward map `x = w - z`.
pub fn lcp_to_ave_point(z: &[f64], w: &[f64]) -> Vec<f64> {
    vec_ops::sub(w, z)
}

/// Backward map `z = (|x| - x)/2`, `w = (|x| + x)/2`.
pub fn ave_to_lcp_solution(x: &[f64]) -> LcpSolution {
    let z: Vec<f64> = x.iter().map(|v| 0.5 * (v.abs() - v)).collect();
    let w: Vec<f64> = x.iter().map(|v| 0.5 * (v.abs() + v)).collect();
    LcpSolution {
        complementarity_gap: vec_ops::dot(&z, &w),
        z,
        w,
    }
}

/// `min(Mx + q, x)`, entrywise.
pub fn natural_residual(lp: &LcpProblem, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != lp.dim() {
        return Err(Error::DimensionMismatch(format!(
            "point has length {}, problem has dimension {}",
            x.len(),
            lp.dim()
        )));
    }
    let mx = lp.m.mul_vec(x);
    Ok(mx
        .iter()
        .zip(&lp.q)
        .zip(x)
        .map(|((a, q), xi)| (a + q).min(*xi))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChenXiang {
    /// `max_{0 <= D <= I} ||(I - D + DM)^{-1}||` by enumeration over `D`.
    pub value: f64,
    /// `2 max_{|d| = e} ||(I - M)^{-1} ((I + M)(I - M)^{-1} - diag(d))^{-1}||`.
    pub via_transform: f64,
    /// Diagonal of the maximizing `D` (0 or 1 entries).
    pub witness_d: Vec<u8>,
}

/// The error-bound constant `max_{0 <= D <= I} ||(I - D + DM)^{-1}||` of a
/// P-matrix LCP, computed over the `{0,1}` diagonals and again through the
/// transformed matrix with `diag(d) = 2D - I`. The two routes must agree.
/// `D` is enumerated from `0` upward; ties go to the first maximizer.
pub fn chen_xiang_constant(lp: &LcpProblem, ns: &NormSpec) -> Result<ChenXiang> {
    let m = &lp.m;
    let n = m.square_dim("chen_xiang_constant")?;
    vertex::check_dim(n, "vertex enumeration")?;
    if !dense::is_p_matrix(m)? {
        return Err(Error::NotPMatrix);
    }
    let id = Matrix::identity(n);
    let direct = vertex::map_all(n, |d| {
        let dd: Vec<f64> = d.iter().map(|&s| if s < 0 { 1.0 } else { 0.0 }).collect();
        let dm = Matrix::from_diag(&dd).mul(m);
        ns.inverse_norm(&id.sub_diag(&dd).add(&dm))
    });

    let i_minus_m_inv = dense::invert(&id.sub(m))?;
    let a_neg = id.add(m).mul(&i_minus_m_inv);
    let transformed = vertex::map_all(n, |d| match dense::invert(&a_neg.sub_signs(d)) {
        Ok(inv) => 2.0 * ns.induced(&i_minus_m_inv.mul(&inv)),
        Err(_) => f64::INFINITY,
    });

    let k = vertex::argmax(&direct);
    let route_a = direct[k];
    let route_b = transformed.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let rel = (route_a - route_b).abs() / route_a.abs().max(f64::MIN_POSITIVE);
    if rel.is_nan() || rel > tol::current().route_agreement {
        return Err(Error::IdentityMismatch { route_a, route_b });
    }
    Ok(ChenXiang {
        value: route_a,
        via_transform: route_b,
        witness_d: vertex::vertex(n, k)
            .iter()
            .map(|&s| u8::from(s < 0))
            .collect(),
    })
}

fn diag_at_most_one(m: &Matrix) -> bool {
    let slack = tol::current().nonneg_slack;
    m.diagonal().iter().all(|&v| v <= 1.0 + slack)
}

/// `c((M + I)(M - I)^{-1}) = ||I - M^{-1}|| / 2` for an M-matrix with
/// `Diag(M) <= e`, attained at `d = -e`.
#[allow(non_snake_case)]
pub fn lcp_cond_M_matrix(lp: &LcpProblem, ns: &NormSpec) -> Result<CondResult> {
    const NAME: &str = "lcp_cond_M_matrix";
    let m = &lp.m;
    let n = lp.dim();
    if !dense::is_m_matrix(m) {
        return Err(Error::not_applicable(NAME, "M is not an M-matrix"));
    }
    if !diag_at_most_one(m) {
        return Err(Error::not_applicable(NAME, "Diag(M) exceeds 1"));
    }
    shifted_inverse(m).map_err(|e| Error::not_applicable(NAME, e.to_string()))?;
    let minv = dense::invert(m)?;
    let value = 0.5 * ns.induced(&Matrix::identity(n).sub(&minv));
    Ok(CondResult::new(
        value,
        BoundMethod::LcpMmatrix,
        CondKind::Exact,
        Some(vec![-1; n]),
        ns.clone(),
    ))
}

fn h_matrix_unit_diag(m: &Matrix, name: &'static str) -> Result<()> {
    if !dense::is_h_matrix(m) {
        return Err(Error::not_applicable(name, "M is not an H-matrix"));
    }
    if m.diagonal().iter().any(|&v| v < 0.0) || !diag_at_most_one(m) {
        return Err(Error::not_applicable(name, "Diag(M) is not within [0, 1]"));
    }
    Ok(())
}

/// `c((M + I)(M - I)^{-1}) <= ||<M>^{-1} - I|| / 2` for an H-matrix with
/// `0 <= Diag(M) <= e`.
#[allow(non_snake_case)]
pub fn lcp_cond_H_matrix(lp: &LcpProblem, ns: &NormSpec) -> Result<CondResult> {
    const NAME: &str = "lcp_cond_H_matrix";
    let m = &lp.m;
    let n = lp.dim();
    h_matrix_unit_diag(m, NAME)?;
    shifted_inverse(m).map_err(|e| Error::not_applicable(NAME, e.to_string()))?;
    let cinv = dense::invert(&dense::comparison_matrix(m))?;
    let value = 0.5 * ns.induced(&cinv.sub(&Matrix::identity(n)));
    Ok(CondResult::new(
        value,
        BoundMethod::LcpHmatrix,
        CondKind::UpperBound,
        None,
        ns.clone(),
    ))
}

/// `|| B^ ||_inf` with `B^ = max(|B_lo|, |B_hi|)`, where `B_lo` / `B_hi` sum
/// the entrywise min / max over `k` of `(I - M)^{-1}_ik (I - M)_kj` and
/// `(I - M)^{-1}_ik (M^{-1} - I)_kj`. Requires an M-matrix with `Diag(M) <= e`.
///
/// This bounds `max_{0 <= D <= I} ||(I - D + DM)^{-1}||_inf` from above. The
/// bound is tight for some inputs (`M = 0.5 I`, symmetric tridiagonal
/// M-matrices) but not in general: for `M = [[0.8766, 0], [-0.1232, 0.9595]]`
/// it gives about 1.617 against a true maximum of about 1.189.
pub fn lcp_inf_enclosure(lp: &LcpProblem) -> Result<f64> {
    const NAME: &str = "lcp_inf_enclosure";
    let m = &lp.m;
    let n = lp.dim();
    if !dense::is_m_matrix(m) {
        return Err(Error::not_applicable(NAME, "M is not an M-matrix"));
    }
    if !diag_at_most_one(m) {
        return Err(Error::not_applicable(NAME, "Diag(M) exceeds 1"));
    }
    let id = Matrix::identity(n);
    let i_minus_m = id.sub(m);
    let n_inv = dense::invert(&i_minus_m).map_err(|e| Error::not_applicable(NAME, e.to_string()))?;
    let upper = dense::invert(m)?.sub(&id);
    let mut hat = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let (mut lo, mut hi) = (0.0, 0.0);
            for k in 0..n {
                let u = n_inv[(i, k)] * i_minus_m[(k, j)];
                let v = n_inv[(i, k)] * upper[(k, j)];
                lo += u.min(v);
                hi += u.max(v);
            }
            hat[(i, j)] = f64::max(lo.abs(), hi.abs());
        }
    }
    Ok(hat.norm_inf())
}

/// `max_{0 <= D <= I} ||(I - D + DM)^{-1}|| <= ||<M>^{-1}||` for an H-matrix
/// with `0 <= Diag(M) <= e`.
pub fn lcp_chen_upper(lp: &LcpProblem, ns: &NormSpec) -> Result<f64> {
    const NAME: &str = "lcp_chen_upper";
    h_matrix_unit_diag(&lp.m, NAME)?;
    Ok(ns.induced(&dense::invert(&dense::comparison_matrix(&lp.m))?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PEquivalence {
    pub is_p_matrix: bool,
    pub transform_regular: bool,
}

impl PEquivalence {
    pub fn holds(&self) -> bool {
        self.is_p_matrix == self.transform_regular
    }
}

/// `M` is a P-matrix iff `[A - I, A + I]` is regular for `A = (M + I)(M - I)^{-1}`.
pub fn pmatrix_equivalence(m: &Matrix) -> Result<PEquivalence> {
    let a = transform_matrix(m)?;
    let is_p_matrix = dense::is_p_matrix(m)?;
    let transform_regular = regularity::regularity_exact(&a)?.verdict == Verdict::Regular;
    Ok(PEquivalence {
        is_p_matrix,
        transform_regular,
    })
}

pub fn pmatrix_equivalence_check(m: &Matrix) -> Result<bool> {
    pmatrix_equivalence(m).map(|e| e.holds())
}
