//! Closed forms for symmetric, diagonally dominant, inverse-nonnegative and
//! H-matrices, and the sigma_min bound.

use super::{BoundMethod, CondKind, CondResult};
use crate::dense::{self, Matrix, NormSpec};
use crate::error::{Error, Result};
use crate::tol;

/// `c_2(A) = 1 / (sigma_min(A) - 1)` for symmetric `A` with `sigma_min > 1`.
///
/// Attained at `d = sgn(lambda) e` for the eigenvalue `lambda` of smallest
/// modulus.
pub fn cond_symmetric2(a: &Matrix) -> Result<CondResult> {
    const NAME: &str = "cond_symmetric2";
    a.square_dim(NAME)?;
    let t = tol::current();
    if a.asymmetry() > t.symmetric {
        return Err(Error::not_applicable(NAME, "matrix is not symmetric"));
    }
    let eig = dense::symmetric_eigen(a);
    let lambda = eig
        .values
        .iter()
        .copied()
        .min_by(|x, y| x.abs().total_cmp(&y.abs()))
        .unwrap_or(0.0);
    let smin = lambda.abs();
    if smin <= 1.0 + t.strict_margin {
        return Err(Error::not_applicable(
            NAME,
            format!("sigma_min(A) = {smin} is not greater than 1"),
        ));
    }
    let s: i8 = if lambda < 0.0 { -1 } else { 1 };
    Ok(CondResult::new(
        1.0 / (smin - 1.0),
        BoundMethod::Symmetric2,
        CondKind::Exact,
        Some(vec![s; a.rows()]),
        NormSpec::TWO,
    ))
}

/// `c_2(A) <= 1 / (sigma_min(A) - 1)` whenever `sigma_min(A) > 1`.
pub fn cond_sigma_upper(a: &Matrix) -> Result<CondResult> {
    const NAME: &str = "cond_sigma_upper";
    a.square_dim(NAME)?;
    let smin = dense::sigma_min(a);
    if smin <= 1.0 + tol::current().strict_margin {
        return Err(Error::not_applicable(
            NAME,
            format!("sigma_min(A) = {smin} is not greater than 1"),
        ));
    }
    Ok(CondResult::new(
        1.0 / (smin - 1.0),
        BoundMethod::SigmaMin2,
        CondKind::UpperBound,
        None,
        NormSpec::TWO,
    ))
}

/// Result of [`cond_diagdom2`].
#[derive(Debug, Clone, PartialEq)]
pub struct DiagDom2 {
    /// `||(B - diag(sgn(Diag(B))))^{-1}||_2`.
    pub vertex: CondResult,
    /// `1 / (alpha - 1)`.
    pub companion: CondResult,
    pub alpha: f64,
}

/// Two-norm quantities for `B = A P` with
/// `alpha = min_i |B_ii| - (r_i(B) + cl_i(B)) / 2 > 1`, where `r_i` and `cl_i`
/// are the off-diagonal absolute row and column sums.
///
/// `vertex` evaluates `||(B - diag(d))^{-1}||_2` at `d = sgn(Diag(B))`. It is
/// reported as a lower bound on `c_2(B)`: the maximum over vertices is not
/// always attained there once `alpha` is close to 1 (for example
/// `A = [[4.034, -0.523], [0.86, 1.843]]` attains at `d = (-1, 1)`).
/// `companion` is the upper bound `1 / (alpha - 1)`.
///
/// All values refer to `B`, not `A`; for `P != I`, `c_2(AP)` and `c_2(A)`
/// generally differ.
pub fn cond_diagdom2(a: &Matrix, permutation: Option<&[usize]>) -> Result<DiagDom2> {
    const NAME: &str = "cond_diagdom2";
    let n = a.square_dim(NAME)?;
    let b = match permutation {
        Some(p) => {
            let mut seen = vec![false; n];
            if p.len() != n || !p.iter().all(|&j| j < n && !std::mem::replace(&mut seen[j], true)) {
                return Err(Error::InvalidArgument(format!(
                    "{p:?} is not a permutation of 0..{n}"
                )));
            }
            a.permute_cols(p)
        }
        None => a.clone(),
    };
    let alpha = (0..n)
        .map(|i| {
            let off_row: f64 = (0..n).filter(|&j| j != i).map(|j| b[(i, j)].abs()).sum();
            let off_col: f64 = (0..n).filter(|&j| j != i).map(|j| b[(j, i)].abs()).sum();
            b[(i, i)].abs() - 0.5 * (off_row + off_col)
        })
        .fold(f64::INFINITY, f64::min);
    if alpha <= 1.0 + tol::current().strict_margin {
        return Err(Error::not_applicable(
            NAME,
            format!("alpha = {alpha} is not greater than 1"),
        ));
    }
    let d: Vec<i8> = b
        .diagonal()
        .iter()
        .map(|&v| if v < 0.0 { -1 } else { 1 })
        .collect();
    let perm = permutation.map(<[usize]>::to_vec);
    let value = NormSpec::TWO.inverse_norm(&b.sub_signs(&d));
    Ok(DiagDom2 {
        vertex: CondResult::new(
            value,
            BoundMethod::DiagDom2 {
                permutation: perm.clone(),
                alpha,
            },
            CondKind::LowerBound,
            Some(d),
            NormSpec::TWO,
        ),
        companion: CondResult::new(
            1.0 / (alpha - 1.0),
            BoundMethod::DiagDom2Companion {
                permutation: perm,
                alpha,
            },
            CondKind::UpperBound,
            None,
            NormSpec::TWO,
        ),
        alpha,
    })
}

fn ones_row_sum_max(m: &Matrix) -> f64 {
    let n = m.rows();
    m.mul_vec(&vec![1.0; n])
        .iter()
        .fold(0.0, |acc, v| acc.max(v.abs()))
}

/// `c_inf(A) = ||(A - I)^{-1} e||_inf` when `(A - I)^{-1} >= 0` and
/// `(A + I)^{-1} >= 0`, or when `A` is an M-matrix with `rho(A^{-1}) < 1`.
/// The maximum is attained at `d = e`.
pub fn cond_inv_nonneg_inf(a: &Matrix) -> Result<CondResult> {
    const NAME: &str = "cond_inv_nonneg_inf";
    let n = a.square_dim(NAME)?;
    let t = tol::current();
    let ones = vec![1.0; n];
    let shifted_inverses = (
        dense::invert(&a.sub_diag(&ones)),
        dense::invert(&a.add_diag(&ones)),
    );
    let method = match shifted_inverses {
        (Ok(lo), Ok(hi)) if lo.all_nonneg(t.nonneg_slack) && hi.all_nonneg(t.nonneg_slack) => {
            BoundMethod::InvNonnegInf
        }
        _ if dense::is_m_matrix(a) => {
            let inv = dense::invert(a)?;
            match dense::spectral_radius(&inv.abs()) {
                Ok(rho) if rho < 1.0 - t.strict_margin => BoundMethod::MmatrixInf,
                Ok(rho) => {
                    return Err(Error::not_applicable(
                        NAME,
                        format!("M-matrix with rho(A^-1) = {rho} >= 1"),
                    ))
                }
                Err(e) => return Err(Error::not_applicable(NAME, e.to_string())),
            }
        }
        _ => {
            return Err(Error::not_applicable(
                NAME,
                "(A - I)^-1 or (A + I)^-1 has negative entries and A is not an M-matrix",
            ))
        }
    };
    let lo = dense::invert(&a.sub_diag(&ones))?;
    Ok(CondResult::new(
        ones_row_sum_max(&lo),
        method,
        CondKind::Exact,
        Some(vec![1; n]),
        NormSpec::INF,
    ))
}

/// `c_inf(A) <= ||(<A> - I)^{-1} e||_inf` for an H-matrix with
/// `rho(<A>^{-1}) < 1`.
pub fn cond_hmatrix_inf(a: &Matrix) -> Result<CondResult> {
    const NAME: &str = "cond_hmatrix_inf";
    let n = a.square_dim(NAME)?;
    let t = tol::current();
    if !dense::is_h_matrix(a) {
        return Err(Error::not_applicable(NAME, "A is not an H-matrix"));
    }
    let c = dense::comparison_matrix(a);
    let cinv = dense::invert(&c)?;
    match dense::spectral_radius(&cinv.abs()) {
        Ok(rho) if rho < 1.0 - t.strict_margin => {}
        Ok(rho) => {
            return Err(Error::not_applicable(
                NAME,
                format!("rho(<A>^-1) = {rho} is not less than 1"),
            ))
        }
        Err(e) => return Err(Error::not_applicable(NAME, e.to_string())),
    }
    let shifted = dense::invert(&c.sub_diag(&vec![1.0; n]))?;
    Ok(CondResult::new(
        ones_row_sum_max(&shifted),
        BoundMethod::HmatrixInf,
        CondKind::UpperBound,
        None,
        NormSpec::INF,
    ))
}
