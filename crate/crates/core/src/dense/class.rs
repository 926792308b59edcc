//! Comparison matrix and the M-, H- and P-matrix predicates.

use serde::Serialize;

use super::{lu, Matrix};
use crate::error::{Error, Result};
use crate::tol;

/// Largest dimension for which principal minors are enumerated.
pub const P_MATRIX_MAX_DIM: usize = 12;

/// `<A>`: `|a_ii|` on the diagonal, `-|a_ij|` off it.
pub fn comparison_matrix(a: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        if i == j {
            a[(i, j)].abs()
        } else {
            -a[(i, j)].abs()
        }
    })
}

pub fn is_symmetric(a: &Matrix) -> bool {
    a.is_square() && a.asymmetry() <= tol::current().symmetric
}

/// Nonsingular with entrywise nonnegative inverse.
pub fn is_inverse_nonnegative(a: &Matrix) -> bool {
    lu::invert(a).is_ok_and(|inv| inv.all_nonneg(tol::current().nonneg_slack))
}

/// Nonpositive off-diagonal entries and a nonnegative inverse.
pub fn is_m_matrix(a: &Matrix) -> bool {
    if !a.is_square() {
        return false;
    }
    let n = a.rows();
    let z_pattern = (0..n).all(|i| (0..n).all(|j| i == j || a[(i, j)] <= 0.0));
    z_pattern && is_inverse_nonnegative(a)
}

/// The comparison matrix is an M-matrix.
pub fn is_h_matrix(a: &Matrix) -> bool {
    is_m_matrix(&comparison_matrix(a))
}

/// Every principal minor exceeds the positivity threshold. Enumerates all
/// `2^n - 1` minors, so `n` is capped at [`P_MATRIX_MAX_DIM`].
pub fn is_p_matrix(a: &Matrix) -> Result<bool> {
    let n = a.square_dim("is_p_matrix")?;
    if n > P_MATRIX_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            limit: P_MATRIX_MAX_DIM,
            what: "P-matrix test",
        });
    }
    let eps = tol::current().minor_positive;
    for mask in 1u32..(1u32 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub = Matrix::from_fn(idx.len(), idx.len(), |r, c| a[(idx[r], idx[c])]);
        if lu::det(&sub) <= eps {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatrixClass {
    pub is_symmetric: bool,
    pub is_m_matrix: bool,
    pub is_h_matrix: bool,
    pub is_p_matrix: bool,
    pub is_inverse_nonnegative: bool,
}

/// All class flags at once. Fails for `n > 12` because of the P-matrix test.
pub fn classify(a: &Matrix) -> Result<MatrixClass> {
    a.square_dim("classify")?;
    let is_p_matrix = is_p_matrix(a)?;
    Ok(MatrixClass {
        is_symmetric: is_symmetric(a),
        is_m_matrix: is_m_matrix(a),
        is_h_matrix: is_h_matrix(a),
        is_p_matrix,
        is_inverse_nonnegative: is_inverse_nonnegative(a),
    })
}
