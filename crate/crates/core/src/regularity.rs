//! Regularity of the interval matrix `[A - I, A + I]`.
//!
//! The interval matrix is regular iff every `A - diag(d)` with `|d| = e` has a
//! nonzero determinant of one common sign. That criterion is exhaustive and
//! costs `2^n` determinants; [`regularity_sufficient`] and
//! [`regularity_symmetric`] are the cheap alternatives.

use serde::Serialize;

use crate::dense::{self, vec_ops, Lu, Matrix};
use crate::error::{Error, Result};
use crate::{tol, vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Regular,
    NotRegular,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegularityMethod {
    VertexDeterminant,
    SigmaMin,
    SpectralRadiusInverse,
    SymmetricEigen,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularityReport {
    pub verdict: Verdict,
    pub method: RegularityMethod,
    /// Sign vector where the vertex determinant vanishes or changes sign.
    pub witness: Option<Vec<i8>>,
    /// The quantity the verdict was read from: smallest `|det|` for the
    /// vertex test, `sigma_min(A)`, `rho(|A^-1|)`, or `min |lambda_i|`.
    pub statistic: Option<f64>,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.verdict == Verdict::Regular
    }
}

fn vertex_dets(a: &Matrix) -> Vec<f64> {
    vertex::map_all(a.rows(), |d| Lu::factor(&a.sub_signs(d)).det())
}

fn det_threshold(a: &Matrix) -> f64 {
    let n = a.rows() as i32;
    tol::current().det_zero * a.norm_inf().powi(n)
}

/// First vertex whose determinant is zero or disagrees in sign with vertex 0.
fn first_offender(dets: &[f64], thr: f64) -> Option<usize> {
    let s0 = dets[0].signum();
    dets.iter()
        .position(|&v| v.abs() <= thr || v.signum() != s0)
}

/// Exact verdict from all `2^n` vertex determinants (`n <= 20`).
pub fn regularity_exact(a: &Matrix) -> Result<RegularityReport> {
    let n = a.square_dim("regularity_exact")?;
    vertex::check_dim(n, "vertex determinant test")?;
    let dets = vertex_dets(a);
    let thr = det_threshold(a);
    let min_abs = dets.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()));
    Ok(match first_offender(&dets, thr) {
        None => RegularityReport {
            verdict: Verdict::Regular,
            method: RegularityMethod::VertexDeterminant,
            witness: None,
            statistic: Some(min_abs),
        },
        Some(k) => RegularityReport {
            verdict: Verdict::NotRegular,
            method: RegularityMethod::VertexDeterminant,
            witness: Some(vertex::vertex(n, k)),
            statistic: Some(min_abs),
        },
    })
}

/// `Ok(())` when regular, `Err(NotRegular)` with the witness otherwise.
pub fn require_regular(a: &Matrix) -> Result<()> {
    let r = regularity_exact(a)?;
    match r.verdict {
        Verdict::Regular => Ok(()),
        _ => Err(Error::NotRegular {
            witness: r.witness.unwrap_or_default(),
        }),
    }
}

/// Sufficient conditions: `sigma_min(A) > 1`, then `rho(|A^-1|) < 1`.
/// Never answers `NotRegular`.
pub fn regularity_sufficient(a: &Matrix) -> Result<RegularityReport> {
    a.square_dim("regularity_sufficient")?;
    let margin = tol::current().strict_margin;
    let smin = dense::sigma_min(a);
    if smin > 1.0 + margin {
        return Ok(RegularityReport {
            verdict: Verdict::Regular,
            method: RegularityMethod::SigmaMin,
            witness: None,
            statistic: Some(smin),
        });
    }
    let inv = dense::invert(a)?;
    let (verdict, rho) = match dense::spectral_radius(&inv.abs()) {
        Ok(rho) if rho < 1.0 - margin => (Verdict::Regular, Some(rho)),
        Ok(rho) => (Verdict::Unknown, Some(rho)),
        Err(Error::NoConvergence { .. }) => (Verdict::Unknown, None),
        Err(e) => return Err(e),
    };
    Ok(RegularityReport {
        verdict,
        method: RegularityMethod::SpectralRadiusInverse,
        witness: None,
        statistic: rho,
    })
}

/// For symmetric `A`: regular iff every `|lambda_i(A)| > 1`.
///
/// The witness of a negative verdict is the sign pattern of the eigenvector
/// belonging to the eigenvalue of smallest modulus.
pub fn regularity_symmetric(a: &Matrix) -> Result<RegularityReport> {
    a.square_dim("regularity_symmetric")?;
    let t = tol::current();
    let asym = a.asymmetry();
    if asym > t.symmetric {
        return Err(Error::NotSymmetric { asymmetry: asym });
    }
    let eig = dense::symmetric_eigen(a);
    let (k, min_abs) = eig
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| (i, v.abs()))
        .fold((0, f64::INFINITY), |b, c| if c.1 < b.1 { c } else { b });
    if min_abs > 1.0 + t.strict_margin {
        return Ok(RegularityReport {
            verdict: Verdict::Regular,
            method: RegularityMethod::SymmetricEigen,
            witness: None,
            statistic: Some(min_abs),
        });
    }
    let witness = (0..a.rows())
        .map(|i| if eig.vectors[(i, k)] < 0.0 { -1 } else { 1 })
        .collect();
    Ok(RegularityReport {
        verdict: Verdict::NotRegular,
        method: RegularityMethod::SymmetricEigen,
        witness: Some(witness),
        statistic: Some(min_abs),
    })
}

/// A singular member `A - diag(t)`, `|t| <= e`, with a unit null vector.
#[derive(Debug, Clone)]
pub struct SingularMember {
    pub t: Vec<f64>,
    pub null_vector: Vec<f64>,
}

/// Locate a singular member of `[A - I, A + I]`, or `None` when regular.
///
/// The vertex determinant is affine in each coordinate of `d`, so walking
/// from vertex `e` toward the offending vertex one coordinate at a time finds
/// an edge on which the determinant crosses zero, and the crossing point is
/// computed in closed form.
pub fn singular_member(a: &Matrix) -> Result<Option<SingularMember>> {
    let n = a.square_dim("singular_member")?;
    vertex::check_dim(n, "vertex determinant test")?;
    let dets = vertex_dets(a);
    let thr = det_threshold(a);
    let Some(k) = first_offender(&dets, thr) else {
        return Ok(None);
    };
    let det_at = |t: &[f64]| Lu::factor(&a.sub_diag(t)).det();

    let target = vertex::to_f64(&vertex::vertex(n, k));
    let mut t = vec![1.0; n];
    let mut f0 = dets[0];
    if dets[k].abs() <= thr {
        t = target;
    } else {
        for i in 0..n {
            if t[i] == target[i] {
                continue;
            }
            let mut next = t.clone();
            next[i] = target[i];
            let f1 = det_at(&next);
            if f1.signum() != f0.signum() || f1.abs() <= thr {
                // det(s) = f0 + (s - t_i) (f1 - f0) / (target_i - t_i)
                let s = t[i] - f0 * (target[i] - t[i]) / (f1 - f0);
                t[i] = s.clamp(-1.0, 1.0);
                break;
            }
            t = next;
            f0 = f1;
        }
    }
    let svd = dense::svd(&a.sub_diag(&t));
    let y = svd.min_vector();
    let norm = vec_ops::norm_two(&y);
    Ok(Some(SingularMember {
        t,
        null_vector: vec_ops::scale(&y, 1.0 / norm),
    }))
}
