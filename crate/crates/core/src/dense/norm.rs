//! Vector p-norms with optional positive diagonal scaling, and the matrix
//! norms they induce.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{jacobi, vec_ops, Matrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PNorm {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "inf")]
    Inf,
}

impl fmt::Display for PNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PNorm::One => "1",
            PNorm::Two => "2",
            PNorm::Inf => "inf",
        })
    }
}

/// `||x|| = ||D x||_p` with `D = diag(scaling)`, or the plain p-norm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormSpec {
    pub p: PNorm,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scaling: Option<Vec<f64>>,
}

impl NormSpec {
    pub const ONE: NormSpec = NormSpec { p: PNorm::One, scaling: None };
    pub const TWO: NormSpec = NormSpec { p: PNorm::Two, scaling: None };
    pub const INF: NormSpec = NormSpec { p: PNorm::Inf, scaling: None };

    pub fn plain(p: PNorm) -> Self {
        Self { p, scaling: None }
    }

    /// Scaled norm; every scaling entry must be positive and finite.
    pub fn scaled(p: PNorm, scaling: Vec<f64>) -> Result<Self> {
        if scaling.is_empty() || scaling.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
            return Err(Error::InvalidArgument(
                "scaling entries must be positive and finite".into(),
            ));
        }
        Ok(Self { p, scaling: Some(scaling) })
    }

    pub fn is_plain(&self) -> bool {
        self.scaling.is_none()
    }

    fn check_dim(&self, n: usize) {
        if let Some(s) = &self.scaling {
            assert_eq!(s.len(), n, "scaling length does not match dimension");
        }
    }

    /// Vector norm `||D x||_p`.
    pub fn vector_norm(&self, x: &[f64]) -> f64 {
        self.check_dim(x.len());
        let scaled: Vec<f64>;
        let y = match &self.scaling {
            Some(d) => {
                scaled = x.iter().zip(d).map(|(a, b)| a * b).collect();
                &scaled[..]
            }
            None => x,
        };
        match self.p {
            PNorm::One => y.iter().map(|v| v.abs()).sum(),
            PNorm::Two => vec_ops::norm_two(y),
            PNorm::Inf => vec_ops::norm_inf(y),
        }
    }

    /// `D A D^{-1}`, or a borrowed `A` when unscaled.
    fn conjugate<'a>(&self, a: &'a Matrix) -> std::borrow::Cow<'a, Matrix> {
        match &self.scaling {
            Some(d) => {
                let inv: Vec<f64> = d.iter().map(|v| 1.0 / v).collect();
                std::borrow::Cow::Owned(a.scale_rows_cols(d, &inv))
            }
            None => std::borrow::Cow::Borrowed(a),
        }
    }

    /// Induced matrix norm `||D A D^{-1}||_p`.
    pub fn induced(&self, a: &Matrix) -> f64 {
        assert!(a.is_square(), "induced norm needs a square matrix");
        self.check_dim(a.rows());
        let c = self.conjugate(a);
        match self.p {
            PNorm::One => c.norm_one(),
            PNorm::Inf => c.norm_inf(),
            PNorm::Two => jacobi::sigma_max(&c),
        }
    }

    /// `||M^{-1}||` without forming the inverse when `p = 2`
    /// (`1 / sigma_min(D M D^{-1})`); +inf for singular `M`.
    pub fn inverse_norm(&self, m: &Matrix) -> f64 {
        self.check_dim(m.rows());
        match self.p {
            PNorm::Two => {
                let s = jacobi::sigma_min(&self.conjugate(m));
                if s == 0.0 {
                    f64::INFINITY
                } else {
                    1.0 / s
                }
            }
            _ => match super::invert(m) {
                Ok(inv) => self.induced(&inv),
                Err(_) => f64::INFINITY,
            },
        }
    }

    /// Short label used in reports, e.g. `inf` or `scaled-1`.
    pub fn label(&self) -> String {
        match self.scaling {
            None => self.p.to_string(),
            Some(_) => format!("scaled-{}", self.p),
        }
    }
}

/// Induced matrix norm of a square matrix.
pub fn induced_norm(a: &Matrix, ns: &NormSpec) -> f64 {
    ns.induced(a)
}
