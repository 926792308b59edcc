//! The condition number `c(A) = max_{||d||_inf <= 1} ||(A - diag(d))^{-1}||`.
//!
//! [`cond_exact`] enumerates the vertices `|d| = e`, where the maximum is
//! attained. The remaining routines are closed forms for structured classes
//! (kind `Exact`) and polynomial-cost bounds (kind `UpperBound`).

mod bounds;
mod closed;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use bounds::{
    col_dd_1, cond_enclosure_inf, cond_neumann_upper, cond_scaled1_gamma, cond_scaled_dd,
    row_dd_inf, Scaled1Gamma,
};
pub use closed::{
    cond_diagdom2, cond_hmatrix_inf, cond_inv_nonneg_inf, cond_sigma_upper, cond_symmetric2,
    DiagDom2,
};

use crate::dense::{Lu, Matrix, NormSpec, PNorm};
use crate::error::{Error, Result};
use crate::{tol, vertex};

/// A nonnegative value or the infinity marker of a non-regular matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CondValue {
    Finite(f64),
    Infinite,
}

impl CondValue {
    fn from_f64(v: f64) -> Self {
        if v.is_finite() {
            CondValue::Finite(v)
        } else {
            CondValue::Infinite
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            CondValue::Finite(v) => v,
            CondValue::Infinite => f64::INFINITY,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, CondValue::Finite(_))
    }
}

impl Serialize for CondValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CondValue::Finite(v) => s.serialize_f64(*v),
            CondValue::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CondKind {
    Exact,
    UpperBound,
    /// The value of one member `||(A - diag(d))^{-1}||`, hence `<= c(A)`.
    LowerBound,
    NotApplicable,
}

/// Which formula produced a value, with the parameters it used.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "tag", content = "params")]
pub enum BoundMethod {
    VertexEnum,
    Symmetric2,
    DiagDom2 {
        permutation: Option<Vec<usize>>,
        alpha: f64,
    },
    DiagDom2Companion {
        permutation: Option<Vec<usize>>,
        alpha: f64,
    },
    InvNonnegInf,
    MmatrixInf,
    HmatrixInf,
    NeumannMonotone,
    SigmaMin2,
    EnclosureInf,
    ScaledInfDiagDom {
        r: Vec<f64>,
        alpha: f64,
    },
    RowDiagDomInf {
        alpha: f64,
    },
    ColDiagDom1 {
        beta: f64,
    },
    ScaledOneNormGamma {
        gamma: f64,
        tau: f64,
        v: Vec<f64>,
    },
    LcpMmatrix,
    LcpHmatrix,
    Relative {
        base: Box<BoundMethod>,
    },
}

impl BoundMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundMethod::VertexEnum => "VertexEnum",
            BoundMethod::Symmetric2 => "Symmetric2",
            BoundMethod::DiagDom2 { .. } => "DiagDom2",
            BoundMethod::DiagDom2Companion { .. } => "DiagDom2Companion",
            BoundMethod::InvNonnegInf => "InvNonnegInf",
            BoundMethod::MmatrixInf => "MmatrixInf",
            BoundMethod::HmatrixInf => "HmatrixInf",
            BoundMethod::NeumannMonotone => "NeumannMonotone",
            BoundMethod::SigmaMin2 => "SigmaMin2",
            BoundMethod::EnclosureInf => "EnclosureInf",
            BoundMethod::ScaledInfDiagDom { .. } => "ScaledInfDiagDom",
            BoundMethod::RowDiagDomInf { .. } => "RowDiagDomInf",
            BoundMethod::ColDiagDom1 { .. } => "ColDiagDom1",
            BoundMethod::ScaledOneNormGamma { .. } => "ScaledOneNormGamma",
            BoundMethod::LcpMmatrix => "LcpMmatrix",
            BoundMethod::LcpHmatrix => "LcpHmatrix",
            BoundMethod::Relative { .. } => "Relative",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CondResult {
    pub value: CondValue,
    pub method: BoundMethod,
    pub kind: CondKind,
    /// Sign vector attaining the value; present for vertex-based results.
    pub witness: Option<Vec<i8>>,
    pub norm: NormSpec,
}

impl CondResult {
    pub(crate) fn new(
        value: f64,
        method: BoundMethod,
        kind: CondKind,
        witness: Option<Vec<i8>>,
        norm: NormSpec,
    ) -> Self {
        Self {
            value: CondValue::from_f64(value),
            method,
            kind,
            witness,
            norm,
        }
    }

    pub fn value(&self) -> f64 {
        self.value.as_f64()
    }

    pub fn is_certifying(&self) -> bool {
        matches!(self.kind, CondKind::Exact | CondKind::UpperBound)
    }
}

impl Serialize for CondResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(5))?;
        m.serialize_entry("value", &self.value)?;
        m.serialize_entry("kind", &self.kind)?;
        m.serialize_entry("method", self.method.tag())?;
        m.serialize_entry("method_params", &self.method)?;
        m.serialize_entry("witness", &self.witness)?;
        m.serialize_entry("norm", &self.norm)?;
        m.end()
    }
}

/// `c(A)` by enumerating all `2^n` vertices (`n <= 20`).
///
/// Regularity is checked from the same factorizations; a determinant that
/// vanishes or changes sign yields `NotRegular` with that vertex as witness.
/// Ties in the maximum go to the earliest vertex in enumeration order.
pub fn cond_exact(a: &Matrix, ns: &NormSpec) -> Result<CondResult> {
    let n = a.square_dim("cond_exact")?;
    vertex::check_dim(n, "vertex enumeration")?;
    let thr = tol::current().det_zero * a.norm_inf().powi(n as i32);
    let evals = vertex::map_all(n, |d| {
        let m = a.sub_signs(d);
        let det = Lu::factor(&m).det();
        (det, ns.inverse_norm(&m))
    });
    let s0 = evals[0].0.signum();
    if let Some(k) = evals
        .iter()
        .position(|&(det, _)| det.abs() <= thr || det.signum() != s0)
    {
        return Err(Error::NotRegular {
            witness: vertex::vertex(n, k),
        });
    }
    let values: Vec<f64> = evals.iter().map(|e| e.1).collect();
    let k = vertex::argmax(&values);
    Ok(CondResult::new(
        values[k],
        BoundMethod::VertexEnum,
        CondKind::Exact,
        Some(vertex::vertex(n, k)),
        ns.clone(),
    ))
}

/// `max_{||d||_inf <= 1} ||A - diag(d)||` and whether the value is exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftedNorm {
    pub value: f64,
    pub exact: bool,
}

/// For the 1- and inf-norms (scaled or not) the maximum is `|| |A| + I ||`.
/// For the 2-norm `||A||_2 + 1` is returned, exact when `D A D^{-1}` is
/// symmetric.
pub fn max_shifted_norm(a: &Matrix, ns: &NormSpec) -> ShiftedNorm {
    let n = a.rows();
    match ns.p {
        PNorm::One | PNorm::Inf => ShiftedNorm {
            value: ns.induced(&a.abs().add(&Matrix::identity(n))),
            exact: true,
        },
        PNorm::Two => {
            let conj = match &ns.scaling {
                Some(d) => {
                    let inv: Vec<f64> = d.iter().map(|v| 1.0 / v).collect();
                    a.scale_rows_cols(d, &inv)
                }
                None => a.clone(),
            };
            ShiftedNorm {
                value: ns.induced(a) + 1.0,
                exact: conj.asymmetry() <= tol::current().symmetric,
            }
        }
    }
}

/// Relative condition number `c*(A) = c(A) max_{||d||_inf <= 1} ||A - diag(d)||`.
pub fn cond_relative(a: &Matrix, ns: &NormSpec, base: &CondResult) -> Result<CondResult> {
    if !base.is_certifying() {
        return Err(Error::not_applicable(
            "cond_relative",
            format!("base result of kind {:?} does not bound c(A) from above", base.kind),
        ));
    }
    if base.norm != *ns {
        return Err(Error::InvalidArgument(
            "base condition number was computed in a different norm".into(),
        ));
    }
    let shifted = max_shifted_norm(a, ns);
    let kind = if base.kind == CondKind::Exact && shifted.exact {
        CondKind::Exact
    } else {
        CondKind::UpperBound
    };
    Ok(CondResult::new(
        base.value() * shifted.value,
        BoundMethod::Relative {
            base: Box::new(base.method.clone()),
        },
        kind,
        base.witness.clone(),
        ns.clone(),
    ))
}

/// Default dimension up to which [`cond_auto`] falls back to enumeration.
pub const DEFAULT_ENUM_THRESHOLD: usize = 14;

fn exact_closed_forms(a: &Matrix, ns: &NormSpec) -> Option<CondResult> {
    let candidates: Vec<Result<CondResult>> = match (ns.p, ns.is_plain()) {
        (PNorm::Two, true) => vec![cond_symmetric2(a)],
        (PNorm::Inf, true) => vec![cond_inv_nonneg_inf(a)],
        _ => Vec::new(),
    };
    candidates.into_iter().find_map(|r| r.ok())
}

/// Every upper bound applicable to `(A, ns)`, in the order they are tried.
pub fn applicable_upper_bounds(a: &Matrix, ns: &NormSpec) -> Vec<CondResult> {
    let mut tries: Vec<Result<CondResult>> = Vec::new();
    if ns.is_plain() {
        match ns.p {
            PNorm::Inf => {
                tries.push(cond_hmatrix_inf(a));
                tries.push(row_dd_inf(a));
                tries.push(cond_enclosure_inf(a));
            }
            PNorm::One => tries.push(col_dd_1(a)),
            PNorm::Two => {}
        }
    }
    tries.push(cond_neumann_upper(a, ns));
    if ns.p == PNorm::Two && ns.is_plain() {
        tries.push(cond_sigma_upper(a));
    }
    tries.into_iter().filter_map(|r| r.ok()).collect()
}

/// Method selection for callers that do not name one.
///
/// 1. An exact closed form for the class of `A` (symmetric 2-norm,
///    inverse-nonnegative or M-matrix inf-norm).
/// 2. Vertex enumeration when `n <= enum_threshold`.
/// 3. The smallest applicable upper bound (class bounds, Neumann, sigma_min).
pub fn cond_auto(a: &Matrix, ns: &NormSpec, enum_threshold: usize) -> Result<CondResult> {
    let n = a.square_dim("cond_auto")?;
    if let Some(r) = exact_closed_forms(a, ns) {
        return Ok(r);
    }
    if n <= enum_threshold.min(vertex::MAX_ENUM_DIM) {
        return cond_exact(a, ns);
    }
    applicable_upper_bounds(a, ns)
        .into_iter()
        .min_by(|x, y| x.value().total_cmp(&y.value()))
        .ok_or_else(|| {
            Error::not_applicable(
                "auto",
                format!("no closed form or bound applies and n = {n} exceeds the enumeration threshold"),
            )
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn exact_three_i_all_norms() {
        let a = Matrix::identity(2).scale(3.0);
        for ns in [NormSpec::ONE, NormSpec::TWO, NormSpec::INF] {
            let r = cond_exact(&a, &ns).unwrap();
            assert!(close(r.value(), 0.5, 1e-14), "{ns:?} {r:?}");
            assert_eq!(r.witness, Some(vec![1, 1]));
            assert_eq!(r.kind, CondKind::Exact);
        }
    }

    #[test]
    fn exact_two_norm_example() {
        let a = Matrix::from_rows(&[[2.0, 1.0], [-2.0, 1.0]]);
        let r = cond_exact(&a, &NormSpec::TWO).unwrap();
        let want = 1.0 / (7.0 - 45f64.sqrt()).sqrt();
        assert!(close(r.value(), want, 1e-12), "{} vs {want}", r.value());
        assert!((r.value() - 1.8512).abs() < 1e-4);
        assert_eq!(r.witness, Some(vec![-1, 1]));
    }

    #[test]
    fn exact_inf_norm_example() {
        let a = Matrix::from_rows(&[[1.0, -4.0], [-4.0, 1.0]]);
        let r = cond_exact(&a, &NormSpec::INF).unwrap();
        assert!(close(r.value(), 0.5, 1e-14));
        assert_eq!(r.witness, Some(vec![-1, -1]));
    }

    #[test]
    fn exact_rejects_non_regular() {
        let r = cond_exact(&Matrix::identity(2), &NormSpec::INF);
        assert_eq!(r, Err(Error::NotRegular { witness: vec![1, 1] }));
        let big = Matrix::identity(21).scale(3.0);
        assert!(matches!(
            cond_exact(&big, &NormSpec::INF),
            Err(Error::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn max_shifted_examples() {
        let a = Matrix::from_rows(&[[2.0, 1.0], [-2.0, 1.0]]);
        assert_eq!(max_shifted_norm(&a, &NormSpec::INF).value, 4.0);
        assert_eq!(max_shifted_norm(&Matrix::identity(2), &NormSpec::ONE).value, 2.0);
        let s = max_shifted_norm(&Matrix::from_rows(&[[3.0, -1.0], [-1.0, 3.0]]), &NormSpec::TWO);
        assert!(close(s.value, 5.0, 1e-14) && s.exact);
        assert!(!max_shifted_norm(&a, &NormSpec::TWO).exact);
    }

    #[test]
    fn relative_examples() {
        for (a, want) in [
            (Matrix::identity(2).scale(3.0), 2.0),
            (Matrix::from_rows(&[[3.0, -1.0], [-1.0, 3.0]]), 5.0),
            (Matrix::from_rows(&[[1.0, -4.0], [-4.0, 1.0]]), 3.0),
        ] {
            let base = cond_exact(&a, &NormSpec::INF).unwrap();
            let r = cond_relative(&a, &NormSpec::INF, &base).unwrap();
            assert!(close(r.value(), want, 1e-14), "{r:?}");
            assert_eq!(r.kind, CondKind::Exact);
        }
    }

    #[test]
    fn relative_inherits_upper_bound() {
        let a = Matrix::identity(2).scale(3.0);
        let base = cond_neumann_upper(&a, &NormSpec::INF).unwrap();
        let r = cond_relative(&a, &NormSpec::INF, &base).unwrap();
        assert_eq!(r.kind, CondKind::UpperBound);
        let wrong_norm = cond_relative(&a, &NormSpec::ONE, &base);
        assert!(matches!(wrong_norm, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn auto_prefers_exact_closed_form() {
        let a = Matrix::from_rows(&[[3.0, -1.0], [-1.0, 3.0]]);
        let r = cond_auto(&a, &NormSpec::INF, DEFAULT_ENUM_THRESHOLD).unwrap();
        assert_eq!(r.method, BoundMethod::InvNonnegInf);
        let r = cond_auto(&a, &NormSpec::ONE, DEFAULT_ENUM_THRESHOLD).unwrap();
        assert_eq!(r.method, BoundMethod::VertexEnum);
        let r = cond_auto(&a, &NormSpec::ONE, 1).unwrap();
        assert_eq!(r.kind, CondKind::UpperBound);
        assert!(r.value() >= 1.0 - 1e-12);
    }

    #[test]
    fn infinite_marker_serializes_as_string() {
        let r = CondResult::new(
            f64::INFINITY,
            BoundMethod::VertexEnum,
            CondKind::Exact,
            None,
            NormSpec::INF,
        );
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["value"], "inf");
        assert_eq!(j["method"], "VertexEnum");
    }
}
