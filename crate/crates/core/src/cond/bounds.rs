//! Upper bounds on `c(A)` at polynomial cost.

use super::{BoundMethod, CondKind, CondResult};
use crate::dense::{self, Matrix, NormSpec, PNorm};
use crate::error::{Error, Result};
use crate::tol;

fn rho_below(b: &Matrix, limit: f64, name: &'static str, what: &str) -> Result<f64> {
    match dense::spectral_radius(b) {
        Ok(rho) if rho < limit => Ok(rho),
        Ok(rho) => Err(Error::not_applicable(
            name,
            format!("{what} = {rho} is not less than {limit}"),
        )),
        Err(Error::NoConvergence { iterations }) => Err(Error::not_applicable(
            name,
            format!("{what} could not be resolved in {iterations} iterations"),
        )),
        Err(e) => Err(e),
    }
}

/// `c(A) <= ||A^{-1}|| / (1 - || |A^{-1}| ||)` for any monotone norm, when
/// `|| |A^{-1}| || < 1`.
pub fn cond_neumann_upper(a: &Matrix, ns: &NormSpec) -> Result<CondResult> {
    const NAME: &str = "cond_neumann_upper";
    a.square_dim(NAME)?;
    let inv = dense::invert(a)?;
    let m = ns.induced(&inv.abs());
    if m >= 1.0 - tol::current().strict_margin {
        return Err(Error::not_applicable(
            NAME,
            format!("|| |A^-1| || = {m} is not less than 1"),
        ));
    }
    Ok(CondResult::new(
        ns.induced(&inv) / (1.0 - m),
        BoundMethod::NeumannMonotone,
        CondKind::UpperBound,
        None,
        ns.clone(),
    ))
}

/// Inverse interval enclosure bound `|| max(|B1|, |B2|) ||_inf`, valid when
/// `rho(|A^{-1}|) < 1`, with `H = (I - |A^{-1}|)^{-1}`,
/// `T = (2 diag(Diag(H)) - I)^{-1}` and
///
/// ```text
/// B1 = min(-H|A^-1| + T(A^-1 + |A^-1|), T(-H|A^-1| + T(A^-1 + |A^-1|)))
/// B2 = max( H|A^-1| + T(A^-1 - |A^-1|), T( H|A^-1| + T(A^-1 - |A^-1|)))
/// ```
pub fn cond_enclosure_inf(a: &Matrix) -> Result<CondResult> {
    const NAME: &str = "cond_enclosure_inf";
    let n = a.square_dim(NAME)?;
    let inv = dense::invert(a)?;
    let p = inv.abs();
    rho_below(&p, 1.0 - tol::current().strict_margin, NAME, "rho(|A^-1|)")?;
    let h = dense::invert(&Matrix::identity(n).sub(&p))?;
    let t = Matrix::from_diag(&h.diagonal().iter().map(|v| 1.0 / (2.0 * v - 1.0)).collect::<Vec<_>>());
    let hp = h.mul(&p);

    let lo_inner = hp.scale(-1.0).add(&t.mul(&inv.add(&p)));
    let b1 = lo_inner.min_entrywise(&t.mul(&lo_inner));
    let hi_inner = hp.add(&t.mul(&inv.sub(&p)));
    let b2 = hi_inner.max_entrywise(&t.mul(&hi_inner));
    let value = b1.abs().max_entrywise(&b2.abs()).norm_inf();
    Ok(CondResult::new(
        value,
        BoundMethod::EnclosureInf,
        CondKind::UpperBound,
        None,
        NormSpec::INF,
    ))
}

/// `c(A) <= 1 / alpha` in the norm `||diag(r)^{-1} x||_inf`, where
/// `alpha = min_i |A_ii| - 1 - r_i^{-1} sum_{j != i} r_j |A_ij| > 0`.
pub fn cond_scaled_dd(a: &Matrix, r: &[f64]) -> Result<CondResult> {
    const NAME: &str = "cond_scaled_dd";
    let n = a.square_dim(NAME)?;
    if r.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "weight vector has length {}, matrix is {n}x{n}",
            r.len()
        )));
    }
    let inv_r: Vec<f64> = r.iter().map(|v| 1.0 / v).collect();
    let norm = NormSpec::scaled(PNorm::Inf, inv_r)?;
    let alpha = (0..n)
        .map(|i| {
            let off: f64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| r[j] * a[(i, j)].abs())
                .sum();
            a[(i, i)].abs() - 1.0 - off / r[i]
        })
        .fold(f64::INFINITY, f64::min);
    if alpha <= tol::current().strict_margin {
        return Err(Error::not_applicable(
            NAME,
            format!("alpha = {alpha} is not positive"),
        ));
    }
    Ok(CondResult::new(
        1.0 / alpha,
        BoundMethod::ScaledInfDiagDom {
            r: r.to_vec(),
            alpha,
        },
        CondKind::UpperBound,
        None,
        norm,
    ))
}

/// `c_inf(A) <= 1 / (alpha - 1)` with `alpha = min_i |A_ii| - sum_{j != i} |A_ij|`.
pub fn row_dd_inf(a: &Matrix) -> Result<CondResult> {
    let n = a.square_dim("row_dd_inf")?;
    let r = cond_scaled_dd(a, &vec![1.0; n]).map_err(|e| match e {
        Error::NotApplicable { reason, .. } => Error::not_applicable("row_dd_inf", reason),
        e => e,
    })?;
    let BoundMethod::ScaledInfDiagDom { alpha, .. } = r.method else {
        unreachable!()
    };
    Ok(CondResult::new(
        r.value(),
        BoundMethod::RowDiagDomInf { alpha: alpha + 1.0 },
        CondKind::UpperBound,
        None,
        NormSpec::INF,
    ))
}

/// `c_1(A) <= 1 / (beta - 1)` with the column version of `alpha`, via
/// `c_1(A) = c_inf(A^T)`.
pub fn col_dd_1(a: &Matrix) -> Result<CondResult> {
    let r = row_dd_inf(&a.transpose()).map_err(|e| match e {
        Error::NotApplicable { reason, .. } => Error::not_applicable("col_dd_1", reason),
        e => e,
    })?;
    let BoundMethod::RowDiagDomInf { alpha } = r.method else {
        unreachable!()
    };
    Ok(CondResult::new(
        r.value(),
        BoundMethod::ColDiagDom1 { beta: alpha },
        CondKind::UpperBound,
        None,
        NormSpec::ONE,
    ))
}

/// Result of [`cond_scaled1_gamma`].
#[derive(Debug, Clone, PartialEq)]
pub struct Scaled1Gamma {
    /// `gamma / (1 - gamma)` in the norm `v^T |x|`.
    pub result: CondResult,
    /// Positive weights with `v_1 = 1`.
    pub v: Vec<f64>,
    pub tau: f64,
}

/// Scaled 1-norm bound `gamma / (1 - gamma)` for `rho(|A^{-1}|) < gamma < 1`.
///
/// Builds `B = |A^{-1}| + tau e e^T` with `rho(B) = gamma` (bisection on
/// `tau`, keeping the side with `rho(B) <= gamma`) and weights `v` from the
/// left Perron vector, `v^T B = gamma v^T`. Then `v^T |x - x*| <=
/// gamma / (1 - gamma) v^T |Ax - b - |x||` for every `x`.
pub fn cond_scaled1_gamma(a: &Matrix, gamma: f64) -> Result<Scaled1Gamma> {
    const NAME: &str = "cond_scaled1_gamma";
    let n = a.square_dim(NAME)?;
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::not_applicable(
            NAME,
            format!("gamma = {gamma} is not in (0, 1)"),
        ));
    }
    let t = tol::current();
    let p = dense::invert(a)?.abs();
    rho_below(&p, gamma, NAME, "rho(|A^-1|)")?;

    let bumped = |tau: f64| p.map(|v| v + tau);
    let (mut lo, mut hi) = (0.0, gamma / n as f64);
    while hi - lo > t.bisection {
        let mid = 0.5 * (lo + hi);
        if dense::spectral_radius(&bumped(mid))? <= gamma {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let b = bumped(lo);
    let left = dense::spectral_radius_nonneg(&b.transpose())?;
    let v: Vec<f64> = left.vector.iter().map(|x| x / left.vector[0]).collect();
    let norm = NormSpec::scaled(PNorm::One, v.clone())?;
    Ok(Scaled1Gamma {
        result: CondResult::new(
            gamma / (1.0 - gamma),
            BoundMethod::ScaledOneNormGamma {
                gamma,
                tau: lo,
                v: v.clone(),
            },
            CondKind::UpperBound,
            None,
            norm,
        ),
        v,
        tau: lo,
    })
}
