//! A posteriori error bounds: `||x - x*|| <= c(A) ||Ax - b - |x|||` and the
//! relative sandwich through `c*(A)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ave::{self, AveProblem};
use crate::cond::{self, CondResult};
use crate::dense::{vec_ops, Matrix, NormSpec};
use crate::error::{Error, Result};
use crate::tol;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertReport {
    /// Bound on `||x - x*||`.
    pub abs_bound: f64,
    /// Bound on `||x - x*|| / ||x*||` from above.
    pub rel_bound_upper: Option<f64>,
    /// Bound on `||x - x*|| / ||x*||` from below.
    pub rel_bound_lower: Option<f64>,
    pub residual_norm: f64,
    pub cond_used: CondResult,
    /// `c*(A)` when relative bounds were computed.
    pub relative_cond: Option<CondResult>,
    pub norm: NormSpec,
}

fn check_cond(cond: &CondResult, ns: &NormSpec) -> Result<()> {
    if !cond.is_certifying() {
        return Err(Error::not_applicable(
            "certify",
            format!("a {:?} result does not bound the error", cond.kind),
        ));
    }
    if cond.norm != *ns {
        return Err(Error::InvalidArgument(
            "condition number was computed in a different norm".into(),
        ));
    }
    Ok(())
}

fn product(c: f64, r: f64) -> f64 {
    if r == 0.0 {
        0.0
    } else {
        c * r
    }
}

/// Absolute bound `cond.value * ||residual(x)||`.
pub fn certify_abs(p: &AveProblem, x: &[f64], ns: &NormSpec, cond: &CondResult) -> Result<CertReport> {
    check_cond(cond, ns)?;
    let residual_norm = ns.vector_norm(&ave::residual(p, x)?);
    Ok(CertReport {
        abs_bound: product(cond.value(), residual_norm),
        rel_bound_upper: None,
        rel_bound_lower: None,
        residual_norm,
        cond_used: cond.clone(),
        relative_cond: None,
        norm: ns.clone(),
    })
}

/// Relative bounds with the exact `c(A)` from vertex enumeration.
pub fn certify_rel(p: &AveProblem, x: &[f64], ns: &NormSpec) -> Result<CertReport> {
    let cond = cond::cond_exact(&p.a, ns)?;
    certify_rel_with(p, x, ns, &cond)
}

/// `||phi|| / (c* ||b||) <= ||x - x*|| / ||x*|| <= c* ||phi|| / ||b||` with
/// `c* = c(A) max_{||d||_inf <= 1} ||A - diag(d)||` built from `cond`.
pub fn certify_rel_with(
    p: &AveProblem,
    x: &[f64],
    ns: &NormSpec,
    cond: &CondResult,
) -> Result<CertReport> {
    let bnorm = ns.vector_norm(&p.b);
    if bnorm <= tol::current().zero_rhs {
        return Err(Error::ZeroRightHandSide);
    }
    let mut report = certify_abs(p, x, ns, cond)?;
    let rel = cond::cond_relative(&p.a, ns, cond)?;
    let ratio = report.residual_norm / bnorm;
    report.rel_bound_upper = Some(product(rel.value(), ratio));
    report.rel_bound_lower = Some(ratio / rel.value());
    report.relative_cond = Some(rel);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StabilityGap {
    /// `||X(A, b1) - X(A, b2)||`.
    pub gap: f64,
    /// `c(A) ||b1 - b2||`.
    pub bound: f64,
}

/// Lipschitz continuity of the solution map in `b`.
pub fn stability_gap(a: &Matrix, b1: &[f64], b2: &[f64], ns: &NormSpec) -> Result<StabilityGap> {
    let c = cond::cond_exact(a, ns)?;
    let x1 = ave::solve_exact(&AveProblem::new(a.clone(), b1.to_vec())?)?;
    let x2 = ave::solve_exact(&AveProblem::new(a.clone(), b2.to_vec())?)?;
    Ok(StabilityGap {
        gap: ns.vector_norm(&vec_ops::sub(&x1.x_star, &x2.x_star)),
        bound: product(c.value(), ns.vector_norm(&vec_ops::sub(b1, b2))),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeakSharp {
    pub passed: bool,
    /// Number of sampled points that were feasible and therefore tested.
    pub tested: usize,
    /// Smallest `e^T phi(x) - ||x - x*||_2 / c_2(A)` over tested points.
    pub worst_margin: f64,
}

/// Sample `samples` points from the box `x* +- 2 ||x*||_inf [-1, 1]^n`
/// (radius 1 when `x* = 0`), keep the feasible ones and check
/// `||x - x*||_2 / c_2(A) <= e^T (Ax - b - |x|)` with slack `1e-9`.
pub fn weak_sharp_check(p: &AveProblem, samples: usize, seed: u64) -> Result<WeakSharp> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let c2 = cond::cond_exact(&p.a, &NormSpec::TWO)?.value();
    let xs = ave::solve_exact(p)?.x_star;
    let radius = match 2.0 * vec_ops::norm_inf(&xs) {
        r if r > 0.0 => r,
        _ => 1.0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tested = 0;
    let mut worst = f64::INFINITY;
    for _ in 0..samples {
        let x: Vec<f64> = xs.iter().map(|v| v + radius * rng.gen_range(-1.0..=1.0)).collect();
        if !ave::concave_feasible(p, &x)? {
            continue;
        }
        tested += 1;
        let lhs = vec_ops::norm_two(&vec_ops::sub(&x, &xs)) / c2;
        let rhs: f64 = ave::residual(p, &x)?.iter().sum();
        worst = worst.min(rhs - lhs);
    }
    Ok(WeakSharp {
        passed: worst >= -1e-9,
        tested,
        worst_margin: worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cond::{cond_exact, cond_neumann_upper};

    fn three_i() -> AveProblem {
        AveProblem::new(Matrix::identity(2).scale(3.0), vec![1.0, 1.0]).unwrap()
    }

    #[test]
    fn abs_examples() {
        let p = three_i();
        let c = cond_exact(&p.a, &NormSpec::INF).unwrap();
        let r = certify_abs(&p, &[0.0, 0.0], &NormSpec::INF, &c).unwrap();
        assert_eq!((r.residual_norm, r.abs_bound), (1.0, 0.5));
        let r = certify_abs(&p, &[0.5, 0.5], &NormSpec::INF, &c).unwrap();
        assert_eq!(r.abs_bound, 0.0);
        assert!(r.rel_bound_upper.is_none());
    }

    #[test]
    fn abs_perturbed_solution() {
        let a = Matrix::from_rows(&[[1.0, -4.0], [-4.0, 1.0]]);
        let p = AveProblem::new(a, vec![1.0, 1.0]).unwrap();
        let xs = ave::solve_exact(&p).unwrap().x_star;
        let x = vec![xs[0] + 0.01, xs[1]];
        let c = cond_exact(&p.a, &NormSpec::INF).unwrap();
        let r = certify_abs(&p, &x, &NormSpec::INF, &c).unwrap();
        assert!(r.abs_bound >= 0.01 - 1e-15);
        assert!((r.abs_bound - 0.5 * r.residual_norm).abs() < 1e-15);
    }

    #[test]
    fn abs_rejects_mismatched_norm() {
        let p = three_i();
        let c = cond_exact(&p.a, &NormSpec::INF).unwrap();
        assert!(certify_abs(&p, &[0.0, 0.0], &NormSpec::ONE, &c).is_err());
    }

    #[test]
    fn upper_bound_never_tightens() {
        let p = three_i();
        let exact = cond_exact(&p.a, &NormSpec::INF).unwrap();
        let upper = cond_neumann_upper(&p.a, &NormSpec::INF).unwrap();
        let x = [0.2, -0.3];
        let e = certify_abs(&p, &x, &NormSpec::INF, &exact).unwrap();
        let u = certify_abs(&p, &x, &NormSpec::INF, &upper).unwrap();
        // Both constants equal 1/2 in exact arithmetic; allow one rounding.
        assert!(u.abs_bound >= e.abs_bound * (1.0 - f64::EPSILON));
    }

    #[test]
    fn rel_examples() {
        let p = three_i();
        let r = certify_rel(&p, &[0.0, 0.0], &NormSpec::INF).unwrap();
        assert_eq!(r.rel_bound_upper, Some(2.0));
        assert_eq!(r.rel_bound_lower, Some(0.5));
        let r = certify_rel(&p, &[0.5, 0.5], &NormSpec::INF).unwrap();
        assert_eq!(r.rel_bound_upper, Some(0.0));
        let z = AveProblem::new(p.a.clone(), vec![0.0, 0.0]).unwrap();
        assert_eq!(
            certify_rel(&z, &[0.0, 0.0], &NormSpec::INF),
            Err(Error::ZeroRightHandSide)
        );
    }

    #[test]
    fn stability_examples() {
        let a = Matrix::identity(2).scale(3.0);
        let g = stability_gap(&a, &[1.0, 1.0], &[1.0, 1.0], &NormSpec::INF).unwrap();
        assert_eq!(g.gap, 0.0);
        let g = stability_gap(&a, &[1.0, 1.0], &[2.0, 2.0], &NormSpec::INF).unwrap();
        assert_eq!((g.gap, g.bound), (0.5, 0.5));
        let b = Matrix::from_rows(&[[3.0, -1.0], [-1.0, 3.0]]);
        let g = stability_gap(&b, &[0.3, -1.2], &[-0.7, 2.0], &NormSpec::TWO).unwrap();
        assert!(g.gap <= g.bound + 1e-9);
    }

    #[test]
    fn weak_sharp_examples() {
        let p = three_i();
        // x = (1, 1): ||x - x*||_2 / c_2 = sqrt(2) <= e^T phi(x) = 2.
        let phi: f64 = ave::residual(&p, &[1.0, 1.0]).unwrap().iter().sum();
        assert_eq!(phi, 2.0);
        let w = weak_sharp_check(&p, 200, 7).unwrap();
        assert!(w.passed && w.tested > 0, "{w:?}");
        assert_eq!(w, weak_sharp_check(&p, 200, 7).unwrap());
    }
}
