//! Built-in regression checks against known worked values.

use serde::Serialize;
use serde_json::{json, Value};

use super::{Format, Outcome};
use crate::cond;
use crate::dense::{self, Matrix, NormSpec};
use crate::lcp::{self, LcpProblem};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub expected: String,
    pub pass: bool,
}

fn near(name: &str, value: f64, want: f64, tol: f64) -> Check {
    Check {
        name: name.into(),
        value,
        expected: format!("{want} +- {tol:e}"),
        pass: (value - want).abs() <= tol,
    }
}

fn at_most(name: &str, value: f64, limit: f64) -> Check {
    Check {
        name: name.into(),
        value,
        expected: format!("<= {limit}"),
        pass: value <= limit,
    }
}

fn failed(name: &str, err: impl std::fmt::Display) -> Check {
    Check {
        name: name.into(),
        value: f64::NAN,
        expected: format!("no error ({err})"),
        pass: false,
    }
}

fn rotation_example(eps: f64) -> Matrix {
    let h = 0.5f64.sqrt();
    Matrix::from_rows(&[[h, -h], [h, h]]).mul(&Matrix::from_diag(&[5.0, 1.0 + eps]))
}

pub fn checks() -> Vec<Check> {
    let mut out = Vec::new();
    let a = Matrix::from_rows(&[[2.0, 1.0], [-2.0, 1.0]]);
    let e = [0.0, 1.0];
    out.push(near("sigma_min(A)", dense::sigma_min(&a), 2f64.sqrt(), 1e-8));
    let avg_i = 0.5 * (dense::sigma_min(&a.add_diag(&[1.0, 1.0])) + dense::sigma_min(&a.sub_diag(&[1.0, 1.0])));
    out.push(near("mean sigma_min(A +- I)", avg_i, 1.541, 5e-3));
    let avg_e = 0.5 * (dense::sigma_min(&a.add_diag(&e)) + dense::sigma_min(&a.sub_diag(&e)));
    out.push(near("mean sigma_min(A +- E)", avg_e, 1.34, 5e-3));

    for eps in [0.1, 0.01, 0.001] {
        let r = rotation_example(eps);
        match cond::cond_exact(&r, &NormSpec::TWO) {
            Ok(c) => out.push(at_most(&format!("c_2 rotation eps={eps}"), c.value(), 6.0)),
            Err(err) => out.push(failed(&format!("c_2 rotation eps={eps}"), err)),
        }
        match cond::cond_sigma_upper(&r) {
            Ok(c) => out.push(near(
                &format!("sigma bound rotation eps={eps}"),
                c.value(),
                1.0 / eps,
                1e-6 / eps,
            )),
            Err(err) => out.push(failed(&format!("sigma bound rotation eps={eps}"), err)),
        }
    }

    let m = Matrix::from_rows(&[[1.0, -0.5], [-0.5, 1.0]]);
    let lp = LcpProblem::new(m, vec![0.0; 2]).expect("2x2 problem");
    let routes: [(&str, Result<f64, crate::Error>); 3] = [
        (
            "lcp c_inf by enumeration",
            lcp::transform_matrix(&lp.m).and_then(|t| cond::cond_exact(&t, &NormSpec::INF)).map(|c| c.value()),
        ),
        (
            "lcp c_inf by M-matrix formula",
            lcp::lcp_cond_M_matrix(&lp, &NormSpec::INF).map(|c| c.value()),
        ),
        (
            "lcp c_inf by H-matrix bound",
            lcp::lcp_cond_H_matrix(&lp, &NormSpec::INF).map(|c| c.value()),
        ),
    ];
    for (name, r) in routes {
        match r {
            Ok(v) => out.push(near(name, v, 0.5, 1e-10)),
            Err(err) => out.push(failed(name, err)),
        }
    }
    out
}

pub fn run(format: Format) -> Outcome {
    let checks = checks();
    let all = checks.iter().all(|c| c.pass);
    let stdout = match format {
        Format::Json => super::json::to_string(&json!({
            "schema_version": super::SCHEMA_VERSION,
            "command": "selftest",
            "status": if all { "ok" } else { "error" },
            "checks": checks.iter().map(|c| serde_json::to_value(c).unwrap_or(Value::Null)).collect::<Vec<_>>(),
        })),
        Format::Text => checks
            .iter()
            .map(|c| {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                format!("{tag} {}: {} (expected {})\n", c.name, c.value, c.expected)
            })
            .collect(),
    };
    Outcome {
        code: if all { 0 } else { 1 },
        stdout,
        stderr: if all { String::new() } else { "selftest failed\n".into() },
    }
}
