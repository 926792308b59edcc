//! Numerical thresholds shared by every module.
//!
//! All comparisons against zero, one, or a sign pattern go through the values
//! held here. The active record is process-wide; [`set`] replaces it (the CLI
//! does so once at startup when tolerance overrides are given).

use std::sync::RwLock;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Pivot magnitude below `singular_pivot * ||A||_inf` means singular.
    pub singular_pivot: f64,
    /// Entrywise nonnegativity slack (`x >= -nonneg_slack`).
    pub nonneg_slack: f64,
    /// Principal minors must exceed this to count as positive.
    pub minor_positive: f64,
    /// Vertex determinants with `|det| <= det_zero * ||A||_inf^n` count as zero.
    pub det_zero: f64,
    /// Maximum `||A - A^T||_inf` for a matrix to count as symmetric.
    pub symmetric: f64,
    /// Strict margin for `sigma_min > 1`, `rho < 1`, `alpha > 0` style tests.
    pub strict_margin: f64,
    /// Sign consistency slack for `s_i x_i >= -sign_slack`.
    pub sign_slack: f64,
    /// Solutions closer than this in the inf-norm are the same solution.
    pub dedup: f64,
    /// Slack for the concave-program feasibility constraints.
    pub feasibility_slack: f64,
    /// Power iteration stops once Rayleigh quotients move less than this.
    pub perron: f64,
    pub perron_max_iter: usize,
    /// Off-diagonal mass (relative) at which Jacobi sweeps stop.
    pub jacobi: f64,
    pub jacobi_max_sweeps: usize,
    /// Target accuracy for the spectral radius in the Perron bisection.
    pub bisection: f64,
    /// Fixed-point iteration stops when the step is below this.
    pub picard_step: f64,
    /// `||b||` at or below this counts as a zero right-hand side.
    pub zero_rhs: f64,
    /// Relative agreement required between two evaluation routes.
    pub route_agreement: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        DEFAULT
    }
}

pub const DEFAULT: Tolerances = Tolerances {
    singular_pivot: 1e-12,
    nonneg_slack: 1e-12,
    minor_positive: 1e-12,
    det_zero: 1e-12,
    symmetric: 1e-12,
    strict_margin: 1e-10,
    sign_slack: 1e-12,
    dedup: 1e-10,
    feasibility_slack: 1e-10,
    perron: 1e-12,
    perron_max_iter: 10_000,
    jacobi: 1e-15,
    jacobi_max_sweeps: 100,
    bisection: 1e-10,
    picard_step: 1e-14,
    zero_rhs: 1e-14,
    route_agreement: 1e-8,
};

static ACTIVE: RwLock<Tolerances> = RwLock::new(DEFAULT);

/// Snapshot of the active tolerances.
pub fn current() -> Tolerances {
    *ACTIVE.read().unwrap_or_else(|e| e.into_inner())
}

/// Replace the active tolerances for the whole process.
pub fn set(t: Tolerances) {
    *ACTIVE.write().unwrap_or_else(|e| e.into_inner()) = t;
}
