//! Condition numbers and certified error bounds for absolute value equations
//! `Ax - b = |x|`, plus the bridge from linear complementarity problems.
//!
//! The condition number of `A` is
//! `c(A) = max_{||d||_inf <= 1} ||(A - diag(d))^{-1}||`; it is finite exactly
//! when the interval matrix `[A - I, A + I]` is regular, and then
//! `||x - x*|| <= c(A) ||Ax - b - |x|||` for every `x`.
//!
//! Exhaustive routines ([`cond::cond_exact`], [`regularity::regularity_exact`],
//! [`ave::solve_exact`]) enumerate the `2^n` sign vectors and are limited to
//! `n <= 20`. The closed forms in [`cond`] cover structured classes at
//! polynomial cost.

pub mod ave;
pub mod certify;
pub mod cli;
pub mod cond;
pub mod dense;
pub mod error;
pub mod lcp;
pub mod regularity;
pub mod tol;
pub mod vertex;

pub use ave::{AveProblem, AveSolution};
pub use cond::{BoundMethod, CondKind, CondResult, CondValue};
pub use dense::{Matrix, NormSpec, PNorm};
pub use error::{Error, Result};
pub use lcp::LcpProblem;
