//! Dense linear algebra kernels and matrix class predicates.

mod class;
pub mod jacobi;
mod lu;
mod matrix;
mod norm;
mod perron;

pub use class::{
    classify, comparison_matrix, is_h_matrix, is_inverse_nonnegative, is_m_matrix, is_p_matrix,
    is_symmetric, MatrixClass, P_MATRIX_MAX_DIM,
};
pub use jacobi::{sigma_max, sigma_min, svd, symmetric_eigen, Svd, SymmetricEigen};
pub use lu::{det, invert, solve, Lu};
pub use matrix::{vec_ops, Matrix};
pub use norm::{induced_norm, NormSpec, PNorm};
pub use perron::{spectral_radius, spectral_radius_nonneg, Perron};
