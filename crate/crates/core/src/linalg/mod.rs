//! Dense linear algebra: symmetric matrices, the incidence matrix, the
//! Jacobi eigensolver and exact characteristic polynomials.

pub mod charpoly;
pub mod eigen;
pub mod matrix;

pub use charpoly::{char_poly_exact, char_poly_with_limit, Poly, DEFAULT_ORDER_LIMIT};
pub use eigen::{eigen_decompose, fix_sign, group_values, multiset_close, EigenGroup, Spectrum};
pub use matrix::{IncidenceMatrix, SymmetricMatrix};
