//! Signless Laplacian spectra of k-uniform hypergraphs.
//!
//! The numeric core is generic over the scalar: floating routines take any
//! [`Real`] (`f32`, `f64`), exact routines any integer ring (`i64`,
//! `BigInt`). The aliases below fix the common choices.

pub mod error;
pub mod hypergraph;
pub mod io;
pub mod linalg;
pub mod multigraph;
pub mod power;
pub mod random;
pub mod report;
pub mod scalar;
pub mod spectral;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use hypergraph::{build_hypergraph, cartesian_product, union, DegreeProfile, Hypergraph};
pub use linalg::{eigen_decompose, EigenGroup, IncidenceMatrix, Poly, Spectrum, SymmetricMatrix};
pub use multigraph::{clique_multigraph, line_degree_check, line_multigraph, Multigraph};
pub use power::{power, PowerParams, PowerVertexMap};
pub use scalar::{Real, ResolvedTolerances, Tolerances};

/// Double precision symmetric matrix.
pub type Matrix64 = SymmetricMatrix<f64>;
/// Integer symmetric matrix (Q, B^T B, multigraph adjacencies).
pub type IntMatrix = SymmetricMatrix<i64>;
/// Arbitrary precision integer matrix for exact characteristic polynomials.
pub type BigMatrix = SymmetricMatrix<num_bigint::BigInt>;
/// Exact integer polynomial.
pub type IntPoly = Poly<num_bigint::BigInt>;
pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type Tolerances64 = Tolerances<f64>;
pub type HypergraphSpectrum64 = spectral::HypergraphSpectrum<f64>;
