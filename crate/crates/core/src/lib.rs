//! Equitable decompositions of graph matrices over uniform and basic
//! automorphisms.
//!
//! An automorphism `φ` of a graph is *uniform* when all its orbits share
//! one size `k > 1`, and *basic* when fixed vertices are also allowed.
//! Any matrix that respects the graph's symmetry — adjacency, Laplacian
//! and friends — can then be split by an explicit similarity transform
//! into a divisor block plus `k − 1` smaller blocks whose spectra
//! together equal the full spectrum exactly. The blocks are built from
//! submatrix sums and roots of unity; no eigenvalue computation is
//! involved in the decomposition itself.
//!
//! ```
//! use eqdecomp::{
//!     MatrixKind, SpectrumMultiset, build_matrix, decompose, eigenvalues, fixtures,
//!     multiset_equal, verify_similarity,
//! };
//!
//! let graph = fixtures::figure1_graph();
//! let phi = fixtures::figure1_automorphism();
//! let a = build_matrix(&graph, MatrixKind::Adjacency)?;
//!
//! let d = decompose(&a, &phi)?;
//! assert_eq!((d.k, d.r), (4, 2));
//! assert!(verify_similarity(&a, &phi, &d)? < 1e-12);
//!
//! // the block spectra together reproduce the full spectrum
//! let mut values = eigenvalues(&d.divisor_block)?.values().to_vec();
//! for block in &d.blocks {
//!     values.extend(eigenvalues(block)?.values());
//! }
//! let union = SpectrumMultiset::from_values(values, 1e-8);
//! let full = eigenvalues(a.entries())?;
//! assert!(multiset_equal(&union, &full, 1e-8));
//! # Ok::<(), eqdecomp::Error>(())
//! ```
//!
//! The `parallel` feature (on by default) evaluates independent blocks
//! and batch eigensolves on a rayon pool; results are collected in index
//! order either way, so outputs are bit-identical with or without it.

pub mod cmatrix;
pub mod decomp;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod matrices;
mod par;
pub mod partition;
pub mod perm;
pub mod spectra;

pub use cmatrix::{C64, CMatrix, fmt_c64, fmt_sig};
pub use decomp::{
    Decomposition, Transversal, build_transversal, decompose, dft_similarity, unity_power,
    verify_similarity,
};
pub use error::{Error, Result};
pub use graph::{Graph, is_automorphism, is_automorphism_tol};
pub use matrices::{CompatibleMatrix, MatrixKind, build_matrix, is_compatible, is_compatible_tol};
pub use partition::{
    DivisorMatrix, VertexPartition, divisor_matrix, divisor_matrix_tol, is_equitable,
    is_equitable_tol, orbit_partition,
};
pub use perm::{OrbitKind, OrbitStructure, Permutation, orbit_structure, power_to_basic};
pub use spectra::{
    DEFAULT_CLUSTER_TOL, DEFAULT_MATCH_TOL, SimpleEigBound, SpectralBounds, SpectrumMultiset,
    batch_eigenvalues, certified_eigen_subset, count_bounds, count_simple, eigenvalues,
    multiset_equal, spectral_bounds, sub_multiset,
};
