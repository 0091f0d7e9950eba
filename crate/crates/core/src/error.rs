//! Error type shared by every module in the crate.

use thiserror::Error;

/// Convenience alias used by all fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A graph or permutation file failed to parse.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge ({i},{j}) with conflicting weights {existing} and {new}")]
    ConflictingWeight {
        i: usize,
        j: usize,
        existing: f64,
        new: f64,
    },

    #[error("vertex {vertex} appears more than once in the cycle list")]
    RepeatedVertex { vertex: usize },

    #[error("images do not form a bijection on 1..={n}")]
    NotBijection { n: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("the identity permutation has no uniform or basic power")]
    IdentityPermutation,

    /// Decomposition requires every orbit to have one size `k > 1`, with or
    /// without fixed vertices.
    #[error("orbit structure is {kind}; need a uniform or basic automorphism (try power_to_basic)")]
    WrongOrbitKind { kind: String },

    #[error("matrix is not compatible with the permutation: entry ({i},{j}) differs from its image ({pi},{pj})")]
    Incompatible {
        i: usize,
        j: usize,
        pi: usize,
        pj: usize,
    },

    #[error("partition is not equitable: vertex {row} breaks the constant sum from cell {cell_s} into cell {cell_t}")]
    NotEquitable {
        cell_s: usize,
        cell_t: usize,
        row: usize,
    },

    #[error("not a partition of 1..={n}: {msg}")]
    BadPartition { n: usize, msg: String },

    #[error("{kind} matrix requires an undirected graph")]
    DirectedUnsupported { kind: String },

    #[error("vertex {vertex} has degree zero; normalized Laplacian undefined")]
    ZeroDegree { vertex: usize },

    #[error("graph is not {required}; distance matrix undefined")]
    Disconnected { required: &'static str },

    #[error("QR iteration failed to converge while deflating index {index}")]
    NonConvergence { index: usize },

    #[error("matrix has a non-finite entry at ({row},{col})")]
    NonFinite { row: usize, col: usize },

    #[error("spectrum is empty")]
    EmptySpectrum,

    #[error("cannot split {remaining} non-fixed vertices into orbits of size {k}")]
    InfeasiblePlant { remaining: usize, k: usize },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}
