//! Vertex partitions, the equitability test, and divisor matrices.
//!
//! A partition `{V_1, …, V_m}` of the vertices is *equitable* for a
//! matrix `M` when the row sums `∑_{t ∈ V_j} m_{st}` do not depend on
//! which `s ∈ V_i` is used. Collecting those constants gives the `m × m`
//! divisor matrix, whose spectrum is always a sub-multiset of `σ(M)`.
//! Orbit partitions of automorphisms are the main source of equitable
//! partitions here, but the check accepts any partition.

use crate::cmatrix::{C64, CMatrix};
use crate::error::{Error, Result};
use crate::matrices::CompatibleMatrix;
use crate::perm::Permutation;

/// A partition of `{1, …, n}` into nonempty, disjoint, exhaustive cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    cells: Vec<Vec<usize>>,
    n: usize,
}

impl VertexPartition {
    /// Validates that the cells are nonempty and cover `1..=n` exactly
    /// once. Cell order and order within cells are preserved.
    pub fn new(cells: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut covered = 0usize;
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::BadPartition {
                    n,
                    msg: "empty cell".to_string(),
                });
            }
            for &v in cell {
                if v == 0 || v > n {
                    return Err(Error::BadPartition {
                        n,
                        msg: format!("vertex {v} out of range"),
                    });
                }
                if seen[v - 1] {
                    return Err(Error::BadPartition {
                        n,
                        msg: format!("vertex {v} appears twice"),
                    });
                }
                seen[v - 1] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::BadPartition {
                n,
                msg: format!("{covered} of {n} vertices covered"),
            });
        }
        Ok(VertexPartition { cells, n })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cell index (0-based) of each vertex `1..=n`.
    pub fn cell_of(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (c, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v - 1] = c;
            }
        }
        idx
    }
}

/// The matrix of constant cell row sums of an equitable partition.
#[derive(Clone, Debug)]
pub struct DivisorMatrix {
    entries: CMatrix,
    partition: VertexPartition,
}

impl DivisorMatrix {
    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn partition(&self) -> &VertexPartition {
        &self.partition
    }

    pub fn len(&self) -> usize {
        self.partition.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partition.is_empty()
    }
}

/// Orbit partition of a permutation: fixed points first as singletons in
/// increasing order, then the nontrivial orbits ordered by least element.
pub fn orbit_partition(phi: &Permutation) -> VertexPartition {
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut moved: Vec<Vec<usize>> = Vec::new();
    for orbit in phi.cycles() {
        if orbit.len() == 1 {
            cells.push(orbit.clone());
        } else {
            moved.push(orbit.clone());
        }
    }
    cells.extend(moved);
    VertexPartition::new(cells, phi.n()).expect("orbits partition the vertex set")
}

/// Row sums per cell if constant, or the first violation.
fn cell_sums(
    m: &CMatrix,
    partition: &VertexPartition,
    tol: f64,
) -> std::result::Result<CMatrix, (usize, usize, usize)> {
    let k = partition.len();
    let mut d = CMatrix::zeros(k, k);
    for (ci, cell_i) in partition.cells().iter().enumerate() {
        for (cj, cell_j) in partition.cells().iter().enumerate() {
            let mut first = C64::new(0.0, 0.0);
            for (s_idx, &s) in cell_i.iter().enumerate() {
                let mut sum = C64::new(0.0, 0.0);
                for &t in cell_j {
                    sum += m[(s - 1, t - 1)];
                }
                if s_idx == 0 {
                    first = sum;
                } else {
                    let diff = sum - first;
                    if diff.re.abs() > tol || diff.im.abs() > tol {
                        return Err((ci, cj, s));
                    }
                }
            }
            d[(ci, cj)] = first;
        }
    }
    Ok(d)
}

fn default_tol(m: &CMatrix) -> f64 {
    if m.is_integral() {
        0.0
    } else {
        1e-9
    }
}

/// True iff every cell of the partition has constant row sums into every
/// other cell. Integral matrices are compared exactly, all others with an
/// absolute tolerance of `1e-9`.
pub fn is_equitable(m: &CompatibleMatrix, partition: &VertexPartition) -> Result<bool> {
    is_equitable_tol(m, partition, default_tol(m.entries()))
}

/// [`is_equitable`] with an explicit tolerance.
pub fn is_equitable_tol(
    m: &CompatibleMatrix,
    partition: &VertexPartition,
    tol: f64,
) -> Result<bool> {
    if partition.n() != m.n() {
        return Err(Error::SizeMismatch {
            left: m.n(),
            right: partition.n(),
        });
    }
    Ok(cell_sums(m.entries(), partition, tol).is_ok())
}

/// Builds the divisor matrix, or reports which cell pair fails to be
/// equitable.
pub fn divisor_matrix(m: &CompatibleMatrix, partition: &VertexPartition) -> Result<DivisorMatrix> {
    divisor_matrix_tol(m, partition, default_tol(m.entries()))
}

/// [`divisor_matrix`] with an explicit tolerance.
pub fn divisor_matrix_tol(
    m: &CompatibleMatrix,
    partition: &VertexPartition,
    tol: f64,
) -> Result<DivisorMatrix> {
    if partition.n() != m.n() {
        return Err(Error::SizeMismatch {
            left: m.n(),
            right: partition.n(),
        });
    }
    match cell_sums(m.entries(), partition, tol) {
        Ok(entries) => Ok(DivisorMatrix {
            entries,
            partition: partition.clone(),
        }),
        Err((cell_s, cell_t, row)) => Err(Error::NotEquitable { cell_s, cell_t, row }),
    }
}
