//! Construction of the matrix kinds that respect every automorphism of
//! their graph, and the compatibility check itself.
//!
//! A matrix `M` is *compatible* with a permutation `φ` when
//! `m_{φ(i)φ(j)} = m_{ij}` for all `i, j`. Adjacency, weighted adjacency,
//! the three Laplacians, and the BFS distance matrix all have this
//! property for every automorphism of the underlying graph, which is what
//! makes them decomposable downstream.

use std::collections::VecDeque;
use std::fmt;

use crate::cmatrix::{C64, CMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// 0/1 adjacency pattern, ignoring weights.
    Adjacency,
    /// Adjacency with stored edge weights (equals `Adjacency` for
    /// unweighted graphs).
    WeightedAdjacency,
    /// Degree diagonal minus weighted adjacency. Undirected only.
    Laplacian,
    /// Degree diagonal plus weighted adjacency. Undirected only.
    SignlessLaplacian,
    /// `I − D^{−1/2} A D^{−1/2}`; needs every degree positive. Undirected
    /// only.
    NormalizedLaplacian,
    /// Shortest path lengths by BFS, ignoring weights; needs the graph
    /// (strongly) connected.
    Distance,
    /// Caller-supplied square matrix with no source graph.
    Custom,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::WeightedAdjacency => "weighted adjacency",
            MatrixKind::Laplacian => "Laplacian",
            MatrixKind::SignlessLaplacian => "signless Laplacian",
            MatrixKind::NormalizedLaplacian => "normalized Laplacian",
            MatrixKind::Distance => "distance",
            MatrixKind::Custom => "custom",
        };
        f.write_str(name)
    }
}

/// A square matrix tagged with how it was built and from what.
#[derive(Clone, Debug)]
pub struct CompatibleMatrix {
    kind: MatrixKind,
    entries: CMatrix,
    source: Option<Graph>,
}

impl CompatibleMatrix {
    /// Wraps a caller-supplied square matrix as [`MatrixKind::Custom`].
    pub fn custom(entries: CMatrix) -> Result<Self> {
        entries.dim()?;
        Ok(CompatibleMatrix {
            kind: MatrixKind::Custom,
            entries,
            source: None,
        })
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.rows()
    }

    pub fn source(&self) -> Option<&Graph> {
        self.source.as_ref()
    }
}

/// Weighted degree of each vertex; loops contribute twice.
fn degrees(g: &Graph) -> Vec<f64> {
    let mut deg = vec![0.0; g.n()];
    for (i, j, w) in g.edges() {
        if i == j {
            deg[i - 1] += 2.0 * w;
        } else {
            deg[i - 1] += w;
            deg[j - 1] += w;
        }
    }
    deg
}

fn adjacency_entries(g: &Graph, use_weights: bool) -> CMatrix {
    let n = g.n();
    let mut a = CMatrix::zeros(n, n);
    for (i, j, w) in g.edges() {
        let v = if use_weights { w } else { 1.0 };
        a[(i - 1, j - 1)] = C64::new(v, 0.0);
        if !g.directed() {
            a[(j - 1, i - 1)] = C64::new(v, 0.0);
        }
    }
    a
}

fn out_neighbors(g: &Graph) -> Vec<Vec<usize>> {
    let mut nbrs = vec![Vec::new(); g.n()];
    for (i, j, _) in g.edges() {
        nbrs[i - 1].push(j - 1);
        if !g.directed() && i != j {
            nbrs[j - 1].push(i - 1);
        }
    }
    nbrs
}

/// BFS path lengths from `src` (0-indexed); `usize::MAX` marks
/// unreachable vertices.
fn bfs(nbrs: &[Vec<usize>], src: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; nbrs.len()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for &w in &nbrs[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Builds the requested matrix kind from a graph.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> Result<CompatibleMatrix> {
    let n = g.n();
    let entries = match kind {
        MatrixKind::Adjacency => adjacency_entries(g, false),
        MatrixKind::WeightedAdjacency => adjacency_entries(g, true),
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian | MatrixKind::NormalizedLaplacian => {
            if g.directed() {
                return Err(Error::DirectedUnsupported {
                    kind: kind.to_string(),
                });
            }
            let w = adjacency_entries(g, true);
            let deg = degrees(g);
            match kind {
                MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
                    let sign = if kind == MatrixKind::Laplacian { -1.0 } else { 1.0 };
                    let mut m = w.scale(C64::new(sign, 0.0));
                    for v in 0..n {
                        m[(v, v)] += C64::new(deg[v], 0.0);
                    }
                    m
                }
                _ => {
                    if let Some(v) = deg.iter().position(|&d| d <= 0.0) {
                        return Err(Error::ZeroDegree { vertex: v + 1 });
                    }
                    let root: Vec<f64> = deg.iter().map(|d| d.sqrt()).collect();
                    let mut m = CMatrix::zeros(n, n);
                    for i in 0..n {
                        for j in 0..n {
                            let scaled = w[(i, j)].re / (root[i] * root[j]);
                            m[(i, j)] = C64::new(if i == j { 1.0 - scaled } else { -scaled }, 0.0);
                        }
                    }
                    m
                }
            }
        }
        MatrixKind::Distance => {
            let nbrs = out_neighbors(g);
            let mut m = CMatrix::zeros(n, n);
            for src in 0..n {
                let dist = bfs(&nbrs, src);
                for (dst, &d) in dist.iter().enumerate() {
                    if d == usize::MAX {
                        return Err(Error::Disconnected {
                            required: if g.directed() {
                                "strongly connected"
                            } else {
                                "connected"
                            },
                        });
                    }
                    m[(src, dst)] = C64::new(d as f64, 0.0);
                }
            }
            m
        }
        MatrixKind::Custom => {
            return Err(Error::InvalidParameter(
                "custom matrices are wrapped directly, not built from a graph".to_string(),
            ));
        }
    };
    Ok(CompatibleMatrix {
        kind,
        entries,
        source: Some(g.clone()),
    })
}

/// First index pair violating `m_{φ(i)φ(j)} = m_{ij}`, 0-indexed.
pub(crate) fn find_incompatibility(
    m: &CMatrix,
    phi: &Permutation,
    tol: f64,
) -> Option<(usize, usize)> {
    let n = m.rows();
    for i in 0..n {
        let pi = phi.apply(i + 1) - 1;
        for j in 0..n {
            let pj = phi.apply(j + 1) - 1;
            let d = m[(pi, pj)] - m[(i, j)];
            if d.re.abs() > tol || d.im.abs() > tol {
                return Some((i, j));
            }
        }
    }
    None
}

/// True iff `m_{φ(i)φ(j)} = m_{ij}` for all `i, j`, compared exactly.
pub fn is_compatible(m: &CompatibleMatrix, phi: &Permutation) -> Result<bool> {
    is_compatible_tol(m, phi, 0.0)
}

/// [`is_compatible`] with an absolute tolerance per entry component.
pub fn is_compatible_tol(m: &CompatibleMatrix, phi: &Permutation, tol: f64) -> Result<bool> {
    if phi.n() != m.n() {
        return Err(Error::SizeMismatch {
            left: m.n(),
            right: phi.n(),
        });
    }
    Ok(find_incompatibility(m.entries(), phi, tol).is_none())
}
