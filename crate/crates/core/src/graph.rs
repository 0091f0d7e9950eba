//! Graphs as edge lists, the file format, and automorphism checking.
//!
//! # File format
//!
//! UTF-8 text; `#` starts a comment anywhere on a line.
//!
//! ```text
//! n=<int> <directed|undirected> [weighted]
//! <i> <j> [<weight>]
//! ...
//! ```
//!
//! Vertices are 1-indexed. Undirected edges are stored once in `(min,max)`
//! order; loops `(i,i)` are allowed. Weight tokens are only legal when the
//! header says `weighted` (and default to 1 when omitted there).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    n: usize,
    directed: bool,
    weighted: bool,
    edges: BTreeMap<(usize, usize), f64>,
}

impl Graph {
    pub fn new(n: usize, directed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one vertex".to_string(),
            ));
        }
        Ok(Graph {
            n,
            directed,
            weighted: false,
            edges: BTreeMap::new(),
        })
    }

    pub fn new_weighted(n: usize, directed: bool) -> Result<Self> {
        let mut g = Self::new(n, directed)?;
        g.weighted = true;
        Ok(g)
    }

    fn canon(&self, i: usize, j: usize) -> (usize, usize) {
        if self.directed || i <= j {
            (i, j)
        } else {
            (j, i)
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds an edge of weight 1. Re-adding the same edge is a no-op.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.insert(i, j, 1.0)
    }

    /// Adds a weighted edge; the graph must have been created weighted.
    /// Re-adding with the same weight is a no-op, a different weight is an
    /// error.
    pub fn add_weighted_edge(&mut self, i: usize, j: usize, w: f64) -> Result<()> {
        if !self.weighted {
            return Err(Error::InvalidParameter(
                "graph is unweighted; use add_edge".to_string(),
            ));
        }
        if !w.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "edge ({i},{j}) has non-finite weight {w}"
            )));
        }
        self.insert(i, j, w)
    }

    fn insert(&mut self, i: usize, j: usize, w: f64) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        let key = self.canon(i, j);
        if let Some(&old) = self.edges.get(&key) {
            if old != w {
                return Err(Error::ConflictingWeight {
                    i: key.0,
                    j: key.1,
                    existing: old,
                    new: w,
                });
            }
            return Ok(());
        }
        self.edges.insert(key, w);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn weighted(&self) -> bool {
        self.weighted
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains_key(&self.canon(i, j))
    }

    /// Stored weight of the edge `(i,j)`, if present. For undirected
    /// graphs the order of `i` and `j` does not matter.
    pub fn weight(&self, i: usize, j: usize) -> Option<f64> {
        self.edges.get(&self.canon(i, j)).copied()
    }

    /// Iterates edges in canonical sorted order as `(i, j, weight)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.edges.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    /// Parses the edge-list file format described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match graph {
                None => {
                    graph = Some(Self::parse_header(&toks, line_no)?);
                }
                Some(ref mut g) => {
                    Self::parse_edge_line(g, &toks, line_no)?;
                }
            }
        }
        graph.ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing header line `n=<int> <directed|undirected> [weighted]`".to_string(),
        })
    }

    fn parse_header(toks: &[&str], line: usize) -> Result<Graph> {
        let bad = |msg: String| Error::Parse { line, msg };
        if toks.len() < 2 || toks.len() > 3 {
            return Err(bad(
                "header must be `n=<int> <directed|undirected> [weighted]`".to_string(),
            ));
        }
        let n: usize = toks[0]
            .strip_prefix("n=")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad(format!("expected n=<int>, found {:?}", toks[0])))?;
        let directed = match toks[1] {
            "directed" => true,
            "undirected" => false,
            other => return Err(bad(format!("expected directed|undirected, found {other:?}"))),
        };
        let weighted = match toks.get(2) {
            None => false,
            Some(&"weighted") => true,
            Some(other) => return Err(bad(format!("expected `weighted`, found {other:?}"))),
        };
        let mut g = Graph::new(n, directed).map_err(|e| bad(e.to_string()))?;
        g.weighted = weighted;
        Ok(g)
    }

    fn parse_edge_line(g: &mut Graph, toks: &[&str], line: usize) -> Result<()> {
        let bad = |msg: String| Error::Parse { line, msg };
        let max = if g.weighted { 3 } else { 2 };
        if toks.len() < 2 || toks.len() > max {
            return Err(bad(format!(
                "edge line must be `<i> <j>{}`",
                if g.weighted { " [<weight>]" } else { "" }
            )));
        }
        let v = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| bad(format!("expected a vertex number, found {s:?}")))
        };
        let (i, j) = (v(toks[0])?, v(toks[1])?);
        let w = match toks.get(2) {
            Some(s) => s
                .parse::<f64>()
                .map_err(|_| bad(format!("expected a weight, found {s:?}")))?,
            None => 1.0,
        };
        let res = if g.weighted {
            g.add_weighted_edge(i, j, w)
        } else {
            g.add_edge(i, j)
        };
        res.map_err(|e| bad(e.to_string()))
    }

    /// Serializes to the same file format `parse` reads.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n={} {}{}\n",
            self.n,
            if self.directed { "directed" } else { "undirected" },
            if self.weighted { " weighted" } else { "" },
        );
        for (i, j, w) in self.edges() {
            if self.weighted {
                out.push_str(&format!("{i} {j} {w}\n"));
            } else {
                out.push_str(&format!("{i} {j}\n"));
            }
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// True iff `φ` preserves the (weighted) adjacency relation:
/// `a_{ij} = a_{φ(i)φ(j)}` for all `i, j`, with weights compared exactly.
pub fn is_automorphism(g: &Graph, phi: &Permutation) -> Result<bool> {
    is_automorphism_tol(g, phi, 0.0)
}

/// [`is_automorphism`] with an absolute tolerance on weight comparison,
/// for graphs carrying floating-point weights.
pub fn is_automorphism_tol(g: &Graph, phi: &Permutation, tol: f64) -> Result<bool> {
    if phi.n() != g.n() {
        return Err(Error::SizeMismatch {
            left: g.n(),
            right: phi.n(),
        });
    }
    // phi permutes a finite edge set, so mapping every edge onto an edge
    // of equal weight already forces the image to be all of E.
    for (i, j, w) in g.edges() {
        match g.weight(phi.apply(i), phi.apply(j)) {
            Some(w2) if (w - w2).abs() <= tol => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}
