//! Permutations in cycle notation, their orbits, and cycle-type
//! classification.
//!
//! Vertices are 1-indexed at the API boundary. A permutation is *uniform
//! of size k* when every orbit has the same size `k > 1`, and *basic of
//! size k* when orbits have size `k` or are fixed points, with at least
//! one of each. Those are the two shapes the decomposition accepts; for
//! anything else, some power of the permutation always is one of them
//! ([`power_to_basic`]).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{1..n}` with its cycle decomposition cached.
#[derive(Clone, Debug)]
pub struct Permutation {
    /// `images[v]` is the 0-indexed image of 0-indexed vertex `v`.
    images: Vec<usize>,
    /// All cycles including fixed points, each starting at its minimum
    /// vertex, sorted by that minimum. 1-indexed.
    cycles: Vec<Vec<usize>>,
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}
impl Eq for Permutation {}

impl Permutation {
    fn build(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v + 1);
                v = images[v];
            }
            cycles.push(cyc);
        }
        Permutation { images, cycles }
    }

    pub fn identity(n: usize) -> Self {
        Self::build((0..n).collect())
    }

    /// Builds a permutation from 1-indexed images: `images[i]` is φ(i+1).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &w in &images {
            if w == 0 || w > n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if seen[w - 1] {
                return Err(Error::NotBijection { n });
            }
            seen[w - 1] = true;
        }
        Ok(Self::build(images.into_iter().map(|w| w - 1).collect()))
    }

    /// Parses cycle notation such as `(1 3 5 7)(2 4 6 8)` or
    /// `(1)(2,5,8)(3,6,9)`. Separators may be spaces or commas; vertices
    /// not mentioned are fixed; an empty string is the identity.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let mut chars = text.char_indices().peekable();
        while let Some(&(pos, ch)) = chars.peek() {
            if ch.is_whitespace() {
                chars.next();
                continue;
            }
            if ch != '(' {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("unexpected character {ch:?} at byte {pos}; expected '('"),
                });
            }
            chars.next();
            let mut body = String::new();
            let mut closed = false;
            for (_, c) in chars.by_ref() {
                if c == ')' {
                    closed = true;
                    break;
                }
                body.push(c);
            }
            if !closed {
                return Err(Error::Parse {
                    line: 1,
                    msg: "unclosed '(' in cycle notation".to_string(),
                });
            }
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    line: 1,
                    msg: format!("expected a vertex number, found {tok:?}"),
                })?;
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v - 1] {
                    return Err(Error::RepeatedVertex { vertex: v });
                }
                seen[v - 1] = true;
                cycle.push(v - 1);
            }
            for (idx, &a) in cycle.iter().enumerate() {
                images[a] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Self::build(images))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-indexed vertex `v`.
    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self::build(
            (0..self.n()).map(|v| self.images[other.images[v]]).collect(),
        ))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (v, &w) in self.images.iter().enumerate() {
            inv[w] = v;
        }
        Self::build(inv)
    }

    /// `self` applied `e` times; `e = 0` gives the identity.
    pub fn pow(&self, e: usize) -> Permutation {
        let mut acc = Permutation::identity(self.n());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same length");
            }
            base = base.compose(&base).expect("same length");
            e >>= 1;
        }
        acc
    }

    /// Group order: least common multiple of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles.iter().map(Vec::len).fold(1, lcm)
    }

    /// All cycles including fixed points, each starting at its minimum
    /// vertex and sorted by that minimum.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as
    /// `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cyc in &self.cycles {
            if cyc.len() < 2 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (i, v) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Cycle-type classification of a permutation's orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    /// All orbits are fixed points (the identity).
    Trivial,
    /// Every orbit has the same size `k > 1`.
    Uniform(usize),
    /// Orbits have size `k > 1` or are fixed points, at least one of each.
    Basic(usize),
    /// Mixed orbit sizes above 1.
    General,
}

impl fmt::Display for OrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitKind::Trivial => write!(f, "trivial"),
            OrbitKind::Uniform(k) => write!(f, "uniform(k={k})"),
            OrbitKind::Basic(k) => write!(f, "basic(k={k})"),
            OrbitKind::General => write!(f, "general"),
        }
    }
}

/// Orbits of a permutation with their classification.
#[derive(Clone, Debug)]
pub struct OrbitStructure {
    /// Each orbit listed in iteration order `v, φ(v), φ²(v), …` starting
    /// from its minimum vertex; orbits sorted by minimum element.
    pub orbits: Vec<Vec<usize>>,
    /// The size-1 orbits, ascending.
    pub fixed_vertices: Vec<usize>,
    pub kind: OrbitKind,
}

/// Computes the orbits of `φ` and classifies their sizes.
pub fn orbit_structure(phi: &Permutation) -> OrbitStructure {
    let orbits: Vec<Vec<usize>> = phi.cycles().to_vec();
    let fixed_vertices: Vec<usize> = orbits
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect();
    let sizes: BTreeSet<usize> = orbits.iter().map(Vec::len).collect();
    let big: Vec<usize> = sizes.iter().copied().filter(|&s| s > 1).collect();
    let kind = if big.is_empty() {
        OrbitKind::Trivial
    } else if big.len() > 1 {
        OrbitKind::General
    } else if sizes.contains(&1) {
        OrbitKind::Basic(big[0])
    } else {
        OrbitKind::Uniform(big[0])
    };
    OrbitStructure {
        orbits,
        fixed_vertices,
        kind,
    }
}

/// Smallest `e ≥ 1` such that `φ^e` is uniform or basic, together with
/// that power.
///
/// Such a power always exists for non-identity `φ`: if `p^a` is the
/// largest power of a prime `p` dividing the order `N`, then `φ^{N/p}`
/// has every orbit of size `p` or 1.
pub fn power_to_basic(phi: &Permutation) -> Result<(usize, Permutation)> {
    if phi.is_identity() {
        return Err(Error::IdentityPermutation);
    }
    let order = phi.order();
    let mut cur = phi.clone();
    for e in 1..=order {
        match orbit_structure(&cur).kind {
            OrbitKind::Uniform(_) | OrbitKind::Basic(_) => return Ok((e, cur)),
            _ => {}
        }
        cur = cur.compose(phi)?;
    }
    unreachable!("a non-identity permutation always has a uniform or basic power")
}
