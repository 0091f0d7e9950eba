//! Worked examples and graph families used throughout the tests and the
//! CLI, plus a seeded generator that plants an automorphism in a random
//! graph by construction.
//!
//! Everything here is deterministic: fixed graphs are compiled-in edge
//! lists, and [`planted_random`] derives all randomness from its seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cmatrix::{C64, CMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::spectra::{DEFAULT_MATCH_TOL, SpectrumMultiset};

/// 8-vertex graph whose quarter-turn symmetry interleaves a degree-2 and
/// a degree-5 vertex class.
pub fn figure1_graph() -> Graph {
    const EDGES: [(usize, usize); 14] = [
        (1, 2),
        (1, 8),
        (2, 3),
        (2, 4),
        (2, 6),
        (2, 8),
        (3, 4),
        (4, 5),
        (4, 6),
        (4, 8),
        (5, 6),
        (6, 7),
        (6, 8),
        (7, 8),
    ];
    let mut g = Graph::new(8, false).expect("n > 0");
    for (i, j) in EDGES {
        g.add_edge(i, j).expect("edge in range");
    }
    g
}

/// The uniform quarter-turn automorphism of [`figure1_graph`].
pub fn figure1_automorphism() -> Permutation {
    Permutation::parse("(1 3 5 7)(2 4 6 8)", 8).expect("valid cycles")
}

/// A `k`-cycle on the even vertices with a pendant edge on each cycle
/// vertex, together with its rotation. Decomposes into the 2×2 blocks
/// `[[0, 1], [1, 2cos(2πj/k)]]`, which makes the simple-eigenvalue
/// bounds sharp: 2 simple eigenvalues for odd `k`, 4 for even.
pub fn k_sun(k: usize) -> Result<(Graph, Permutation)> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "k-sun needs k >= 3, got {k}"
        )));
    }
    let mut g = Graph::new(2 * k, false)?;
    for i in 1..=k {
        g.add_edge(2 * i - 1, 2 * i)?;
        g.add_edge(2 * i, if i == k { 2 } else { 2 * i + 2 })?;
    }
    Ok((g, rails_rotation(k)?))
}

/// Directed 2k-vertex ladder: both rails run one way around, every rung
/// is bidirectional. Its adjacency matrix is not symmetric, yet the
/// rotation decomposes it into blocks `[[ω^j, 1], [1, ω^j]]` with
/// spectrum `{±1 + ω^j}` — more simple eigenvalues than any symmetric
/// matrix with this symmetry could have.
pub fn directed_ladder(k: usize) -> Result<(Graph, Permutation)> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "directed ladder needs k >= 2, got {k}"
        )));
    }
    let mut g = Graph::new(2 * k, true)?;
    for i in 1..=k {
        let (left, right) = (2 * i - 1, 2 * i);
        let (next_left, next_right) = if i == k { (1, 2) } else { (2 * i + 1, 2 * i + 2) };
        g.add_edge(left, next_left)?;
        g.add_edge(right, next_right)?;
        g.add_edge(left, right)?;
        g.add_edge(right, left)?;
    }
    Ok((g, rails_rotation(k)?))
}

/// `(1, 3, …, 2k−1)(2, 4, …, 2k)`: simultaneous rotation of both rails.
fn rails_rotation(k: usize) -> Result<Permutation> {
    let n = 2 * k;
    let mut images = vec![0usize; n];
    for v in 1..=n {
        images[v - 1] = if v + 2 > n { v + 2 - n } else { v + 2 };
    }
    Permutation::from_images(images)
}

/// 10-vertex graph with a threefold symmetry fixing vertex 1: three
/// copies of a 3-vertex gadget glued around the fixed hub.
pub fn trigraph10() -> (Graph, Permutation) {
    const EDGES: [(usize, usize); 15] = [
        (1, 2),
        (1, 5),
        (1, 8),
        (2, 3),
        (2, 4),
        (3, 4),
        (3, 10),
        (4, 6),
        (5, 6),
        (5, 7),
        (6, 7),
        (7, 9),
        (8, 9),
        (8, 10),
        (9, 10),
    ];
    let mut g = Graph::new(10, false).expect("n > 0");
    for (i, j) in EDGES {
        g.add_edge(i, j).expect("edge in range");
    }
    let phi = Permutation::parse("(2 5 8)(3 6 9)(4 7 10)", 10).expect("valid cycles");
    (g, phi)
}

/// Path `1–2–…–N` with `n−N` extra leaves on vertex `N`, and the cyclic
/// rotation of those leaves. With `n` even and `N` odd the leaf orbit
/// has odd size `n−N`, and the count of simple adjacency eigenvalues
/// attains its bound `N+1` exactly.
pub fn sharpness_tree(n: usize, path_len: usize) -> Result<(Graph, Permutation)> {
    if n % 2 != 0 || path_len % 2 != 1 || path_len + 2 >= n {
        return Err(Error::InvalidParameter(format!(
            "tree needs even n and odd N < n-2, got n={n}, N={path_len}"
        )));
    }
    let mut g = Graph::new(n, false)?;
    for i in 1..path_len {
        g.add_edge(i, i + 1)?;
    }
    for leaf in path_len + 1..=n {
        g.add_edge(path_len, leaf)?;
    }
    let mut images: Vec<usize> = (1..=n).collect();
    for leaf in path_len + 1..=n {
        images[leaf - 1] = if leaf == n { path_len + 1 } else { leaf + 1 };
    }
    Ok((g, Permutation::from_images(images)?))
}

/// A small matrix quoted from an 86-vertex case-study network, along
/// with the spectrum reported for it there.
#[derive(Clone, Debug)]
pub struct NetworkBlock {
    pub label: &'static str,
    pub matrix: CMatrix,
    /// The reported eigenvalues. For the `B1,2`/`B2,2` blocks these are
    /// `{−1, 1}` even though the quoted matrix display is the identity:
    /// the display drops the weights of the underlying network, so tests
    /// assert the reported spectra rather than re-solving those two.
    pub asserted_spectrum: Vec<C64>,
}

fn real_values(values: &[f64]) -> Vec<C64> {
    values.iter().map(|&x| C64::new(x, 0.0)).collect()
}

/// The non-divisor blocks of the case-study network's adjacency matrix
/// under its three local symmetries, with the spectra asserted for them.
pub fn network_blocks() -> Vec<NetworkBlock> {
    let b11 = CMatrix::from_real_rows(&[
        &[-1.0, 1.0, 0.0, 0.0],
        &[1.0, -1.0, 1.0, 1.0],
        &[0.0, 1.0, 0.0, 0.0],
        &[0.0, 1.0, 0.0, 0.0],
    ]);
    let pm1 = real_values(&[1.0, -1.0]);
    vec![
        NetworkBlock {
            label: "B1,1",
            matrix: b11,
            asserted_spectrum: real_values(&[1.170, 0.0, -0.689, -2.481]),
        },
        NetworkBlock {
            label: "B1,2",
            matrix: CMatrix::identity(2),
            asserted_spectrum: pm1.clone(),
        },
        NetworkBlock {
            label: "B2,2",
            matrix: CMatrix::identity(2),
            asserted_spectrum: pm1,
        },
        NetworkBlock {
            label: "B1,3",
            matrix: CMatrix::zeros(1, 1),
            asserted_spectrum: real_values(&[0.0]),
        },
        NetworkBlock {
            label: "B2,3",
            matrix: CMatrix::zeros(1, 1),
            asserted_spectrum: real_values(&[0.0]),
        },
    ]
}

/// The ten adjacency eigenvalues of the case-study network certified by
/// its three local symmetries.
pub fn network_adjacency_partial() -> SpectrumMultiset {
    SpectrumMultiset::from_values(
        real_values(&[
            -2.481, -0.689, -1.0, -1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.170,
        ]),
        DEFAULT_MATCH_TOL,
    )
}

/// The ten Laplacian eigenvalues certified the same way; the smallest
/// positive one (0.523) bounds the network's algebraic connectivity
/// from above.
pub fn network_laplacian_partial() -> SpectrumMultiset {
    SpectrumMultiset::from_values(
        real_values(&[0.523, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 3.0, 3.552, 5.925]),
        DEFAULT_MATCH_TOL,
    )
}

/// Shape of a random planted instance: `fixed` fixed vertices plus
/// `(n − fixed)/k` orbits of size `k`.
#[derive(Clone, Copy, Debug)]
pub struct PlantedSpec {
    pub n: usize,
    pub k: usize,
    pub fixed: usize,
    /// Probability that each edge orbit is present.
    pub density: f64,
    pub directed: bool,
    /// Integer weights in `1..=9` instead of unit weights, so all
    /// compatibility checks stay exact.
    pub weighted: bool,
}

impl PlantedSpec {
    pub fn undirected(n: usize, k: usize, fixed: usize, density: f64) -> Self {
        PlantedSpec {
            n,
            k,
            fixed,
            density,
            directed: false,
            weighted: false,
        }
    }
}

/// A random graph with a known automorphism, plus the seed that made it.
#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub graph: Graph,
    pub automorphism: Permutation,
    pub seed: u64,
}

/// Generates a random graph whose planted permutation is an automorphism
/// by construction: every vertex pair's presence and weight is copied
/// around its orbit under the canonical rotation, and the result is
/// relabeled by a seeded shuffle so the symmetry is not visible in the
/// vertex numbering.
pub fn planted_random(seed: u64, spec: &PlantedSpec) -> Result<PlantedInstance> {
    let PlantedSpec {
        n,
        k,
        fixed,
        density,
        directed,
        weighted,
    } = *spec;
    if n == 0 || k < 2 {
        return Err(Error::InvalidParameter(format!(
            "planted instance needs n > 0 and k >= 2, got n={n}, k={k}"
        )));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!(
            "density must lie in [0, 1], got {density}"
        )));
    }
    if fixed >= n {
        return Err(Error::InvalidParameter(format!(
            "need at least one orbit: {fixed} fixed of {n} vertices"
        )));
    }
    let remaining = n - fixed;
    if remaining % k != 0 {
        return Err(Error::InfeasiblePlant { remaining, k });
    }

    // canonical rotation: orbit o occupies fixed + ok + 1 ..= fixed + (o+1)k
    let mut canonical = vec![0usize; n];
    for v in 1..=fixed {
        canonical[v - 1] = v;
    }
    for start in (fixed..n).step_by(k) {
        for offset in 0..k {
            canonical[start + offset] = start + (offset + 1) % k + 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut relabel: Vec<usize> = (1..=n).collect();
    relabel.shuffle(&mut rng);

    let mut decided = vec![false; n * n];
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut weights: Vec<f64> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if j == i || (!directed && j < i) || decided[i * n + j] {
                continue;
            }
            let present = rng.gen::<f64>() < density;
            let weight = if weighted {
                rng.gen_range(1..=9) as f64
            } else {
                1.0
            };
            let (mut a, mut b) = (i, j);
            loop {
                if decided[a * n + b] {
                    break;
                }
                decided[a * n + b] = true;
                if !directed {
                    decided[b * n + a] = true;
                }
                if present {
                    pairs.push((a + 1, b + 1));
                    weights.push(weight);
                }
                a = canonical[a] - 1;
                b = canonical[b] - 1;
            }
        }
    }

    let mut graph = if weighted {
        Graph::new_weighted(n, directed)?
    } else {
        Graph::new(n, directed)?
    };
    for ((a, b), w) in pairs.into_iter().zip(weights) {
        if weighted {
            graph.add_weighted_edge(relabel[a - 1], relabel[b - 1], w)?;
        } else {
            graph.add_edge(relabel[a - 1], relabel[b - 1])?;
        }
    }

    let mut images = vec![0usize; n];
    for v in 1..=n {
        images[relabel[v - 1] - 1] = relabel[canonical[v - 1] - 1];
    }
    let automorphism = Permutation::from_images(images)?;
    Ok(PlantedInstance {
        graph,
        automorphism,
        seed,
    })
}
