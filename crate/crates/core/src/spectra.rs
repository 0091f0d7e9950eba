//! Dense complex eigensolver plus the spectrum bookkeeping built on it:
//! multiset comparison, simple-eigenvalue counting, the symmetric-matrix
//! simple-eigenvalue bounds, and one-sided spectral-radius / spectral-gap
//! estimates from certified partial spectra.
//!
//! The solver is the classic dense chain — balance, Householder reduction
//! to upper Hessenberg form, explicitly shifted QR iteration with
//! deflation — specialized to complex arithmetic because decomposition
//! blocks are complex even for real inputs. It returns eigenvalues only;
//! nothing here needs eigenvectors.

use serde::{Deserialize, Serialize};

use crate::cmatrix::{C64, CMatrix};
use crate::decomp::decompose;
use crate::error::{Error, Result};
use crate::matrices::{CompatibleMatrix, MatrixKind};
use crate::par;
use crate::perm::{OrbitKind, Permutation, orbit_structure};

/// Default absolute tolerance for multiset matching, before scaling by
/// `max(1, ‖m‖∞)`.
pub const DEFAULT_MATCH_TOL: f64 = 1e-8;

/// Default clustering distance for [`count_simple`].
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

/// Eigenvalues listed with multiplicity, sorted by real part descending,
/// then imaginary part descending.
#[derive(Clone, Debug)]
pub struct SpectrumMultiset {
    values: Vec<C64>,
    tolerance: f64,
}

impl SpectrumMultiset {
    /// Sorts the values into canonical order and records the matching
    /// tolerance they were computed at.
    pub fn from_values(mut values: Vec<C64>, tolerance: f64) -> Self {
        values.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
        SpectrumMultiset { values, tolerance }
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values as `[re, im]` pairs in canonical order, ready for JSON.
    pub fn to_pairs(&self) -> Vec<[f64; 2]> {
        self.values.iter().map(|z| [z.re, z.im]).collect()
    }
}

fn cabs1(z: C64) -> f64 {
    z.re.abs() + z.im.abs()
}

/// Diagonal similarity scaling (powers of two, so exact) that roughly
/// equalizes row and column norms before reduction.
/// Swaps rows `a` and `b` together with columns `a` and `b`, a
/// similarity transform by a transposition.
fn exchange(h: &mut CMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    let n = h.rows();
    for j in 0..n {
        let tmp = h[(a, j)];
        h[(a, j)] = h[(b, j)];
        h[(b, j)] = tmp;
    }
    for i in 0..n {
        let tmp = h[(i, a)];
        h[(i, a)] = h[(i, b)];
        h[(i, b)] = tmp;
    }
}

/// Permutes the matrix to block upper triangular form, isolating
/// eigenvalues that need no iteration onto the diagonal outside the
/// returned window, then balances the window with exact powers of two.
///
/// Returns the inclusive active window `(low, high)`: diagonal entries
/// outside it are exact eigenvalues. The permutation phase matters for
/// accuracy, not just speed — eigenvalues of nilpotent chains (zero rows
/// or columns, common in sparse directed graphs) come out exact instead
/// of scattered by the usual ε^(1/m) perturbation of defective spectra.
fn balance(h: &mut CMatrix) -> (usize, usize) {
    let n = h.rows();
    debug_assert!(n > 0);
    let mut low = 0;
    let mut high = n - 1;

    // rows whose active off-diagonal part is zero move to the bottom
    'rows: while high > low {
        for i in (low..=high).rev() {
            let zero = (low..=high).all(|j| j == i || cabs1(h[(i, j)]) == 0.0);
            if zero {
                exchange(h, i, high);
                high -= 1;
                continue 'rows;
            }
        }
        break;
    }
    // columns whose active off-diagonal part is zero move to the left
    'cols: while low < high {
        for j in low..=high {
            let zero = (low..=high).all(|i| i == j || cabs1(h[(i, j)]) == 0.0);
            if zero {
                exchange(h, j, low);
                low += 1;
                continue 'cols;
            }
        }
        break;
    }

    const RADIX: f64 = 2.0;
    const B2: f64 = RADIX * RADIX;
    loop {
        let mut converged = true;
        for i in low..=high {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in low..=high {
                if j != i {
                    c += cabs1(h[(j, i)]);
                    r += cabs1(h[(i, j)]);
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= B2;
            }
            g = r * RADIX;
            while c >= g {
                f /= RADIX;
                c /= B2;
            }
            if (c + r) / f < 0.95 * s {
                converged = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    h[(i, j)] = h[(i, j)].scale(inv);
                }
                for j in 0..n {
                    h[(j, i)] = h[(j, i)].scale(f);
                }
            }
        }
        if converged {
            return (low, high);
        }
    }
}

/// In-place Householder reduction of the window `low..=high` to upper
/// Hessenberg form; the isolated triangles around it stay untouched.
fn hessenberg(h: &mut CMatrix, low: usize, high: usize) {
    let n = h.rows();
    if high - low < 2 {
        return;
    }
    for m in low..high - 1 {
        let below: f64 = (m + 2..=high).map(|i| h[(i, m)].norm_sqr()).sum();
        if below == 0.0 {
            continue;
        }
        let x0 = h[(m + 1, m)];
        let norm = (below + x0.norm_sqr()).sqrt();
        let alpha = if x0 == C64::new(0.0, 0.0) {
            C64::new(-norm, 0.0)
        } else {
            -(x0 / x0.norm()).scale(norm)
        };
        let mut v: Vec<C64> = (m + 1..=high).map(|i| h[(i, m)]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;

        // left: H ← (I − βvv*)H, touching only columns that can be nonzero
        for j in m..n {
            let mut s = C64::new(0.0, 0.0);
            for (t, i) in (m + 1..=high).enumerate() {
                s += v[t].conj() * h[(i, j)];
            }
            s = s.scale(beta);
            for (t, i) in (m + 1..=high).enumerate() {
                h[(i, j)] -= v[t] * s;
            }
        }
        // right: H ← H(I − βvv*); rows below the window are zero there
        for i in 0..=high {
            let mut s = C64::new(0.0, 0.0);
            for (t, j) in (m + 1..=high).enumerate() {
                s += h[(i, j)] * v[t];
            }
            s = s.scale(beta);
            for (t, j) in (m + 1..=high).enumerate() {
                h[(i, j)] -= s * v[t].conj();
            }
        }
        h[(m + 1, m)] = alpha;
        for i in m + 2..=high {
            h[(i, m)] = C64::new(0.0, 0.0);
        }
    }
}

/// Unitary rotation `[[c, s], [−s̄, c]]` (real `c`) sending `(a, b)` to
/// `(r, 0)`.
fn givens(a: C64, b: C64) -> (f64, C64) {
    if b == C64::new(0.0, 0.0) {
        return (1.0, C64::new(0.0, 0.0));
    }
    if a == C64::new(0.0, 0.0) {
        return (0.0, b.conj() / b.norm());
    }
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let unit = a / a.norm();
    (a.norm() / norm, (unit * b.conj()).scale(1.0 / norm))
}

/// Both eigenvalues of `[[a, b], [c, d]]` by the quadratic formula.
fn eig2(a: C64, b: C64, c: C64, d: C64) -> (C64, C64) {
    let mid = (a + d).scale(0.5);
    let half_diff = (a - d).scale(0.5);
    let disc = (half_diff * half_diff + b * c).sqrt();
    (mid + disc, mid - disc)
}

/// The eigenvalue of the trailing 2×2 closest to its bottom-right entry.
fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let (e1, e2) = eig2(a, b, c, d);
    if (e1 - d).norm() <= (e2 - d).norm() { e1 } else { e2 }
}

fn qr_eigenvalues(m: &CMatrix) -> Result<Vec<C64>> {
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut h = m.clone();
    let (low, high) = balance(&mut h);
    hessenberg(&mut h, low, high);
    let scale = h.inf_norm();
    let mut eigs = vec![C64::new(0.0, 0.0); n];
    for i in (0..low).chain(high + 1..n) {
        eigs[i] = h[(i, i)];
    }
    let mut hi = high;
    let mut stall = 0usize;
    let mut sweeps = 0usize;
    let cap = 40 * n;
    loop {
        // deflate: find the top of the irreducible block ending at hi
        let mut lo = hi;
        while lo > low {
            let local = cabs1(h[(lo - 1, lo - 1)]) + cabs1(h[(lo, lo)]);
            let thresh = f64::EPSILON * if local == 0.0 { scale } else { local };
            if cabs1(h[(lo, lo - 1)]) <= thresh {
                h[(lo, lo - 1)] = C64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eigs[hi] = h[(hi, hi)];
            if hi == low {
                return Ok(eigs);
            }
            hi -= 1;
            stall = 0;
            continue;
        }
        if lo + 1 == hi {
            let (e1, e2) = eig2(h[(lo, lo)], h[(lo, hi)], h[(hi, lo)], h[(hi, hi)]);
            eigs[lo] = e1;
            eigs[hi] = e2;
            if lo == low {
                return Ok(eigs);
            }
            hi = lo - 1;
            stall = 0;
            continue;
        }

        if sweeps == cap {
            return Err(Error::NonConvergence { index: hi });
        }
        sweeps += 1;
        stall += 1;
        let mu = if stall % 10 == 0 {
            // exceptional shift to break symmetric stalls
            h[(hi, hi)] + C64::new(0.75 * cabs1(h[(hi, hi - 1)]), 0.0)
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };
        for i in lo..=hi {
            h[(i, i)] -= mu;
        }
        // QR factor the shifted block by a Givens chase, then multiply
        // back in reverse to form RQ
        let mut rotations = Vec::with_capacity(hi - lo);
        for i in lo..hi {
            let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
            for j in i..=hi {
                let t1 = h[(i, j)];
                let t2 = h[(i + 1, j)];
                h[(i, j)] = t1.scale(c) + s * t2;
                h[(i + 1, j)] = t2.scale(c) - s.conj() * t1;
            }
            rotations.push((c, s));
        }
        for (offset, &(c, s)) in rotations.iter().enumerate() {
            let i = lo + offset;
            for a in lo..=(i + 1).min(hi) {
                let t1 = h[(a, i)];
                let t2 = h[(a, i + 1)];
                h[(a, i)] = t1.scale(c) + t2 * s.conj();
                h[(a, i + 1)] = t2.scale(c) - t1 * s;
            }
        }
        for i in lo..=hi {
            h[(i, i)] += mu;
        }
    }
}

/// All eigenvalues of a square matrix, with the default matching
/// tolerance scaled to the matrix norm.
pub fn eigenvalues(m: &CMatrix) -> Result<SpectrumMultiset> {
    m.dim()?;
    if let Some((row, col)) = m.find_non_finite() {
        return Err(Error::NonFinite { row, col });
    }
    let values = qr_eigenvalues(m)?;
    let tolerance = DEFAULT_MATCH_TOL * m.inf_norm().max(1.0);
    Ok(SpectrumMultiset::from_values(values, tolerance))
}

/// Solves several blocks (concurrently when the `parallel` feature is on)
/// and returns their spectra in input order.
pub fn batch_eigenvalues(blocks: &[CMatrix]) -> Result<Vec<SpectrumMultiset>> {
    par::map_indexed(blocks.len(), |i| eigenvalues(&blocks[i]))
        .into_iter()
        .collect()
}

/// Whether a perfect matching pairs the two multisets within `tol`.
///
/// Assignment-based rather than sort-based: near-ties in the sort key
/// must not prevent a valid pairing.
pub fn multiset_equal(a: &SpectrumMultiset, b: &SpectrumMultiset, tol: f64) -> bool {
    a.len() == b.len() && matching_size(a.values(), b.values(), tol) == a.len()
}

/// Whether every value of `sub` can be matched to a distinct value of
/// `full` within `tol`.
pub fn sub_multiset(sub: &SpectrumMultiset, full: &SpectrumMultiset, tol: f64) -> bool {
    sub.len() <= full.len() && matching_size(sub.values(), full.values(), tol) == sub.len()
}

/// Maximum bipartite matching (augmenting paths) between values of `a`
/// and values of `b` lying within `tol` of each other.
fn matching_size(a: &[C64], b: &[C64], tol: f64) -> usize {
    let adjacency: Vec<Vec<usize>> = a
        .iter()
        .map(|&x| {
            b.iter()
                .enumerate()
                .filter(|(_, &y)| (x - y).norm() <= tol)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let mut matched_to: Vec<Option<usize>> = vec![None; b.len()];
    let mut size = 0;
    for i in 0..a.len() {
        let mut visited = vec![false; b.len()];
        if augment(i, &adjacency, &mut matched_to, &mut visited) {
            size += 1;
        }
    }
    size
}

fn augment(
    i: usize,
    adjacency: &[Vec<usize>],
    matched_to: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &j in &adjacency[i] {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        if matched_to[j].is_none()
            || augment(matched_to[j].unwrap(), adjacency, matched_to, visited)
        {
            matched_to[j] = Some(i);
            return true;
        }
    }
    false
}

/// Number of eigenvalues whose tol-cluster is a singleton, where clusters
/// are connected components of the "within tol of each other" graph.
pub fn count_simple(s: &SpectrumMultiset, tol: f64) -> usize {
    let values = s.values();
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() <= tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut sizes = vec![0usize; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        sizes[root] += 1;
    }
    sizes.iter().filter(|&&c| c == 1).count()
}

/// One upper bound on how many simple eigenvalues a symmetric matrix
/// compatible with the permutation can have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimpleEigBound {
    /// Orbit size `k` odd and no fixed vertices: at most `r` simple.
    UniformOdd { k: usize, r: usize, bound: usize },
    /// Orbit size `k` even and no fixed vertices: at most `2r` simple.
    UniformEven { k: usize, r: usize, bound: usize },
    /// `k` odd with `fixed` fixed vertices: at most `fixed + (n−fixed)/k`.
    BasicOdd { k: usize, fixed: usize, bound: usize },
    /// `k` even with `fixed` fixed vertices: at most `fixed + 2(n−fixed)/k`.
    BasicEven { k: usize, fixed: usize, bound: usize },
    /// Always applicable: at most (odd cycles) + 2·(even cycles), fixed
    /// points counting as odd cycles.
    CycleCount {
        odd_cycles: usize,
        even_cycles: usize,
        bound: usize,
    },
}

impl SimpleEigBound {
    pub fn bound(&self) -> usize {
        match *self {
            SimpleEigBound::UniformOdd { bound, .. }
            | SimpleEigBound::UniformEven { bound, .. }
            | SimpleEigBound::BasicOdd { bound, .. }
            | SimpleEigBound::BasicEven { bound, .. }
            | SimpleEigBound::CycleCount { bound, .. } => bound,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SimpleEigBound::UniformOdd { .. } => "UniformOdd",
            SimpleEigBound::UniformEven { .. } => "UniformEven",
            SimpleEigBound::BasicOdd { .. } => "BasicOdd",
            SimpleEigBound::BasicEven { .. } => "BasicEven",
            SimpleEigBound::CycleCount { .. } => "CycleCount",
        }
    }
}

impl std::fmt::Display for SimpleEigBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            SimpleEigBound::UniformOdd { k, r, bound } => {
                write!(f, "UniformOdd (k={k} odd, r={r}): at most {bound}")
            }
            SimpleEigBound::UniformEven { k, r, bound } => {
                write!(f, "UniformEven (k={k} even, r={r}): at most {bound}")
            }
            SimpleEigBound::BasicOdd { k, fixed, bound } => {
                write!(f, "BasicOdd (k={k} odd, {fixed} fixed): at most {bound}")
            }
            SimpleEigBound::BasicEven { k, fixed, bound } => {
                write!(f, "BasicEven (k={k} even, {fixed} fixed): at most {bound}")
            }
            SimpleEigBound::CycleCount {
                odd_cycles,
                even_cycles,
                bound,
            } => write!(
                f,
                "CycleCount ({odd_cycles} odd + {even_cycles} even cycles): at most {bound}"
            ),
        }
    }
}

/// Every simple-eigenvalue bound the permutation's cycle type supports,
/// for symmetric matrices on `n` vertices compatible with it.
pub fn count_bounds(phi: &Permutation, n: usize) -> Result<Vec<SimpleEigBound>> {
    if phi.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: phi.n(),
        });
    }
    let structure = orbit_structure(phi);
    let mut bounds = Vec::new();
    match structure.kind {
        OrbitKind::Uniform(k) => {
            let r = n / k;
            bounds.push(if k % 2 == 1 {
                SimpleEigBound::UniformOdd { k, r, bound: r }
            } else {
                SimpleEigBound::UniformEven { k, r, bound: 2 * r }
            });
        }
        OrbitKind::Basic(k) => {
            let fixed = structure.fixed_vertices.len();
            bounds.push(if k % 2 == 1 {
                SimpleEigBound::BasicOdd {
                    k,
                    fixed,
                    bound: fixed + (n - fixed) / k,
                }
            } else {
                SimpleEigBound::BasicEven {
                    k,
                    fixed,
                    bound: fixed + 2 * (n - fixed) / k,
                }
            });
        }
        OrbitKind::Trivial | OrbitKind::General => {}
    }
    let odd_cycles = structure.orbits.iter().filter(|o| o.len() % 2 == 1).count();
    let even_cycles = structure.orbits.len() - odd_cycles;
    bounds.push(SimpleEigBound::CycleCount {
        odd_cycles,
        even_cycles,
        bound: odd_cycles + 2 * even_cycles,
    });
    Ok(bounds)
}

/// Eigenvalues of all non-divisor blocks of `m` under each automorphism:
/// every returned value is certified to lie in `σ(m)`, at the cost of
/// never solving the (possibly large) divisor blocks.
pub fn certified_eigen_subset(
    m: &CompatibleMatrix,
    automorphisms: &[Permutation],
) -> Result<SpectrumMultiset> {
    let mut blocks = Vec::new();
    for phi in automorphisms {
        blocks.extend(decompose(m, phi)?.blocks);
    }
    let spectra = batch_eigenvalues(&blocks)?;
    let values: Vec<C64> = spectra
        .iter()
        .flat_map(|s| s.values().iter().copied())
        .collect();
    let tolerance = DEFAULT_MATCH_TOL * m.entries().inf_norm().max(1.0);
    Ok(SpectrumMultiset::from_values(values, tolerance))
}

/// One-sided bounds derived from a certified partial spectrum: the
/// spectral radius is at least the largest partial modulus, and for
/// Laplacians the spectral gap (algebraic connectivity) is at most the
/// smallest strictly positive partial value. Partial spectra cannot
/// support the opposite inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectralBounds {
    pub radius_lower_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gap_upper_bound: Option<f64>,
}

/// Computes [`SpectralBounds`] from a partial spectrum known to be a
/// sub-multiset of the full one.
pub fn spectral_bounds(partial: &SpectrumMultiset, kind: MatrixKind) -> Result<SpectralBounds> {
    if partial.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let radius_lower_bound = partial
        .values()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let gap_upper_bound = if kind == MatrixKind::Laplacian {
        partial
            .values()
            .iter()
            .map(|z| z.re)
            .filter(|&x| x > partial.tolerance())
            .fold(None, |best: Option<f64>, x| {
                Some(best.map_or(x, |b| b.min(x)))
            })
    } else {
        None
    };
    Ok(SpectralBounds {
        radius_lower_bound,
        gap_upper_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::matrices::build_matrix;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn spectrum_of(rows: &[&[f64]]) -> SpectrumMultiset {
        eigenvalues(&CMatrix::from_real_rows(rows)).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn two_by_two_divisor_example() {
        let s = spectrum_of(&[&[0.0, 2.0], &[2.0, 3.0]]);
        assert_eq!(s.len(), 2);
        assert!(close(s.values()[0].re, 4.0));
        assert!(close(s.values()[1].re, -1.0));
    }

    #[test]
    fn identity_has_one_with_full_multiplicity() {
        let s = eigenvalues(&CMatrix::identity(7)).unwrap();
        assert!(s.values().iter().all(|z| (z - c(1.0, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn empty_and_single_entry() {
        assert!(eigenvalues(&CMatrix::zeros(0, 0)).unwrap().is_empty());
        let s = spectrum_of(&[&[5.0]]);
        assert!(close(s.values()[0].re, 5.0));
    }

    #[test]
    fn rejects_non_square_and_non_finite() {
        assert!(matches!(
            eigenvalues(&CMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 1)] = c(f64::NAN, 0.0);
        assert!(matches!(
            eigenvalues(&m),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
    }

    #[test]
    fn hexagon_adjacency_spectrum() {
        let g = Graph::parse("n=6 undirected\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n").unwrap();
        let a = build_matrix(&g, MatrixKind::Adjacency).unwrap();
        let s = eigenvalues(a.entries()).unwrap();
        let expect = SpectrumMultiset::from_values(
            vec![
                c(2.0, 0.0),
                c(1.0, 0.0),
                c(1.0, 0.0),
                c(-1.0, 0.0),
                c(-1.0, 0.0),
                c(-2.0, 0.0),
            ],
            0.0,
        );
        assert!(multiset_equal(&s, &expect, 1e-9));
        assert_eq!(count_simple(&s, DEFAULT_CLUSTER_TOL), 2);
    }

    #[test]
    fn complex_entries_are_handled() {
        // [[0, i], [−i, 0]] is Hermitian with spectrum {1, −1}
        let m = CMatrix::from_rows(vec![
            vec![c(0.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(0.0, 0.0)],
        ]);
        let s = eigenvalues(&m).unwrap();
        assert!(close(s.values()[0].re, 1.0));
        assert!(close(s.values()[1].re, -1.0));

        // nilpotent Jordan block: all eigenvalues zero
        let mut j = CMatrix::zeros(4, 4);
        for i in 0..3 {
            j[(i, i + 1)] = c(1.0, 0.0);
        }
        let s = eigenvalues(&j).unwrap();
        assert!(s.values().iter().all(|z| z.norm() < 1e-8));
    }

    #[test]
    fn trace_matches_eigenvalue_sum() {
        let g = Graph::parse("n=5 undirected\n1 2\n1 3\n2 3\n3 4\n4 5\n2 5\n").unwrap();
        for kind in [
            MatrixKind::Adjacency,
            MatrixKind::Laplacian,
            MatrixKind::SignlessLaplacian,
            MatrixKind::NormalizedLaplacian,
            MatrixKind::Distance,
        ] {
            let m = build_matrix(&g, kind).unwrap();
            let s = eigenvalues(m.entries()).unwrap();
            let sum: C64 = s.values().iter().sum();
            let trace: C64 = (0..5).map(|i| m.entries()[(i, i)]).sum();
            assert!((sum - trace).norm() < 1e-9, "{kind}");
        }
    }

    #[test]
    fn multiset_matching_cases() {
        let a = SpectrumMultiset::from_values(vec![c(0.0, 0.0)], 0.0);
        let b = SpectrumMultiset::from_values(vec![c(1e-13, 0.0)], 0.0);
        assert!(multiset_equal(&a, &b, 1e-10));
        assert!(!multiset_equal(&a, &b, 1e-14));

        let ones = SpectrumMultiset::from_values(vec![c(1.0, 0.0), c(1.0, 0.0)], 0.0);
        let one = SpectrumMultiset::from_values(vec![c(1.0, 0.0)], 0.0);
        assert!(!multiset_equal(&ones, &one, 1e-6));
        assert!(sub_multiset(&one, &ones, 1e-6));
        assert!(!sub_multiset(&ones, &one, 1e-6));

        // multiplicity honesty: {x, x} must not match {x, far}
        let pair = SpectrumMultiset::from_values(vec![c(1.0, 0.0), c(2.0, 0.0)], 0.0);
        assert!(!multiset_equal(&ones, &pair, 1e-6));

        // near-tie where greedy sorted pairing would fail
        let left = SpectrumMultiset::from_values(vec![c(0.0, 1e-7), c(0.0, -1e-7)], 0.0);
        let right = SpectrumMultiset::from_values(vec![c(1e-7, 0.0), c(-1e-7, 0.0)], 0.0);
        assert!(multiset_equal(&left, &right, 3e-7));
    }

    #[test]
    fn count_simple_clusters() {
        let s = SpectrumMultiset::from_values(
            vec![c(0.0, 0.0), c(2.0, 0.0), c(4.0, 0.0), c(4.0, 0.0)],
            0.0,
        );
        assert_eq!(count_simple(&s, 1e-6), 2);
        let all_equal = SpectrumMultiset::from_values(vec![c(3.0, 0.0); 4], 0.0);
        assert_eq!(count_simple(&all_equal, 1e-6), 0);
        // chain clustering: 0, tol, 2tol collapse into one component
        let chain = SpectrumMultiset::from_values(
            vec![c(0.0, 0.0), c(1e-6, 0.0), c(2e-6, 0.0), c(1.0, 0.0)],
            0.0,
        );
        assert_eq!(count_simple(&chain, 1e-6), 1);
    }

    #[test]
    fn bounds_for_uniform_and_basic_kinds() {
        let uniform_odd = Permutation::parse("(1 2 3)(4 5 6)", 6).unwrap();
        let bounds = count_bounds(&uniform_odd, 6).unwrap();
        assert_eq!(
            bounds[0],
            SimpleEigBound::UniformOdd { k: 3, r: 2, bound: 2 }
        );
        assert_eq!(
            bounds[1],
            SimpleEigBound::CycleCount { odd_cycles: 2, even_cycles: 0, bound: 2 }
        );

        let uniform_even = Permutation::parse("(1 2 3 4)(5 6 7 8)", 8).unwrap();
        assert_eq!(
            count_bounds(&uniform_even, 8).unwrap()[0],
            SimpleEigBound::UniformEven { k: 4, r: 2, bound: 4 }
        );

        let basic_odd = Permutation::parse("(2 5 8)(3 6 9)(4 7 10)", 10).unwrap();
        assert_eq!(
            count_bounds(&basic_odd, 10).unwrap()[0],
            SimpleEigBound::BasicOdd { k: 3, fixed: 1, bound: 4 }
        );

        let basic_even = Permutation::parse("(3 4)(5 6)", 6).unwrap();
        let bounds = count_bounds(&basic_even, 6).unwrap();
        assert_eq!(
            bounds[0],
            SimpleEigBound::BasicEven { k: 2, fixed: 2, bound: 6 }
        );
        assert_eq!(
            bounds[1],
            SimpleEigBound::CycleCount { odd_cycles: 2, even_cycles: 2, bound: 6 }
        );

        let general = Permutation::parse("(1 2)(3 4 5)", 5).unwrap();
        let bounds = count_bounds(&general, 5).unwrap();
        assert_eq!(bounds.len(), 1);
        // one odd cycle plus twice one even cycle
        assert_eq!(bounds[0].bound(), 3);
        assert!(matches!(count_bounds(&general, 9), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn certified_subset_is_contained_in_full_spectrum() {
        let g = Graph::parse(
            "n=8 undirected\n\
             1 2\n1 8\n2 3\n2 4\n2 6\n2 8\n3 4\n4 5\n4 6\n4 8\n5 6\n6 7\n6 8\n7 8\n",
        )
        .unwrap();
        let a = build_matrix(&g, MatrixKind::Adjacency).unwrap();
        let phi = Permutation::parse("(1 3 5 7)(2 4 6 8)", 8).unwrap();
        let partial = certified_eigen_subset(&a, std::slice::from_ref(&phi)).unwrap();
        assert_eq!(partial.len(), 6);
        let full = eigenvalues(a.entries()).unwrap();
        assert!(sub_multiset(&partial, &full, 1e-8));

        let shift = Permutation::parse("(1 2 3 4 5 6 7 8)", 8).unwrap();
        assert!(certified_eigen_subset(&a, &[shift]).is_err());
    }

    #[test]
    fn one_sided_bounds_from_partial_values() {
        let partial = SpectrumMultiset::from_values(
            vec![
                c(0.523, 0.0),
                c(1.0, 0.0),
                c(3.0, 0.0),
                c(0.0, 0.0),
                c(5.925, 0.0),
            ],
            DEFAULT_MATCH_TOL,
        );
        let report = spectral_bounds(&partial, MatrixKind::Laplacian).unwrap();
        assert!(close(report.radius_lower_bound, 5.925));
        assert!(close(report.gap_upper_bound.unwrap(), 0.523));

        let report = spectral_bounds(&partial, MatrixKind::Adjacency).unwrap();
        assert!(report.gap_upper_bound.is_none());

        let zero_only =
            SpectrumMultiset::from_values(vec![c(0.0, 0.0)], DEFAULT_MATCH_TOL);
        let report = spectral_bounds(&zero_only, MatrixKind::Laplacian).unwrap();
        assert!(report.gap_upper_bound.is_none());
        assert!(close(report.radius_lower_bound, 0.0));

        let empty = SpectrumMultiset::from_values(Vec::new(), 0.0);
        assert!(matches!(
            spectral_bounds(&empty, MatrixKind::Laplacian),
            Err(Error::EmptySpectrum)
        ));
    }

    #[test]
    fn spectral_bounds_json_uses_camel_case() {
        let report = SpectralBounds {
            radius_lower_bound: 2.5,
            gap_upper_bound: Some(0.5),
        };
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(text, "{\"radiusLowerBound\":2.5,\"gapUpperBound\":0.5}");
        let none = SpectralBounds {
            radius_lower_bound: 2.5,
            gap_upper_bound: None,
        };
        assert_eq!(
            serde_json::to_string(&none).unwrap(),
            "{\"radiusLowerBound\":2.5}"
        );
    }

    mod random_matrices {
        use super::*;
        use proptest::prelude::*;

        fn matrix_from(values: &[(f64, f64)], n: usize) -> CMatrix {
            let mut m = CMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let (re, im) = values[i * n + j];
                    m[(i, j)] = C64::new(re, im);
                }
            }
            m
        }

        proptest! {
            #[test]
            fn eigenvalue_sum_equals_trace(
                n in 1usize..7,
                values in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 49),
            ) {
                let m = matrix_from(&values, n);
                let s = eigenvalues(&m).unwrap();
                prop_assert_eq!(s.len(), n);
                let sum: C64 = s.values().iter().sum();
                let trace: C64 = (0..n).map(|i| m[(i, i)]).sum();
                prop_assert!((sum - trace).norm() < 1e-8 * m.inf_norm().max(1.0));
            }

            #[test]
            fn spectrum_invariant_under_transpose(
                n in 1usize..6,
                values in proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 36),
            ) {
                let m = matrix_from(&values, n);
                let s = eigenvalues(&m).unwrap();
                let st = eigenvalues(&m.transpose()).unwrap();
                prop_assert!(multiset_equal(&s, &st, 1e-7 * m.inf_norm().max(1.0)));
            }
        }
    }
}
