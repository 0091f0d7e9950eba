//! The decomposition engine: transversals, DFT similarity blocks, and the
//! block diagonalization itself.
//!
//! For a matrix `M` compatible with a uniform automorphism `φ` of orbit
//! size `k`, relabeling by transversal powers makes `M` block circulant,
//! and conjugating by the block DFT matrix `S` splits it into `k` blocks
//! `B_j = ∑_ℓ ω^{jℓ} M_ℓ` with `ω = e^{2πi/k}`. When `φ` also has fixed
//! vertices (the basic case) the first diagonal block grows to
//! `[[F, kH], [L, B₀]]`, which is exactly the divisor matrix of the orbit
//! partition. Either way the union of the block spectra is `σ(M)`.

use serde::{Deserialize, Serialize};

use crate::cmatrix::{C64, CMatrix};
use crate::error::{Error, Result};
use crate::matrices::{CompatibleMatrix, find_incompatibility};
use crate::par;
use crate::perm::{OrbitKind, Permutation, orbit_structure};

/// `ω^e` for `ω = e^{2πi/k}`, with exact values on the four axis
/// directions so that integer matrices stay integral under `k ∈ {1,2,4}`
/// (and at the axis powers of any other `k`).
pub fn unity_power(k: usize, e: usize) -> C64 {
    let t = e % k;
    if (4 * t) % k == 0 {
        match (4 * t / k) % 4 {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        }
    } else {
        let theta = 2.0 * std::f64::consts::PI * t as f64 / k as f64;
        C64::new(theta.cos(), theta.sin())
    }
}

/// One representative per `k`-orbit and all its `φ`-power images.
#[derive(Clone, Debug)]
pub struct Transversal {
    fixed: Vec<usize>,
    base: Vec<usize>,
    powers: Vec<Vec<usize>>,
}

impl Transversal {
    /// Fixed vertices `𝒯_f`, ascending; empty in the uniform case.
    pub fn fixed(&self) -> &[usize] {
        &self.fixed
    }

    /// The representatives `𝒯₀`: minimum vertex of each `k`-orbit, orbits
    /// ordered by that minimum.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// `𝒯₀, 𝒯₁, …, 𝒯_{k−1}` where `𝒯_ℓ[o] = φ^ℓ(𝒯₀[o])`.
    pub fn powers(&self) -> &[Vec<usize>] {
        &self.powers
    }

    pub fn k(&self) -> usize {
        self.powers.len()
    }

    pub fn r(&self) -> usize {
        self.base.len()
    }

    /// The relabeling `𝒯_f, 𝒯₀, …, 𝒯_{k−1}` as a vertex list.
    pub fn ordering(&self) -> Vec<usize> {
        let mut out = self.fixed.clone();
        for power in &self.powers {
            out.extend_from_slice(power);
        }
        out
    }
}

/// Chooses the minimum vertex of each `k`-orbit and computes its power
/// images. Fails for identity or mixed-orbit-size permutations.
pub fn build_transversal(phi: &Permutation) -> Result<Transversal> {
    let structure = orbit_structure(phi);
    let k = match structure.kind {
        OrbitKind::Uniform(k) | OrbitKind::Basic(k) => k,
        kind => {
            return Err(Error::WrongOrbitKind {
                kind: kind.to_string(),
            });
        }
    };
    let base: Vec<usize> = structure
        .orbits
        .iter()
        .filter(|orbit| orbit.len() == k)
        .map(|orbit| orbit[0])
        .collect();
    let mut powers = Vec::with_capacity(k);
    powers.push(base.clone());
    for _ in 1..k {
        let prev = powers.last().unwrap();
        powers.push(prev.iter().map(|&v| phi.apply(v)).collect());
    }
    Ok(Transversal {
        fixed: structure.fixed_vertices,
        base,
        powers,
    })
}

/// The `kr × kr` block DFT matrix with `(p,q)` block `ω^{(p−1)(q−1)} I_r`.
/// Satisfies `S^{−1} = (1/k) S*`.
pub fn dft_similarity(k: usize, r: usize) -> CMatrix {
    assert!(k >= 1 && r >= 1, "dft_similarity needs k >= 1 and r >= 1");
    let mut s = CMatrix::zeros(k * r, k * r);
    for bp in 0..k {
        for bq in 0..k {
            let w = unity_power(k, bp * bq);
            for a in 0..r {
                s[(bp * r + a, bq * r + a)] = w;
            }
        }
    }
    s
}

/// The result of decomposing a compatible matrix over an automorphism:
/// the relabeling, the divisor block, and the remaining blocks
/// `B₁ … B_{k−1}`, whose spectra together form `σ(M)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Decomposition {
    /// Orbit size.
    pub k: usize,
    /// Number of `k`-orbits, i.e. `|𝒯₀|`.
    pub r: usize,
    /// Number of fixed vertices.
    pub p: usize,
    /// The relabeling `𝒯_f, 𝒯₀, …, 𝒯_{k−1}` (vertex numbers).
    pub ordering: Vec<usize>,
    /// `(p+r)×(p+r)` block `[[F, kH], [L, B₀]]`; just `B₀` when `p = 0`.
    pub divisor_block: CMatrix,
    /// `B₁ … B_{k−1}`, each `r × r`.
    pub blocks: Vec<CMatrix>,
    /// The primitive root `e^{2πi/k}`.
    #[serde(with = "c64_pair")]
    pub omega: C64,
}

mod c64_pair {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::cmatrix::C64;

    pub fn serialize<S: Serializer>(z: &C64, ser: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<C64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(de)?;
        Ok(C64::new(re, im))
    }
}

fn compat_tol(m: &CMatrix) -> f64 {
    if m.is_integral() { 0.0 } else { 1e-9 }
}

/// Block diagonalizes `m` over the uniform or basic automorphism `φ`.
///
/// Never touches eigenvalues: the outputs are exact submatrix sums, so an
/// integral input yields integral (Gaussian-integer) blocks whenever the
/// roots of unity involved are exact.
pub fn decompose(m: &CompatibleMatrix, phi: &Permutation) -> Result<Decomposition> {
    let n = m.n();
    if phi.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: phi.n(),
        });
    }
    if let Some((i, j)) = find_incompatibility(m.entries(), phi, compat_tol(m.entries())) {
        return Err(Error::Incompatible {
            i: i + 1,
            j: j + 1,
            pi: phi.apply(i + 1),
            pj: phi.apply(j + 1),
        });
    }
    let trans = build_transversal(phi)?;
    let (k, r, p) = (trans.k(), trans.r(), trans.fixed().len());

    let base0: Vec<usize> = trans.base().iter().map(|&v| v - 1).collect();
    let sub_m: Vec<CMatrix> = trans
        .powers()
        .iter()
        .map(|power| {
            let cols: Vec<usize> = power.iter().map(|&v| v - 1).collect();
            m.entries().submatrix(&base0, &cols)
        })
        .collect();

    let all_blocks = par::map_indexed(k, |j| {
        let mut b = CMatrix::zeros(r, r);
        for (l, m_l) in sub_m.iter().enumerate() {
            let w = unity_power(k, j * l);
            for a in 0..r {
                for c in 0..r {
                    b[(a, c)] += w * m_l[(a, c)];
                }
            }
        }
        b
    });
    let mut all_blocks = all_blocks.into_iter();
    let b0 = all_blocks.next().unwrap();

    let divisor_block = if p == 0 {
        b0
    } else {
        let fixed0: Vec<usize> = trans.fixed().iter().map(|&v| v - 1).collect();
        let f = m.entries().submatrix(&fixed0, &fixed0);
        let h = m.entries().submatrix(&fixed0, &base0);
        let l = m.entries().submatrix(&base0, &fixed0);
        let kf = C64::new(k as f64, 0.0);
        let mut d = CMatrix::zeros(p + r, p + r);
        for a in 0..p {
            for b in 0..p {
                d[(a, b)] = f[(a, b)];
            }
            for b in 0..r {
                d[(a, p + b)] = kf * h[(a, b)];
            }
        }
        for a in 0..r {
            for b in 0..p {
                d[(p + a, b)] = l[(a, b)];
            }
            for b in 0..r {
                d[(p + a, p + b)] = b0[(a, b)];
            }
        }
        d
    };

    Ok(Decomposition {
        k,
        r,
        p,
        ordering: trans.ordering(),
        divisor_block,
        blocks: all_blocks.collect(),
        omega: unity_power(k, 1),
    })
}

/// Recomputes the similarity transform from scratch and returns the
/// largest absolute entry of `T^{−1} (PᵀMP) T − (divisor ⊕ B₁ ⊕ … ⊕ B_{k−1})`,
/// where `P` permutes into `d.ordering` and `T = I_p ⊕ S`.
///
/// `T` is inverted analytically as `I_p ⊕ (1/k) S*`, so the residual
/// carries no conditioning error from a numeric solve.
pub fn verify_similarity(
    m: &CompatibleMatrix,
    phi: &Permutation,
    d: &Decomposition,
) -> Result<f64> {
    let n = m.n();
    if phi.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: phi.n(),
        });
    }
    if d.ordering.len() != n || d.p + d.k * d.r != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: d.ordering.len(),
        });
    }
    let ord0: Vec<usize> = d.ordering.iter().map(|&v| v - 1).collect();
    let relabeled = m.entries().submatrix(&ord0, &ord0);

    let s = dft_similarity(d.k, d.r);
    let s_inv = s.adjoint().scale(C64::new(1.0 / d.k as f64, 0.0));
    let eye = CMatrix::identity(d.p);
    let (t, t_inv) = if d.p == 0 {
        (s, s_inv)
    } else {
        (
            CMatrix::block_diag(&[&eye, &s]),
            CMatrix::block_diag(&[&eye, &s_inv]),
        )
    };

    let mut parts: Vec<&CMatrix> = vec![&d.divisor_block];
    parts.extend(d.blocks.iter());
    let direct_sum = CMatrix::block_diag(&parts);

    Ok(t_inv.mul(&relabeled).mul(&t).sub(&direct_sum).max_abs())
}
