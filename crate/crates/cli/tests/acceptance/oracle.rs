//! Independent numeric routes used to cross-check the library: a
//! characteristic-polynomial eigensolver (Faddeev–LeVerrier coefficients
//! plus Durand–Kerner root finding), an LU determinant, and a pivoted
//! elimination rank. None of these share code with the shipped QR
//! iteration.

use eqdecomp::{C64, CMatrix};

/// Coefficients of det(λI − A) = λⁿ + a[n−1]λⁿ⁻¹ + … + a[0].
pub fn char_poly(a: &CMatrix) -> Vec<C64> {
    let n = a.rows();
    let mut coeffs = vec![C64::new(0.0, 0.0); n];
    let mut m = CMatrix::identity(n);
    for k in 1..=n {
        m = a.mul(&m);
        let trace: C64 = (0..n).map(|i| m[(i, i)]).sum();
        let c = -trace / k as f64;
        coeffs[n - k] = c;
        for i in 0..n {
            m[(i, i)] += c;
        }
    }
    coeffs
}

/// All roots of the monic polynomial λⁿ + a[n−1]λⁿ⁻¹ + … + a[0] by
/// Durand–Kerner iteration. Fine for the tiny degrees used here.
pub fn poly_roots(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len();
    if n == 0 {
        return Vec::new();
    }
    let radius = 1.0 + coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..n).map(|i| seed.powu(i as u32 + 1) * radius).collect();

    let eval = |x: C64| -> C64 {
        let mut p = C64::new(1.0, 0.0);
        for &c in coeffs.iter().rev() {
            p = p * x + c;
        }
        p
    };

    for _ in 0..1000 {
        let mut max_step = 0.0_f64;
        for i in 0..n {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                // coincident guesses; nudge apart and retry next sweep
                roots[i] += C64::new(1e-6, 1e-6);
                max_step = f64::MAX;
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step <= 1e-14 * radius {
            break;
        }
    }
    roots
}

pub fn eigen_by_char_poly(a: &CMatrix) -> Vec<C64> {
    poly_roots(&char_poly(a))
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det_lu(a: &CMatrix) -> C64 {
    let n = a.rows();
    let mut m = a.clone();
    let mut det = C64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| m[(p, col)].norm().total_cmp(&m[(q, col)].norm()))
            .unwrap();
        if m[(pivot, col)].norm() == 0.0 {
            return C64::new(0.0, 0.0);
        }
        if pivot != col {
            for j in 0..n {
                let tmp = m[(col, j)];
                m[(col, j)] = m[(pivot, j)];
                m[(pivot, j)] = tmp;
            }
            det = -det;
        }
        det *= m[(col, col)];
        for row in col + 1..n {
            let factor = m[(row, col)] / m[(col, col)];
            for j in col..n {
                let sub = factor * m[(col, j)];
                m[(row, j)] -= sub;
            }
        }
    }
    det
}

/// Rank by row elimination with partial pivoting; pivots below `tol`
/// count as zero.
pub fn rank(a: &CMatrix, tol: f64) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .max_by(|&p, &q| m[(p, col)].norm().total_cmp(&m[(q, col)].norm()))
            .unwrap();
        if m[(pivot, col)].norm() <= tol {
            continue;
        }
        if pivot != rank {
            for j in 0..cols {
                let tmp = m[(rank, j)];
                m[(rank, j)] = m[(pivot, j)];
                m[(pivot, j)] = tmp;
            }
        }
        for row in rank + 1..rows {
            let factor = m[(row, col)] / m[(rank, col)];
            for j in col..cols {
                let sub = factor * m[(rank, j)];
                m[(row, j)] -= sub;
            }
        }
        rank += 1;
    }
    rank
}
