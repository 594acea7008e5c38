//! Dense complex linear algebra for small matrices (dimension <= 16).
//!
//! Decompositions use Jacobi iterations: one-sided Jacobi for the SVD and
//! two-sided Jacobi for Hermitian eigenproblems. For the matrix sizes in
//! this crate they converge in a handful of sweeps and give high relative
//! accuracy even for tiny singular values, which matters because rank
//! counting happens at the 1e-7 threshold.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::tol;

const MAX_SWEEPS: usize = 64;

pub const C_ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
pub const C_ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Conjugate transpose.
pub fn dagger(a: &Array2<Complex64>) -> Array2<Complex64> {
    a.t().mapv(|x| x.conj())
}

/// Largest entrywise absolute difference.
pub fn max_abs_diff(a: &Array2<Complex64>, b: &Array2<Complex64>) -> f64 {
    assert_eq!(a.dim(), b.dim());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Identity matrix of side `n`.
pub fn eye(n: usize) -> Array2<Complex64> {
    Array2::from_shape_fn((n, n), |(i, j)| if i == j { C_ONE } else { C_ZERO })
}

/// `max |U†U - I|` as a unitarity defect.
pub fn unitarity_defect(a: &Array2<Complex64>) -> f64 {
    let n = a.nrows();
    max_abs_diff(&dagger(a).dot(a), &eye(n))
}

pub fn is_unitary(a: &Array2<Complex64>, tolerance: f64) -> bool {
    a.nrows() == a.ncols() && unitarity_defect(a) <= tolerance
}

/// Frobenius norm.
pub fn frobenius(a: &Array2<Complex64>) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub fn trace(a: &Array2<Complex64>) -> Complex64 {
    (0..a.nrows()).map(|i| a[(i, i)]).sum()
}

/// Determinant by LU with partial pivoting.
pub fn det(a: &Array2<Complex64>) -> Complex64 {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let mut m = a.clone();
    let mut d = C_ONE;
    for k in 0..n {
        let mut pivot = k;
        for r in k + 1..n {
            if m[(r, k)].norm() > m[(pivot, k)].norm() {
                pivot = r;
            }
        }
        if m[(pivot, k)].norm() == 0.0 {
            return C_ZERO;
        }
        if pivot != k {
            for c in 0..n {
                let tmp = m[(k, c)];
                m[(k, c)] = m[(pivot, c)];
                m[(pivot, c)] = tmp;
            }
            d = -d;
        }
        d *= m[(k, k)];
        for r in k + 1..n {
            let f = m[(r, k)] / m[(k, k)];
            for c in k..n {
                let sub = f * m[(k, c)];
                m[(r, c)] -= sub;
            }
        }
    }
    d
}

/// Singular value decomposition `a = u · diag(s) · v†` with `s` descending.
pub struct Svd {
    pub u: Array2<Complex64>,
    pub s: Vec<f64>,
    pub v: Array2<Complex64>,
}

/// One-sided Jacobi SVD. `u` is m×k and `v` is n×k with k = min(m, n);
/// both have orthonormal columns.
pub fn svd(a: &Array2<Complex64>) -> Svd {
    // Work on the transpose when m < n so columns are the short axis.
    let (m, n) = a.dim();
    if m < n {
        let t = svd(&a.t().mapv(|x| x.conj()).to_owned());
        return Svd {
            u: t.v,
            s: t.s,
            v: t.u,
        };
    }

    let mut b = a.clone();
    let mut v = eye(n);
    let scale = frobenius(a).max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let gpp: f64 = (0..m).map(|r| b[(r, p)].norm_sqr()).sum();
                let gqq: f64 = (0..m).map(|r| b[(r, q)].norm_sqr()).sum();
                let gpq: Complex64 = (0..m).map(|r| b[(r, p)].conj() * b[(r, q)]).sum();
                if gpq.norm() <= tol::JACOBI * (gpp * gqq).sqrt() + tol::JACOBI * scale * scale {
                    continue;
                }
                rotated = true;
                let phase = Complex64::from_polar(1.0, -gpq.arg());
                let theta = (gqq - gpp) / (2.0 * gpq.norm());
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for r in 0..m {
                    let bp = b[(r, p)];
                    let bq = b[(r, q)];
                    b[(r, p)] = c * bp - s * phase * bq;
                    b[(r, q)] = s * bp + c * phase * bq;
                }
                for r in 0..n {
                    let vp = v[(r, p)];
                    let vq = v[(r, q)];
                    v[(r, p)] = c * vp - s * phase * vq;
                    v[(r, q)] = s * vp + c * phase * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|r| b[(r, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let mut u = Array2::from_elem((m, n), C_ZERO);
    let mut vs = Array2::from_elem((n, n), C_ZERO);
    let mut s = Vec::with_capacity(n);
    for (k, &j) in order.iter().enumerate() {
        s.push(norms[j]);
        if norms[j] > 0.0 {
            for r in 0..m {
                u[(r, k)] = b[(r, j)] / norms[j];
            }
        }
        for r in 0..n {
            vs[(r, k)] = v[(r, j)];
        }
    }
    complete_zero_columns(&mut u, &s, scale);
    Svd { u, s, v: vs }
}

/// Replace the (numerically meaningless) u-columns of vanished singular
/// values with an orthonormal completion, so callers always see orthonormal
/// bases.
fn complete_zero_columns(u: &mut Array2<Complex64>, s: &[f64], scale: f64) {
    let (m, n) = u.dim();
    let cutoff = 1e-14 * scale.max(1.0);
    for k in 0..n {
        if s[k] > cutoff {
            continue;
        }
        // Gram-Schmidt a standard basis vector against all earlier columns.
        'candidates: for e in 0..m {
            let mut col: Vec<Complex64> = (0..m)
                .map(|r| if r == e { C_ONE } else { C_ZERO })
                .collect();
            for j in 0..k {
                let ov: Complex64 = (0..m).map(|r| u[(r, j)].conj() * col[r]).sum();
                for r in 0..m {
                    let sub = ov * u[(r, j)];
                    col[r] -= sub;
                }
            }
            let norm: f64 = col.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            if norm > 0.5 {
                for r in 0..m {
                    u[(r, k)] = col[r] / norm;
                }
                break 'candidates;
            }
        }
    }
}

/// Hermitian eigendecomposition `a = v · diag(w) · v†` with `w` ascending.
pub fn eigh(a: &Array2<Complex64>) -> (Vec<f64>, Array2<Complex64>) {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let mut h = a.clone();
    let mut v = eye(n);
    let scale = frobenius(a).max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let gpq = h[(p, q)];
                if gpq.norm() <= tol::JACOBI * scale {
                    continue;
                }
                rotated = true;
                let phase = Complex64::from_polar(1.0, -gpq.arg());
                let theta = (h[(q, q)].re - h[(p, p)].re) / (2.0 * gpq.norm());
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                // Column update h <- h R, then row update h <- R† h.
                for r in 0..n {
                    let hp = h[(r, p)];
                    let hq = h[(r, q)];
                    h[(r, p)] = c * hp - s * phase * hq;
                    h[(r, q)] = s * hp + c * phase * hq;
                }
                for cidx in 0..n {
                    let hp = h[(p, cidx)];
                    let hq = h[(q, cidx)];
                    h[(p, cidx)] = c * hp - s * phase.conj() * hq;
                    h[(q, cidx)] = s * hp + c * phase.conj() * hq;
                }
                for r in 0..n {
                    let vp = v[(r, p)];
                    let vq = v[(r, q)];
                    v[(r, p)] = c * vp - s * phase * vq;
                    v[(r, q)] = s * vp + c * phase * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| h[(i, i)].re.partial_cmp(&h[(j, j)].re).unwrap());
    let w: Vec<f64> = order.iter().map(|&i| h[(i, i)].re).collect();
    let mut vs = Array2::from_elem((n, n), C_ZERO);
    for (k, &j) in order.iter().enumerate() {
        for r in 0..n {
            vs[(r, k)] = v[(r, j)];
        }
    }
    (w, vs)
}

/// Kronecker product.
pub fn kron(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    Array2::from_shape_fn((ar * br, ac * bc), |(i, j)| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    })
}

/// Matrix-vector product for `Array1`.
pub fn matvec(a: &Array2<Complex64>, x: &Array1<Complex64>) -> Array1<Complex64> {
    a.dot(x)
}

/// Do two matrices agree up to a single global phase?
pub fn equal_up_to_phase(a: &Array2<Complex64>, b: &Array2<Complex64>, tolerance: f64) -> bool {
    phase_aligned_distance(a, b).is_some_and(|d| d <= tolerance)
}

/// `min_phi max_ij |a_ij - e^{i phi} b_ij|`, evaluated at the phase that
/// aligns the largest entry; `None` if shapes differ or `b` is all zero.
pub fn phase_aligned_distance(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Option<f64> {
    if a.dim() != b.dim() {
        return None;
    }
    let mut best = (0.0, (0usize, 0usize));
    for (idx, x) in b.indexed_iter() {
        if x.norm() > best.0 {
            best = (x.norm(), idx);
        }
    }
    if best.0 == 0.0 {
        return None;
    }
    let ratio = a[best.1] / b[best.1];
    if ratio.norm() == 0.0 {
        return Some(max_abs_diff(a, b));
    }
    let phase = Complex64::from_polar(1.0, ratio.arg());
    Some(max_abs_diff(a, &b.mapv(|x| x * phase)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{haar_unitary, random_complex_matrix};
    use crate::seeded_rng;

    fn reconstruct_svd(d: &Svd, m: usize, n: usize) -> Array2<Complex64> {
        let k = d.s.len();
        Array2::from_shape_fn((m, n), |(i, j)| {
            (0..k)
                .map(|t| d.u[(i, t)] * d.s[t] * d.v[(j, t)].conj())
                .sum()
        })
    }

    #[test]
    fn svd_reconstructs_random_matrices() {
        let mut rng = seeded_rng(11);
        for &(m, n) in &[(2usize, 2usize), (4, 4), (4, 8), (16, 16), (16, 4)] {
            let a = random_complex_matrix(m, n, &mut rng);
            let d = svd(&a);
            assert!(max_abs_diff(&a, &reconstruct_svd(&d, m, n)) < 1e-12);
            assert!(unitarity_defect(&d.u.t().mapv(|x| x.conj()).dot(&d.u).clone()) < 1e-12);
            for w in d.s.windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn svd_rank_deficient_and_tiny_values() {
        let mut rng = seeded_rng(12);
        // Rank-2 16x16 matrix with one tiny and one O(1) singular value.
        let u = haar_unitary(16, &mut rng);
        let v = haar_unitary(16, &mut rng);
        let mut a = Array2::from_elem((16, 16), C_ZERO);
        for (k, &sv) in [1.0, 3e-8].iter().enumerate() {
            for i in 0..16 {
                for j in 0..16 {
                    a[(i, j)] += u[(i, k)] * sv * v[(j, k)].conj();
                }
            }
        }
        let d = svd(&a);
        assert!((d.s[0] - 1.0).abs() < 1e-12);
        assert!((d.s[1] - 3e-8).abs() < 1e-12, "tiny value {} off", d.s[1]);
        assert!(d.s[2] < 1e-13);
        // Completed columns stay orthonormal.
        let ud = dagger(&d.u).dot(&d.u);
        assert!(max_abs_diff(&ud, &eye(16)) < 1e-10);
    }

    #[test]
    fn eigh_diagonalizes_hermitian() {
        let mut rng = seeded_rng(13);
        for &n in &[2usize, 4, 16] {
            let g = random_complex_matrix(n, n, &mut rng);
            let h = &dagger(&g).dot(&g) + &eye(n);
            let (w, v) = eigh(&h);
            let recon = Array2::from_shape_fn((n, n), |(i, j)| {
                (0..n).map(|k| v[(i, k)] * w[k] * v[(j, k)].conj()).sum()
            });
            assert!(max_abs_diff(&h, &recon) < 1e-11);
            for pair in w.windows(2) {
                assert!(pair[0] <= pair[1]);
            }
            assert!(unitarity_defect(&v) < 1e-12);
        }
    }

    #[test]
    fn det_matches_known_values() {
        let mut a = eye(4);
        a[(3, 3)] = Complex64::new(0.0, 1.0);
        assert!((det(&a) - Complex64::new(0.0, 1.0)).norm() < 1e-14);
        let mut rng = seeded_rng(14);
        let u = haar_unitary(4, &mut rng);
        assert!((det(&u).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn phase_alignment_detects_global_phase() {
        let mut rng = seeded_rng(15);
        let u = haar_unitary(4, &mut rng);
        let w = u.mapv(|x| x * Complex64::from_polar(1.0, 1.234));
        assert!(equal_up_to_phase(&u, &w, 1e-12));
        let v = haar_unitary(4, &mut rng);
        assert!(!equal_up_to_phase(&u, &v, 1e-6));
    }
}
