//! Gram-Schmidt machinery: orthonormalization with one full
//! re-orthogonalization pass, basis completion, and a small least-squares
//! solve built on the same pipeline.

use crate::vector::Vector;

/// Remove from `v` its components along each vector of the orthonormal set.
fn orthogonalize_pass(v: &mut Vector, basis: &[Vector]) {
    for u in basis {
        let coeff = v.dot(u);
        v.axpy(-coeff, u);
    }
}

/// Orthonormalize `candidates` against the growing set `accepted`, appending
/// survivors until `cap` vectors are held. A candidate is dropped when its
/// residual norm after orthogonalization is at most `tol_rank` times its
/// original norm.
pub(crate) fn extend_orthonormal<I>(
    accepted: &mut Vec<Vector>,
    candidates: I,
    tol_rank: f64,
    cap: usize,
) where
    I: IntoIterator<Item = Vector>,
{
    for candidate in candidates {
        if accepted.len() >= cap {
            break;
        }
        let original = candidate.norm();
        let mut v = candidate;
        orthogonalize_pass(&mut v, accepted);
        orthogonalize_pass(&mut v, accepted);
        let remaining = v.norm();
        if remaining > tol_rank * original {
            accepted.push(v.scale(1.0 / remaining));
        }
    }
}

/// Orthonormal basis of the span of `candidates` in `R^dim`.
pub(crate) fn orthonormalize(candidates: &[Vector], tol_rank: f64, dim: usize) -> Vec<Vector> {
    let mut accepted = Vec::new();
    extend_orthonormal(&mut accepted, candidates.iter().cloned(), tol_rank, dim);
    accepted
}

/// Complete the orthonormal set `existing` to a full basis of `R^dim` using
/// standard basis vectors; returns only the appended complement.
pub(crate) fn orthonormal_complement(
    existing: &[Vector],
    dim: usize,
    tol_rank: f64,
) -> Vec<Vector> {
    let mut all = existing.to_vec();
    extend_orthonormal(
        &mut all,
        (0..dim).map(|i| Vector::standard_basis(dim, i)),
        tol_rank,
        dim,
    );
    debug_assert_eq!(all.len(), dim, "standard basis must complete the span");
    all.split_off(existing.len())
}

/// Minimum-norm least-squares coefficients for `cols * alpha ≈ target`,
/// via Gram-Schmidt QR with a re-orthogonalization pass. Columns whose
/// residual drops below `tol_rank` times their original norm are treated as
/// dependent and receive a zero coefficient.
pub(crate) fn least_squares(cols: &[Vector], target: &Vector, tol_rank: f64) -> Vec<f64> {
    let mut q: Vec<Vector> = Vec::new();
    // upper[j][k] = coefficient of q[k] in the kept column j (k <= j).
    let mut upper: Vec<Vec<f64>> = Vec::new();
    let mut kept: Vec<usize> = Vec::new();

    for (index, col) in cols.iter().enumerate() {
        let original = col.norm();
        let mut v = col.clone();
        let mut coeffs = vec![0.0; q.len()];
        for _pass in 0..2 {
            for (k, u) in q.iter().enumerate() {
                let c = v.dot(u);
                v.axpy(-c, u);
                coeffs[k] += c;
            }
        }
        let remaining = v.norm();
        if remaining > tol_rank * original {
            q.push(v.scale(1.0 / remaining));
            coeffs.push(remaining);
            upper.push(coeffs);
            kept.push(index);
        }
    }

    // Back substitution of R y = Qᵀ target.
    let rank = q.len();
    let mut y: Vec<f64> = q.iter().map(|u| u.dot(target)).collect();
    for j in (0..rank).rev() {
        let mut s = y[j];
        for l in (j + 1)..rank {
            s -= upper[l][j] * y[l];
        }
        y[j] = s / upper[j][j];
    }

    let mut alpha = vec![0.0; cols.len()];
    for (slot, &index) in kept.iter().enumerate() {
        alpha[index] = y[slot];
    }
    alpha
}
