//! Shared test support: seeded generators and independent oracles.
//!
//! Every oracle here goes through nalgebra decompositions (QR for instance
//! generation, SVD-backed KKT solves for reference projections) rather than
//! the crate's own Gram-Schmidt/closed-form path, so agreement checks compare
//! two genuinely different routes to the same answer.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use projkit::{AffineSubspace, Hyperplane, Tolerances, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn standard_normal_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    Vector::new((0..dim).map(|_| rng.sample(StandardNormal)).collect()).unwrap()
}

pub fn to_na(v: &Vector) -> DVector<f64> {
    DVector::from_column_slice(v.as_slice())
}

pub fn from_na(v: &DVector<f64>) -> Vector {
    Vector::new(v.iter().copied().collect()).unwrap()
}

/// Column matrix of an affine subspace's stored basis (dim x k).
pub fn basis_matrix(subspace: &AffineSubspace) -> DMatrix<f64> {
    let dim = subspace.ambient_dim();
    let k = subspace.parallel_dim();
    DMatrix::from_fn(dim, k, |i, j| subspace.basis()[j][i])
}

/// Minimum-norm least-squares solve of a symmetric system via its
/// eigendecomposition with a scale-relative rank cutoff. All KKT systems
/// below are symmetric, and the symmetric eigensolver stays accurate on
/// their clustered spectra.
fn sym_solve(m: DMatrix<f64>, rhs: DVector<f64>) -> DVector<f64> {
    let eigen = nalgebra::SymmetricEigen::new(m);
    let max_ev = eigen
        .eigenvalues
        .iter()
        .fold(0.0_f64, |acc, &ev| acc.max(ev.abs()));
    let eps = 1e-12 * max_ev.max(1e-300);
    let mut coeffs = eigen.eigenvectors.transpose() * rhs;
    for (i, &ev) in eigen.eigenvalues.iter().enumerate() {
        if ev.abs() > eps {
            coeffs[i] /= ev;
        } else {
            coeffs[i] = 0.0;
        }
    }
    eigen.eigenvectors * coeffs
}

/// Random affine subspace with `k = dim U`, built from a nalgebra QR of a
/// Gaussian matrix; the anchor is a Gaussian vector with its basis component
/// removed. Validated through `from_parts`.
pub fn random_subspace(rng: &mut ChaCha8Rng, dim: usize, k: usize) -> AffineSubspace {
    assert!(k <= dim);
    let raw_anchor = to_na(&standard_normal_vector(rng, dim));
    if k == 0 {
        return AffineSubspace::from_parts(
            from_na(&raw_anchor),
            Vec::new(),
            &Tolerances::default(),
        )
        .unwrap();
    }
    let gaussian = DMatrix::from_fn(dim, k, |_, _| rng.sample::<f64, _>(StandardNormal));
    let q = gaussian.qr().q();
    let anchor = &raw_anchor - &q * (q.transpose() * &raw_anchor);
    let basis = (0..k).map(|j| from_na(&q.column(j).into_owned())).collect();
    AffineSubspace::from_parts(from_na(&anchor), basis, &Tolerances::default()).unwrap()
}

/// Reference `P_A(x)`: least-squares in the affine parameters.
pub fn oracle_affine_projection(subspace: &AffineSubspace, x: &Vector) -> Vector {
    let anchor = to_na(subspace.anchor());
    if subspace.parallel_dim() == 0 {
        return subspace.anchor().clone();
    }
    let b = basis_matrix(subspace);
    let t = sym_solve(b.transpose() * &b, b.transpose() * (to_na(x) - &anchor));
    from_na(&(anchor + b * t))
}

/// Reference equality-constrained least squares: minimize `‖x - z‖` over
/// `z = a₀ + B t` subject to `<z, c_i> = γ_i` for each given hyperplane,
/// via the KKT augmented system.
pub fn oracle_constrained_projection(
    subspace: &AffineSubspace,
    constraints: &[&Hyperplane],
    x: &Vector,
) -> Vector {
    let dim = subspace.ambient_dim();
    let k = subspace.parallel_dim();
    let q = constraints.len();
    let anchor = to_na(subspace.anchor());
    let b = basis_matrix(subspace);
    let btb = b.transpose() * &b;
    let mut kkt = DMatrix::zeros(k + q, k + q);
    kkt.view_mut((0, 0), (k, k)).copy_from(&btb);
    for (col, h) in constraints.iter().enumerate() {
        let s = b.transpose() * to_na(h.normal());
        for row in 0..k {
            kkt[(row, k + col)] = s[row];
            kkt[(k + col, row)] = s[row];
        }
    }
    let mut rhs = DVector::zeros(k + q);
    let top = b.transpose() * (to_na(x) - &anchor);
    for row in 0..k {
        rhs[row] = top[row];
    }
    for (col, h) in constraints.iter().enumerate() {
        rhs[k + col] = h.offset() - anchor.dot(&to_na(h.normal()));
    }
    let sol = sym_solve(kkt, rhs);
    let mut z = anchor;
    for j in 0..k {
        z += b.column(j) * sol[j];
    }
    let _ = dim;
    from_na(&z)
}

/// Reference projection onto the intersection of hyperplanes alone: KKT in
/// the ambient variable, `[[I, C], [Cᵀ, 0]] [z; λ] = [x; γ]`.
pub fn oracle_hyperplanes_projection(constraints: &[&Hyperplane], x: &Vector) -> Vector {
    let dim = x.dim();
    let q = constraints.len();
    let mut kkt = DMatrix::zeros(dim + q, dim + q);
    for i in 0..dim {
        kkt[(i, i)] = 1.0;
    }
    for (col, h) in constraints.iter().enumerate() {
        for row in 0..dim {
            kkt[(row, dim + col)] = h.normal()[row];
            kkt[(dim + col, row)] = h.normal()[row];
        }
    }
    let mut rhs = DVector::zeros(dim + q);
    for i in 0..dim {
        rhs[i] = x[i];
    }
    for (col, h) in constraints.iter().enumerate() {
        rhs[dim + col] = h.offset();
    }
    let sol = sym_solve(kkt, rhs);
    Vector::new((0..dim).map(|i| sol[i]).collect()).unwrap()
}

/// Reference distance between an affine subspace and a hyperplane: KKT for
/// the best-approximation pair `min ‖(a₀ + B t) - b‖` over `b ∈ H`.
pub fn oracle_set_distance(subspace: &AffineSubspace, hyperplane: &Hyperplane) -> f64 {
    let dim = subspace.ambient_dim();
    let k = subspace.parallel_dim();
    let anchor = to_na(subspace.anchor());
    let b = basis_matrix(subspace);
    let c = to_na(hyperplane.normal());
    let size = k + dim + 1;
    let mut kkt = DMatrix::zeros(size, size);
    let btb = b.transpose() * &b;
    kkt.view_mut((0, 0), (k, k)).copy_from(&btb);
    let minus_bt = -b.transpose();
    kkt.view_mut((0, k), (k, dim)).copy_from(&minus_bt);
    let minus_b = -b.clone();
    kkt.view_mut((k, 0), (dim, k)).copy_from(&minus_b);
    for i in 0..dim {
        kkt[(k + i, k + i)] = 1.0;
        kkt[(k + i, k + dim)] = c[i];
        kkt[(k + dim, k + i)] = c[i];
    }
    let mut rhs = DVector::zeros(size);
    let top = -(b.transpose() * &anchor);
    for row in 0..k {
        rhs[row] = top[row];
    }
    for i in 0..dim {
        rhs[k + i] = anchor[i];
    }
    rhs[k + dim] = hyperplane.offset();
    let sol = sym_solve(kkt, rhs);
    let mut nearest_in_a = anchor;
    for j in 0..k {
        nearest_in_a += b.column(j) * sol[j];
    }
    let nearest_in_h = DVector::from_fn(dim, |i, _| sol[k + i]);
    (nearest_in_a - nearest_in_h).norm()
}

/// Which trichotomy case an instance is manufactured for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTarget {
    Consistent,
    Inconsistent,
    Transversal,
}

/// Build a random (subspace, hyperplane) pair that provably falls in the
/// requested case: degenerate cases take the normal from `U⊥` (and split on
/// whether the offset matches `<a₀, c>`), the transversal case resamples
/// until the normal keeps a solid component inside `U`.
pub fn trichotomy_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    target: CaseTarget,
) -> (AffineSubspace, Hyperplane) {
    match target {
        CaseTarget::Transversal => {
            let k = rng.random_range(1..=dim);
            let subspace = random_subspace(rng, dim, k);
            let b = basis_matrix(&subspace);
            loop {
                let c = standard_normal_vector(rng, dim);
                let tangential = (b.transpose() * to_na(&c)).norm();
                if tangential > 0.05 * c.norm() {
                    let offset: f64 = rng.sample(StandardNormal);
                    return (subspace, Hyperplane::new(c, offset).unwrap());
                }
            }
        }
        CaseTarget::Consistent | CaseTarget::Inconsistent => {
            // Need a nontrivial U⊥, so k < dim.
            let k = rng.random_range(0..dim);
            let subspace = random_subspace(rng, dim, k);
            let b = basis_matrix(&subspace);
            let normal = loop {
                let r = to_na(&standard_normal_vector(rng, dim));
                let candidate = if k == 0 {
                    r.clone()
                } else {
                    &r - &b * (b.transpose() * &r)
                };
                if candidate.norm() > 0.1 * r.norm() {
                    break from_na(&candidate);
                }
            };
            let mut offset = subspace.anchor().dot(&normal);
            if target == CaseTarget::Inconsistent {
                let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
                offset += sign * rng.random_range(0.5..2.0);
            }
            (subspace, Hyperplane::new(normal, offset).unwrap())
        }
    }
}

/// Random transversal hyperplane pair in the given dimension, with the angle
/// between normals bounded away from zero.
pub fn transversal_pair(rng: &mut ChaCha8Rng, dim: usize) -> (Hyperplane, Hyperplane) {
    loop {
        let c1 = standard_normal_vector(rng, dim);
        let c2 = standard_normal_vector(rng, dim);
        let cos = c1.dot(&c2) / (c1.norm() * c2.norm());
        if cos.abs() < 0.95 {
            let g1: f64 = rng.sample(StandardNormal);
            let g2: f64 = rng.sample(StandardNormal);
            return (
                Hyperplane::new(c1, g1).unwrap(),
                Hyperplane::new(c2, g2).unwrap(),
            );
        }
    }
}

pub fn assert_vectors_close(actual: &Vector, expected: &Vector, tol: f64, context: &str) {
    let distance = actual.distance(expected);
    assert!(
        distance <= tol,
        "{context}: distance {distance:e} exceeds {tol:e}\n  actual:   {:?}\n  expected: {:?}",
        actual.as_slice(),
        expected.as_slice(),
    );
}
