use crate::error::Error;
use crate::hyperplane::Hyperplane;
use crate::orthonormal::{least_squares, orthonormal_complement, orthonormalize};
use crate::tolerances::Tolerances;
use crate::vector::Vector;

/// A closed affine subspace `A = a₀ + U`, stored as the anchor `a₀ = P_A(0)`
/// in `U⊥` plus an orthonormal basis of the parallel subspace `U = A - A`.
///
/// This representation makes `P_U` and `P_A` cost `O(n · dim U)` and turns
/// the identity `a₀ ∈ U⊥` into an enforced invariant. An empty basis encodes
/// the singleton `{a₀}`; a full basis encodes the whole space.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSubspace {
    anchor: Vector,
    basis: Vec<Vector>,
    dim: usize,
}

/// Outcome of interpreting a linear system `rows · x = rhs` as an affine
/// subspace. Infeasibility is a legitimate answer, not an error.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSystemOutcome {
    Feasible(AffineSubspace),
    Infeasible { residual: f64 },
}

impl AffineSubspace {
    /// Build from a stored representation, validating the invariants:
    /// the basis must be orthonormal within `tol_orth` and the anchor
    /// orthogonal to it within `tol_orth * (1 + ‖a₀‖)`.
    pub fn from_parts(anchor: Vector, basis: Vec<Vector>, tol: &Tolerances) -> Result<Self, Error> {
        let dim = anchor.dim();
        if basis.len() > dim {
            return Err(Error::BasisTooLarge {
                size: basis.len(),
                dim,
            });
        }
        for u in &basis {
            u.require_dim(dim)?;
        }
        let mut deviation: f64 = 0.0;
        for (i, u) in basis.iter().enumerate() {
            for (j, w) in basis.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                deviation = deviation.max((u.dot(w) - expected).abs());
            }
        }
        if deviation > tol.tol_orth {
            return Err(Error::BasisNotOrthonormal { deviation });
        }
        let mut residual: f64 = 0.0;
        for u in &basis {
            residual = residual.max(anchor.dot(u).abs());
        }
        if residual > tol.tol_orth * (1.0 + anchor.norm()) {
            return Err(Error::AnchorNotOrthogonal { residual });
        }
        Ok(Self { anchor, basis, dim })
    }

    /// The affine hull `point + span(spanning)`. Dependent spanning vectors
    /// are dropped during orthonormalization.
    pub fn from_point_and_span(
        point: &Vector,
        spanning: &[Vector],
        tol: &Tolerances,
    ) -> Result<Self, Error> {
        let dim = point.dim();
        for v in spanning {
            v.require_dim(dim)?;
        }
        let basis = orthonormalize(spanning, tol.tol_rank, dim);
        let mut anchor = point.clone();
        for _pass in 0..2 {
            for u in &basis {
                let coeff = anchor.dot(u);
                anchor.axpy(-coeff, u);
            }
        }
        Ok(Self { anchor, basis, dim })
    }

    /// The solution set of `rows · x = rhs`. When the minimum-norm
    /// least-squares residual stays within `tol_feas * (1 + ‖rhs‖)` the
    /// system is feasible and the result carries the minimum-norm solution
    /// as anchor (it lies in the row space, which is `U⊥`) and an
    /// orthonormal basis of the null space; otherwise the residual is
    /// reported as [`LinearSystemOutcome::Infeasible`].
    pub fn from_linear_system(
        rows: &[Vector],
        rhs: &[f64],
        tol: &Tolerances,
    ) -> Result<LinearSystemOutcome, Error> {
        if rows.is_empty() {
            return Err(Error::EmptySystem);
        }
        let dim = rows[0].dim();
        for row in rows {
            row.require_dim(dim)?;
        }
        if rhs.len() != rows.len() {
            return Err(Error::DimensionMismatch {
                expected: rows.len(),
                got: rhs.len(),
            });
        }
        for &value in rhs {
            if !value.is_finite() {
                return Err(Error::NonFiniteScalar { value });
            }
        }

        // Row space basis, then the system restricted to row-space
        // coordinates: columns[j][i] = <rows[i], w_j>.
        let row_basis = orthonormalize(rows, tol.tol_rank, dim);
        let columns: Vec<Vector> = row_basis
            .iter()
            .map(|w| Vector::from_raw(rows.iter().map(|row| row.dot(w)).collect()))
            .collect();
        let target = Vector::from_raw(rhs.to_vec());
        let alpha = least_squares(&columns, &target, tol.tol_rank);

        let mut anchor = Vector::zeros(dim);
        for (w, &a) in row_basis.iter().zip(&alpha) {
            anchor.axpy(a, w);
        }

        let residual = rows
            .iter()
            .zip(rhs)
            .map(|(row, &b)| {
                let r = row.dot(&anchor) - b;
                r * r
            })
            .sum::<f64>()
            .sqrt();
        if residual > tol.tol_feas * (1.0 + target.norm()) {
            return Ok(LinearSystemOutcome::Infeasible { residual });
        }

        let basis = orthonormal_complement(&row_basis, dim, tol.tol_rank);
        Ok(LinearSystemOutcome::Feasible(Self { anchor, basis, dim }))
    }

    /// A hyperplane `{x : <x,c> = γ}` as an affine subspace: anchor
    /// `(γ/‖c‖²) c` and a basis of `{c}⊥`.
    pub fn from_hyperplane(hyperplane: &Hyperplane, tol: &Tolerances) -> Self {
        let dim = hyperplane.dim();
        let normal = hyperplane.normal();
        let unit = normal.scale(1.0 / normal.norm());
        let anchor = normal.scale(hyperplane.offset() / hyperplane.normal_norm_sq());
        let basis = orthonormal_complement(&[unit], dim, tol.tol_rank);
        Self { anchor, basis, dim }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the parallel subspace `U`.
    pub fn parallel_dim(&self) -> usize {
        self.basis.len()
    }

    /// `a₀ = P_A(0)`.
    pub fn anchor(&self) -> &Vector {
        &self.anchor
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// `P_U(x)`, the orthogonal projection onto the parallel subspace.
    pub fn parallel_project(&self, x: &Vector) -> Result<Vector, Error> {
        x.require_dim(self.dim)?;
        let mut projected = Vector::zeros(self.dim);
        for u in &self.basis {
            projected.axpy(x.dot(u), u);
        }
        Ok(projected)
    }

    /// `P_A(x) = a₀ + P_U(x)`.
    pub fn project(&self, x: &Vector) -> Result<Vector, Error> {
        x.require_dim(self.dim)?;
        let mut projected = self.anchor.clone();
        for u in &self.basis {
            projected.axpy(x.dot(u), u);
        }
        Ok(projected)
    }
}
