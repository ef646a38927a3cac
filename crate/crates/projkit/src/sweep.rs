//! Cyclic projection sweeps over the hyperplanes of a linear system.
//!
//! A single-pass sweep applies one hyperplane projection per row in order; a
//! paired-pass sweep applies the exact two-hyperplane closed form to
//! consecutive row pairs (with an odd trailing row handled by a single
//! projection at the end). Both fix exactly the solution set when the system
//! is consistent.

use crate::affine::{AffineSubspace, LinearSystemOutcome};
use crate::error::Error;
use crate::hyperplane::Hyperplane;
use crate::intersect::project_two_hyperplanes;
use crate::tolerances::Tolerances;
use crate::vector::Vector;

/// An ordered family of hyperplanes sharing one ambient dimension, typically
/// the rows `{x : <m_i, x> = b_i}` of a system `Mx = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperplaneFamily {
    planes: Vec<Hyperplane>,
}

impl HyperplaneFamily {
    pub fn new(planes: Vec<Hyperplane>) -> Result<Self, Error> {
        let Some(first) = planes.first() else {
            return Err(Error::EmptyFamily);
        };
        let dim = first.dim();
        for plane in &planes {
            if plane.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: plane.dim(),
                });
            }
        }
        Ok(Self { planes })
    }

    /// One hyperplane per row of `rows · x = rhs`.
    pub fn from_system(rows: &[Vector], rhs: &[f64]) -> Result<Self, Error> {
        if rhs.len() != rows.len() {
            return Err(Error::DimensionMismatch {
                expected: rows.len(),
                got: rhs.len(),
            });
        }
        let planes = rows
            .iter()
            .zip(rhs)
            .map(|(row, &b)| Hyperplane::new(row.clone(), b))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(planes)
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.planes[0].dim()
    }

    pub fn planes(&self) -> &[Hyperplane] {
        &self.planes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    /// One hyperplane projection per row, in row order.
    Single,
    /// One exact pair projection per consecutive row pair, in order.
    Paired,
}

/// A full application of the single-pass or paired-pass composition.
#[derive(Debug, Clone)]
pub struct SweepOperator {
    kind: SweepKind,
    family: HyperplaneFamily,
    pairs: Vec<(usize, usize)>,
    leftover: Option<usize>,
    tol: Tolerances,
}

impl SweepOperator {
    pub fn single(family: HyperplaneFamily) -> Self {
        Self {
            kind: SweepKind::Single,
            family,
            pairs: Vec::new(),
            leftover: None,
            tol: Tolerances::default(),
        }
    }

    /// Pairs consecutive rows (0,1), (2,3), ...; an odd trailing row is
    /// projected singly at the end of the sweep. The tolerances drive the
    /// pair classification, so an exactly-parallel pair degrades to its
    /// generalized projection instead of failing.
    pub fn paired(family: HyperplaneFamily, tol: Tolerances) -> Self {
        let count = family.len();
        let pairs = (0..count / 2).map(|k| (2 * k, 2 * k + 1)).collect();
        let leftover = (count % 2 == 1).then(|| count - 1);
        Self {
            kind: SweepKind::Paired,
            family,
            pairs,
            leftover,
            tol,
        }
    }

    pub fn kind(&self) -> SweepKind {
        self.kind
    }

    pub fn family(&self) -> &HyperplaneFamily {
        &self.family
    }

    /// Index pairs visited by a paired sweep (empty for single sweeps).
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Trailing unpaired row index, if the family has odd size.
    pub fn leftover(&self) -> Option<usize> {
        self.leftover
    }

    /// Apply one full sweep to `x`.
    pub fn apply(&self, x: &Vector) -> Result<Vector, Error> {
        x.require_dim(self.family.dim())?;
        let planes = self.family.planes();
        match self.kind {
            SweepKind::Single => {
                let mut current = x.clone();
                for plane in planes {
                    current = plane.project(&current)?;
                }
                Ok(current)
            }
            SweepKind::Paired => {
                let mut current = x.clone();
                for &(i, j) in &self.pairs {
                    current =
                        project_two_hyperplanes(&planes[i], &planes[j], &current, &self.tol)?.point;
                }
                if let Some(i) = self.leftover {
                    current = planes[i].project(&current)?;
                }
                Ok(current)
            }
        }
    }
}

/// `P_C(x₀)` for the solution set `C = {x : rows · x = rhs}`; this is the
/// limit both cyclic sweep sequences converge to. Fails with
/// [`Error::Infeasible`] when the residual test rejects the system.
pub fn exact_projection(
    rows: &[Vector],
    rhs: &[f64],
    start: &Vector,
    tol: &Tolerances,
) -> Result<Vector, Error> {
    match AffineSubspace::from_linear_system(rows, rhs, tol)? {
        LinearSystemOutcome::Feasible(subspace) => subspace.project(start),
        LinearSystemOutcome::Infeasible { residual } => Err(Error::Infeasible { residual }),
    }
}
