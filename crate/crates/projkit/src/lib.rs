//! Exact projections onto the intersection of a closed affine subspace and a
//! hyperplane, in finite-dimensional real space.
//!
//! The centerpiece is a three-case closed form for the nearest-point map
//! onto `A ∩ H`, built from the elementary projectors `P_A` and `P_H`; see
//! [`intersect::project_affine_hyperplane`]. It degrades gracefully when the
//! sets are disjoint (returning the projection onto the generalized
//! intersection together with the gap vector) and specializes to a two-term
//! formula for the intersection of two hyperplanes.
//!
//! On top of the closed forms, [`sweep`] and [`experiment`] provide cyclic
//! projection sweeps over the rows of a linear system, comparing plain
//! per-hyperplane passes against exact pairwise passes on randomly generated
//! consistent systems with reproducible, seeded telemetry.
//!
//! All types are immutable after construction and all operations are pure
//! functions of their inputs; everything is `Send + Sync` and safe to use
//! from any number of threads.

pub mod affine;
pub mod cone;
pub mod error;
pub mod experiment;
pub mod hyperplane;
pub mod intersect;
mod orthonormal;
pub mod sweep;
pub mod tolerances;
pub mod vector;

pub use affine::{AffineSubspace, LinearSystemOutcome};
pub use cone::{naive_cone_formula, orthant_project};
pub use error::Error;
pub use experiment::{
    proximity_db, run_experiment, ConvergenceTable, ExperimentConfig, ExperimentInstance, DB_CLAMP,
};
pub use hyperplane::Hyperplane;
pub use intersect::{
    classify_hyperplane_pair, gap_vector, generalized_project, project_affine_hyperplane,
    project_two_hyperplanes, PairClassification, TrichotomyCase, TrichotomyResult,
};
pub use sweep::{exact_projection, HyperplaneFamily, SweepKind, SweepOperator};
pub use tolerances::Tolerances;
pub use vector::Vector;
