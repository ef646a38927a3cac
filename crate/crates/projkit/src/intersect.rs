//! Projection onto the intersection of a closed affine subspace `A` and a
//! hyperplane `H = {x : <x,c> = γ}`.
//!
//! Exactly one of three cases holds. Writing `w = P_U(c)` for the component
//! of the normal inside the parallel subspace:
//!
//! * `w = 0` and `<P_A(x), c> = γ`: the hyperplane contains `A`, so
//!   `P_{A∩H} = P_A`.
//! * `w = 0` and `<P_A(x), c> != γ`: the sets are disjoint. The projection
//!   onto the generalized intersection `Fix(P_A ∘ P_H)` is still `P_A`, and
//!   the gap vector measures the separation.
//! * `w != 0`: the intersection is nonempty and
//!   `P_{A∩H}(x) = P_A(x) + ((γ - <P_A(x),c>)/‖w‖²) w` lands exactly on it.
//!
//! Specializing `A` to a hyperplane gives a two-term closed form for the
//! projection onto the intersection of two hyperplanes.

use std::fmt;

use crate::affine::AffineSubspace;
use crate::error::Error;
use crate::hyperplane::Hyperplane;
use crate::tolerances::Tolerances;
use crate::vector::Vector;

/// Which of the three mutually exclusive cases fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrichotomyCase {
    /// `c ⊥ U` and the sets intersect; the hyperplane constraint is inactive.
    DegenerateConsistent,
    /// `c ⊥ U` and the sets are disjoint; the point projects onto the
    /// generalized intersection and the gap vector is nonzero.
    DegenerateInconsistent,
    /// `P_U(c) != 0`; the intersection is nonempty and hit exactly.
    Transversal,
}

impl fmt::Display for TrichotomyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TrichotomyCase::DegenerateConsistent => "DegenerateConsistent",
            TrichotomyCase::DegenerateInconsistent => "DegenerateInconsistent",
            TrichotomyCase::Transversal => "Transversal",
        };
        f.write_str(name)
    }
}

/// Result of a trichotomy projection.
///
/// `point` is the projection onto `A ∩ H` in the consistent cases and onto
/// the generalized intersection `Fix(P_A ∘ P_H)` in the inconsistent one; it
/// lies in `A` in all three cases.
#[derive(Debug, Clone, PartialEq)]
pub struct TrichotomyResult {
    pub case: TrichotomyCase,
    pub point: Vector,
    /// Gap vector `g`; zero unless the case is `DegenerateInconsistent`,
    /// where `‖g‖` is the distance between the sets.
    pub gap: Vector,
    /// Diagnostic `‖P_U(c)‖`, the tangential component deciding the branch.
    pub tangential_norm: f64,
    /// Diagnostic `D = ‖c₁‖²‖c₂‖² - <c₁,c₂>²` when produced by the
    /// two-hyperplane route.
    pub discriminant: Option<f64>,
}

/// Relation between two hyperplanes, independent of any query point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClassification {
    Identical,
    ParallelDistinct,
    Transversal,
}

impl fmt::Display for PairClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PairClassification::Identical => "Identical",
            PairClassification::ParallelDistinct => "ParallelDistinct",
            PairClassification::Transversal => "Transversal",
        };
        f.write_str(name)
    }
}

/// Project `x` onto `A ∩ H` via the three-case closed form. Total: the
/// disjoint case returns the projection onto `Fix(P_A ∘ P_H)` together with
/// the gap vector rather than failing.
pub fn project_affine_hyperplane(
    subspace: &AffineSubspace,
    hyperplane: &Hyperplane,
    x: &Vector,
    tol: &Tolerances,
) -> Result<TrichotomyResult, Error> {
    let dim = subspace.ambient_dim();
    if hyperplane.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: hyperplane.dim(),
        });
    }
    x.require_dim(dim)?;

    let normal = hyperplane.normal();
    let offset = hyperplane.offset();
    let nearest = subspace.project(x)?;
    let tangential = subspace.parallel_project(normal)?;
    let tangential_norm = tangential.norm();

    if tangential_norm <= tol.tol_rank * normal.norm() {
        // Degenerate branch: c ⊥ U, so <P_A(x), c> does not depend on x and
        // consistency is a property of the pair (A, H) alone.
        let mismatch = (nearest.dot(normal) - offset).abs();
        let scale = 1.0 + offset.abs() + nearest.norm() * normal.norm();
        if mismatch <= tol.tol_feas * scale {
            Ok(TrichotomyResult {
                case: TrichotomyCase::DegenerateConsistent,
                point: nearest,
                gap: Vector::zeros(dim),
                tangential_norm,
                discriminant: None,
            })
        } else {
            let gap = gap_vector(subspace, hyperplane, tol)?;
            Ok(TrichotomyResult {
                case: TrichotomyCase::DegenerateInconsistent,
                point: nearest,
                gap,
                tangential_norm,
                discriminant: None,
            })
        }
    } else {
        let coeff = (offset - nearest.dot(normal)) / (tangential_norm * tangential_norm);
        let mut point = nearest;
        point.axpy(coeff, &tangential);
        Ok(TrichotomyResult {
            case: TrichotomyCase::Transversal,
            point,
            gap: Vector::zeros(dim),
            tangential_norm,
            discriminant: None,
        })
    }
}

/// The gap vector `g`, the minimal-norm element of the closure of `H - A`.
///
/// With unit normal `v = c/‖c‖`: when `P_U(v) != 0` the sets meet and
/// `g = 0`; otherwise `Rv ⊆ U⊥` and `g = <b - a, v> v` for any `a ∈ A`,
/// `b ∈ H` (the anchor and `(γ/‖c‖²) c` serve). `‖g‖` is the distance
/// between the sets, and `g = 0` exactly when they intersect.
pub fn gap_vector(
    subspace: &AffineSubspace,
    hyperplane: &Hyperplane,
    tol: &Tolerances,
) -> Result<Vector, Error> {
    let dim = subspace.ambient_dim();
    if hyperplane.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: hyperplane.dim(),
        });
    }
    let normal = hyperplane.normal();
    let norm = normal.norm();
    let tangential = subspace.parallel_project(normal)?;
    if tangential.norm() > tol.tol_rank * norm {
        return Ok(Vector::zeros(dim));
    }
    let unit = normal.scale(1.0 / norm);
    let coeff = hyperplane.offset() / norm - subspace.anchor().dot(&unit);
    Ok(unit.scale(coeff))
}

/// Projection of `x` onto the generalized intersection
/// `E = A ∩ (H - g) = Fix(P_A ∘ P_H)`, which coincides with `A ∩ H`
/// whenever that is nonempty.
pub fn generalized_project(
    subspace: &AffineSubspace,
    hyperplane: &Hyperplane,
    x: &Vector,
    tol: &Tolerances,
) -> Result<Vector, Error> {
    Ok(project_affine_hyperplane(subspace, hyperplane, x, tol)?.point)
}

fn pair_products(first: &Hyperplane, second: &Hyperplane) -> (f64, f64, f64, f64) {
    let n1 = first.normal_norm_sq();
    let n2 = second.normal_norm_sq();
    let cross = first.normal().dot(second.normal());
    let discriminant = n1 * n2 - cross * cross;
    (n1, n2, cross, discriminant)
}

/// Classify a hyperplane pair, independently of any query point.
///
/// The normals are parallel when `‖c₁‖²‖c₂‖² - <c₁,c₂>²` vanishes within
/// `tol_rank`; parallel planes are identical when `γ₂‖c₁‖² = <c₁,c₂>γ₁`
/// within `tol_feas`.
pub fn classify_hyperplane_pair(
    first: &Hyperplane,
    second: &Hyperplane,
    tol: &Tolerances,
) -> Result<PairClassification, Error> {
    if second.dim() != first.dim() {
        return Err(Error::DimensionMismatch {
            expected: first.dim(),
            got: second.dim(),
        });
    }
    let (n1, n2, cross, discriminant) = pair_products(first, second);
    if discriminant > tol.tol_rank * n1 * n2 {
        return Ok(PairClassification::Transversal);
    }
    let mismatch = (second.offset() * n1 - cross * first.offset()).abs();
    let scale = n1 * (1.0 + first.offset().abs() + second.offset().abs());
    if mismatch <= tol.tol_feas * scale {
        Ok(PairClassification::Identical)
    } else {
        Ok(PairClassification::ParallelDistinct)
    }
}

/// Project `x` onto `H₁ ∩ H₂` by the two-term closed form.
///
/// Transversal pairs land exactly on both hyperplanes; identical pairs
/// reduce to `P_{H₁}`; parallel distinct pairs return the projection onto
/// `Fix(P_{H₁} ∘ P_{H₂})` (which is `P_{H₁}(x)`) plus the gap vector.
/// Agrees with [`project_affine_hyperplane`] applied to `H₁` converted via
/// [`AffineSubspace::from_hyperplane`].
pub fn project_two_hyperplanes(
    first: &Hyperplane,
    second: &Hyperplane,
    x: &Vector,
    tol: &Tolerances,
) -> Result<TrichotomyResult, Error> {
    if second.dim() != first.dim() {
        return Err(Error::DimensionMismatch {
            expected: first.dim(),
            got: second.dim(),
        });
    }
    x.require_dim(first.dim())?;
    let dim = first.dim();

    let (n1, n2, cross, discriminant) = pair_products(first, second);
    // ‖P_{c₁⊥}(c₂)‖ = sqrt(D / ‖c₁‖²); the max guards tiny negative rounding.
    let tangential_norm = (discriminant.max(0.0) / n1).sqrt();

    match classify_hyperplane_pair(first, second, tol)? {
        PairClassification::Identical => Ok(TrichotomyResult {
            case: TrichotomyCase::DegenerateConsistent,
            point: first.project(x)?,
            gap: Vector::zeros(dim),
            tangential_norm,
            discriminant: Some(discriminant),
        }),
        PairClassification::ParallelDistinct => {
            // Gap from H₁ to H₂ along c₂, using a = (γ₁/‖c₁‖²) c₁ ∈ H₁.
            let anchor = first.normal().scale(first.offset() / n1);
            let coeff = (second.offset() - anchor.dot(second.normal())) / n2;
            let gap = second.normal().scale(coeff);
            Ok(TrichotomyResult {
                case: TrichotomyCase::DegenerateInconsistent,
                point: first.project(x)?,
                gap,
                tangential_norm,
                discriminant: Some(discriminant),
            })
        }
        PairClassification::Transversal => {
            let r1 = x.dot(first.normal()) - first.offset();
            let r2 = x.dot(second.normal()) - second.offset();
            let coeff1 = (-n2 * r1 + cross * r2) / discriminant;
            let coeff2 = (-n1 * r2 + cross * r1) / discriminant;
            let mut point = x.clone();
            point.axpy(coeff1, first.normal());
            point.axpy(coeff2, second.normal());
            Ok(TrichotomyResult {
                case: TrichotomyCase::Transversal,
                point,
                gap: Vector::zeros(dim),
                tangential_norm,
                discriminant: Some(discriminant),
            })
        }
    }
}
