//! Nonnegative-orthant projection and the naive cone analogue of the affine
//! correction formula.
//!
//! [`naive_cone_formula`] transplants the transversal-case correction term
//! onto an arbitrary cone projector. It is intentionally named "naive": the
//! construction is not a projection onto the cone-hyperplane intersection
//! and its output can leave the cone entirely. Keep it for demonstrations
//! and negative tests, not for solving anything.

use crate::error::Error;
use crate::vector::Vector;

/// Projection onto the nonnegative orthant: componentwise `max(entry, 0)`.
pub fn orthant_project(x: &Vector) -> Vector {
    Vector::from_raw(x.as_slice().iter().map(|e| e.max(0.0)).collect())
}

/// `P_K(x) + ((β - <P_K(x), v>)/‖P_K(v)‖²) P_K(v)` for a cone projector
/// `P_K`: the affine closed form with the subspace replaced by a cone.
///
/// Fails with [`Error::DegenerateDirection`] when `P_K(v) = 0`. The output
/// is generally *not* the projection onto `K ∩ {x : <x,v> = β}`.
pub fn naive_cone_formula<P>(
    project_cone: P,
    normal: &Vector,
    offset: f64,
    x: &Vector,
) -> Result<Vector, Error>
where
    P: Fn(&Vector) -> Vector,
{
    normal.require_dim(x.dim())?;
    if !offset.is_finite() {
        return Err(Error::NonFiniteScalar { value: offset });
    }
    let projected_x = project_cone(x);
    projected_x.require_dim(x.dim())?;
    let projected_normal = project_cone(normal);
    projected_normal.require_dim(x.dim())?;
    let denom = projected_normal.norm_sq();
    if denom == 0.0 {
        return Err(Error::DegenerateDirection);
    }
    let coeff = (offset - projected_x.dot(normal)) / denom;
    let mut out = projected_x;
    out.axpy(coeff, &projected_normal);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[f64]) -> Vector {
        Vector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn orthant_examples() {
        assert_eq!(orthant_project(&v(&[3.0, -2.0])), v(&[3.0, 0.0]));

        let s = 1.0 / 2.0_f64.sqrt();
        // A vector in the open negative quadrant maps to the origin.
        assert_eq!(orthant_project(&v(&[-s, -s])), v(&[0.0, 0.0]));
        // A vector already in the cone is fixed.
        assert_eq!(orthant_project(&v(&[s, s])), v(&[s, s]));
    }

    #[test]
    fn formula_leaves_the_cone() {
        let s = 1.0 / 2.0_f64.sqrt();
        let normal = v(&[s, s]);
        let out = naive_cone_formula(orthant_project, &normal, s, &v(&[2.0, 0.0])).unwrap();
        // Direct evaluation gives ((1+ξ)/2, (1-ξ)/2) at ξ = 2.
        assert!(out.distance(&v(&[1.5, -0.5])) < 1e-15);
        assert!(out[1] < 0.0, "output must leave the nonnegative orthant");
    }

    #[test]
    fn fixes_points_satisfying_both_constraints() {
        let s = 1.0 / 2.0_f64.sqrt();
        let normal = v(&[s, s]);
        // x = (1, 0): in the cone, with <x, v> = β exactly.
        let x = v(&[1.0, 0.0]);
        let out = naive_cone_formula(orthant_project, &normal, s, &x).unwrap();
        assert!(out.distance(&x) < 1e-15);
    }

    #[test]
    fn rejects_degenerate_direction() {
        let s = 1.0 / 2.0_f64.sqrt();
        // P_K of the negative diagonal is the origin.
        let err =
            naive_cone_formula(orthant_project, &v(&[-s, -s]), 0.0, &v(&[1.0, 1.0])).unwrap_err();
        assert_eq!(err, Error::DegenerateDirection);
    }
}
