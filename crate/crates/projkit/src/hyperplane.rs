use crate::error::Error;
use crate::vector::Vector;

/// A hyperplane `{x : <x, c> = γ}` with an unnormalized normal `c != 0`.
///
/// Normals are stored exactly as given; every formula divides by `‖c‖²`
/// explicitly instead of normalizing at construction, so user data is never
/// silently perturbed.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: Vector,
    offset: f64,
    norm_sq: f64,
}

impl Hyperplane {
    pub fn new(normal: Vector, offset: f64) -> Result<Self, Error> {
        if !offset.is_finite() {
            return Err(Error::NonFiniteScalar { value: offset });
        }
        let norm_sq = normal.norm_sq();
        if norm_sq == 0.0 {
            return Err(Error::ZeroNormal);
        }
        Ok(Self {
            normal,
            offset,
            norm_sq,
        })
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `‖c‖²`, cached at construction.
    pub fn normal_norm_sq(&self) -> f64 {
        self.norm_sq
    }

    /// Signed residual `<x, c> - γ`.
    pub fn residual(&self, x: &Vector) -> Result<f64, Error> {
        x.require_dim(self.dim())?;
        Ok(self.normal.dot(x) - self.offset)
    }

    /// Nearest point of the hyperplane: `x - ((<x,c> - γ)/‖c‖²) c`.
    pub fn project(&self, x: &Vector) -> Result<Vector, Error> {
        let residual = self.residual(x)?;
        let mut projected = x.clone();
        projected.axpy(-residual / self.norm_sq, &self.normal);
        Ok(projected)
    }

    /// Distance from `x` to the hyperplane, `|<x,c> - γ|/‖c‖`.
    pub fn distance_to(&self, x: &Vector) -> Result<f64, Error> {
        Ok(self.residual(x)?.abs() / self.norm_sq.sqrt())
    }
}
