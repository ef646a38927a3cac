use crate::error::Error;

/// Numerical thresholds shared by constructions and projectors.
///
/// All three are far above double-precision rounding noise and far below
/// anything that would change a well-posed answer; [`Tolerances::new`]
/// enforces that window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Permitted orthonormality drift in stored bases.
    pub tol_orth: f64,
    /// Relative threshold deciding when an orthogonalization residual is zero
    /// (rank decisions, the `P_U(c) = 0` branch test).
    pub tol_rank: f64,
    /// Relative residual threshold deciding linear-system feasibility and
    /// hyperplane membership.
    pub tol_feas: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            tol_orth: 1e-10,
            tol_rank: 1e-10,
            tol_feas: 1e-8,
        }
    }
}

impl Tolerances {
    /// Exclusive upper bound on every tolerance.
    pub const LIMIT: f64 = 1e-4;

    /// Validated constructor: each tolerance must lie strictly between
    /// `0` and [`Tolerances::LIMIT`].
    pub fn new(tol_orth: f64, tol_rank: f64, tol_feas: f64) -> Result<Self, Error> {
        for (name, value) in [
            ("tol_orth", tol_orth),
            ("tol_rank", tol_rank),
            ("tol_feas", tol_feas),
        ] {
            if !(value > 0.0 && value < Self::LIMIT) {
                return Err(Error::InvalidTolerance { name, value });
            }
        }
        Ok(Self {
            tol_orth,
            tol_rank,
            tol_feas,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        let t = Tolerances::default();
        assert!(Tolerances::new(t.tol_orth, t.tol_rank, t.tol_feas).is_ok());
    }

    #[test]
    fn rejects_out_of_window_values() {
        assert!(matches!(
            Tolerances::new(0.0, 1e-10, 1e-8),
            Err(Error::InvalidTolerance {
                name: "tol_orth",
                ..
            })
        ));
        assert!(matches!(
            Tolerances::new(1e-10, 1e-3, 1e-8),
            Err(Error::InvalidTolerance {
                name: "tol_rank",
                ..
            })
        ));
        assert!(matches!(
            Tolerances::new(1e-10, 1e-10, f64::NAN),
            Err(Error::InvalidTolerance {
                name: "tol_feas",
                ..
            })
        ));
    }
}
