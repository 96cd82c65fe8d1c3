//! Numerics for the class of analytic functions whose log-derivative
//! `zf'/f - 1` is subordinate to `F_α(z) = z/(1 - αz²)`, the conformal map
//! of the unit disc onto the interior of a Booth lemniscate.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: truncated power series (Cauchy product, division, `exp`,
//!   Hadamard product) used to build class members.
//! * [`booth`]: the region `D(α) = F_α(Δ)`, its boundary and curvature.
//! * [`class`]: concrete analytic functions, grid membership tests, the
//!   structural builder, and the `z + czⁿ` non-membership criteria.
//! * [`radii`]: radius of starlikeness of order γ with a bisection oracle.
//! * [`subord`]: winding-number subordination checks and sharp bounds for
//!   `Re f(z)/z`.
//! * [`cli`]: the command-line front end and the `verify` suites.

pub mod booth;
pub mod class;
pub mod cli;
pub mod error;
pub mod radii;
pub mod series;
pub mod subord;

pub use num_complex::Complex64;

pub use booth::BoothRegion;
pub use class::{AnalyticFunction, GridSpec, Holomorphic, SchwarzGenerator, Status, Verdict};
pub use error::{Error, Result};
pub use radii::RadiusResult;
pub use series::PowerSeries;
pub use subord::{BoundsPair, JordanCurve, Winding};

/// `3 - 2√2`, the largest α for which the boundary of `D(α)` is convex.
pub const CONVEXITY_THRESHOLD: f64 = 0.171_572_875_253_809_9;

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_constant() {
        // 3 - 2√2 = 1/(3 + 2√2); the subtraction cancels and loses an ulp
        assert_eq!(CONVEXITY_THRESHOLD, 1.0 / (3.0 + 2.0 * 2f64.sqrt()));
        assert!((CONVEXITY_THRESHOLD - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-15);
    }
}
