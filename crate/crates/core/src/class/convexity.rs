use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Radial rings `j/RINGS`, `j = 1..=RINGS`. The outer ring is the unit
/// circle, where the harmonic function attains its infimum over the disc.
pub const RINGS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvexityReport {
    pub alpha: f64,
    pub grid_min: f64,
    pub argmin: [f64; 2],
    pub k_alpha: f64,
}

impl ConvexityReport {
    pub fn positive(&self) -> bool {
        self.grid_min > 0.0
    }

    pub fn above_k(&self, tol: f64) -> bool {
        self.grid_min >= self.k_alpha - tol
    }
}

/// `1 + zp''(z)/p'(z)` for `p = F - 1`:
/// `1 + (1/(2√α) - 1)·2√α z/(1 - αz²) + 2√α z/(1 - √α z)`, and `1 + z` at `α = 0`.
pub fn convexity_expression(alpha: f64, z: Complex64) -> Complex64 {
    if alpha == 0.0 {
        return 1.0 + z;
    }
    let s = alpha.sqrt();
    // (1/(2s) - 1)·2s = 1 - 2s
    1.0 + (1.0 - 2.0 * s) * z / (1.0 - alpha * z * z) + 2.0 * s * z / (1.0 - s * z)
}

/// `K(α) = 1 + (1 - 2√α)/(α - 1) - 2√α/(1 + √α)`.
pub fn k_alpha(alpha: f64) -> f64 {
    let s = alpha.sqrt();
    1.0 + (1.0 - 2.0 * s) / (alpha - 1.0) - 2.0 * s / (1.0 + s)
}

/// Minimum of `Re{1 + zp''/p'}` over a polar grid with `samples` angles on
/// [`RINGS`] rings, reported together with `K(α)`.
pub fn convexity_check_p(alpha: f64, samples: usize) -> Result<ConvexityReport> {
    crate::check_alpha(alpha)?;
    if samples == 0 {
        return Err(Error::InvalidGrid("convexity scan needs at least one angle".into()));
    }
    let mut grid_min = f64::INFINITY;
    let mut argmin = Complex64::new(0.0, 0.0);
    for j in 1..=RINGS {
        let r = j as f64 / RINGS as f64;
        for k in 0..samples {
            let z = Complex64::from_polar(r, TAU * k as f64 / samples as f64);
            let v = convexity_expression(alpha, z).re;
            if v < grid_min {
                grid_min = v;
                argmin = z;
            }
        }
    }
    Ok(ConvexityReport {
        alpha,
        grid_min,
        argmin: [argmin.re, argmin.im],
        k_alpha: k_alpha(alpha),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::AnalyticFunction;
    use approx::assert_abs_diff_eq;

    #[test]
    fn k_examples() {
        assert_eq!(k_alpha(0.0), 0.0);
        assert_abs_diff_eq!(k_alpha(0.25), 1.0 / 3.0, epsilon = 1e-15);
        assert!(k_alpha(0.5) > k_alpha(0.1));
        assert!(k_alpha(0.1) > 0.0);
    }

    #[test]
    fn k_derivative() {
        // K'(α) = 1/(α-1)², by central differences
        for alpha in [0.1, 0.3, 0.6] {
            let h = 1e-6;
            let d = (k_alpha(alpha + h) - k_alpha(alpha - h)) / (2.0 * h);
            assert_abs_diff_eq!(d, 1.0 / ((alpha - 1.0) * (alpha - 1.0)), epsilon = 1e-6);
        }
    }

    #[test]
    fn expression_matches_derivatives_of_p() {
        // 1 + zp''/p' from finite differences of p'
        let h = 1e-5;
        for alpha in [0.0, 0.05, 0.3, 0.8] {
            let p = AnalyticFunction::small_p(alpha).unwrap();
            for z in [Complex64::new(0.3, 0.4), Complex64::new(-0.8, 0.1), Complex64::new(0.0, -0.95)] {
                let d2 = (p.derivative_at(z + h) - p.derivative_at(z - h)) / (2.0 * h);
                let fd = 1.0 + z * d2 / p.derivative_at(z);
                assert!((fd - convexity_expression(alpha, z)).norm() < 1e-6, "alpha {alpha} z {z}");
            }
        }
    }

    #[test]
    fn zero_alpha_limit() {
        let r = convexity_check_p(0.0, 360).unwrap();
        assert_eq!(r.k_alpha, 0.0);
        // Re(1 + z) reaches 0 at z = -1 on the closed disc
        assert_abs_diff_eq!(r.grid_min, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn small_alpha_attains_k_on_the_circle() {
        let r = convexity_check_p(0.25, 720).unwrap();
        assert!(r.positive());
        assert!(r.above_k(1e-9));
        assert_abs_diff_eq!(r.grid_min, 1.0 / 3.0, epsilon = 1e-9);
    }
}
