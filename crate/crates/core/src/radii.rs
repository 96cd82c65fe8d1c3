//! Radius of starlikeness of order γ.
//!
//! Every member satisfies `Re{zf'/f} ≥ h(|z|)` with `h(r) = 1 - r/(1 - αr²)`,
//! which decreases from 1 to `α/(α-1)`. The radius is the root of
//! `h(r) = γ`; the extremal function attains it at `z = -r`.
//!
//! The root is found by bisection (the reference value) and by the
//! quadratic `α(1-γ)r² + r - (1-γ) = 0`. The commonly quoted closed form
//! `(√(1+4α(1-γ)) - 1)/(2α(1-γ))` solves that quadratic only for `γ = 0`; it
//! is reported separately as `paper_formula_value`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub const BISECTION_TOLERANCE: f64 = 1e-14;
pub const BISECTION_MAX_ITERATIONS: usize = 200;
pub const BRACKET_TOP: f64 = 1.0 - 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusResult {
    pub alpha: f64,
    pub gamma: f64,
    pub r_closed: f64,
    pub r_bisect: f64,
    pub agreement: f64,
    pub paper_formula_value: f64,
}

/// `h(r) = 1 - r/(1 - αr²)`.
pub fn h_function(alpha: f64, r: f64) -> f64 {
    1.0 - r / (1.0 - alpha * r * r)
}

/// `h'(r) = -(1 + αr²)/(1 - αr²)²`.
pub fn h_derivative(alpha: f64, r: f64) -> f64 {
    let d = 1.0 - alpha * r * r;
    -(1.0 + alpha * r * r) / (d * d)
}

fn check_gamma(gamma: f64) -> Result<()> {
    if (0.0..1.0).contains(&gamma) {
        Ok(())
    } else {
        Err(Error::InvalidGamma(gamma))
    }
}

/// Root of `h(r) = γ` on `[0, 1 - 1e-15]` by bisection.
pub fn bisect_radius(alpha: f64, gamma: f64) -> Result<f64> {
    crate::check_alpha(alpha)?;
    check_gamma(gamma)?;
    if alpha == 0.0 {
        return Ok(1.0 - gamma);
    }
    let (mut lo, mut hi) = (0.0, BRACKET_TOP);
    for _ in 0..BISECTION_MAX_ITERATIONS {
        if hi - lo <= BISECTION_TOLERANCE {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if h_function(alpha, mid) > gamma {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Positive root of `α(1-γ)r² + r - (1-γ) = 0`, in the cancellation-free form
/// `2(1-γ)/(1 + √(1 + 4α(1-γ)²))`, which is also exact at `α = 0`.
pub fn closed_form_radius(alpha: f64, gamma: f64) -> f64 {
    let g = 1.0 - gamma;
    2.0 * g / (1.0 + (1.0 + 4.0 * alpha * g * g).sqrt())
}

/// `(√(1+4α(1-γ)) - 1)/(2α(1-γ))` as printed, rationalised to
/// `2/(1 + √(1+4α(1-γ)))` so it stays finite at `α = 0`.
pub fn printed_radius_formula(alpha: f64, gamma: f64) -> f64 {
    2.0 / (1.0 + (1.0 + 4.0 * alpha * (1.0 - gamma)).sqrt())
}

pub fn radius_starlike(alpha: f64, gamma: f64) -> Result<RadiusResult> {
    let r_bisect = bisect_radius(alpha, gamma)?;
    let r_closed = closed_form_radius(alpha, gamma);
    Ok(RadiusResult {
        alpha,
        gamma,
        r_closed,
        r_bisect,
        agreement: (r_closed - r_bisect).abs(),
        paper_formula_value: printed_radius_formula(alpha, gamma),
    })
}

/// `|Re{1 + w/(1 - αw²)} - γ|` at `w = -r_bisect`, i.e. how exactly the
/// extremal function reaches order γ on the radius.
pub fn sharpness_check(alpha: f64, gamma: f64) -> Result<f64> {
    let r = bisect_radius(alpha, gamma)?;
    let w = Complex64::new(-r, 0.0);
    let a = (1.0 + w / (1.0 - alpha * w * w)).re;
    Ok((a - gamma).abs())
}

/// Supremum of admissible α for radius `r`: `min((1-r)/r², 1)`.
pub fn alpha_for_radius(r: f64) -> Result<f64> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidRadius {
            value: r,
            expected: "(0, 1]",
        });
    }
    Ok(((1.0 - r) / (r * r)).min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const GOLDEN_INV: f64 = 0.618_033_988_749_894_8;

    #[test]
    fn h_examples() {
        assert_eq!(h_function(0.4, 0.0), 1.0);
        for alpha in [0.2, 0.5, 0.9] {
            let limit = alpha / (alpha - 1.0);
            assert_abs_diff_eq!(h_function(alpha, 1.0 - 1e-12), limit, epsilon = 1e-9);
        }
        assert_abs_diff_eq!(h_function(0.5, 0.5), 3.0 / 7.0, epsilon = 1e-15);
    }

    #[test]
    fn h_derivative_by_differences() {
        for alpha in [0.1, 0.6] {
            for r in [0.1, 0.5, 0.9] {
                let d = (h_function(alpha, r + 1e-6) - h_function(alpha, r - 1e-6)) / 2e-6;
                assert_abs_diff_eq!(d, h_derivative(alpha, r), epsilon = 1e-7);
            }
        }
    }

    #[test]
    fn radius_examples() {
        let r = radius_starlike(0.25, 0.0).unwrap();
        assert_abs_diff_eq!(r.r_bisect, 2.0 * (2f64.sqrt() - 1.0), epsilon = 1e-12);
        assert!(r.agreement < 1e-10);
        assert_abs_diff_eq!(radius_starlike(1e-10, 0.0).unwrap().r_bisect, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(radius_starlike(1.0 - 1e-10, 0.0).unwrap().r_bisect, GOLDEN_INV, epsilon = 1e-9);
    }

    #[test]
    fn zero_alpha_is_exact_limit() {
        for gamma in [0.0, 0.3, 0.9] {
            let r = radius_starlike(0.0, gamma).unwrap();
            assert_eq!(r.r_bisect, 1.0 - gamma);
            assert_eq!(r.r_closed, 1.0 - gamma);
        }
    }

    #[test]
    fn printed_formula_only_matches_at_zero_order() {
        let r = radius_starlike(0.5, 0.0).unwrap();
        assert_abs_diff_eq!(r.paper_formula_value, r.r_bisect, epsilon = 1e-12);
        let r = radius_starlike(0.5, 0.5).unwrap();
        assert!((r.paper_formula_value - r.r_bisect).abs() > 1e-3);
    }

    #[test]
    fn sharpness_examples() {
        for (a, g) in [(0.25, 0.0), (0.5, 0.5), (0.9, 0.0)] {
            assert!(sharpness_check(a, g).unwrap() < 1e-10);
        }
    }

    #[test]
    fn alpha_for_radius_examples() {
        assert_eq!(alpha_for_radius(1.0).unwrap(), 0.0);
        assert_eq!(alpha_for_radius(0.5).unwrap(), 1.0);
        assert_abs_diff_eq!(alpha_for_radius(GOLDEN_INV).unwrap(), 1.0, epsilon = 1e-12);
        let raw = (1.0 - GOLDEN_INV) / (GOLDEN_INV * GOLDEN_INV);
        assert_abs_diff_eq!(raw, 1.0, epsilon = 1e-12);
        assert!(alpha_for_radius(0.0).is_err());
        assert!(alpha_for_radius(1.1).is_err());
    }

    #[test]
    fn invalid_inputs() {
        assert!(radius_starlike(1.0, 0.0).is_err());
        assert!(radius_starlike(0.5, 1.0).is_err());
        assert!(radius_starlike(0.5, -0.1).is_err());
    }
}
