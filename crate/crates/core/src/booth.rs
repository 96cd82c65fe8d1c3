//! The region `D(α) = F_α(Δ)` bounded by the Booth lemniscate
//! `(x² + y²)² - x²/(1-α)² - y²/(1+α)² = 0`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::class::grid::{scan, Probe};
use crate::class::{GridSpec, Verdict};
use crate::error::{Error, Result};

/// `|quartic|` below this (away from the origin) counts as on the curve.
pub const BOUNDARY_BAND: f64 = 1e-12;

const POLE_TOLERANCE: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoothRegion {
    alpha: f64,
}

impl BoothRegion {
    /// Rejects α outside `[0, 1)`; `α = 1` (the slit plane) is not supported.
    pub fn new(alpha: f64) -> Result<Self> {
        crate::check_alpha(alpha)?;
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Left side of the defining inequality; negative inside, zero on the curve.
    pub fn quartic(&self, w: Complex64) -> f64 {
        let (x2, y2) = (w.re * w.re, w.im * w.im);
        let a = 1.0 - self.alpha;
        let b = 1.0 + self.alpha;
        (x2 + y2) * (x2 + y2) - x2 / (a * a) - y2 / (b * b)
    }

    pub fn quartic_gradient(&self, w: Complex64) -> (f64, f64) {
        let s = w.norm_sqr();
        let a = 1.0 - self.alpha;
        let b = 1.0 + self.alpha;
        (
            4.0 * w.re * s - 2.0 * w.re / (a * a),
            4.0 * w.im * s - 2.0 * w.im / (b * b),
        )
    }

    /// Three-valued classification; the origin is inside even though the quartic vanishes there.
    pub fn locate(&self, w: Complex64) -> Location {
        if w == Complex64::new(0.0, 0.0) {
            return Location::Inside;
        }
        let q = self.quartic(w);
        if q.abs() < BOUNDARY_BAND {
            Location::Boundary
        } else if q < 0.0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    /// Strict membership: `w = 0` or the quartic is strictly negative.
    pub fn contains(&self, w: Complex64) -> bool {
        w == Complex64::new(0.0, 0.0) || self.quartic(w) < 0.0
    }

    /// `F_α(e^{iφ})`.
    pub fn boundary_point(&self, phi: f64) -> Complex64 {
        let z = Complex64::from_polar(1.0, phi);
        z / (1.0 - self.alpha * z * z)
    }

    /// `samples` points `F_α(e^{2πik/samples})`, `k = 0..samples`, paired with their angle.
    pub fn boundary_polyline(&self, samples: usize) -> Vec<(f64, Complex64)> {
        (0..samples)
            .map(|k| {
                let phi = TAU * k as f64 / samples as f64;
                (phi, self.boundary_point(phi))
            })
            .collect()
    }

    /// Real-axis crossings `±1/(1-α)`.
    pub fn real_crossing(&self) -> f64 {
        1.0 / (1.0 - self.alpha)
    }

    /// Imaginary-axis crossings `±i/(1+α)`.
    pub fn imaginary_crossing(&self) -> f64 {
        1.0 / (1.0 + self.alpha)
    }
}

/// `F_α(z) = z/(1 - αz²)`. Accepts `α ∈ [0, 1]`.
pub fn eval_f_alpha(alpha: f64, z: Complex64) -> Result<Complex64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidAlpha(alpha));
    }
    let d = 1.0 - alpha * z * z;
    if d.norm() < POLE_TOLERANCE {
        return Err(Error::PoleAtZ(z));
    }
    Ok(z / d)
}

/// `F_α'(z) = (1 + αz²)/(1 - αz²)²`.
pub fn f_alpha_derivative(alpha: f64, z: Complex64) -> Complex64 {
    let z2 = z * z;
    let d = 1.0 - alpha * z2;
    (1.0 + alpha * z2) / (d * d)
}

/// `Re{1 + zF_α''(z)/F_α'(z)}`, using
/// `zF''/F' = 2αz²/(1 + αz²) + 4αz²/(1 - αz²)`.
pub fn convexity_functional(alpha: f64, z: Complex64) -> f64 {
    let t = alpha * z * z;
    (1.0 + 2.0 * t / (1.0 + t) + 4.0 * t / (1.0 - t)).re
}

/// Minimum over `φ = 2πk/samples` of `Re{1 + zF_α''/F_α'}` at `z = e^{iφ}`;
/// negative means the boundary curve is not convex.
pub fn curvature_min(alpha: f64, samples: usize) -> Result<f64> {
    crate::check_alpha(alpha)?;
    if samples == 0 {
        return Err(Error::InvalidGrid("curvature scan needs at least one sample".into()));
    }
    Ok((0..samples)
        .map(|k| convexity_functional(alpha, Complex64::from_polar(1.0, TAU * k as f64 / samples as f64)))
        .fold(f64::INFINITY, f64::min))
}

/// Checks `1/(α-1) < Re F_α(z) < 1/(1-α)` on the grid.
pub fn check_re_bounds(alpha: f64, grid: &GridSpec) -> Result<Verdict> {
    crate::check_alpha(alpha)?;
    let lo = 1.0 / (alpha - 1.0);
    let hi = 1.0 / (1.0 - alpha);
    scan(grid, "Re F_alpha(z)", |z| {
        let w = eval_f_alpha(alpha, z)?;
        let violation = if w.re <= lo {
            Some(format!("Re F_alpha = {} <= 1/(alpha-1) = {lo}", w.re))
        } else if w.re >= hi {
            Some(format!("Re F_alpha = {} >= 1/(1-alpha) = {hi}", w.re))
        } else {
            None
        };
        Ok(Probe {
            value: w,
            monitored: w.re,
            violation,
        })
    })
}
