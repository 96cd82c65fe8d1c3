//! Numeric subordination against univalent targets and the sharp bounds for
//! `Re f(z)/z`.
//!
//! For univalent `g`, `f ≺ g` iff `f(0) = g(0)` and `f(Δ) ⊂ g(Δ)`. All
//! targets used here extend analytically to the closed disc, so `g(Δ)` is the
//! interior of the Jordan curve `g(e^{iφ})`, and inclusion is tested by
//! winding number against a fine polyline of that curve.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::class::function::{big_f, SMALL_ALPHA};
use crate::class::grid::{scan, Probe};
use crate::class::{build_member, AnalyticFunction, GridSpec, Holomorphic, MemberSource, OverZ, SchwarzGenerator, Verdict};
use crate::error::{Error, Result};
use crate::series::DEFAULT_ORDER;
use crate::CONVEXITY_THRESHOLD;

pub const DEFAULT_CURVE_SAMPLES: usize = 4096;

/// Relative width of the band around the curve where winding is not decided.
pub const DEFAULT_RELATIVE_MARGIN: f64 = 1e-9;

/// `|f(0) - g(0)|` above this is a base mismatch.
pub const BASE_TOLERANCE: f64 = 1e-12;

/// Roundoff allowance when comparing `Re f(z)/z` with the bounds.
pub const BOUND_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winding {
    Value(i32),
    /// Within the boundary margin of some segment.
    Indeterminate,
}

/// Closed polyline (last point joins the first) with a y-bucket index of its
/// segments, so a point query touches only the segments near its ordinate.
#[derive(Debug, Clone)]
pub struct JordanCurve {
    points: Vec<Complex64>,
    margin: f64,
    diameter: f64,
    lo: f64,
    hi: f64,
    bucket_height: f64,
    buckets: Vec<Vec<u32>>,
}

impl JordanCurve {
    /// Margin defaults to `1e-9 ×` the curve diameter (bounding-box diagonal).
    pub fn from_points(points: Vec<Complex64>) -> Result<Self> {
        Self::with_relative_margin(points, DEFAULT_RELATIVE_MARGIN)
    }

    pub fn with_relative_margin(points: Vec<Complex64>, relative_margin: f64) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidGrid(format!("a closed curve needs at least 3 points, got {}", points.len())));
        }
        if points.iter().any(|p| !(p.re.is_finite() && p.im.is_finite())) {
            return Err(Error::InvalidGrid("curve has non-finite points".into()));
        }
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for p in &points {
            x0 = x0.min(p.re);
            x1 = x1.max(p.re);
            y0 = y0.min(p.im);
            y1 = y1.max(p.im);
        }
        let diameter = (x1 - x0).hypot(y1 - y0);
        let margin = relative_margin * diameter;
        let lo = y0 - margin;
        let hi = y1 + margin;
        let n_buckets = (points.len() / 4).max(1);
        let bucket_height = ((hi - lo) / n_buckets as f64).max(f64::MIN_POSITIVE);
        let mut curve = Self {
            points,
            margin,
            diameter,
            lo,
            hi,
            bucket_height,
            buckets: vec![Vec::new(); n_buckets],
        };
        for i in 0..curve.points.len() {
            let (a, b) = curve.segment(i);
            let first = curve.bucket(a.im.min(b.im) - margin);
            let last = curve.bucket(a.im.max(b.im) + margin);
            for bucket in &mut curve.buckets[first..=last] {
                bucket.push(i as u32);
            }
        }
        Ok(curve)
    }

    /// Samples `g(e^{2πik/samples})`.
    pub fn from_function<G: Holomorphic + ?Sized>(g: &G, samples: usize) -> Result<Self> {
        Self::sample(g, samples, DEFAULT_RELATIVE_MARGIN)
    }

    pub fn sample<G: Holomorphic + ?Sized>(g: &G, samples: usize, relative_margin: f64) -> Result<Self> {
        let points = (0..samples)
            .map(|k| g.eval(Complex64::from_polar(1.0, TAU * k as f64 / samples as f64)))
            .collect();
        Self::with_relative_margin(points, relative_margin)
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn margin(&self) -> f64 {
        self.margin
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn max_segment_length(&self) -> f64 {
        (0..self.points.len())
            .map(|i| {
                let (a, b) = self.segment(i);
                (b - a).norm()
            })
            .fold(0.0, f64::max)
    }

    fn segment(&self, i: usize) -> (Complex64, Complex64) {
        (self.points[i], self.points[(i + 1) % self.points.len()])
    }

    fn bucket(&self, y: f64) -> usize {
        let idx = ((y - self.lo) / self.bucket_height).max(0.0) as usize;
        idx.min(self.buckets.len() - 1)
    }

    fn near_segment(&self, i: usize, w: Complex64) -> bool {
        let (a, b) = self.segment(i);
        segment_distance(a, b, w) < self.margin
    }

    /// Winding number by crossing counts over the segments in `w`'s bucket.
    pub fn winding_number(&self, w: Complex64) -> Winding {
        if !(w.im >= self.lo && w.im <= self.hi) {
            return if w.im.is_nan() || w.re.is_nan() {
                Winding::Indeterminate
            } else {
                Winding::Value(0)
            };
        }
        let mut wn = 0;
        for &i in &self.buckets[self.bucket(w.im)] {
            let i = i as usize;
            if self.near_segment(i, w) {
                return Winding::Indeterminate;
            }
            let (a, b) = self.segment(i);
            let side = (b.re - a.re) * (w.im - a.im) - (w.re - a.re) * (b.im - a.im);
            if a.im <= w.im {
                if b.im > w.im && side > 0.0 {
                    wn += 1;
                }
            } else if b.im <= w.im && side < 0.0 {
                wn -= 1;
            }
        }
        Winding::Value(wn)
    }

    /// Reference implementation: sum of argument increments over every
    /// segment, divided by 2π and rounded.
    pub fn winding_number_by_angles(&self, w: Complex64) -> Winding {
        let mut total = 0.0;
        for i in 0..self.points.len() {
            if self.near_segment(i, w) {
                return Winding::Indeterminate;
            }
            let (a, b) = self.segment(i);
            total += ((b - w) / (a - w)).arg();
        }
        Winding::Value((total / TAU).round() as i32)
    }
}

fn segment_distance(a: Complex64, b: Complex64, w: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (w - a).norm();
    }
    let t = (((w - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (w - (a + d * t)).norm()
}

pub fn winding_number(curve: &JordanCurve, w: Complex64) -> Winding {
    curve.winding_number(w)
}

/// Grid test of `f ≺ g` for univalent `g` analytic on the closed disc:
/// `f(0) = g(0)` and `f(z)` has winding number 1 about `g(∂Δ)` at every grid point.
///
/// The indeterminate band is `grid.boundary_margin ×` the curve diameter.
pub fn check_subordination<F, G>(f: &F, g: &G, grid: &GridSpec, curve_samples: usize) -> Result<Verdict>
where
    F: Holomorphic + ?Sized,
    G: Holomorphic + ?Sized,
{
    let origin = Complex64::new(0.0, 0.0);
    let (f0, g0) = (f.eval(origin), g.eval(origin));
    if (f0 - g0).norm() >= BASE_TOLERANCE {
        return Err(Error::BaseMismatch { f0, g0 });
    }
    let curve = JordanCurve::sample(g, curve_samples, grid.boundary_margin)?;
    check_inclusion(f, &curve, grid)
}

/// Winding-number scan of `f` over the grid against a prepared curve.
pub fn check_inclusion<F: Holomorphic + ?Sized>(f: &F, curve: &JordanCurve, grid: &GridSpec) -> Result<Verdict> {
    scan(grid, "winding number", |z| {
        let w = f.eval(z);
        let (monitored, violation) = match curve.winding_number(w) {
            Winding::Value(1) => (1.0, None),
            Winding::Value(k) => (k as f64, Some(format!("f(z) = {w} has winding number {k} about g(∂Δ)"))),
            Winding::Indeterminate => (f64::NAN, Some(format!("f(z) = {w} is within the margin of g(∂Δ)"))),
        };
        Ok(Probe {
            value: w,
            monitored,
            violation,
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsPair {
    pub alpha: f64,
    pub radius: f64,
    /// `F(-r)`.
    pub lower: f64,
    /// `F(r)`.
    pub upper: f64,
    /// `((1 - r√α)/(1 + √α))^{1/(2√α)}`, the lower bound as usually printed.
    pub paper_printed_lower: f64,
    /// False when α exceeds `3 - 2√2`, where the bound is not guaranteed.
    pub within_hypothesis: bool,
}

/// `((1 - r√α)/(1 + √α))^{1/(2√α)}`; its `α → 0` limit is `e^{-(1+r)/2}`.
pub fn printed_lower_bound(alpha: f64, r: f64) -> f64 {
    if alpha == 0.0 {
        return (-(1.0 + r) / 2.0).exp();
    }
    let s = alpha.sqrt();
    let log = if alpha < SMALL_ALPHA {
        ((-r * s).ln_1p() - s.ln_1p()) / (2.0 * s)
    } else {
        ((1.0 - r * s) / (1.0 + s)).ln() / (2.0 * s)
    };
    log.exp()
}

/// Bounds `F(-r) ≤ Re f(z)/z ≤ F(r)` on `|z| = r`, computed for any α in
/// `[0, 1)` and flagged when outside the range where they are guaranteed.
pub fn bounds_unchecked(alpha: f64, r: f64) -> Result<BoundsPair> {
    crate::check_alpha(alpha)?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::InvalidRadius {
            value: r,
            expected: "[0, 1)",
        });
    }
    Ok(BoundsPair {
        alpha,
        radius: r,
        lower: big_f(alpha, Complex64::new(-r, 0.0)).re,
        upper: big_f(alpha, Complex64::new(r, 0.0)).re,
        paper_printed_lower: printed_lower_bound(alpha, r),
        within_hypothesis: alpha <= CONVEXITY_THRESHOLD,
    })
}

/// As [`bounds_unchecked`] but rejects α above `3 - 2√2`.
pub fn re_f_over_z_bounds(alpha: f64, r: f64) -> Result<BoundsPair> {
    let b = bounds_unchecked(alpha, r)?;
    if !b.within_hypothesis {
        return Err(Error::HypothesisOutOfRange(alpha));
    }
    Ok(b)
}

/// Values of `f̃(z)/z` at `z = ±r`, which attain the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpWitness {
    pub z_plus: f64,
    pub value_plus: f64,
    pub z_minus: f64,
    pub value_minus: f64,
}

pub fn sharp_witness(alpha: f64, r: f64) -> Result<SharpWitness> {
    let f = AnalyticFunction::tilde_f(alpha)?;
    let g = OverZ(&f);
    Ok(SharpWitness {
        z_plus: r,
        value_plus: g.eval(Complex64::new(r, 0.0)).re,
        z_minus: -r,
        value_minus: g.eval(Complex64::new(-r, 0.0)).re,
    })
}

/// Checks `lower ≤ Re f(z)/z ≤ upper` ring by ring for one function.
pub fn check_bounds<F: Holomorphic + ?Sized>(f_over_z: &F, alpha: f64, grid: &GridSpec) -> Result<Verdict> {
    let rings = grid
        .radii
        .iter()
        .map(|&r| bounds_unchecked(alpha, r))
        .collect::<Result<Vec<_>>>()?;
    let per_ring = grid.angular_samples;
    let mut idx = 0usize;
    scan(grid, "Re f(z)/z", |z| {
        let b = rings[idx / per_ring];
        idx += 1;
        let w = f_over_z.eval(z);
        let violation = if w.re.is_nan() || w.re < b.lower - BOUND_SLACK {
            Some(format!("Re f(z)/z = {} < lower bound {} at r = {}", w.re, b.lower, b.radius))
        } else if w.re > b.upper + BOUND_SLACK {
            Some(format!("Re f(z)/z = {} > upper bound {} at r = {}", w.re, b.upper, b.radius))
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

/// Outer radius at which random members must stay accurate: the last ring
/// of the default grid.
pub const MEMBER_RADIUS: f64 = 0.99;

/// Target truncation error of random members on `|z| ≤ MEMBER_RADIUS`.
pub const MEMBER_TOLERANCE: f64 = 1e-12;

/// Seeded random members `f = z·exp(∫ F_α(w(t))/t dt)`.
///
/// `order` is a floor: each member's order is raised until the series of
/// `F_α ∘ w` is accurate out to [`MEMBER_RADIUS`].
pub fn random_members(alpha: f64, count: usize, seed: u64, order: usize) -> Result<Vec<(SchwarzGenerator, AnalyticFunction)>> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g = SchwarzGenerator::random(&mut rng);
            let n = g.truncation_order(alpha, MEMBER_RADIUS, MEMBER_TOLERANCE, order);
            build_member(alpha, &MemberSource::Generator(g), n).map(|f| (g, f))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct MemberBoundsReport {
    /// First failing member's verdict, or the last member's if all hold.
    pub verdict: Verdict,
    pub members_checked: usize,
    pub failing_member: Option<usize>,
    /// Largest `|f̃(±r)/(±r) - bound|` over the rings.
    pub sharpness_error: f64,
}

impl MemberBoundsReport {
    pub fn holds(&self, sharp_tol: f64) -> bool {
        self.failing_member.is_none() && self.sharpness_error <= sharp_tol
    }
}

/// Bounds check over `trials` seeded random members plus the sharpness of
/// `f̃` at `z = ±r` on every ring.
pub fn verify_bounds_on_members(alpha: f64, trials: usize, grid: &GridSpec, seed: u64) -> Result<MemberBoundsReport> {
    if alpha > CONVEXITY_THRESHOLD {
        return Err(Error::HypothesisOutOfRange(alpha));
    }
    let members = random_members(alpha, trials, seed, DEFAULT_ORDER)?;
    let mut last = None;
    let mut failing = None;
    for (i, (_, f)) in members.iter().enumerate() {
        let v = check_bounds(&OverZ(f), alpha, grid)?;
        let holds = v.holds();
        last = Some(v);
        if !holds {
            failing = Some(i);
            break;
        }
    }
    let verdict = match last {
        Some(v) => v,
        None => check_bounds(&OverZ(&AnalyticFunction::identity()), alpha, grid)?,
    };
    let mut sharpness_error: f64 = 0.0;
    for &r in &grid.radii {
        let b = bounds_unchecked(alpha, r)?;
        let w = sharp_witness(alpha, r)?;
        sharpness_error = sharpness_error
            .max((w.value_plus - b.upper).abs())
            .max((w.value_minus - b.lower).abs());
    }
    Ok(MemberBoundsReport {
        verdict,
        members_checked: failing.map_or(trials, |i| i + 1),
        failing_member: failing,
        sharpness_error,
    })
}

/// `φ ∗ l`, the Hadamard product with `l(z) = log 1/(1-z)`, i.e. `∫₀^z φ(t)/t dt`.
pub fn log_kernel_transform(phi: &crate::series::PowerSeries) -> crate::series::PowerSeries {
    phi.hadamard(&crate::series::PowerSeries::log_kernel(phi.order()))
}
