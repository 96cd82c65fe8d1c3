//! Sufficient conditions for `g_n(z) = z + czⁿ` to fall outside the class.
//!
//! `G = zg_n'/g_n - 1 = (n-1)u/(1+u)` with `u = cz^{n-1}` maps the disc onto
//! the disc (or, for `|c| > 1`, the exterior of the disc) with diameter
//! endpoints `x₁ = |c|(n-1)/(|c|-1)` and `x₂ = |c|(n-1)/(|c|+1)`. Each
//! condition pushes one endpoint past `±1/(1-α)`, the extreme real parts of
//! `D(α)`.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

const UNIT_MODULUS_TOLERANCE: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GnCondition {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for GnCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::I => "i",
            Self::II => "ii",
            Self::III => "iii",
            Self::IV => "iv",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GnOutcome {
    NotInClass(GnCondition),
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscEndpoints {
    pub x1: f64,
    pub x2: f64,
}

fn validate(n: u32, alpha: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidGn(format!("n must be at least 2, got {n}")));
    }
    crate::check_alpha(alpha)
}

pub fn disc_endpoints(n: u32, c: Complex64) -> Result<DiscEndpoints> {
    let m = c.norm();
    if (m - 1.0).abs() < UNIT_MODULUS_TOLERANCE {
        return Err(Error::DegenerateModulus);
    }
    let k = (n as f64 - 1.0) * m;
    Ok(DiscEndpoints {
        x1: k / (m - 1.0),
        x2: k / (m + 1.0),
    })
}

/// Every condition (i)–(iv) that holds, in order.
pub fn conditions_met(n: u32, c: Complex64, alpha: f64) -> Result<Vec<GnCondition>> {
    validate(n, alpha)?;
    let m = c.norm();
    if (m - 1.0).abs() < UNIT_MODULUS_TOLERANCE {
        return Err(Error::DegenerateModulus);
    }
    let n = n as f64;
    let a = alpha;
    let mut met = Vec::new();
    if 1.0 / (a + n * (1.0 - a)) < m && m < 1.0 {
        met.push(GnCondition::I);
    }
    if n > (3.0 - a) / (1.0 - a) && 1.0 / (a - 2.0 + n * (1.0 - a)) < m && m < 1.0 {
        met.push(GnCondition::II);
    }
    let pivot = (2.0 - a) / (1.0 - a);
    if n >= pivot && m > 1.0 {
        met.push(GnCondition::III);
    }
    if n < pivot && 1.0 < m && m < 1.0 / (2.0 - a + n * (a - 1.0)) {
        met.push(GnCondition::IV);
    }
    Ok(met)
}

/// First matching condition, or `Inconclusive` (the conditions are only sufficient).
pub fn gn_nonmembership(n: u32, c: Complex64, alpha: f64) -> Result<GnOutcome> {
    Ok(match conditions_met(n, c, alpha)?.first() {
        Some(&cond) => GnOutcome::NotInClass(cond),
        None => GnOutcome::Inconclusive,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GnParameters {
    pub n: u32,
    pub c: Complex64,
    pub alpha: f64,
}

/// Draws `(n, c, α)` satisfying the given condition, with a uniform phase for `c`.
pub fn sample_parameters<R: Rng + ?Sized>(cond: GnCondition, rng: &mut R) -> GnParameters {
    let phase = rng.gen_range(0.0..TAU);
    let (n, modulus, alpha) = match cond {
        GnCondition::I => {
            let alpha: f64 = rng.gen_range(0.0..0.95);
            let n: u32 = rng.gen_range(2..=8);
            let lo = 1.0 / (alpha + n as f64 * (1.0 - alpha));
            (n, open_range(rng, lo, 1.0), alpha)
        }
        GnCondition::II => {
            let alpha: f64 = rng.gen_range(0.0..0.9);
            let first = ((3.0 - alpha) / (1.0 - alpha)).floor() as u32 + 1;
            let n = rng.gen_range(first..first + 6);
            let lo = 1.0 / (alpha - 2.0 + n as f64 * (1.0 - alpha));
            (n, open_range(rng, lo, 1.0), alpha)
        }
        GnCondition::III => {
            let alpha: f64 = rng.gen_range(0.0..0.95);
            let first = ((2.0 - alpha) / (1.0 - alpha)).ceil() as u32;
            let n = rng.gen_range(first..first + 6);
            (n, open_range(rng, 1.0, 4.0), alpha)
        }
        GnCondition::IV => {
            // n = 2 needs (2-α)/(1-α) > 2, i.e. α > 0
            let alpha: f64 = rng.gen_range(0.05..0.95);
            let pivot = (2.0 - alpha) / (1.0 - alpha);
            let last = (pivot.ceil() as u32 - 1).max(2);
            let n = rng.gen_range(2..=last);
            let hi = 1.0 / (2.0 - alpha + n as f64 * (alpha - 1.0));
            (n, open_range(rng, 1.0, hi), alpha)
        }
    };
    GnParameters {
        n,
        c: Complex64::from_polar(modulus, phase),
        alpha,
    }
}

fn open_range<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    loop {
        let x = rng.gen_range(lo..hi);
        if x > lo {
            return x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::booth::BoothRegion;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn examples() {
        assert_eq!(gn_nonmembership(2, c(0.8), 0.0).unwrap(), GnOutcome::NotInClass(GnCondition::I));
        let e = disc_endpoints(2, c(0.75)).unwrap();
        assert_abs_diff_eq!(e.x1, -3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(e.x2, 0.75 / 1.75, epsilon = 1e-15);
        assert_eq!(gn_nonmembership(5, c(2.0), 0.5).unwrap(), GnOutcome::NotInClass(GnCondition::III));
    }

    #[test]
    fn condition_four() {
        // α = 0.5, n = 2: (2-α)/(1-α) = 3 > 2, upper limit 1/(1.5 - 1) = 2
        assert_eq!(gn_nonmembership(2, c(1.5), 0.5).unwrap(), GnOutcome::NotInClass(GnCondition::IV));
        assert_eq!(gn_nonmembership(2, c(3.0), 0.5).unwrap(), GnOutcome::Inconclusive);
    }

    #[test]
    fn condition_two_implies_one() {
        // α = 0, n = 5 > 3: (ii) needs |c| > 1/3, (i) needs |c| > 1/5
        let met = conditions_met(5, Complex64::from_polar(0.5, 1.0), 0.0).unwrap();
        assert_eq!(met, vec![GnCondition::I, GnCondition::II]);
    }

    #[test]
    fn degenerate_and_invalid() {
        assert_eq!(gn_nonmembership(3, Complex64::from_polar(1.0, 0.3), 0.2), Err(Error::DegenerateModulus));
        assert_eq!(disc_endpoints(3, c(-1.0)), Err(Error::DegenerateModulus));
        assert!(gn_nonmembership(1, c(0.5), 0.2).is_err());
        assert!(gn_nonmembership(2, c(0.5), 1.0).is_err());
        assert_eq!(gn_nonmembership(2, c(0.0), 0.2).unwrap(), GnOutcome::Inconclusive);
    }

    #[test]
    fn endpoints_are_images_of_real_points() {
        // x₂ = G(|c|^{-1/(n-1)}·r → 1) along u = |c|, x₁ along u = -|c|
        for (n, m) in [(2, 0.6), (4, 0.3), (3, 2.5)] {
            let e = disc_endpoints(n, c(m)).unwrap();
            let g = |u: f64| (n as f64 - 1.0) * u / (1.0 + u);
            assert_abs_diff_eq!(g(m), e.x2, epsilon = 1e-14);
            assert_abs_diff_eq!(g(-m), e.x1, epsilon = 1e-13);
        }
    }

    #[test]
    fn sampled_parameters_satisfy_their_condition() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for cond in [GnCondition::I, GnCondition::II, GnCondition::III, GnCondition::IV] {
            for _ in 0..200 {
                let p = sample_parameters(cond, &mut rng);
                let met = conditions_met(p.n, p.c, p.alpha).unwrap();
                assert!(met.contains(&cond), "{cond:?}: {p:?} meets {met:?}");
            }
        }
    }

    #[test]
    fn condition_one_escapes_through_the_left() {
        for alpha in [0.0, 0.3, 0.8] {
            for n in 2..6 {
                let t = 1.0 / (alpha + n as f64 * (1.0 - alpha));
                let m = 0.5 * (t + 1.0);
                let e = disc_endpoints(n, c(m)).unwrap();
                assert!(e.x1 < 1.0 / (alpha - 1.0));
                let region = BoothRegion::new(alpha).unwrap();
                assert!(!region.contains(c(e.x1)));
            }
        }
    }
}
