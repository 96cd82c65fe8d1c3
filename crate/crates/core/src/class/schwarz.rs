use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// Upper limit for [`SchwarzGenerator::truncation_order`].
pub const MAX_ORDER: usize = 4096;

/// Families of Schwarz functions (`w(0) = 0`, `|w(z)| ≤ |z|`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchwarzGenerator {
    /// `w(z) = e^{iθ} z`.
    Rotation { theta: f64 },
    /// `w(z) = e^{iθ} z^k`.
    Power { k: u32, theta: f64 },
    /// `w(z) = e^{iθ} · z · (z + a)/(1 + āz) · 1/(1 + |a|)`, `|a| < 1`.
    ///
    /// The middle factor is a unit-modulus Blaschke factor on the circle, so
    /// `|w(z)| ≤ |z|/(1 + |a|) ≤ |z|` with no special case at `a = 0`.
    Blaschke { a: Complex64, theta: f64 },
}

impl SchwarzGenerator {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Power { k: 0, .. } => Err(Error::InvalidGenerator("power k must be at least 1".into())),
            Self::Blaschke { a, .. } if a.norm().is_nan() || a.norm() >= 1.0 => {
                Err(Error::InvalidGenerator(format!("|a| = {} must be < 1", a.norm())))
            }
            _ => Ok(()),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match *self {
            Self::Rotation { theta } => Complex64::from_polar(1.0, theta) * z,
            Self::Power { k, theta } => Complex64::from_polar(1.0, theta) * z.powu(k),
            Self::Blaschke { a, theta } => {
                Complex64::from_polar(1.0, theta) * z * (z + a) / (1.0 + a.conj() * z) / (1.0 + a.norm())
            }
        }
    }

    /// Taylor series of `w` to `order`.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        self.validate()?;
        Ok(match *self {
            Self::Rotation { theta } => PowerSeries::monomial(Complex64::from_polar(1.0, theta), 1, order),
            Self::Power { k, theta } => PowerSeries::monomial(Complex64::from_polar(1.0, theta), k as usize, order),
            Self::Blaschke { a, theta } => {
                let num = PowerSeries::from_coeffs(&[Complex64::new(0.0, 0.0), a, Complex64::new(1.0, 0.0)], order);
                let den = PowerSeries::from_coeffs(&[Complex64::new(1.0, 0.0), a.conj()], order);
                num.div(&den)?
                    .scale(Complex64::from_polar(1.0, theta) / (1.0 + a.norm()))
            }
        })
    }

    /// Taylor series of `q = F_α ∘ w = w/(1 - αw²)`, subordinate to `F_α` by construction.
    pub fn subordinate_series(&self, alpha: f64, order: usize) -> Result<PowerSeries> {
        crate::check_alpha(alpha)?;
        if let Self::Rotation { theta } = *self {
            return Ok(PowerSeries::f_alpha(alpha, order).compose_scaled(Complex64::from_polar(1.0, theta)));
        }
        let w = self.series(order)?;
        let den = PowerSeries::one(order).sub(&w.mul(&w).scale(Complex64::new(alpha, 0.0)));
        w.div(&den)
    }

    /// Radius of convergence of `F_α ∘ w` about 0.
    ///
    /// Singularities come from `αw² = 1` and, for the Blaschke variant, from
    /// the pole at `-1/ā`. There `w(z) = v` with `v = ±1/√α` is the quadratic
    /// `e^{iθ}z² + (e^{iθ}a - v(1+|a|)ā)z - v(1+|a|) = 0`.
    pub fn analytic_radius(&self, alpha: f64) -> f64 {
        match *self {
            Self::Rotation { .. } => alpha.sqrt().recip(),
            Self::Power { k, .. } => alpha.powf(-0.5 / k as f64),
            Self::Blaschke { a, theta } => {
                let pole = a.norm().recip();
                if alpha == 0.0 {
                    return pole;
                }
                let u = Complex64::from_polar(1.0, theta);
                let s = 1.0 + a.norm();
                [1.0, -1.0]
                    .into_iter()
                    .flat_map(|sign| {
                        let v = sign / alpha.sqrt();
                        let b = u * a - v * s * a.conj();
                        let c = -v * s;
                        let d = (b * b - 4.0 * u * c).sqrt();
                        [(-b + d) / (2.0 * u), (-b - d) / (2.0 * u)]
                    })
                    .map(|z| z.norm())
                    .fold(pole, f64::min)
            }
        }
    }

    /// Truncation order keeping the tail of `F_α ∘ w` below about `tol` on
    /// `|z| ≤ radius`, never below `min_order` and capped at [`MAX_ORDER`].
    pub fn truncation_order(&self, alpha: f64, radius: f64, tol: f64, min_order: usize) -> usize {
        let rho = radius / self.analytic_radius(alpha);
        if rho >= 1.0 || rho.is_nan() {
            return MAX_ORDER;
        }
        if rho <= 0.0 {
            return min_order;
        }
        // geometric tail Σ_{n>N} ρⁿ = ρ^{N+1}/(1-ρ)
        let n = ((tol * (1.0 - rho)).ln() / rho.ln()).ceil() as usize;
        n.clamp(min_order, MAX_ORDER)
    }

    /// Uniform variant, angle in `[0, 2π)`, power in `1..=4`, `|a| ≤ 0.9`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let theta = rng.gen_range(0.0..TAU);
        match rng.gen_range(0..3) {
            0 => Self::Rotation { theta },
            1 => Self::Power {
                k: rng.gen_range(1..=4),
                theta,
            },
            _ => Self::Blaschke {
                a: Complex64::from_polar(rng.gen_range(0.0..=0.9), rng.gen_range(0.0..TAU)),
                theta,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn generator() -> impl Strategy<Value = SchwarzGenerator> {
        let theta = 0.0..TAU;
        prop_oneof![
            theta.clone().prop_map(|theta| SchwarzGenerator::Rotation { theta }),
            (1u32..6, theta.clone()).prop_map(|(k, theta)| SchwarzGenerator::Power { k, theta }),
            (0.0..0.99f64, 0.0..TAU, theta).prop_map(|(r, t, theta)| SchwarzGenerator::Blaschke {
                a: Complex64::from_polar(r, t),
                theta
            }),
        ]
    }

    #[test]
    fn analytic_radius_locates_singularities() {
        let a = 0.7f64;
        let rot = SchwarzGenerator::Rotation { theta: 0.3 };
        assert!((rot.analytic_radius(a) - a.sqrt().recip()).abs() < 1e-15);
        let pow = SchwarzGenerator::Power { k: 4, theta: 0.0 };
        // 1 - αz⁸ vanishes at z = α^{-1/8}
        let r = pow.analytic_radius(a);
        assert!((1.0 - a * r.powi(8)).abs() < 1e-12);
        assert_eq!(rot.analytic_radius(0.0), f64::INFINITY);
    }

    #[test]
    fn blaschke_radius_has_no_singularity_inside() {
        for (m, alpha) in [(0.0, 0.7), (0.5, 0.3), (0.9, 0.05), (0.9, 0.7), (0.2, 0.9)] {
            for t in [0.0, 1.0, 2.5] {
                let g = SchwarzGenerator::Blaschke {
                    a: Complex64::from_polar(m, t),
                    theta: 0.4,
                };
                let r = g.analytic_radius(alpha);
                assert!(r > 1.0, "{g:?}");
                // root test: max_{n near N} |c_n|^{1/n} → 1/r
                let q = g.subordinate_series(alpha, 600).unwrap();
                let root = (560..=600)
                    .map(|n| q.coeff(n).norm().powf(1.0 / n as f64))
                    .fold(0.0, f64::max);
                if m > 0.0 {
                    assert!((root * r - 1.0).abs() < 0.02, "{g:?}: 1/r = {}, root test {root}", 1.0 / r);
                }
                // and nothing singular just inside
                for k in 0..720 {
                    let z = Complex64::from_polar(0.999 * r, TAU * k as f64 / 720.0);
                    let w = g.eval(z);
                    assert!(w.is_finite() && (1.0 - alpha * w * w).norm() > 1e-9, "{g:?} at {z}");
                }
            }
        }
    }

    #[test]
    fn truncated_series_is_accurate_near_the_circle() {
        let alpha = 0.7;
        for g in [
            SchwarzGenerator::Power { k: 4, theta: 1.0 },
            SchwarzGenerator::Rotation { theta: 2.0 },
            SchwarzGenerator::Blaschke {
                a: Complex64::from_polar(0.9, 0.5),
                theta: 0.0,
            },
        ] {
            let n = g.truncation_order(alpha, 0.99, 1e-12, 64);
            let q = g.subordinate_series(alpha, n).unwrap();
            for k in 0..64 {
                let z = Complex64::from_polar(0.99, TAU * k as f64 / 64.0);
                let w = g.eval(z);
                let exact = w / (1.0 - alpha * w * w);
                assert!((q.evaluate(z) - exact).norm() < 1e-9, "{g:?} order {n}");
            }
        }
    }

    proptest! {
        #[test]
        fn schwarz_lemma_holds(g in generator(), r in 0.0..0.999f64, t in 0.0..TAU) {
            let z = Complex64::from_polar(r, t);
            prop_assert!(g.eval(z).norm() <= z.norm() * (1.0 + 1e-12));
            prop_assert_eq!(g.eval(Complex64::new(0.0, 0.0)), Complex64::new(0.0, 0.0));
        }

        #[test]
        fn series_matches_closed_form(g in generator(), r in 0.0..0.5f64, t in 0.0..TAU) {
            let z = Complex64::from_polar(r, t);
            let s = g.series(64).unwrap();
            prop_assert!((s.evaluate(z) - g.eval(z)).norm() < 1e-12);
        }
    }

    #[test]
    fn subordinate_series_is_composition() {
        let alpha = 0.4;
        let gens = [
            SchwarzGenerator::Rotation { theta: 0.7 },
            SchwarzGenerator::Power { k: 3, theta: 2.0 },
            SchwarzGenerator::Blaschke {
                a: Complex64::new(0.3, -0.4),
                theta: 1.0,
            },
        ];
        for g in gens {
            let q = g.subordinate_series(alpha, 64).unwrap();
            for k in 0..20 {
                let z = Complex64::from_polar(0.6, 0.31 * k as f64);
                let w = g.eval(z);
                let exact = w / (1.0 - alpha * w * w);
                assert!((q.evaluate(z) - exact).norm() < 1e-10, "{g:?}");
            }
            assert_eq!(q.coeff(0), Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn invalid_generators() {
        assert!(SchwarzGenerator::Power { k: 0, theta: 0.0 }.validate().is_err());
        assert!(SchwarzGenerator::Blaschke {
            a: Complex64::new(1.0, 0.0),
            theta: 0.0
        }
        .series(8)
        .is_err());
    }
}
