use num_complex::Complex64;

use super::grid::{scan, Probe};
use super::{AnalyticFunction, GridSpec, SchwarzGenerator, Verdict};
use crate::booth::BoothRegion;
use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// `|f(z)|` below this at a sampled `z ≠ 0` makes `zf'/f` undefined.
pub const ZERO_TOLERANCE: f64 = 1e-13;

/// Source of the subordinate function `q` in `f(z) = z·exp(∫₀^z q(t)/t dt)`.
#[derive(Debug, Clone, PartialEq)]
pub enum MemberSource {
    /// A series the caller asserts is subordinate to `F_α`.
    Series(PowerSeries),
    /// `q = F_α ∘ w`, subordinate by construction.
    Generator(SchwarzGenerator),
    /// `q = F_α`, giving the extremal function.
    Extremal,
}

/// `zf'(z)/f(z)` at a grid point.
fn log_derivative(f: &AnalyticFunction, z: Complex64) -> Result<Complex64> {
    let fz = f.evaluate(z);
    if fz.norm() < ZERO_TOLERANCE {
        return Err(Error::ZeroOfFOnGrid(z));
    }
    Ok(z * f.derivative_at(z) / fz)
}

/// Grid test of `zf'/f - 1 ≺ F_α`: since `F_α` is univalent with image
/// `D(α)`, this reduces to `φ(z) ∈ D(α)` at every sampled point.
///
/// `ViolatedAt` is conclusive; `HoldsOnGrid` is evidence only. The monitored
/// quantity is the lemniscate quartic at `φ(z)` (negative inside).
pub fn membership_test(f: &AnalyticFunction, alpha: f64, grid: &GridSpec) -> Result<Verdict> {
    let region = BoothRegion::new(alpha)?;
    scan(grid, "quartic(zf'/f - 1)", |z| {
        let phi = log_derivative(f, z)? - 1.0;
        let violation = if !(phi.re.is_finite() && phi.im.is_finite()) {
            Some("zf'/f - 1 is not finite".to_string())
        } else if !region.contains(phi) {
            Some(format!("zf'/f - 1 = {phi} lies outside D({alpha})"))
        } else {
            None
        };
        Ok(Probe {
            value: phi,
            monitored: region.quartic(phi),
            violation,
        })
    })
}

/// Necessary condition `α/(α-1) < Re{zf'/f} < (2-α)/(1-α)`.
pub fn starlike_strip_check(f: &AnalyticFunction, alpha: f64, grid: &GridSpec) -> Result<Verdict> {
    crate::check_alpha(alpha)?;
    let lo = alpha / (alpha - 1.0);
    let hi = (2.0 - alpha) / (1.0 - alpha);
    scan(grid, "Re zf'/f", |z| {
        let v = log_derivative(f, z)?;
        let violation = if !v.re.is_finite() {
            Some("zf'/f is not finite".to_string())
        } else if v.re <= lo {
            Some(format!("Re zf'/f = {} <= alpha/(alpha-1) = {lo}", v.re))
        } else if v.re >= hi {
            Some(format!("Re zf'/f = {} >= (2-alpha)/(1-alpha) = {hi}", v.re))
        } else {
            None
        };
        Ok(Probe {
            value: v,
            monitored: v.re,
            violation,
        })
    })
}

/// `f(z) = z·exp(∫₀^z q(t)/t dt)` as a series of order `order + 1`.
pub fn build_member(alpha: f64, source: &MemberSource, order: usize) -> Result<AnalyticFunction> {
    crate::check_alpha(alpha)?;
    let q = match source {
        MemberSource::Series(q) => q.with_order(order),
        MemberSource::Generator(g) => g.subordinate_series(alpha, order)?,
        MemberSource::Extremal => PowerSeries::f_alpha(alpha, order),
    };
    let e = q.integrate_over_t()?.exp()?;
    Ok(AnalyticFunction::SeriesBacked(e.shift_up()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::Status;
    use crate::series::DEFAULT_ORDER;

    #[test]
    fn identity_is_member() {
        for alpha in [0.0, 0.4, 0.95] {
            let v = membership_test(&AnalyticFunction::identity(), alpha, &GridSpec::default()).unwrap();
            assert!(v.holds());
            assert!(v.witness.is_none());
        }
    }

    #[test]
    fn extremal_is_member() {
        let f = AnalyticFunction::tilde_f(0.2).unwrap();
        let v = membership_test(&f, 0.2, &GridSpec::default()).unwrap();
        assert!(v.holds(), "{v:?}");
        assert!(v.stats.max < 0.0);
    }

    #[test]
    fn gn_condition_one_is_violated() {
        let f = AnalyticFunction::gn(2, Complex64::new(0.8, 0.0)).unwrap();
        let v = membership_test(&f, 0.0, &GridSpec::default()).unwrap();
        assert_eq!(v.status, Status::ViolatedAt);
        let w = v.witness.unwrap();
        // the witness reproduces on re-evaluation
        let phi = z_phi(&f, w.z);
        assert_eq!(phi, w.value);
        assert!(!BoothRegion::new(0.0).unwrap().contains(phi));
    }

    fn z_phi(f: &AnalyticFunction, z: Complex64) -> Complex64 {
        z * f.derivative_at(z) / f.evaluate(z) - 1.0
    }

    #[test]
    fn zero_on_grid_is_an_error() {
        // g_2 with c = 2 vanishes at z = -1/2, which is on the default grid
        let f = AnalyticFunction::gn(2, Complex64::new(2.0, 0.0)).unwrap();
        let err = membership_test(&f, 0.3, &GridSpec::default()).unwrap_err();
        assert!(matches!(err, Error::ZeroOfFOnGrid(_)));
    }

    #[test]
    fn strip_examples() {
        let grid = GridSpec::default();
        let v = starlike_strip_check(&AnalyticFunction::identity(), 0.7, &grid).unwrap();
        assert!(v.holds());
        assert_eq!((v.stats.min, v.stats.max), (1.0, 1.0));

        let v = starlike_strip_check(&AnalyticFunction::tilde_f(0.5).unwrap(), 0.5, &grid).unwrap();
        assert!(v.holds());
        assert!(v.stats.min > -1.0 && v.stats.max < 3.0);

        let g = AnalyticFunction::gn(2, Complex64::new(1.5, 0.0)).unwrap();
        let v = starlike_strip_check(&g, 0.5, &grid).unwrap();
        assert_eq!(v.status, Status::ViolatedAt);
        // oracle: direct evaluation at the witness
        let w = v.witness.unwrap();
        let re = (w.z * g.derivative_at(w.z) / g.evaluate(w.z)).re;
        assert!(re <= -1.0 || re >= 3.0);
    }

    #[test]
    fn builder_examples() {
        let f = build_member(0.3, &MemberSource::Series(PowerSeries::zero(8)), 8).unwrap();
        let AnalyticFunction::SeriesBacked(s) = &f else { panic!() };
        assert_eq!(s, &PowerSeries::z(9));

        let alpha = 0.35;
        let built = build_member(alpha, &MemberSource::Extremal, DEFAULT_ORDER).unwrap();
        let tilde = AnalyticFunction::tilde_f(alpha).unwrap();
        for k in 0..32 {
            let z = Complex64::from_polar(0.7, 0.2 * k as f64);
            assert!((built.evaluate(z) - tilde.evaluate(z)).norm() < 1e-9);
        }

        let g = SchwarzGenerator::Rotation {
            theta: std::f64::consts::FRAC_PI_4,
        };
        let f = build_member(0.1, &MemberSource::Generator(g), DEFAULT_ORDER).unwrap();
        assert!(membership_test(&f, 0.1, &GridSpec::default()).unwrap().holds());
    }

    #[test]
    fn builder_rejects_constant_term() {
        let q = PowerSeries::one(4);
        assert!(matches!(
            build_member(0.2, &MemberSource::Series(q), 4),
            Err(Error::NonzeroConstantTerm(_))
        ));
    }
}
