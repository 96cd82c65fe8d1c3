use num_complex::Complex64;

use crate::booth::f_alpha_derivative;
use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// Below this α the extremal functions switch to the odd log-series, since
/// the exponent `1/(2√α)` amplifies roundoff in the principal logarithm.
pub const SMALL_ALPHA: f64 = 1e-4;

const SERIES_CUTOFF: f64 = 1e-18;

/// Anything that can be evaluated on the disc.
pub trait Holomorphic {
    fn eval(&self, z: Complex64) -> Complex64;
}

impl<F: Fn(Complex64) -> Complex64> Holomorphic for F {
    fn eval(&self, z: Complex64) -> Complex64 {
        self(z)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticFunction {
    /// `F_α(z) = z/(1 - αz²)`.
    FAlphaForm { alpha: f64 },
    /// The extremal member `f̃(z) = z((1 + z√α)/(1 - z√α))^{1/(2√α)}`.
    TildeF { alpha: f64 },
    /// `F(z) = f̃(z)/z`.
    BigF { alpha: f64 },
    /// `p(z) = F(z) - 1`.
    SmallP { alpha: f64 },
    /// `g_n(z) = z + czⁿ`.
    GnForm { n: u32, c: Complex64 },
    SeriesBacked(PowerSeries),
}

impl AnalyticFunction {
    pub fn identity() -> Self {
        Self::GnForm {
            n: 2,
            c: Complex64::new(0.0, 0.0),
        }
    }

    pub fn f_alpha(alpha: f64) -> Result<Self> {
        crate::check_alpha(alpha)?;
        Ok(Self::FAlphaForm { alpha })
    }

    pub fn tilde_f(alpha: f64) -> Result<Self> {
        crate::check_alpha(alpha)?;
        Ok(Self::TildeF { alpha })
    }

    pub fn big_f(alpha: f64) -> Result<Self> {
        crate::check_alpha(alpha)?;
        Ok(Self::BigF { alpha })
    }

    pub fn small_p(alpha: f64) -> Result<Self> {
        crate::check_alpha(alpha)?;
        Ok(Self::SmallP { alpha })
    }

    pub fn gn(n: u32, c: Complex64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGn(format!("n must be at least 2, got {n}")));
        }
        Ok(Self::GnForm { n, c })
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        match self {
            Self::FAlphaForm { alpha } => z / (1.0 - alpha * z * z),
            Self::TildeF { alpha } => z * big_f(*alpha, z),
            Self::BigF { alpha } => big_f(*alpha, z),
            Self::SmallP { alpha } => big_f(*alpha, z) - 1.0,
            Self::GnForm { n, c } => z + c * z.powu(*n),
            Self::SeriesBacked(s) => s.evaluate(z),
        }
    }

    pub fn derivative_at(&self, z: Complex64) -> Complex64 {
        match self {
            Self::FAlphaForm { alpha } => f_alpha_derivative(*alpha, z),
            // F'/F = 1/(1 - αz²)
            Self::TildeF { alpha } => {
                let f = big_f(*alpha, z);
                f * (1.0 + z / (1.0 - alpha * z * z))
            }
            Self::BigF { alpha } | Self::SmallP { alpha } => big_f(*alpha, z) / (1.0 - alpha * z * z),
            Self::GnForm { n, c } => 1.0 + c * (*n as f64) * z.powu(n - 1),
            Self::SeriesBacked(s) => s.evaluate_derivative(z),
        }
    }

    /// `f(z)/z` where it has a closed form in the same family.
    pub fn over_z(&self) -> Result<Self> {
        match self {
            Self::TildeF { alpha } => Ok(Self::BigF { alpha: *alpha }),
            Self::SeriesBacked(s) => Ok(Self::SeriesBacked(s.shift_down()?)),
            other => Ok(Self::SeriesBacked(
                other
                    .taylor(crate::series::DEFAULT_ORDER + 1)?
                    .shift_down()?,
            )),
        }
    }

    /// Taylor series to `order`, exact for the rational and series variants.
    pub fn taylor(&self, order: usize) -> Result<PowerSeries> {
        match self {
            Self::FAlphaForm { alpha } => Ok(PowerSeries::f_alpha(*alpha, order)),
            Self::GnForm { n, c } => {
                let mut s = PowerSeries::z(order);
                s = s.add(&PowerSeries::monomial(*c, *n as usize, order));
                Ok(s)
            }
            Self::SeriesBacked(s) => Ok(s.with_order(order)),
            Self::BigF { alpha } => Ok(big_f_series(*alpha, order)),
            Self::TildeF { alpha } => Ok(big_f_series(*alpha, order.saturating_sub(1)).shift_up().with_order(order)),
            Self::SmallP { alpha } => Ok(big_f_series(*alpha, order).sub(&PowerSeries::one(order))),
        }
    }

    /// Value at the origin (`0` for normalized members, `1` for `F`).
    pub fn at_origin(&self) -> Complex64 {
        self.evaluate(Complex64::new(0.0, 0.0))
    }
}

impl Holomorphic for AnalyticFunction {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.evaluate(z)
    }
}

/// `f(z)/z` with the removable singularity at 0 filled by `f'(0)`.
pub struct OverZ<'a>(pub &'a AnalyticFunction);

impl Holomorphic for OverZ<'_> {
    fn eval(&self, z: Complex64) -> Complex64 {
        if z == Complex64::new(0.0, 0.0) {
            self.0.derivative_at(z)
        } else {
            self.0.evaluate(z) / z
        }
    }
}

/// `φ(z) = zf'(z)/f(z) - 1`, with `φ(0) = 0` for `f(0) = 0`, `f'(0) ≠ 0`.
pub struct LogDerivative<'a>(pub &'a AnalyticFunction);

impl Holomorphic for LogDerivative<'_> {
    fn eval(&self, z: Complex64) -> Complex64 {
        if z == Complex64::new(0.0, 0.0) {
            Complex64::new(0.0, 0.0)
        } else {
            z * self.0.derivative_at(z) / self.0.evaluate(z) - 1.0
        }
    }
}

/// `log F(z) = (1/(2√α))·Log((1 + z√α)/(1 - z√α))`.
///
/// The Möbius factor maps the disc into the right half-plane, so the
/// principal branch is continuous there. For `α < SMALL_ALPHA` the odd series
/// `Σ α^k z^{2k+1}/(2k+1)` is summed instead.
pub fn log_big_f(alpha: f64, z: Complex64) -> Complex64 {
    if alpha < SMALL_ALPHA {
        let z2 = z * z;
        let mut power = z;
        let mut sum = z;
        for k in 1..64 {
            power *= alpha * z2;
            let term = power / (2 * k + 1) as f64;
            if term.norm() < SERIES_CUTOFF {
                break;
            }
            sum += term;
        }
        sum
    } else {
        let s = alpha.sqrt();
        ((1.0 + s * z) / (1.0 - s * z)).ln() / (2.0 * s)
    }
}

pub fn big_f(alpha: f64, z: Complex64) -> Complex64 {
    log_big_f(alpha, z).exp()
}

/// `f̃(z) = z·F(z)`.
pub fn evaluate_tilde_f(alpha: f64, z: Complex64) -> Result<Complex64> {
    crate::check_alpha(alpha)?;
    Ok(z * big_f(alpha, z))
}

/// Taylor series of `F = exp(∫ F_α(t)/t dt)`.
pub fn big_f_series(alpha: f64, order: usize) -> PowerSeries {
    PowerSeries::f_alpha(alpha, order)
        .integrate_over_t()
        .and_then(|s| s.exp())
        .expect("F_alpha series has zero constant term")
}
