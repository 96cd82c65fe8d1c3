//! Truncated power series about the origin.
//!
//! A [`PowerSeries`] of order `N` holds the coefficients `c₀ … c_N` and every
//! operation works modulo `z^{N+1}`: coefficient `k` of a result depends only
//! on input coefficients of degree `≤ k`. Binary operations on series of
//! different orders pad the shorter one with zeros.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 64;

/// Constant terms at or below this modulus are treated as zero by [`PowerSeries::div`].
pub const UNIT_TOLERANCE: f64 = 1e-14;

/// Series evaluation is only trusted inside this radius; use closed forms beyond it.
pub const TRUSTED_RADIUS: f64 = 0.7;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![ZERO; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = ONE;
        s
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(ONE, 1, order)
    }

    /// `c·z^k`, truncated to `order` (zero if `k > order`).
    pub fn monomial(c: Complex64, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs(coeffs: &[Complex64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (dst, src) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = *src;
        }
        s
    }

    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_coeffs(&c, order)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Complex64) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Taylor series of `F_α(z) = z/(1 - αz²) = Σ α^{n-1} z^{2n-1}`.
    pub fn f_alpha(alpha: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut p = 1.0;
        for k in (1..=order).step_by(2) {
            s.coeffs[k] = Complex64::new(p, 0.0);
            p *= alpha;
        }
        s
    }

    /// `l(z) = log 1/(1 - z) = Σ zⁿ/n`; Hadamard product with it is `∫₀^z q(t)/t dt`.
    pub fn log_kernel(order: usize) -> Self {
        Self::from_fn(order, |k| {
            if k == 0 {
                ZERO
            } else {
                Complex64::new(1.0 / k as f64, 0.0)
            }
        })
    }

    /// `1/(1 - z) = Σ zⁿ`, the identity for the Hadamard product.
    pub fn geometric(order: usize) -> Self {
        Self {
            coeffs: vec![ONE; order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// Same series at a different truncation order (zero-padded or cut).
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(&self.coeffs, order)
    }

    fn padded_pair(a: &Self, b: &Self) -> (Self, Self) {
        let n = a.order().max(b.order());
        (a.with_order(n), b.with_order(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Self::padded_pair(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = Self::padded_pair(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::padded_pair(self, other);
        let n = a.order();
        let mut out = Self::zero(n);
        for (i, ai) in a.coeffs.iter().enumerate() {
            if *ai == ZERO {
                continue;
            }
            for (j, bj) in b.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += ai * bj;
            }
        }
        out
    }

    /// `q = a / b` with `q·b = a (mod z^{N+1})`, by forward substitution.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let (a, b) = Self::padded_pair(self, other);
        let b0 = b.coeffs[0];
        if b0.norm() <= UNIT_TOLERANCE {
            return Err(Error::DivisionByNonUnit(b0.norm()));
        }
        let n = a.order();
        let mut q = Self::zero(n);
        for k in 0..=n {
            let mut acc = a.coeffs[k];
            for j in 1..=k {
                acc -= b.coeffs[j] * q.coeffs[k - j];
            }
            q.coeffs[k] = acc / b0;
        }
        Ok(q)
    }

    /// `exp(a)` for `a₀ = 0`, from `E' = a'E`: `k·E_k = Σ_{j=1}^{k} j·a_j·E_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        self.require_zero_constant()?;
        let n = self.order();
        let mut e = Self::zero(n);
        e.coeffs[0] = ONE;
        for k in 1..=n {
            let mut acc = ZERO;
            for j in 1..=k {
                acc += self.coeffs[j] * e.coeffs[k - j] * j as f64;
            }
            e.coeffs[k] = acc / k as f64;
        }
        Ok(e)
    }

    /// Principal logarithm for `a₀ = 1`, as `∫ a'/a`.
    pub fn ln(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if (c0 - ONE).norm() > UNIT_TOLERANCE {
            return Err(Error::Parse(format!(
                "log of a series needs constant term 1, got {c0}"
            )));
        }
        let d = self.derivative().with_order(self.order());
        Ok(d.div(self)?.antiderivative())
    }

    /// `∫₀^z q(t)/t dt`: coefficient `k` becomes `q_k / k`.
    pub fn integrate_over_t(&self) -> Result<Self> {
        self.require_zero_constant()?;
        Ok(Self::from_fn(self.order(), |k| {
            if k == 0 {
                ZERO
            } else {
                self.coeffs[k] / k as f64
            }
        }))
    }

    /// `∫₀^z a(t) dt`, truncated back to the same order.
    pub fn antiderivative(&self) -> Self {
        Self::from_fn(self.order(), |k| {
            if k == 0 {
                ZERO
            } else {
                self.coeffs[k - 1] / k as f64
            }
        })
    }

    /// Formal derivative. The result has order `N - 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        Self::from_fn(n - 1, |k| self.coeffs[k + 1] * (k + 1) as f64)
    }

    /// Coefficientwise (Hadamard) product `Σ a_k b_k z^k`.
    pub fn hadamard(&self, other: &Self) -> Self {
        let (mut a, b) = Self::padded_pair(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x *= y;
        }
        a
    }

    /// `a(ωz)`: coefficient `k` scaled by `ω^k`.
    pub fn compose_scaled(&self, omega: Complex64) -> Self {
        let mut p = ONE;
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= p;
            p *= omega;
        }
        out
    }

    /// `z·a(z)`; the order grows by one so no coefficient is lost.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// `a(z)/z` for `a₀ = 0`; the order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        self.require_zero_constant()?;
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, c| acc * z + c)
    }

    /// Value of the formal derivative at `z` without materialising it.
    pub fn evaluate_derivative(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(ZERO, |acc, (k, c)| acc * z + c * k as f64)
    }

    fn require_zero_constant(&self) -> Result<()> {
        if self.coeffs[0] != ZERO {
            return Err(Error::NonzeroConstantTerm(self.coeffs[0]));
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let (a, b) = Self::padded_pair(self, other);
        a.coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Self) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(-ONE)
    }
}

/// Wire format: `{"order": N, "coeffs": [[re, im], ...]}`.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<[f64; 2]>,
}

impl Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(d)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(serde::de::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        Ok(PowerSeries {
            coeffs: raw
                .coeffs
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn assert_coeffs(s: &PowerSeries, expected: &[f64], tol: f64) {
        for k in 0..=s.order() {
            let e = expected.get(k).copied().unwrap_or(0.0);
            assert!(
                (s.coeff(k) - c(e)).norm() <= tol,
                "coefficient {k}: {} vs {e}",
                s.coeff(k)
            );
        }
    }

    #[test]
    fn add_examples() {
        let a = PowerSeries::from_real(&[1.0, 1.0], 4);
        let b = PowerSeries::from_real(&[1.0, -1.0], 4);
        assert_coeffs(&(&a + &b), &[2.0], 0.0);

        let z = PowerSeries::z(4);
        assert_eq!(&z + &PowerSeries::zero(4), z);

        let a = PowerSeries::from_real(&[1.0, 0.0, 0.5], 4);
        assert_coeffs(&(&a + &z), &[1.0, 1.0, 0.5], 0.0);
    }

    #[test]
    fn add_pads_to_larger_order() {
        let a = PowerSeries::from_real(&[1.0, 2.0], 1);
        let b = PowerSeries::from_real(&[0.0, 0.0, 3.0], 3);
        let s = &a + &b;
        assert_eq!(s.order(), 3);
        assert_coeffs(&s, &[1.0, 2.0, 3.0], 0.0);
    }

    #[test]
    fn mul_examples() {
        let a = PowerSeries::from_real(&[1.0, 1.0], 3);
        let b = PowerSeries::from_real(&[1.0, -1.0], 3);
        assert_coeffs(&(&a * &b), &[1.0, 0.0, -1.0], 0.0);

        let z = PowerSeries::z(3);
        assert_coeffs(&(&z * &z), &[0.0, 0.0, 1.0], 0.0);

        // (1+z+z²)² = 1 + 2z + 3z² + 2z³ + z⁴, cut at order 2
        let p = PowerSeries::from_real(&[1.0, 1.0, 1.0], 2);
        assert_coeffs(&(&p * &p), &[1.0, 2.0, 3.0], 0.0);
    }

    #[test]
    fn div_examples() {
        let one = PowerSeries::one(6);
        let d = PowerSeries::from_real(&[1.0, -1.0], 6);
        assert_coeffs(&one.div(&d).unwrap(), &[1.0; 7], 0.0);

        let a = PowerSeries::from_real(&[1.0, 0.0, -1.0], 6);
        assert_coeffs(&a.div(&d).unwrap(), &[1.0, 1.0], 1e-15);

        let alpha = 0.5;
        let num = PowerSeries::z(5);
        let den = PowerSeries::from_real(&[1.0, 0.0, -alpha], 5);
        assert_coeffs(
            &num.div(&den).unwrap(),
            &[0.0, 1.0, 0.0, 0.5, 0.0, 0.25],
            1e-15,
        );
    }

    #[test]
    fn div_rejects_non_unit() {
        let a = PowerSeries::one(3);
        let b = PowerSeries::from_coeffs(&[c(1e-15), c(1.0)], 3);
        assert!(matches!(a.div(&b), Err(Error::DivisionByNonUnit(_))));
        let b = PowerSeries::z(3);
        assert!(matches!(a.div(&b), Err(Error::DivisionByNonUnit(_))));
    }

    #[test]
    fn exp_examples() {
        assert_coeffs(&PowerSeries::zero(5).exp().unwrap(), &[1.0], 0.0);
        assert_coeffs(
            &PowerSeries::z(4).exp().unwrap(),
            &[1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0],
            1e-16,
        );
        let alpha = 0.3;
        let e = PowerSeries::f_alpha(alpha, 3)
            .integrate_over_t()
            .unwrap()
            .exp()
            .unwrap();
        assert_coeffs(&e, &[1.0, 1.0, 0.5, (alpha + 0.5) / 3.0], 1e-15);
    }

    #[test]
    fn exp_rejects_constant_term() {
        let a = PowerSeries::one(3);
        assert!(matches!(a.exp(), Err(Error::NonzeroConstantTerm(_))));
    }

    #[test]
    fn integrate_over_t_examples() {
        let z = PowerSeries::z(4);
        assert_eq!(z.integrate_over_t().unwrap(), z);
        let z2 = PowerSeries::monomial(c(1.0), 2, 4);
        assert_coeffs(&z2.integrate_over_t().unwrap(), &[0.0, 0.0, 0.5], 0.0);

        // termwise oracle: α^{n-1}/(2n-1) at degree 2n-1
        let s = PowerSeries::f_alpha(0.5, 5).integrate_over_t().unwrap();
        assert_coeffs(&s, &[0.0, 1.0, 0.0, 0.5 / 3.0, 0.0, 0.25 / 5.0], 1e-16);

        assert!(PowerSeries::one(3).integrate_over_t().is_err());
    }

    #[test]
    fn hadamard_examples() {
        let a = PowerSeries::from_real(&[0.3, -1.0, 2.0, 0.25], 5);
        assert_eq!(a.hadamard(&PowerSeries::geometric(5)), a);

        let order = 9;
        let alpha = 0.4;
        let got = PowerSeries::f_alpha(alpha, order).hadamard(&PowerSeries::log_kernel(order));
        let mut expected = vec![0.0; order + 1];
        for n in 1..=5 {
            let k = 2 * n - 1;
            expected[k] = alpha.powi(n as i32 - 1) / k as f64;
        }
        assert_coeffs(&got, &expected, 1e-16);

        let z2 = PowerSeries::monomial(c(1.0), 2, 5);
        let z3 = PowerSeries::monomial(c(1.0), 3, 5);
        assert_eq!(z2.hadamard(&z3), PowerSeries::zero(5));
    }

    #[test]
    fn evaluate_and_derivative() {
        let s = PowerSeries::from_real(&[1.0, 1.0], 3);
        assert_eq!(s.evaluate(c(0.5)), c(1.5));

        let z2 = PowerSeries::monomial(c(1.0), 2, 4);
        assert_coeffs(&z2.derivative(), &[0.0, 2.0], 0.0);

        let z = Complex64::new(0.3, -0.2);
        let d1 = z2.derivative().evaluate(z);
        assert_abs_diff_eq!((d1 - z2.evaluate_derivative(z)).norm(), 0.0, epsilon = 1e-16);
    }

    #[test]
    fn structural_series_has_unit_slope() {
        let f = PowerSeries::f_alpha(0.7, 8)
            .integrate_over_t()
            .unwrap()
            .exp()
            .unwrap();
        assert_eq!(f.derivative().coeff(0), c(1.0));
    }

    #[test]
    fn f_alpha_series_matches_closed_form() {
        for alpha in [0.0, 0.3, 0.6, 0.9] {
            let s = PowerSeries::f_alpha(alpha, DEFAULT_ORDER);
            for k in 0..50 {
                let t = k as f64 * 0.37;
                for r in [0.2, 0.5, 0.7] {
                    let z = Complex64::from_polar(r, t);
                    let exact = z / (1.0 - alpha * z * z);
                    assert!((s.evaluate(z) - exact).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn rotation_scales_coefficients() {
        let s = PowerSeries::from_real(&[1.0, 1.0, 1.0, 1.0], 3);
        let w = Complex64::from_polar(1.0, 0.4);
        let r = s.compose_scaled(w);
        let z = Complex64::new(0.2, 0.1);
        assert!((r.evaluate(z) - s.evaluate(w * z)).norm() < 1e-15);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let s = PowerSeries::from_coeffs(&[c(0.0), Complex64::new(1.0, -0.5)], 2);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"order":2,"coeffs":[[0.0,0.0],[1.0,-0.5],[0.0,0.0]]}"#);
        let back: PowerSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);

        let bad = r#"{"order":3,"coeffs":[[0.0,0.0]]}"#;
        assert!(serde_json::from_str::<PowerSeries>(bad).is_err());
    }
}
