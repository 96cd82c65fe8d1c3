//! Function-spec mini-language:
//!
//! * `id`: `f(z) = z`
//! * `tilde:alpha=A`: the extremal function
//! * `gn:n=N,c=RE+IMi`: `z + czⁿ`
//! * `series:@file.json`: series in the `{"order", "coeffs"}` format
//! * `built:alpha=A,omega=RE+IMi`: `z·exp(∫ F_α(ωt)/t dt)`, `|ω| ≤ 1`

use std::collections::HashMap;
use std::path::Path;

use num_complex::Complex64;

use crate::class::{build_member, AnalyticFunction, MemberSource};
use crate::error::{Error, Result};
use crate::series::PowerSeries;

pub fn parse_complex(s: &str) -> Result<Complex64> {
    s.trim()
        .replace(' ', "")
        .parse::<Complex64>()
        .map_err(|e| Error::Parse(format!("complex number {s:?}: {e}")))
}

fn parse_f64(key: &str, s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|e| Error::Parse(format!("{key}={s:?}: {e}")))
}

fn params(body: &str) -> Result<HashMap<&str, &str>> {
    body.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {p:?}")))
        })
        .collect()
}

fn required<'a>(map: &HashMap<&str, &'a str>, key: &str, spec: &str) -> Result<&'a str> {
    map.get(key)
        .copied()
        .ok_or_else(|| Error::Parse(format!("{spec}: missing {key}=")))
}

pub fn load_series(path: &Path) -> Result<PowerSeries> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Parses a function spec; `order` is the truncation order for built members.
pub fn parse_function(spec: &str, order: usize) -> Result<AnalyticFunction> {
    let spec = spec.trim();
    let (head, body) = spec.split_once(':').unwrap_or((spec, ""));
    match head {
        "id" if body.is_empty() => Ok(AnalyticFunction::identity()),
        "tilde" => {
            let p = params(body)?;
            AnalyticFunction::tilde_f(parse_f64("alpha", required(&p, "alpha", spec)?)?)
        }
        "gn" => {
            let p = params(body)?;
            let n = required(&p, "n", spec)?
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("n: {e}")))?;
            AnalyticFunction::gn(n, parse_complex(required(&p, "c", spec)?)?)
        }
        "series" => {
            let path = body
                .strip_prefix('@')
                .ok_or_else(|| Error::Parse(format!("{spec}: expected series:@file.json")))?;
            Ok(AnalyticFunction::SeriesBacked(load_series(Path::new(path))?))
        }
        "built" => {
            let p = params(body)?;
            let alpha = parse_f64("alpha", required(&p, "alpha", spec)?)?;
            let omega = match p.get("omega") {
                Some(s) => parse_complex(s)?,
                None => Complex64::new(1.0, 0.0),
            };
            build_rotated(alpha, omega, order)
        }
        _ => Err(Error::Parse(format!(
            "unknown function spec {spec:?}; expected id, tilde:, gn:, series:@, or built:"
        ))),
    }
}

/// Member from `q(z) = F_α(ωz)`.
pub fn build_rotated(alpha: f64, omega: Complex64, order: usize) -> Result<AnalyticFunction> {
    if omega.norm() > 1.0 + 1e-15 {
        return Err(Error::InvalidGenerator(format!("|omega| = {} must be at most 1", omega.norm())));
    }
    crate::check_alpha(alpha)?;
    let q = PowerSeries::f_alpha(alpha, order).compose_scaled(omega);
    build_member(alpha, &MemberSource::Series(q), order)
}
