use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polar sample grid inside the unit disc: every radius × every angle `2πk/N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub radii: Vec<f64>,
    pub angular_samples: usize,
    pub boundary_margin: f64,
}

pub const MIN_ANGULAR_SAMPLES: usize = 16;
pub const DEFAULT_BOUNDARY_MARGIN: f64 = 1e-9;

impl GridSpec {
    pub fn new(radii: Vec<f64>, angular_samples: usize) -> Result<Self> {
        Self::with_margin(radii, angular_samples, DEFAULT_BOUNDARY_MARGIN)
    }

    pub fn with_margin(radii: Vec<f64>, angular_samples: usize, boundary_margin: f64) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::InvalidGrid("no radii".into()));
        }
        if let Some(r) = radii.iter().find(|r| !(**r > 0.0 && **r < 1.0)) {
            return Err(Error::InvalidGrid(format!("radius {r} outside (0, 1)")));
        }
        if radii.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid("radii must be strictly increasing".into()));
        }
        if angular_samples < MIN_ANGULAR_SAMPLES {
            return Err(Error::InvalidGrid(format!(
                "need at least {MIN_ANGULAR_SAMPLES} angular samples, got {angular_samples}"
            )));
        }
        if !(boundary_margin >= 0.0 && boundary_margin.is_finite()) {
            return Err(Error::InvalidGrid(format!("bad boundary margin {boundary_margin}")));
        }
        Ok(Self {
            radii,
            angular_samples,
            boundary_margin,
        })
    }

    /// Default grid plus the extra ring at 0.999 used for the `z + czⁿ` checks.
    pub fn near_boundary(angular_samples: usize) -> Self {
        let mut radii = Self::default().radii;
        radii.push(0.999);
        Self::new(radii, angular_samples).expect("static grid")
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angular_samples
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn angle(&self, k: usize) -> f64 {
        TAU * k as f64 / self.angular_samples as f64
    }

    /// Points in lexicographic `(radius, angle)` order.
    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.radii.iter().flat_map(move |&r| {
            (0..self.angular_samples).map(move |k| Complex64::from_polar(r, self.angle(k)))
        })
    }

    pub fn ring(&self, r: f64) -> impl Iterator<Item = Complex64> + '_ {
        (0..self.angular_samples).map(move |k| Complex64::from_polar(r, self.angle(k)))
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        let mut radii: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
        radii.extend([0.95, 0.99]);
        Self {
            radii,
            angular_samples: 720,
            boundary_margin: DEFAULT_BOUNDARY_MARGIN,
        }
    }
}

/// `r1,r2,...:angles`, e.g. `0.5,0.9,0.99:720`.
impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (radii, angles) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidGrid(format!("expected r1,r2,...:angles, got {s:?}")))?;
        let radii = radii
            .split(',')
            .map(|r| {
                r.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::InvalidGrid(format!("radius {r:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let angles = angles
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::InvalidGrid(format!("angles {angles:?}: {e}")))?;
        Self::new(radii, angles)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let radii: Vec<String> = self.radii.iter().map(|r| r.to_string()).collect();
        write!(f, "{}:{}", radii.join(","), self.angular_samples)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    HoldsOnGrid,
    ViolatedAt,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub z: Complex64,
    pub value: Complex64,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Stats {
    pub min: f64,
    pub max: f64,
}

/// Outcome of a grid scan. `ViolatedAt` is conclusive; `HoldsOnGrid` is
/// evidence on the sampled points only.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    /// Name of the real quantity summarised in `stats`.
    pub monitored: &'static str,
    pub stats: Stats,
    pub points: usize,
    pub grid: GridSpec,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.status == Status::HoldsOnGrid
    }

    pub fn to_json(&self) -> serde_json::Value {
        let w = self.witness.as_ref();
        serde_json::json!({
            "status": self.status,
            "witness_z": w.map(|w| [w.z.re, w.z.im]),
            "witness_value": w.map(|w| [w.value.re, w.value.im]),
            "reason": w.map(|w| w.reason.clone()),
            "grid": self.grid.to_string(),
            "monitored": self.monitored,
            "stats": self.stats,
            "points": self.points,
        })
    }
}

/// Result of probing one grid point.
pub(crate) struct Probe {
    pub value: Complex64,
    pub monitored: f64,
    pub violation: Option<String>,
}

/// Scans the grid in `(radius, angle)` order, keeping the first violation
/// as the witness and min/max of the monitored quantity over all points.
pub(crate) fn scan<F>(grid: &GridSpec, monitored: &'static str, mut probe: F) -> Result<Verdict>
where
    F: FnMut(Complex64) -> Result<Probe>,
{
    let mut witness = None;
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut points = 0;
    for z in grid.points() {
        let p = probe(z)?;
        points += 1;
        if p.monitored.is_finite() {
            min = min.min(p.monitored);
            max = max.max(p.monitored);
        }
        if witness.is_none() {
            if let Some(reason) = p.violation {
                witness = Some(Witness {
                    z,
                    value: p.value,
                    reason,
                });
            }
        }
    }
    Ok(Verdict {
        status: if witness.is_some() {
            Status::ViolatedAt
        } else {
            Status::HoldsOnGrid
        },
        witness,
        monitored,
        stats: Stats { min, max },
        points,
        grid: grid.clone(),
    })
}
