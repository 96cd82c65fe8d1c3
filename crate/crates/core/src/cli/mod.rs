//! Command-line front end. [`run`] parses `argv`, writes results to `out`
//! and diagnostics to `err`, and returns the process exit code:
//! 0 when the verdict holds, 1 on a violation, 2 on a usage error.

pub mod funcspec;
pub mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::booth::{curvature_min, BoothRegion};
use crate::class::{convexity_check_p, gn_nonmembership, membership_test, GnOutcome, GridSpec};
use crate::error::{Error, Result};
use crate::radii::{alpha_for_radius, radius_starlike};
use crate::series::DEFAULT_ORDER;
use crate::subord::{bounds_unchecked, sharp_witness};

pub const GRID_ENV: &str = "GFT_DEFAULT_GRID";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "lemniscate", version, about = "Starlike functions associated with the Booth lemniscate")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; CSV and SVG apply to `region` only.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Seed for random member generation.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Sampling grid `r1,r2,...:angles`; overrides $GFT_DEFAULT_GRID.
    #[arg(long, global = true)]
    pub grid: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boundary polyline of the Booth lemniscate.
    Region {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 512)]
        samples: usize,
    },
    /// Grid membership test for a function spec (id, tilde:, gn:, series:@, built:).
    Member {
        func: String,
        #[arg(long)]
        alpha: f64,
        /// Truncation order for `built:` members.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        terms: usize,
    },
    /// Radius of starlikeness of order γ.
    Radius {
        #[arg(long)]
        alpha: f64,
        /// The order γ in [0, 1).
        #[arg(long, default_value_t = 0.0)]
        order: f64,
    },
    /// Largest α whose radius of starlikeness is at least r.
    AlphaForRadius {
        #[arg(long)]
        r: f64,
    },
    /// Sufficient conditions for z + czⁿ to lie outside the class.
    Gn {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        alpha: f64,
    },
    /// Bounds for Re f(z)/z on |z| = r.
    Bounds {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        r: f64,
    },
    /// Taylor series of the member built from q(z) = F_α(ωz).
    Build {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        omega: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        terms: usize,
    },
    /// Minimum of Re{1 + zp''/p'} for p = F - 1 against K(α).
    Convexity {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 720)]
        samples: usize,
    },
    /// Minimum boundary curvature functional of F_α.
    Curvature {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
    },
    /// Runs the property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Text to print and the exit code it implies.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn json(value: Value, code: i32) -> Self {
        let text = serde_json::to_string_pretty(&value).expect("JSON values always serialize");
        Self { text, code }
    }
}

pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = writeln!(out, "{}", output.text);
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn grid(cli: &Cli) -> Result<GridSpec> {
    if let Some(g) = &cli.grid {
        return g.parse();
    }
    match std::env::var(GRID_ENV) {
        Ok(g) if !g.trim().is_empty() => g.parse(),
        _ => Ok(GridSpec::default()),
    }
}

fn to_value<T: serde::Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("plain data always serializes")
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn execute(cli: &Cli) -> Result<Output> {
    if cli.format != Format::Json && !matches!(cli.command, Command::Region { .. }) {
        return Err(Error::Parse("--format csv|svg applies to `region` only".into()));
    }
    Ok(match &cli.command {
        Command::Region { alpha, samples } => region(*alpha, *samples, cli.format)?,
        Command::Member { func, alpha, terms } => {
            let f = funcspec::parse_function(func, *terms)?;
            let v = membership_test(&f, *alpha, &grid(cli)?)?;
            let mut j = v.to_json();
            j["function"] = json!(func);
            j["alpha"] = json!(alpha);
            Output::json(j, if v.holds() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Radius { alpha, order } => Output::json(to_value(radius_starlike(*alpha, *order)?), EXIT_OK),
        Command::AlphaForRadius { r } => Output::json(json!({ "r": r, "alpha": alpha_for_radius(*r)? }), EXIT_OK),
        Command::Gn { n, c, alpha } => {
            let c = funcspec::parse_complex(c)?;
            let outcome = gn_nonmembership(*n, c, *alpha)?;
            let (label, condition, code) = match outcome {
                GnOutcome::NotInClass(cond) => ("NotInClass", Some(cond.to_string()), EXIT_VIOLATION),
                GnOutcome::Inconclusive => ("Inconclusive", None, EXIT_OK),
            };
            Output::json(
                json!({ "n": n, "c": pair(c), "alpha": alpha, "outcome": label, "condition": condition }),
                code,
            )
        }
        Command::Bounds { alpha, r } => {
            let b = bounds_unchecked(*alpha, *r)?;
            let s = sharp_witness(*alpha, *r)?;
            Output::json(
                json!({
                    "alpha": alpha,
                    "r": r,
                    "lower": b.lower,
                    "upper": b.upper,
                    "paper_printed_lower": b.paper_printed_lower,
                    "within_hypothesis": b.within_hypothesis,
                    "sharp_witness": {
                        "z_plus": s.z_plus,
                        "value_plus": s.value_plus,
                        "z_minus": s.z_minus,
                        "value_minus": s.value_minus,
                    },
                }),
                EXIT_OK,
            )
        }
        Command::Build { alpha, omega, terms } => {
            let omega = funcspec::parse_complex(omega)?;
            let f = funcspec::build_rotated(*alpha, omega, *terms)?;
            Output::json(to_value(f.taylor(*terms)?), EXIT_OK)
        }
        Command::Convexity { alpha, samples } => {
            let r = convexity_check_p(*alpha, *samples)?;
            let ok = r.positive() && r.above_k(1e-9);
            let mut j = to_value(r);
            j["positive"] = json!(r.positive());
            j["above_k"] = json!(r.above_k(1e-9));
            Output::json(j, if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Curvature { alpha, samples } => {
            let m = curvature_min(*alpha, *samples)?;
            Output::json(json!({ "alpha": alpha, "curvature_min": m, "convex": m > 0.0 }), if m > 0.0 { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Verify { suite } => {
            let results = verify::run_suite(suite.parse()?, cli.seed);
            let ok = results.iter().all(|r| r.passed);
            let text = results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            Output {
                text,
                code: if ok { EXIT_OK } else { EXIT_VIOLATION },
            }
        }
    })
}

fn region(alpha: f64, samples: usize, format: Format) -> Result<Output> {
    let region = BoothRegion::new(alpha)?;
    if samples < 3 {
        return Err(Error::InvalidGrid("region needs at least 3 samples".into()));
    }
    let poly = region.boundary_polyline(samples);
    let text = match format {
        Format::Csv => {
            let mut s = String::from("phi,x,y");
            for (phi, w) in &poly {
                s.push_str(&format!("\n{phi:.16e},{:.16e},{:.16e}", w.re, w.im));
            }
            s
        }
        Format::Svg => svg(&region, &poly),
        Format::Json => {
            let a = region.real_crossing();
            let b = region.imaginary_crossing();
            return Ok(Output::json(
                json!({
                    "alpha": alpha,
                    "real_crossings": [-a, a],
                    "imaginary_crossings": [-b, b],
                    "points": poly.iter().map(|(phi, w)| [*phi, w.re, w.im]).collect::<Vec<_>>(),
                }),
                EXIT_OK,
            ));
        }
    };
    Ok(Output { text, code: EXIT_OK })
}

fn svg(region: &BoothRegion, poly: &[(f64, Complex64)]) -> String {
    let a = region.real_crossing() * 1.1;
    let b = region.imaginary_crossing().max(region.real_crossing()) * 1.1;
    let mut d = String::new();
    for (k, (_, w)) in poly.iter().enumerate() {
        // SVG's y axis points down
        d.push_str(&format!("{}{:.6},{:.6} ", if k == 0 { 'M' } else { 'L' }, w.re, -w.im));
    }
    d.push('Z');
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\" width=\"480\" height=\"{:.0}\">\n  \
         <path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"{:.4}\"/>\n</svg>",
        -a,
        -b,
        2.0 * a,
        2.0 * b,
        480.0 * b / a,
        a / 200.0
    )
}
