//! Argument parsing and dispatch for the `orbiheat` binary.
//!
//! [`run`] never touches the process streams; it returns the exit code and
//! the text destined for stdout and stderr so that tests can drive it
//! in-process.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbiheat::classify::{
    injectivity_scan, positive_vs_zero_chi, spherical_distinguish, ClassKind, OrbifoldClass,
    Verdict, DEFAULT_BOUND,
};
use orbiheat::flat::{
    brute_force_trace, default_grid, fit_expansion, heat_trace, verify_model, FlatModel,
    TraceSamples, FLAT_FIT_DEGREES,
};
use orbiheat::heat::{full_expansion, spectral_c, Degree, MetricData};
use orbiheat::tables::{table_one, table_two, TableCheck};
use orbiheat::{parse, render, Error, OrbifoldSignature};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_GAUSS_BONNET: i32 = 2;
pub const EXIT_TABLE_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "orbiheat", version, about = "Heat-trace invariants of closed 2-orbifolds")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    TeardropsAndFootballs,
    TriangularPillows,
    ClassC,
    Spherical,
    /// Any two orbifolds with χ ≥ 0.
    NonnegativeChi,
}

impl ClassArg {
    fn kind(self) -> Option<ClassKind> {
        match self {
            ClassArg::TeardropsAndFootballs => Some(ClassKind::TeardropsAndFootballs),
            ClassArg::TriangularPillows => Some(ClassKind::TriangularPillows),
            ClassArg::ClassC => Some(ClassKind::ClassCOrientable),
            ClassArg::Spherical => Some(ClassKind::SphericalConstantCurvature),
            ClassArg::NonnegativeChi => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Torus,
    KleinBottle,
    Pillowcase,
    Square,
    MirrorTorus,
}

impl From<ModelArg> for FlatModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Torus => FlatModel::Torus,
            ModelArg::KleinBottle => FlatModel::KleinBottle,
            ModelArg::Pillowcase => FlatModel::Pillowcase,
            ModelArg::Square => FlatModel::Square,
            ModelArg::MirrorTorus => FlatModel::MirrorTorus,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical signature.
    Parse { notation: String },
    /// Print the orbifold Euler characteristic.
    Chi { notation: String },
    /// Print c = 12 · (degree-zero heat coefficient).
    C { notation: String },
    /// Print the leading heat-trace coefficients for a constant-curvature metric.
    Expansion {
        notation: String,
        #[arg(long, allow_hyphen_values = true)]
        curvature: f64,
        /// Defaults to 2πχ/K when K ≠ 0.
        #[arg(long)]
        area: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        mirror_length: f64,
        /// ∫τ over the mirror locus; defaults to 2·K·L.
        #[arg(long, allow_hyphen_values = true)]
        mirror_scalar_integral: Option<f64>,
    },
    /// Decide whether two orbifolds are spectrally distinguished.
    Classify {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Vec<String>,
    },
    /// List all pairs in a class sharing the same c.
    Scan {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Exact heat trace of a flat model.
    Trace {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        t: f64,
        /// Also evaluate the eigenfunction-enumeration oracle up to this eigenvalue.
        #[arg(long)]
        cutoff: Option<f64>,
    },
    /// Fit t^-1, t^-1/2, t^0 to sampled traces.
    Fit {
        #[arg(long, value_enum, required_unless_present = "csv")]
        model: Option<ModelArg>,
        /// Read samples (columns t,value) from a CSV file instead.
        #[arg(long, conflicts_with = "model")]
        csv: Option<PathBuf>,
        /// Print the samples as CSV instead of fitting.
        #[arg(long)]
        samples: bool,
    },
    /// Compare fitted and predicted coefficients of a flat model.
    Verify {
        #[arg(long, value_enum)]
        model: ModelArg,
    },
    /// Recompute the reference tables and report mismatches.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
}

/// Result of one invocation.
#[derive(Debug, Default, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::GaussBonnetViolation { .. } => EXIT_GAUSS_BONNET,
        _ => EXIT_INVALID,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_INVALID, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    }
}

fn emit(format: Format, value: &Value, text: String) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("json")),
        Format::Text => text,
    }
}

fn notation(sig: &OrbifoldSignature) -> String {
    format!("O({})", render(sig))
}

fn execute(cli: &Cli) -> orbiheat::Result<Outcome> {
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Parse { notation: text } => {
            let sig = parse(text)?;
            let value = serde_json::to_value(&sig).expect("json");
            emit(fmt, &value, format!("{value}\n"))
        }
        Command::Chi { notation: text } => {
            let chi = parse(text)?.euler_characteristic();
            emit(fmt, &json!(chi), format!("{chi}\n"))
        }
        Command::C { notation: text } => {
            let c = spectral_c(&parse(text)?);
            emit(fmt, &json!(c), format!("{c}\n"))
        }
        Command::Expansion {
            notation: text,
            curvature,
            area,
            mirror_length,
            mirror_scalar_integral,
        } => {
            let sig = parse(text)?;
            let area = match area {
                Some(a) => *a,
                None if *curvature != 0.0 => {
                    2.0 * PI * sig.euler_characteristic().to_f64() / curvature
                }
                None => {
                    return Err(Error::InvalidMetric(
                        "--area is required when the curvature is zero".into(),
                    ))
                }
            };
            if area <= 0.0 && *curvature != 0.0 {
                return Err(Error::GaussBonnetViolation {
                    area,
                    expected: 2.0 * PI * sig.euler_characteristic().to_f64() / curvature,
                });
            }
            let mut metric = MetricData::new(*curvature, area, *mirror_length)?;
            if let Some(x) = mirror_scalar_integral {
                metric = metric.with_mirror_scalar_integral(*x);
            }
            let e = full_expansion(&sig, &metric)?;
            let mut text = String::new();
            for d in Degree::ALL {
                if d == Degree::Zero {
                    text.push_str(&format!("t^{}: {} ({})\n", d.label(), e.zero, e.zero.to_f64()));
                } else {
                    text.push_str(&format!("t^{}: {:.17e}\n", d.label(), e.coefficient(d)));
                }
            }
            emit(fmt, &serde_json::to_value(&e).expect("json"), text)
        }
        Command::Classify { class, pair } => {
            let a = parse(&pair[0])?;
            let b = parse(&pair[1])?;
            let verdict = match class {
                ClassArg::Spherical => {
                    for s in [&a, &b] {
                        if s.is_bad() || !s.euler_characteristic().is_positive() {
                            return Err(Error::Domain(format!(
                                "{} is not a spherical orbifold",
                                notation(s)
                            )));
                        }
                    }
                    spherical_distinguish(&a, &b)?
                }
                ClassArg::NonnegativeChi => positive_vs_zero_chi(&a, &b)?,
                _ => {
                    if spectral_c(&a) != spectral_c(&b) {
                        Verdict::ByC
                    } else {
                        Verdict::NotDistinguished
                    }
                }
            };
            let value = json!({
                "sig_a": render(&a),
                "sig_b": render(&b),
                "c_a": spectral_c(&a),
                "c_b": spectral_c(&b),
                "verdict": verdict,
            });
            emit(fmt, &value, format!("{} vs {}: {verdict}\n", notation(&a), notation(&b)))
        }
        Command::Scan { class, bound } => {
            let kind = class.kind().ok_or_else(|| {
                Error::Domain("scan needs one of the enumerable classes".into())
            })?;
            let collisions = injectivity_scan(OrbifoldClass::new(kind, *bound)?);
            let text: String = collisions
                .iter()
                .map(|c| format!("{} ~ {} (c = {})\n", notation(&c.sig_a), notation(&c.sig_b), c.c))
                .collect();
            let text = if text.is_empty() {
                "no collisions\n".to_string()
            } else {
                text
            };
            emit(fmt, &serde_json::to_value(&collisions).expect("json"), text)
        }
        Command::Trace { model, t, cutoff } => {
            if t.is_nan() || *t <= 0.0 {
                return Err(Error::Domain(format!("t must be positive, got {t}")));
            }
            let model = FlatModel::from(*model);
            let value = heat_trace(model, *t);
            let brute = cutoff.map(|c| brute_force_trace(model, *t, c));
            let mut text = format!("{value:.17e}\n");
            if let Some(b) = brute {
                text.push_str(&format!("oracle: {b:.17e}\n"));
            }
            let v = json!({ "model": model, "t": t, "value": value, "oracle": brute });
            emit(fmt, &v, text)
        }
        Command::Fit {
            model,
            csv,
            samples,
        } => {
            let data = match (model, csv) {
                (Some(m), _) => TraceSamples::from_model((*m).into(), &default_grid())?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::InvalidSamples(format!("{}: {e}", path.display())))?;
                    TraceSamples::from_csv(&text)?
                }
                (None, None) => unreachable!("clap requires --model or --csv"),
            };
            if *samples {
                data.to_csv()
            } else {
                let fit = fit_expansion(&data, &FLAT_FIT_DEGREES)?;
                let text: String = fit
                    .coefficients
                    .iter()
                    .map(|(d, c)| format!("t^{}: {c:.12e}\n", d.label()))
                    .chain(std::iter::once(format!("residual: {:.3e}\n", fit.residual)))
                    .collect();
                let coeffs: serde_json::Map<String, Value> = fit
                    .coefficients
                    .iter()
                    .map(|(d, c)| (d.label().to_string(), json!(c)))
                    .collect();
                let v = json!({
                    "coefficients": coeffs,
                    "residual": fit.residual,
                    "condition": fit.condition,
                });
                emit(fmt, &v, text)
            }
        }
        Command::Verify { model } => {
            let report = verify_model((*model).into())?;
            let text: String = FLAT_FIT_DEGREES
                .iter()
                .filter_map(|&d| report.deviation(d).map(|dev| (d, dev)))
                .map(|(d, dev)| {
                    format!(
                        "t^{}: fitted {:.12e} predicted {:.12e} rel_err {:.2e}\n",
                        d.label(),
                        dev.fitted,
                        dev.predicted,
                        dev.rel_err
                    )
                })
                .collect();
            emit(fmt, &serde_json::to_value(&report).expect("json"), text)
        }
        Command::Tables { which } => {
            let checks = if *which == 1 { table_one() } else { table_two() };
            return Ok(table_report(fmt, *which, &checks));
        }
    };
    Ok(Outcome::ok(out))
}

/// Renders recomputed table entries; exits with [`EXIT_TABLE_MISMATCH`] when
/// any entry differs from its reference value.
pub fn table_report(fmt: Format, which: u8, checks: &[TableCheck]) -> Outcome {
    let mismatches: Vec<&TableCheck> = checks.iter().filter(|c| !c.matches()).collect();
    let mut text = String::new();
    for c in checks {
        let mark = if c.matches() { "ok  " } else { "DIFF" };
        text.push_str(&format!(
            "{mark} {:<34} {:<14} {:<9} expected {:<10} computed {}\n",
            c.row, c.orbifold, c.quantity, c.expected, c.computed
        ));
    }
    text.push_str(&format!("{} entries, {} diffs\n", checks.len(), mismatches.len()));
    let v = json!({
        "table": which,
        "entries": checks.len(),
        "diffs": mismatches,
    });
    let stdout = emit(fmt, &v, text);
    if mismatches.is_empty() {
        return Outcome::ok(stdout);
    }
    Outcome {
        code: EXIT_TABLE_MISMATCH,
        stdout,
        stderr: format!("{} table entries differ\n", mismatches.len()),
    }
}
