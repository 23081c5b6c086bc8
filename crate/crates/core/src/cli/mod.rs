//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven in-process.

mod record;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

pub use record::{
    render_csv, render_json, render_pretty, Flags, InvariantRecord, Params, RecordValue,
};

use crate::error::Error;
use crate::invariants::{
    default_vw_samples, identity_suite, Catalog, Engine, VWParams, VerificationReport,
};
use crate::laurent::{Rational, TauPolynomial, TauRational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    #[value(alias = "pretty-table")]
    Pretty,
}

/// Point at which to specialize results.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalPoint {
    TauOne,
}

fn parse_eval(s: &str) -> Result<EvalPoint, String> {
    match s.replace(' ', "").as_str() {
        "tau=1" | "t=1" => Ok(EvalPoint::TauOne),
        other => Err(format!(
            "unsupported evaluation point {other:?}; only tau=1 is available"
        )),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "k3refine",
    version,
    about = "Exact refined invariants of local K3 surfaces"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "K3REFINE_FORMAT", default_value_t = OutputFormat::Pretty)]
    pub format: OutputFormat,

    /// Specialize every result, e.g. `tau=1`.
    #[arg(long, global = true, value_parser = parse_eval)]
    pub eval: Option<EvalPoint>,

    /// Perturb one product factor family before computing (`product:family[:field]`).
    #[arg(long, global = true, hide = true)]
    pub mutate: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// χ_{-t} genera of Hilbert schemes of points, d = 0..=dmax.
    Hilb {
        #[arg(long = "dmax", default_value_t = 10)]
        d_max: usize,
    },
    /// Refined stable-pair invariants P_χ(t) for one curve class.
    Pairs {
        /// Arithmetic genus, β² = 2h − 2.
        #[arg(long)]
        h: usize,
        /// Divisibility m of the class; m² must divide h − 1.
        #[arg(long = "div", default_value_t = 1)]
        m: u64,
        /// A single χ instead of the window 1 − h ..= chimax.
        #[arg(long, conflicts_with = "chi_max", allow_hyphen_values = true)]
        chi: Option<i64>,
        #[arg(long = "chimax", default_value_t = 12, allow_hyphen_values = true)]
        chi_max: i64,
    },
    /// Refined BPS invariants n^h_g(t), or their integer versions.
    Bps {
        #[arg(long = "hmax", default_value_t = 10)]
        h_max: usize,
        #[arg(long)]
        numeric: bool,
    },
    /// Refined Vafa-Witten invariant of a Mukai vector.
    Vw {
        /// Hilbert index d, with v² = 2d − 2.
        #[arg(long)]
        points: u64,
        /// Divisibility m; m² must divide d − 1.
        #[arg(long = "div", default_value_t = 1)]
        m: u64,
    },
    /// Checks every identity and exits 1 if any fails.
    Verify {
        #[arg(long = "hmax", default_value_t = 10)]
        h_max: usize,
        #[arg(long = "chimax", default_value_t = 12, allow_hyphen_values = true)]
        chi_max: i64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DivisibilityIncompatible { .. } | Error::InvalidArgument(_) => EXIT_INVALID,
        _ => EXIT_VERIFY_FAILED,
    }
}

fn value_of(r: TauRational, eval: Option<EvalPoint>) -> Result<RecordValue, Error> {
    match eval {
        Some(EvalPoint::TauOne) => r.evaluate_at_one().map(RecordValue::Scalar),
        None => Ok(RecordValue::from_fraction(r)),
    }
}

fn poly_value(p: TauPolynomial, eval: Option<EvalPoint>) -> RecordValue {
    match eval {
        Some(EvalPoint::TauOne) => RecordValue::Scalar(p.evaluate_at_one()),
        None => RecordValue::Polynomial(p),
    }
}

fn int_value(n: BigInt) -> RecordValue {
    RecordValue::Scalar(Rational::from_integer(n))
}

fn to_i64(n: impl TryInto<i64>) -> i64 {
    n.try_into().unwrap_or(i64::MAX)
}

/// Records for every subcommand except `verify`.
pub fn records(
    engine: &Engine,
    command: &Command,
    eval: Option<EvalPoint>,
) -> Result<Vec<InvariantRecord>, Error> {
    let mut out = Vec::new();
    match *command {
        Command::Hilb { d_max } => {
            let table = engine.hilb_chi_series(d_max)?;
            let name = if eval.is_some() {
                "hilb_euler"
            } else {
                "hilb_genus"
            };
            for (d, p) in table.entries().iter().enumerate() {
                let params = Params::new(&[("d", to_i64(d))]);
                out.push(InvariantRecord::new(
                    name,
                    params,
                    poly_value(p.clone(), eval),
                ));
            }
        }
        Command::Pairs { h, m, chi, chi_max } => {
            let h_i = to_i64(h);
            let window: Vec<i64> = match chi {
                Some(c) => vec![c],
                None if chi_max < 1 - h_i => {
                    return Err(Error::InvalidArgument(format!(
                        "chimax = {chi_max} is below 1 - h = {}",
                        1 - h_i
                    )))
                }
                None => (1 - h_i..=chi_max).collect(),
            };
            for c in window {
                let value = engine.pairs_full(h, m, c)?;
                let params = Params::new(&[("h", h_i), ("m", to_i64(m)), ("chi", c)]);
                out.push(InvariantRecord::new(
                    "pairs",
                    params,
                    value_of(value, eval)?,
                ));
            }
        }
        Command::Bps {
            h_max,
            numeric: true,
        } => {
            let table = engine.gv_numeric(h_max)?;
            for h in 0..=h_max {
                for (g, n) in table.row(h).iter().enumerate() {
                    let params = Params::new(&[("h", to_i64(h)), ("g", to_i64(g))]);
                    out.push(InvariantRecord::new(
                        "bps_numeric",
                        params,
                        int_value(n.clone()),
                    ));
                }
            }
        }
        Command::Bps {
            h_max,
            numeric: false,
        } => {
            let table = engine.bps_refined(h_max)?;
            for h in 0..=h_max {
                for (g, n) in table.row(h).iter().enumerate() {
                    let params = Params::new(&[("h", to_i64(h)), ("g", to_i64(g))]);
                    out.push(InvariantRecord::new(
                        "bps_refined",
                        params,
                        poly_value(n.clone(), eval),
                    ));
                }
            }
        }
        Command::Vw { points, m } => {
            let params = VWParams::new(points, m)?;
            let value = engine.vw_full(&params)?;
            let keys = Params::new(&[("d", to_i64(points)), ("m", to_i64(m))]);
            out.push(InvariantRecord::new("vw", keys, value_of(value, eval)?));
        }
        Command::Verify { .. } => {
            return Err(Error::InvalidArgument(
                "verify produces a report, not records".into(),
            ))
        }
    }
    Ok(out)
}

fn render_records(records: &[InvariantRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => render_json(records),
        OutputFormat::Csv => render_csv(records),
        OutputFormat::Pretty => render_pretty(records),
    }
}

pub fn render_report(report: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "instances", "failed", "passed"])
                .expect("in-memory write");
            for c in &report.checks {
                w.write_record([
                    c.name.clone(),
                    c.instances.to_string(),
                    c.failed.to_string(),
                    c.passed.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 output")
        }
        OutputFormat::Pretty => {
            let header = ["check", "instances", "failed", "status"].map(String::from);
            let rows: Vec<[String; 4]> = report
                .checks
                .iter()
                .map(|c| {
                    [
                        c.name.clone(),
                        c.instances.to_string(),
                        c.failed.to_string(),
                        if c.passed { "PASS" } else { "FAIL" }.to_string(),
                    ]
                })
                .collect();
            let mut s = format!("h_max = {}, chi_max = {}\n", report.h_max, report.chi_max);
            s.push_str(&record::table(&header, &rows));
            for c in report.failed_checks() {
                s.push_str(&format!("\n{} failures:\n", c.name));
                for f in &c.failures {
                    s.push_str(&format!("  {f}\n"));
                }
                if c.failed > c.failures.len() {
                    s.push_str(&format!("  ... {} more\n", c.failed - c.failures.len()));
                }
            }
            s.push_str(&format!(
                "\nbasis center: {}\n",
                report.basis_center.as_deref().unwrap_or("none")
            ));
            for o in &report.center_outcomes {
                let verdict = if o.accepted { "accepted" } else { "rejected" };
                s.push_str(&format!("  {}: {verdict}, {}\n", o.center, o.detail));
            }
            let verdict = if report.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("\n{verdict}: {} checks\n", report.checks.len()));
            s
        }
    }
}

/// Parses `args` (including the program name), writes results to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };

    let catalog = match cli
        .mutate
        .as_deref()
        .map(|spec| Catalog::standard().mutated_by_spec(spec))
    {
        None => Catalog::standard(),
        Some(Ok(c)) => c,
        Some(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    let engine = Engine::with_catalog(catalog);

    let (text, code) = match cli.command {
        Command::Verify { h_max, chi_max } => {
            let report = identity_suite(&engine, h_max, chi_max, &default_vw_samples());
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            (render_report(&report, cli.format), code)
        }
        ref command => match records(&engine, command, cli.eval) {
            Ok(rs) => (render_records(&rs, cli.format), EXIT_OK),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return exit_code(&e);
            }
        },
    };
    if out
        .write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .is_err()
    {
        return EXIT_VERIFY_FAILED;
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["k3refine"];
        full.extend(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn hilb_json_records() {
        let (code, out, _) = run_str(&["hilb", "--dmax", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(
            lines[1].contains(r#""result":[[0,"2"],[2,"20"],[4,"2"]]"#),
            "{}",
            lines[1]
        );
    }

    #[test]
    fn hilb_euler_numbers() {
        let (code, out, _) =
            run_str(&["hilb", "--dmax", "3", "--eval", "tau=1", "--format", "csv"]);
        assert_eq!(code, 0);
        let results: Vec<&str> = out
            .lines()
            .skip(1)
            .map(|l| l.rsplit(',').next().unwrap())
            .collect();
        assert_eq!(results, ["1", "24", "324", "3200"]);
    }

    #[test]
    fn validation_errors_exit_two() {
        assert_eq!(
            run_str(&["pairs", "--h", "2", "--div", "2", "--chi", "1"]).0,
            2
        );
        assert_eq!(run_str(&["vw", "--points", "2", "--div", "2"]).0, 2);
        assert_eq!(run_str(&["vw", "--points", "1", "--div", "0"]).0, 2);
        assert_eq!(run_str(&["hilb", "--dmax", "x"]).0, 2);
        assert_eq!(run_str(&["hilb", "--eval", "tau=2"]).0, 2);
        assert_eq!(run_str(&["pairs", "--h", "0", "--chimax", "-1"]).0, 2);
        assert_eq!(run_str(&["verify", "--mutate", "jac:9"]).0, 2);
        let (_, _, err) = run_str(&["vw", "--points", "2", "--div", "2"]);
        assert!(err.contains("divisor 2"), "{err}");
    }

    #[test]
    fn vw_double_class_at_one() {
        let (code, out, _) = run_str(&[
            "vw", "--points", "1", "--div", "2", "--eval", "tau=1", "--format", "json",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains(r#""result":"30""#), "{out}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
        assert!(!out.contains("mutate"));
    }

    #[test]
    fn small_verify_passes_and_mutation_fails() {
        let (code, out, _) = run_str(&["verify", "--hmax", "0", "--chimax", "1"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_str(&[
            "verify",
            "--hmax",
            "2",
            "--chimax",
            "2",
            "--mutate",
            "jac:0:tau",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("jac/kkv cross-link"));
    }
}
