//! The `symvertex` command line.
//!
//! Results go to the output stream and diagnostics to the error stream. Exit
//! codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::basis::{expand, BasisId};
use crate::exec::Exec;
use crate::expr::parse_expression;
use crate::scalar::{to_display_string, to_fraction_string};
use crate::tableaux::{
    bounded_height_pairs, bounded_height_schur_sum, bounded_height_terms, CountMethod,
    SchurSumMethod,
};
use crate::verify::{run_suites, suite, Bounds, SUITES};
use crate::vertex::{OpName, OperatorSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "symvertex",
    version,
    about = "Exact symmetric functions and vertex operators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    P,
    M,
    E,
    H,
    S,
    F,
}

impl From<Basis> for BasisId {
    fn from(b: Basis) -> BasisId {
        match b {
            Basis::P => BasisId::P,
            Basis::M => BasisId::M,
            Basis::E => BasisId::E,
            Basis::H => BasisId::H,
            Basis::S => BasisId::S,
            Basis::F => BasisId::F,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum Op {
    CP,
    CH,
    CE,
    RM1,
    RMK,
    RM,
    RF,
    CM,
    CF,
    RS,
    RSK,
    CS,
    TX,
}

impl From<Op> for OpName {
    fn from(op: Op) -> OpName {
        match op {
            Op::CP => OpName::CP,
            Op::CH => OpName::CH,
            Op::CE => OpName::CE,
            Op::RM1 => OpName::RM1,
            Op::RMK => OpName::RMK,
            Op::RM => OpName::RM,
            Op::RF => OpName::RF,
            Op::CM => OpName::CM,
            Op::CF => OpName::CF,
            Op::RS => OpName::RS,
            Op::RSK => OpName::RSK,
            Op::CS => OpName::CS,
            Op::TX => OpName::TX,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Det,
    Brute,
    /// Print `Σ f_λ s_λ` from the determinant formula instead of a count.
    Formula,
    /// Print `CS_{0^k}(h_1^n)` from the operator instead of a count.
    Operator,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite an expression in a basis.
    Expand {
        expr: String,
        #[arg(long, value_enum)]
        basis: Basis,
        #[arg(long)]
        json: bool,
    },
    /// Apply a vertex operator to an expression.
    Apply {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        expr: String,
        /// Basis for the result.
        #[arg(long, value_enum, default_value = "s")]
        basis: Basis,
        #[arg(long)]
        json: bool,
    },
    /// Hall inner product of two expressions.
    Inner {
        expr1: String,
        expr2: String,
        #[arg(long)]
        json: bool,
    },
    /// Pairs of standard tableaux of one shape with at most k rows.
    Count {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        /// Also print the individual summands as JSON.
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suites.
    Verify {
        /// Cap every degree bound.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Include the explicit-polynomial oracle sweep.
        #[arg(long)]
        oracle: bool,
        /// Run a single suite.
        #[arg(long, value_parser = suite_name)]
        suite: Option<String>,
        /// Run without the thread pool.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: bool,
    },
}

fn suite_name(s: &str) -> Result<String, String> {
    match suite(s) {
        Some(_) => Ok(s.to_string()),
        None => Err(format!(
            "unknown suite; choose from {}",
            SUITES.iter().map(|s| s.name).collect::<Vec<_>>().join(", ")
        )),
    }
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.command, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}

pub fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<(), String> {
    writeln!(out, "{text}").map_err(|e| e.to_string())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Expand { expr, basis, json } => {
            let g = parse_expression(&expr).map_err(|e| e.to_string())?;
            let e = expand(&g, basis.into());
            if json {
                emit(out, e.to_json())?;
            } else {
                emit(out, e)?;
            }
        }
        Command::Apply {
            op,
            a,
            k,
            expr,
            basis,
            json,
        } => {
            let spec = OperatorSpec::new(op.into(), a, k).map_err(|e| e.to_string())?;
            let g = parse_expression(&expr).map_err(|e| e.to_string())?;
            let result = spec.apply(&g).map_err(|e| e.to_string())?;
            let e = expand(&result, basis.into());
            if json {
                emit(out, e.to_json())?;
            } else {
                emit(out, e)?;
            }
        }
        Command::Inner { expr1, expr2, json } => {
            let g1 = parse_expression(&expr1).map_err(|e| e.to_string())?;
            let g2 = parse_expression(&expr2).map_err(|e| e.to_string())?;
            let value = g1.inner_product(&g2);
            if json {
                emit(out, json!({ "value": to_fraction_string(&value) }))?;
            } else {
                emit(out, to_display_string(&value))?;
            }
        }
        Command::Count {
            n,
            k,
            method,
            verbose,
            json,
        } => {
            if k == 0 {
                return Err("--k must be positive".into());
            }
            let counting = match method {
                Method::Closed => CountMethod::Closed,
                Method::Det => CountMethod::Det,
                Method::Brute => CountMethod::Brute,
                Method::Formula | Method::Operator => {
                    let m = if method == Method::Formula {
                        SchurSumMethod::Formula
                    } else {
                        SchurSumMethod::Operator
                    };
                    let e = expand(&bounded_height_schur_sum(n, k, m), BasisId::S);
                    if json {
                        emit(out, e.to_json())?;
                    } else {
                        emit(out, e)?;
                    }
                    return Ok(EXIT_OK);
                }
            };
            let value = bounded_height_pairs(n, k, counting);
            let terms = verbose.then(|| bounded_height_terms(n, k, counting));
            if json {
                let mut doc = json!({
                    "n": n,
                    "k": k,
                    "method": counting,
                    "value": value.to_string(),
                });
                if let Some(terms) = terms {
                    doc["terms"] = serde_json::to_value(terms).map_err(|e| e.to_string())?;
                }
                emit(out, doc)?;
            } else {
                emit(out, &value)?;
                if let Some(terms) = terms {
                    emit(
                        out,
                        serde_json::to_string(&terms).map_err(|e| e.to_string())?,
                    )?;
                }
            }
        }
        Command::Verify {
            max_degree,
            oracle,
            suite,
            sequential,
            json,
        } => {
            let bounds = match max_degree {
                Some(d) => Bounds::default().with_max_degree(d),
                None => Bounds::default(),
            };
            let exec = if sequential {
                Exec::Sequential
            } else {
                Exec::default()
            };
            let reports = run_suites(suite.as_deref(), oracle, &bounds, exec);
            let passed = reports.iter().all(|r| r.passed());
            if json {
                emit(
                    out,
                    json!({ "passed": passed, "bounds": bounds, "suites": reports }),
                )?;
            } else {
                for r in &reports {
                    emit(out, r)?;
                    for note in &r.notes {
                        emit(out, format_args!("  note: {note}"))?;
                    }
                    for failure in r.failures.iter().take(20) {
                        emit(out, format_args!("  failure: {failure}"))?;
                    }
                }
                emit(
                    out,
                    if passed {
                        "all suites passed"
                    } else {
                        "verification FAILED"
                    },
                )?;
            }
            return Ok(if passed { EXIT_OK } else { EXIT_FAILED });
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["symvertex"];
        full.extend_from_slice(args);
        let code = main_with(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn documented_examples() {
        assert_eq!(
            run_args(&["count", "--n", "4", "--k", "2"]),
            (0, "14\n".into(), String::new())
        );
        assert_eq!(
            run_args(&["expand", "--basis", "h", "e[2]"]),
            (0, "h[1,1] - h[2]\n".into(), String::new())
        );
        let (code, out, _) = run_args(&[
            "apply", "--op", "CS", "--a", "0", "--k", "2", "h[1]^4", "--basis", "s",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "2*s[2,2] + 3*s[3,1] + s[4]\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["expand", "--basis", "h", "e[2"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["apply", "--op", "TX", "--a", "1", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["apply", "--op", "CH", "--a", "1", "--k", "1", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["apply", "--op", "RM", "--a", "0", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["count", "--n", "4"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["inner", "h[2]", "m[2]"]),
            (0, "1\n".into(), String::new())
        );
    }

    #[test]
    fn verbose_and_json() {
        let (code, out, _) = run_args(&["count", "--n", "2", "--k", "2", "--verbose"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("2"));
        let terms: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(terms.as_array().unwrap().len(), 3);

        let (_, out, _) = run_args(&["expand", "--basis", "h", "e[2]", "--json"]);
        assert_eq!(
            out.trim(),
            r#"{"basis":"h","terms":[{"coeff":"1/1","partition":[1,1]},{"coeff":"-1/1","partition":[2]}]}"#
        );
    }

    #[test]
    fn small_verify_passes() {
        let (code, out, _) = run_args(&["verify", "--max-degree", "2", "--oracle"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("all suites passed\n"));
    }
}
