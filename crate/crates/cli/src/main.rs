//! `qloop`: build modules, analyse them and run the verification suites.

mod expr;
mod render;
mod suites;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qloop_core::dpoly::DrinfeldPoly;
use qloop_core::qnum::QParam;
use qloop_core::repcore::{self, drinfeld_matrices, highest_lweight_vectors, is_simple, Module};
use qloop_core::scalar;
use qloop_core::selfext::{ext1, graded_twist};
use qloop_core::weylalg::{ideal_i_analysis, ideal_i_quotient, local_weyl};
use qloop_core::Error;

#[derive(Parser)]
#[command(name = "qloop", version, about = "Exact representations of the quantum loop algebra of sl2")]
struct Cli {
    /// Deformation parameter, an integer or fraction other than 0, 1, -1.
    #[arg(long, global = true, env = "QLOOP_Q", default_value = "2", value_parser = parse_q)]
    q: QParam,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a module from an expression and write its JSON.
    Build {
        expr: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 0 iff every check passes.
    Verify {
        #[arg(long, default_value = "all", value_parser = suite_name)]
        suite: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
        #[arg(long, default_value_t = 3)]
        window: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyse a module stored as JSON.
    Report {
        module: PathBuf,
        what: What,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Dimension of Ext^1(A, B), with B = A when omitted.
    Ext1 {
        a: PathBuf,
        b: Option<PathBuf>,
        /// Also write the cocycle basis as JSON matrices.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The graded self-extension of a module.
    Eself {
        a: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The local Weyl module of a Drinfeld polynomial.
    Weyl {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The rank-one ideal analysis and its quotient matrices.
    #[command(name = "ideal-I")]
    IdealI {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Hw,
    Simple,
    Drinfeld,
    Ext,
}

fn parse_q(s: &str) -> Result<QParam, String> {
    QParam::try_from(s.to_string()).map_err(|e| e.to_string())
}

fn suite_name(s: &str) -> Result<String, String> {
    if s == "all" || suites::NAMES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown suite '{s}', expected one of all, {}", suites::NAMES.join(", ")))
    }
}

#[derive(Debug)]
enum Failure {
    /// Bad input: unreadable files, malformed expressions or JSON.
    Usage(String),
    /// The computation itself failed.
    Compute(String),
    /// Ran to completion but some check failed.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::ParseScalar(_) | Error::InvalidQ(_) | Error::Json(_) | Error::Malformed(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let q = cli.q;
    match cli.command {
        Command::Build { expr, out } => emit_module(&expr::build(&expr, &q)?, out.as_deref()),
        Command::Verify { suite, m_max, window, out } => {
            let report = suites::run(&suite, &suites::SuiteConfig { q, m_max, window });
            let text = pretty(&serde_json::to_value(&report).expect("report serializes"));
            if let Some(path) = out {
                write(&path, &text)?;
            }
            print!("{text}");
            if report.pass {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Report { module, what, window } => {
            let v = load(&module)?;
            let window = window.unwrap_or_else(|| repcore::default_window(&v));
            let body = match what {
                What::Hw => render::lweight_blocks(&highest_lweight_vectors(&v, window)?),
                What::Simple => render::simplicity(&is_simple(&v, window)?),
                What::Drinfeld => render::drinfeld(&drinfeld_matrices(&v, window)?),
                What::Ext => render::ext(&ext1(&v, &v)?, false),
            };
            print!("{}", pretty(&json!({ "module": v.label(), "dim": v.dim(), "window": window, "result": body })));
            Ok(())
        }
        Command::Ext1 { a, b, out } => {
            let source = load(&a)?;
            let target = match b {
                Some(b) => load(&b)?,
                None => source.clone(),
            };
            let e = ext1(&source, &target)?;
            if let Some(path) = out {
                write(&path, &pretty(&render::ext(&e, true)))?;
            }
            print!("{}", pretty(&render::ext(&e, false)));
            Ok(())
        }
        Command::Eself { a, out } => emit_module(&graded_twist(&load(&a)?), out.as_deref()),
        Command::Weyl { pi, out } => emit_module(&local_weyl(&DrinfeldPoly::parse(&pi, &q)?, &q)?, out.as_deref()),
        Command::IdealI { m, a } => {
            let a = parse_scalar(&a, &q)?;
            let an = ideal_i_analysis(m, &a, &q)?;
            let quotient = ideal_i_quotient(m, &a, &q);
            let mut body = render::ideal(&an, quotient.as_ref().ok());
            if let Err(e) = &quotient {
                body["quotient_error"] = Value::from(e.to_string());
            }
            body["q"] = Value::from(scalar::to_text(q.value()));
            body["eigenvalue"] = Value::from(scalar::to_text(&an.eigenvalue(&q)));
            print!("{}", pretty(&body));
            Ok(())
        }
    }
}

fn parse_scalar(src: &str, q: &QParam) -> Result<qloop_core::scalar::Scalar, Failure> {
    let mut c = qloop_core::parse::Cursor::new(src);
    let a = c.scalar(q)?;
    c.finish()?;
    Ok(a)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn load(path: &Path) -> Result<Module, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Module::from_json(&text)?)
}

fn write(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

/// Writes the module JSON to `out` and prints a summary, or prints the JSON.
fn emit_module(v: &Module, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => {
            write(path, &v.to_json())?;
            print!("{}", pretty(&json!({ "label": v.label(), "dim": v.dim(), "weights": v.weights() })));
        }
        None => print!("{}", v.to_json()),
    }
    Ok(())
}
