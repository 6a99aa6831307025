//! `orthopair` command-line front-end.
//!
//! Exit codes: 0 success, 2 parse/schema/IO/usage, 3 domain violation or
//! bad parameter, 4 rung mismatch.

mod input;
mod report;

use std::cmp::Ordering;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orthopair::{
    classify, gamma_q, gamma_q_inv, ifwa, ifwg, inf_finite, negate, qrofwa, qrofwg, sup_finite,
    Error, Ifv, NumericPolicy, OrderKind, Qrofn,
};
use serde_json::json;
use thiserror::Error;

use input::{ifv, parse_pair, read_json, AggregateRequest, ClassifyRequest, LatticeRequest};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Rung(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Rung(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::DomainViolation(_) | Error::BadParameter(_) => CliError::Domain(e.to_string()),
            Error::RungMismatch { .. } => CliError::Rung(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Order {
    Xy,
    Zx,
}

impl From<Order> for OrderKind {
    fn from(o: Order) -> Self {
        match o {
            Order::Xy => OrderKind::XY,
            Order::Zx => OrderKind::ZX,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    ToIfv,
    ToQrofn,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AggOp {
    Ifwa,
    Ifwg,
    Qrofwa,
    Qrofwg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LatticeOp {
    Inf,
    Sup,
}

#[derive(Debug, Parser)]
#[command(
    name = "orthopair",
    version,
    about = "Ordered algebra of intuitionistic fuzzy values"
)]
struct Cli {
    /// Tolerance for order ties and branch selection.
    #[arg(long, global = true)]
    eps: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank patterns by similarity to an unknown sample.
    Classify { file: PathBuf },
    /// Print LT, EQ or GT.
    Compare {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Order::Xy)]
        order: Order,
    },
    /// Strong negation for the chosen order.
    Negate {
        a: String,
        #[arg(long, value_enum, default_value_t = Order::Xy)]
        order: Order,
    },
    /// Move a value between rung q and the IFVs.
    Transport {
        a: String,
        #[arg(long)]
        q: f64,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Weighted aggregation of the values in FILE.
    Aggregate {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: AggOp,
    },
    /// Infimum or supremum of the values in FILE.
    Lattice {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: LatticeOp,
        #[arg(long, value_enum, default_value_t = Order::Xy)]
        order: Order,
    },
}

fn policy(eps: Option<f64>) -> Result<NumericPolicy, CliError> {
    match eps {
        None => Ok(NumericPolicy::DEFAULT),
        Some(e) => Ok(NumericPolicy::DEFAULT.with_eps_order(e)?),
    }
}

fn arg_ifv(s: &str, policy: &NumericPolicy) -> Result<Ifv, CliError> {
    let (mu, nu) = parse_pair(s)?;
    ifv(mu, nu, policy, s)
}

fn value_output(v: &Ifv, format: Format) -> String {
    match format {
        Format::Text => report::ifv_text(v.mu(), v.nu()),
        Format::Json => json!({"mu": v.mu(), "nu": v.nu()}).to_string(),
    }
}

fn qrofn_output(v: &Qrofn, format: Format) -> String {
    match format {
        Format::Text => report::ifv_text(v.mu(), v.nu()),
        Format::Json => json!({"mu": v.mu(), "nu": v.nu(), "q": v.q()}).to_string(),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Classify { file } => {
            let req: ClassifyRequest = read_json(&file)?;
            let policy = policy(cli.eps.or(req.eps))?;
            let w = req.weights.resolve(req.universe.len())?;
            let unknown = req.build_row("unknown", &req.unknown, &policy)?;
            let patterns = req
                .patterns
                .iter()
                .map(|(label, row)| Ok((label.clone(), req.build_row(label, row, &policy)?)))
                .collect::<Result<_, CliError>>()?;
            let result = classify(&unknown, &patterns, &w, req.order, &policy)?;
            Ok(match format {
                Format::Text => report::classification_text(&result, req.order),
                Format::Json => report::classification_json(&result, req.order),
            })
        }
        Command::Compare { a, b, order } => {
            let policy = policy(cli.eps)?;
            // Bad values here are reported as input errors.
            let parse = |s: &str| arg_ifv(s, &policy).map_err(|e| CliError::Parse(e.to_string()));
            let token = match parse(&a)?.compare(&parse(&b)?, order.into(), &policy) {
                Ordering::Less => "LT",
                Ordering::Equal => "EQ",
                Ordering::Greater => "GT",
            };
            Ok(match format {
                Format::Text => token.to_string(),
                Format::Json => json!({ "ordering": token }).to_string(),
            })
        }
        Command::Negate { a, order } => {
            let policy = policy(cli.eps)?;
            let v = arg_ifv(&a, &policy)?;
            Ok(value_output(&negate(&v, order.into(), &policy), format))
        }
        Command::Transport { a, q, direction } => {
            let policy = policy(cli.eps)?;
            let (mu, nu) = parse_pair(&a)?;
            match direction {
                Direction::ToIfv => {
                    let v = Qrofn::with_policy(mu, nu, q, &policy)?;
                    Ok(value_output(&gamma_q(&v), format))
                }
                Direction::ToQrofn => {
                    let v = ifv(mu, nu, &policy, &a)?;
                    Ok(qrofn_output(&gamma_q_inv(&v, q)?, format))
                }
            }
        }
        Command::Aggregate { file, op } => {
            let req: AggregateRequest = read_json(&file)?;
            let policy = policy(cli.eps)?;
            let w = req.weights.resolve(req.values.len())?;
            match op {
                AggOp::Ifwa | AggOp::Ifwg => {
                    let values = req.ifvs(&policy)?;
                    let f = if matches!(op, AggOp::Ifwa) {
                        ifwa
                    } else {
                        ifwg
                    };
                    Ok(value_output(&f(&values, &w)?, format))
                }
                AggOp::Qrofwa | AggOp::Qrofwg => {
                    let values = req.qrofns(&policy)?;
                    let f = if matches!(op, AggOp::Qrofwa) {
                        qrofwa
                    } else {
                        qrofwg
                    };
                    Ok(qrofn_output(&f(&values, &w)?, format))
                }
            }
        }
        Command::Lattice { file, op, order } => {
            let req: LatticeRequest = read_json(&file)?;
            let policy = policy(cli.eps)?;
            let values = req.ifvs(&policy)?;
            let f = match op {
                LatticeOp::Inf => inf_finite,
                LatticeOp::Sup => sup_finite,
            };
            Ok(value_output(&f(&values, order.into(), &policy)?, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // Ignore a closed pipe.
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
