mod args;
mod expect;
mod ktheory;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use num_rational::BigRational;
use serde_json::json;

use axb_core::oracle::{evaluate, oracle_equal_exact, window_trace};
use axb_core::profinite::{AxbElement, FiniteAdele};
use axb_core::suites;
use axb_core::word::{lambda_i, trace_tau};
use axb_core::{Algebra, Error, Mode, NormalFormElement};

use args::{AdeleCommand, Cli, Command};
use output::Record;

/// A failed run: the exit code and a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InsufficientPrecision { .. } => 3,
            Error::ExtensionAmbiguous(_) | Error::NotStabilized(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn positive(name: &str, v: Option<i64>, default: i64) -> Result<i64, Failure> {
    match v.unwrap_or(default) {
        x if x >= 1 => Ok(x),
        x => Err(Failure::invalid(format!(
            "--{name} must be positive, got {x}"
        ))),
    }
}

fn parse(mode: Mode, src: &str) -> Result<NormalFormElement, Failure> {
    Ok(Algebra::new(mode).parse(src)?)
}

fn rational(name: &str, src: &str) -> Result<BigRational, Failure> {
    src.trim()
        .parse()
        .map_err(|_| Failure::invalid(format!("--{name}: `{src}` is not a rational number")))
}

fn verify(cli: &Cli) -> Result<Vec<Record>, Failure> {
    let bound = positive("bound", cli.bound, 20)? as i128;
    let window = positive("window", cli.window, 1000)? as i128;
    let small = bound.min(10);
    let mut reports = suites::relation_suite(bound, cli.mode);
    reports.extend(suites::lemma_comm_suite(bound));
    reports.extend(suites::trace_suite(bound));
    reports.extend(suites::kms_suite(small, small, 1000, cli.seed));
    reports.push(suites::oracle_suite(
        1000,
        12,
        small as i64,
        cli.mode,
        cli.seed,
        window,
    ));
    reports.push(suites::oracle_pair_suite(
        500,
        cli.mode,
        cli.seed,
        window.min(100),
    ));
    Ok(reports.iter().map(Record::from).collect())
}

fn oracle(
    cli: &Cli,
    x: &Option<String>,
    y: &Option<String>,
    count: usize,
) -> Result<Vec<Record>, Failure> {
    let window = positive("window", cli.window, 1000)? as i128;
    match (x, y) {
        (Some(xs), Some(ys)) => {
            let (x, y) = (parse(cli.mode, xs)?, parse(cli.mode, ys)?);
            let equal = oracle_equal_exact(&x, &y);
            let first = (-window..=window).find(|&k| evaluate(&x, k) != evaluate(&y, k));
            let witness = match first {
                Some(k) => json!(format!("differ on xi_{k}")),
                None if equal => json!("equal as operators"),
                None => json!(format!("differ outside [-{window}, {window}]")),
            };
            Ok(vec![Record::check(
                "oracle",
                &format!("{x} = {y}"),
                equal,
                witness,
            )])
        }
        (None, None) => {
            let bound = positive("bound", cli.bound, 10)?;
            Ok(vec![
                (&suites::oracle_suite(count, 12, bound, cli.mode, cli.seed, window)).into(),
                (&suites::oracle_pair_suite(count, cli.mode, cli.seed, window.min(100))).into(),
            ])
        }
        _ => Err(Failure::invalid("oracle takes two elements or none")),
    }
}

fn run(cli: &Cli) -> Result<Vec<Record>, Failure> {
    if cli.stages == Some(0) {
        return Err(Failure::invalid("--stages must be positive"));
    }
    match &cli.command {
        Command::Verify => verify(cli),
        Command::Ktheory {
            scenario,
            n,
            primes,
            order,
        } => {
            if let Some(b) = cli.bound {
                positive("bound", Some(b), 1)?;
            }
            let opts = ktheory::Options {
                stages: cli.stages,
                bound: cli.bound,
                n: *n,
                primes: primes.clone(),
                order: *order,
            };
            Ok(ktheory::run(*scenario, cli.mode, &opts)?)
        }
        Command::Trace { expr } => {
            let x = parse(cli.mode, expr)?;
            let mut out = vec![Record::value("trace", expr, trace_tau(&x).to_string())];
            if cli.window.is_some() {
                let w = positive("window", cli.window, 1)? as i128;
                out.push(Record::value(
                    "trace",
                    &format!("window {w}"),
                    window_trace(&x, w).to_string(),
                ));
            }
            Ok(out)
        }
        Command::Kms { x, y } => {
            let (xe, ye) = (parse(cli.mode, x)?, parse(cli.mode, y)?);
            let lhs = trace_tau(&xe.mul(&lambda_i(&ye)));
            let rhs = trace_tau(&ye.mul(&xe));
            Ok(vec![Record::check(
                "kms",
                &format!("tau(({x}) lambda_i({y})) = tau(({y})({x}))"),
                lhs == rhs,
                format!("{lhs} vs {rhs}"),
            )])
        }
        Command::Adele {
            action: AdeleCommand::Act { a, b, adele },
        } => {
            let g = AxbElement::new(rational("a", a)?, rational("b", b)?)?;
            let x: FiniteAdele = adele.parse()?;
            let y = g.act(&x)?;
            Ok(vec![Record::value(
                "adele",
                &format!("{g} . {x}"),
                y.to_string(),
            )])
        }
        Command::Oracle { x, y, count } => oracle(cli, x, y, *count),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(records) => {
            let text = output::render(&records, cli.format);
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error of the computation
            let _ = stdout.write_all(text.as_bytes());
            if records.iter().any(Record::failed) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
