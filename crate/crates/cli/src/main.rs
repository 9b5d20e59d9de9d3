//! `bihilbert` — evaluate bicomplex expressions, run the seeded
//! verification suites, and drive Gram-Schmidt / Riesz-Fischer workflows
//! over JSON files.
//!
//! Exit codes: 0 success, 1 verification failures or an isometry residual
//! over threshold, 2 parse/usage errors, 3 null-cone errors, 4 I/O errors.

mod expr;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use bihilbert::verify::{run_suite, Suite, SuiteConfig};
use bihilbert::{
    gram_schmidt, Bicomplex64, BicomplexSequence64, Error, Ket64, OrthonormalSystem64,
    RieszFischerMap64, ScalarProductSpec64,
};
use report::{render_batch, VerificationReport};

/// Residual threshold for the `rf` command's success exit.
const RF_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Parser)]
#[command(name = "bihilbert", about = "Bicomplex algebra and Hilbert-module toolbox", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a bicomplex expression and print its Cartesian and
    /// idempotent JSON forms.
    ///
    /// Grammar: real literals, i1, i2, j, e1, e2, + - * /, ^n,
    /// conj1/conj2/conj3(..), sqrt(..), parentheses.
    Eval {
        expr: String,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        /// Suite name, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Master seed; BIHILBERT_SEED overrides the default.
        #[arg(long, env = "BIHILBERT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        dim: usize,
        /// Machine report only (suppresses the human summary on stderr).
        #[arg(long)]
        json: bool,
    },
    /// Orthonormalize the kets of a JSON file {"space": .., "kets": [..]}
    /// and write the resulting orthonormal system.
    GramSchmidt {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Apply the Riesz-Fischer coefficient map. The input holds a full
    /// orthonormal system plus either a ket (mapped forward) or a
    /// sequence (mapped back); prints the image and the residual.
    Rf {
        #[arg(long)]
        input: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NullCone | Error::NullConeBreakdown { .. } => 3,
            _ => 2,
        };
        Failure::new(code, err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval { expr } => cmd_eval(&expr),
        Command::Verify {
            suite,
            trials,
            seed,
            dim,
            json,
        } => cmd_verify(&suite, trials, seed, dim, json),
        Command::GramSchmidt { input, output } => cmd_gram_schmidt(&input, &output),
        Command::Rf { input } => cmd_rf(&input),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

#[derive(Serialize)]
struct EvalOutput {
    cartesian: Bicomplex64,
    idempotent: IdempotentOutput,
}

#[derive(Serialize)]
struct IdempotentOutput {
    h1: bihilbert::Complex64,
    h2: bihilbert::Complex64,
}

fn cmd_eval(input: &str) -> Result<u8, Failure> {
    let value = expr::eval(input).map_err(|e| match e {
        expr::EvalError::NullCone => Failure::new(3, e.to_string()),
        expr::EvalError::Parse(_) => Failure::new(2, e.to_string()),
    })?;
    let pair = value.to_idempotent();
    let out = EvalOutput {
        cartesian: value,
        idempotent: IdempotentOutput {
            h1: pair.h1,
            h2: pair.h2,
        },
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(0)
}

fn cmd_verify(suite: &str, trials: u64, seed: u64, dim: usize, json: bool) -> Result<u8, Failure> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite
            .parse::<Suite>()
            .map_err(|e| Failure::new(2, e.to_string()))?]
    };
    let cfg = SuiteConfig { trials, seed, dim };

    let mut reports = Vec::with_capacity(suites.len());
    let mut all_passed = true;
    for s in suites.iter().copied() {
        let start = Instant::now();
        let outcome = run_suite(s, &cfg);
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        all_passed &= outcome.passed();
        if !json {
            eprintln!(
                "{:<18} {} (failures {}, max violation {:.3e}, tolerance {:.0e})",
                s.name(),
                if outcome.passed() { "pass" } else { "FAIL" },
                outcome.failures,
                outcome.max_violation,
                s.tolerance(),
            );
        }
        reports.push(VerificationReport::new(&outcome, seed, elapsed_ms));
    }

    if reports.len() == 1 {
        println!("{}", reports[0].render());
    } else {
        println!("{}", render_batch(&reports));
    }
    Ok(if all_passed { 0 } else { 1 })
}

#[derive(Deserialize)]
struct GramSchmidtInput {
    space: ScalarProductSpec64,
    kets: Vec<Ket64>,
}

fn cmd_gram_schmidt(input: &Path, output: &Path) -> Result<u8, Failure> {
    let text = read_file(input)?;
    let parsed: GramSchmidtInput = parse_json(&text)?;
    let system = gram_schmidt(parsed.space, &parsed.kets).map_err(|err| {
        if let Error::NullConeBreakdown { index } = err {
            eprintln!("breakdown index: {index}");
        }
        Failure::from(err)
    })?;
    // serialize fully before touching the output path, so a failure never
    // leaves a partial file behind
    let rendered = serde_json::to_string_pretty(&system).expect("serializable");
    std::fs::write(output, rendered.as_bytes())
        .map_err(|e| Failure::new(4, format!("cannot write {}: {e}", output.display())))?;
    Ok(0)
}

#[derive(Deserialize)]
struct RfInput {
    system: OrthonormalSystem64,
    #[serde(default)]
    ket: Option<Ket64>,
    #[serde(default)]
    sequence: Option<BicomplexSequence64>,
}

#[derive(Serialize)]
struct RfForwardOutput {
    sequence: BicomplexSequence64,
    isometry_residual: f64,
}

#[derive(Serialize)]
struct RfInverseOutput {
    ket: Ket64,
    round_trip_residual: f64,
}

fn cmd_rf(input: &Path) -> Result<u8, Failure> {
    let text = read_file(input)?;
    let parsed: RfInput = parse_json(&text)?;
    let map = RieszFischerMap64::new(parsed.system)?;

    let residual = match (parsed.ket, parsed.sequence) {
        (Some(psi), None) => {
            let sequence = map.forward(&psi)?;
            let residual = map.isometry_residual(&psi)?;
            let out = RfForwardOutput {
                sequence,
                isometry_residual: residual,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            residual
        }
        (None, Some(s)) => {
            let ket = map.inverse(&s)?;
            let image = map.forward(&ket)?;
            let diff: f64 = image
                .values()
                .iter()
                .zip(s.values())
                .map(|(&a, &b)| (a - b).norm_sqr())
                .sum();
            let residual = diff.sqrt();
            let out = RfInverseOutput {
                ket,
                round_trip_residual: residual,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            residual
        }
        _ => {
            return Err(Failure::new(
                2,
                "input must hold exactly one of `ket` or `sequence`",
            ));
        }
    };
    Ok(if residual <= RF_RESIDUAL_TOL { 0 } else { 1 })
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(4, format!("cannot read {}: {e}", path.display())))
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::new(2, e.to_string()))
}
