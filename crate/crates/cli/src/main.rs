//! `eigencubic`: eigenschemes of cubic forms from the command line.

mod commands;
mod input;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eigencubic_core::solve::SolverConfig;
use eigencubic_core::Error;
use thiserror::Error;

use commands::GrassOp;
use input::{read_or_inline, FieldChoice, Source};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("the regular eigenscheme has dimension {0}; run `eigencubic analyze` for its ideals")]
    PositiveDimension(i64),
    #[error("{failed} of {total} cells do not match")]
    Mismatch { failed: usize, total: usize },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Mismatch { .. } => 1,
            CliError::PositiveDimension(_) => 4,
            CliError::Core(e) => match e {
                Error::Syntax { .. }
                | Error::UnknownVariable(_)
                | Error::InvalidContext(_)
                | Error::NotSquarefree
                | Error::ConstantModulus
                | Error::InvalidRootIndex { .. } => 2,
                Error::NotZeroDimensional(_) => 4,
                Error::NoConvergence | Error::SingularMatrix => 5,
                _ => 3,
            },
        }
    }
}

#[derive(Parser)]
#[command(name = "eigencubic", version, about = "Eigenschemes of ternary and quaternary cubics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args)]
struct Options {
    /// rational, gaussian, theta, theta-gaussian or ext:<minimal polynomial in t>
    #[arg(long, global = true, default_value = "rational")]
    field: String,
    /// Complex root of an ext: minimal polynomial that the generator denotes
    #[arg(long, global = true, default_value_t = 0)]
    root: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Residual tolerance of computed points
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Imaginary-part tolerance for calling a point real
    #[arg(long, global = true, default_value_t = 1e-6)]
    real_tol: f64,
    /// Number n of the ambient P^n (default: largest xk index, at least 2)
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Use a built-in instance such as table2:delta-1-eps0 instead of the input
    #[arg(long, global = true)]
    paper_example: Option<String>,
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Ideals, dimensions and degrees of E, the eigenpair scheme, Irr and Reg
    Analyze { input: Option<String> },
    /// Regular eigenpoints of a cubic with finitely many of them
    Solve {
        input: Option<String>,
        /// Largest denominator tried when recovering exact coordinates
        #[arg(long, default_value_t = 1000)]
        max_den: u64,
    },
    /// Recompute a dimension table (1, 2) or the real count table (3)
    Tables {
        #[arg(value_parser = ["1", "2", "3", "all"])]
        which: String,
    },
    /// Eigenplanes in Gr(4, 15) and the binary Hurwitz comparison
    Grass {
        #[command(subcommand)]
        op: GrassCommand,
    },
    /// Cubics whose eigenscheme contains the given points
    Fit { points: String },
}

#[derive(Subcommand)]
enum GrassCommand {
    /// The 4 x 15 matrix of a tensor
    Plane { input: Option<String> },
    /// Plücker coordinates of a plane, in lexicographic subset order
    Pluecker { input: Option<String> },
    /// Whether a plane is the eigenplane of a tensor
    Check { input: Option<String> },
    /// The tensor of an eigenplane
    Recover { input: Option<String> },
    /// Whether a tensor or plane comes from a cubic
    #[command(name = "symmetric?", alias = "symmetric")]
    Symmetric { input: Option<String> },
    /// Eigendiscriminant of binary cubics against the restricted Hurwitz form
    BinaryHurwitz,
}

fn run(cli: Cli) -> Result<serde_json::Value, CliError> {
    let o = &cli.opts;
    let cfg = SolverConfig {
        seed: o.seed,
        residual_tol: o.tol,
        real_tol: o.real_tol,
        ..SolverConfig::default()
    };
    let source = |input: &Option<String>, min_n: usize| -> Result<Source, CliError> {
        let field = FieldChoice::parse(&o.field, o.root)?;
        Source::resolve(input.as_deref(), o.paper_example.as_deref(), field, o.n, min_n)
    };
    match &cli.command {
        Command::Analyze { input } => commands::cmd_analyze(&source(input, 2)?),
        Command::Solve { input, max_den } => {
            commands::cmd_solve(&source(input, 2)?, &cfg, *max_den).map_err(|e| match e {
                CliError::Core(Error::NotZeroDimensional(d)) => CliError::PositiveDimension(d),
                other => other,
            })
        }
        Command::Tables { which } => {
            let tables: Vec<u8> = match which.as_str() {
                "all" => vec![1, 2, 3],
                w => vec![w.parse().expect("value parser")],
            };
            let mut reports = Vec::new();
            let (mut failed, mut total) = (0, 0);
            for t in tables {
                let (v, f) = commands::cmd_tables(t, &cfg);
                failed += f;
                total += v["total"].as_u64().unwrap_or(0) as usize;
                reports.push(v);
            }
            let out = if reports.len() == 1 {
                reports.pop().expect("one report")
            } else {
                serde_json::json!({"schemaVersion": 1, "command": "tables", "tables": reports})
            };
            if failed > 0 {
                emit(&out, o.text);
                return Err(CliError::Mismatch { failed, total });
            }
            Ok(out)
        }
        Command::Grass { op } => {
            let (op, input) = match op {
                GrassCommand::BinaryHurwitz => return Ok(commands::cmd_binary_hurwitz()),
                GrassCommand::Plane { input } => (GrassOp::Plane, input),
                GrassCommand::Pluecker { input } => (GrassOp::Pluecker, input),
                GrassCommand::Check { input } => (GrassOp::Check, input),
                GrassCommand::Recover { input } => (GrassOp::Recover, input),
                GrassCommand::Symmetric { input } => (GrassOp::Symmetric, input),
            };
            commands::cmd_grass(op, &source(input, 3)?)
        }
        Command::Fit { points } => commands::cmd_fit(&read_or_inline(points)?, o.n),
    }
}

fn emit(v: &serde_json::Value, text: bool) {
    if text {
        print!("{}", render::text(v));
    } else {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = cli.opts.text && !cli.opts.json;
    match run(cli) {
        Ok(v) => {
            emit(&v, text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
