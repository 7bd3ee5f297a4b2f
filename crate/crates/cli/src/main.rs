//! `wpi`: weighted path ideals of graphs from the command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wpi_core::{
    build_path_ideal, cm_auto, colon, enumerate_r_paths, is_cm_rational_with_guard, is_unmixed,
    krull_dimension_of_quotient, m_irreducible_decompose, minimal_covers, polarize, Combiner,
    Error, Monomial, MonomialIdeal, WeightedGraph, DEFAULT_SIZE_GUARD,
};

#[derive(Parser)]
#[command(name = "wpi", version, about = "Weighted r-path ideals of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Graph file, JSON `{"n": N, "edges": [[i, j, w], ...]}` or text `n N` + `i j w` lines
    #[arg(long)]
    graph: PathBuf,
    /// Path length (number of edges)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
    /// Combiner for interior exponents
    #[arg(long, default_value = "max", value_parser = parse_combiner)]
    f: Combiner,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical r-paths
    Paths(Common),
    /// Minimal generators of the path ideal
    Gens(Common),
    /// Irredundant m-irreducible decomposition
    Decompose(Common),
    /// Minimal weighted r-path vertex covers
    Covers(Common),
    /// Whether all minimal covers have the same size
    Unmixed(Common),
    /// Krull dimension of the quotient ring
    Dim(Common),
    /// Cohen-Macaulay verdict with witness
    Cm {
        #[command(flatten)]
        common: Common,
        /// Decide with Reisner's criterion over Q instead
        #[arg(long)]
        oracle: bool,
    },
    /// Polarization of the path ideal
    Polarize(Common),
    /// Colon ideal (I : m)
    Colon {
        #[command(flatten)]
        common: Common,
        /// Monomial such as `X1^2*X3`
        #[arg(long)]
        by: String,
    },
}

fn parse_combiner(s: &str) -> Result<Combiner, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure in reading input (exit 2) or in the computation itself (exit 1).
enum Failure {
    Input(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn input_error(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

struct Output {
    text: String,
    json: Value,
}

fn load(common: &Common) -> Result<(WeightedGraph, usize), Failure> {
    let raw = std::fs::read_to_string(&common.graph)
        .map_err(|e| input_error(format!("cannot read {}: {e}", common.graph.display())))?;
    let g = WeightedGraph::parse(&raw).map_err(input_error)?;
    let r = usize::try_from(common.r).map_err(input_error)?;
    Ok((g, r))
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({ "generators": i.generators().iter().map(Monomial::to_string).collect::<Vec<_>>() })
}

fn size_guard() -> Result<usize, Failure> {
    match std::env::var("WPI_SIZE_GUARD") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| input_error(format!("WPI_SIZE_GUARD must be an integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_SIZE_GUARD),
    }
}

fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Paths(c) => {
            let (g, r) = load(c)?;
            let paths = enumerate_r_paths(&g, r);
            let text = paths.iter().map(|p| format!("{p}\n")).collect();
            let json = json!({ "paths": paths.iter().map(|p| p.vertices()).collect::<Vec<_>>() });
            Ok(Output { text, json })
        }
        Command::Gens(c) => {
            let (g, r) = load(c)?;
            let i = build_path_ideal(&g, c.f, r)?;
            Ok(Output {
                text: format!("{i}\n"),
                json: ideal_json(&i),
            })
        }
        Command::Decompose(c) => {
            let (g, r) = load(c)?;
            let comps = m_irreducible_decompose(&build_path_ideal(&g, c.f, r)?)?;
            let text = comps.iter().map(|p| format!("{p}\n")).collect();
            let json = json!({ "irredundant": true, "components": comps });
            Ok(Output { text, json })
        }
        Command::Covers(c) => {
            let (g, r) = load(c)?;
            let covers = minimal_covers(&g, c.f, r)?;
            let text = covers.iter().map(|w| format!("{w}\n")).collect();
            Ok(Output {
                text,
                json: json!({ "covers": covers }),
            })
        }
        Command::Unmixed(c) => {
            let (g, r) = load(c)?;
            let u = is_unmixed(&g, c.f, r)?;
            Ok(Output {
                text: format!("{u}\n"),
                json: json!({ "unmixed": u }),
            })
        }
        Command::Dim(c) => {
            let (g, r) = load(c)?;
            let d = krull_dimension_of_quotient(&build_path_ideal(&g, c.f, r)?)?;
            Ok(Output {
                text: format!("{d}\n"),
                json: json!({ "dim": d }),
            })
        }
        Command::Cm { common: c, oracle } => {
            let (g, r) = load(c)?;
            if *oracle {
                let guard = size_guard()?;
                let is_cm = is_cm_rational_with_guard(&build_path_ideal(&g, c.f, r)?, guard)?;
                let verdict = if is_cm {
                    "Cohen-Macaulay"
                } else {
                    "not Cohen-Macaulay"
                };
                return Ok(Output {
                    text: format!("{verdict}; Reisner criterion over Q\n"),
                    json: json!({ "is_cm": is_cm, "method": "reisner" }),
                });
            }
            if c.f != Combiner::Max {
                return Err(Error::NoCharacterization(format!("f = {}", c.f)).into());
            }
            let v = cm_auto(&g, r)?;
            let witness = serde_json::to_string(&v.witness).expect("witness serializes");
            Ok(Output {
                text: format!("{v}\n{witness}\n"),
                json: serde_json::to_value(&v).expect("verdict serializes"),
            })
        }
        Command::Polarize(c) => {
            let (g, r) = load(c)?;
            let p = polarize(&build_path_ideal(&g, c.f, r)?)?;
            let name = |k: usize| p.variable_name(k);
            let gens: Vec<String> = p
                .ideal
                .generators()
                .iter()
                .map(|m| m.display_with(name))
                .collect();
            let mut text = String::new();
            if gens.is_empty() {
                text.push_str("(0)\n");
            } else {
                writeln!(text, "({})", gens.join(", ")).expect("writing to a String");
            }
            let variables: Vec<String> = (1..=p.variables.len()).map(name).collect();
            Ok(Output {
                text,
                json: json!({ "variables": variables, "generators": gens }),
            })
        }
        Command::Colon { common: c, by } => {
            let (g, r) = load(c)?;
            let m = Monomial::parse(by, g.universe()).map_err(input_error)?;
            let q = colon(&build_path_ideal(&g, c.f, r)?, &m)?;
            Ok(Output {
                text: format!("{q}\n"),
                json: ideal_json(&q),
            })
        }
    }
}

fn format_of(command: &Command) -> Format {
    match command {
        Command::Paths(c)
        | Command::Gens(c)
        | Command::Decompose(c)
        | Command::Covers(c)
        | Command::Unmixed(c)
        | Command::Dim(c)
        | Command::Polarize(c)
        | Command::Cm { common: c, .. }
        | Command::Colon { common: c, .. } => c.format,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            match format_of(&cli.command) {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
