use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use latscarf::cli::{parse_spec, parse_vector, run_command, verify_fixture, Command, ComplexKind};
use latscarf::scarf::StrongMode;
use latscarf::{Error, Field};

#[derive(Parser)]
#[command(name = "latscarf", version, about = "Fibers, Betti numbers and Scarf complexes of lattice ideals")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the monomials of one fiber.
    Fiber {
        spec: PathBuf,
        /// Comma-separated degree (semigroup degree, or exponent vector for lattice input).
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
    /// Multigraded Betti numbers of every class up to the bound.
    Betti {
        spec: PathBuf,
        #[arg(long)]
        bound: i64,
        /// `q` or `fp:P` for a prime P.
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Basic fiber components and their poset.
    Components {
        spec: PathBuf,
        #[arg(long)]
        bound: i64,
    },
    /// The generalized algebraic Scarf complex or one of its subcomplexes.
    Complex {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "generalized")]
        kind: Kind,
        #[arg(long)]
        bound: i64,
        #[arg(long, value_enum, default_value = "strict")]
        mode: Mode,
    },
    /// Indispensable binomials.
    Indispensable {
        spec: PathBuf,
        #[arg(long)]
        bound: i64,
    },
    /// A minimal binomial generating set.
    Generators {
        spec: PathBuf,
        #[arg(long)]
        bound: i64,
    },
    /// Check a bundled example against its known invariants.
    Verify {
        #[arg(long)]
        fixture: String,
    },
    /// Write the 1-skeleton of a fiber's gcd complex as DOT.
    ExportDot {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Generalized,
    Scarf,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    Paper,
}

fn parse_field(text: &str) -> Result<Field, Error> {
    if text == "q" {
        return Ok(Field::Rational);
    }
    let p = text
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Error::Invalid {
            field: "field".into(),
            message: format!("expected `q` or `fp:P`, got `{text}`"),
        })?;
    Field::prime(p)
}

fn run(cli: Cli) -> Result<bool, Error> {
    let (spec, command, out) = match cli.command {
        Cmd::Verify { fixture } => {
            let v = verify_fixture(&fixture)?;
            println!("{}", serde_json::to_string_pretty(&v.to_json()).expect("plain JSON"));
            return Ok(v.passed());
        }
        Cmd::Fiber { spec, degree } => (spec, Command::Fiber { degree: parse_vector(&degree)? }, None),
        Cmd::Betti { spec, bound, field } => {
            let field = parse_field(&field)?;
            (spec, Command::Betti { bound, field }, None)
        }
        Cmd::Components { spec, bound } => (spec, Command::Components { bound }, None),
        Cmd::Complex { spec, kind, bound, mode } => {
            let kind = match kind {
                Kind::Generalized => ComplexKind::Generalized,
                Kind::Scarf => ComplexKind::Scarf,
                Kind::Strong => ComplexKind::Strong,
            };
            let mode = match mode {
                Mode::Strict => StrongMode::Strict,
                Mode::Paper => StrongMode::Paper,
            };
            (spec, Command::Complex { kind, bound, mode }, None)
        }
        Cmd::Indispensable { spec, bound } => (spec, Command::Indispensable { bound }, None),
        Cmd::Generators { spec, bound } => (spec, Command::Generators { bound }, None),
        Cmd::ExportDot { spec, degree, out } => {
            (spec, Command::ExportDot { degree: parse_vector(&degree)? }, Some(out))
        }
    };
    let spec = parse_spec(&spec)?;
    let mut report = run_command(&spec, &command)?;
    if let Some(out) = out {
        let dot = report.value["result"]["dot"].take();
        std::fs::write(&out, dot.as_str().unwrap_or_default()).map_err(|e| Error::Invalid {
            field: "out".into(),
            message: format!("{}: {e}", out.display()),
        })?;
        report.value["result"]["dot"] = serde_json::json!(out.display().to_string());
    }
    println!("{}", report.to_json());
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
