//! Command line front end: enumerate endomorphism monoids of the
//! supported constructions, run the named verification suites, and
//! export Cayley tables.

mod bundle;
mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bundle::{build_bundle, prediction, CategoryName, Construction};

#[derive(Parser)]
#[command(name = "partcat", version, about = "Partial morphism monoids over finite categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    CayleyCsv,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of an endomorphism monoid and basic facts
    /// about it.
    Enumerate {
        #[arg(long)]
        category: CategoryName,
        /// One of P, Q, Piter:k, Pquasi:k.
        #[arg(long)]
        construction: Construction,
        /// Size of the underlying object.
        #[arg(long)]
        object_size: u32,
        /// Refuse to enumerate monoids predicted to be larger than
        /// this.
        #[arg(long, default_value_t = 20000)]
        cap: u64,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_n: u32,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
    },
    /// Serialize an endomorphism monoid.
    Export {
        #[arg(long)]
        category: CategoryName,
        #[arg(long)]
        construction: Construction,
        #[arg(long)]
        object_size: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 20000)]
        cap: u64,
    },
}

fn cmd_enumerate(
    category: CategoryName,
    construction: Construction,
    object_size: u32,
    cap: u64,
) -> Result<(), String> {
    let bundle = build_bundle(category, construction, object_size, cap)?;
    for e in &bundle.elements {
        println!("{e}");
    }
    match prediction(category, construction, object_size) {
        Some(p) => {
            println!("elements: {} (closed form predicts {p})", bundle.len());
            if bundle.len() as u64 != p {
                return Err(format!(
                    "enumerated {} elements but the closed form predicts {p}",
                    bundle.len()
                ));
            }
        }
        None => println!("elements: {} (no closed form)", bundle.len()),
    }
    println!("idempotents: {}", bundle.idempotents.len());
    for (name, value) in &bundle.verdicts {
        println!("{name}: {value}");
    }
    Ok(())
}

fn cmd_verify(suite: &str, max_n: u32, max_k: usize) -> Result<(), String> {
    let checks = suites::run_suite(suite, max_n, max_k)?;
    let mut failed = 0usize;
    for (label, ok) in &checks {
        println!("{}: {}", label, if *ok { "PASS" } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(format!("{failed} of {} checks failed", checks.len()));
    }
    println!("all {} checks passed", checks.len());
    Ok(())
}

fn cmd_export(
    category: CategoryName,
    construction: Construction,
    object_size: u32,
    format: Format,
    out: Option<PathBuf>,
    cap: u64,
) -> Result<(), String> {
    let bundle = build_bundle(category, construction, object_size, cap)?;
    let payload = match format {
        Format::Json => bundle.to_json(),
        Format::CayleyCsv => bundle.to_cayley_csv(),
    };
    match out {
        Some(path) => fs::write(&path, payload)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{payload}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate {
            category,
            construction,
            object_size,
            cap,
        } => cmd_enumerate(category, construction, object_size, cap),
        Command::Verify {
            suite,
            max_n,
            max_k,
        } => cmd_verify(&suite, max_n, max_k),
        Command::Export {
            category,
            construction,
            object_size,
            format,
            out,
            cap,
        } => cmd_export(category, construction, object_size, format, out, cap),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
