use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use preproj::cli::{load_config, run_command, Command, OutputFormat};
use preproj::field::FieldSpec;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Check,
    Algebra,
    Weyl,
    Stt,
    MutationGraph,
    Verify,
}

/// Generalized preprojective algebras and their support τ-tilting modules.
#[derive(Debug, Parser)]
#[command(name = "preproj", version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Path to a JSON config, or the JSON itself.
    #[arg(long)]
    config: String,
    #[arg(long)]
    json: bool,
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    /// List basis paths (algebra).
    #[arg(long)]
    basis: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// `rational` or `fp:<p>`.
    #[arg(long)]
    field: Option<String>,
    /// Largest Weyl group to enumerate.
    #[arg(long)]
    cap: Option<usize>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut cfg = match load_config(&args.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(field) = &args.field {
        match field.parse::<FieldSpec>() {
            Ok(f) => cfg.field = f,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(cap) = args.cap {
        if cap == 0 {
            eprintln!("error: --cap must be positive");
            return ExitCode::from(2);
        }
        cfg.weyl_cap = cap;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    cfg.show_basis = args.basis;
    cfg.format = if args.json {
        OutputFormat::Json
    } else if args.dot {
        OutputFormat::Dot
    } else {
        OutputFormat::Text
    };
    let command = match args.command {
        Cmd::Check => Command::Check,
        Cmd::Algebra => Command::Algebra,
        Cmd::Weyl => Command::Weyl,
        Cmd::Stt => Command::Stt,
        Cmd::MutationGraph => Command::MutationGraph,
        Cmd::Verify => Command::Verify,
    };
    let out = run_command(&cfg, command);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
