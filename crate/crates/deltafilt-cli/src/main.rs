//! Command-line frontend: loads JSON workspaces, runs validations and the
//! filtration pipeline, and emits machine-readable reports.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a semantic check failed
//! (axiom violation, non-unique chains, cap exceeded, bad idempotent),
//! 2 = input error (unreadable file, malformed JSON, unknown names).

mod commands;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "deltafilt", version, about = "Exact filtration calculus for homological systems over quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputOpts {
    /// Write the JSON report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print a human-readable summary instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Omit the timestamp field, making reports byte-identical across runs.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the homological-system axioms of a workspace.
    Validate {
        path: PathBuf,
        /// Validate only this system (default: every system in the file).
        #[arg(long)]
        system: Option<String>,
        /// Also check the primed axioms under every linearization.
        #[arg(long)]
        all_linearizations: bool,
        /// Cap on the number of linearizations to enumerate.
        #[arg(long, default_value_t = 720)]
        cap: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Quotient a preorder and produce linearizations.
    Linearize {
        /// Preorder JSON ({"carrier": [...], "pairs": [[a, b], ...]}).
        path: Option<PathBuf>,
        /// Use the divisibility preorder on {1..N} instead of a file.
        #[arg(long, value_name = "N")]
        divisibility: Option<u64>,
        /// With --divisibility: the prime-length lexicographic order.
        #[arg(long)]
        q_lex: bool,
        /// Pull the q-lex order back through the inverter injection: n m bound.
        #[arg(long, num_args = 3, value_names = ["N", "M", "BOUND"])]
        inverter: Option<Vec<u64>>,
        /// List every linear extension (bounded by --cap).
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 720)]
        cap: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Dimension and basis of Hom(M, N).
    Hom {
        path: PathBuf,
        m: String,
        n: String,
        /// Cross-check dim Hom − dim Ext¹ against the Euler form.
        #[arg(long)]
        euler: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Dimension of Ext¹(M, N), with the basis of the Hom side of its
    /// presentation kernel.
    Ext {
        path: PathBuf,
        m: String,
        n: String,
        #[arg(long)]
        euler: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run the filtration pipeline: validate, slim, sort, merge.
    Filter {
        path: PathBuf,
        #[arg(long)]
        system: String,
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        filtration: Option<String>,
        /// Second filtration of the same module; check the ordered chains agree.
        #[arg(long)]
        check_unique: Option<String>,
        /// Re-derive the ordered chain under every linearization and compare.
        #[arg(long)]
        all_linearizations: bool,
        #[arg(long, default_value_t = 720)]
        cap: usize,
        /// Sort a named symbolic filtration instead of a concrete one.
        #[arg(long)]
        symbolic: Option<String>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Split an ordered filtration along an idempotent endomorphism.
    Split {
        path: PathBuf,
        #[arg(long)]
        system: String,
        #[arg(long)]
        module: String,
        #[arg(long)]
        filtration: String,
        #[arg(long)]
        idempotent: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Krull–Schmidt decomposition of a module.
    Decompose {
        path: PathBuf,
        #[arg(long)]
        module: String,
        /// Label factors by the Δ's of this system when they match.
        #[arg(long)]
        system: Option<String>,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn main() {
    let cli = Cli::parse();
    let (output, result) = match cli.command {
        Command::Validate {
            path,
            system,
            all_linearizations,
            cap,
            output,
        } => (
            output,
            commands::validate(&path, system.as_deref(), all_linearizations, cap),
        ),
        Command::Linearize {
            path,
            divisibility,
            q_lex,
            inverter,
            enumerate,
            cap,
            output,
        } => (
            output,
            commands::linearize(
                path.as_deref(),
                divisibility,
                q_lex,
                inverter.as_deref(),
                enumerate,
                cap,
            ),
        ),
        Command::Hom {
            path,
            m,
            n,
            euler,
            output,
        } => (output, commands::hom_or_ext(&path, &m, &n, euler, false)),
        Command::Ext {
            path,
            m,
            n,
            euler,
            output,
        } => (output, commands::hom_or_ext(&path, &m, &n, euler, true)),
        Command::Filter {
            path,
            system,
            module,
            filtration,
            check_unique,
            all_linearizations,
            cap,
            symbolic,
            output,
        } => (
            output,
            commands::filter(
                &path,
                &system,
                module.as_deref(),
                filtration.as_deref(),
                check_unique.as_deref(),
                all_linearizations,
                cap,
                symbolic.as_deref(),
            ),
        ),
        Command::Split {
            path,
            system,
            module,
            filtration,
            idempotent,
            output,
        } => (
            output,
            commands::split(&path, &system, &module, &filtration, &idempotent),
        ),
        Command::Decompose {
            path,
            module,
            system,
            output,
        } => (output, commands::decompose(&path, &module, system.as_deref())),
    };
    let code = match result {
        Ok(cmd_output) => {
            if let Err(e) = emit(&output, &cmd_output) {
                eprintln!("error: {e}");
                2
            } else if cmd_output.pass {
                0
            } else {
                1
            }
        }
        Err(commands::CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(commands::CliError::Semantic(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    };
    std::process::exit(code);
}

fn emit(opts: &OutputOpts, out: &commands::CmdOutput) -> std::io::Result<()> {
    let mut report = out.report.clone();
    if !opts.no_timestamp {
        if let serde_json::Value::Object(map) = &mut report {
            let now = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            map.insert("timestamp".into(), serde_json::json!(now));
        }
    }
    let text = if opts.pretty {
        out.pretty.clone()
    } else {
        serde_json::to_string_pretty(&report).expect("report serializes")
    };
    match &opts.out {
        Some(path) => std::fs::write(path, text + "\n"),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
