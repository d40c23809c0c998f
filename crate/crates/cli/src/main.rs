//! `kummer`: every module as a subcommand, with a JSON report on stdout.
//!
//! Exit status is 0 when every check passes, 1 when some check fails and 2 on
//! invalid input. `KUMMER_THREADS` sets the sweep thread count.

mod commands;
mod input;

use clap::{Parser, Subcommand};
use kummer_core::error::Result;
use kummer_core::report::Report;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kummer",
    version,
    about = "Exact Kummer-theoretic computations with oracle cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The finite-field tower F_q ⊆ L ⊆ M for μ_{p^n}.
    Tower {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
    /// Eigendecomposition of a module under a cyclic group of order s | p−1.
    Eigen {
        /// Orders of the cyclic parts, e.g. "9,3".
        #[arg(long)]
        module: String,
        /// Generator action, rows separated by ';', e.g. "2,0;0,4".
        #[arg(long, allow_hyphen_values = true)]
        action: String,
        #[arg(long)]
        s: u64,
    },
    /// H^1 and H^2 of a cyclic group of order N, checked against cochain enumeration.
    Cohom {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        module: String,
        #[arg(long, allow_hyphen_values = true)]
        action: String,
    },
    /// The symbol algebra (a, b)_ζ of degree m and its relabelings.
    Symbol {
        /// "Q" for Q(ζ_m), or a finite field such as "F_11" or "F_2^4".
        #[arg(long)]
        field: String,
        #[arg(long)]
        m: u64,
        /// Coefficients of 1, ζ, ζ², …, e.g. "3,1" for 3 + ζ.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Relabeling exponents; defaults to every k in 1..m prime to m.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
    },
    /// Valuation data for a valued-field descriptor file.
    Valuation {
        #[arg(long)]
        descriptor: String,
    },
    /// Character-subgroup checks on the built-in group catalog.
    Oracle {
        /// A group name such as "C6", "S3" or "D10"; the whole catalog if absent.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value = "2,3,4,5")]
        exponents: String,
        /// With --s, also run the Sylow criteria for |G| = s·p^k.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
    },
    /// A named acceptance sweep, or "all".
    Sweep {
        #[arg(long)]
        suite: String,
    },
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::Tower { q, p, n } => commands::tower(q, p, n),
        Command::Eigen { module, action, s } => commands::eigen(&module, &action, s),
        Command::Cohom { n, module, action } => commands::cohom(n, &module, &action),
        Command::Symbol { field, m, a, b, k } => commands::symbol(&field, m, &a, &b, k.as_deref()),
        Command::Valuation { descriptor } => {
            let text = std::fs::read_to_string(&descriptor).map_err(|e| {
                kummer_core::error::Error::InvalidDescriptor(format!("{descriptor}: {e}"))
            })?;
            commands::valuation(&descriptor, &text)
        }
        Command::Oracle {
            group,
            exponents,
            p,
            s,
        } => commands::oracle(group.as_deref(), &exponents, p, s),
        Command::Sweep { suite } => commands::sweep(&suite),
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(v) = std::env::var("KUMMER_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .map_err(|_| format!("KUMMER_THREADS must be a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("kummer: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(report) => {
            // A closed pipe is not a failure of the computation.
            let _ = writeln!(std::io::stdout().lock(), "{}", report.to_json());
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("kummer: {e}");
            ExitCode::from(2)
        }
    }
}
