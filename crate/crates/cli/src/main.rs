//! `ddet`: generate, verify and replay double determinantal ideals.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ddet::algebra::{Field, OrderChoice, DEFAULT_PRIME};

#[derive(Parser, Debug)]
#[command(name = "ddet", version, about = "Exact verification for double determinantal ideals")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// QQ, GF(p) or a prime p.
    #[arg(long, global = true, default_value_t = Field::Prime(DEFAULT_PRIME))]
    pub field: Field,
    /// v-reading, block-column or reversed.
    #[arg(long, global = true, default_value_t = OrderChoice::VReading)]
    pub order: OrderChoice,
    #[arg(long, global = true, default_value_t = 6)]
    pub max_degree: u32,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Accepted for harness compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the main output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
}

/// Where the ideal comes from.
#[derive(Args, Debug, Clone, Default)]
pub struct IdealSource {
    /// JSON ideal specification.
    #[arg(long, conflicts_with = "polys")]
    pub spec: Option<std::path::PathBuf>,
    /// Polynomial text file.
    #[arg(long)]
    pub polys: Option<std::path::PathBuf>,
    #[arg(long, requires_all = ["n", "r", "s", "t"])]
    pub m: Option<u16>,
    #[arg(long)]
    pub n: Option<u16>,
    #[arg(long)]
    pub r: Option<u16>,
    #[arg(long)]
    pub s: Option<u16>,
    #[arg(long)]
    pub t: Option<u16>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the natural generators in the polynomial text format.
    Gen(IdealSource),
    /// Check the Gröbner property of the generators.
    VerifyGb {
        #[command(flatten)]
        source: IdealSource,
        /// Run Buchberger completion instead of stopping at the first witness.
        #[arg(long)]
        complete: bool,
        #[arg(long, default_value_t = 1_000_000)]
        max_spairs: usize,
        #[arg(long, default_value_t = 10_000)]
        max_basis: usize,
    },
    /// Print the diagonal-monomial ideal after checking it matches the leading terms.
    Initial(IdealSource),
    /// Stanley–Reisner complex of the initial (or given monomial) ideal.
    Complex(IdealSource),
    /// Closed-form height and dimension, optionally against the computed height.
    Dims {
        #[arg(long)]
        m: u16,
        #[arg(long)]
        n: u16,
        #[arg(long)]
        r: u16,
        #[arg(long)]
        s: u16,
        #[arg(long)]
        t: u16,
        #[arg(long)]
        computed: bool,
        #[arg(long)]
        proof_variant: bool,
    },
    /// Replay the liaison induction and emit the certificate trace.
    Replay {
        #[command(flatten)]
        source: IdealSource,
        /// canonical or exhaustive-first-K.
        #[arg(long, default_value = "canonical")]
        path: String,
    },
    /// Hilbert function values up to --max-degree.
    Hilbert {
        #[command(flatten)]
        source: IdealSource,
        /// macaulay, monomial or both.
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Run the acceptance grid and print a summary table.
    Grid {
        #[arg(long, default_value_t = 3)]
        max_m: u16,
        #[arg(long, default_value_t = 3)]
        max_n: u16,
        #[arg(long, default_value_t = 3)]
        max_r: u16,
        /// Directory for per-case JSON reports.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

/// Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input, 3 resource limit.
fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.config.threads > 0 {
        // a second initialisation only happens in tests; ignore it
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.config.threads)
            .build_global();
    }
    match commands::run(&cli.config, cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
