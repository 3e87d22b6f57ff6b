//! `veqlab` — file-driven workbench for twisted Van Vleck and d'Alembert
//! functional equations on finite semigroups, over exact cyclotomic
//! arithmetic.
//!
//! Exit codes: 0 success, 1 validation or verification failure, 2 when the
//! brute-force crosscheck disagrees with the closed-form enumeration.

mod commands;
mod instance_file;
mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Flags;
use veqlab_core::engine::DEFAULT_BRUTE_ORDER_CAP;
use veqlab_core::morphism::DEFAULT_MORPHISM_CAP;

#[derive(Parser)]
#[command(
    name = "veqlab",
    version,
    about = "Construct, enumerate, and exhaustively verify solutions of twisted \
             Van Vleck and d'Alembert functional equations on finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural checks: table, z0, morphism, mu, full instance validation
    Validate(CommonArgs),
    /// Identity element, center, morphism validity (or discovery)
    Analyze(CommonArgs),
    /// Enumerate all characters and the admissible twists
    Characters(CommonArgs),
    /// Enumerate solutions, with identity reports and the d'Alembert bridge
    Solve(CommonArgs),
    /// Check the file's `f:` table against the instance's equation
    Verify(CommonArgs),
    /// Compare the closed-form enumeration against the brute-force oracle
    Crosscheck(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Instance file
    file: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Add approximate float renderings alongside the exact literals
    #[arg(long)]
    float: bool,
    /// Root-of-unity order of the brute-force value grid (default: lcm of
    /// element periods)
    #[arg(long)]
    grid_order: Option<u32>,
    /// Largest carrier order for morphism discovery
    #[arg(long, default_value_t = DEFAULT_MORPHISM_CAP)]
    morphism_cap: usize,
    /// Largest carrier order the brute-force oracle accepts
    #[arg(long, default_value_t = DEFAULT_BRUTE_ORDER_CAP)]
    brute_cap: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() {
    std::process::exit(run());
}

type Runner = fn(&instance_file::InstanceFile, &Flags) -> Result<(report::Report, i32), String>;

fn run() -> i32 {
    let cli = Cli::parse();
    let (args, runner): (&CommonArgs, Runner) = match &cli.command {
        Cmd::Validate(a) => (a, |f, fl| Ok(commands::run_validate(f, fl))),
        Cmd::Analyze(a) => (a, commands::run_analyze),
        Cmd::Characters(a) => (a, commands::run_characters),
        Cmd::Solve(a) => (a, commands::run_solve),
        Cmd::Verify(a) => (a, commands::run_verify),
        Cmd::Crosscheck(a) => (a, commands::run_crosscheck),
    };

    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("veqlab: cannot read {}: {e}", args.file.display());
            return 1;
        }
    };
    let label = args
        .file
        .file_stem()
        .map_or_else(|| "instance".to_string(), |s| s.to_string_lossy().into_owned());
    let parsed = match instance_file::parse_instance(&label, &text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("veqlab: {}: {e}", args.file.display());
            return 1;
        }
    };
    let flags = Flags {
        float: args.float,
        grid_order: args.grid_order,
        morphism_cap: args.morphism_cap,
        brute_cap: args.brute_cap,
    };
    match runner(&parsed, &flags) {
        Ok((report, code)) => {
            let rendered = match args.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            print!("{rendered}");
            code
        }
        Err(msg) => {
            eprintln!("veqlab: {msg}");
            1
        }
    }
}
