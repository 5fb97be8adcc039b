use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coideal_cli::{cmd_classify, cmd_ls, cmd_roots, cmd_strata, cmd_verify, cmd_weyl, CliError, Format, RunConfig};

#[derive(Parser)]
#[command(name = "coideal", version, about = "Strata, characters and coideal checks for U+[w]")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

#[derive(Args)]
struct Common {
    /// Cartan type such as A2, B3 or A1xA1.
    #[arg(long = "type", value_name = "TYPE")]
    type_name: Option<String>,
    /// File holding a Cartan matrix, as rows of integers or a JSON array.
    #[arg(long, value_name = "PATH", conflicts_with = "type_name")]
    cartan_file: Option<PathBuf>,
    /// `w0`, `all`, or a reduced word such as `1,2,1`.
    #[arg(long, default_value = "w0")]
    word: String,
    /// Height bound for U+ computations.
    #[arg(long)]
    height: Option<u32>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Positive roots.
    Roots(Common),
    /// Elements with lengths and inversion sets.
    Weyl(Common),
    /// The strata of characters of U+[w].
    Strata(Common),
    /// Classification report for the selected elements.
    Classify(Common),
    /// The straightening relation for a pair of PBW root vectors (1-based).
    Ls {
        #[command(flatten)]
        common: Common,
        i: usize,
        j: usize,
    },
    /// Runs self-check suites; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn config(c: &Common, suite: &str) -> Result<RunConfig, CliError> {
    let cartan = match &c.cartan_file {
        Some(p) => {
            Some(std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?)
        }
        None => None,
    };
    let format = match c.format {
        FormatArg::Json => Format::Json,
        FormatArg::Tsv => Format::Tsv,
    };
    RunConfig::new(c.type_name.as_deref(), cartan.as_deref(), &c.word, c.height, format, suite)
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let ok = |s: String| Ok((s, true));
    match cli.cmd {
        Cmd::Roots(c) => ok(cmd_roots(&config(&c, "all")?)?),
        Cmd::Weyl(c) => ok(cmd_weyl(&config(&c, "all")?)?),
        Cmd::Strata(c) => ok(cmd_strata(&config(&c, "all")?)?),
        Cmd::Classify(c) => ok(cmd_classify(&config(&c, "all")?)?),
        Cmd::Ls { common, i, j } => ok(cmd_ls(&config(&common, "all")?, i, j)?),
        Cmd::Verify { common, suite } => cmd_verify(&config(&common, &suite)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
