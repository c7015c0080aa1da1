use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dimer_cli::commands::{self, Output};
use dimer_cli::input::fixtures_dir;
use dimer_cli::{CliError, SCHEMA_VERSION};
use dimer_core::Color;
use serde_json::json;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColorArg {
    White,
    Black,
}

/// Combinatorics of consistent dimer models on the disc.
///
/// A model argument is a JSON file path, a file in $DIMER_FIXTURES (with or
/// without `.json`), or a bundled fixture name such as `gr37` or `uniform-2-4`.
/// Exit status: 0 on success, 1 when a check fails, 2 on an error.
#[derive(Debug, Parser)]
#[command(name = "dimer", version)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the dimer-model axioms.
    Validate { file: String },
    /// Print the type (k, n).
    Type { file: String },
    /// Write the uniform (k, n) model.
    BuildUniform {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print or write the opposite model.
    Opposite {
        file: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Glue digons so every boundary arrow lies in a face of one colour.
    Standardise {
        file: String,
        #[arg(long, value_enum, default_value = "white")]
        color: ColorArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List strands and the strand permutation.
    Strands { file: String },
    /// Print source labels, or target labels with --target.
    Labels {
        file: String,
        #[arg(long)]
        target: bool,
    },
    /// Check the strand axioms; exit 0 iff consistent.
    Check { file: String },
    /// Enumerate perfect matchings, optionally with a fixed boundary value.
    Matchings {
        file: String,
        #[arg(long)]
        boundary: Option<String>,
    },
    /// Print the positroid and the boundary necklaces.
    Positroid { file: String },
    /// The flip-minimal and flip-maximal matchings with a boundary value.
    Extremes {
        file: String,
        #[arg(long)]
        boundary: String,
    },
    /// The matching lattice and the matrix of eta.
    Lattice {
        file: String,
        #[arg(long)]
        check_ensemble: bool,
    },
    /// The projective matching of every vertex.
    MsMatchings { file: String },
    /// The downstream wedge of an arrow.
    Wedge {
        file: String,
        #[arg(long)]
        arrow: u32,
    },
    /// The K-theory class of a matching module.
    Kclass {
        file: String,
        /// Comma-separated arrow ids.
        #[arg(long)]
        matching: String,
    },
    /// Compare projective matchings from wedges, eta inverse and path degrees.
    VerifyMsmatch { file: String },
    /// The partition function of a boundary value.
    Ms {
        file: String,
        #[arg(long)]
        subset: String,
        /// Use the black formula on the black standardisation.
        #[arg(long)]
        black: bool,
    },
    /// The twist expression of a boundary value.
    TwistExpr {
        file: String,
        #[arg(long)]
        subset: String,
    },
    /// Weighted matching counts per boundary value.
    Measure {
        file: String,
        /// `unit`, `random` (uses --seed), or a JSON file of arrow weights.
        #[arg(long, default_value = "unit")]
        weights: String,
        #[arg(long)]
        check_plucker: bool,
    },
    /// Check exactness of every graded piece of a matching's resolution.
    Resolution {
        file: String,
        #[arg(long)]
        matching: String,
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Rotate a matching to lower the degree of a reachable set.
    Rotate {
        file: String,
        #[arg(long)]
        matching: String,
        /// Vertex id, or name when not an id.
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        degree: u32,
    },
    /// Run the full verification suite; exit 0 iff every check passes.
    Verify {
        file: String,
        /// Record wall-clock time per check (makes reports non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Write the bundled fixtures (default directory: $DIMER_FIXTURES or ./fixtures).
    Fixtures { outdir: Option<PathBuf> },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    use commands::*;
    match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Type { file } => cmd_type(file),
        Command::BuildUniform { k, n, output } => cmd_build_uniform(*k, *n, output),
        Command::Opposite { file, output } => cmd_opposite(file, output.as_deref()),
        Command::Standardise {
            file,
            color,
            output,
        } => {
            let color = match color {
                ColorArg::White => Color::White,
                ColorArg::Black => Color::Black,
            };
            cmd_standardise(file, color, output.as_deref())
        }
        Command::Strands { file } => cmd_strands(file),
        Command::Labels { file, target } => cmd_labels(file, *target),
        Command::Check { file } => cmd_check(file),
        Command::Matchings { file, boundary } => cmd_matchings(file, boundary.as_deref()),
        Command::Positroid { file } => cmd_positroid(file),
        Command::Extremes { file, boundary } => cmd_extremes(file, boundary),
        Command::Lattice {
            file,
            check_ensemble,
        } => cmd_lattice(file, *check_ensemble),
        Command::MsMatchings { file } => cmd_ms_matchings(file),
        Command::Wedge { file, arrow } => cmd_wedge(file, *arrow),
        Command::Kclass { file, matching } => cmd_kclass(file, matching),
        Command::VerifyMsmatch { file } => cmd_verify_msmatch(file),
        Command::Ms {
            file,
            subset,
            black,
        } => cmd_ms(file, subset, *black),
        Command::TwistExpr { file, subset } => cmd_twist_expr(file, subset),
        Command::Measure {
            file,
            weights,
            check_plucker,
        } => cmd_measure(file, weights, *check_plucker, cli.seed),
        Command::Resolution {
            file,
            matching,
            dmax,
        } => cmd_resolution(file, matching, *dmax),
        Command::Rotate {
            file,
            matching,
            vertex,
            degree,
        } => cmd_rotate(file, matching, vertex, *degree),
        Command::Verify { file, timing } => cmd_verify(file, cli.seed, *timing),
        Command::Fixtures { outdir } => cmd_fixtures(&outdir.clone().unwrap_or_else(fixtures_dir)),
    }
}

fn command_name(c: &Command) -> String {
    let debug = format!("{c:?}");
    let head = debug.split([' ', '{']).next().unwrap_or_default();
    let mut out = String::new();
    for (i, ch) in head.chars().enumerate() {
        if ch.is_uppercase() && i > 0 {
            out.push('-');
        }
        out.push(ch.to_ascii_lowercase());
    }
    out
}

/// Prints a line to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli) {
        Ok(Output::Model(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Ok(Output::Report {
            result,
            text,
            success,
        }) => {
            match cli.format {
                Format::Json => {
                    let doc = json!({ "schema_version": SCHEMA_VERSION, "command": name, "result": result });
                    emit(&serde_json::to_string_pretty(&doc).expect("serialisable"));
                }
                Format::Text => emit(&text),
            }
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => {
                    let doc = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": name,
                        "error": { "kind": e.kind(), "message": e.to_string() },
                    });
                    emit(&serde_json::to_string_pretty(&doc).expect("serialisable"));
                }
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}
