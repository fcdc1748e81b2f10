use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use crushtacean_cli::{self as cli, Body, CliResult, FamilyInput, Output, RenderTarget};

/// Painted crushtacean graphs: validation, symmetry reports, expansions and
/// families. Results are JSON on stdout; diagnostics go to stderr.
///
/// Exit status: 0 success, 1 negative verdict, 2 unreadable or invalid
/// input, 3 internal size cap exceeded.
#[derive(Parser)]
#[command(name = "crushtacean", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural checks, crushtacean validity and the nerve check.
    Validate { path: PathBuf },
    /// Automorphism group order, generators and isomorphism type.
    Aut {
        path: PathBuf,
        /// Only automorphisms mapping painted edges to painted edges.
        #[arg(long)]
        painted: bool,
    },
    /// Symmetry report for a crushtacean file, or for every `.json` file in
    /// a directory.
    Classify {
        path: PathBuf,
        /// Graph whose cycle expansion is the input; enables the signature
        /// screen.
        #[arg(long)]
        seed: Option<PathBuf>,
    },
    /// Iterated cycle expansion.
    Expand {
        path: PathBuf,
        #[arg(short = 'n', long = "iterations", default_value_t = 1)]
        iterations: usize,
        /// Write every step into this directory instead of printing the last.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Built-in graphs: borromean, pretzel N, ochain N, wheel N, prism N,
    /// antiprism N, tetrahedron, cube, dodecahedron.
    Gen {
        family: String,
        n: Option<usize>,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// A family of crushtaceans with a prescribed painted automorphism group.
    Family(FamilyArgs),
    /// Straight-line drawing as SVG, or DOT text.
    Render {
        path: PathBuf,
        #[arg(short = 'o', long = "out", required_unless_present = "dot", conflicts_with = "dot")]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
        /// Draw the nerve (planar dual) instead.
        #[arg(long)]
        nerve: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct FamilySource {
    /// Target group, e.g. D5, D6xZ2, S4xZ2, A5xZ2.
    #[arg(long)]
    group: Option<String>,
    /// Seed graph file.
    #[arg(long)]
    seed: Option<PathBuf>,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(flatten)]
    source: FamilySource,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long)]
    out: PathBuf,
}

fn run(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Validate { path } => cli::validate(&path),
        Command::Aut { path, painted } => cli::aut(&path, painted),
        Command::Classify { path, seed } => cli::classify(&path, seed.as_deref()),
        Command::Expand {
            path,
            iterations,
            out,
        } => cli::expand(&path, iterations, out.as_deref()),
        Command::Gen { family, n, out } => cli::gen(&family, n, out.as_deref()),
        Command::Family(args) => {
            let input = match (&args.source.group, &args.source.seed) {
                (Some(g), _) => FamilyInput::Group(g),
                (None, Some(p)) => FamilyInput::Seed(p),
                (None, None) => unreachable!("clap requires one source"),
            };
            cli::family(input, args.count, &args.out)
        }
        Command::Render {
            path,
            out,
            dot,
            nerve,
        } => {
            let target = match (&out, dot) {
                (_, true) => RenderTarget::Dot,
                (Some(p), false) => RenderTarget::Svg(p),
                (None, false) => unreachable!("clap requires -o or --dot"),
            };
            cli::render(&path, target, nerve)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = match out.body {
                Body::Json(v) => writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&v).expect("values serialize")
                ),
                Body::Text(t) => write!(stdout, "{t}"),
            };
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
