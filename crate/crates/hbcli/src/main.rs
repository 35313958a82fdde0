use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hbcli::commands::{self, Family, Outcome, Pair, Via, EXIT_ERROR};
use hbcli::CliError;

#[derive(Parser)]
#[command(name = "hb", version, about = "Check and convert Hopf braces, brace triples and post-Hopf algebras")]
struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ViaArg {
    F,
    G,
    P,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairArg {
    #[value(name = "FG")]
    Fg,
    #[value(name = "QP")]
    Qp,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Trivial,
    Opposite,
    Exhaustive,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every axiom of the structure in FILE.
    Check { file: PathBuf },
    /// Apply one of the functors F, G, P, Q.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum, ignore_case = true)]
        via: ViaArg,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Compare a structure with its image under a composite of functors.
    Roundtrip {
        file: PathBuf,
        #[arg(long, value_enum)]
        pair: PairArg,
    },
    /// Evaluate a morphism expression against the generators of FILE.
    Eval { file: PathBuf, expr: String },
    /// List skew braces on the built-in groups of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Restrict to one built-in group, e.g. S3.
        #[arg(long)]
        group: Option<String>,
        /// Write each skew brace's linearization as a hopf_brace file here.
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let j = cli.json;
    match cli.cmd {
        Cmd::Check { file } => commands::check(&file, j),
        Cmd::Convert { file, via, out } => {
            let via = match via {
                ViaArg::F => Via::F,
                ViaArg::G => Via::G,
                ViaArg::P => Via::P,
                ViaArg::Q => Via::Q,
            };
            commands::convert(&file, via, out.as_deref())
        }
        Cmd::Roundtrip { file, pair } => {
            let pair = match pair {
                PairArg::Fg => Pair::FG,
                PairArg::Qp => Pair::QP,
            };
            commands::roundtrip(&file, pair, j)
        }
        Cmd::Eval { file, expr } => commands::eval(&file, &expr, j),
        Cmd::Enumerate { order, family, group, out } => {
            let family = match family {
                FamilyArg::Trivial => Family::Trivial,
                FamilyArg::Opposite => Family::Opposite,
                FamilyArg::Exhaustive => Family::Exhaustive,
            };
            commands::enumerate(order, family, group.as_deref(), out.as_deref(), j)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
