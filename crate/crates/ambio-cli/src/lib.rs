//! Command-line front end for the `ambio` spatial-audio toolkit.
//!
//! Every subcommand is thin plumbing over library calls; no spatial math
//! lives in this crate. Failures print a single JSON line to stderr
//! (`{"error": "..."}`) and exit nonzero: 2 for argument errors, 1 for
//! runtime errors. Set `AMBIO_LOG` to control log verbosity.

mod analyze;
mod augment;
mod condition;
mod encode;
mod evaluate;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

pub use analyze::AnalyzeArgs;
pub use augment::AugmentArgs;
pub use condition::ConditionArgs;
pub use encode::EncodeArgs;
pub use evaluate::EvaluateArgs;

#[derive(Debug, Parser)]
#[command(
    name = "ambio",
    version,
    about = "Spatial audio batch toolkit: first-order Ambisonics encoding, \
             dataset augmentation, direction-of-arrival analysis, position \
             conditioning matrices, and spatial evaluation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spatialize a mono WAV into 4-channel FOA, optionally along a movement path.
    Encode(EncodeArgs),
    /// Generate a spatialized corpus: one static and one dynamic sample per source.
    Augment(AugmentArgs),
    /// Estimate the per-frame direction of arrival of an FOA file.
    Analyze(AnalyzeArgs),
    /// Compare candidate FOA audio against a reference, spatially and spectrally.
    Evaluate(EvaluateArgs),
    /// Turn a sidecar record into a one-hot position state-matrix (.smx) file.
    Condition(ConditionArgs),
}

/// Channel layout of 4-channel files on disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChannelOrderArg {
    /// Channels stored as W, X, Y, Z.
    Wxyz,
    /// Ambisonic channel numbering: W, Y, Z, X.
    Acn,
}

impl ChannelOrderArg {
    fn order(self) -> ambio::wav::ChannelOrder {
        match self {
            ChannelOrderArg::Wxyz => ambio::wav::ChannelOrder::Wxyz,
            ChannelOrderArg::Acn => ambio::wav::ChannelOrder::Acn,
        }
    }
}

/// Output serialization for analysis results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

/// Raised when stdout goes away mid-write (e.g. piped into `head`); the
/// dispatcher turns it into a silent, successful exit.
#[derive(Debug)]
struct PipeClosed;

impl fmt::Display for PipeClosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "stdout closed")
    }
}

impl std::error::Error for PipeClosed {}

/// Writes one line to stdout, converting a broken pipe into [`PipeClosed`].
fn print_line(line: impl fmt::Display) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{line}") {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Err(PipeClosed.into()),
        other => Ok(other?),
    }
}

/// Runs `f` on a dedicated rayon pool of `jobs` threads, or inline on the
/// global pool when `jobs` is unset. Output ordering is deterministic
/// either way because batch results are collected in input order.
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()?;
            Ok(pool.install(f))
        }
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Encode(args) => encode::run(&args),
        Command::Augment(args) => augment::run(&args),
        Command::Analyze(args) => analyze::run(&args),
        Command::Evaluate(args) => evaluate::run(&args),
        Command::Condition(args) => condition::run(&args),
    }
}

/// Parses `argv` and executes the selected subcommand, returning the
/// process exit code. Errors are printed to stderr as one JSON line.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("AMBIO_LOG", "warn"))
        .format_timestamp(None)
        .try_init()
        .ok();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": e.to_string() }));
            return 2;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) if e.is::<PipeClosed>() => 0,
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": format!("{e:#}") }));
            1
        }
    }
}
