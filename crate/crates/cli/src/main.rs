use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod output;

use output::Format;
use triclose::nullmodel::CountMode;

#[derive(Parser, Debug)]
#[command(name = "triclose", version, about = "Directed closure and clustering coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Edge list: one `source target` pair per line, `#` comments
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size, degree moments, every coefficient and the symmetry check
    Stats {
        #[command(flatten)]
        common: Common,
        /// `token,label` CSV; adds label-pair edge tallies
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Average and global closure coefficients
    Closure {
        #[command(flatten)]
        common: Common,
        /// Also write per-node wedge counts and coefficients as CSV
        #[arg(long)]
        per_node: Option<PathBuf>,
    },
    /// Mean center-based clustering coefficients
    Clustering {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        per_node: Option<PathBuf>,
    },
    /// Correlations between the eight local closure coefficients
    Corr {
        #[command(flatten)]
        common: Common,
    },
    /// Configuration-model expectations from the input's degree moments
    Expected {
        #[command(flatten)]
        common: Common,
    },
    /// Swap-sampled null model against the expectations
    Nullmodel {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Swaps per sample [default: max(20 m, 10000)]
        #[arg(long)]
        swaps: Option<u64>,
        #[arg(long, value_enum, default_value_t = CountModeArg::Attempted)]
        count_mode: CountModeArg,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = triclose::nullmodel::ExperimentConfig::DEFAULT_BINS)]
        bins: usize,
    },
    /// Four-class construction: claimed against computed io averages
    Extremal {
        /// Class sizes n1,n2,n3,n4
        #[arg(long, value_parser = parse_classes, default_value = "1,1,1,1")]
        classes: [usize; 4],
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the generated edge list here
        #[arg(long)]
        edges_out: Option<PathBuf>,
        /// Write `token,class` here
        #[arg(long)]
        classes_out: Option<PathBuf>,
    },
    /// Per-node predictor matrix as CSV
    Features {
        input: PathBuf,
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum CountModeArg {
    Attempted,
    Accepted,
}

impl From<CountModeArg> for CountMode {
    fn from(m: CountModeArg) -> Self {
        match m {
            CountModeArg::Attempted => CountMode::Attempted,
            CountModeArg::Accepted => CountMode::Accepted,
        }
    }
}

fn parse_classes(s: &str) -> Result<[usize; 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 comma-separated sizes, got {}", parts.len()));
    }
    let mut out = [0usize; 4];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|e| format!("{p:?}: {e}"))?;
        if *slot == 0 {
            return Err("class sizes must be at least 1".into());
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> anyhow::Result<()> {
    use commands::*;
    match cli.command {
        Command::Stats { common, labels } => {
            let input = Input::read(&common.input)?;
            let labels = labels.as_deref().map(LabelFile::read).transpose()?;
            emit(&common, stats(&input, labels.as_ref())?)
        }
        Command::Closure { common, per_node } => {
            let input = Input::read(&common.input)?;
            emit(&common, closure(&input, per_node.as_deref())?)
        }
        Command::Clustering { common, per_node } => {
            let input = Input::read(&common.input)?;
            emit(&common, clustering(&input, per_node.as_deref())?)
        }
        Command::Corr { common } => {
            let input = Input::read(&common.input)?;
            emit(&common, corr(&input)?)
        }
        Command::Expected { common } => {
            let input = Input::read(&common.input)?;
            emit(&common, expected(&input)?)
        }
        Command::Nullmodel { common, samples, swaps, count_mode, seed, bins } => {
            let input = Input::read(&common.input)?;
            eprintln!("seed: {seed}");
            let opts = NullOptions { samples, swaps, count_mode: count_mode.into(), seed, bins };
            emit(&common, nullmodel(&input, opts)?)
        }
        Command::Extremal { classes, format, out, edges_out, classes_out } => {
            let doc = extremal(classes, edges_out.as_deref(), classes_out.as_deref())?;
            write_out(out.as_deref(), &doc.render(format)?)
        }
        Command::Features { input, labels, out } => {
            let input = Input::read(&input)?;
            let labels = labels.as_deref().map(LabelFile::read).transpose()?;
            features(&input, labels.as_ref(), out.as_deref())
        }
    }
}

fn emit(common: &Common, doc: output::Document) -> anyhow::Result<()> {
    commands::write_out(common.out.as_deref(), &doc.render(common.format)?)
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
