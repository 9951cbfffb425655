use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "semiring-dp",
    version,
    about = "Semiring-polymorphic dynamic programming"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Piecewise regression by optimal segmentation of a series.
    Segment(SegmentArgs),
    /// Needleman-Wunsch alignment of two sequences.
    Align(AlignArgs),
    /// Probability of exactly M of N independent events.
    Events(EventsArgs),
    /// Longest chain under an order relation.
    Lis(LisArgs),
    /// Operation counts and timings over a range of sizes.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// minplus, maxplus, prob, softmax, bottleneck, maxtimes, count, bool
    /// or viterbi:<base>.
    #[arg(long)]
    pub semiring: Option<String>,

    /// Cross-check against exhaustive enumeration when the instance fits
    /// the oracle budget.
    #[arg(long)]
    pub verify: bool,

    /// Write the JSON document here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Constant,
    Linear,
}

#[derive(Debug, Clone, Args)]
pub struct SegmentArgs {
    /// Single-column CSV of samples.
    pub input: PathBuf,

    #[arg(long, value_enum, default_value = "constant")]
    pub model: Model,

    /// Penalty added per segment.
    #[arg(long, default_value_t = 0.0)]
    pub lambda: f64,

    /// Residual exponent p in |r|^p / p.
    #[arg(long, default_value_t = 2.0)]
    pub exponent: f64,

    /// Exact number of segments.
    #[arg(long, conflicts_with_all = ["count_range", "min_length"])]
    pub count: Option<usize>,

    /// Number of segments in LO..=HI.
    #[arg(long, value_name = "LO:HI", value_parser = parse_range, conflicts_with = "min_length")]
    pub count_range: Option<(usize, usize)>,

    /// Every segment at least this long.
    #[arg(long)]
    pub min_length: Option<usize>,

    /// Skip the first line of the input.
    #[arg(long)]
    pub header: bool,

    /// CSV with columns n, y, fit, segment.
    #[arg(long, value_name = "PATH")]
    pub out_table: Option<PathBuf>,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct AlignArgs {
    pub first: PathBuf,
    pub second: PathBuf,

    /// Whitespace-separated tokens instead of characters.
    #[arg(long)]
    pub tokens: bool,

    #[arg(long, default_value_t = 0.0)]
    pub match_cost: f64,

    #[arg(long, default_value_t = 1.0)]
    pub mismatch_cost: f64,

    #[arg(long, default_value_t = 1.0)]
    pub gap_cost: f64,

    /// Count alignments instead of optimizing.
    #[arg(long, conflicts_with = "semiring")]
    pub count_paths: bool,

    /// Keep alignments whose largest |i - j| is at most L.
    #[arg(long, value_name = "L", conflicts_with = "sum_misalign")]
    pub max_misalign: Option<usize>,

    /// Keep alignments whose summed |i - j| is at most L.
    #[arg(long, value_name = "L")]
    pub sum_misalign: Option<usize>,

    /// Also time the alignment of growing prefixes.
    #[arg(long)]
    pub sweep: bool,

    /// CSV of the sweep table.
    #[arg(long, value_name = "PATH", requires = "sweep")]
    pub out_table: Option<PathBuf>,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EventsMode {
    Prob,
    Viterbi,
}

#[derive(Debug, Clone, Args)]
pub struct EventsArgs {
    /// One probability per line.
    pub input: PathBuf,

    /// Number of events that occur.
    #[arg(long)]
    pub m: usize,

    #[arg(long, value_enum, default_value = "prob")]
    pub mode: EventsMode,

    #[arg(long)]
    pub header: bool,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RelationArg {
    Lt,
    Le,
    /// Values are bit masks ordered by inclusion.
    SubsetDemo,
}

#[derive(Debug, Clone, Args)]
pub struct LisArgs {
    /// One number per line.
    pub input: PathBuf,

    #[arg(long, value_enum, default_value = "lt")]
    pub relation: RelationArg,

    #[arg(long)]
    pub header: bool,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Combinations,
    Events,
    Nw,
    NwSum,
    NwMax,
    SegmentCount,
    SegmentMin,
    Lis,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub algorithm: Algorithm,

    /// Comma-separated problem sizes N.
    #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
    pub sizes: Vec<usize>,

    /// Fixed M for combinations, events and segment-count.
    #[arg(long, default_value_t = 10)]
    pub m: usize,

    /// Seed for the pseudo-random weights.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// CSV of the table.
    #[arg(long, value_name = "PATH")]
    pub out_table: Option<PathBuf>,

    #[command(flatten)]
    pub common: Common,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound {lo:?}"))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound {hi:?}"))?;
    Ok((lo, hi))
}
