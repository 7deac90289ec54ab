use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 0xF12AC7;

#[derive(Debug, Parser)]
#[command(name = "frax", version, about = "Fractional relaxation laws and random-boundary crossing probabilities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a relaxation law and its limiting laws on a time grid.
    Eval(EvalArgs),
    /// Estimate a crossing probability and compare it with the closed form.
    Simulate(SimulateArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Write the small-t and large-t comparison tables.
    Tables(TablesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Standard,
    Fractional,
    Sojourn,
    Firstpassage,
    Besselsq,
    Elastic,
    Gammaboundary,
    Elasticgamma,
    Distributed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProcessKind {
    Reflected,
    Iterated,
    Sojourn,
    Firstpassage,
    Besselsq,
    Elastic,
    Wright,
    Airy,
    Distributed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryKind {
    Exp,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// Var B(t) = 2t
    Var2t,
    /// Var B(t) = t
    VarT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum GridScale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Residuals,
    Laplace,
    Asymptotics,
    All,
}

#[derive(Debug, Clone, Args, Default)]
pub struct ParamArgs {
    #[arg(long)]
    pub nu: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub nu1: Option<f64>,
    #[arg(long)]
    pub nu2: Option<f64>,
    #[arg(long)]
    pub n1: Option<f64>,
    #[arg(long)]
    pub n2: Option<f64>,
    /// subordination depth for first-passage and iterated processes
    #[arg(long)]
    pub depth: Option<u32>,
    /// variance convention of the reflected process
    #[arg(long, value_enum)]
    pub scale: Option<Scale>,
}

#[derive(Debug, Clone, Args, Default)]
pub struct GridArgs {
    /// evaluation times, comma separated
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["t_start", "t_stop", "t_count"])]
    pub t: Vec<f64>,
    #[arg(long)]
    pub t_start: Option<f64>,
    #[arg(long)]
    pub t_stop: Option<f64>,
    #[arg(long)]
    pub t_count: Option<usize>,
    #[arg(long, value_enum, default_value = "linear")]
    pub t_scale: GridScale,
}

#[derive(Debug, Clone, Args, Default)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// output file; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub model: ModelKind,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub process: ProcessKind,
    #[arg(long, value_enum, default_value = "exp")]
    pub boundary: BoundaryKind,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, default_value_t = 100_000)]
    pub paths: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// exit with status 4 when a Monte Carlo row has |z| > 4
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TablesArgs {
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}
