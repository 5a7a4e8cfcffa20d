use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "corrdeph", version, about = "Dephasing of qubit probes in correlated bosonic environments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Run file of `key = value` lines; flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(flatten)]
    pub params: Params,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Decay exponent and coherence on a uniform time grid.
    Gamma,
    /// Short-time coherence with its quadratic and quartic factors.
    Fig2,
    /// Optimal interrogation time and minimal uncertainty for one ensemble.
    Optimal,
    /// Minimal uncertainty over a log-spaced range of probe counts, with a power-law fit.
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Ohmic,
    Modes,
    Tabulated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dynamics {
    Full,
    Nofree,
    Shorttime,
    Local,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Readout {
    Product,
    Entangled,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    /// Local quadrature variance of each bath mode.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Magnitude of the inter-bath cross-correlation.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub cplus: Option<f64>,
    /// Ratio between the two quadrature cross-correlations, in [-1, 1].
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Two-mode squeezing parameter; replaces --a/--cplus/--theta.
    #[arg(long = "tmsv-r", global = true)]
    pub tmsv_r: Option<f64>,
    /// Ohmic cutoff frequency.
    #[arg(long = "omega-c", global = true)]
    pub omega_c: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub model: Option<Model>,
    /// CSV of `g,omega` (modes) or `omega,j` (tabulated).
    #[arg(long = "spectrum-file", global = true, value_name = "FILE")]
    pub spectrum_file: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub dynamics: Option<Dynamics>,
    #[arg(long, global = true, value_enum)]
    pub strategy: Option<Readout>,
    /// Number of probes.
    #[arg(long, global = true)]
    pub n: Option<u64>,
    #[arg(long = "n-min", global = true)]
    pub n_min: Option<u64>,
    #[arg(long = "n-max", global = true)]
    pub n_max: Option<u64>,
    #[arg(long = "n-per-decade", global = true)]
    pub n_per_decade: Option<u32>,
    /// Total interrogation budget.
    #[arg(long = "big-t", global = true)]
    pub big_t: Option<f64>,
    #[arg(long = "t-max", global = true)]
    pub t_max: Option<f64>,
    /// Number of grid points including t = 0.
    #[arg(long, global = true)]
    pub steps: Option<usize>,
    /// Odd phase branch.
    #[arg(long, global = true)]
    pub k: Option<u32>,
    /// Output CSV path; standard output when absent.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}
