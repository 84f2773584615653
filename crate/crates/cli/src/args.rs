use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "spivey",
    version,
    about = "Degenerate Bell/Dowling polynomials and boson normal ordering"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit rows of a number triangle or polynomial family.
    Table(TableArgs),
    /// Check an identity over a parameter grid, one JSON certificate per point.
    Verify(VerifyArgs),
    /// Normal-order an expression in a and ad.
    NormalOrder(NormalOrderArgs),
    /// Apply an expression to the truncated coherent vacuum e^x.
    Apply(ApplyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    #[value(name = "stirling2-deg")]
    Stirling2Deg,
    #[value(name = "stirling1-deg")]
    Stirling1Deg,
    Whitney,
    #[value(name = "r-whitney")]
    RWhitney,
    Bell,
    Dowling,
    #[value(name = "r-dowling")]
    RDowling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExprFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: TableFamily,
    /// Largest row index.
    #[arg(long)]
    pub n_max: u32,
    /// Whitney/Dowling parameter m (positive).
    #[arg(long)]
    pub m: Option<u32>,
    /// r-Whitney/r-Dowling parameter, e.g. 2 or 5/2.
    #[arg(long)]
    pub r: Option<String>,
    /// Substitute a numeric value for λ, e.g. 0 or 1/2.
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentitySelector {
    #[value(name = "spivey-classical")]
    SpiveyClassical,
    #[value(name = "spivey-deg-bell")]
    SpiveyDegBell,
    #[value(name = "spivey-deg-dowling")]
    SpiveyDegDowling,
    #[value(name = "spivey-deg-r-dowling")]
    SpiveyDegRDowling,
    Eq10,
    Eq34,
    Eq35,
    Thm22,
    Thm22b,
    Thm23,
    Thm24,
    #[value(name = "fock-dowling")]
    FockDowling,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub identity: IdentitySelector,
    /// Single value of n (overrides --n-max).
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Single value of m: the second Spivey index for Bell identities, the
    /// family parameter otherwise.
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub m_max: Option<u32>,
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub l_max: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub k_max: Option<u32>,
    /// Comma-separated r values, e.g. 0,1,2,5/2.
    #[arg(long)]
    pub r: Option<String>,
    /// Keep only points whose two recurrence indices sum to at most this.
    #[arg(long)]
    pub total_max: Option<u32>,
    /// Degree bound N of the truncated series for representation checks.
    #[arg(long)]
    pub degree: Option<u32>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NormalOrderArgs {
    #[arg(long)]
    pub expr: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ExprFormat,
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    #[arg(long)]
    pub expr: String,
    /// Degree bound N of the truncated coherent vacuum.
    #[arg(long)]
    pub degree: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ExprFormat,
    #[arg(long)]
    pub lambda: Option<String>,
}
