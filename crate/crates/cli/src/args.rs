use clap::{Args, Parser, Subcommand, ValueEnum};

use genlaguerre::DEFAULT_COMPOSITION_CAP;

#[derive(Debug, Parser)]
#[command(
    name = "genlaguerre",
    version,
    about = "Exact generalized Laguerre polynomials: coefficients, evaluation, cross-verification and timing"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient vector of one polynomial.
    Coeffs(CoeffsArgs),
    /// Coefficient vectors for n = 0..=nmax.
    Table(TableArgs),
    /// Value at a point, exactly or in floating point.
    Eval(EvalArgs),
    /// Cross-check every construction route over a parameter grid.
    Verify(VerifyArgs),
    /// Wall time per route and n.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Positive integer (any real > 0 with --float).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub alpha: String,
    /// Rational > -1 as p/q, integer or finite decimal.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
}

#[derive(Debug, Clone, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "closed")]
    pub method: String,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_COMPOSITION_CAP)]
    pub composition_cap: usize,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, default_value = "closed")]
    pub method: String,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_COMPOSITION_CAP)]
    pub composition_cap: usize,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub n: usize,
    /// Evaluation point: rational (exact mode) or real (--float).
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
    /// Evaluate the series in double precision; allows non-integer alpha.
    #[arg(long)]
    pub float: bool,
    #[arg(long, default_value = "closed")]
    pub method: String,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_COMPOSITION_CAP)]
    pub composition_cap: usize,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "1,2,3", value_delimiter = ',')]
    pub alphas: Vec<u32>,
    #[arg(long, default_value = "0,1/2,-1/3,7/2", value_delimiter = ',', allow_hyphen_values = true)]
    pub betas: Vec<String>,
    #[arg(long, default_value = "1", value_delimiter = ',')]
    pub qs: Vec<u32>,
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
    #[arg(long, default_value = "series,closed,recurrence,determinant,composition", value_delimiter = ',')]
    pub methods: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_COMPOSITION_CAP)]
    pub composition_cap: usize,
    /// Test hook: `method,alpha,beta,q,n,k` adds 1 to one coefficient.
    #[arg(long, hide = true, allow_hyphen_values = true)]
    pub inject_fault: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
    #[arg(long, default_value = "series,closed,recurrence,determinant,composition", value_delimiter = ',')]
    pub methods: Vec<String>,
    /// Repetitions per cell; the minimum is reported.
    #[arg(long, default_value_t = 3)]
    pub reps: u32,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_COMPOSITION_CAP)]
    pub composition_cap: usize,
}
