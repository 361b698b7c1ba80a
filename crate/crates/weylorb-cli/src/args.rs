use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "weylorb", version, about = "Orbit functions of Weyl groups and their transforms")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Tolerance for `check` and `selftest`; each check has its own default.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,

    /// Worker threads for randomized checks. Results do not depend on it.
    #[arg(long, default_value_t = 1, global = true)]
    pub threads: usize,

    /// Seed for randomized checks.
    #[arg(long, default_value_t = 2024, global = true)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root-system data.
    Rootsys {
        #[command(subcommand)]
        action: RootsysAction,
    },
    /// Weyl group orbits of a weight.
    Orbit {
        #[command(subcommand)]
        action: OrbitAction,
    },
    /// Evaluate an orbit function at one point or at every row of a CSV file.
    Eval(EvalArgs),
    /// Decompose a product of two orbits.
    Product(ProductArgs),
    /// Restrict an antisymmetric orbit function to a subgroup.
    Branch(BranchArgs),
    /// List the grid F_M of the fundamental domain.
    Grid(GridArgs),
    /// Apply a discrete transform to a CSV signal or coefficient file.
    Transform(TransformArgs),
    /// Finite-transform plans.
    Plan {
        #[command(subcommand)]
        action: PlanAction,
    },
    /// Randomized numerical checks.
    Check {
        #[command(subcommand)]
        action: CheckAction,
    },
    /// Run the built-in property suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Subcommand)]
pub enum RootsysAction {
    /// Cartan matrix, its inverse, the metric, marks, comarks and |W|.
    Info { diagram: String },
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long)]
    pub diagram: String,
    /// Comma-separated ω-coordinates, integers or p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Subcommand)]
pub enum OrbitAction {
    /// Signed orbit of a strictly dominant weight.
    Signed(WeightArgs),
    /// Orbit of a dominant weight.
    Plain(WeightArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    /// sym, symhat or anti.
    #[arg(long, default_value = "anti")]
    pub kind: String,
    /// Point coordinates, comma-separated.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "input")]
    pub x: Option<String>,
    /// CSV file of points, one per row, with a header row.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Points are orthogonal coordinates instead of ω-coordinates.
    #[arg(long)]
    pub orth: bool,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[arg(long)]
    pub diagram: String,
    /// Label of a signed orbit factor; may be given twice.
    #[arg(long, action = clap::ArgAction::Append)]
    pub signed: Vec<String>,
    /// Label of a plain orbit factor; may be given twice.
    #[arg(long, action = clap::ArgAction::Append)]
    pub plain: Vec<String>,
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    #[arg(long)]
    pub from: String,
    /// drop-first, drop-last or split:p.
    #[arg(long)]
    pub rule: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// The label is given in orthogonal coordinates.
    #[arg(long)]
    pub orth: bool,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub diagram: String,
    #[arg(long = "M")]
    pub m: i64,
    /// Only points off every wall.
    #[arg(long)]
    pub interior: bool,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// A 1-D kind (sine, cosine, dct1..dct4, dst1..dst4), a multivariate kind
    /// (anti_exp, sym_exp, anti_sine, sym_cosine, amdct1..4, smdct1..4) or
    /// `orbit` for the finite transform on a fundamental-domain grid.
    #[arg(long)]
    pub kind: String,
    /// Number of variables of a multivariate kind.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Size parameter of 1-D and multivariate kinds.
    #[arg(long = "N")]
    pub size: Option<i64>,
    /// Diagram of the `orbit` kind.
    #[arg(long)]
    pub diagram: Option<String>,
    /// Grid parameter of the `orbit` kind.
    #[arg(long = "M")]
    pub m: Option<i64>,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value = "forward")]
    pub direction: String,
}

#[derive(Debug, Subcommand)]
pub enum PlanAction {
    /// Build the finite transform on F_M and report its Gram matrix.
    Verify(PlanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LabelSet {
    /// Strictly dominant labels bounded by the highest coroot.
    Dual,
    /// Strictly dominant labels bounded by the highest root.
    Marks,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    #[arg(long)]
    pub diagram: String,
    #[arg(long = "M")]
    pub m: i64,
    #[arg(long, value_enum, default_value_t = LabelSet::Dual)]
    pub labels: LabelSet,
}

#[derive(Debug, Subcommand)]
pub enum CheckAction {
    /// Laplace (or σ_2) eigenvalue of ϕ_λ by finite differences.
    Laplace(LaplaceArgs),
    /// Shift-operator eigenrelations.
    Shift(ShiftArgs),
    /// Hermite eigenfunctions of the two-variable orbit transforms.
    Hermite(HermiteArgs),
}

#[derive(Debug, Args)]
pub struct LaplaceArgs {
    #[arg(long)]
    pub diagram: String,
    /// Strictly dominant weight; random small weights if omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// `--lambda` is given in orthogonal coordinates.
    #[arg(long)]
    pub orth: bool,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long)]
    pub h: Option<f64>,
    /// 1 for the Laplacian, 2 for σ_2.
    #[arg(long, default_value_t = 1)]
    pub sigma: usize,
}

#[derive(Debug, Args)]
pub struct ShiftArgs {
    #[arg(long)]
    pub diagram: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
}

#[derive(Debug, Args)]
pub struct HermiteArgs {
    #[arg(long, default_value_t = 4)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 400)]
    pub resolution: usize,
    #[arg(long, default_value_t = 6.0)]
    pub extent: f64,
    /// Sign of the kernel exponent: minus gives eigenvalues i^{-|m|}.
    #[arg(long, default_value = "minus")]
    pub sign: String,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Small parameters; the default.
    #[arg(long, conflicts_with = "full")]
    pub quick: bool,
    /// Acceptance-size parameters.
    #[arg(long)]
    pub full: bool,
}
