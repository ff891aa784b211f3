use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Seed used by randomized commands when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 1729;

/// Default numerical tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "modnet",
    version,
    about = "Finite-dimensional modular theory workbench",
    after_help = "Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 input or usage error.\n\
                  Randomized commands use seed 1729 unless --seed is given."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Numerical tolerance for every check.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Standard subspaces and their modular data.
    #[command(subcommand)]
    Subspace(SubspaceCommand),
    /// The covering map SL(2,C) → L↑₊.
    #[command(subcommand)]
    Lorentz(LorentzCommand),
    /// Mass-shell orbit geometry.
    #[command(subcommand)]
    Orbit(OrbitCommand),
    /// Decide the modularity condition U(r_W) ∈ U(G_W)''.
    Mc(McArgs),
    /// Spin content of tensor-product representations.
    #[command(subcommand)]
    Spin(SpinCommand),
    /// Nets of standard subspaces.
    #[command(subcommand)]
    Net(NetCommand),
    /// Spectral split diagnostics.
    #[command(subcommand)]
    Split(SplitCommand),
    /// Seeded randomized property suite.
    Suite(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Subspace file: {"dim", "basis"}.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum SubspaceCommand {
    /// Standardness: H ∩ iH = {0} and H + iH = C^n.
    Check(InputArg),
    /// Tomita operator, modular conjugation and modular operator.
    Modular(InputArg),
    /// Symplectic complement H' and its Tomita operator.
    Complement(InputArg),
}

#[derive(Debug, Subcommand)]
pub enum LorentzCommand {
    /// Lorentz image Λ(A) of an SL(2,C) element.
    Cover(CoverArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("element").required(true).args(["input", "boost", "rotation"])))]
pub struct CoverArgs {
    /// 2×2 matrix file with determinant 1.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Boost rapidity along --axis.
    #[arg(long, allow_negative_numbers = true)]
    pub boost: Option<f64>,
    /// Rotation angle about --axis.
    #[arg(long, allow_negative_numbers = true)]
    pub rotation: Option<f64>,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub axis: u8,
}

#[derive(Debug, Subcommand)]
pub enum OrbitCommand {
    /// (t_p, θ_p) with Λ₃(t_p) R₃(θ_p) p = R₁(π) p.
    Reflect(ReflectArgs),
}

#[derive(Debug, Args)]
pub struct ReflectArgs {
    #[arg(long)]
    pub mass: f64,
    /// Spatial momentum "p1,p2,p3".
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
}

#[derive(Debug, Args)]
pub struct McArgs {
    /// Orbit model file, or {"generators", "reflection"} matrix files.
    #[arg(long)]
    pub model: PathBuf,
    /// Where to write the failure certificate.
    #[arg(long, default_value = "mc-certificate.json")]
    pub certificate: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum SpinCommand {
    /// Content of (⊕_{i=n/2}^{N} D^i) ⊗ D^s.
    Decompose(DecomposeArgs),
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub s: f64,
    #[arg(long)]
    pub cutoff: f64,
    /// Mass label attached to every record.
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
}

#[derive(Debug, Subcommand)]
pub enum NetCommand {
    /// Run the net checks on a net file.
    Verify(VerifyArgs),
    /// Tensor a net with an internal plane rotation and test B-W.
    DemoCounterexample(DemoArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// Comma-separated checks; all of them when omitted.
    #[arg(long)]
    pub checks: Option<String>,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Rotation speed ω of the internal boost action.
    #[arg(long, allow_negative_numbers = true)]
    pub omega: f64,
    /// Base net file; the built-in canonical scalar net when omitted.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SplitCommand {
    /// Tr Δ|_{[0,1]} of an eigenvalue list.
    Trace(TraceArgs),
    /// Trace growth under refinement of a mass-measure surrogate.
    Growth(GrowthArgs),
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long)]
    pub spectrum: PathBuf,
}

#[derive(Debug, Args)]
pub struct GrowthArgs {
    #[arg(long)]
    pub surrogate: PathBuf,
    #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..=4096))]
    pub max_n: u64,
    /// Flag masses whose multiplicity exceeds this bound.
    #[arg(long, default_value_t = u32::MAX)]
    pub multiplicity_bound: u32,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Random cases per property.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..=100_000))]
    pub cases: u64,
}
