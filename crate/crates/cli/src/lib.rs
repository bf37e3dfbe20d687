//! Command-line front end for the `flagcert` library.

pub mod commands;
pub mod store;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "flagcert", version, about = "Schubert structure constants and Gelfand-Cetlin certificates")]
pub struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, env = "FLAGCERT_THREADS", default_value_t = 0)]
    pub threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Args)]
pub struct ShapeArg {
    /// Shape `n1,...,nk,n` (the last entry is n).
    #[arg(long)]
    pub shape: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure constant from the Schubert polynomial oracle.
    Constant(ConstantArgs),
    /// Evaluate one translation tuple and emit a certificate.
    Certify(CertifyArgs),
    /// Search for translations that certify a constant.
    Search(SearchArgs),
    /// Resolve all constants of a shape.
    Sweep(SweepArgs),
    /// Polytope summary.
    Polytope(PolytopeArgs),
    /// Facet unions attached to Schubert varieties.
    Faces(FacesArgs),
    /// Vertex table.
    Vertices(VerticesArgs),
    /// Kogan and dual Kogan faces of a complete flag polytope.
    Kogan(KoganArgs),
    /// Special positive paths of the anticanonical divisor.
    Anticanonical(ShapeArg),
    /// Lattice points and their decomposition into path vectors.
    LatticePoints(LatticeArgs),
}

#[derive(Debug, Args)]
pub struct ConstantArgs {
    #[command(flatten)]
    pub shape: ShapeArg,
    /// First class, as a permutation.
    #[arg(long, conflicts_with = "mu")]
    pub u: Option<String>,
    /// Further classes (repeatable).
    #[arg(long)]
    pub v: Vec<String>,
    #[arg(long, conflicts_with = "eta")]
    pub w: Option<String>,
    /// Partitions, for Grassmannian shapes.
    #[arg(long, requires = "nu")]
    pub mu: Option<String>,
    #[arg(long, requires = "eta")]
    pub nu: Option<String>,
    #[arg(long)]
    pub eta: Option<String>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub shape: ShapeArg,
    /// Schubert classes (repeatable).
    #[arg(long = "v", required = true)]
    pub vs: Vec<String>,
    /// Translations, one per class (default: identity).
    #[arg(long = "u")]
    pub us: Vec<String>,
    #[arg(long)]
    pub w: String,
    /// JSONL certificate store to append to.
    #[arg(long)]
    pub store: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub shape: ShapeArg,
    #[arg(long = "v", required = true)]
    pub vs: Vec<String>,
    #[arg(long)]
    pub w: String,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub max_tier: u8,
    #[arg(long, default_value_t = 1 << 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub cursor: u64,
    #[arg(long)]
    pub store: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub shape: ShapeArg,
    /// Permit the rank-5 triple partition.
    #[arg(long)]
    pub allow_large: bool,
    /// Also search every nontrivial triple on its own.
    #[arg(long)]
    pub direct: bool,
    #[arg(long, default_value_t = 1 << 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// TSV detail file, next to the JSON summary.
    #[arg(long)]
    pub detail: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    #[command(flatten)]
    pub shape: ShapeArg,
    /// Print counts only.
    #[arg(long)]
    pub info: bool,
    /// Numeric top row, e.g. `2,2,0,0`.
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(Debug, Args)]
pub struct FacesArgs {
    #[command(flatten)]
    pub shape: ShapeArg,
    /// `Δ(u, v)` for an opposite Schubert variety translated by `u`.
    #[arg(long, requires = "v")]
    pub u: Option<String>,
    #[arg(long)]
    pub v: Option<String>,
    /// `Δ(w_0, π(w_0 w))` for a Schubert variety.
    #[arg(long, conflicts_with_all = ["u", "v"])]
    pub schubert: Option<String>,
    /// Face cut out by edges such as `H(2,1)`.
    #[arg(long, num_args = 1.., conflicts_with_all = ["u", "v", "schubert"])]
    pub edges: Vec<String>,
}

#[derive(Debug, Args)]
pub struct VerticesArgs {
    #[command(flatten)]
    pub shape: ShapeArg,
    #[arg(long)]
    pub regular_only: bool,
}

#[derive(Debug, Args)]
pub struct KoganArgs {
    /// Rank of the complete flag variety.
    #[arg(long)]
    pub n: usize,
    /// Dual Kogan faces (diagonal equalities).
    #[arg(long)]
    pub dual: bool,
    /// Enumerate the reduced faces with this word product.
    #[arg(long, conflicts_with = "positions")]
    pub target: Option<String>,
    /// Build the face from 1-based positions of the reading word of `w_0`.
    #[arg(long, value_delimiter = ',')]
    pub positions: Vec<usize>,
    /// Compare the union with the facet union from vanishing coordinates.
    #[arg(long, requires = "target")]
    pub compare: bool,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub shape: ShapeArg,
    #[arg(long)]
    pub lambda: String,
    /// List every point with its path decomposition.
    #[arg(long)]
    pub decompose: bool,
}

/// Outcome of a command: exit code plus what to print.
pub struct Outcome {
    pub code: i32,
    pub text: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 3;
