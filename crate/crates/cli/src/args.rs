use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use std::path::PathBuf;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "surfcount",
    version,
    about = "Chunk combinatorics and surface-count bounds for alternating diagrams"
)]
pub struct Cli {
    /// TOML file supplying defaults for any flag below.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for enumeration and big-integer evaluation.
    #[arg(long, global = true, env = "SURFCOUNT_WORKERS")]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Parse a diagram and check the alternating conditions.
    Validate(ValidateArgs),
    /// Build the chunk decomposition.
    Chunk(ChunkArgs),
    /// Enumerate curves, run the zero-area census, or label one combination.
    Curves(CurvesArgs),
    /// Evaluate a closed-form bound exactly.
    Bound(BoundArgs),
    /// Path in the even-slope Farey tree and the surface it builds.
    Farey(FareyArgs),
    /// Count surfaces surviving a Dehn filling.
    Dehn(DehnArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct DiagramArgs {
    /// File holding a PD code, or `-` for stdin.
    #[arg(long, value_name = "PATH")]
    pub pd: Option<PathBuf>,
    /// PD code given inline.
    #[arg(long, value_name = "CODE", conflicts_with = "pd")]
    pub pd_text: Option<String>,
    /// File holding a signed Gauss code.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["pd", "pd_text"])]
    pub gauss: Option<PathBuf>,
    /// Signed Gauss code given inline.
    #[arg(long, value_name = "CODE", conflicts_with_all = ["pd", "pd_text", "gauss"])]
    pub gauss_text: Option<String>,
}

impl DiagramArgs {
    pub fn is_given(&self) -> bool {
        self.pd.is_some()
            || self.pd_text.is_some()
            || self.gauss.is_some()
            || self.gauss_text.is_some()
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct AmbientArgs {
    /// sphere_in_s3, heegaard_torus_lens, thickened_torus, solid_torus,
    /// thickened_surface or custom.
    #[arg(long)]
    pub ambient: Option<String>,
    /// Isotopy-class constant; defaults from the ambient case.
    #[arg(long)]
    pub x: Option<u64>,
    /// gt4, eq4 or unknown.
    #[arg(long)]
    pub representativity: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub diagram: DiagramArgs,
    /// Skip the weak-primality check.
    #[arg(long)]
    pub skip_weakly_prime: bool,
    /// Genus of the surface the diagram is claimed to lie on.
    #[arg(long)]
    pub ambient_genus: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct ChunkArgs {
    #[command(flatten)]
    pub diagram: DiagramArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CurvesArgs {
    #[command(flatten)]
    pub diagram: DiagramArgs,
    /// Chunk side: + or -.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub side: String,
    /// Surface component of the projection surface.
    #[arg(long, default_value_t = 0)]
    pub component: usize,
    /// Enumerate combinations of up to this many hits.
    #[arg(long, conflicts_with_all = ["census", "combination"])]
    pub max_hits: Option<usize>,
    #[arg(long)]
    pub interior_only: bool,
    /// Lift the desk-scale limit on --max-hits.
    #[arg(long)]
    pub allow_large: bool,
    /// Classify the zero-area four-hit curves.
    #[arg(long, conflicts_with = "combination")]
    pub census: bool,
    /// Label one combination, e.g. "e1 t0.2 t0.3 e4".
    #[arg(long)]
    pub combination: Option<String>,
    #[arg(long)]
    pub meridianal: bool,
    /// Euler characteristic of the piece bounded by --combination.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub piece_chi: i64,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    /// curves, sphere_mi, sphere, general_mi, general, torus_mi, torus,
    /// thickened_surface_mi, thickened_surface or tubing; numeric labels
    /// 5.4, 6.1, 6.3, 7.1, 7.3, 8.3 and 8.5 are accepted too.
    #[arg(long)]
    pub theorem: String,
    #[command(flatten)]
    pub diagram: DiagramArgs,
    /// Crossing count, if no diagram is given.
    #[arg(long)]
    pub n: Option<u64>,
    /// Euler characteristic of a planar surface; otherwise derived from
    /// --genus and --boundary.
    #[arg(long, allow_hyphen_values = true)]
    pub chi: Option<i64>,
    #[arg(long)]
    pub genus: Option<u64>,
    #[arg(long)]
    pub boundary: Option<u64>,
    #[arg(long)]
    pub nonorientable: bool,
    #[command(flatten)]
    pub ambient: AmbientArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FareyArgs {
    /// Target slope p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub target: String,
    /// Basepoint slope; 0/1 if omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub base: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct DehnArgs {
    #[command(flatten)]
    pub diagram: DiagramArgs,
    #[arg(long)]
    pub n: Option<u64>,
    /// Euler characteristic of the projection surface, if no diagram is given.
    #[arg(long, allow_hyphen_values = true)]
    pub chi_pi: Option<i64>,
    #[arg(long)]
    pub genus: u64,
    /// Filling slope p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub slope: String,
    /// Slope length, e.g. 6.7 or 4pi; derived from the diagram if omitted.
    #[arg(long)]
    pub length: Option<String>,
    /// List the terms of the sum without evaluating them.
    #[arg(long)]
    pub terms_only: bool,
    #[command(flatten)]
    pub ambient: AmbientArgs,
}

/// Defaults read from `--config`; flags take precedence.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct ConfigFile {
    pub format: Option<Format>,
    pub workers: Option<usize>,
    pub pd: Option<PathBuf>,
    pub gauss: Option<PathBuf>,
    pub ambient: Option<String>,
    pub x: Option<u64>,
    pub representativity: Option<String>,
}
