use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "stripcomb",
    version,
    about = "Exact counts, generating functions and identity checks for lattice paths in strips"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for independent checks.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of strip paths a(n,k), or a weighted value at integer t / z = ±1.
    Count(CountArgs),
    /// Weight polynomial a(n,k,t), or a(n,k,t,z) with --z.
    Poly(PolyArgs),
    /// Coefficients of a generating function.
    Series(SeriesArgs),
    /// List the paths of a strip with their weights.
    Enumerate(EnumerateArgs),
    /// Corridor triangle c(n,j), optionally t-weighted or bounded.
    Table(TableArgs),
    /// Run an identity or conjecture suite.
    Verify(VerifyArgs),
    /// Guess a C-finite recurrence for a(n,k) or a(n,k,t).
    Guess(GuessArgs),
    /// Compare a computed sequence with an OEIS entry.
    Oeis(OeisArgs),
    /// Signed-sum verdict and coefficient-reading search.
    Audit(AuditArgs),
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Evaluate the weight polynomial at this integer.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<i64>,
    /// Evaluate at z = 1 or z = -1 (with t = 1 unless --t is given).
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<i64>,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Keep the z variable.
    #[arg(long)]
    pub z: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GfKind {
    Numbers,
    Weighted,
    Corridor,
    /// a(n,k,1,1)
    Z1,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum, default_value_t = GfKind::Weighted)]
    pub gf: GfKind,
    #[arg(long, alias = "k")]
    pub strip: usize,
    #[arg(long, default_value_t = 40)]
    pub order: usize,
    /// Specialize t to this integer.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<i64>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub n: usize,
    /// Rows stop at height k (c(n,k+1) = 0).
    #[arg(long)]
    pub k: Option<usize>,
    /// Weight horizontal steps by t.
    #[arg(long)]
    pub t: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Q,
    Conjectures,
    Oracles,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 3)]
    pub jmax: usize,
    #[arg(long, default_value_t = 4)]
    pub kmax: usize,
    /// Series truncation for generating-function checks.
    #[arg(long, default_value_t = 24)]
    pub order: usize,
    /// Cap every `n` axis of the registries.
    #[arg(long)]
    pub nmax: Option<i64>,
    /// Also write the JSON report array here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GuessArgs {
    #[arg(long)]
    pub k: usize,
    /// Number of terms; default 3k+10.
    #[arg(long)]
    pub terms: Option<usize>,
    /// Guess over ℚ(t) from a(n,k,t).
    #[arg(long)]
    pub t: bool,
}

#[derive(Args, Debug)]
pub struct OeisArgs {
    /// A-number such as A000045.
    pub a_number: String,
    /// Generator: a(n,K), a(n,K,1,1), a(n,K,1,-1) or corridor; default from the built-in table.
    #[arg(long)]
    pub gen: Option<String>,
    /// Computed term i is compared with OEIS term i + shift.
    #[arg(long)]
    pub shift: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub terms: usize,
    /// Fetch the b-file from oeis.org (falls back to the bundled copy).
    #[arg(long)]
    pub online: bool,
    /// Cache directory; overrides STRIPCOMB_CACHE.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    #[arg(long, default_value_t = 12)]
    pub nmax: i64,
    #[arg(long, default_value_t = 5)]
    pub kmax: i64,
}
