//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "bruhat",
    version,
    about = "Bruhat intervals, Bruhat cosets and quotient intervals of Coxeter groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Which Coxeter system to work in. Without any of these flags the system
/// is type A with the smallest rank that fits the element literals.
#[derive(Args, Debug, Clone, Default)]
pub struct SystemArgs {
    /// Type letter (A-G). Type A uses the permutation backend.
    #[arg(long = "type", value_name = "LETTER", conflicts_with_all = ["matrix_file", "group"])]
    pub kind: Option<String>,
    /// Rank for --type; inferred from --w for type A when omitted.
    #[arg(long, requires = "kind")]
    pub rank: Option<usize>,
    /// Descriptor JSON: {"type":"A","rank":3} or {"coxeter_matrix":[[...]]} (0 = infinity).
    #[arg(long, value_name = "PATH", conflicts_with = "group")]
    pub matrix_file: Option<PathBuf>,
    /// Group name such as A3, B3, G2 or S4.
    #[arg(long, value_name = "NAME")]
    pub group: Option<String>,
}

/// Which elements `w` a check or scan runs over. Default: the whole group.
#[derive(Args, Debug, Clone, Default)]
pub struct ScopeArgs {
    /// Element literal; repeatable. One-line (type A only) or word, e.g. "2 1 3 2".
    #[arg(long = "w", value_name = "ELEMENT")]
    pub w: Vec<String>,
    /// Every element of the group (or of length <= --max-length).
    #[arg(long, conflicts_with_all = ["sample", "w"])]
    pub all: bool,
    /// A seeded random sample of N distinct elements.
    #[arg(long, value_name = "N", conflicts_with = "w")]
    pub sample: Option<usize>,
    /// Seed for --sample.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Restrict the universe to elements of length at most L (needed for infinite groups).
    #[arg(long, value_name = "L")]
    pub max_length: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Table,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Table => "txt",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    Theorem1,
    Theorem2,
    Appendix,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanName {
    /// Deodhar's inequality deg(u) >= l(w).
    Deodhar,
    /// Degree monotonicity along Bruhat order (open question; evidence only).
    Degmono,
    /// Poincare polynomials of w and of P_down(w).
    Poincare,
    /// Two-sided coset phenomena: non-unique factorizations, index choice, gaps.
    Witnesses,
    /// Degree is constant on Bruhat cosets.
    Degclass,
    /// First separated w whose interval is not the product of its extremes.
    Product,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The lower interval [e, w]: members, length levels, Bruhat graph edges.
    Interval {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long = "w", value_name = "ELEMENT")]
        w: String,
        /// Keep only covering edges (length difference 1) in DOT output.
        #[arg(long)]
        hasse: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// The partition of [e, w] into Bruhat cosets.
    Cosets {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long = "w", value_name = "ELEMENT")]
        w: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// The quotient interval C(w): cosets, quotient order, arcs and checks.
    Quotient {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long = "w", value_name = "ELEMENT")]
        w: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Verify a statement on every w in scope; exit 1 if any clause fails.
    Check {
        #[arg(value_enum)]
        name: CheckName,
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        scope: ScopeArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Gather evidence over a scope; exit 1 only on a Deodhar violation.
    Scan {
        #[arg(value_enum)]
        name: ScanName,
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        scope: ScopeArgs,
        /// Maximum number of witnesses kept by degmono.
        #[arg(long, default_value_t = 20)]
        limit: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Write interval, cosets and quotient for one w into a directory.
    Export {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long = "w", value_name = "ELEMENT")]
        w: String,
        /// Only this format (default: all three).
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        hasse: bool,
        /// Output directory (created if missing).
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
}
