use std::num::NonZeroUsize;
use std::path::PathBuf;

use canonlab_core::linext::RhoRule;
use canonlab_core::poset::InterCopyEdge;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "canonlab", version, about = "Descent polynomials of canon permutations and labeled posets")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Worker threads for sums over permutations and sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<NonZeroUsize>,

    /// Raise the brute-force cap on |P| * n (default 12).
    #[arg(long, global = true, value_name = "N")]
    pub force_cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a named polynomial.
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        #[command(flatten)]
        shape: Shape,
        /// Largest j for `order`.
        #[arg(long, default_value_t = 8)]
        max_j: usize,
    },
    /// Check one identity, or every identity with `all`.
    Verify {
        /// Claim name, or `all`.
        claim: String,
        #[command(flatten)]
        shape: Shape,
        /// Largest m * n for `verify all`.
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Exhaustive search over every set of removed inter-copy covers.
    Sweep {
        #[arg(value_enum)]
        kind: SweepKind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// γ-vector of C_n^m against ρ-descent counts of the checked product.
    Gamma {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = RuleArg::Lexicographic)]
        rule: RuleArg,
    },
    /// List the linear extensions of a poset with their words.
    Extensions {
        #[command(flatten)]
        shape: Shape,
        /// Use the checked product of [m] and [n].
        #[arg(long)]
        checked: bool,
        /// Print only the count and the descent histogram.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    Canon,
    Eulerian,
    Narayana,
    Hstar,
    Dissonant,
    Weak,
    Order,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Lexicographic,
    LabelOrParity,
}

impl From<RuleArg> for RhoRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Lexicographic => RhoRule::Lexicographic,
            RuleArg::LabelOrParity => RhoRule::LabelOrParity,
        }
    }
}

/// Which poset and labeling a command works on.
#[derive(Debug, Clone, Default, Args)]
pub struct Shape {
    /// Size of the chain [m].
    #[arg(long)]
    pub m: Option<usize>,
    /// Number of copies.
    #[arg(long)]
    pub n: Option<usize>,
    /// Poset JSON file: {"elements": N, "covers": [[a,b],...], "labels": [...]}.
    #[arg(long, value_name = "FILE")]
    pub poset: Option<PathBuf>,
    /// Reduce redundant or repeated covers in --poset instead of rejecting them.
    #[arg(long)]
    pub repair: bool,
    /// Labeling as a comma-separated permutation, e.g. 2,1.
    #[arg(long, value_delimiter = ',')]
    pub labels: Option<Vec<usize>>,
    /// Inter-copy covers (p,j) < (p,j+1) to delete, as p:j,p:j,...
    #[arg(long, value_delimiter = ',')]
    pub remove: Option<Vec<InterCopyEdge>>,
}

