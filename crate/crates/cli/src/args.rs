use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact Hankel determinants of C-fractions and related series.
#[derive(Parser, Debug)]
#[command(name = "hankel", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficients f_0..f_order of a series.
    Expand {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        order: usize,
    },
    /// Hankel determinants det(f_{i+j+offset}) of sizes 1..=upto+1.
    Transform {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        #[arg(long)]
        upto: usize,
    },
    /// Predicted determinants from a b-sequence, or from a named family.
    Closedform {
        #[command(flatten)]
        source: Source,
        /// Single value d(b_k).
        #[arg(long, conflicts_with = "upto")]
        k: Option<usize>,
        /// The whole transform d(0..=upto).
        #[arg(long)]
        upto: Option<usize>,
        /// Named family; see `--family help`.
        #[arg(long)]
        family: Option<String>,
    },
    /// Orthogonal polynomials r_k, determinantal polynomials p_n, or the
    /// classification of p_m in terms of r_k.
    Polys {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = PolyKind::R)]
        kind: PolyKind,
        /// Largest index.
        #[arg(long)]
        k: usize,
    },
    /// Numerators of the all-ones-powers C-fraction of a series.
    Reconstruct {
        #[command(flatten)]
        source: Source,
        /// Recovers a_0..a_{2k+1}.
        #[arg(long)]
        k: usize,
    },
    /// Runs a verification suite; exits 3 if any case fails.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        upto: Option<usize>,
        /// Number of random cases when no sequence is given.
        #[arg(long, default_value_t = 20)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Runs the tasks of a JSON job file.
    Job { path: std::path::PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    R,
    P,
    Relations,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Orthogonality,
    ClosedForm,
    Signs,
    Step,
    Reductions,
    Condensation,
    Classification,
}

/// Where the series or fraction comes from.
#[derive(Args, Clone, Debug, Default)]
pub struct Source {
    /// Index sequence, with or without the leading -1.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Powers m_0,m_1,...; a `;` starts the repeating cycle, as in `1,2;1`.
    #[arg(long, conflicts_with = "b")]
    pub powers: Option<String>,
    /// Comma-separated numerators, or `ones`, or `eisenstein`.
    #[arg(long, allow_hyphen_values = true)]
    pub numerators: Option<String>,
    /// Numerators a_0, a_1, ... as indeterminates (the default).
    #[arg(long, conflicts_with = "numerators")]
    pub symbolic: bool,
    /// Builtin series name.
    #[arg(long, conflicts_with_all = ["b", "powers"])]
    pub builtin: Option<String>,
    /// Explicit coefficients f_0,f_1,...
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["b", "powers", "builtin"])]
    pub series: Option<String>,
    /// Value of q; declares q for numerator input.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Value of u; declares u for numerator input.
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,
    /// Stretch factor for catalan-stretched and the parametrized families
    #[arg(long)]
    pub m: Option<u32>,
    /// Value of a; declares a for numerator input.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
}
