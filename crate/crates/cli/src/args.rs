use clap::{Args, Parser, Subcommand, ValueEnum};

/// Skew polynomial arithmetic and (σ,δ)-polycyclic codes over GF(p^m).
///
/// Field elements are integer indices Σ d_i p^i over the power basis of the
/// field modulus. Polynomials and vectors are comma-separated index lists,
/// lowest degree first (`1,0,1` is x^2 + 1). Matrices and code bases separate
/// rows with `;`.
#[derive(Debug, Parser)]
#[command(name = "orecodec", version)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Field: gf(q), gf(p^m), optionally followed by /c0,...,1 for the modulus
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Power t of the Frobenius, σ(a) = a^(p^t)
    #[arg(long, global = true, conflicts_with = "ctx")]
    pub sigma: Option<u32>,
    /// Index of β in δ(a) = β(σ(a) − a)
    #[arg(long, global = true, conflicts_with = "ctx")]
    pub beta: Option<u64>,
    /// Context as sigma=t,beta=b
    #[arg(long, global = true)]
    pub ctx: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub output: Output,
    /// Lift enumeration and search guards; the estimated cost goes to stderr
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[default]
    Right,
    Left,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    #[default]
    Standard,
    Reversed,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Monic modulus
    #[arg(long)]
    pub f: String,
    /// Monic generator
    #[arg(long)]
    pub g: String,
    #[arg(long, value_enum, default_value_t)]
    pub side: SideArg,
}

#[derive(Debug, Args)]
pub struct SubspaceArgs {
    #[arg(long)]
    pub f: String,
    /// Spanning rows, separated by `;`
    #[arg(long)]
    pub basis: String,
    #[arg(long, value_enum, default_value_t)]
    pub side: SideArg,
}

#[derive(Debug, Args)]
pub struct WedderburnArgs {
    #[arg(long)]
    pub f: String,
    /// Points A with f_A = f; found automatically when omitted
    #[arg(long)]
    pub points: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field parameters, σ and δ tables, conjugacy classes
    FieldInfo,
    /// Product a·b
    PolyMul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Division a = q·b + r (right) or a = b·q + r (left)
    PolyDiv {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t)]
        side: SideArg,
    },
    /// Right evaluation g(a) and the right roots of g
    PolyEval {
        #[arg(long)]
        g: String,
        #[arg(long)]
        a: String,
    },
    /// Conjugacy class of a, and a^c when c is given
    ConjClass {
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: Option<String>,
    },
    /// Polycyclic code generated by g
    CodeNew(CodeArgs),
    /// Euclidean dual and its sequential check in the dual context
    CodeDual(CodeArgs),
    /// Annihilator dual l0 (left) or r0 (right)
    CodeAnnDual {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        dual: SideArg,
    },
    /// Minimum distance and weight distribution
    CodeWeights(CodeArgs),
    /// Whether a subspace is polycyclic, with its generator
    CodeCheck(SubspaceArgs),
    /// Whether a subspace is sequential
    SeqCheck {
        #[command(flatten)]
        space: SubspaceArgs,
        #[arg(long, value_enum, default_value_t)]
        variant: VariantArg,
    },
    /// Checks a candidate equivalence matrix B
    EquivCheck {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
        /// Rows separated by `;`
        #[arg(long)]
        matrix: String,
    },
    /// Searches monomial equivalences between right codes of f1 and f2
    EquivFind {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
    },
    /// Whether f is a Wedderburn polynomial
    WpolyCheck {
        #[arg(long)]
        f: String,
    },
    /// Minimal polynomial of a point set
    Minpoly {
        #[arg(long)]
        points: String,
    },
    /// Vandermonde matrix of a point set
    Vandermonde {
        #[arg(long)]
        points: String,
        /// Also check that V diagonalizes C_f
        #[arg(long)]
        f: Option<String>,
    },
    /// Mattson–Solomon transform of g
    Ms {
        #[command(flatten)]
        w: WedderburnArgs,
        #[arg(long)]
        g: String,
    },
    /// Inverse Mattson–Solomon transform of h
    MsInv {
        #[command(flatten)]
        w: WedderburnArgs,
        #[arg(long)]
        h: String,
    },
    /// Whether x lies in the idealizer of Sf
    IdealizerCheck {
        #[arg(long)]
        f: String,
    },
    /// Eigenvalue classes, eigenspaces and projections; components of the
    /// code generated by g when given
    Decompose {
        #[command(flatten)]
        w: WedderburnArgs,
        #[arg(long)]
        g: Option<String>,
    },
}
