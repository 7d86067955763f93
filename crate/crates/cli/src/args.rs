//! Command-line grammar.

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "periodlab",
    about = "A computational laboratory for periods: high-precision evaluation, \
             integer relation detection, and the conjectural Galois ledger",
    version,
    max_term_width = 100
)]
pub struct Cli {
    /// Decimal digits of working precision (env PERIODLAB_DIGITS).
    #[arg(long, global = true)]
    pub digits: Option<usize>,

    /// Emit JSON Lines instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Constants cache file (JSON; stale or corrupt entries are ignored).
    #[arg(long, global = true)]
    pub cache: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

pub const MAX_DIGITS: usize = 10_000;
pub const DEFAULT_DIGITS: usize = 50;

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate periods from the catalogue.
    Period {
        #[command(subcommand)]
        command: PeriodCommand,
    },
    /// Multiple zeta value combinatorics, values, and dimension tables.
    Mzv {
        #[command(subcommand)]
        command: MzvCommand,
    },
    /// Integer/polynomial relation hunting.
    Relation {
        #[command(subcommand)]
        command: RelationCommand,
    },
    /// The Galois ledger: descriptors, conjugates, CM detection, probes.
    Galois {
        #[command(subcommand)]
        command: GaloisCommand,
    },
    /// Built-in suites.
    Suite {
        #[command(subcommand)]
        command: SuiteCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum PeriodCommand {
    /// Compute a period to the requested precision.
    Compute {
        #[command(subcommand)]
        what: PeriodKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum PeriodKind {
    /// The circle constant.
    Pi,
    /// Natural log of a positive rational q != 1.
    Log(QArg),
    /// Riemann zeta at an integer s >= 2.
    Zeta(SArg),
    /// Multiple zeta value at an admissible composition.
    Mzv(CompArg),
    /// Gamma at a positive rational.
    Gamma(XArg),
    /// Periods and quasi-periods of y^2 = 4x^3 - g2 x - g3.
    Elliptic(CurveArgs),
    /// Generalized hypergeometric pFq at a rational point inside the disk.
    Hyp(HypArgs),
}

#[derive(Args, Debug)]
pub struct QArg {
    /// Rational argument, e.g. 2 or 1/2.
    #[arg(long)]
    pub q: String,
}

#[derive(Args, Debug)]
pub struct SArg {
    /// Integer s >= 2.
    #[arg(long, allow_hyphen_values = true)]
    pub s: i64,
}

#[derive(Args, Debug)]
pub struct CompArg {
    /// Composition, e.g. 2,1 (first part >= 2).
    #[arg(long)]
    pub comp: String,
}

#[derive(Args, Debug)]
pub struct XArg {
    /// Rational argument, e.g. 1/4.
    #[arg(long)]
    pub x: String,
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    /// Weierstrass invariant g2 (rational).
    #[arg(long, allow_hyphen_values = true)]
    pub g2: String,
    /// Weierstrass invariant g3 (rational).
    #[arg(long, allow_hyphen_values = true)]
    pub g3: String,
}

#[derive(Args, Debug)]
pub struct HypArgs {
    /// Upper parameters, comma-separated rationals.
    #[arg(long)]
    pub upper: String,
    /// Lower parameters, comma-separated rationals.
    #[arg(long)]
    pub lower: String,
    /// Argument z, rational with |z| < 1.
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
}

#[derive(Subcommand, Debug)]
pub enum MzvCommand {
    /// Dimension table: admissible counts, double-shuffle ranks, bounds,
    /// and the Zagier sequence d_s.
    Dims {
        #[arg(long)]
        max_weight: u32,
        /// Compute exact relation ranks up to this weight (they grow
        /// quickly; beyond it the rank/bound columns read "-").
        #[arg(long, default_value_t = 8)]
        rank_up_to: u32,
    },
    /// Evaluate one MZV.
    Value(CompArg),
    /// Print the finite double-shuffle relation rows at a weight.
    Relations {
        #[arg(long)]
        weight: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum RelationCommand {
    /// PSLQ over a list of values.
    Hunt {
        /// Comma-separated value expressions, e.g. "zeta(2),pi^2".
        #[arg(long)]
        values: String,
        /// Max-norm bound on coefficient vectors.
        #[arg(long, default_value_t = 1_000_000)]
        max_norm: u64,
        /// Override the detection threshold exponent (base 2).
        #[arg(long, allow_hyphen_values = true)]
        threshold_exp: Option<i64>,
    },
    /// Minimal polynomial recognition.
    Minpoly {
        /// Value expression, e.g. "sqrt(2)".
        #[arg(long)]
        value: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_norm: u64,
    },
    /// Monomial census over named generators.
    Census {
        /// Comma-separated generator expressions, e.g. "pi,zeta(2)".
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, default_value_t = 10_000)]
        max_norm: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum GaloisCommand {
    /// The catalogued ledger entry of a period class.
    Describe {
        /// Class spec: pi | log(q) | zeta(s) | zeta(s1,s2,...) |
        /// gamma(p/q) | elliptic(g2,g3) | algebraic(c0,...,cn).
        #[arg(long)]
        class: String,
    },
    /// Sample conjugates of a class at rational parameters.
    Conjugates {
        #[arg(long)]
        class: String,
        /// Scalars "2,1/3" or pairs "(1,0),(0,1)" for lattice orbits.
        #[arg(long)]
        params: String,
    },
    /// Complex multiplication detection for a curve over Q.
    Cm(CurveArgs),
    /// Run the monomial census over a class's period set and catalogue
    /// every relation found.
    Probe {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, default_value_t = 100)]
        max_norm: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum SuiteCommand {
    /// Run the acceptance criteria and print one pass/fail line each.
    Acceptance {
        /// Run only the criterion with this number (1-12).
        #[arg(long)]
        only: Option<usize>,
    },
}
