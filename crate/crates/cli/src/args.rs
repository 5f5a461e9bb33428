use clap::{Parser, Subcommand, ValueEnum};

use axb_core::Mode;

#[derive(Parser, Debug)]
#[command(
    name = "axb",
    version,
    about = "Exact computations in the ax+b-semigroup C*-algebras Q_N and Q_Z"
)]
pub struct Cli {
    /// Algebra: N (generators u, s_n) or Z (adds the flip f).
    #[arg(long, global = true, default_value = "N")]
    pub mode: Mode,

    /// Seed for every randomized suite.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Number of colimit stages to materialize.
    #[arg(long, global = true)]
    pub stages: Option<usize>,

    /// Index bound for the suites, or the largest divisor queried by `ktheory bd`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub bound: Option<i64>,

    /// Half-width of the basis window `[-W, W]` on l^2(Z).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub window: Option<i64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    /// One JSON record per line with fields suite, case, status, witness.
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Relation, commutation, trace, KMS and oracle suites up to `--bound`.
    Verify,
    /// K-groups of a built-in system, compared with the bundled expectations.
    Ktheory {
        #[arg(value_enum)]
        scenario: Scenario,
        /// Number of primes for `bn` and `bnprime`.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Explicit prime list for `fprime`, comma separated.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// Generator order of the dihedral matrices.
        #[arg(long, value_enum, default_value_t = Order::Standard)]
        order: Order,
    },
    /// The trace `tau` of an element, e.g. `axb trace "s7 S7"`.
    Trace { expr: String },
    /// Both sides of `tau(x lambda_i(y)) = tau(yx)`.
    Kms { x: String, y: String },
    /// The ax+b action on finite adeles.
    Adele {
        #[command(subcommand)]
        action: AdeleCommand,
    },
    /// Compare two elements as operators on l^2(Z), or run the seeded
    /// word suite when no elements are given.
    Oracle {
        x: Option<String>,
        y: Option<String>,
        /// Number of random words for the suite.
        #[arg(long, default_value_t = 1000)]
        count: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum AdeleCommand {
    /// Apply `x ↦ a x + b`, e.g. `axb adele act --a 3/2 --b 1 "0 + [2^4: 6, 3^2: 3]"`.
    Act {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        adele: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    /// Bunce-Deddens K_0 system.
    Bd,
    /// K(B_n) over N.
    Bn,
    /// K_0 system of F'.
    Fprime,
    /// K(B'_n) over Z.
    Bnprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Standard,
    Reversed,
}
