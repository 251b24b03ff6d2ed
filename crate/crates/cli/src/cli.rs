//! Argument grammar.

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "synthcap",
    version,
    about = "Exact combinatorics of array-based DNA synthesis: censuses, bounds, and capacity",
    after_help = "Environment: SYNTHCAP_BUDGET caps enumeration steps (default 1e9); \
                  SYNTHCAP_THREADS caps worker threads.\n\
                  Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 budget exceeded."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RootMethodArg {
    Bisect,
    Cfrac,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScaleArg {
    Small,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// q-bonacci number F_q(t), or its prefix sum with --sum.
    Qbonacci {
        /// Recurrence order (alphabet size), at least 1.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        /// Term index; negative indices give 0.
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        /// Prefix sum F_q(0) + ... + F_q(t) instead of the single term.
        #[arg(long)]
        sum: bool,
    },

    /// Dominant growth root of the q-bonacci recurrence.
    Phi {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(long, value_enum, default_value = "bisect")]
        method: RootMethodArg,
        /// Residual tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Fixed iteration count for --method cfrac (default: iterate until
        /// the residual drops to --tol, at most 10000 times).
        #[arg(long)]
        iters: Option<u32>,
    },

    /// Subsequence statistics of one master lineup.
    Count {
        /// Master lineup text (joined single characters or comma-separated
        /// tokens).
        #[arg(long)]
        master: String,
        /// Alphabet (defaults to the distinct letters of the lineup in
        /// order of first appearance).
        #[arg(long)]
        alphabet: Option<String>,
        /// Histogram by synthesis time instead of the total.
        #[arg(long, conflicts_with = "by_length")]
        by_tau: bool,
        /// Histogram by strand length instead of the total.
        #[arg(long)]
        by_length: bool,
    },

    /// Synthesis time of a strand under a finite or cyclic master lineup.
    Tau {
        #[arg(long)]
        strand: String,
        /// Finite master lineup.
        #[arg(long, conflicts_with = "cyclic", required_unless_present = "cyclic")]
        master: Option<String>,
        /// Alphabet whose unbounded cyclic lineup serves as the master.
        #[arg(long)]
        cyclic: Option<String>,
    },

    /// Exact censuses and closed-form bounds.
    #[command(subcommand)]
    Census(CensusCommand),

    /// Greedy common supersequence of the given strands.
    Greedy {
        /// Comma-separated strands over single-character symbols.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        strands: Vec<String>,
        /// Alphabet fixing symbol order for tie-breaks (default ACGT).
        #[arg(long)]
        alphabet: Option<String>,
    },

    /// Capacity report in bits.
    Capacity {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        q: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        /// Number of strands; zero is rejected.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Also compute the exact census (budget-guarded).
        #[arg(long)]
        exact: bool,
    },

    /// Replay the verification suite; exit status reflects failures.
    Verify {
        #[arg(long, value_enum, default_value = "small")]
        scale: ScaleArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum CensusCommand {
    /// Pairs (M, x) with x a subsequence of M, over all length-t lineups.
    Pairs {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(long)]
        t: u32,
        /// Compute the exact census by enumeration (budget-guarded).
        #[arg(long)]
        exact: bool,
        /// Report the closed-form bounds (default when --exact is absent).
        #[arg(long)]
        bounds: bool,
    },

    /// Tuples (M, x^1..x^n), over all length-t lineups.
    Tuples {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        bounds: bool,
    },

    /// Valid t x n selection matrices (row majority, no p-run of zeros in
    /// any column), with exact correlation quantities.
    Matrices {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        /// Strand count; must be odd.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Forbidden zero-run length.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
        /// Accepted for grammar symmetry; the exact census is always run.
        #[arg(long)]
        exact: bool,
        /// Accepted for grammar symmetry; the bound is always reported.
        #[arg(long)]
        bounds: bool,
    },

    /// Ordered master-less n-tuples with a common supersequence of length
    /// at most t.
    MasterlessTuples {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        bounds: bool,
    },

    /// Unordered master-less sets of n distinct strands.
    MasterlessSets {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        bounds: bool,
    },
}
