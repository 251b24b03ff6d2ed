//! Exact combinatorics of array-based DNA synthesis.
//!
//! A synthesis machine fixes a *master lineup* `M` of `t` letters and offers
//! them, in order, to `n` strands growing in parallel; each strand accepts a
//! subsequence of `M`. This crate counts what such a machine can produce:
//!
//! - [`sequences`]: alphabets, strands, the subsequence relation, synthesis
//!   time, and acceptance schedules — the primitive layer;
//! - [`qbonacci`]: higher-order Fibonacci numbers, their prefix sums, and the
//!   dominant growth root by bisection and by continued fraction;
//! - [`subseq_census`]: distinct-subsequence counts and histograms of a single
//!   lineup, a brute-force enumeration oracle, and exhaustive maximizer
//!   search;
//! - [`master_census`]: exact and closed-form-bounded counts of
//!   (lineup, strand-tuple) combinations over every lineup of a given length;
//! - [`greedy_recovery`]: greedy supersequence recovery, selection-matrix
//!   censuses with exact correlation inequalities, and master-less tuple/set
//!   counts.
//!
//! Counting paths are exact: they work in [`BigCount`] or [`Exact`] and never
//! round. Floating point appears only in root finding and in logarithmic
//! diagnostics. All operations are pure functions of immutable inputs; the
//! exhaustive censuses partition their search spaces internally and combine
//! partial results associatively, so outputs do not depend on worker count.
//!
//! ```
//! use synthcap_core::qbonacci::{growth_root, prefix_sum_fib_q};
//! use synthcap_core::sequences::{cyclic_lineup, Alphabet};
//! use synthcap_core::subseq_census::distinct_subsequences;
//! use synthcap_core::BigCount;
//!
//! let dna = Alphabet::dna();
//! let lineup = cyclic_lineup(&dna, 16);
//! let count: BigCount = distinct_subsequences(&lineup);
//! assert_eq!(count, prefix_sum_fib_q::<BigCount>(4, 16));
//! assert!((growth_root::<f64>(4, 1e-12).value - 1.9275619754829253).abs() < 1e-9);
//! ```

pub mod greedy_recovery;
pub mod master_census;
pub mod qbonacci;
pub mod scalar;
pub mod sequences;
pub mod subseq_census;

mod budget;
mod error;

pub use budget::Budget;
pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer; every census result is one.
pub type BigCount = num_bigint::BigUint;

/// Exact rational, used for probabilities and rational bounds.
pub type Exact = num_rational::Ratio<num_bigint::BigInt>;

/// Floating-point type used for roots and logarithmic diagnostics.
pub type Real = f64;
