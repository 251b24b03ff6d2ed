//! Censuses over every master lineup of a given length: exact counts of
//! (lineup, strand-tuple) combinations and the closed-form bounds that
//! bracket them.
//!
//! Exact counts recompute the subsequence DP per lineup; at desk scale
//! (`q^t` up to about 10^7) that is affordable and keeps the code auditable.
//! Sharing suffix DP state across lineups would speed this up and is left as
//! future work. Bounds are evaluated in exact integer arithmetic; growth
//! rates derived from the floating root are reported separately as
//! diagnostics.

use std::collections::BTreeMap;

use num_traits::Pow;
use rayon::prelude::*;

use crate::qbonacci::{growth_root, prefix_sum_fib_q};
use crate::sequences::Alphabet;
use crate::subseq_census::{distinct_subsequences, lineup_space};
use crate::{BigCount, Budget, Result};

/// Parameter triple of a census: alphabet size, lineup length, strand count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusParams {
    pub q: u32,
    pub t: u32,
    pub n: u32,
}

/// An exact-or-bounded census result. Whenever `exact` is present,
/// `lowers[p] <= exact <= upper` holds for every `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub params: CensusParams,
    pub exact: Option<BigCount>,
    /// `q^t * S_q(t)^n`.
    pub upper: BigCount,
    /// `(q + 1 - p)^t * S_p(t)^n` per window parameter `p` in `2..=q`.
    pub lowers: BTreeMap<u32, BigCount>,
    /// Sharper pair-census lower bound counting lineups with no immediate
    /// letter repeat exactly: `q (q-1)^(t-1) * S_2(t)`. Pairs only (n = 1).
    pub lower_no_repeat: Option<BigCount>,
}

impl CensusResult {
    /// True when every recorded bound brackets the exact value (vacuously
    /// true without an exact value).
    pub fn bracket_holds(&self) -> bool {
        let Some(exact) = &self.exact else {
            return true;
        };
        if exact > &self.upper {
            return false;
        }
        if let Some(nr) = &self.lower_no_repeat {
            if nr > exact {
                return false;
            }
        }
        self.lowers.values().all(|low| low <= exact)
    }
}

/// Exact number of pairs `(M, x)` with `x` a subsequence of `M` over all
/// length-`t` lineups: the sum of the distinct-subsequence counts.
///
/// The empty strand is included for every lineup; subtract `q^t` for the
/// convention that excludes it.
pub fn count_pairs_exact(alphabet: &Alphabet, t: u32, budget: &Budget) -> Result<BigCount> {
    count_tuples_exact(alphabet, t, 1, budget)
}

/// Exact number of tuples `(M, x^1, ..., x^n)` with every `x^i` a
/// subsequence of `M` over all length-`t` lineups: the sum of the `n`-th
/// powers of the distinct-subsequence counts.
pub fn count_tuples_exact(
    alphabet: &Alphabet,
    t: u32,
    n: u32,
    budget: &Budget,
) -> Result<BigCount> {
    assert!(n >= 1, "tuple length must be at least 1");
    let total = lineup_space(alphabet.size(), t, budget)?;
    Ok((0..total)
        .into_par_iter()
        .map(|ordinal| {
            let lineup = alphabet.strand_at(t, ordinal);
            let count: BigCount = distinct_subsequences(&lineup);
            if n == 1 {
                count
            } else {
                count.pow(n)
            }
        })
        .reduce(|| BigCount::from(0u8), |a, b| a + b))
}

/// Closed-form bounds on the pair census (n = 1), including the
/// no-immediate-repeat specialization (which at q = 3 is the
/// `3 * 2^(t-1) * (F_2(t+2) - 1)` bound).
pub fn pair_bounds(q: u32, t: u32) -> CensusResult {
    let mut result = tuple_bounds(q, t, 1);
    let no_repeat_lineups = if t == 0 {
        BigCount::from(1u8)
    } else {
        BigCount::from(q) * BigCount::from(q - 1).pow(t - 1)
    };
    result.lower_no_repeat = Some(no_repeat_lineups * prefix_sum_fib_q::<BigCount>(2, t as u64));
    result
}

/// Closed-form bounds on the tuple census: upper `q^t * S_q(t)^n`, lower
/// `(q + 1 - p)^t * S_p(t)^n` for each `p` in `2..=q`.
pub fn tuple_bounds(q: u32, t: u32, n: u32) -> CensusResult {
    assert!(q >= 2, "bounds need an alphabet of at least two symbols");
    assert!(n >= 1, "tuple length must be at least 1");
    let upper = BigCount::from(q).pow(t) * prefix_sum_fib_q::<BigCount>(q, t as u64).pow(n);
    let lowers = (2..=q)
        .map(|p| {
            let lineups = BigCount::from(q + 1 - p).pow(t);
            let per_lineup = prefix_sum_fib_q::<BigCount>(p, t as u64).pow(n);
            (p, lineups * per_lineup)
        })
        .collect();
    CensusResult {
        params: CensusParams { q, t, n },
        exact: None,
        upper,
        lowers,
        lower_no_repeat: None,
    }
}

/// Floating growth-rate diagnostics: the per-time-step factors of the
/// closed-form bounds, `q * phi_q` for the upper bound and
/// `(q + 1 - p) * phi_p` per lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRates {
    pub upper: f64,
    pub lowers: BTreeMap<u32, f64>,
}

pub fn growth_rates(q: u32) -> GrowthRates {
    assert!(
        q >= 2,
        "growth rates need an alphabet of at least two symbols"
    );
    let phi = |p: u32| growth_root::<f64>(p, 1e-12).value;
    GrowthRates {
        upper: q as f64 * phi(q),
        lowers: (2..=q).map(|p| (p, (q + 1 - p) as f64 * phi(p))).collect(),
    }
}
