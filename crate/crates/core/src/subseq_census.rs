//! Exact subsequence statistics of a single master lineup.
//!
//! The production path is the last-occurrence dynamic program
//! `c_s = 2 c_{s-1} - c_{prev(s)-1}`. Two independent routes are kept
//! alongside it for cross-checking: the brute-force enumeration oracle
//! (expand all embeddings, deduplicate) and the first-letter recurrence
//! `|[M]| = 1 + sum over letters of |[M after the letter's first
//! occurrence]|`.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::scalar::Count;
use crate::sequences::{Alphabet, Strand};
use crate::{BigCount, Budget, Error, Result};

/// Number of distinct subsequences of `m`, the empty strand included.
pub fn distinct_subsequences<T: Count>(m: &Strand) -> T {
    let letters = m.letters();
    let mut counts: Vec<T> = Vec::with_capacity(letters.len() + 1);
    counts.push(T::one());
    let mut last_seen: HashMap<u32, usize> = HashMap::new();
    for (s, &a) in letters.iter().enumerate() {
        let doubled = counts[s].clone() + &counts[s];
        let next = match last_seen.get(&a) {
            Some(&u) => doubled - &counts[u], // u is 1-based prev position - 1
            None => doubled,
        };
        counts.push(next);
        last_seen.insert(a, s);
    }
    counts.pop().expect("at least one entry")
}

/// First-letter recurrence route for the same count; independent of the
/// last-occurrence DP. Linear in `|m|` times the number of distinct letters.
pub fn distinct_subsequences_first_letter<T: Count>(m: &Strand) -> T {
    let letters = m.letters();
    let len = letters.len();
    // counts[s] = |[suffix starting at s]|, including the empty strand.
    let mut counts: Vec<T> = vec![T::zero(); len + 1];
    counts[len] = T::one();
    let mut first_at: HashMap<u32, usize> = HashMap::new();
    for s in (0..len).rev() {
        first_at.insert(letters[s], s);
        let mut total = T::one();
        for &f in first_at.values() {
            total = total + &counts[f + 1];
        }
        counts[s] = total;
    }
    counts.swap_remove(0)
}

/// Histogram of the subsequences of a lineup by synthesis time.
///
/// `counts[s]` is the number of distinct subsequences whose leftmost
/// embedding ends exactly at position `s`; `counts[0] = 1` for the empty
/// strand, and the counts sum to the distinct-subsequence total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeHistogram<T = BigCount> {
    counts: Vec<T>,
    lineup: Strand,
}

impl<T: Count> TimeHistogram<T> {
    pub fn counts(&self) -> &[T] {
        &self.counts
    }

    pub fn lineup(&self) -> &Strand {
        &self.lineup
    }

    pub fn total(&self) -> T {
        self.counts.iter().fold(T::zero(), |acc, c| acc + c)
    }
}

/// Synthesis-time histogram of `m`.
///
/// Recurrence: `counts[s]` sums `counts[s-u]` for `u = 1, 2, ...` up to and
/// including the first offset at which the lineup letter matches `m[s]`
/// (all the way down to `counts[0]` when the letter is new). Deleting the
/// last letter of a subsequence realizes the underlying bijection.
pub fn time_histogram<T: Count>(m: &Strand) -> TimeHistogram<T> {
    let letters = m.letters();
    let mut counts: Vec<T> = Vec::with_capacity(letters.len() + 1);
    counts.push(T::one());
    for s in 1..=letters.len() {
        let a = letters[s - 1];
        let mut total = T::zero();
        for u in 1..=s {
            total = total + &counts[s - u];
            if u < s && letters[s - u - 1] == a {
                break; // first matching offset is included, then stop
            }
        }
        counts.push(total);
    }
    TimeHistogram {
        counts,
        lineup: m.clone(),
    }
}

/// Histogram of the distinct subsequences of a lineup by length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthHistogram<T = BigCount> {
    counts: Vec<T>,
}

impl<T: Count> LengthHistogram<T> {
    pub fn counts(&self) -> &[T] {
        &self.counts
    }

    pub fn total(&self) -> T {
        self.counts.iter().fold(T::zero(), |acc, c| acc + c)
    }
}

/// Length histogram of `m`: `counts[l]` distinct subsequences of length `l`.
///
/// Two-dimensional last-occurrence DP over (prefix, length); quadratic in
/// `|m|` in both time and memory.
pub fn length_histogram<T: Count>(m: &Strand) -> LengthHistogram<T> {
    let letters = m.letters();
    let len = letters.len();
    // rows[s][l] = number of distinct length-l subsequences of the length-s
    // prefix. Row s needs the row just before the previous occurrence of
    // m[s], so all rows are kept.
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(len + 1);
    let mut first_row = vec![T::zero(); len + 1];
    first_row[0] = T::one();
    rows.push(first_row);
    let mut last_seen: HashMap<u32, usize> = HashMap::new();
    for (s, &a) in letters.iter().enumerate() {
        let mut row = vec![T::zero(); len + 1];
        row[0] = T::one();
        for l in 1..=s + 1 {
            let mut v = rows[s][l].clone() + &rows[s][l - 1];
            if let Some(&u) = last_seen.get(&a) {
                v = v - &rows[u][l - 1];
            }
            row[l] = v;
        }
        rows.push(row);
        last_seen.insert(a, s);
    }
    let mut counts = rows.pop().expect("at least one row");
    counts.truncate(len + 1);
    LengthHistogram { counts }
}

/// Default letter cap for [`enumerate_subsequences`].
pub const DEFAULT_ENUMERATION_CAP: u32 = 18;

/// The exact set of distinct subsequences of `m`, built by expanding all
/// `2^|m|` embeddings into a deduplicating set. Refuses lineups longer than
/// `cap` letters; the DP routes are the way past that.
pub fn enumerate_subsequences(m: &Strand, cap: u32) -> Result<HashSet<Strand>> {
    let len = m.len() as u32;
    if len > cap.min(63) {
        return Err(Error::BudgetExceeded {
            needed: 1u128.checked_shl(len).unwrap_or(u128::MAX),
            limit: 1u128.checked_shl(cap.min(63)).unwrap_or(u128::MAX),
        });
    }
    let letters = m.letters();
    let mut out = HashSet::new();
    for mask in 0u64..(1u64 << len) {
        let picked: Strand = letters
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect();
        out.insert(picked);
    }
    Ok(out)
}

/// Exact maximum of [`distinct_subsequences`] over every length-`t` lineup,
/// with the full set of maximizers in lexicographic order.
///
/// The lineup space is partitioned across threads; max and argmax-set union
/// combine associatively, so the result does not depend on the partition.
pub fn search_maximizers(
    alphabet: &Alphabet,
    t: u32,
    budget: &Budget,
) -> Result<(BigCount, Vec<Strand>)> {
    let total = lineup_space(alphabet.size(), t, budget)?;
    let best = (0..total)
        .into_par_iter()
        .fold(
            || (BigCount::from(0u8), Vec::new()),
            |(mut best, mut argmax), ordinal| {
                let lineup = alphabet.strand_at(t, ordinal);
                let count: BigCount = distinct_subsequences(&lineup);
                if count > best {
                    best = count;
                    argmax.clear();
                    argmax.push(ordinal);
                } else if count == best {
                    argmax.push(ordinal);
                }
                (best, argmax)
            },
        )
        .reduce(
            || (BigCount::from(0u8), Vec::new()),
            |(a_best, mut a_arg), (b_best, mut b_arg)| match a_best.cmp(&b_best) {
                std::cmp::Ordering::Greater => (a_best, a_arg),
                std::cmp::Ordering::Less => (b_best, b_arg),
                std::cmp::Ordering::Equal => {
                    a_arg.append(&mut b_arg);
                    (a_best, a_arg)
                }
            },
        );
    let (max, mut ordinals) = best;
    ordinals.sort_unstable();
    let lineups = ordinals
        .into_iter()
        .map(|o| alphabet.strand_at(t, o))
        .collect();
    Ok((max, lineups))
}

/// Budget-checked size of the length-`t` lineup space over `q` letters.
pub(crate) fn lineup_space(q: u32, t: u32, budget: &Budget) -> Result<u64> {
    let space = (q as u128).checked_pow(t).unwrap_or(u128::MAX);
    let steps = space.saturating_mul(t.max(1) as u128);
    budget.charge_steps(steps)?;
    u64::try_from(space).map_err(|_| Error::BudgetExceeded {
        needed: steps,
        limit: budget.max_steps,
    })
}
