//! Greedy recovery of a master lineup from its strands, selection-matrix
//! censuses with exact correlation quantities, and master-less tuple/set
//! counting.
//!
//! A selection matrix `Y` links lineup rows to strand columns: entry
//! `(s, j) = 1` means strand `j` accepts the letter offered at time `s + 1`.
//! The two validity criteria are (a) every row has strictly more ones than
//! zeros, and (b) no column contains `p` consecutive zeros. For lineups whose
//! `p`-windows are distinct, every valid matrix yields a tuple of strands
//! from which the greedy algorithm rebuilds the lineup letter by letter.
//!
//! All probability-like quantities here are exact rationals; no floating
//! point enters any counting path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use crate::master_census::CensusParams;
use crate::qbonacci::{fib_q, prefix_sum_fib_q};
use crate::sequences::{Alphabet, Strand};
use crate::{BigCount, Budget, Error, Exact, Result};

/// Binary t x n matrix linking lineup rows to strand columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SelectionMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>, // row-major
}

impl SelectionMatrix {
    /// Build from row-major bits. Panics when the dimensions do not match.
    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Self {
        assert!(rows >= 1 && cols >= 1, "dimensions must be positive");
        assert_eq!(bits.len(), rows * cols, "bit count must be rows * cols");
        Self { rows, cols, bits }
    }

    /// Decode a matrix from the low `rows * cols` bits of `mask`,
    /// row-major with bit `r * cols + c`.
    pub fn from_bitmask(rows: usize, cols: usize, mask: u64) -> Self {
        assert!(rows * cols <= 64, "mask holds at most 64 bits");
        let bits = (0..rows * cols).map(|i| mask >> i & 1 == 1).collect();
        Self::new(rows, cols, bits)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        self.bits[row * self.cols + col]
    }

    fn row_ones(&self, row: usize) -> usize {
        (0..self.cols).filter(|&c| self.get(row, c)).count()
    }

    fn column_has_zero_run(&self, col: usize, p: u32) -> bool {
        let mut run = 0u32;
        for r in 0..self.rows {
            if self.get(r, col) {
                run = 0;
            } else {
                run += 1;
                if run >= p {
                    return true;
                }
            }
        }
        false
    }
}

/// Validity of a selection matrix: every row strictly majority ones and no
/// column with `p` consecutive zeros. The majority criterion needs an odd
/// column count; even counts are rejected.
pub fn matrix_valid(y: &SelectionMatrix, p: u32) -> Result<bool> {
    assert!(p >= 1, "zero-run length must be at least 1");
    if y.cols.is_multiple_of(2) {
        return Err(Error::EvenStrandCount { n: y.cols as u32 });
    }
    let majority = (0..y.rows).all(|r| 2 * y.row_ones(r) > y.cols);
    Ok(majority && (0..y.cols).all(|c| !y.column_has_zero_run(c, p)))
}

/// Strand `j` = the letters of `m` selected by the ones of column `j`.
pub fn strands_from_matrix(m: &Strand, y: &SelectionMatrix) -> Result<Vec<Strand>> {
    if y.rows != m.len() {
        return Err(Error::RowCountMismatch {
            rows: y.rows,
            len: m.len(),
        });
    }
    Ok((0..y.cols)
        .map(|j| {
            (0..y.rows)
                .filter(|&s| y.get(s, j))
                .map(|s| m.letters()[s])
                .collect()
        })
        .collect())
}

// Mask-level twins of the criteria, used in the census hot loop so that no
// matrix is materialized per candidate.
fn mask_rows_majority(mask: u64, rows: usize, cols: usize) -> bool {
    let row_mask = (1u64 << cols) - 1;
    (0..rows).all(|r| 2 * ((mask >> (r * cols)) & row_mask).count_ones() as usize > cols)
}

fn mask_columns_avoid_zero_run(mask: u64, rows: usize, cols: usize, p: u32) -> bool {
    for c in 0..cols {
        let mut run = 0u32;
        for r in 0..rows {
            if mask >> (r * cols + c) & 1 == 1 {
                run = 0;
            } else {
                run += 1;
                if run >= p {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact census of the t x n selection matrices, with the iid-uniform
/// expectations of the two criteria as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCensus {
    pub t: u32,
    pub n: u32,
    pub p: u32,
    /// Number of matrices satisfying both criteria.
    pub exact_valid: BigCount,
    /// `E[f]`: every column avoids `p` consecutive zeros.
    pub ef: Exact,
    /// `E[g]`: every row has strictly more ones than zeros.
    pub eg: Exact,
    /// `E[f g]`: both at once; `exact_valid / 2^(t n)`.
    pub efg: Exact,
    /// `F_p(t+1)^n / 2^t`, the guaranteed lower bound on the valid count.
    pub bound_lower: Exact,
}

/// Count the valid t x n matrices exactly by full enumeration, and report
/// `E[f]`, `E[g]`, `E[f g]` under the iid-uniform measure together with the
/// `F_p(t+1)^n / 2^t` lower bound.
pub fn count_valid_matrices(t: u32, n: u32, p: u32, budget: &Budget) -> Result<MatrixCensus> {
    assert!(t >= 1 && n >= 1, "dimensions must be positive");
    assert!(p >= 1, "zero-run length must be at least 1");
    if n.is_multiple_of(2) {
        return Err(Error::EvenStrandCount { n });
    }
    let bits = t as u128 * n as u128;
    let space = 1u128
        .checked_shl(bits.min(u32::MAX as u128) as u32)
        .unwrap_or(u128::MAX);
    budget.charge_steps(space.saturating_mul(bits))?;
    if bits > 63 {
        return Err(Error::BudgetExceeded {
            needed: space,
            limit: budget.max_steps,
        });
    }
    let (rows, cols) = (t as usize, n as usize);
    let (count_f, count_g, count_fg) = (0..1u64 << bits)
        .into_par_iter()
        .fold(
            || (0u64, 0u64, 0u64),
            |(f, g, fg), mask| {
                let col_ok = mask_columns_avoid_zero_run(mask, rows, cols, p);
                let row_ok = mask_rows_majority(mask, rows, cols);
                (
                    f + col_ok as u64,
                    g + row_ok as u64,
                    fg + (col_ok && row_ok) as u64,
                )
            },
        )
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));

    let denom = BigInt::one() << (t * n);
    let expectation = |count: u64| Exact::new(BigInt::from(count), denom.clone());
    let per_column: BigCount = fib_q::<BigCount>(p, t as i64 + 1);
    let bound_lower = Exact::new(BigInt::from(per_column.pow(n)), BigInt::one() << t);
    Ok(MatrixCensus {
        t,
        n,
        p,
        exact_valid: BigCount::from(count_fg),
        ef: expectation(count_f),
        eg: expectation(count_g),
        efg: expectation(count_fg),
        bound_lower,
    })
}

/// One step of the greedy recovery: the emitted letter, how many strands
/// voted for it, and how many strands were still live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreedyStep {
    pub letter: u32,
    pub votes: usize,
    pub live: usize,
}

/// Greedy common supersequence with a step trace.
///
/// Repeatedly appends the most common first letter among the non-depleted
/// strands (ties to the smaller alphabet index) and strips it from the
/// strands that start with it, until all strands deplete. Depleted strands
/// abstain from voting.
pub fn greedy_supersequence_trace(
    strands: &[Strand],
    alphabet: &Alphabet,
) -> Result<(Strand, Vec<GreedyStep>)> {
    for s in strands {
        alphabet.validate_strand(s)?;
    }
    let q = alphabet.size() as usize;
    let mut pos = vec![0usize; strands.len()];
    let mut out = Strand::new();
    let mut steps = Vec::new();
    loop {
        let mut votes = vec![0usize; q];
        let mut live = 0usize;
        for (j, x) in strands.iter().enumerate() {
            if pos[j] < x.len() {
                live += 1;
                votes[x.letters()[pos[j]] as usize] += 1;
            }
        }
        if live == 0 {
            break;
        }
        let mut winner = 0usize;
        let mut best = 0usize;
        for (a, &v) in votes.iter().enumerate() {
            if v > best {
                best = v;
                winner = a;
            }
        }
        out.push(winner as u32);
        for (j, x) in strands.iter().enumerate() {
            if pos[j] < x.len() && x.letters()[pos[j]] == winner as u32 {
                pos[j] += 1;
            }
        }
        steps.push(GreedyStep {
            letter: winner as u32,
            votes: best,
            live,
        });
    }
    Ok((out, steps))
}

/// Greedy common supersequence of `strands` (see
/// [`greedy_supersequence_trace`]). Always a supersequence of every input;
/// not necessarily a shortest one.
pub fn greedy_supersequence(strands: &[Strand], alphabet: &Alphabet) -> Result<Strand> {
    greedy_supersequence_trace(strands, alphabet).map(|(m, _)| m)
}

/// Exact shortest-common-supersequence length, by breadth-first search over
/// the product of per-strand positions. Appending a letter advances every
/// strand whose next letter matches, which is never worse than advancing a
/// subset.
pub fn scs_length(strands: &[Strand], budget: &Budget) -> Result<u64> {
    let refs: Vec<&Strand> = strands.iter().collect();
    Ok(scs_bfs(&refs, None, budget)?.expect("uncapped search always finishes"))
}

fn scs_bfs(strands: &[&Strand], cap: Option<u64>, budget: &Budget) -> Result<Option<u64>> {
    let dims: Vec<usize> = strands.iter().map(|s| s.len() + 1).collect();
    let mut states: u128 = 1;
    for &d in &dims {
        states = states.saturating_mul(d as u128);
    }
    budget.charge_scs_states(states)?;
    let total = usize::try_from(states).map_err(|_| Error::BudgetExceeded {
        needed: states,
        limit: budget.max_scs_states,
    })?;

    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let goal = total - 1;
    if goal == 0 {
        return Ok(Some(0)); // all strands empty (or no strands)
    }

    let mut visited = vec![false; total];
    visited[0] = true;
    let mut frontier = vec![0usize];
    let mut depth = 0u64;
    let mut next_letters: Vec<u32> = Vec::with_capacity(strands.len());
    while !frontier.is_empty() {
        if let Some(cap) = cap {
            if depth >= cap {
                return Ok(None); // the goal at depth <= cap would have been seen
            }
        }
        let mut next = Vec::new();
        for &state in &frontier {
            next_letters.clear();
            for (i, s) in strands.iter().enumerate() {
                let pos = state / strides[i] % dims[i];
                if pos < s.len() {
                    let a = s.letters()[pos];
                    if !next_letters.contains(&a) {
                        next_letters.push(a);
                    }
                }
            }
            for &a in &next_letters {
                let mut succ = state;
                for (i, s) in strands.iter().enumerate() {
                    let pos = state / strides[i] % dims[i];
                    if pos < s.len() && s.letters()[pos] == a {
                        succ += strides[i];
                    }
                }
                if succ == goal {
                    return Ok(Some(depth + 1));
                }
                if !visited[succ] {
                    visited[succ] = true;
                    next.push(succ);
                }
            }
        }
        depth += 1;
        frontier = next;
    }
    unreachable!("goal state is always reachable");
}

/// Master-less census: among all ordered tuples / unordered structures of
/// `n` strands of length at most `t`, how many admit a common supersequence
/// of length at most `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterlessCensus {
    pub params: CensusParams,
    /// Ordered n-tuples, repeated strands allowed.
    pub tuples: BigCount,
    /// Unordered sets of n pairwise-distinct strands.
    pub sets: BigCount,
    /// Unordered multisets of n strands (repeats allowed); variant kept for
    /// completeness.
    pub multisets: BigCount,
}

/// Count master-less tuples, sets, and multisets in one sweep over the
/// non-decreasing candidate tuples. Membership is decided by the exact
/// shortest-common-supersequence length.
pub fn masterless_census(
    alphabet: &Alphabet,
    t: u32,
    n: u32,
    budget: &Budget,
) -> Result<MasterlessCensus> {
    assert!(n >= 1, "tuple length must be at least 1");
    let q = alphabet.size();

    let mut candidate_count: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..=t {
        candidate_count = candidate_count.saturating_add(power);
        power = power.saturating_mul(q as u128);
    }
    // Work estimate: one bounded BFS of at most (t+1)^n states per multiset.
    let multisets = choose_u128(candidate_count.saturating_add(n as u128 - 1), n);
    let bfs_states = (t as u128 + 1).checked_pow(n).unwrap_or(u128::MAX);
    budget.charge_steps(multisets.saturating_mul(bfs_states))?;
    let candidate_total = u64::try_from(candidate_count).map_err(|_| Error::BudgetExceeded {
        needed: candidate_count,
        limit: budget.max_steps,
    })?;

    let mut candidates: Vec<Strand> = Vec::with_capacity(candidate_total as usize);
    for len in 0..=t {
        for ordinal in 0..(q as u64).pow(len) {
            candidates.push(alphabet.strand_at(len, ordinal));
        }
    }

    let zero = || (BigCount::zero(), BigCount::zero(), BigCount::zero());
    let (tuples, sets, multisets) = (0..candidates.len())
        .into_par_iter()
        .map(|first| {
            let mut acc = zero();
            let mut prefix = vec![first];
            descend_multisets(
                &candidates,
                &mut prefix,
                n as usize,
                t as u64,
                budget,
                &mut acc,
            )?;
            Ok::<_, Error>(acc)
        })
        .try_reduce(zero, |a, b| Ok((a.0 + b.0, a.1 + b.1, a.2 + b.2)))?;

    Ok(MasterlessCensus {
        params: CensusParams { q, t, n },
        tuples,
        sets,
        multisets,
    })
}

fn descend_multisets(
    candidates: &[Strand],
    prefix: &mut Vec<usize>,
    n: usize,
    t: u64,
    budget: &Budget,
    acc: &mut (BigCount, BigCount, BigCount),
) -> Result<()> {
    if prefix.len() == n {
        let strands: Vec<&Strand> = prefix.iter().map(|&i| &candidates[i]).collect();
        if scs_bfs(&strands, Some(t), budget)?.is_some() {
            acc.0 += multiset_permutations(prefix);
            if prefix.windows(2).all(|w| w[0] != w[1]) {
                acc.1 += BigCount::one();
            }
            acc.2 += BigCount::one();
        }
        return Ok(());
    }
    let start = *prefix.last().expect("prefix is never empty");
    for i in start..candidates.len() {
        prefix.push(i);
        descend_multisets(candidates, prefix, n, t, budget, acc)?;
        prefix.pop();
    }
    Ok(())
}

/// Ordered n-tuples (repeats allowed) of strands of length at most `t` that
/// admit a common supersequence of length at most `t`.
pub fn count_masterless_tuples(
    alphabet: &Alphabet,
    t: u32,
    n: u32,
    budget: &Budget,
) -> Result<BigCount> {
    masterless_census(alphabet, t, n, budget).map(|c| c.tuples)
}

/// Unordered sets of `n` distinct strands of length at most `t` that admit a
/// common supersequence of length at most `t`.
pub fn count_masterless_sets(
    alphabet: &Alphabet,
    t: u32,
    n: u32,
    budget: &Budget,
) -> Result<BigCount> {
    masterless_census(alphabet, t, n, budget).map(|c| c.sets)
}

/// Multiset variant (repeats allowed, order forgotten).
pub fn count_masterless_multisets(
    alphabet: &Alphabet,
    t: u32,
    n: u32,
    budget: &Budget,
) -> Result<BigCount> {
    masterless_census(alphabet, t, n, budget).map(|c| c.multisets)
}

/// Closed-form master-less bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterlessBounds {
    pub params: CensusParams,
    /// `(q + 1 - p)^t * F_p(t+1)^n / 2^t` per `p`: lower bound on ordered
    /// tuples.
    pub tuple_lowers: BTreeMap<u32, Exact>,
    /// Tuple lower divided by n!: lower bound for unordered sets.
    pub set_lowers: BTreeMap<u32, Exact>,
    /// Floors of the set lower bounds.
    pub set_lower_floors: BTreeMap<u32, BigCount>,
    /// `q^t * sum of C(S_q(t), k) for k <= n`: upper bound on unordered
    /// sets.
    pub set_upper: BigCount,
}

/// Evaluate the master-less bounds for odd `n` and every `p` in `2..=q`.
pub fn masterless_bounds(q: u32, t: u32, n: u32) -> Result<MasterlessBounds> {
    assert!(q >= 2, "bounds need an alphabet of at least two symbols");
    assert!(n >= 1, "tuple length must be at least 1");
    if n.is_multiple_of(2) {
        return Err(Error::EvenStrandCount { n });
    }
    let n_factorial = Exact::from_integer(BigInt::from(factorial(n)));
    let mut tuple_lowers = BTreeMap::new();
    let mut set_lowers = BTreeMap::new();
    let mut set_lower_floors = BTreeMap::new();
    for p in 2..=q {
        let lineups = BigCount::from(q + 1 - p).pow(t);
        let per_lineup: BigCount = fib_q::<BigCount>(p, t as i64 + 1);
        let tuple_lower = Exact::new(
            BigInt::from(lineups * per_lineup.pow(n)),
            BigInt::one() << t,
        );
        let set_lower = &tuple_lower / &n_factorial;
        let floor = set_lower
            .floor()
            .to_integer()
            .to_biguint()
            .expect("bound is nonnegative");
        tuple_lowers.insert(p, tuple_lower);
        set_lowers.insert(p, set_lower);
        set_lower_floors.insert(p, floor);
    }
    let set_upper =
        BigCount::from(q).pow(t) * choose_at_most(&prefix_sum_fib_q::<BigCount>(q, t as u64), n);
    Ok(MasterlessBounds {
        params: CensusParams { q, t, n },
        tuple_lowers,
        set_lowers,
        set_lower_floors,
        set_upper,
    })
}

fn factorial(n: u32) -> BigCount {
    (1..=n).fold(BigCount::one(), |acc, k| acc * BigCount::from(k))
}

/// Number of distinct orderings of a sorted index multiset.
fn multiset_permutations(sorted: &[usize]) -> BigCount {
    let mut result = factorial(sorted.len() as u32);
    let mut run = 1u32;
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            result /= factorial(run);
            run = 1;
        }
    }
    result / factorial(run)
}

/// Sum of C(s, k) for k from 0 to n, exact.
fn choose_at_most(s: &BigCount, n: u32) -> BigCount {
    let mut total = BigCount::one();
    let mut term = BigCount::one();
    for k in 1..=n {
        if BigCount::from(k) > *s {
            break; // C(s, k) vanishes beyond k = s
        }
        term = term * (s - BigCount::from(k - 1)) / BigCount::from(k);
        total += &term;
    }
    total
}

/// C(m, k) in saturating u128 arithmetic; used only for work estimates.
fn choose_u128(m: u128, k: u32) -> u128 {
    let mut result: u128 = 1;
    for i in 0..k as u128 {
        let factor = m.saturating_sub(i);
        result = result.saturating_mul(factor) / (i + 1);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{cyclic_lineup, is_subsequence, window_distinct};

    fn parse(alphabet: &Alphabet, text: &str) -> Strand {
        alphabet.parse_strand(text).unwrap()
    }

    #[test]
    fn matrix_validity_examples() {
        let one = SelectionMatrix::new(1, 1, vec![true]);
        assert_eq!(matrix_valid(&one, 2), Ok(true));
        let zero = SelectionMatrix::new(1, 1, vec![false]);
        assert_eq!(matrix_valid(&zero, 2), Ok(false));
        let column = SelectionMatrix::new(2, 1, vec![true, false]);
        assert_eq!(matrix_valid(&column, 2), Ok(false));
        let even = SelectionMatrix::new(1, 2, vec![true, true]);
        assert_eq!(matrix_valid(&even, 2), Err(Error::EvenStrandCount { n: 2 }));
    }

    #[test]
    fn mask_criteria_agree_with_matrix_path() {
        for mask in 0..1u64 << 12 {
            let y = SelectionMatrix::from_bitmask(4, 3, mask);
            assert_eq!(
                mask_rows_majority(mask, 4, 3),
                (0..4).all(|r| 2 * y.row_ones(r) > 3)
            );
            for p in 1..=3 {
                assert_eq!(
                    mask_columns_avoid_zero_run(mask, 4, 3, p),
                    (0..3).all(|c| !y.column_has_zero_run(c, p))
                );
            }
        }
    }

    #[test]
    fn strands_from_matrix_examples() {
        let dna = Alphabet::dna();
        let m = parse(&dna, "ACA");
        let y = SelectionMatrix::new(3, 1, vec![true, false, true]);
        assert_eq!(
            strands_from_matrix(&m, &y).unwrap(),
            vec![parse(&dna, "AA")]
        );

        let ones = SelectionMatrix::new(3, 2, vec![true; 6]);
        assert_eq!(
            strands_from_matrix(&m, &ones).unwrap(),
            vec![m.clone(), m.clone()]
        );

        let zeros = SelectionMatrix::new(3, 1, vec![false; 3]);
        assert_eq!(
            strands_from_matrix(&m, &zeros).unwrap(),
            vec![Strand::default()]
        );

        let wrong = SelectionMatrix::new(2, 1, vec![true, true]);
        assert_eq!(
            strands_from_matrix(&m, &wrong),
            Err(Error::RowCountMismatch { rows: 2, len: 3 })
        );
    }

    #[test]
    fn matrix_census_t1_n1() {
        let census = count_valid_matrices(1, 1, 2, &Budget::default()).unwrap();
        assert_eq!(census.exact_valid, BigCount::one());
        assert_eq!(
            census.bound_lower,
            Exact::new(BigInt::from(2), BigInt::from(2))
        );
        assert_eq!(census.ef, Exact::one());
        assert_eq!(census.eg, Exact::new(BigInt::one(), BigInt::from(2)));
        assert_eq!(census.efg, census.eg);
    }

    #[test]
    fn row_majority_probability_is_exact_half_per_row() {
        for t in 1..=4u32 {
            for n in [1u32, 3] {
                let census = count_valid_matrices(t, n, 2, &Budget::default()).unwrap();
                assert_eq!(
                    census.eg,
                    Exact::new(BigInt::one(), BigInt::one() << t),
                    "t = {t}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn single_column_zero_run_counts_are_qbonacci() {
        for p in 2..=3u32 {
            for t in 1..=8u32 {
                let census = count_valid_matrices(t, 1, p, &Budget::default()).unwrap();
                let good_columns = census.ef * Exact::from_integer(BigInt::one() << t);
                assert_eq!(
                    good_columns,
                    Exact::from_integer(BigInt::from(fib_q::<BigCount>(p, t as i64 + 1))),
                    "p = {p}, t = {t}"
                );
            }
        }
    }

    #[test]
    fn fkg_holds_on_small_grid() {
        for t in 1..=4u32 {
            for n in [1u32, 3] {
                for p in 2..=3u32 {
                    let c = count_valid_matrices(t, n, p, &Budget::default()).unwrap();
                    assert!(c.efg >= &c.ef * &c.eg, "t = {t}, n = {n}, p = {p}");
                    let scale = Exact::from_integer(BigInt::one() << (t * n));
                    assert_eq!(
                        c.efg * scale,
                        Exact::from_integer(BigInt::from(c.exact_valid.clone()))
                    );
                }
            }
        }
    }

    #[test]
    fn greedy_examples() {
        let dna = Alphabet::dna();
        let strands = vec![parse(&dna, "AC"), parse(&dna, "AA"), parse(&dna, "CA")];
        assert_eq!(
            greedy_supersequence(&strands, &dna).unwrap(),
            parse(&dna, "ACA")
        );
        assert_eq!(
            greedy_supersequence(&[Strand::default()], &dna).unwrap(),
            Strand::default()
        );
        let ac = Alphabet::parse("AC").unwrap();
        assert_eq!(
            greedy_supersequence(&[parse(&ac, "A")], &ac).unwrap(),
            parse(&ac, "A")
        );
        assert_eq!(
            greedy_supersequence(&[Strand::from(vec![5u32])], &ac),
            Err(Error::LetterOutOfRange { letter: 5, q: 2 })
        );
    }

    #[test]
    fn greedy_output_is_supersequence() {
        let dna = Alphabet::dna();
        let strands = vec![
            parse(&dna, "GATT"),
            parse(&dna, "ACA"),
            parse(&dna, "TTG"),
            Strand::default(),
        ];
        let m = greedy_supersequence(&strands, &dna).unwrap();
        for s in &strands {
            assert!(is_subsequence(s, &m));
        }
        let scs = scs_length(&strands, &Budget::default()).unwrap();
        assert!(m.len() as u64 >= scs);
    }

    #[test]
    fn scs_examples() {
        let dna = Alphabet::dna();
        let budget = Budget::default();
        assert_eq!(
            scs_length(&[parse(&dna, "AC"), parse(&dna, "CA")], &budget).unwrap(),
            3
        );
        assert_eq!(scs_length(&[parse(&dna, "AC")], &budget).unwrap(), 2);
        assert_eq!(
            scs_length(&[Strand::default(), Strand::default()], &budget).unwrap(),
            0
        );
        // The greedy example really is minimal.
        assert_eq!(
            scs_length(
                &[parse(&dna, "AC"), parse(&dna, "AA"), parse(&dna, "CA")],
                &budget
            )
            .unwrap(),
            3
        );
    }

    #[test]
    fn scs_budget_guard() {
        let long: Strand = (0..40u32).map(|i| i % 4).collect();
        let strands = vec![long.clone(), long.clone(), long.clone(), long];
        let tight = Budget {
            max_scs_states: 1_000,
            ..Budget::default()
        };
        assert!(matches!(
            scs_length(&strands, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        // 41^6 states overruns even the default allowance.
        let six = vec![strands[0].clone(); 6];
        assert!(matches!(
            scs_length(&six, &Budget::default()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn masterless_census_small_binary() {
        let ac = Alphabet::parse("AC").unwrap();
        let budget = Budget::default();
        let census = masterless_census(&ac, 1, 2, &budget).unwrap();
        assert_eq!(census.tuples, BigCount::from(7u8));
        assert_eq!(census.sets, BigCount::from(2u8));
        assert_eq!(census.multisets, BigCount::from(5u8));
        assert_eq!(
            count_masterless_tuples(&ac, 1, 2, &budget).unwrap(),
            census.tuples
        );
        assert_eq!(
            count_masterless_sets(&ac, 1, 2, &budget).unwrap(),
            census.sets
        );
        assert_eq!(
            count_masterless_multisets(&ac, 1, 2, &budget).unwrap(),
            census.multisets
        );
    }

    #[test]
    fn masterless_single_strand_counts_all_candidates() {
        for q in 2..=3u32 {
            let alphabet = Alphabet::of_size(q);
            for t in 0..=4u32 {
                let census = masterless_census(&alphabet, t, 1, &Budget::default()).unwrap();
                let expected: u64 = (0..=t).map(|l| (q as u64).pow(l)).sum();
                assert_eq!(census.tuples, BigCount::from(expected));
                assert_eq!(census.sets, census.tuples);
                assert_eq!(census.multisets, census.tuples);
            }
        }
    }

    #[test]
    fn masterless_bounds_example() {
        let bounds = masterless_bounds(2, 5, 3).unwrap();
        assert_eq!(
            bounds.tuple_lowers[&2],
            Exact::new(BigInt::from(2197), BigInt::from(32))
        );
        assert_eq!(
            bounds.set_lowers[&2],
            Exact::new(BigInt::from(2197), BigInt::from(192))
        );
        assert_eq!(bounds.set_lower_floors[&2], BigCount::from(11u8));
    }

    #[test]
    fn masterless_bounds_n1_has_no_factorial() {
        let bounds = masterless_bounds(3, 4, 1).unwrap();
        for p in 2..=3 {
            assert_eq!(bounds.tuple_lowers[&p], bounds.set_lowers[&p]);
        }
        assert_eq!(
            masterless_bounds(2, 3, 2),
            Err(Error::EvenStrandCount { n: 2 })
        );
    }

    #[test]
    fn set_upper_becomes_power_set() {
        // With n >= S_q(t) the binomial prefix sum closes to 2^S.
        let bounds = masterless_bounds(2, 1, 3).unwrap();
        // S_2(1) = 2, so sum_{k<=3} C(2,k) = 4 = 2^2; upper = 2^1 * 4.
        assert_eq!(bounds.set_upper, BigCount::from(8u8));
    }

    #[test]
    fn greedy_recovers_window_distinct_lineups_small() {
        // Tiny slice of the exhaustive acceptance grid.
        let alphabet = Alphabet::of_size(3);
        for t in 1..=3u32 {
            let valid: Vec<SelectionMatrix> = (0..1u64 << (3 * t))
                .map(|mask| SelectionMatrix::from_bitmask(t as usize, 3, mask))
                .filter(|y| matrix_valid(y, 2).unwrap())
                .collect();
            for ordinal in 0..(3u64).pow(t) {
                let m = alphabet.strand_at(t, ordinal);
                if !window_distinct(&m, 2) {
                    continue;
                }
                for y in &valid {
                    let strands = strands_from_matrix(&m, y).unwrap();
                    let (rebuilt, steps) = greedy_supersequence_trace(&strands, &alphabet).unwrap();
                    assert_eq!(rebuilt, m);
                    // Criterion (a) counts matrix rows; the live-strand vote
                    // is always at least that row majority.
                    for (s, step) in steps.iter().enumerate() {
                        let row_ones = (0..3).filter(|&c| y.get(s, c)).count();
                        assert!(step.votes >= row_ones);
                        assert!(2 * step.votes > 3);
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_lineups_are_window_distinct_inputs() {
        let alphabet = Alphabet::of_size(3);
        let m = cyclic_lineup(&alphabet, 4);
        assert!(window_distinct(&m, 2));
    }
}
