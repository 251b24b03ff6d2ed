//! Capacity arithmetic: bound assembly in bits and the best window
//! parameter.

use std::collections::BTreeMap;

use synthcap_core::master_census::{count_tuples_exact, tuple_bounds};
use synthcap_core::qbonacci::growth_root;
use synthcap_core::scalar::log2_count;
use synthcap_core::sequences::Alphabet;
use synthcap_core::{Budget, Result};

/// The integer p in [2, q] maximizing `(q + 1 - p) * phi_p^n`, compared in
/// log space so that huge `n` cannot overflow; ties go to the smaller p.
pub fn best_p(q: u32, n: u32) -> u32 {
    assert!(q >= 2, "needs an alphabet of at least two symbols");
    assert!(n >= 1, "needs at least one strand");
    let mut best = 2;
    let mut best_score = f64::NEG_INFINITY;
    for p in 2..=q {
        let phi = growth_root::<f64>(p, 1e-12).value;
        let score = ((q + 1 - p) as f64).ln() + n as f64 * phi.ln();
        if score > best_score {
            best_score = score;
            best = p;
        }
    }
    best
}

/// Capacity summary for a (q, t, n) machine, in bits.
///
/// Every bits value is the base-2 logarithm of the corresponding exact
/// count, computed via bit length plus fractional correction. Totals come
/// with per-strand (/n) and per-time (/t) normalizations since the
/// literature uses both.
#[derive(Debug, Clone)]
pub struct CapacityReport {
    pub q: u32,
    pub t: u32,
    pub n: u32,
    pub upper_bits: f64,
    pub lower_bits_by_p: BTreeMap<u32, f64>,
    pub exact_bits: Option<f64>,
    pub best_p: u32,
    pub phi_q: f64,
    pub phi_best_p: f64,
    /// log2 of the asymptotic objective `(q + 1 - p*) * phi_{p*}^n`.
    pub best_objective_log2: f64,
    /// `log(q n)`, the heuristic scale the best p tracks; diagnostic only.
    pub log_qn: f64,
}

impl CapacityReport {
    pub fn best_lower_bits(&self) -> f64 {
        self.lower_bits_by_p[&self.best_p]
    }
}

/// Assemble the capacity report; `exact` adds the enumerated census under
/// the given budget.
pub fn capacity_report(
    q: u32,
    t: u32,
    n: u32,
    exact: bool,
    budget: &Budget,
) -> Result<CapacityReport> {
    let bounds = tuple_bounds(q, t, n);
    let lower_bits_by_p = bounds
        .lowers
        .iter()
        .map(|(&p, low)| (p, log2_count(low)))
        .collect();
    let exact_bits = if exact {
        let alphabet = Alphabet::of_size(q);
        Some(log2_count(&count_tuples_exact(&alphabet, t, n, budget)?))
    } else {
        None
    };
    let p_star = best_p(q, n);
    let phi_best_p = growth_root::<f64>(p_star, 1e-12).value;
    Ok(CapacityReport {
        q,
        t,
        n,
        upper_bits: log2_count(&bounds.upper),
        lower_bits_by_p,
        exact_bits,
        best_p: p_star,
        phi_q: growth_root::<f64>(q, 1e-12).value,
        phi_best_p,
        best_objective_log2: ((q + 1 - p_star) as f64).log2() + n as f64 * phi_best_p.log2(),
        log_qn: (q as f64 * n as f64).ln(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_alphabet_has_single_candidate() {
        assert_eq!(best_p(2, 1), 2);
        assert_eq!(best_p(2, 1000), 2);
    }

    #[test]
    fn best_p_defaults_to_q_for_many_strands() {
        for q in [3u32, 4, 5] {
            let n = (1u32 << q) * q;
            assert_eq!(best_p(q, n), q, "q = {q}");
        }
    }

    #[test]
    fn best_p_is_the_argmax_of_direct_evaluation() {
        for q in [3u32, 5, 8] {
            for n in [1u32, 3, 9, 41] {
                let chosen = best_p(q, n);
                let score = |p: u32| {
                    let phi = growth_root::<f64>(p, 1e-12).value;
                    ((q + 1 - p) as f64).ln() + n as f64 * phi.ln()
                };
                for p in 2..=q {
                    assert!(score(chosen) >= score(p), "q = {q}, n = {n}, p = {p}");
                }
            }
        }
    }

    #[test]
    fn capacity_small_exact() {
        let r = capacity_report(2, 2, 1, true, &Budget::default()).unwrap();
        // 14 pairs in total.
        assert!((r.exact_bits.unwrap() - 14f64.log2()).abs() < 1e-12);
        assert!((r.upper_bits - 16f64.log2()).abs() < 1e-12);
        assert!(r.best_lower_bits() <= r.upper_bits);
    }

    #[test]
    fn every_lower_stays_below_upper() {
        for (q, t, n) in [(3u32, 5u32, 2u32), (5, 9, 3), (8, 4, 1)] {
            let r = capacity_report(q, t, n, false, &Budget::default()).unwrap();
            for (&p, &bits) in &r.lower_bits_by_p {
                assert!(bits <= r.upper_bits, "q={q}, t={t}, n={n}, p={p}");
            }
        }
    }

    #[test]
    fn capacity_upper_matches_formula() {
        // upper = t log2 q + n log2 S_q(t).
        let r = capacity_report(4, 12, 5, false, &Budget::default()).unwrap();
        let s = synthcap_core::qbonacci::prefix_sum_fib_q::<synthcap_core::BigCount>(4, 12);
        let expect = 12.0 * 2.0 + 5.0 * log2_count(&s);
        assert!((r.upper_bits - expect).abs() < 1e-9);
    }
}
