//! Cross-checks of the production DP paths against the independent routes:
//! the brute-force enumeration oracle, the first-letter recurrence, and the
//! structural inequalities that the closed-form bounds rest on.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use synthcap_core::qbonacci::{fib_q, prefix_sum_fib_q};
use synthcap_core::sequences::{
    cyclic_lineup, is_subsequence, synthesis_time, window_distinct, Alphabet, MasterLineup, Strand,
};
use synthcap_core::subseq_census::{
    distinct_subsequences, distinct_subsequences_first_letter, enumerate_subsequences,
    length_histogram, time_histogram, DEFAULT_ENUMERATION_CAP,
};
use synthcap_core::BigCount;

fn random_lineup(rng: &mut ChaCha8Rng, max_len: usize, max_q: u32) -> Strand {
    let q = rng.gen_range(1..=max_q);
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..q)).collect()
}

/// Histograms derived from the enumeration oracle, fully independent of the
/// DP recurrences.
fn oracle_statistics(m: &Strand) -> (u64, Vec<u64>, Vec<u64>) {
    let set = enumerate_subsequences(m, DEFAULT_ENUMERATION_CAP).expect("oracle scale");
    let lineup = MasterLineup::finite(m.clone());
    let mut by_time = vec![0u64; m.len() + 1];
    let mut by_length = vec![0u64; m.len() + 1];
    for x in &set {
        let tau = synthesis_time(x, &lineup).expect("members embed") as usize;
        by_time[tau] += 1;
        by_length[x.len()] += 1;
    }
    (set.len() as u64, by_time, by_length)
}

#[test]
fn dp_statistics_match_oracle_on_random_lineups() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let m = random_lineup(&mut rng, 12, 4);
        let (count, by_time, by_length) = oracle_statistics(&m);
        assert_eq!(distinct_subsequences::<u64>(&m), count, "lineup {m:?}");
        assert_eq!(time_histogram::<u64>(&m).counts(), by_time, "lineup {m:?}");
        assert_eq!(
            length_histogram::<u64>(&m).counts(),
            by_length,
            "lineup {m:?}"
        );
    }
}

#[test]
fn first_letter_route_matches_dp_on_random_lineups() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xcafe);
    for _ in 0..500 {
        let m = random_lineup(&mut rng, 40, 6);
        assert_eq!(
            distinct_subsequences::<BigCount>(&m),
            distinct_subsequences_first_letter::<BigCount>(&m),
            "lineup {m:?}"
        );
    }
}

#[test]
fn suboptimality_inequality_with_empty_adjustment() {
    // |[M]| <= |[M after 1]| + ... + |[M after q]| + 1.
    let mut rng = ChaCha8Rng::seed_from_u64(0xbead);
    for _ in 0..300 {
        let q = rng.gen_range(2..=4u32);
        let len = rng.gen_range(1..=30usize);
        let m: Strand = (0..len).map(|_| rng.gen_range(0..q)).collect();
        let total: u128 = distinct_subsequences(&m);
        let mut sum: u128 = 1;
        for u in 1..=q as usize {
            let suffix = Strand::from(&m.letters()[u.min(len)..]);
            sum += distinct_subsequences::<u128>(&suffix);
        }
        assert!(total <= sum, "lineup {m:?}");
    }
}

#[test]
fn deleting_last_letter_drops_tau_by_one_to_q() {
    for q in 2..=4u32 {
        let alphabet = Alphabet::of_size(q);
        let prefix = cyclic_lineup(&alphabet, 14);
        let lineup = MasterLineup::cyclic(cyclic_lineup(&alphabet, q)).unwrap();
        for x in enumerate_subsequences(&prefix, DEFAULT_ENUMERATION_CAP).unwrap() {
            if x.is_empty() {
                continue;
            }
            let tau = synthesis_time(&x, &lineup).unwrap();
            let shorter = synthesis_time(&x.without_last(), &lineup).unwrap();
            let drop = tau - shorter;
            assert!(
                (1..=q as u64).contains(&drop),
                "x {x:?}: tau {tau}, shorter {shorter}"
            );
        }
    }
}

#[test]
fn tau_definition_via_prefixes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf00d);
    for _ in 0..400 {
        let q = rng.gen_range(1..=4u32);
        let m: Strand = (0..rng.gen_range(0..=12usize))
            .map(|_| rng.gen_range(0..q))
            .collect();
        let x: Strand = (0..rng.gen_range(0..=8usize))
            .map(|_| rng.gen_range(0..q))
            .collect();
        let lineup = MasterLineup::finite(m.clone());
        match synthesis_time(&x, &lineup) {
            Some(s) => {
                let s = s as usize;
                assert!(is_subsequence(&x, &m.prefix(s)));
                if s >= 1 {
                    assert!(!is_subsequence(&x, &m.prefix(s - 1)));
                }
            }
            None => assert!(!is_subsequence(&x, &m)),
        }
    }
}

#[test]
fn window_distinct_lineups_dominate_qbonacci_termwise() {
    // Every p-window-distinct lineup has at least F_p(s) subsequences newly
    // synthesizable at each time s.
    for q in 2..=4u32 {
        let alphabet = Alphabet::of_size(q);
        for t in 0..=8u32 {
            for ordinal in 0..(q as u64).pow(t) {
                let m = alphabet.strand_at(t, ordinal);
                for p in 2..=q {
                    if !window_distinct(&m, p) {
                        continue;
                    }
                    let hist = time_histogram::<u64>(&m);
                    for (s, &count) in hist.counts().iter().enumerate() {
                        assert!(
                            count >= fib_q::<u64>(p, s as i64),
                            "lineup {m:?}, p = {p}, s = {s}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn no_repeat_ternary_lineups_beat_fibonacci_sum() {
    let alphabet = Alphabet::of_size(3);
    for t in 0..=10u32 {
        let floor = prefix_sum_fib_q::<BigCount>(2, t as u64);
        for ordinal in 0..(3u64).pow(t) {
            let m = alphabet.strand_at(t, ordinal);
            if window_distinct(&m, 2) {
                assert!(
                    distinct_subsequences::<BigCount>(&m) >= floor,
                    "lineup {m:?}"
                );
            }
        }
    }
}

#[test]
fn window_distinct_columns_give_distinct_strands() {
    // For p-window-distinct lineups, distinct zero-run-free columns select
    // distinct strands.
    let alphabet = Alphabet::of_size(3);
    for t in 1..=5u32 {
        for ordinal in 0..(3u64).pow(t) {
            let m = alphabet.strand_at(t, ordinal);
            for p in 2..=3u32 {
                if !window_distinct(&m, p) {
                    continue;
                }
                let mut seen: HashMap<Strand, u64> = HashMap::new();
                let mut good_columns = 0u64;
                'mask: for mask in 0..1u64 << t {
                    let mut run = 0u32;
                    for s in 0..t {
                        if mask >> s & 1 == 1 {
                            run = 0;
                        } else {
                            run += 1;
                            if run >= p {
                                continue 'mask;
                            }
                        }
                    }
                    good_columns += 1;
                    let strand: Strand = (0..t)
                        .filter(|&s| mask >> s & 1 == 1)
                        .map(|s| m.letters()[s as usize])
                        .collect();
                    if let Some(prev) = seen.insert(strand, mask) {
                        panic!("columns {prev:b} and {mask:b} collide on {m:?}");
                    }
                }
                assert_eq!(good_columns, fib_q::<u64>(p, t as i64 + 1));
            }
        }
    }
}

#[test]
fn enumeration_membership_matches_subsequence_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1ce);
    for _ in 0..200 {
        let m = random_lineup(&mut rng, 10, 3);
        let set: HashSet<Strand> = enumerate_subsequences(&m, DEFAULT_ENUMERATION_CAP).unwrap();
        for _ in 0..20 {
            let x: Strand = (0..rng.gen_range(0..=m.len() + 1))
                .map(|_| rng.gen_range(0..3u32))
                .collect();
            assert_eq!(set.contains(&x), is_subsequence(&x, &m), "x {x:?} m {m:?}");
        }
    }
}
