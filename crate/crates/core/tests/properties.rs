//! Property tests for the structural invariants.

use proptest::collection::vec;
use proptest::prelude::*;

use synthcap_core::greedy_recovery::{greedy_supersequence, scs_length};
use synthcap_core::sequences::{is_subsequence, schedule, Alphabet, Strand};
use synthcap_core::subseq_census::{distinct_subsequences, length_histogram, time_histogram};
use synthcap_core::Budget;

fn strand(max_q: u32, max_len: usize) -> impl Strategy<Value = Strand> {
    vec(0..max_q, 0..=max_len).prop_map(Strand::from)
}

proptest! {
    #[test]
    fn strand_text_round_trips(s in strand(4, 20)) {
        let dna = Alphabet::dna();
        let text = dna.format_strand(&s);
        prop_assert_eq!(dna.parse_strand(&text).unwrap(), s);
    }

    #[test]
    fn histogram_totals_equal_distinct_count(m in strand(4, 12)) {
        let total: u64 = distinct_subsequences(&m);
        prop_assert_eq!(time_histogram::<u64>(&m).total(), total);
        prop_assert_eq!(length_histogram::<u64>(&m).total(), total);
        // The whole lineup is its own unique longest subsequence.
        prop_assert_eq!(length_histogram::<u64>(&m).counts()[m.len()], 1);
    }

    #[test]
    fn schedule_round_trips(
        m in strand(4, 10),
        masks in vec(any::<u16>(), 1..5),
    ) {
        // Build strands as arbitrary sub-selections of the lineup, then check
        // that the schedule's acceptance columns spell them back exactly.
        let strands: Vec<Strand> = masks
            .iter()
            .map(|&mask| {
                m.letters()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &a)| a)
                    .collect()
            })
            .collect();
        let sched = schedule(&m, &strands).unwrap();
        for (j, x) in strands.iter().enumerate() {
            prop_assert_eq!(&sched.strand(j), x);
        }
    }

    #[test]
    fn greedy_builds_a_common_supersequence(
        strands in vec(strand(3, 8), 1..5)
    ) {
        let alphabet = Alphabet::of_size(3);
        let m = greedy_supersequence(&strands, &alphabet).unwrap();
        for x in &strands {
            prop_assert!(is_subsequence(x, &m));
        }
        let optimal = scs_length(&strands, &Budget::default()).unwrap();
        prop_assert!(m.len() as u64 >= optimal);
    }

    #[test]
    fn scs_is_invariant_under_reordering(
        strands in vec(strand(3, 6), 2..4)
    ) {
        let budget = Budget::default();
        let forward = scs_length(&strands, &budget).unwrap();
        let mut reversed = strands.clone();
        reversed.reverse();
        prop_assert_eq!(forward, scs_length(&reversed, &budget).unwrap());
        // A supersequence is never shorter than its longest member.
        let longest = strands.iter().map(Strand::len).max().unwrap() as u64;
        prop_assert!(forward >= longest);
    }

    #[test]
    fn appending_a_letter_never_removes_subsequences(
        m in strand(4, 12),
        a in 0..4u32,
    ) {
        let before: u64 = distinct_subsequences(&m);
        let mut extended = m.clone();
        extended.push(a);
        let after: u64 = distinct_subsequences(&extended);
        // Old subsequences survive and the extended strand itself is new.
        prop_assert!(after > before);
    }
}
