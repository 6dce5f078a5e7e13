//! Cross-module invariant sweeps: recurrence identities on the kernel
//! tables, structural counts on generated 2-trees, stream properties of the
//! partition oracle, and equality of every closed form against brute force.

use bichroma::graphs::{
    build_fan, build_theta, build_two_tree, enumerate_two_trees, is_isomorphic, TriangleGraph,
    TwoTreeSeq,
};
use bichroma::kernel::{big_a_binet, Count, KernelTables};
use bichroma::oracle::{
    count_colorings, independent_set_blocks, is_bichromatic_valid, oracle_spectrum,
    partitions_iter, Constraint,
};
use bichroma::spectra::{
    classical_spectrum, eval_coloring_polynomial, fan_r2, fan_r3_closed, fan_r4_closed,
    fan_r5_closed, fan_rk, fan_spectrum, fan_total, theta_spectrum, theta_total,
};
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;
use std::sync::OnceLock;

fn two_tree_classes(n: usize) -> &'static [TriangleGraph] {
    static CLASSES: OnceLock<Vec<Vec<TriangleGraph>>> = OnceLock::new();
    let all = CLASSES.get_or_init(|| (3..=7).map(|n| enumerate_two_trees(n).unwrap()).collect());
    &all[n - 3]
}

#[test]
fn value_types_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Count>();
    assert_send_sync::<KernelTables>();
    assert_send_sync::<TriangleGraph>();
    assert_send_sync::<TwoTreeSeq>();
    assert_send_sync::<bichroma::oracle::PartitionCode>();
    assert_send_sync::<bichroma::spectra::FeatureVector>();
    assert_send_sync::<bichroma::spectra::SpectrumReport>();
}

#[test]
fn pascal_identity_holds() {
    let mut t = KernelTables::new();
    for n in 1..=64i64 {
        for k in 1..=n {
            assert_eq!(
                t.binomial(n, k),
                t.binomial(n - 1, k - 1) + t.binomial(n - 1, k),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn stirling_recurrence_holds_cellwise() {
    let mut t = KernelTables::new();
    for n in 1..=64usize {
        for k in 1..=n {
            assert_eq!(
                t.stirling2(n, k),
                t.stirling2(n - 1, k) * Count::from(k as u64) + t.stirling2(n - 1, k - 1),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn bell_is_stirling_row_sum() {
    let mut t = KernelTables::new();
    for n in 0..=30 {
        let row_sum: Count = (0..=n).map(|k| t.stirling2(n, k)).sum();
        assert_eq!(t.bell(n), row_sum, "n={n}");
    }
}

#[test]
fn fibonacci_poly_at_one_is_fibonacci() {
    let mut t = KernelTables::new();
    for l in 0..=64 {
        assert_eq!(t.fibonacci_poly(l, 1), t.fibonacci(l), "l={l}");
    }
}

#[test]
fn a_coeff_row_sums_are_fibonacci() {
    let mut t = KernelTables::new();
    for m in 2..=64usize {
        let sum: Count = (1..=m).map(|tt| t.a_coeff(m, tt as i64)).sum();
        assert_eq!(sum, t.fibonacci(m + 2), "m={m}");
    }
}

#[test]
fn a_coeff_matches_independent_set_oracle() {
    let mut tables = KernelTables::new();
    for m in 1..=20usize {
        let oracle = independent_set_blocks(m).unwrap();
        for t in 1..=m {
            let expected = oracle.get(&t).cloned().unwrap_or_else(Count::zero);
            assert_eq!(tables.a_coeff(m, t as i64), expected, "m={m} t={t}");
        }
        // nothing outside 1..=m shows up in the oracle either
        assert!(oracle.keys().all(|&t| (1..=m).contains(&t)));
    }
}

#[test]
fn block_tallies_plus_empty_complements_count_all_independent_sets() {
    let mut tables = KernelTables::new();
    for m in 1..=20usize {
        let table = independent_set_blocks(m).unwrap();
        let tallied: Count = table.values().sum();
        // S = V is independent only on the one-vertex path
        let empty_complement = Count::from((m == 1) as u64);
        assert_eq!(tallied + empty_complement, tables.fibonacci(m + 2), "m={m}");
    }
}

#[test]
fn big_a_column_two_is_three_times_power_of_two() {
    let mut t = KernelTables::new();
    for m in 2..=200usize {
        assert_eq!(t.big_a(m, 2), (Count::one() << (m - 2)) * 3u32, "m={m}");
    }
}

#[test]
fn binet_form_tracks_exact_values() {
    let mut t = KernelTables::new();
    for m in 2..=40 {
        for r in 1..=4 {
            let exact = t.big_a(m, r).to_f64().unwrap();
            let approx = big_a_binet(m, r).unwrap();
            let rel = (approx - exact).abs() / exact;
            assert!(rel < 1e-9, "m={m} r={r} rel={rel}");
        }
    }
}

#[test]
fn two_tree_edge_and_triangle_counts() {
    for n in 3..=10 {
        for g in [build_theta(n).unwrap(), build_fan(n).unwrap()] {
            assert_eq!(g.edges().len(), 2 * n - 3, "n={n}");
            assert_eq!(g.triangles().len(), n - 2, "n={n}");
        }
    }
}

#[test]
fn family_triangles_share_their_hub() {
    for n in 3..=12 {
        let theta = build_theta(n).unwrap();
        assert!(theta.triangles().iter().all(|&(u, v, _)| (u, v) == (0, 1)));
        let fan = build_fan(n).unwrap();
        assert!(fan.triangles().iter().all(|t| t.0 == 0));
    }
}

#[test]
fn canonical_sequences_replay_to_builders() {
    for n in 3..=8 {
        let theta = build_two_tree(&TwoTreeSeq::theta(n).unwrap());
        assert!(is_isomorphic(&theta, &build_theta(n).unwrap()).unwrap());
        let fan = build_two_tree(&TwoTreeSeq::fan(n).unwrap());
        assert!(is_isomorphic(&fan, &build_fan(n).unwrap()).unwrap());
    }
}

#[test]
fn enumerated_classes_are_pairwise_non_isomorphic() {
    for n in 3..=7 {
        let reps = two_tree_classes(n);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!is_isomorphic(a, b).unwrap(), "n={n}");
            }
        }
    }
}

#[test]
fn partition_stream_is_exhaustive_distinct_and_ordered() {
    let mut t = KernelTables::new();
    for n in 1..=10usize {
        let mut seen = 0u64;
        let mut prev: Option<Vec<u8>> = None;
        for p in partitions_iter(n).unwrap() {
            assert!(p.is_valid(), "n={n}");
            let rgs = p.rgs().to_vec();
            if let Some(prev) = &prev {
                assert!(*prev < rgs, "lexicographic order violated at n={n}");
            }
            prev = Some(rgs);
            seen += 1;
        }
        assert_eq!(Count::from(seen), t.bell(n), "n={n}");
    }
}

#[test]
fn closed_forms_match_oracle_for_both_families() {
    let mut t = KernelTables::new();
    for n in 3..=10 {
        let theta = build_theta(n).unwrap();
        assert_eq!(
            theta_spectrum(n, &mut t).unwrap(),
            oracle_spectrum(&theta, Constraint::Bichromatic).unwrap(),
            "theta n={n}"
        );
        let fan = build_fan(n).unwrap();
        assert_eq!(
            fan_spectrum(n, &mut t).unwrap(),
            oracle_spectrum(&fan, Constraint::Bichromatic).unwrap(),
            "fan n={n}"
        );
    }
}

#[test]
fn fan_small_k_forms_match_expansion() {
    let mut t = KernelTables::new();
    for n in 3..=64 {
        assert_eq!(
            fan_rk(n, 2, &mut t).unwrap(),
            fan_r2(n, &mut t).unwrap(),
            "r2 n={n}"
        );
        assert_eq!(
            fan_rk(n, 3, &mut t).unwrap(),
            fan_r3_closed(n, &mut t).unwrap(),
            "r3 n={n}"
        );
        if n >= 4 {
            assert_eq!(
                fan_rk(n, 4, &mut t).unwrap(),
                fan_r4_closed(n, &mut t).unwrap(),
                "r4 n={n}"
            );
        }
        if n >= 5 {
            assert_eq!(
                fan_rk(n, 5, &mut t).unwrap(),
                fan_r5_closed(n, &mut t).unwrap(),
                "r5 n={n}"
            );
        }
    }
}

#[test]
fn totals_match_component_sums() {
    let mut t = KernelTables::new();
    for n in 3..=64 {
        assert_eq!(
            theta_total(n, &mut t).unwrap(),
            theta_spectrum(n, &mut t).unwrap().total(),
            "theta n={n}"
        );
        assert_eq!(
            fan_total(n, &mut t).unwrap(),
            fan_spectrum(n, &mut t).unwrap().total(),
            "fan n={n}"
        );
    }
}

#[test]
fn classical_vector_is_uniform_across_two_tree_classes() {
    for n in 3..=7 {
        let expected = classical_spectrum(n).unwrap();
        for (i, g) in two_tree_classes(n).iter().enumerate() {
            assert_eq!(
                oracle_spectrum(g, Constraint::Classical).unwrap(),
                expected,
                "n={n} class={i}"
            );
        }
    }
}

#[test]
fn coloring_polynomial_matches_direct_counts() {
    for n in 3..=7 {
        for g in [build_theta(n).unwrap(), build_fan(n).unwrap()] {
            for constraint in [Constraint::Bichromatic, Constraint::Classical] {
                let spectrum = oracle_spectrum(&g, constraint).unwrap();
                for k in 0..=5u64 {
                    assert_eq!(
                        count_colorings(&g, k, constraint).unwrap(),
                        eval_coloring_polynomial(&spectrum, k),
                        "n={n} k={k} constraint={constraint:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn valid_multi_block_partitions_keep_theta_centrals_together() {
    for n in 3..=9 {
        let theta = build_theta(n).unwrap();
        for p in partitions_iter(n).unwrap() {
            if p.block_count() >= 3 && is_bichromatic_valid(&p, &theta) {
                assert_eq!(p.block_of(0), p.block_of(1), "n={n} p={:?}", p.rgs());
            }
        }
    }
}

#[test]
fn valid_multi_block_partitions_never_isolate_fan_apex() {
    for n in 3..=9 {
        let fan = build_fan(n).unwrap();
        for p in partitions_iter(n).unwrap() {
            if p.block_count() < 3 || !is_bichromatic_valid(&p, &fan) {
                continue;
            }
            let apex = p.block_of(0);
            let mates: Vec<usize> = (1..n).filter(|&v| p.block_of(v) == apex).collect();
            assert!(!mates.is_empty(), "apex isolated at n={n} p={:?}", p.rgs());
            // the apex's path vertices form an independent set on the path
            assert!(
                mates.windows(2).all(|w| w[1] != w[0] + 1),
                "adjacent path vertices share the apex block at n={n} p={:?}",
                p.rgs()
            );
        }
    }
}

/// Attachment choices drawn as indices into whatever edges exist at each
/// step, so every generated sequence is valid by construction.
fn seq_strategy() -> impl Strategy<Value = TwoTreeSeq> {
    (
        3usize..=7,
        prop::collection::vec(any::<prop::sample::Index>(), 4),
    )
        .prop_map(|(n, picks)| {
            let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2)];
            let mut attachments = Vec::new();
            for (i, pick) in picks.iter().take(n - 3).enumerate() {
                let vertex = i + 3;
                let &(u, v) = pick.get(&edges);
                attachments.push((u, v));
                edges.push((u, vertex));
                edges.push((v, vertex));
            }
            TwoTreeSeq::new(n, attachments).expect("constructed from existing edges")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn replayed_sequences_have_two_tree_counts(seq in seq_strategy()) {
        let g = build_two_tree(&seq);
        prop_assert_eq!(g.edges().len(), 2 * g.n() - 3);
        prop_assert_eq!(g.triangles().len(), g.n() - 2);
    }

    #[test]
    fn every_sequence_lands_in_an_enumerated_class(seq in seq_strategy()) {
        let g = build_two_tree(&seq);
        let reps = two_tree_classes(g.n());
        let hits = reps
            .iter()
            .filter(|rep| is_isomorphic(rep, &g).unwrap())
            .count();
        prop_assert_eq!(hits, 1, "every 2-tree matches exactly one class");
    }

    #[test]
    fn relabeling_preserves_isomorphism(seq in seq_strategy(), salt in any::<u64>()) {
        let g = build_two_tree(&seq);
        let n = g.n();
        // cheap deterministic permutation from the salt
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = salt | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled = g.relabel(&perm);
        prop_assert!(is_isomorphic(&g, &relabeled).unwrap());
        prop_assert_eq!(g.degree_sequence(), relabeled.degree_sequence());
    }

    #[test]
    fn oracle_vector_entries_sum_to_valid_partition_count(seq in seq_strategy()) {
        let g = build_two_tree(&seq);
        let spectrum = oracle_spectrum(&g, Constraint::Bichromatic).unwrap();
        let direct = partitions_iter(g.n())
            .unwrap()
            .filter(|p| is_bichromatic_valid(p, &g))
            .count() as u64;
        prop_assert_eq!(spectrum.total(), Count::from(direct));
        prop_assert_eq!(spectrum.r(1), Count::zero());
    }
}
