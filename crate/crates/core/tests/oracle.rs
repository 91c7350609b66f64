//! Optimized triangle-degrees against the brute-force triple loop.

mod common;

use proptest::prelude::*;

use k3irreg::k3::{add_edge_tracked, k3_degrees, k3_profile, remove_edge_tracked};
use k3irreg::verify::{brute_force_k3_degrees, brute_force_triangle_count};
use k3irreg::Graph;

use common::gnp;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    #[test]
    fn bitset_matches_oracle(n in 1usize..=64, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gnp(n, p, seed);
        let fast: Vec<u64> = k3_degrees(&g).into_iter().map(u64::from).collect();
        prop_assert_eq!(&fast, &brute_force_k3_degrees(&g).unwrap());
        let profile = k3_profile(&g);
        prop_assert_eq!(profile.triangle_total, brute_force_triangle_count(&g).unwrap());
        prop_assert_eq!(fast.iter().sum::<u64>() % 3, 0);
    }

    #[test]
    fn incremental_updates_match_recount(
        n in 3usize..=40,
        p in 0.1f64..0.9,
        seed in any::<u64>(),
        toggles in prop::collection::vec((0usize..40, 0usize..40), 1..30),
    ) {
        let mut g = gnp(n, p, seed);
        let mut degrees = k3_degrees(&g);
        for (u, v) in toggles {
            let (u, v) = (u % n, v % n);
            if u == v {
                continue;
            }
            if g.has_edge(u, v) {
                prop_assert!(remove_edge_tracked(&mut g, &mut degrees, u, v));
            } else {
                prop_assert!(add_edge_tracked(&mut g, &mut degrees, u, v));
            }
            prop_assert_eq!(&degrees, &k3_degrees(&g));
        }
    }
}

#[test]
fn word_boundary_orders() {
    for n in [63, 64, 65, 127, 128, 129, 200] {
        for (i, p) in [0.05, 0.3, 0.9].into_iter().enumerate() {
            let g = gnp(n, p, i as u64);
            let fast: Vec<u64> = k3_degrees(&g).into_iter().map(u64::from).collect();
            assert_eq!(
                fast,
                brute_force_k3_degrees(&g).unwrap(),
                "n = {n}, p = {p}"
            );
        }
    }
}

#[test]
fn complete_graphs() {
    for n in 1..=70usize {
        let g = Graph::complete(n).unwrap();
        let expect = ((n.saturating_sub(1)) * n.saturating_sub(2) / 2) as u32;
        assert!(k3_degrees(&g).iter().all(|&d| d == expect));
    }
}
