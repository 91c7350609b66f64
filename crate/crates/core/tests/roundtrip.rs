//! Format round-trips and complement involution.

mod common;

use proptest::prelude::*;

use k3irreg::io::{
    self, parse_adjacency_lists, parse_graph6, write_adjacency_lists, write_graph6, Format,
};
use k3irreg::{fixtures, Graph};

use common::gnp;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_roundtrip(n in 0usize..=140, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gnp(n, p, seed);
        let s = write_graph6(&g);
        prop_assert_eq!(s.len(), k3irreg::io::graph6_len(n));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn adjacency_roundtrip(n in 1usize..=80, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gnp(n, p, seed);
        let back = parse_adjacency_lists(&write_adjacency_lists(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(io::detect_format(&write_adjacency_lists(&g)), Format::AdjacencyList);
    }

    #[test]
    fn complement_involution(n in 0usize..=130, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gnp(n, p, seed);
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }
}

#[test]
fn long_order_header() {
    let g = gnp(300, 0.1, 7);
    let s = write_graph6(&g);
    assert!(s.starts_with('~'));
    assert_eq!(parse_graph6(&s).unwrap(), g);
}

#[test]
fn fixtures_survive_both_formats() {
    for g in [
        fixtures::table1(),
        fixtures::table1_switched(),
        fixtures::near_miss_8reg(),
        fixtures::smallest_k3_irregular(),
    ] {
        let adj = parse_adjacency_lists(&write_adjacency_lists(&g)).unwrap();
        assert_eq!(adj, g);
        let g6 = parse_graph6(&write_graph6(&g)).unwrap();
        assert_eq!(g6, g.clone().without_labels());
    }
}

#[test]
fn double_complement_graph6_identical() {
    let g = fixtures::table1();
    let once = write_graph6(&g.complement());
    let twice = write_graph6(&parse_graph6(&once).unwrap().complement());
    assert_eq!(twice, write_graph6(&g));
}

#[test]
fn empty_and_single() {
    for n in [0, 1] {
        let g = Graph::empty(n).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }
}
