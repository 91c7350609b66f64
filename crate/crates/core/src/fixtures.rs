//! Published graphs shipped as adjacency-list text.

use crate::graph::Graph;
use crate::io::parse_adjacency_lists;

/// 9-regular graph of order 24 whose labels equal their triangle-degrees (3..=26).
pub const TABLE1_9REG_24: &str = include_str!("../fixtures/table1_9reg_24.adj");

/// The same graph after the degree-preserving 2-switch
/// `{10,20},{9,11} -> {10,9},{20,11}`.
pub const TABLE1_SWITCHED_9REG_24: &str = include_str!("../fixtures/table1_switched_9reg_24.adj");

/// 7-vertex graph with triangle-degrees (9,7,6,5,4,3,2) on labels 1..=7.
pub const SMALLEST_K3_IRREGULAR_7: &str = include_str!("../fixtures/smallest_k3_irregular_7.adj");

/// 8-regular graph of order 19 with exactly two repeated triangle-degrees (7 and 15).
pub const NEAR_MISS_8REG_19: &str = include_str!("../fixtures/near_miss_8reg_19.adj");

/// Triangle-degrees of [`NEAR_MISS_8REG_19`] by vertex 0..=18.
pub const NEAR_MISS_K3_DEGREES: [u32; 19] = [
    17, 5, 4, 2, 12, 7, 15, 15, 18, 13, 7, 9, 8, 10, 6, 11, 16, 3, 14,
];

fn load(text: &str) -> Graph {
    parse_adjacency_lists(text).expect("bundled fixture parses")
}

pub fn table1() -> Graph {
    load(TABLE1_9REG_24)
}

pub fn table1_switched() -> Graph {
    load(TABLE1_SWITCHED_9REG_24)
}

pub fn smallest_k3_irregular() -> Graph {
    load(SMALLEST_K3_IRREGULAR_7)
}

pub fn near_miss_8reg() -> Graph {
    load(NEAR_MISS_8REG_19)
}
