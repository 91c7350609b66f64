//! Triangle-degrees (K3-degrees) and their multiplicity statistics.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Edge, Graph};

/// Per-vertex triangle-degrees of a graph together with the multiplicity
/// function `M(d)` and the duplicate-pair count `P = Σ C(M(d), 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K3Profile {
    pub degrees: Vec<u32>,
    pub multiplicity: BTreeMap<u32, usize>,
    pub pair_count: u64,
    pub triangle_total: u64,
}

impl K3Profile {
    pub fn from_degrees(degrees: Vec<u32>) -> Self {
        let mut multiplicity = BTreeMap::new();
        for &d in &degrees {
            *multiplicity.entry(d).or_insert(0usize) += 1;
        }
        let pair_count = multiplicity
            .values()
            .map(|&m| (m as u64) * (m as u64).saturating_sub(1) / 2)
            .sum();
        let sum: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
        debug_assert_eq!(sum % 3, 0, "triangle-degree sum must be divisible by 3");
        K3Profile {
            degrees,
            multiplicity,
            pair_count,
            triangle_total: sum / 3,
        }
    }

    /// All triangle-degrees pairwise distinct.
    pub fn is_irregular(&self) -> bool {
        self.pair_count == 0
    }

    /// Number of vertices whose triangle-degree is shared with another vertex.
    pub fn duplicated_vertex_count(&self) -> usize {
        self.multiplicity.values().filter(|&&m| m > 1).sum()
    }

    /// Triangle-degree values that occur more than once.
    pub fn duplicate_values(&self) -> Vec<u32> {
        self.multiplicity
            .iter()
            .filter(|(_, &m)| m > 1)
            .map(|(&d, _)| d)
            .collect()
    }
}

/// Triangle-degree of `v`: the number of edges among its neighbors.
pub fn k3_degree(g: &Graph, v: usize) -> Result<u32> {
    g.check_vertex(v)?;
    Ok(k3_degree_unchecked(g, v))
}

/// `Σ_{u ∈ N(v)} |N(v) ∩ N(u)| / 2` via word-wise popcounts.
#[inline]
pub fn k3_degree_unchecked(g: &Graph, v: usize) -> u32 {
    let row = g.row(v);
    let twice: usize = g
        .neighbors(v)
        .map(|u| {
            g.row(u)
                .iter()
                .zip(row)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>()
        })
        .sum();
    (twice / 2) as u32
}

pub fn k3_degrees(g: &Graph) -> Vec<u32> {
    (0..g.order()).map(|v| k3_degree_unchecked(g, v)).collect()
}

pub fn k3_profile(g: &Graph) -> K3Profile {
    K3Profile::from_degrees(k3_degrees(g))
}

/// Removes `uv` and updates `degrees` in place; triangles through `uv`
/// disappear. Returns `false` (and changes nothing) if `uv` is absent.
pub fn remove_edge_tracked(g: &mut Graph, degrees: &mut [u32], u: usize, v: usize) -> bool {
    if !g.has_edge(u, v) {
        return false;
    }
    let common = common_neighbors(g, u, v);
    g.remove_edge(u, v);
    let c = common.len() as u32;
    degrees[u] -= c;
    degrees[v] -= c;
    for w in common {
        degrees[w] -= 1;
    }
    true
}

/// Inserts `uv` and updates `degrees` in place.
pub fn add_edge_tracked(g: &mut Graph, degrees: &mut [u32], u: usize, v: usize) -> bool {
    if !g.add_edge(u, v) {
        return false;
    }
    let common = common_neighbors(g, u, v);
    let c = common.len() as u32;
    degrees[u] += c;
    degrees[v] += c;
    for w in common {
        degrees[w] += 1;
    }
    true
}

/// Applies the 2-switch `u1v1, u2v2 -> u1u2, v1v2` (preconditions already
/// checked) while keeping `degrees` current.
pub fn two_switch_tracked(g: &mut Graph, degrees: &mut [u32], e1: Edge, e2: Edge) {
    remove_edge_tracked(g, degrees, e1.0, e1.1);
    remove_edge_tracked(g, degrees, e2.0, e2.1);
    add_edge_tracked(g, degrees, e1.0, e2.0);
    add_edge_tracked(g, degrees, e1.1, e2.1);
}

impl Graph {
    pub fn k3_degree(&self, v: usize) -> Result<u32> {
        k3_degree(self, v)
    }

    pub fn k3_profile(&self) -> K3Profile {
        k3_profile(self)
    }
}

fn common_neighbors(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, (a, b)) in g.row(u).iter().zip(g.row(v)).enumerate() {
        let mut bits = a & b;
        while bits != 0 {
            out.push(i * 64 + bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
    out
}
