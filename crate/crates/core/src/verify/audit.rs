//! Direct checks of the structural facts that hold around any anchor vertex
//! of a regular graph with pairwise distinct triangle-degrees.

use serde::{Deserialize, Serialize};

use crate::bounds::{partition_stats, PartitionStats};
use crate::graph::Graph;
use crate::k3::k3_profile;

/// Partition counts measured on the graph itself (no formulas).
pub fn observed_partition(g: &Graph, anchor: usize) -> PartitionStats {
    let n = g.order();
    let in_a: Vec<bool> = (0..n).map(|u| g.has_edge(anchor, u)).collect();
    let in_b: Vec<bool> = (0..n).map(|u| u != anchor && !in_a[u]).collect();
    let (mut edges_a, mut edges_ab, mut edges_b) = (0i64, 0i64, 0i64);
    for (u, v) in g.edges() {
        if u == anchor || v == anchor {
            continue;
        }
        match (in_a[u], in_a[v]) {
            (true, true) => edges_a += 1,
            (false, false) => edges_b += 1,
            _ => edges_ab += 1,
        }
    }
    let size_b = in_b.iter().filter(|&&b| b).count() as i64;
    let max_b = size_b * (size_b - 1).max(0) / 2;
    PartitionStats {
        size_a: in_a.iter().filter(|&&a| a).count() as i64,
        edges_a,
        edges_ab,
        size_b,
        edges_b,
        infeasible: edges_b > max_b,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaChecks {
    /// Every `a ∈ A` has `deg_{G[A]}(a) <= min(r-2, d)`.
    pub a_degree_bound: bool,
    /// The complement of `G[A]` has no isolated vertex.
    pub complement_a_no_isolated: bool,
    /// `G[B]` has no isolated vertex.
    pub b_no_isolated: bool,
    /// `max(1, |B|-1-|E(co-G[B])|) <= deg_{G[B]}(b) <= min(r, |E(B)|, |B|-1)`.
    pub b_degree_bounds: bool,
    /// Measured counts equal the partition formulas.
    pub partition_identity: bool,
}

impl LemmaChecks {
    pub fn all_pass(&self) -> bool {
        self.a_degree_bound
            && self.complement_a_no_isolated
            && self.b_no_isolated
            && self.b_degree_bounds
            && self.partition_identity
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PartitionAudit {
    Checked {
        anchor: i64,
        k3_degree: u32,
        stats: PartitionStats,
        lemmas: LemmaChecks,
    },
    NotApplicable {
        anchor: i64,
        reason: String,
    },
}

impl PartitionAudit {
    pub fn passed(&self) -> bool {
        matches!(self, PartitionAudit::Checked { lemmas, .. } if lemmas.all_pass())
    }
}

/// Audits the lemmas around `anchor`. Only meaningful for regular graphs
/// with pairwise distinct triangle-degrees; other inputs are reported as
/// not applicable.
pub fn audit_partition_lemmas(g: &Graph, anchor: usize) -> PartitionAudit {
    let label = if anchor < g.order() {
        g.label(anchor)
    } else {
        anchor as i64
    };
    if anchor >= g.order() {
        return PartitionAudit::NotApplicable {
            anchor: label,
            reason: format!("vertex {anchor} out of range"),
        };
    }
    let Some(r) = g.is_regular() else {
        return PartitionAudit::NotApplicable {
            anchor: label,
            reason: "graph is not regular".into(),
        };
    };
    let profile = k3_profile(g);
    if !profile.is_irregular() {
        return PartitionAudit::NotApplicable {
            anchor: label,
            reason: "triangle-degrees are not pairwise distinct".into(),
        };
    }
    audit_unchecked(g, anchor, r, profile.degrees[anchor])
}

pub(crate) fn audit_unchecked(g: &Graph, anchor: usize, r: usize, d: u32) -> PartitionAudit {
    let n = g.order();
    let label = g.label(anchor);
    let a: Vec<usize> = g.neighbors(anchor).collect();
    let b: Vec<usize> = (0..n)
        .filter(|&u| u != anchor && !g.has_edge(anchor, u))
        .collect();
    let deg_in = |u: usize, set: &[usize]| set.iter().filter(|&&w| g.has_edge(u, w)).count();

    let bound_a = (r as i64 - 2).min(d as i64);
    let a_degree_bound = a.iter().all(|&x| deg_in(x, &a) as i64 <= bound_a);
    let complement_a_no_isolated = a.iter().all(|&x| deg_in(x, &a) + 1 < a.len());

    let b_degs: Vec<usize> = b.iter().map(|&x| deg_in(x, &b)).collect();
    let b_no_isolated = b_degs.iter().all(|&k| k >= 1);
    let edges_b = b_degs.iter().sum::<usize>() / 2;
    let size_b = b.len();
    let co_edges_b = size_b * size_b.saturating_sub(1) / 2 - edges_b;
    let lower = 1i64.max(size_b as i64 - 1 - co_edges_b as i64);
    let upper = (r as i64).min(edges_b as i64).min(size_b as i64 - 1);
    let b_degree_bounds = b_degs
        .iter()
        .all(|&k| lower <= k as i64 && k as i64 <= upper);

    let observed = observed_partition(g, anchor);
    let partition_identity = match partition_stats(r as u64, n as u64, u64::from(d)) {
        Ok(s) => {
            s.size_a == observed.size_a
                && s.edges_a == observed.edges_a
                && s.edges_ab == observed.edges_ab
                && s.size_b == observed.size_b
                && s.edges_b == observed.edges_b
        }
        Err(_) => false,
    };

    PartitionAudit::Checked {
        anchor: label,
        k3_degree: d,
        stats: observed,
        lemmas: LemmaChecks {
            a_degree_bound,
            complement_a_no_isolated,
            b_no_isolated,
            b_degree_bounds,
            partition_identity,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_not_applicable() {
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            audit_partition_lemmas(&k4, 0),
            PartitionAudit::NotApplicable { .. }
        ));
    }

    #[test]
    fn non_regular_is_not_applicable() {
        let g = crate::fixtures::smallest_k3_irregular();
        match audit_partition_lemmas(&g, 0) {
            PartitionAudit::NotApplicable { reason, .. } => assert!(reason.contains("regular")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn observed_counts_on_cycle() {
        let c = Graph::cycle(7).unwrap();
        let p = observed_partition(&c, 0);
        assert_eq!(
            (p.size_a, p.edges_a, p.edges_ab, p.size_b, p.edges_b),
            (2, 0, 2, 4, 3)
        );
    }
}
