//! Independent checks and certificates for claimed regular graphs with
//! pairwise distinct triangle-degrees.

mod audit;
mod iso;
mod oracle;

pub use audit::{audit_partition_lemmas, observed_partition, LemmaChecks, PartitionAudit};
pub use iso::{are_isomorphic, find_isomorphism, ISO_MAX_ORDER};
pub use oracle::{brute_force_k3_degrees, brute_force_triangle_count, ORACLE_MAX_ORDER};

use serde::{Deserialize, Serialize};

use crate::bounds::{complement_k3_degree, k3_lower_bound, k3_upper_bound};
use crate::graph::Graph;
use crate::k3::{k3_profile, K3Profile};

/// Vertices (by label) sharing one triangle-degree value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuplicateGroup {
    pub value: u32,
    pub vertices: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrregularityCheck {
    pub irregular: bool,
    pub duplicates: Vec<DuplicateGroup>,
}

fn duplicate_groups(g: &Graph, profile: &K3Profile) -> Vec<DuplicateGroup> {
    profile
        .duplicate_values()
        .into_iter()
        .map(|value| DuplicateGroup {
            value,
            vertices: (0..g.order())
                .filter(|&v| profile.degrees[v] == value)
                .map(|v| g.label(v))
                .collect(),
        })
        .collect()
}

/// Whether all triangle-degrees are pairwise distinct; repeated values are
/// listed with the vertices carrying them.
pub fn check_k3_irregular(g: &Graph) -> IrregularityCheck {
    let profile = k3_profile(g);
    IrregularityCheck {
        irregular: profile.is_irregular(),
        duplicates: duplicate_groups(g, &profile),
    }
}

/// `Regular(r)` serialises as the number `r`, otherwise as the string
/// `"irregular degrees"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular(u64),
    Irregular,
}

impl Serialize for Regularity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Regularity::Regular(r) => s.serialize_u64(*r),
            Regularity::Irregular => s.serialize_str("irregular degrees"),
        }
    }
}

impl<'de> Deserialize<'de> for Regularity {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => n.as_u64().map(Regularity::Regular).ok_or_else(|| {
                serde::de::Error::custom("regularity must be a non-negative integer")
            }),
            serde_json::Value::String(s) if s == "irregular degrees" => Ok(Regularity::Irregular),
            other => Err(serde::de::Error::custom(format!(
                "unexpected regularity {other}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexK3 {
    pub label: i64,
    pub k3_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexBounds {
    pub label: i64,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

/// Per-vertex check of `k3_lower_bound(r,n) <= d <= k3_upper_bound(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundAudit {
    pub k3_lower: i64,
    pub k3_upper: u64,
    pub all_within: bool,
    pub vertices: Vec<VertexBounds>,
}

/// Machine-readable verification report. Emitted for any input, including
/// graphs that fail verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub order: usize,
    pub regularity: Regularity,
    pub k3_degrees: Vec<VertexK3>,
    pub distinct: bool,
    pub duplicate_values: Vec<DuplicateGroup>,
    pub pair_count: u64,
    pub bound_audit: Option<BoundAudit>,
    pub partition_audit: Vec<PartitionAudit>,
    pub triangle_count: u64,
    pub edge_count: usize,
    pub triangles_exceed_edges: bool,
    pub complement_check: bool,
    /// Regular with pairwise distinct triangle-degrees.
    pub certified: bool,
}

impl Certificate {
    pub fn regularity(&self) -> Option<u64> {
        match self.regularity {
            Regularity::Regular(r) => Some(r),
            Regularity::Irregular => None,
        }
    }

    pub fn duplicate_value_list(&self) -> Vec<u32> {
        self.duplicate_values.iter().map(|d| d.value).collect()
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let reg = match self.regularity {
            Regularity::Regular(r) => format!("{r}-regular"),
            Regularity::Irregular => "not regular".to_string(),
        };
        let tail = if self.distinct {
            "K3-irregular".to_string()
        } else {
            let vals: Vec<String> = self
                .duplicate_value_list()
                .iter()
                .map(u32::to_string)
                .collect();
            format!("repeated triangle-degrees {{{}}}", vals.join(", "))
        };
        format!("{reg}, {} vertices, {tail}", self.order)
    }
}

fn bound_audit(g: &Graph, r: usize, profile: &K3Profile) -> Option<BoundAudit> {
    let n = g.order() as u64;
    let r = r as u64;
    let hi = k3_upper_bound(r).ok()?;
    let lo = k3_lower_bound(r, n).ok()?;
    let vertices: Vec<VertexBounds> = (0..g.order())
        .map(|v| {
            let d = profile.degrees[v];
            VertexBounds {
                label: g.label(v),
                lower_ok: i64::from(d) >= lo,
                upper_ok: u64::from(d) <= hi,
            }
        })
        .collect();
    Some(BoundAudit {
        k3_lower: lo,
        k3_upper: hi,
        all_within: vertices.iter().all(|v| v.lower_ok && v.upper_ok),
        vertices,
    })
}

/// The complement is regular with distinct triangle-degrees, each given by
/// the complement formula.
fn complement_holds(g: &Graph, r: usize, profile: &K3Profile) -> bool {
    let co = g.complement();
    let co_profile = k3_profile(&co);
    let n = g.order() as u64;
    co.is_regular() == Some(g.order().saturating_sub(r + 1))
        && co_profile.is_irregular()
        && (0..g.order()).all(|v| {
            complement_k3_degree(r as u64, n, u64::from(profile.degrees[v]))
                .is_ok_and(|x| x == i64::from(co_profile.degrees[v]))
        })
}

pub fn certify(g: &Graph) -> Certificate {
    let profile = k3_profile(g);
    let regular = g.is_regular();
    let distinct = profile.is_irregular();
    let certified = regular.is_some() && distinct;
    let partition_audit = match regular {
        Some(r) if distinct => (0..g.order())
            .map(|v| audit::audit_unchecked(g, v, r, profile.degrees[v]))
            .collect(),
        _ => (0..g.order())
            .map(|v| audit_partition_lemmas(g, v))
            .collect(),
    };
    let edge_count = g.edge_count();
    Certificate {
        order: g.order(),
        regularity: regular.map_or(Regularity::Irregular, |r| Regularity::Regular(r as u64)),
        k3_degrees: (0..g.order())
            .map(|v| VertexK3 {
                label: g.label(v),
                k3_degree: profile.degrees[v],
            })
            .collect(),
        distinct,
        duplicate_values: duplicate_groups(g, &profile),
        pair_count: profile.pair_count,
        bound_audit: regular.and_then(|r| bound_audit(g, r, &profile)),
        partition_audit,
        triangle_count: profile.triangle_total,
        edge_count,
        triangles_exceed_edges: profile.triangle_total > edge_count as u64,
        complement_check: certified && complement_holds(g, regular.unwrap(), &profile),
        certified,
    }
}
