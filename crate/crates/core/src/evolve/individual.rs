use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph};
use crate::k3::{k3_profile, two_switch_tracked, K3Profile};

/// `100 / (P + 1)` where `P` is the number of vertex pairs sharing a
/// triangle-degree. Kept as the exact pair count; [`Fitness::value`] gives
/// the decimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fitness {
    pair_count: u64,
}

impl Fitness {
    pub const MAX: Fitness = Fitness { pair_count: 0 };

    pub fn from_pair_count(pair_count: u64) -> Self {
        Fitness { pair_count }
    }

    pub fn pair_count(self) -> u64 {
        self.pair_count
    }

    /// `(numerator, denominator)` of the exact value.
    pub fn ratio(self) -> (u64, u64) {
        (100, self.pair_count + 1)
    }

    pub fn value(self) -> f64 {
        100.0 / (self.pair_count as f64 + 1.0)
    }

    pub fn is_max(self) -> bool {
        self.pair_count == 0
    }
}

/// Higher fitness compares greater.
impl Ord for Fitness {
    fn cmp(&self, other: &Self) -> Ordering {
        other.pair_count.cmp(&self.pair_count)
    }
}

impl PartialOrd for Fitness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pair_count == 0 {
            write!(f, "100")
        } else {
            write!(f, "100/{} ({:.4})", self.pair_count + 1, self.value())
        }
    }
}

impl Serialize for Fitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.value())
    }
}

pub fn fitness(g: &Graph) -> Fitness {
    Fitness::from_pair_count(k3_profile(g).pair_count)
}

/// A candidate graph with its triangle-degree profile and fitness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Individual {
    pub graph: Graph,
    pub profile: K3Profile,
    pub fitness: Fitness,
}

impl Individual {
    pub fn new(graph: Graph) -> Self {
        let profile = k3_profile(&graph);
        Individual::with_profile(graph, profile)
    }

    fn with_profile(graph: Graph, profile: K3Profile) -> Self {
        let fitness = Fitness::from_pair_count(profile.pair_count);
        Individual {
            graph,
            profile,
            fitness,
        }
    }

    /// Offspring from a validated 2-switch, updating triangle-degrees
    /// incrementally.
    pub fn after_switch(&self, e1: Edge, e2: Edge) -> Self {
        let mut graph = self.graph.clone();
        let mut degrees = self.profile.degrees.clone();
        two_switch_tracked(&mut graph, &mut degrees, e1, e2);
        Individual::with_profile(graph, K3Profile::from_degrees(degrees))
    }

    pub fn pair_count(&self) -> u64 {
        self.fitness.pair_count()
    }

    /// Selection rank key: fewer duplicate pairs, then fewer vertices with a
    /// repeated triangle-degree.
    pub fn rank_key(&self) -> (u64, usize) {
        (
            self.fitness.pair_count(),
            self.profile.duplicated_vertex_count(),
        )
    }
}

/// JSON view of an individual: graph as graph6.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndividualSummary {
    pub order: usize,
    pub graph6: String,
    pub pair_count: u64,
    pub fitness: f64,
    pub k3_degrees: Vec<u32>,
}

impl From<&Individual> for IndividualSummary {
    fn from(ind: &Individual) -> Self {
        IndividualSummary {
            order: ind.graph.order(),
            graph6: crate::io::write_graph6(&ind.graph),
            pair_count: ind.pair_count(),
            fitness: ind.fitness.value(),
            k3_degrees: ind.profile.degrees.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_fitness() {
        let f = fitness(&Graph::complete(4).unwrap());
        assert_eq!(f.pair_count(), 6);
        assert_eq!(f.ratio(), (100, 7));
        assert!((f.value() - 100.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn ordering() {
        assert!(Fitness::MAX > Fitness::from_pair_count(1));
        assert!(Fitness::from_pair_count(2) > Fitness::from_pair_count(9));
    }
}
