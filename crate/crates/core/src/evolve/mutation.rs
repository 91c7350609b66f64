//! Regularity-preserving mutations.
//!
//! Every randomized structure search (switch pair, matching, pairing) makes
//! at most `retry_budget` draws before reporting
//! [`MutationError::Unavailable`]; the caller then keeps a copy of the parent.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{Edge, Graph};

pub const DEFAULT_RETRY_BUDGET: usize = 200;

/// Node limit for one backtracking pairing search.
const PAIRING_STEP_LIMIT: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MutationError {
    #[error("no valid structure found within the retry budget")]
    Unavailable,
    #[error("mutation precondition failed: {0}")]
    Precondition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mutator {
    pub retry_budget: usize,
}

impl Default for Mutator {
    fn default() -> Self {
        Mutator {
            retry_budget: DEFAULT_RETRY_BUDGET,
        }
    }
}

fn regularity(g: &Graph) -> Result<usize, MutationError> {
    g.is_regular()
        .ok_or_else(|| MutationError::Precondition("graph is not regular".into()))
}

/// Uniform random oriented edge `(u, v)` in a regular graph; in general
/// graphs uniform over vertices with positive degree, then neighbors.
fn random_oriented_edge<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Option<Edge> {
    let u = rng.random_range(0..g.order());
    let d = g.degree_of(u);
    if d == 0 {
        return None;
    }
    let v = g.nth_neighbor(u, rng.random_range(0..d))?;
    Some((u, v))
}

/// Draws edges without replacement until `k` pairwise disjoint ones are found.
fn random_matching<R: Rng + ?Sized>(
    g: &Graph,
    k: usize,
    budget: usize,
    rng: &mut R,
) -> Option<Vec<Edge>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let edges = g.edges();
    for _ in 0..budget.max(1) {
        let mut pool = edges.clone();
        let mut used = vec![false; g.order()];
        let mut chosen = Vec::with_capacity(k);
        while chosen.len() < k && !pool.is_empty() {
            let (u, v) = pool.swap_remove(rng.random_range(0..pool.len()));
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                chosen.push((u, v));
            }
        }
        if chosen.len() == k {
            return Some(chosen);
        }
    }
    None
}

/// Rebuilds `g` without the vertices in `removed` plus `extra` edges (given
/// in old indices). Labels are dropped.
fn rebuild(g: &Graph, removed: &[usize], extra: &[Edge]) -> Graph {
    let n = g.order();
    let mut new_index = vec![usize::MAX; n];
    let mut next = 0;
    for (v, slot) in new_index.iter_mut().enumerate() {
        if !removed.contains(&v) {
            *slot = next;
            next += 1;
        }
    }
    let mut out = Graph::empty(next).expect("order only shrinks");
    for (u, v) in g.edges().into_iter().chain(extra.iter().copied()) {
        let (a, b) = (new_index[u], new_index[v]);
        if a != usize::MAX && b != usize::MAX {
            out.add_edge(a, b);
        }
    }
    out
}

/// Partitions `slots` (a multiset of vertices) into pairs `{x, y}` with
/// `x != y`, `xy ∉ E(g)`, and no pair used twice. Randomized backtracking.
fn pair_up<R: Rng + ?Sized>(g: &Graph, slots: &[usize], rng: &mut R) -> Option<Vec<Edge>> {
    if !slots.len().is_multiple_of(2) {
        return None;
    }
    let mut slots = slots.to_vec();
    slots.shuffle(rng);
    let mut paired = vec![false; slots.len()];
    let mut out: Vec<Edge> = Vec::with_capacity(slots.len() / 2);
    let mut steps = 0usize;

    fn go<R: Rng + ?Sized>(
        g: &Graph,
        slots: &[usize],
        paired: &mut [bool],
        out: &mut Vec<Edge>,
        steps: &mut usize,
        rng: &mut R,
    ) -> bool {
        let Some(i) = paired.iter().position(|&p| !p) else {
            return true;
        };
        *steps += 1;
        if *steps > PAIRING_STEP_LIMIT {
            return false;
        }
        paired[i] = true;
        let x = slots[i];
        let mut partners: Vec<usize> = (i + 1..slots.len()).filter(|&j| !paired[j]).collect();
        partners.shuffle(rng);
        let mut tried = Vec::new();
        for j in partners {
            let y = slots[j];
            let e = (x.min(y), x.max(y));
            if x == y || g.has_edge(x, y) || out.contains(&e) || tried.contains(&y) {
                continue;
            }
            tried.push(y);
            paired[j] = true;
            out.push(e);
            if go(g, slots, paired, out, steps, rng) {
                return true;
            }
            out.pop();
            paired[j] = false;
        }
        paired[i] = false;
        false
    }

    go(g, &slots, &mut paired, &mut out, &mut steps, rng).then_some(out)
}

impl Mutator {
    pub fn new(retry_budget: usize) -> Self {
        Mutator { retry_budget }
    }

    /// Draws a valid 2-switch `(u1v1, u2v2)`: four distinct vertices,
    /// `u1u2` and `v1v2` absent.
    pub fn pick_edge_switch<R: Rng + ?Sized>(
        &self,
        g: &Graph,
        rng: &mut R,
    ) -> Result<(Edge, Edge), MutationError> {
        if g.order() < 4 || g.edge_count() < 2 {
            return Err(MutationError::Unavailable);
        }
        for _ in 0..self.retry_budget {
            let (Some((u1, v1)), Some((u2, v2))) =
                (random_oriented_edge(g, rng), random_oriented_edge(g, rng))
            else {
                continue;
            };
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                continue;
            }
            if g.has_edge(u1, u2) || g.has_edge(v1, v2) {
                continue;
            }
            return Ok(((u1, v1), (u2, v2)));
        }
        Err(MutationError::Unavailable)
    }

    pub fn edge_switch<R: Rng + ?Sized>(
        &self,
        g: &Graph,
        rng: &mut R,
    ) -> Result<Graph, MutationError> {
        let (e1, e2) = self.pick_edge_switch(g, rng)?;
        let mut out = g.clone();
        out.apply_two_switch_unchecked(e1, e2);
        Ok(out)
    }

    /// Even `r`: remove a random matching of `r/2` edges and join a new
    /// vertex to all `r` endpoints.
    pub fn add_vertex_even<R: Rng + ?Sized>(
        &self,
        g: &Graph,
        rng: &mut R,
    ) -> Result<Graph, MutationError> {
        let r = regularity(g)?;
        if r % 2 != 0 {
            return Err(MutationError::Precondition(format!(
                "regularity {r} is odd"
            )));
        }
        let m =
            random_matching(g, r / 2, self.retry_budget, rng).ok_or(MutationError::Unavailable)?;
        let n = g.order();
        let mut out =
            Graph::empty(n + 1).map_err(|e| MutationError::Precondition(e.to_string()))?;
        for (u, v) in g.edges() {
            out.add_edge(u, v);
        }
        for &(u, v) in &m {
            out.remove_edge(u, v);
            out.add_edge(n, u);
            out.add_edge(n, v);
        }
        Ok(out)
    }

    /// Even `r`, `n > r + 1`: delete a vertex whose neighborhood splits into
    /// `r/2` non-adjacent pairs, and join each pair.
    pub fn remove_vertex_even<R: Rng + ?Sized>(
        &self,
        g: &Graph,
        rng: &mut R,
    ) -> Result<Graph, MutationError> {
        let r = regularity(g)?;
        if r % 2 != 0 {
            return Err(MutationError::Precondition(format!(
                "regularity {r} is odd"
            )));
        }
        let n = g.order();
        if n <= r + 1 {
            return Err(MutationError::Precondition(format!(
                "order {n} must exceed r + 1 = {}",
                r + 1
            )));
        }
        let mut vertices: Vec<usize> = (0..n).collect();
        vertices.shuffle(rng);
        for &v in vertices.iter().take(self.retry_budget) {
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            if let Some(pairs) = pair_up(g, &nbrs, rng) {
                return Ok(rebuild(g, &[v], &pairs));
            }
        }
        Err(MutationError::Unavailable)
    }

    /// Odd `r`: add adjacent vertices `v`, `w`; remove two vertex-disjoint
    /// matchings of `(r-1)/2` edges each; join `v` to the endpoints of the
    /// first and `w` to the endpoints of the second.
    pub fn add_pair_odd<R: Rng + ?Sized>(
        &self,
        g: &Graph,
        rng: &mut R,
    ) -> Result<Graph, MutationError> {
        let r = regularity(g)?;
        if r % 2 == 0 {
            return Err(MutationError::Precondition(format!(
                "regularity {r} is even"
            )));
        }
        let half = (r - 1) / 2;
        let m = random_matching(g, 2 * half, self.retry_budget, rng)
            .ok_or(MutationError::Unavailable)?;
        let n = g.order();
        let (v, w) = (n, n + 1);
        let mut out =
            Graph::empty(n + 2).map_err(|e| MutationError::Precondition(e.to_string()))?;
        for (a, b) in g.edges() {
            out.add_edge(a, b);
        }
        out.add_edge(v, w);
        for (i, &(a, b)) in m.iter().enumerate() {
            let hub = if i < half { v } else { w };
            out.remove_edge(a, b);
            out.add_edge(hub, a);
            out.add_edge(hub, b);
        }
        Ok(out)
    }

    /// Odd `r`, `n >= r + 3`: delete adjacent `v`, `w` and re-pair the
    /// endpoints of their other edges (a common neighbor appears twice) into
    /// new edges that are neither existing nor repeated.
    pub fn remove_pair_odd<R: Rng + ?Sized>(
        &self,
        g: &Graph,
        rng: &mut R,
    ) -> Result<Graph, MutationError> {
        let r = regularity(g)?;
        if r % 2 == 0 {
            return Err(MutationError::Precondition(format!(
                "regularity {r} is even"
            )));
        }
        let n = g.order();
        if n < r + 3 {
            return Err(MutationError::Precondition(format!(
                "order {n} leaves fewer than r + 1 = {} vertices after removal",
                r + 1
            )));
        }
        for _ in 0..self.retry_budget {
            let Some((v, w)) = random_oriented_edge(g, rng) else {
                continue;
            };
            let slots: Vec<usize> = g
                .neighbors(v)
                .filter(|&x| x != w)
                .chain(g.neighbors(w).filter(|&x| x != v))
                .collect();
            if let Some(pairs) = pair_up(g, &slots, rng) {
                return Ok(rebuild(g, &[v, w], &pairs));
            }
        }
        Err(MutationError::Unavailable)
    }

    /// Up to `k` successful random 2-switches. Stops early if no switch can
    /// be found within the retry budget (e.g. complete graphs).
    pub fn randomize<R: Rng + ?Sized>(&self, g: &Graph, k: usize, rng: &mut R) -> Graph {
        let mut out = g.clone();
        for _ in 0..k {
            match self.pick_edge_switch(&out, rng) {
                Ok((e1, e2)) => out.apply_two_switch_unchecked(e1, e2),
                Err(_) => break,
            }
        }
        out
    }
}

pub fn mutate_edge_switch<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<Graph, MutationError> {
    Mutator::default().edge_switch(g, rng)
}

pub fn mutate_add_vertex_even<R: Rng + ?Sized>(
    g: &Graph,
    rng: &mut R,
) -> Result<Graph, MutationError> {
    Mutator::default().add_vertex_even(g, rng)
}

pub fn mutate_remove_vertex_even<R: Rng + ?Sized>(
    g: &Graph,
    rng: &mut R,
) -> Result<Graph, MutationError> {
    Mutator::default().remove_vertex_even(g, rng)
}

pub fn mutate_add_pair_odd<R: Rng + ?Sized>(
    g: &Graph,
    rng: &mut R,
) -> Result<Graph, MutationError> {
    Mutator::default().add_pair_odd(g, rng)
}

pub fn mutate_remove_pair_odd<R: Rng + ?Sized>(
    g: &Graph,
    rng: &mut R,
) -> Result<Graph, MutationError> {
    Mutator::default().remove_pair_odd(g, rng)
}

pub fn randomize<R: Rng + ?Sized>(g: &Graph, k: usize, rng: &mut R) -> Graph {
    Mutator::default().randomize(g, k, rng)
}

/// `r`-regular ring lattice on `n` vertices: circulant with offsets
/// `1..=r/2`; for odd `r` offsets `1..=(r-1)/2` plus the antipodal matching.
pub fn init_ring_lattice(n: usize, r: usize) -> crate::Result<Graph> {
    use crate::error::Error;
    if r == 0 || r >= n {
        return Err(Error::Input(format!(
            "ring lattice needs 0 < r < n, got r = {r}, n = {n}"
        )));
    }
    if !(n * r).is_multiple_of(2) {
        return Err(Error::Input(format!("n*r = {n}*{r} is odd")));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for k in 1..=r / 2 {
            g.add_edge(i, (i + k) % n);
        }
        if r % 2 == 1 {
            g.add_edge(i, (i + n / 2) % n);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolve::rng::stream;
    use crate::verify::are_isomorphic;

    #[test]
    fn ring_lattices() {
        assert_eq!(init_ring_lattice(6, 2).unwrap(), Graph::cycle(6).unwrap());
        let g = init_ring_lattice(10, 4).unwrap();
        assert_eq!(g.is_regular(), Some(4));
        assert!(g.has_edge(0, 2) && !g.has_edge(0, 3));
        let g = init_ring_lattice(24, 9).unwrap();
        assert_eq!(g.is_regular(), Some(9));
        assert!(g.has_edge(0, 12) && g.has_edge(0, 4) && !g.has_edge(0, 5));
        assert!(init_ring_lattice(7, 3).is_err());
        assert!(init_ring_lattice(5, 5).is_err());
    }

    #[test]
    fn k4_has_no_switch() {
        let mut rng = stream(0, 0, 0, 0);
        assert_eq!(
            mutate_edge_switch(&Graph::complete(4).unwrap(), &mut rng),
            Err(MutationError::Unavailable)
        );
    }

    #[test]
    fn c5_grows_to_c6() {
        let mut rng = stream(1, 0, 0, 0);
        let g = mutate_add_vertex_even(&Graph::cycle(5).unwrap(), &mut rng).unwrap();
        assert!(are_isomorphic(&g, &Graph::cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn c6_shrinks_to_c5() {
        let mut rng = stream(2, 0, 0, 0);
        let g = mutate_remove_vertex_even(&Graph::cycle(6).unwrap(), &mut rng).unwrap();
        assert!(are_isomorphic(&g, &Graph::cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn k5_cannot_shrink() {
        let mut rng = stream(3, 0, 0, 0);
        // K5 also fails n > r + 1; use K5 minus nothing on a bigger even-regular
        // graph whose neighborhoods are cliques: two disjoint K5s.
        let mut edges = Vec::new();
        for base in [0, 5] {
            for u in 0..5 {
                for v in (u + 1)..5 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let g = Graph::from_edges(10, edges).unwrap();
        assert_eq!(
            mutate_remove_vertex_even(&g, &mut rng),
            Err(MutationError::Unavailable)
        );
        assert!(matches!(
            mutate_remove_vertex_even(&Graph::complete(5).unwrap(), &mut rng),
            Err(MutationError::Precondition(_))
        ));
    }

    #[test]
    fn k4_grows_to_cubic_six() {
        let mut rng = stream(4, 0, 0, 0);
        let g = mutate_add_pair_odd(&Graph::complete(4).unwrap(), &mut rng).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.is_regular(), Some(3));
    }

    #[test]
    fn cube_shrinks_to_cubic_six() {
        let cube = Graph::from_edges(
            8,
            (0..8usize)
                .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
                .filter(|(u, v)| u < v),
        )
        .unwrap();
        assert_eq!(cube.is_regular(), Some(3));
        let mut rng = stream(5, 0, 0, 0);
        let g = mutate_remove_pair_odd(&cube, &mut rng).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.is_regular(), Some(3));
        assert!(matches!(
            mutate_remove_pair_odd(&Graph::complete(4).unwrap(), &mut rng),
            Err(MutationError::Precondition(_))
        ));
    }

    #[test]
    fn randomize_is_deterministic_and_degree_preserving() {
        let g = init_ring_lattice(30, 6).unwrap();
        assert_eq!(randomize(&g, 0, &mut stream(9, 0, 0, 0)), g);
        let a = randomize(&g, 50, &mut stream(9, 0, 0, 0));
        let b = randomize(&g, 50, &mut stream(9, 0, 0, 0));
        assert_eq!(a, b);
        assert_ne!(a, g);
        assert_eq!(a.is_regular(), Some(6));
    }
}
