//! Simple undirected graphs stored as fixed-width adjacency bit-rows.

use std::fmt;

use crate::error::{Error, Result};

/// Soft cap on the order of a [`Graph`].
pub const MAX_ORDER: usize = 4096;

/// An undirected edge between two vertex indices.
pub type Edge = (usize, usize);

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` is a bitset of `N(v)`, `words` 64-bit words wide. The rows are
/// kept symmetric and irreflexive by every mutating method. Vertices may
/// carry external integer labels that survive I/O; without labels the label
/// of vertex `v` is `v` itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<i64>>,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
            labels: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Input(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Attaches external labels, one per vertex, all distinct.
    pub fn with_labels(mut self, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Input(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("duplicate label {}", w[0])));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Drops external labels; vertex `v` is then labeled `v`.
    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Raw bit-rows, `order() * words()` words.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn labels(&self) -> Option<&[i64]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn label(&self, v: usize) -> i64 {
        match &self.labels {
            Some(l) => l[v],
            None => v as i64,
        }
    }

    /// Internal index of the vertex carrying `label`.
    pub fn index_of(&self, label: i64) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|&x| x == label),
            None => usize::try_from(label).ok().filter(|&v| v < self.n),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `uv`; returns `false` if it was already present.
    ///
    /// Panics on out-of-range vertices or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "vertex out of range");
        if self.has_edge(u, v) {
            return false;
        }
        self.row_mut(u)[v / 64] |= 1 << (v % 64);
        self.row_mut(v)[u / 64] |= 1 << (u % 64);
        true
    }

    /// Deletes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        self.row_mut(u)[v / 64] &= !(1 << (v % 64));
        self.row_mut(v)[u / 64] &= !(1 << (u % 64));
        true
    }

    /// Ordinary degree (the K2-degree) of `v`.
    #[inline]
    pub fn degree_of(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree_of(v)).collect()
    }

    /// Returns `Some(r)` when every vertex has degree `r`.
    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let r = self.degree_of(0);
        (1..self.n).all(|v| self.degree_of(v) == r).then_some(r)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree_of(v)).sum::<usize>() / 2
    }

    /// Neighbors of `v` in increasing index order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word: 0,
            bits: self.row(v)[0],
        }
    }

    /// The `k`-th neighbor of `v` in increasing index order.
    pub fn nth_neighbor(&self, v: usize, mut k: usize) -> Option<usize> {
        for (i, &w) in self.row(v).iter().enumerate() {
            let c = w.count_ones() as usize;
            if k < c {
                let mut bits = w;
                for _ in 0..k {
                    bits &= bits - 1;
                }
                return Some(i * 64 + bits.trailing_zeros() as usize);
            }
            k -= c;
        }
        None
    }

    /// `|N(u) ∩ N(v)|` by word-wise popcount.
    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// All edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Complement graph; labels are carried over.
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            words: self.words,
            rows: self.rows.iter().map(|w| !w).collect(),
            labels: self.labels.clone(),
        };
        let tail = self.n % 64;
        for v in 0..self.n {
            let row = g.row_mut(v);
            row[v / 64] &= !(1 << (v % 64));
            if tail != 0 {
                *row.last_mut().unwrap() &= (1u64 << tail) - 1;
            }
        }
        g
    }

    /// Checks the preconditions of the 2-switch `u1v1, u2v2 -> u1u2, v1v2`.
    pub fn check_two_switch(&self, e1: Edge, e2: Edge) -> Result<()> {
        let (u1, v1) = e1;
        let (u2, v2) = e2;
        for v in [u1, v1, u2, v2] {
            self.check_vertex(v)?;
        }
        let all = [u1, v1, u2, v2];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if all[i] == all[j] {
                    return Err(Error::SwitchInvalid(format!(
                        "vertices {u1}, {v1}, {u2}, {v2} are not pairwise distinct"
                    )));
                }
            }
        }
        if !self.has_edge(u1, v1) {
            return Err(Error::SwitchInvalid(format!("{u1}{v1} is not an edge")));
        }
        if !self.has_edge(u2, v2) {
            return Err(Error::SwitchInvalid(format!("{u2}{v2} is not an edge")));
        }
        if self.has_edge(u1, u2) {
            return Err(Error::SwitchInvalid(format!("{u1}{u2} is already an edge")));
        }
        if self.has_edge(v1, v2) {
            return Err(Error::SwitchInvalid(format!("{v1}{v2} is already an edge")));
        }
        Ok(())
    }

    /// The 2-switch on `e1 = u1v1`, `e2 = u2v2`: removes both and adds `u1u2`, `v1v2`.
    pub fn two_switch(&self, e1: Edge, e2: Edge) -> Result<Graph> {
        self.check_two_switch(e1, e2)?;
        let mut g = self.clone();
        g.apply_two_switch_unchecked(e1, e2);
        Ok(g)
    }

    /// Same as [`Graph::two_switch`] with edges given by vertex labels.
    pub fn two_switch_labels(&self, e1: (i64, i64), e2: (i64, i64)) -> Result<Graph> {
        let idx = |l: i64| {
            self.index_of(l)
                .ok_or_else(|| Error::SwitchInvalid(format!("no vertex labeled {l}")))
        };
        self.two_switch((idx(e1.0)?, idx(e1.1)?), (idx(e2.0)?, idx(e2.1)?))
    }

    pub(crate) fn apply_two_switch_unchecked(&mut self, e1: Edge, e2: Edge) {
        self.remove_edge(e1.0, e1.1);
        self.remove_edge(e2.0, e2.1);
        self.add_edge(e1.0, e2.0);
        self.add_edge(e1.1, e2.1);
    }

    /// Relabels internal indices: vertex `v` becomes `perm[v]`. Labels move
    /// with their vertices.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Input("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Input("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        if let Some(l) = &self.labels {
            let mut nl = vec![0; self.n];
            for v in 0..self.n {
                nl[perm[v]] = l[v];
            }
            g.labels = Some(nl);
        }
        Ok(g)
    }

    /// Subgraph induced by `keep` (in the given order); labels follow.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| l[v]).collect());
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .field("labels", &self.labels)
            .finish()
    }
}

/// Iterator over the set bits of an adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let t = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + t);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
    }
}
