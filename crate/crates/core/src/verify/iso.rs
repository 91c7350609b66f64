//! Exact isomorphism test for small graphs: colour refinement seeded with
//! (degree, triangle-degree), then backtracking over colour classes.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::k3::k3_degrees;

pub const ISO_MAX_ORDER: usize = 64;

fn bit_rows(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.row(v)[0]).collect()
}

/// Stable colouring of the disjoint union of `g` and `h`; the two halves
/// share one colour namespace so classes can be compared across graphs.
fn refine(g: &Graph, h: &Graph, adj_g: &[u64], adj_h: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    let kg = k3_degrees(g);
    let kh = k3_degrees(h);
    let mut colours: Vec<usize> = {
        let keys: Vec<(usize, u32)> = (0..n)
            .map(|v| (g.degree_of(v), kg[v]))
            .chain((0..n).map(|v| (h.degree_of(v), kh[v])))
            .collect();
        compact(&keys)
    };
    let mut classes = count_classes(&colours);
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..2 * n)
            .map(|x| {
                let (adj, off) = if x < n { (adj_g, 0) } else { (adj_h, n) };
                let mut nb: Vec<usize> = bits(adj[x - off]).map(|y| colours[y + off]).collect();
                nb.sort_unstable();
                (colours[x], nb)
            })
            .collect();
        let next = compact(&sig);
        let c = count_classes(&next);
        colours = next;
        if c == classes {
            break;
        }
        classes = c;
    }
    let hcol = colours.split_off(n);
    (colours, hcol)
}

fn compact<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut ids = BTreeMap::new();
    for k in keys {
        let next = ids.len();
        ids.entry(k.clone()).or_insert(next);
    }
    // renumber in key order so ids do not depend on vertex order
    let order: BTreeMap<usize, usize> = ids.values().enumerate().map(|(i, &id)| (id, i)).collect();
    keys.iter().map(|k| order[&ids[k]]).collect()
}

fn count_classes(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(t)
        }
    })
}

/// Exact isomorphism decision (labels are ignored).
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > ISO_MAX_ORDER {
            return Err(Error::Scale {
                what: "isomorphism",
                order: x.order(),
                max: ISO_MAX_ORDER,
            });
        }
    }
    Ok(find_isomorphism(g, h).is_some())
}

/// An isomorphism `map` with `uv ∈ E(g) ⇔ map[u]map[v] ∈ E(h)`, if any.
/// Orders above [`ISO_MAX_ORDER`] return `None`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || n > ISO_MAX_ORDER || g.edge_count() != h.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let adj_g = bit_rows(g);
    let adj_h = bit_rows(h);
    let (cg, ch) = refine(g, h, &adj_g, &adj_h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }

    let cell_size = |c: usize| cg.iter().filter(|&&x| x == c).count();
    // Static order: prefer vertices with many already-placed neighbours,
    // then small cells.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse((adj_g[v] & placed).count_ones()),
                    cell_size(cg[v]),
                    v,
                )
            })
            .unwrap();
        placed |= 1 << next;
        order.push(next);
    }

    struct Search<'a> {
        order: &'a [usize],
        adj_g: &'a [u64],
        adj_h: &'a [u64],
        cg: &'a [usize],
        ch: &'a [usize],
        map: Vec<usize>,
        used: u64,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let u = self.order[depth];
            let mut expected = 0u64;
            let mut image = 0u64;
            for &p in &self.order[..depth] {
                let m = self.map[p];
                image |= 1 << m;
                if self.adj_g[u] >> p & 1 == 1 {
                    expected |= 1 << m;
                }
            }
            for c in 0..self.ch.len() {
                if self.used >> c & 1 == 1 || self.ch[c] != self.cg[u] {
                    continue;
                }
                if self.adj_h[c] & image != expected {
                    continue;
                }
                self.map[u] = c;
                self.used |= 1 << c;
                if self.go(depth + 1) {
                    return true;
                }
                self.used &= !(1 << c);
            }
            false
        }
    }

    let mut s = Search {
        order: &order,
        adj_g: &adj_g,
        adj_h: &adj_h,
        cg: &cg,
        ch: &ch,
        map: vec![usize::MAX; n],
        used: 0,
    };
    s.go(0).then_some(s.map)
}
