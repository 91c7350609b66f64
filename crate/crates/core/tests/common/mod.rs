#![allow(dead_code)]

use rand::Rng;

use k3irreg::evolve::{init_ring_lattice, randomize, rng::stream};
use k3irreg::Graph;

/// `G(n, p)` from a seeded stream.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = stream(seed, 1, n as u64, 0);
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Randomized `r`-regular graph: ring lattice scrambled by `3|E|` switches.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Graph {
    let lattice = init_ring_lattice(n, r).unwrap();
    let k = 3 * lattice.edge_count();
    randomize(&lattice, k, &mut stream(seed, 2, n as u64, r as u64))
}

/// Uniformly random permutation of `0..n`.
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut stream(seed, 3, n as u64, 0));
    p
}
