use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_ORDER: usize = 512;

/// Triangle-degrees by exhaustive enumeration of unordered triples.
///
/// Reads only the edge list and builds its own boolean matrix; shares no
/// counting code with [`crate::k3`].
pub fn brute_force_k3_degrees(g: &Graph) -> Result<Vec<u64>> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::Scale {
            what: "brute-force oracle",
            order: n,
            max: ORACLE_MAX_ORDER,
        });
    }
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut counts = vec![0u64; n];
    for a in 0..n {
        for b in (a + 1)..n {
            if !adj[a][b] {
                continue;
            }
            for c in (b + 1)..n {
                if adj[a][c] && adj[b][c] {
                    counts[a] += 1;
                    counts[b] += 1;
                    counts[c] += 1;
                }
            }
        }
    }
    Ok(counts)
}

/// Number of triangles by the same enumeration.
pub fn brute_force_triangle_count(g: &Graph) -> Result<u64> {
    Ok(brute_force_k3_degrees(g)?.iter().sum::<u64>() / 3)
}
