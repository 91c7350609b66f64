use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::config::carryover_count;
use super::individual::Individual;

/// Sorts by `(pair count, duplicated-vertex count)`, keeping input order on
/// ties.
pub fn rank(individuals: &mut [Individual]) {
    individuals.sort_by_key(Individual::rank_key);
}

/// Elitist selection with carryover.
///
/// The pool is all offspring followed by the best `⌈carryover_fraction ·
/// size⌉` parents, so on equal rank an offspring displaces a parent and the
/// population can drift across graphs of equal fitness. The best parent
/// still survives unless matched or beaten. The pool is ranked (stably),
/// exact duplicate edge sets are dropped,
/// and the first `size` survivors are returned in rank order. If fewer than
/// `size` distinct graphs remain the dropped duplicates fill the rest, so
/// the output always has exactly `size` members.
pub fn select(
    parents: &[Individual],
    offspring: Vec<Individual>,
    size: usize,
    carryover_fraction: f64,
) -> Result<Vec<Individual>> {
    let keep = carryover_count(size, carryover_fraction).min(parents.len());
    let mut elite: Vec<Individual> = parents.to_vec();
    rank(&mut elite);
    elite.truncate(keep);

    let mut pool = offspring;
    pool.extend(elite);
    if pool.is_empty() {
        return Err(Error::Internal("selection pool is empty".into()));
    }
    rank(&mut pool);

    let mut seen: HashSet<&Graph> = HashSet::with_capacity(pool.len());
    let mut chosen = Vec::with_capacity(size);
    let mut spare = Vec::new();
    for (i, ind) in pool.iter().enumerate() {
        if seen.insert(&ind.graph) {
            if chosen.len() < size {
                chosen.push(i);
            }
        } else {
            spare.push(i);
        }
    }
    let firsts = chosen.clone();
    let mut fill = spare.into_iter().chain(firsts).cycle();
    while chosen.len() < size {
        chosen.push(fill.next().expect("pool is non-empty"));
    }
    chosen.sort_unstable();

    Ok(chosen.into_iter().map(|i| pool[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolve::mutation::init_ring_lattice;
    use crate::fixtures;

    fn inds() -> Vec<Individual> {
        vec![
            Individual::new(fixtures::near_miss_8reg()),  // P = 2
            Individual::new(Graph::complete(4).unwrap()), // P = 6
            Individual::new(fixtures::table1()),          // P = 0
            Individual::new(init_ring_lattice(10, 4).unwrap()), // P = 45
        ]
    }

    #[test]
    fn top_two() {
        let out = select(&[], inds(), 2, 0.15).unwrap();
        let p: Vec<u64> = out.iter().map(Individual::pair_count).collect();
        assert_eq!(p, vec![0, 2]);
    }

    #[test]
    fn carryover_keeps_best_parent() {
        let parents = inds();
        let offspring = vec![Individual::new(Graph::complete(5).unwrap())];
        let out = select(&parents, offspring, 4, 0.15).unwrap();
        assert_eq!(out.len(), 4);
        assert_eq!(out[0].pair_count(), 0);
    }

    #[test]
    fn duplicates_dropped_then_filled() {
        let a = Individual::new(fixtures::near_miss_8reg());
        let b = Individual::new(Graph::complete(4).unwrap());
        let out = select(&[], vec![a.clone(), a.clone(), b.clone()], 2, 0.0).unwrap();
        assert_eq!(out, vec![a.clone(), b.clone()]);
        let out = select(&[], vec![a.clone(), a.clone(), b], 3, 0.0).unwrap();
        assert_eq!(out.len(), 3);
        let out = select(&[], vec![a.clone()], 3, 0.0).unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.iter().all(|x| *x == a));
    }

    #[test]
    fn offspring_wins_ties() {
        let parent = Individual::new(fixtures::table1());
        let child = Individual::new(fixtures::table1_switched());
        let out = select(std::slice::from_ref(&parent), vec![child.clone()], 1, 0.5).unwrap();
        assert_eq!(out, vec![child.clone()]);
        let out = select(std::slice::from_ref(&parent), vec![child.clone()], 2, 0.5).unwrap();
        assert_eq!(out, vec![child, parent]);
    }

    #[test]
    fn empty_pool() {
        assert!(matches!(
            select(&[], vec![], 3, 0.5),
            Err(Error::Internal(_))
        ));
    }
}
