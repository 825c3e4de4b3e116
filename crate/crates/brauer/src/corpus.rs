//! Seeded random trees and exhaustive enumeration of small plane trees.

use brauer_core::tree::RawTree;
use brauer_core::BrauerTree;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A tree with `e` edges: vertex `i` hangs from a uniform earlier vertex,
/// rotations are shuffled and the exceptional vertex is uniform.
pub fn random_tree<R: Rng>(rng: &mut R, e: usize, m: u32) -> BrauerTree {
    let parent: Vec<usize> = (0..e).map(|i| rng.gen_range(0..=i)).collect();
    let mut raw = RawTree::from_parents(&parent, rng.gen_range(0..=e), m as i64);
    for (_, rot) in raw.rotations.iter_mut() {
        rot.shuffle(rng);
    }
    BrauerTree::validate(&raw).expect("parent lists give trees")
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub min_edges: usize,
    pub max_edges: usize,
    pub max_multiplicity: u32,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { seed: 0, count: 200, min_edges: 2, max_edges: 9, max_multiplicity: 3 }
    }
}

/// The same spec always gives the same trees.
pub fn corpus(spec: &CorpusSpec) -> Vec<BrauerTree> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| {
            let e = rng.gen_range(spec.min_edges..=spec.max_edges);
            let m = rng.gen_range(1..=spec.max_multiplicity);
            random_tree(&mut rng, e, m)
        })
        .collect()
}

fn dyck_words(n: usize) -> Vec<Vec<bool>> {
    fn go(open: usize, close: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if open == 0 && close == 0 {
            out.push(cur.clone());
            return;
        }
        if open > 0 {
            cur.push(true);
            go(open - 1, close, cur, out);
            cur.pop();
        }
        if close > open {
            cur.push(false);
            go(open, close - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All plane trees with `e` edges rooted at the exceptional vertex `v0`, in
/// Dyck-word order. Edges are numbered in depth-first order and children
/// follow each other counterclockwise after the edge to the parent.
pub fn plane_trees(e: usize, m: u32) -> Vec<BrauerTree> {
    dyck_words(e)
        .into_iter()
        .map(|word| {
            let mut parent = Vec::with_capacity(e);
            let mut stack = vec![0usize];
            for step in word {
                if step {
                    parent.push(*stack.last().expect("root stays"));
                    stack.push(parent.len());
                } else {
                    stack.pop();
                }
            }
            BrauerTree::validate(&RawTree::from_parents(&parent, 0, m as i64)).expect("plane tree")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=6).map(|e| plane_trees(e, 1).len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn corpus_is_reproducible() {
        let spec = CorpusSpec { count: 20, ..CorpusSpec::default() };
        let a = corpus(&spec);
        let b = corpus(&spec);
        assert!(a.iter().zip(&b).all(|(x, y)| x.to_raw() == y.to_raw()));
        assert!(a.iter().all(|t| (2..=9).contains(&t.edge_count()) && (1..=3).contains(&t.multiplicity())));
        let c = corpus(&CorpusSpec { seed: 1, ..spec });
        assert!(a.iter().zip(&c).any(|(x, y)| x.to_raw() != y.to_raw()));
    }
}
