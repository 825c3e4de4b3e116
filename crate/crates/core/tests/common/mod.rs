#![allow(dead_code)]

use brauer_core::tree::RawTree;
use brauer_core::BrauerTree;
use proptest::prelude::*;

/// Builds a tree from raw random words: `words[i]` picks the parent of
/// vertex `i + 1`, the rest rotate and swap the rotations.
pub fn tree_from_words(e: usize, words: &[u32], exceptional: u32, m: u32) -> BrauerTree {
    let parent: Vec<usize> = (0..e).map(|i| words[i] as usize % (i + 1)).collect();
    let mut raw = RawTree::from_parents(&parent, exceptional as usize % (e + 1), m as i64);
    let mut w = words[e..].iter().copied().cycle();
    for (_, rot) in raw.rotations.iter_mut() {
        let k = rot.len();
        if k > 1 {
            rot.rotate_left(w.next().unwrap() as usize % k);
            let (a, b) = (w.next().unwrap() as usize % k, w.next().unwrap() as usize % k);
            rot.swap(a, b);
        }
    }
    BrauerTree::validate(&raw).expect("generated tree is valid")
}

pub fn arb_tree(min_e: usize, max_e: usize, max_m: u32) -> impl Strategy<Value = BrauerTree> {
    (min_e..=max_e, prop::collection::vec(any::<u32>(), 4 * max_e + 4), any::<u32>(), 1..=max_m)
        .prop_map(|(e, words, x, m)| tree_from_words(e, &words, x, m))
}
