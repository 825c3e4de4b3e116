//! Trees used throughout the tests and the documentation.

use brauer_core::BrauerTree;

use crate::format::parse_tree;

pub const P2_JSON: &str = include_str!("../fixtures/p2.json");
pub const L5_JSON: &str = include_str!("../fixtures/l5.json");
pub const SIX_JSON: &str = include_str!("../fixtures/figure3.json");

/// Two edges `a`, `b` in a path from the exceptional end.
pub fn p2() -> BrauerTree {
    parse_tree(P2_JSON).expect("fixture parses")
}

/// Five edges `1..5` in a path from the exceptional end.
pub fn l5() -> BrauerTree {
    parse_tree(L5_JSON).expect("fixture parses")
}

/// Six edges `A..F` on which Algorithm Z numbers `A..F` as `6..1` and
/// Aihara's algorithm swaps the numbers of `E` and `F`.
pub fn six() -> BrauerTree {
    parse_tree(SIX_JSON).expect("fixture parses")
}
