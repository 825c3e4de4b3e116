//! Tilting mutations of Brauer trees and complete mutation reductions.
//!
//! `mu+` at `j` detaches `j` at every endpoint of degree at least two and
//! reattaches it at the far end of its counterclockwise predecessor there,
//! immediately before that predecessor. `mu-` is the mirror image with
//! successors, inserting immediately after. Edge labels never change, so the
//! natural numbering of the final star pulls back along the log.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::tree::{BrauerTree, EdgeId, EdgeNumbering, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Plus,
    Minus,
}

#[derive(Clone, Debug)]
pub struct MutationStep {
    pub direction: Direction,
    pub center: EdgeId,
    /// One pivot per reattached endpoint, near endpoint first.
    pub pivots: Vec<EdgeId>,
    pub before: BrauerTree,
    pub after: BrauerTree,
}

#[derive(Clone, Debug)]
pub struct MutationLog {
    pub original: BrauerTree,
    pub initial_edge: EdgeId,
    pub steps: Vec<MutationStep>,
    natural: Option<EdgeNumbering>,
}

impl MutationLog {
    pub fn new(original: BrauerTree, initial_edge: EdgeId, steps: Vec<MutationStep>) -> Result<Self> {
        original.check_initial_edge(initial_edge)?;
        let mut log = MutationLog { original, initial_edge, steps, natural: None };
        log.check_consistent()?;
        if log.final_tree().is_star() {
            log.natural = Some(natural_numbering(&log.original, log.initial_edge, log.final_tree())?);
        }
        Ok(log)
    }

    pub fn final_tree(&self) -> &BrauerTree {
        self.steps.last().map_or(&self.original, |s| &s.after)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Available once the final tree is the star.
    pub fn natural_numbering(&self) -> Option<&EdgeNumbering> {
        self.natural.as_ref()
    }

    fn check_consistent(&self) -> Result<()> {
        let mut cur = &self.original;
        for (k, s) in self.steps.iter().enumerate() {
            if s.before != *cur {
                return Err(Error::InconsistentLog(k));
            }
            let redo = mutate(&s.before, s.center, s.direction)?;
            if redo.0 != s.after {
                return Err(Error::InconsistentLog(k));
            }
            cur = &s.after;
        }
        Ok(())
    }
}

/// Applies `mu+` or `mu-` at `center`, returning the new tree and the pivots.
pub fn mutate(tree: &BrauerTree, center: EdgeId, direction: Direction) -> Result<(BrauerTree, Vec<EdgeId>)> {
    if center.0 >= tree.edge_count() {
        return Err(Error::UnknownEdge(alloc::format!("#{}", center.0)));
    }
    if tree.edge_count() < 2 {
        return Err(Error::TooFewEdges(2));
    }
    let mut ends = tree.ends(center);
    ends.sort_by_key(|v| tree.distance(*v));
    // (endpoint, pivot, destination), computed on the unmodified tree
    let moves: Vec<(VertexId, EdgeId, VertexId)> = ends
        .iter()
        .filter(|&&x| tree.degree(x) >= 2)
        .map(|&x| {
            let p = match direction {
                Direction::Plus => tree.pred(x, center),
                Direction::Minus => tree.succ(x, center),
            };
            (x, p, tree.other_end(p, x))
        })
        .collect();

    let (vertex_ids, edge_labels, old_ends) = tree.raw_parts();
    let mut rotations: Vec<Vec<EdgeId>> = tree.rotations().to_vec();
    let mut new_ends = old_ends.to_vec();
    for &(x, _, _) in &moves {
        rotations[x.0].retain(|&e| e != center);
    }
    for &(x, p, dest) in &moves {
        let rot = &mut rotations[dest.0];
        let at = rot.iter().position(|&e| e == p).expect("pivot at destination");
        match direction {
            Direction::Plus => rot.insert(at, center),
            Direction::Minus => rot.insert(at + 1, center),
        }
        let slot = new_ends[center.0].iter_mut().find(|v| **v == x).expect("endpoint");
        *slot = dest;
    }
    let after = BrauerTree::assemble(
        vertex_ids.to_vec(),
        edge_labels.to_vec(),
        rotations,
        new_ends,
        tree.exceptional(),
        tree.multiplicity(),
    );
    Ok((after, moves.iter().map(|m| m.1).collect()))
}

pub fn mutate_plus(tree: &BrauerTree, center: EdgeId) -> Result<BrauerTree> {
    mutate(tree, center, Direction::Plus).map(|r| r.0)
}

pub fn mutate_minus(tree: &BrauerTree, center: EdgeId) -> Result<BrauerTree> {
    mutate(tree, center, Direction::Minus).map(|r| r.0)
}

/// Summands of `Q` in the `mu-` complex `P_i -> Q` at `i`: the
/// counterclockwise successor of `i` at every endpoint of degree at least
/// two, near endpoint first.
pub fn q_minus_summands(tree: &BrauerTree, i: EdgeId) -> Result<Vec<EdgeId>> {
    if tree.edge_count() < 2 {
        return Err(Error::TooFewEdges(2));
    }
    let mut ends = tree.ends(i);
    ends.sort_by_key(|v| tree.distance(*v));
    Ok(ends.iter().filter(|&&x| tree.degree(x) >= 2).map(|&x| tree.succ(x, i)).collect())
}

/// No vertex distance ever increases and at least one decreases overall.
pub fn is_mutation_reduction(log: &MutationLog) -> bool {
    if log.steps.is_empty() {
        return false;
    }
    let monotone = log.steps.iter().all(|s| s.before.distances().iter().zip(s.after.distances()).all(|(b, a)| a <= b));
    let decreased = log.original.distances() != log.final_tree().distances();
    monotone && decreased
}

/// Exactly one vertex distance drops, by exactly one.
pub fn is_unit_step(step: &MutationStep) -> bool {
    let mut drops = 0;
    for (b, a) in step.before.distances().iter().zip(step.after.distances()) {
        match b.checked_sub(*a) {
            Some(0) => {}
            Some(1) => drops += 1,
            _ => return false,
        }
    }
    drops == 1
}

fn push_plus(steps: &mut Vec<MutationStep>, tree: &mut BrauerTree, center: EdgeId) -> Result<()> {
    let (after, pivots) = mutate(tree, center, Direction::Plus)?;
    steps.push(MutationStep { direction: Direction::Plus, center, pivots, before: tree.clone(), after: after.clone() });
    *tree = after;
    Ok(())
}

/// Algorithm Z: repeatedly take the first leaf at maximal distance along the
/// Green's walk from the initial branch and move it inward for as long as it
/// remains a primary edge.
pub fn run_algorithm_z(tree: &BrauerTree, initial: EdgeId) -> Result<MutationLog> {
    tree.check_initial_edge(initial)?;
    let mut cur = tree.clone();
    let mut steps = Vec::new();
    loop {
        let d = cur.distances().iter().copied().max().unwrap_or(0);
        if d <= 1 {
            break;
        }
        let walk = cur.green_walk(initial)?;
        let Some(leaf) = walk.iter().find(|v| cur.distance(v.vertex) == d && cur.degree(v.vertex) == 1) else {
            unreachable!("a vertex at maximal distance is a leaf");
        };
        let c = leaf.arriving;
        debug_assert!(cur.is_primary(c));
        loop {
            push_plus(&mut steps, &mut cur, c)?;
            if cur.near_vertex(c) == cur.exceptional() || !cur.is_primary(c) {
                break;
            }
        }
    }
    MutationLog::new(tree.clone(), initial, steps)
}

/// Aihara's algorithm: mutate at the first primary edge hanging off a root,
/// following the Green's walk from the current initial branch, which moves to
/// the new branch whenever the center lay on it.
pub fn run_algorithm_aihara(tree: &BrauerTree, initial: EdgeId) -> Result<MutationLog> {
    tree.check_initial_edge(initial)?;
    let mut cur = tree.clone();
    let mut init = initial;
    let mut steps = Vec::new();
    while !cur.is_star() {
        let walk = cur.green_walk(init)?;
        let w = walk
            .iter()
            .find(|v| cur.distance(v.vertex) == 1 && v.arriving != v.departing)
            .map(|v| v.departing)
            .expect("a tree that is not a star has a non-leaf root");
        let on_initial = cur.branch_root(w) == init;
        push_plus(&mut steps, &mut cur, w)?;
        if on_initial {
            init = w;
        }
    }
    MutationLog::new(tree.clone(), initial, steps)
}

/// Numbers the star `last` counterclockwise, starting right after the
/// original root that cyclically precedes `initial`.
pub fn natural_numbering(original: &BrauerTree, initial: EdgeId, last: &BrauerTree) -> Result<EdgeNumbering> {
    original.check_initial_edge(initial)?;
    if !last.is_star() {
        return Err(Error::InvalidNumbering("final tree is not the star".into()));
    }
    let prev = original.pred(original.exceptional(), initial);
    let rot = last.roots();
    let start = (rot.iter().position(|&e| e == prev).expect("root survives") + 1) % rot.len();
    let mut numbers = alloc::vec![0u32; rot.len()];
    for k in 0..rot.len() {
        numbers[rot[(start + k) % rot.len()].0] = k as u32 + 1;
    }
    EdgeNumbering::new(numbers)
}

/// Checks that every original branch occupies a counterclockwise interval of
/// the final star ending at its root, with the intervals in branch order.
pub fn branches_form_intervals(original: &BrauerTree, last: &BrauerTree) -> bool {
    if !last.is_star() || last.edge_count() != original.edge_count() {
        return false;
    }
    let roots = original.roots();
    let branch: Vec<usize> =
        original.edges().map(|e| roots.iter().position(|&r| r == original.branch_root(e)).expect("root")).collect();
    let rot = last.roots();
    let prev = original.pred(original.exceptional(), roots[0]);
    let start = (rot.iter().position(|&e| e == prev).expect("root survives") + 1) % rot.len();
    let seq: Vec<EdgeId> = (0..rot.len()).map(|k| rot[(start + k) % rot.len()]).collect();
    let mut pos = 0;
    for (b, &root) in roots.iter().enumerate() {
        let size = branch.iter().filter(|&&x| x == b).count();
        let block = &seq[pos..pos + size];
        if block.iter().any(|e| branch[e.0] != b) || block.last() != Some(&root) {
            return false;
        }
        pos += size;
    }
    true
}
