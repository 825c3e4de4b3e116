//! Planar Brauer trees.
//!
//! Planarity is carried entirely by the per-vertex rotation lists: the order
//! of a rotation is the counterclockwise order of the incident edges. Vertex
//! ids and edge labels are opaque strings; internally they are addressed by
//! dense [`VertexId`] / [`EdgeId`] indices that stay stable under mutation.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result, TreeViolation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// Unvalidated tree description, in the shape of the JSON file format.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawTree {
    pub multiplicity: i64,
    pub exceptional: String,
    /// Vertex id with its counterclockwise list of edge labels.
    pub rotations: Vec<(String, Vec<String>)>,
}

impl RawTree {
    /// Vertices `v0..vn`, where `vi` for `i >= 1` hangs from
    /// `v{parent[i - 1]}` along edge `"i"`. Each rotation lists the edge to
    /// the parent first, then the child edges in increasing order.
    pub fn from_parents(parent: &[usize], exceptional: usize, multiplicity: i64) -> RawTree {
        let n = parent.len();
        let mut rotations: Vec<(String, Vec<String>)> = (0..=n).map(|v| (format!("v{v}"), Vec::new())).collect();
        for (i, &p) in parent.iter().enumerate() {
            rotations[i + 1].1.insert(0, (i + 1).to_string());
            if p <= n {
                rotations[p].1.push((i + 1).to_string());
            }
        }
        RawTree { multiplicity, exceptional: format!("v{exceptional}"), rotations }
    }
}

#[derive(Clone, Debug)]
pub struct BrauerTree {
    vertex_ids: Vec<String>,
    edge_labels: Vec<String>,
    rotations: Vec<Vec<EdgeId>>,
    ends: Vec<[VertexId; 2]>,
    exceptional: VertexId,
    multiplicity: u32,
    depth: Vec<u32>,
    entering: Vec<Option<EdgeId>>,
}

/// One corner of a Green's walk: the walker arrives at `vertex` along
/// `arriving` and leaves along `departing`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectorVisit {
    pub vertex: VertexId,
    pub arriving: EdgeId,
    pub departing: EdgeId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointingKind {
    Ordinary,
    Reversed,
    LeftAlternating,
}

/// A sector `(i, j)` with `j` the counterclockwise successor of `i`, chosen at
/// every nonexceptional vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pointing {
    sectors: Vec<Option<(EdgeId, EdgeId)>>,
}

/// Bijection from edges onto `1..=e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeNumbering {
    numbers: Vec<u32>,
    edges: Vec<EdgeId>,
}

fn cyclic_eq(a: &[EdgeId], b: &[EdgeId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    match b.iter().position(|x| *x == a[0]) {
        Some(off) => (0..a.len()).all(|i| a[i] == b[(i + off) % b.len()]),
        None => false,
    }
}

impl PartialEq for BrauerTree {
    /// Rotations are compared as cyclic orders.
    fn eq(&self, other: &Self) -> bool {
        self.vertex_ids == other.vertex_ids
            && self.edge_labels == other.edge_labels
            && self.exceptional == other.exceptional
            && self.multiplicity == other.multiplicity
            && self.rotations.iter().zip(&other.rotations).all(|(a, b)| cyclic_eq(a, b))
    }
}

impl Eq for BrauerTree {}

impl BrauerTree {
    /// The Brauer star: `e` edges labeled `"1".."e"` around the exceptional
    /// center `"v0"`, in counterclockwise order.
    pub fn star(e: usize, m: u32) -> Result<Self> {
        if e < 1 {
            return Err(Error::TooFewEdges(1));
        }
        let mut rotations = vec![("v0".to_string(), (1..=e).map(|i| i.to_string()).collect())];
        for i in 1..=e {
            rotations.push((format!("v{i}"), vec![i.to_string()]));
        }
        BrauerTree::validate(&RawTree { multiplicity: m as i64, exceptional: "v0".into(), rotations })
    }

    /// The linear tree with `e` edges `"1".."e"` running outward from the
    /// exceptional end vertex `"v0"`.
    pub fn linear(e: usize, m: u32) -> Result<Self> {
        if e < 1 {
            return Err(Error::TooFewEdges(1));
        }
        let mut rotations = vec![("v0".to_string(), vec!["1".to_string()])];
        for i in 1..e {
            rotations.push((format!("v{i}"), vec![i.to_string(), (i + 1).to_string()]));
        }
        rotations.push((format!("v{e}"), vec![e.to_string()]));
        BrauerTree::validate(&RawTree { multiplicity: m as i64, exceptional: "v0".into(), rotations })
    }

    /// Checks every tree invariant and reports all violations at once.
    pub fn validate(raw: &RawTree) -> Result<Self> {
        let mut violations = Vec::new();
        if raw.multiplicity < 1 {
            violations.push(TreeViolation::ZeroMultiplicity);
        }
        let mut vertex_index = BTreeMap::new();
        let mut vertex_ids = Vec::new();
        for (id, _) in &raw.rotations {
            if vertex_index.contains_key(id.as_str()) {
                violations.push(TreeViolation::DuplicateVertex(id.clone()));
                continue;
            }
            vertex_index.insert(id.as_str(), vertex_ids.len());
            vertex_ids.push(id.clone());
        }
        let exceptional = match vertex_index.get(raw.exceptional.as_str()) {
            Some(&v) => Some(VertexId(v)),
            None => {
                violations.push(TreeViolation::MissingExceptional(raw.exceptional.clone()));
                None
            }
        };

        let mut edge_index: BTreeMap<&str, usize> = BTreeMap::new();
        let mut edge_labels = Vec::new();
        let mut incidence: Vec<Vec<VertexId>> = Vec::new();
        let mut rotations = vec![Vec::new(); vertex_ids.len()];
        let mut seen_vertex = BTreeSet::new();
        for (id, rot) in &raw.rotations {
            if !seen_vertex.insert(id.as_str()) {
                continue;
            }
            let v = VertexId(vertex_index[id.as_str()]);
            let mut local = BTreeSet::new();
            for label in rot {
                if !local.insert(label.as_str()) {
                    violations.push(TreeViolation::Loop(label.clone()));
                    continue;
                }
                let e = *edge_index.entry(label.as_str()).or_insert_with(|| {
                    edge_labels.push(label.clone());
                    incidence.push(Vec::new());
                    edge_labels.len() - 1
                });
                incidence[e].push(v);
                rotations[v.0].push(EdgeId(e));
            }
        }
        if edge_labels.is_empty() {
            violations.push(TreeViolation::NoEdges);
        }
        let mut ends = Vec::with_capacity(edge_labels.len());
        for (e, inc) in incidence.iter().enumerate() {
            match inc.len() {
                2 => ends.push([inc[0], inc[1]]),
                1 => violations.push(TreeViolation::DanglingEdge(edge_labels[e].clone())),
                n => violations.push(TreeViolation::OverusedEdge(edge_labels[e].clone(), n)),
            }
        }
        if !edge_labels.is_empty() {
            for (v, rot) in rotations.iter().enumerate() {
                if rot.is_empty() {
                    violations.push(TreeViolation::IsolatedVertex(vertex_ids[v].clone()));
                }
            }
        }
        if ends.len() == edge_labels.len() && !edge_labels.is_empty() {
            // Union-find over the well-formed edges.
            let mut parent: Vec<usize> = (0..vertex_ids.len()).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            let mut cyclic = false;
            for [a, b] in &ends {
                let (ra, rb) = (find(&mut parent, a.0), find(&mut parent, b.0));
                if ra == rb {
                    cyclic = true;
                } else {
                    parent[ra] = rb;
                }
            }
            let roots: BTreeSet<usize> = (0..vertex_ids.len()).map(|v| find(&mut parent, v)).collect();
            if roots.len() > 1 {
                violations.push(TreeViolation::Disconnected);
            }
            if cyclic {
                violations.push(TreeViolation::NotAcyclic);
            }
        }
        if !violations.is_empty() {
            return Err(Error::InvalidTree(violations));
        }
        Ok(BrauerTree::assemble(
            vertex_ids,
            edge_labels,
            rotations,
            ends,
            exceptional.expect("checked above"),
            raw.multiplicity as u32,
        ))
    }

    /// Builds the derived depth data. All invariants must already hold.
    pub(crate) fn assemble(
        vertex_ids: Vec<String>,
        edge_labels: Vec<String>,
        rotations: Vec<Vec<EdgeId>>,
        ends: Vec<[VertexId; 2]>,
        exceptional: VertexId,
        multiplicity: u32,
    ) -> Self {
        let n = vertex_ids.len();
        let mut depth = vec![u32::MAX; n];
        let mut entering = vec![None; n];
        depth[exceptional.0] = 0;
        let mut queue = VecDeque::from([exceptional]);
        while let Some(v) = queue.pop_front() {
            for &e in &rotations[v.0] {
                let [a, b] = ends[e.0];
                let w = if a == v { b } else { a };
                if depth[w.0] == u32::MAX {
                    depth[w.0] = depth[v.0] + 1;
                    entering[w.0] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(depth.iter().all(|&d| d != u32::MAX), "tree must be connected");
        BrauerTree { vertex_ids, edge_labels, rotations, ends, exceptional, multiplicity, depth, entering }
    }

    pub fn to_raw(&self) -> RawTree {
        RawTree {
            multiplicity: self.multiplicity as i64,
            exceptional: self.vertex_ids[self.exceptional.0].clone(),
            rotations: self
                .vertices()
                .map(|v| {
                    let rot = self.rotation(v).iter().map(|&e| self.edge_labels[e.0].clone()).collect();
                    (self.vertex_ids[v.0].clone(), rot)
                })
                .collect(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn exceptional(&self) -> VertexId {
        self.exceptional
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_ids.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_labels.len()).map(EdgeId)
    }

    pub fn label(&self, e: EdgeId) -> &str {
        &self.edge_labels[e.0]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_ids[v.0]
    }

    pub fn edge(&self, label: &str) -> Result<EdgeId> {
        self.edge_labels.iter().position(|l| l == label).map(EdgeId).ok_or_else(|| Error::UnknownEdge(label.into()))
    }

    pub fn vertex(&self, id: &str) -> Option<VertexId> {
        self.vertex_ids.iter().position(|v| v == id).map(VertexId)
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotations[v.0]
    }

    pub(crate) fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotations
    }

    pub(crate) fn raw_parts(&self) -> (&[String], &[String], &[[VertexId; 2]]) {
        (&self.vertex_ids, &self.edge_labels, &self.ends)
    }

    pub fn ends(&self, e: EdgeId) -> [VertexId; 2] {
        self.ends[e.0]
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.ends[e.0];
        debug_assert!(a == v || b == v);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v.0].len()
    }

    fn position(&self, v: VertexId, e: EdgeId) -> usize {
        self.rotations[v.0].iter().position(|&x| x == e).expect("edge not incident to vertex")
    }

    /// Counterclockwise successor of `e` around `v`.
    pub fn succ(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let rot = &self.rotations[v.0];
        rot[(self.position(v, e) + 1) % rot.len()]
    }

    /// Counterclockwise predecessor of `e` around `v`.
    pub fn pred(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let rot = &self.rotations[v.0];
        rot[(self.position(v, e) + rot.len() - 1) % rot.len()]
    }

    /// Distance of every vertex from the exceptional vertex, indexed by
    /// [`VertexId`].
    pub fn distances(&self) -> &[u32] {
        &self.depth
    }

    pub fn distance(&self, v: VertexId) -> u32 {
        self.depth[v.0]
    }

    /// First edge on the path from `v` to the exceptional vertex.
    pub fn entering_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.entering[v.0]
    }

    /// Endpoint of `e` farther from the exceptional vertex.
    pub fn far_vertex(&self, e: EdgeId) -> VertexId {
        let [a, b] = self.ends[e.0];
        if self.depth[a.0] > self.depth[b.0] {
            a
        } else {
            b
        }
    }

    pub fn near_vertex(&self, e: EdgeId) -> VertexId {
        let [a, b] = self.ends[e.0];
        if self.depth[a.0] > self.depth[b.0] {
            b
        } else {
            a
        }
    }

    /// Edges at the exceptional vertex, i.e. the roots of the branches.
    pub fn roots(&self) -> &[EdgeId] {
        &self.rotations[self.exceptional.0]
    }

    pub fn is_star(&self) -> bool {
        self.roots().len() == self.edge_count()
    }

    pub fn is_leaf_edge(&self, e: EdgeId) -> bool {
        self.degree(self.far_vertex(e)) == 1
    }

    /// First edge in the exceptional vertex's rotation.
    pub fn default_initial_edge(&self) -> EdgeId {
        self.roots()[0]
    }

    /// The root of the branch containing `e`.
    pub fn branch_root(&self, e: EdgeId) -> EdgeId {
        let mut cur = e;
        loop {
            let near = self.near_vertex(cur);
            match self.entering[near.0] {
                Some(up) => cur = up,
                None => return cur,
            }
        }
    }

    /// Edges of the subtree hanging beyond `e`, including `e`.
    pub fn subtree_edges(&self, e: EdgeId) -> Vec<EdgeId> {
        let mut out = vec![e];
        let mut i = 0;
        while i < out.len() {
            let far = self.far_vertex(out[i]);
            for &x in &self.rotations[far.0] {
                if x != out[i] {
                    out.push(x);
                }
            }
            i += 1;
        }
        out
    }

    pub fn check_initial_edge(&self, e: EdgeId) -> Result<()> {
        if self.roots().contains(&e) {
            Ok(())
        } else {
            Err(Error::NotAtExceptional(self.label(e).into()))
        }
    }

    /// Counterclockwise circuit starting along `initial`, as the list of
    /// corners visited. Its length is `2e`; the last corner is the return to
    /// the exceptional vertex.
    pub fn green_walk(&self, initial: EdgeId) -> Result<Vec<SectorVisit>> {
        self.check_initial_edge(initial)?;
        let mut out = Vec::with_capacity(2 * self.edge_count());
        let mut at = self.exceptional;
        let mut depart = initial;
        for _ in 0..2 * self.edge_count() {
            let w = self.other_end(depart, at);
            let next = self.succ(w, depart);
            out.push(SectorVisit { vertex: w, arriving: depart, departing: next });
            at = w;
            depart = next;
        }
        debug_assert_eq!(at, self.exceptional);
        debug_assert_eq!(depart, initial);
        Ok(out)
    }

    /// Primary (successor of the entering edge) and coprimary (predecessor)
    /// edges of a nonexceptional vertex.
    pub fn primary_coprimary(&self, v: VertexId) -> Result<(EdgeId, EdgeId)> {
        let k = self.entering[v.0].ok_or(Error::ExceptionalVertex)?;
        Ok((self.succ(v, k), self.pred(v, k)))
    }

    pub fn is_primary(&self, e: EdgeId) -> bool {
        let near = self.near_vertex(e);
        match self.entering[near.0] {
            Some(k) => self.succ(near, k) == e,
            None => false,
        }
    }

    pub fn make_pointing(&self, kind: PointingKind) -> Pointing {
        let sectors = self
            .vertices()
            .map(|v| {
                let k = self.entering[v.0]?;
                let ordinary = (k, self.succ(v, k));
                let reversed = (self.pred(v, k), k);
                Some(match kind {
                    PointingKind::Ordinary => ordinary,
                    PointingKind::Reversed => reversed,
                    PointingKind::LeftAlternating => {
                        if self.depth[v.0] % 2 == 1 {
                            reversed
                        } else {
                            ordinary
                        }
                    }
                })
            })
            .collect();
        Pointing { sectors }
    }

    /// Numbers edges in the order in which the Green's walk from `initial`
    /// meets the points of their far vertices.
    pub fn numbering_from_pointing(&self, pointing: &Pointing, initial: EdgeId) -> Result<EdgeNumbering> {
        pointing.check(self)?;
        let mut numbers = vec![0u32; self.edge_count()];
        let mut next = 1;
        for visit in self.green_walk(initial)? {
            if visit.vertex == self.exceptional {
                continue;
            }
            if pointing.sectors[visit.vertex.0] == Some((visit.arriving, visit.departing)) {
                let e = self.entering[visit.vertex.0].expect("nonexceptional");
                numbers[e.0] = next;
                next += 1;
            }
        }
        EdgeNumbering::new(numbers)
    }

    /// Combinatorial Cartan matrix indexed by number (row `n - 1` is the edge
    /// numbered `n`).
    pub fn cartan_matrix(&self, numbering: &EdgeNumbering) -> Vec<Vec<u32>> {
        let e = self.edge_count();
        let mu = |v: VertexId| if v == self.exceptional { self.multiplicity } else { 1 };
        let mut c = vec![vec![0; e]; e];
        for a in self.edges() {
            for b in self.edges() {
                let [a0, a1] = self.ends[a.0];
                let [b0, b1] = self.ends[b.0];
                let mut total = 0;
                for v in [a0, a1] {
                    if v == b0 || v == b1 {
                        total += mu(v);
                    }
                }
                c[numbering.number(a) as usize - 1][numbering.number(b) as usize - 1] = total;
            }
        }
        c
    }
}

impl Pointing {
    /// Builds a pointing from explicit sectors, checking adjacency.
    pub fn new(tree: &BrauerTree, sectors: Vec<Option<(EdgeId, EdgeId)>>) -> Result<Self> {
        let p = Pointing { sectors };
        p.check(tree)?;
        Ok(p)
    }

    pub(crate) fn check(&self, tree: &BrauerTree) -> Result<()> {
        if self.sectors.len() != tree.vertex_count() {
            return Err(Error::InvalidPointing("<size mismatch>".into()));
        }
        for v in tree.vertices() {
            let bad = || Error::InvalidPointing(tree.vertex_name(v).into());
            match (self.sectors[v.0], v == tree.exceptional) {
                (None, true) => {}
                (Some((i, j)), false) => {
                    let rot = tree.rotation(v);
                    if !rot.contains(&i) || tree.succ(v, i) != j {
                        return Err(bad());
                    }
                }
                _ => return Err(bad()),
            }
        }
        Ok(())
    }

    pub fn sector(&self, v: VertexId) -> Option<(EdgeId, EdgeId)> {
        self.sectors[v.0]
    }
}

impl EdgeNumbering {
    /// `numbers[e]` is the number of edge `e`; must be a permutation of `1..=e`.
    pub fn new(numbers: Vec<u32>) -> Result<Self> {
        let n = numbers.len();
        let mut edges = vec![None; n];
        for (e, &k) in numbers.iter().enumerate() {
            if k < 1 || k as usize > n {
                return Err(Error::InvalidNumbering(format!("number {k} out of range 1..={n}")));
            }
            if edges[k as usize - 1].replace(EdgeId(e)).is_some() {
                return Err(Error::InvalidNumbering(format!("number {k} used twice")));
            }
        }
        Ok(EdgeNumbering { numbers, edges: edges.into_iter().map(|x| x.expect("bijection")).collect() })
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }

    pub fn number(&self, e: EdgeId) -> u32 {
        self.numbers[e.0]
    }

    pub fn edge(&self, n: u32) -> EdgeId {
        self.edges[n as usize - 1]
    }

    /// Number of a vertex: that of its entering edge, 0 for the exceptional.
    pub fn vertex_number(&self, tree: &BrauerTree, v: VertexId) -> u32 {
        tree.entering_edge(v).map_or(0, |e| self.number(e))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.numbers
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(m: i64, exc: &str, rot: &[(&str, &[&str])]) -> RawTree {
        RawTree {
            multiplicity: m,
            exceptional: exc.into(),
            rotations: rot.iter().map(|(v, r)| (v.to_string(), r.iter().map(|s| s.to_string()).collect())).collect(),
        }
    }

    fn p2(m: i64) -> BrauerTree {
        BrauerTree::validate(&raw(m, "v0", &[("v0", &["a"]), ("v1", &["a", "b"]), ("v2", &["b"])])).unwrap()
    }

    fn labels(t: &BrauerTree, es: impl IntoIterator<Item = EdgeId>) -> Vec<String> {
        es.into_iter().map(|e| t.label(e).to_string()).collect()
    }

    #[test]
    fn star_shape() {
        let t = BrauerTree::star(3, 1).unwrap();
        assert_eq!(labels(&t, t.roots().iter().copied()), ["1", "2", "3"]);
        assert!(t.vertices().filter(|&v| v != t.exceptional()).all(|v| t.distance(v) == 1));
        let t2 = BrauerTree::star(2, 2).unwrap();
        assert_eq!(t2.multiplicity(), 2);
        assert!(BrauerTree::star(0, 1).is_err());
    }

    #[test]
    fn validation_errors() {
        assert!(BrauerTree::validate(&raw(1, "v0", &[("v0", &["a"]), ("v1", &["a", "b"]), ("v2", &["b"])])).is_ok());
        let dangling = BrauerTree::validate(&raw(1, "v0", &[("v0", &["a"]), ("v1", &["a", "b"])])).unwrap_err();
        assert_eq!(dangling, Error::InvalidTree(vec![TreeViolation::DanglingEdge("b".into())]));
        assert!(dangling.to_string().contains("dangling edge"));
        let cyc = BrauerTree::validate(&raw(1, "v0", &[("v0", &["a", "b"]), ("v1", &["a", "b"])])).unwrap_err();
        assert!(cyc.to_string().contains("not acyclic"));
        let disc =
            BrauerTree::validate(&raw(0, "zz", &[("v0", &["a"]), ("v1", &["a"]), ("v2", &["b"]), ("v3", &["b"])]))
                .unwrap_err();
        let Error::InvalidTree(v) = disc else { panic!() };
        assert!(v.contains(&TreeViolation::ZeroMultiplicity));
        assert!(v.contains(&TreeViolation::MissingExceptional("zz".into())));
        assert!(v.contains(&TreeViolation::Disconnected));
    }

    #[test]
    fn distances_on_examples() {
        let t = p2(1);
        let v1 = t.vertex("v1").unwrap();
        let v2 = t.vertex("v2").unwrap();
        assert_eq!((t.distance(v1), t.distance(v2)), (1, 2));
        let l5 = BrauerTree::linear(5, 1).unwrap();
        let d: Vec<u32> = (1..=5).map(|i| l5.distance(l5.vertex(&format!("v{i}")).unwrap())).collect();
        assert_eq!(d, [1, 2, 3, 4, 5]);
    }

    #[test]
    fn green_walk_orders() {
        let t = p2(1);
        let walk = t.green_walk(t.edge("a").unwrap()).unwrap();
        assert_eq!(labels(&t, walk.iter().map(|s| s.arriving)), ["a", "b", "b", "a"]);
        let s = BrauerTree::star(3, 1).unwrap();
        let walk = s.green_walk(s.edge("1").unwrap()).unwrap();
        assert_eq!(labels(&s, walk.iter().map(|s| s.arriving)), ["1", "1", "2", "2", "3", "3"]);
        assert_eq!(t.green_walk(t.edge("b").unwrap()), Err(Error::NotAtExceptional("b".into())));
    }

    #[test]
    fn primary_and_coprimary() {
        let t = p2(1);
        let b = t.edge("b").unwrap();
        assert_eq!(t.primary_coprimary(t.vertex("v1").unwrap()).unwrap(), (b, b));
        assert_eq!(t.primary_coprimary(t.exceptional()), Err(Error::ExceptionalVertex));
        // Y vertex: rotation (k, o1, o2) with k entering.
        let y = BrauerTree::validate(&raw(
            1,
            "v0",
            &[("v0", &["k"]), ("u", &["k", "o1", "o2"]), ("x1", &["o1"]), ("x2", &["o2"])],
        ))
        .unwrap();
        let (p, c) = y.primary_coprimary(y.vertex("u").unwrap()).unwrap();
        assert_eq!((y.label(p), y.label(c)), ("o1", "o2"));
    }

    #[test]
    fn pointings_and_numberings_on_p2() {
        let t = p2(1);
        let (a, b) = (t.edge("a").unwrap(), t.edge("b").unwrap());
        let v1 = t.vertex("v1").unwrap();
        let rev = t.make_pointing(PointingKind::Reversed);
        assert_eq!(rev.sector(v1), Some((b, a)));
        let ord = t.make_pointing(PointingKind::Ordinary);
        assert_eq!(ord.sector(v1), Some((a, b)));
        let nr = t.numbering_from_pointing(&rev, a).unwrap();
        assert_eq!((nr.number(a), nr.number(b)), (2, 1));
        let no = t.numbering_from_pointing(&ord, a).unwrap();
        assert_eq!((no.number(a), no.number(b)), (1, 2));
        assert_eq!(nr.vertex_number(&t, t.exceptional()), 0);
        assert_eq!(nr.vertex_number(&t, v1), 2);
    }

    #[test]
    fn left_alternating_on_linear_tree() {
        let t = BrauerTree::linear(5, 1).unwrap();
        let p = t.make_pointing(PointingKind::LeftAlternating);
        let n = t.numbering_from_pointing(&p, t.default_initial_edge()).unwrap();
        let outward: Vec<u32> = (1..=5).map(|i| n.number(t.edge(&i.to_string()).unwrap())).collect();
        assert_eq!(outward, [5, 1, 4, 2, 3]);
    }

    #[test]
    fn star_numbering_is_counterclockwise() {
        let s = BrauerTree::star(4, 2).unwrap();
        for kind in [PointingKind::Ordinary, PointingKind::Reversed, PointingKind::LeftAlternating] {
            let n = s.numbering_from_pointing(&s.make_pointing(kind), s.edge("3").unwrap()).unwrap();
            assert_eq!(n.as_slice(), [3, 4, 1, 2]);
        }
    }

    #[test]
    fn cartan_examples() {
        let s = BrauerTree::star(3, 2).unwrap();
        let n = s.numbering_from_pointing(&s.make_pointing(PointingKind::Reversed), s.default_initial_edge()).unwrap();
        let c = s.cartan_matrix(&n);
        for (i, row) in c.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { 3 } else { 2 });
            }
        }
        let t = p2(1);
        let n = t.numbering_from_pointing(&t.make_pointing(PointingKind::Reversed), t.default_initial_edge()).unwrap();
        assert_eq!(t.cartan_matrix(&n), vec![vec![2, 1], vec![1, 2]]);
        let t = p2(2);
        let c = t.cartan_matrix(&n);
        // a = 2, b = 1
        assert_eq!((c[1][1], c[0][0], c[0][1]), (3, 2, 1));
    }

    #[test]
    fn invalid_pointing_rejected() {
        let t = p2(1);
        let (a, b) = (t.edge("a").unwrap(), t.edge("b").unwrap());
        let v1 = t.vertex("v1").unwrap();
        let mut sectors = vec![None; 3];
        sectors[v1.0] = Some((a, b));
        assert!(Pointing::new(&t, sectors.clone()).is_err());
        sectors[t.vertex("v2").unwrap().0] = Some((b, b));
        assert!(Pointing::new(&t, sectors).is_ok());
    }

    #[test]
    fn numbering_rejects_non_bijection() {
        assert!(EdgeNumbering::new(vec![1, 1]).is_err());
        assert!(EdgeNumbering::new(vec![0, 1]).is_err());
        assert!(EdgeNumbering::new(vec![2, 1]).is_ok());
    }

    #[test]
    fn cyclic_equality() {
        let t = |rot: &[&str]| {
            BrauerTree::validate(&raw(1, "c", &[("p", &["x"]), ("q", &["y"]), ("r", &["z"]), ("c", rot)])).unwrap()
        };
        let (a, b, c) = (t(&["x", "y", "z"]), t(&["y", "z", "x"]), t(&["x", "z", "y"]));
        assert_eq!(a, b);
        assert_ne!(a.to_raw(), b.to_raw());
        assert_ne!(a, c);
    }
}
