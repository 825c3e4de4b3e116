//! Star-to-tree tilting families and their transport along mutation logs.
//!
//! A family is indexed by row numbers `1..=e`; row `n` belongs to the edge
//! numbered `n`. Complexes live over the star algebra, whose projective `P_k`
//! is the star edge numbered `k`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Morphism, StarAlgebra};
use crate::complex::{cone, hom_dim, hom_space_graded, reduce, shift_range, ChainMap, ProjComplex};
use crate::error::{Error, Result};
use crate::mutation::{q_minus_summands, Direction, MutationLog};
use crate::tree::{BrauerTree, EdgeId, EdgeNumbering, Pointing, PointingKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Star,
    Pointing(Option<PointingKind>),
    /// Built from stalks by `steps` inverse mutations.
    Mutations {
        steps: usize,
    },
}

#[derive(Clone, Debug)]
pub struct TiltingFamily {
    alg: StarAlgebra,
    rows: Vec<ProjComplex>,
    pub provenance: Provenance,
}

impl TiltingFamily {
    pub fn new(alg: StarAlgebra, rows: Vec<ProjComplex>, provenance: Provenance) -> Result<Self> {
        if rows.len() != alg.e() as usize {
            return Err(Error::IndexMismatch(rows.len(), alg.e() as usize));
        }
        if rows.iter().any(|r| r.algebra() != &alg) {
            return Err(Error::NotComposable("rows over different algebras".into()));
        }
        Ok(TiltingFamily { alg, rows, provenance })
    }

    /// Stalks `P_1 .. P_e` in degree 0.
    pub fn stalks(alg: StarAlgebra) -> Self {
        let rows = (1..=alg.e()).map(|i| ProjComplex::stalk(alg, i, 0).expect("valid index")).collect();
        TiltingFamily { alg, rows, provenance: Provenance::Star }
    }

    pub fn algebra(&self) -> &StarAlgebra {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `n`, 1-based.
    pub fn row(&self, n: u32) -> &ProjComplex {
        &self.rows[n as usize - 1]
    }

    pub fn rows(&self) -> &[ProjComplex] {
        &self.rows
    }

    pub fn shifted(&self, n: i32) -> TiltingFamily {
        TiltingFamily {
            alg: self.alg,
            rows: self.rows.iter().map(|r| r.shift(n)).collect(),
            provenance: self.provenance.clone(),
        }
    }

    /// Row-wise [`ProjComplex::equal_normalized`].
    pub fn equal_normalized(&self, other: &TiltingFamily) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::IndexMismatch(self.len(), other.len()));
        }
        Ok(self.alg == other.alg && self.rows.iter().zip(&other.rows).all(|(a, b)| a.equal_normalized(b)))
    }

    /// Rows where the two families differ.
    pub fn differing_rows(&self, other: &TiltingFamily) -> Vec<u32> {
        (1..=self.len() as u32)
            .filter(|&n| other.len() < n as usize || !self.row(n).equal_normalized(other.row(n)))
            .collect()
    }

    pub fn is_partial_tilting(&self) -> bool {
        crate::complex::is_partial_tilting(&self.rows)
    }

    /// `[dim Hom_K(row i, row j)]`.
    pub fn hom_matrix(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|x| self.rows.iter().map(|y| hom_dim(x, y, 0) as u32).collect()).collect()
    }

    /// True when every entry is concentrated in degrees `lo..=hi`.
    pub fn supported_in(&self, lo: i32, hi: i32) -> bool {
        self.rows.iter().all(|r| r.terms().keys().all(|&k| lo <= k && k <= hi))
    }

    /// `n_i` for every projective, if each occurs in exactly one degree.
    pub fn unique_degrees(&self) -> Option<Vec<i32>> {
        let mut deg: Vec<Option<i32>> = vec![None; self.len()];
        for r in &self.rows {
            for (&k, t) in r.terms() {
                for &p in t {
                    match deg[p as usize - 1] {
                        Some(d) if d != k => return None,
                        _ => deg[p as usize - 1] = Some(k),
                    }
                }
            }
        }
        deg.into_iter().collect()
    }
}

/// Bijection of `{1..n}`, stored as images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x < 1 || x as usize > n || core::mem::replace(&mut seen[x as usize - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// Nontrivial cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 1..=self.len() as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start as usize - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize - 1] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Composes cycles over `1..=n`; each cycle maps an element to the next.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x < 1 || x as usize > n || core::mem::replace(&mut touched[x as usize - 1], true) {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?} on {n} points")));
                }
                images[x as usize - 1] = c[(k + 1) % c.len()];
            }
        }
        Permutation::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| format!("{x}")).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Degree `n_i` of every edge and its row complex. Edges at the exceptional
/// vertex are stalks in degree 0. A child `c` of a vertex entered along `k`
/// gives `P_c -> P_k` one degree below `n_k` when `c` comes before the point
/// in counterclockwise order from `k`, and `P_k -> P_c` one degree above
/// otherwise.
pub fn star_to_tree_family(tree: &BrauerTree, pointing: &Pointing, numbering: &EdgeNumbering) -> Result<TiltingFamily> {
    let e = tree.edge_count();
    if numbering.len() != e {
        return Err(Error::InvalidNumbering(format!("{} numbers for {e} edges", numbering.len())));
    }
    pointing.check(tree)?;
    let alg = StarAlgebra::new(e as u32, tree.multiplicity())?;
    let num = |x: EdgeId| numbering.number(x);
    let mut degree: Vec<Option<i32>> = vec![None; e];
    let mut rows: Vec<Option<ProjComplex>> = vec![None; e];
    let mut queue = VecDeque::new();
    for &r in tree.roots() {
        degree[r.0] = Some(0);
        rows[num(r) as usize - 1] = Some(ProjComplex::stalk(alg, num(r), 0)?);
        queue.push_back(r);
    }
    while let Some(k) = queue.pop_front() {
        let u = tree.far_vertex(k);
        let nk = degree[k.0].expect("assigned");
        let (a, _) = pointing.sector(u).expect("nonexceptional vertex has a point");
        // children in counterclockwise order from k; those up to and
        // including the left edge of the point precede it
        let mut before_point = a != k;
        let mut c = tree.succ(u, k);
        while c != k {
            let (deg, cx) = if before_point {
                (nk - 1, ProjComplex::two_term(alg, nk - 1, num(c), num(k), Morphism::h(num(c), num(k)))?)
            } else {
                (nk + 1, ProjComplex::two_term(alg, nk, num(k), num(c), Morphism::h(num(k), num(c)))?)
            };
            if c == a {
                before_point = false;
            }
            degree[c.0] = Some(deg);
            rows[num(c) as usize - 1] = Some(cx);
            queue.push_back(c);
            c = tree.succ(u, c);
        }
    }
    let rows = rows.into_iter().map(|r| r.expect("every edge reached")).collect();
    TiltingFamily::new(alg, rows, Provenance::Pointing(None))
}

/// The family of a named pointing, numbered from the same pointing.
pub fn pointing_family(
    tree: &BrauerTree,
    kind: PointingKind,
    initial: EdgeId,
) -> Result<(TiltingFamily, EdgeNumbering)> {
    let p = tree.make_pointing(kind);
    let n = tree.numbering_from_pointing(&p, initial)?;
    let mut fam = star_to_tree_family(tree, &p, &n)?;
    fam.provenance = Provenance::Pointing(Some(kind));
    Ok((fam, n))
}

/// Lowest internal-degree class of `Hom_K(x, y)`, skipping the identity
/// piece when `x` and `y` coincide. The piece must be one-dimensional.
pub fn connecting_map(x: &ProjComplex, y: &ProjComplex) -> Result<ChainMap> {
    let same = x == y;
    let pieces = hom_space_graded(x, y, 0)?;
    let (_, piece) = pieces.into_iter().find(|(deg, _)| !(same && *deg == 0)).ok_or(Error::ZeroHom)?;
    if piece.dim() != 1 {
        return Err(Error::AmbiguousConnectingMap(piece.dim()));
    }
    Ok(piece.basis[0].normalized())
}

fn check_row_tilting(rows: &[ProjComplex], i: usize) -> Result<()> {
    let x = &rows[i];
    for (j, y) in rows.iter().enumerate() {
        for (a, b) in [(x, y), (y, x)] {
            let Some((lo, hi)) = shift_range(a, b) else { continue };
            for n in lo..=hi {
                if n != 0 && hom_dim(a, b, n) != 0 {
                    return Err(Error::NotTilting(format!("rows {} and {} have maps at shift {n}", i + 1, j + 1)));
                }
            }
        }
    }
    Ok(())
}

fn replace_row(family: &TiltingFamily, center: u32, new_row: ProjComplex) -> Result<TiltingFamily> {
    let mut rows = family.rows.clone();
    rows[center as usize - 1] = new_row;
    check_row_tilting(&rows, center as usize - 1)?;
    let provenance = match family.provenance {
        Provenance::Mutations { steps } => Provenance::Mutations { steps: steps + 1 },
        _ => Provenance::Mutations { steps: 1 },
    };
    Ok(TiltingFamily { alg: family.alg, rows, provenance })
}

fn check_rows(family: &TiltingFamily, rows: &[u32]) -> Result<()> {
    match rows.iter().find(|&&r| r < 1 || r as usize > family.len()) {
        Some(&r) => Err(Error::IndexMismatch(r as usize, family.len())),
        None => Ok(()),
    }
}

/// Replaces row `center` by the reduced cone of the connecting map into the
/// sum of the rows `q`.
pub fn apply_inverse_step(family: &TiltingFamily, center: u32, q: &[u32]) -> Result<TiltingFamily> {
    check_rows(family, &[center])?;
    check_rows(family, q)?;
    let x = family.row(center);
    let maps: Vec<ChainMap> = q.iter().map(|&k| connecting_map(x, family.row(k))).collect::<Result<_>>()?;
    let refs: Vec<&ChainMap> = maps.iter().collect();
    let f = ChainMap::into_sum(x, &refs);
    let (reduced, _) = reduce(&cone(&f)?)?;
    replace_row(family, center, reduced)
}

/// Inverse of [`apply_inverse_step`]: the reduced cone of the connecting map
/// out of the sum of the rows `q`, shifted down by one.
pub fn undo_inverse_step(family: &TiltingFamily, center: u32, q: &[u32]) -> Result<TiltingFamily> {
    check_rows(family, &[center])?;
    check_rows(family, q)?;
    let y = family.row(center);
    let maps: Vec<ChainMap> = q.iter().map(|&k| connecting_map(family.row(k), y)).collect::<Result<_>>()?;
    let refs: Vec<&ChainMap> = maps.iter().collect();
    let f = ChainMap::from_sum(y, &refs);
    let (reduced, _) = reduce(&cone(&f)?.shift(-1))?;
    replace_row(family, center, reduced)
}

/// Starts from the stalks of the final star and undoes the logged `mu+`
/// steps in reverse order. Rows follow the natural numbering.
pub fn compose_inverse_mutations(log: &MutationLog) -> Result<TiltingFamily> {
    let numbering =
        log.natural_numbering().ok_or_else(|| Error::InvalidNumbering("log does not end at the star".into()))?;
    let tree = &log.original;
    let alg = StarAlgebra::new(tree.edge_count() as u32, tree.multiplicity())?;
    let mut family = TiltingFamily::stalks(alg);
    for (k, step) in log.steps.iter().enumerate().rev() {
        if step.direction != Direction::Plus {
            return Err(Error::InconsistentLog(k));
        }
        let q: Vec<u32> =
            q_minus_summands(&step.after, step.center)?.into_iter().map(|e| numbering.number(e)).collect();
        family = apply_inverse_step(&family, numbering.number(step.center), &q)?;
    }
    family.provenance = Provenance::Mutations { steps: log.len() };
    Ok(family)
}

/// `sigma` with `a.row(i) = b.row(sigma(i))` up to normalization.
pub fn sigma_of(a: &TiltingFamily, b: &TiltingFamily) -> Result<Permutation> {
    if a.len() != b.len() {
        return Err(Error::IndexMismatch(a.len(), b.len()));
    }
    let canon: Vec<ProjComplex> = b.rows.iter().map(ProjComplex::normalized).collect();
    let mut used = vec![false; b.len()];
    let mut images = Vec::with_capacity(a.len());
    for r in &a.rows {
        let n = r.normalized();
        let j = (0..canon.len()).find(|&j| !used[j] && canon[j] == n).ok_or(Error::NoRowMatching)?;
        used[j] = true;
        images.push(j as u32 + 1);
    }
    Permutation::new(images)
}

/// The permutation predicted from the rotations: at every vertex at even
/// distance at least two, the numbers of its edges cycle in counterclockwise
/// order starting from the entering edge.
pub fn expected_sigma(tree: &BrauerTree, numbering: &EdgeNumbering) -> Result<Permutation> {
    let mut cycles = Vec::new();
    for v in tree.vertices() {
        let d = tree.distance(v);
        if d < 2 || !d.is_multiple_of(2) || tree.degree(v) < 2 {
            continue;
        }
        let k = tree.entering_edge(v).expect("nonexceptional");
        let mut cyc = vec![numbering.number(k)];
        let mut c = tree.succ(v, k);
        while c != k {
            cyc.push(numbering.number(c));
            c = tree.succ(v, c);
        }
        cycles.push(cyc);
    }
    Permutation::from_cycles(tree.edge_count(), &cycles)
}

pub fn check_sigma_cycles(tree: &BrauerTree, numbering: &EdgeNumbering, sigma: &Permutation) -> bool {
    expected_sigma(tree, numbering).is_ok_and(|s| s == *sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Elementary;
    use crate::mutation::run_algorithm_aihara;
    use crate::tree::RawTree;

    fn p2(m: i64) -> BrauerTree {
        BrauerTree::validate(&RawTree {
            multiplicity: m,
            exceptional: "v0".into(),
            rotations: vec![
                ("v0".into(), vec!["a".into()]),
                ("v1".into(), vec!["a".into(), "b".into()]),
                ("v2".into(), vec!["b".into()]),
            ],
        })
        .unwrap()
    }

    #[test]
    fn permutation_cycles_and_display() {
        let s = Permutation::new(vec![4, 3, 2, 1, 5]).unwrap();
        assert_eq!(s.cycles(), [vec![1, 4], vec![2, 3]]);
        assert_eq!(format!("{s}"), "(1 4)(2 3)");
        assert_eq!(Permutation::from_cycles(5, &s.cycles()).unwrap(), s);
        assert_eq!(format!("{}", Permutation::identity(3)), "()");
        assert!(matches!(Permutation::new(vec![1, 1]), Err(Error::InvalidPermutation(_))));
    }

    #[test]
    fn p2_reversed_family() {
        let t = p2(1);
        let (fam, n) = pointing_family(&t, PointingKind::Reversed, t.default_initial_edge()).unwrap();
        assert_eq!(n.as_slice(), [2, 1]);
        let alg = *fam.algebra();
        assert_eq!(fam.row(2), &ProjComplex::stalk(alg, 2, 0).unwrap());
        assert!(fam.row(1).equal_normalized(&ProjComplex::elementary(alg, Elementary::T(1, 2), 1).unwrap()));
        assert!(fam.is_partial_tilting());
        assert_eq!(fam.hom_matrix(), t.cartan_matrix(&n));
        assert_eq!(fam.unique_degrees(), Some(vec![-1, 0]));
    }

    #[test]
    fn star_family_is_stalks() {
        let s = BrauerTree::star(3, 2).unwrap();
        let (fam, _) = pointing_family(&s, PointingKind::Reversed, s.default_initial_edge()).unwrap();
        assert!(fam.equal_normalized(&TiltingFamily::stalks(*fam.algebra())).unwrap());
    }

    #[test]
    fn connecting_maps_follow_minimal_degree() {
        let alg = StarAlgebra::new(4, 2).unwrap();
        let pw = ProjComplex::stalk(alg, 2, 0).unwrap();
        let pu = ProjComplex::stalk(alg, 3, 0).unwrap();
        let f = connecting_map(&pw, &pu).unwrap();
        assert_eq!(f.component(0).get(0, 0), &Morphism::h(2, 3));
        let t = ProjComplex::two_term(alg, -1, 1, 2, Morphism::h(1, 2)).unwrap();
        let g = connecting_map(&pw, &t).unwrap();
        assert_eq!(g.component(0).get(0, 0), &Morphism::identity(2));
        let eps = connecting_map(&pw, &pw).unwrap();
        assert_eq!(eps.component(0).get(0, 0), &Morphism::scaled(alg.basis_map(2, 2, 1).unwrap(), crate::Scalar::ONE));
    }

    #[test]
    fn base_case_and_round_trip() {
        let alg = StarAlgebra::new(2, 1).unwrap();
        let stalks = TiltingFamily::stalks(alg);
        let next = apply_inverse_step(&stalks, 1, &[2]).unwrap();
        assert!(next.row(1).equal_normalized(&ProjComplex::elementary(alg, Elementary::T(1, 2), 1).unwrap()));
        let back = undo_inverse_step(&next, 1, &[2]).unwrap();
        assert!(back.equal_normalized(&stalks).unwrap());
    }

    #[test]
    fn undo_on_stalks_is_the_other_mutation() {
        let alg = StarAlgebra::new(2, 1).unwrap();
        let fam = undo_inverse_step(&TiltingFamily::stalks(alg), 1, &[2]).unwrap();
        let expected = ProjComplex::two_term(alg, 0, 2, 1, Morphism::h(2, 1)).unwrap();
        assert!(fam.row(1).equal_normalized(&expected));
        assert!(fam.is_partial_tilting());
    }

    #[test]
    fn linear_five_sigma() {
        let t = BrauerTree::linear(5, 1).unwrap();
        let log = run_algorithm_aihara(&t, t.default_initial_edge()).unwrap();
        let f = compose_inverse_mutations(&log).unwrap();
        let (h, la) = pointing_family(&t, PointingKind::LeftAlternating, t.default_initial_edge()).unwrap();
        assert_eq!(la.as_slice(), [5, 1, 4, 2, 3]);
        let sigma = sigma_of(&f, &h).unwrap();
        assert_eq!(format!("{sigma}"), "(1 4)(2 3)");
        assert!(check_sigma_cycles(&t, log.natural_numbering().unwrap(), &sigma));
        assert!(f.supported_in(-1, 0));
    }

    #[test]
    fn sigma_of_size_mismatch() {
        let a = TiltingFamily::stalks(StarAlgebra::new(2, 1).unwrap());
        let b = TiltingFamily::stalks(StarAlgebra::new(3, 1).unwrap());
        assert_eq!(sigma_of(&a, &b), Err(Error::IndexMismatch(2, 3)));
    }
}
