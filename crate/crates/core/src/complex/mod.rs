//! Bounded complexes of star projectives.
//!
//! Conventions, fixed crate-wide:
//!
//! * cochain complexes, `d^n : C^n -> C^{n+1}`;
//! * a matrix entry `(r, c)` is the component from source summand `c` to
//!   target summand `r`;
//! * `C[n]^k = C^{n+k}` with differential `(-1)^n d`;
//! * `Cone(f)^n = C^{n+1} (+) D^n`, `d(c, b) = (-d_C c, d_D b + f c)`, with
//!   the `C` summands listed first.

mod hom;
mod reduce;
mod tilting;

pub use hom::{hom_dim, hom_space, hom_space_graded, Grading, HomSpace};
pub use reduce::{reduce, ReductionCertificate};
pub use tilting::{euler_matrix, first_violation, generates_heuristically, is_partial_tilting, shift_range};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Morphism, StarAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense matrix of morphisms between direct sums of projectives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MorphismMatrix {
    rows: Vec<u32>,
    cols: Vec<u32>,
    entries: Vec<Morphism>,
}

impl MorphismMatrix {
    pub fn zero(rows: &[u32], cols: &[u32]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(Morphism::zero(c, r));
            }
        }
        MorphismMatrix { rows: rows.to_vec(), cols: cols.to_vec(), entries }
    }

    pub fn identity(summands: &[u32]) -> Self {
        let mut m = MorphismMatrix::zero(summands, summands);
        for (i, &p) in summands.iter().enumerate() {
            m.set(i, i, Morphism::identity(p));
        }
        m
    }

    /// Builds a matrix from row-major entries; each entry must map
    /// `P_cols[c] -> P_rows[r]`.
    pub fn from_entries(rows: &[u32], cols: &[u32], entries: Vec<Morphism>) -> Result<Self> {
        if entries.len() != rows.len() * cols.len() {
            return Err(Error::NotComposable(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows.len(),
                cols.len()
            )));
        }
        for (n, m) in entries.iter().enumerate() {
            let (r, c) = (n / cols.len(), n % cols.len());
            if m.source() != cols[c] || m.target() != rows[r] {
                return Err(Error::NotComposable(format!(
                    "entry ({r},{c}) maps P_{} -> P_{}, expected P_{} -> P_{}",
                    m.source(),
                    m.target(),
                    cols[c],
                    rows[r]
                )));
            }
        }
        Ok(MorphismMatrix { rows: rows.to_vec(), cols: cols.to_vec(), entries })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Morphism {
        &self.entries[r * self.cols.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, m: Morphism) {
        assert_eq!((m.source(), m.target()), (self.cols[c], self.rows[r]), "entry shape mismatch");
        let n = self.cols.len();
        self.entries[r * n + c] = m;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Morphism::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Morphism)> {
        let n = self.cols.len().max(1);
        self.entries.iter().enumerate().map(move |(i, m)| (i / n, i % n, m))
    }

    /// `self o rhs`.
    pub fn compose(&self, alg: &StarAlgebra, rhs: &MorphismMatrix) -> MorphismMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes are not composable");
        let mut out = MorphismMatrix::zero(&self.rows, &rhs.cols);
        for r in 0..self.rows.len() {
            for c in 0..rhs.cols.len() {
                let mut acc = Morphism::zero(rhs.cols[c], self.rows[r]);
                for k in 0..self.cols.len() {
                    let (a, b) = (self.get(r, k), rhs.get(k, c));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&alg.compose_unchecked(a, b));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &MorphismMatrix) -> MorphismMatrix {
        assert_eq!((&self.rows, &self.cols), (&other.rows, &other.cols), "matrix shapes differ");
        MorphismMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &MorphismMatrix) -> MorphismMatrix {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Scalar) -> MorphismMatrix {
        MorphismMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> MorphismMatrix {
        self.scale(-Scalar::ONE)
    }

    /// Submatrix on the given row and column positions.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> MorphismMatrix {
        let r: Vec<u32> = rows.iter().map(|&i| self.rows[i]).collect();
        let c: Vec<u32> = cols.iter().map(|&i| self.cols[i]).collect();
        let mut out = MorphismMatrix::zero(&r, &c);
        for (i, &ri) in rows.iter().enumerate() {
            for (j, &cj) in cols.iter().enumerate() {
                out.set(i, j, self.get(ri, cj).clone());
            }
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &MorphismMatrix, b: &MorphismMatrix, c: &MorphismMatrix, d: &MorphismMatrix) -> MorphismMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let rows: Vec<u32> = a.rows.iter().chain(&c.rows).copied().collect();
        let cols: Vec<u32> = a.cols.iter().chain(&b.cols).copied().collect();
        let mut out = MorphismMatrix::zero(&rows, &cols);
        let (ra, ca) = (a.rows.len(), a.cols.len());
        for (r, row_block) in [(0, [a, b]), (ra, [c, d])] {
            for (c0, m) in [(0, row_block[0]), (ca, row_block[1])] {
                for (i, j, x) in m.entries() {
                    if !x.is_zero() {
                        out.set(r + i, c0 + j, x.clone());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for MorphismMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} <- {:?} [", self.rows, self.cols)?;
        for (r, c, m) in self.entries() {
            if !m.is_zero() {
                write!(f, " ({r},{c}):{m}")?;
            }
        }
        write!(f, " ]")
    }
}

/// Bounded complex of projectives over a star algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjComplex {
    alg: StarAlgebra,
    terms: BTreeMap<i32, Vec<u32>>,
    diffs: BTreeMap<i32, MorphismMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// Stalk `P_i` in degree 0.
    S(u32),
    /// `P_i -> P_j` in degrees 0, 1 with differential `h_ij`.
    T(u32, u32),
}

impl ProjComplex {
    /// Validates shapes and `d o d = 0`. Zero differentials and empty terms
    /// are dropped.
    pub fn new(alg: StarAlgebra, terms: BTreeMap<i32, Vec<u32>>, diffs: BTreeMap<i32, MorphismMatrix>) -> Result<Self> {
        let terms: BTreeMap<i32, Vec<u32>> = terms.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        for (&n, p) in &terms {
            if let Some(&bad) = p.iter().find(|&&i| i < 1 || i > alg.e()) {
                return Err(Error::InvalidBasisMap(format!("P_{bad} in degree {n} outside 1..={}", alg.e())));
            }
        }
        let mut kept = BTreeMap::new();
        for (n, d) in diffs {
            let empty: &[u32] = &[];
            let src = terms.get(&n).map_or(empty, Vec::as_slice);
            let tgt = terms.get(&(n + 1)).map_or(empty, Vec::as_slice);
            if d.cols != src || d.rows != tgt {
                return Err(Error::NotComposable(format!("differential in degree {n} has the wrong shape")));
            }
            if !d.is_zero() {
                kept.insert(n, d);
            }
        }
        let c = ProjComplex { alg, terms, diffs: kept };
        c.check_square_zero()?;
        Ok(c)
    }

    pub(crate) fn from_parts_unchecked(
        alg: StarAlgebra,
        terms: BTreeMap<i32, Vec<u32>>,
        diffs: BTreeMap<i32, MorphismMatrix>,
    ) -> Self {
        ProjComplex {
            alg,
            terms: terms.into_iter().filter(|(_, v)| !v.is_empty()).collect(),
            diffs: diffs.into_iter().filter(|(_, d)| !d.is_zero()).collect(),
        }
    }

    pub fn zero(alg: StarAlgebra) -> Self {
        ProjComplex { alg, terms: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    pub fn stalk(alg: StarAlgebra, i: u32, degree: i32) -> Result<Self> {
        ProjComplex::new(alg, BTreeMap::from([(degree, vec![i])]), BTreeMap::new())
    }

    /// `P_i` in `degree`, `P_j` in `degree + 1`, differential `d`.
    pub fn two_term(alg: StarAlgebra, degree: i32, i: u32, j: u32, d: Morphism) -> Result<Self> {
        let m = MorphismMatrix::from_entries(&[j], &[i], vec![d])?;
        ProjComplex::new(alg, BTreeMap::from([(degree, vec![i]), (degree + 1, vec![j])]), BTreeMap::from([(degree, m)]))
    }

    /// `S_i[n]` or `T_ij[n]`.
    pub fn elementary(alg: StarAlgebra, kind: Elementary, shift: i32) -> Result<Self> {
        let base = match kind {
            Elementary::S(i) => ProjComplex::stalk(alg, i, 0)?,
            Elementary::T(i, j) if i == j => return Err(Error::DegenerateElementary),
            Elementary::T(i, j) => ProjComplex::two_term(alg, 0, i, j, Morphism::h(i, j))?,
        };
        Ok(base.shift(shift))
    }

    pub fn algebra(&self) -> &StarAlgebra {
        &self.alg
    }

    pub fn term(&self, n: i32) -> &[u32] {
        self.terms.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn terms(&self) -> &BTreeMap<i32, Vec<u32>> {
        &self.terms
    }

    pub fn diffs(&self) -> &BTreeMap<i32, MorphismMatrix> {
        &self.diffs
    }

    pub fn diff(&self, n: i32) -> MorphismMatrix {
        match self.diffs.get(&n) {
            Some(d) => d.clone(),
            None => MorphismMatrix::zero(self.term(n + 1), self.term(n)),
        }
    }

    pub fn diff_ref(&self, n: i32) -> Option<&MorphismMatrix> {
        self.diffs.get(&n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn summand_count(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    /// Degrees in which `P_i` occurs.
    pub fn degrees_of(&self, i: u32) -> Vec<i32> {
        self.terms.iter().filter(|(_, v)| v.contains(&i)).map(|(&n, _)| n).collect()
    }

    pub fn check_square_zero(&self) -> Result<()> {
        for (&n, d) in &self.diffs {
            if let Some(next) = self.diffs.get(&(n + 1)) {
                if !next.compose(&self.alg, d).is_zero() {
                    return Err(Error::NotAComplex(n));
                }
            }
        }
        Ok(())
    }

    /// `C[n]`: `C[n]^k = C^{n+k}`, differential multiplied by `(-1)^n`.
    pub fn shift(&self, n: i32) -> ProjComplex {
        let sign = if n % 2 == 0 { Scalar::ONE } else { -Scalar::ONE };
        ProjComplex {
            alg: self.alg,
            terms: self.terms.iter().map(|(&k, v)| (k - n, v.clone())).collect(),
            diffs: self.diffs.iter().map(|(&k, d)| (k - n, d.scale(sign))).collect(),
        }
    }

    /// Direct sum, components listed in order within each degree.
    pub fn direct_sum(alg: StarAlgebra, parts: &[&ProjComplex]) -> ProjComplex {
        let mut degrees: Vec<i32> = parts.iter().flat_map(|p| p.terms.keys().copied()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut terms = BTreeMap::new();
        for &n in &degrees {
            let t: Vec<u32> = parts.iter().flat_map(|p| p.term(n).iter().copied()).collect();
            terms.insert(n, t);
        }
        let mut diffs = BTreeMap::new();
        for &n in &degrees {
            let empty = Vec::new();
            let rows = terms.get(&(n + 1)).unwrap_or(&empty);
            let cols = &terms[&n];
            let mut d = MorphismMatrix::zero(rows, cols);
            let (mut r0, mut c0) = (0, 0);
            for p in parts {
                if let Some(pd) = p.diffs.get(&n) {
                    for (i, j, x) in pd.entries() {
                        if !x.is_zero() {
                            d.set(r0 + i, c0 + j, x.clone());
                        }
                    }
                }
                r0 += p.term(n + 1).len();
                c0 += p.term(n).len();
            }
            diffs.insert(n, d);
        }
        ProjComplex::from_parts_unchecked(alg, terms, diffs)
    }

    /// Canonical form: summands sorted within each degree and every
    /// differential entry rescaled to leading coefficient one.
    pub fn normalized(&self) -> ProjComplex {
        let mut perms: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let mut terms = BTreeMap::new();
        for (&n, t) in &self.terms {
            let mut idx: Vec<usize> = (0..t.len()).collect();
            idx.sort_by_key(|&i| t[i]);
            terms.insert(n, idx.iter().map(|&i| t[i]).collect::<Vec<_>>());
            perms.insert(n, idx);
        }
        let mut diffs = BTreeMap::new();
        for (&n, d) in &self.diffs {
            let mut s = d.select(&perms[&(n + 1)], &perms[&n]);
            for e in s.entries.iter_mut() {
                *e = e.normalized();
            }
            diffs.insert(n, s);
        }
        ProjComplex { alg: self.alg, terms, diffs }
    }

    /// Equality of supports and differentials after [`normalized`](Self::normalized).
    pub fn equal_normalized(&self, other: &ProjComplex) -> bool {
        self.alg == other.alg && self.normalized() == other.normalized()
    }

    /// Row-style rendering, e.g. `0 → P_1 → P_4 → 0`.
    pub fn render_row(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::from("0");
        for t in self.terms.values() {
            s.push_str(" → ");
            let parts: Vec<String> = t.iter().map(|i| format!("P_{i}")).collect();
            s.push_str(&parts.join(" ⊕ "));
        }
        s.push_str(" → 0");
        s
    }
}

impl fmt::Debug for ProjComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(e={}, m={}", self.alg.e(), self.alg.m())?;
        for (n, t) in &self.terms {
            write!(f, " | {n}: {t:?}")?;
        }
        for (n, d) in &self.diffs {
            write!(f, " | d{n}: {d:?}")?;
        }
        write!(f, ")")
    }
}

/// Degreewise maps `f^k : C^k -> D^{k+shift}` commuting with the
/// differentials of `C` and `D[shift]`: `(-1)^shift d_D f^k = f^{k+1} d_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ProjComplex,
    target: ProjComplex,
    shift: i32,
    maps: BTreeMap<i32, MorphismMatrix>,
}

impl ChainMap {
    pub fn new(
        source: ProjComplex,
        target: ProjComplex,
        shift: i32,
        maps: BTreeMap<i32, MorphismMatrix>,
    ) -> Result<Self> {
        for (&k, m) in &maps {
            if m.cols() != source.term(k) || m.rows() != target.term(k + shift) {
                return Err(Error::NotComposable(format!("chain map component in degree {k} has the wrong shape")));
            }
        }
        let f = ChainMap { source, target, shift, maps: maps.into_iter().filter(|(_, m)| !m.is_zero()).collect() };
        f.check_commutes()?;
        Ok(f)
    }

    pub(crate) fn from_parts_unchecked(
        source: ProjComplex,
        target: ProjComplex,
        shift: i32,
        maps: BTreeMap<i32, MorphismMatrix>,
    ) -> Self {
        ChainMap { source, target, shift, maps: maps.into_iter().filter(|(_, m)| !m.is_zero()).collect() }
    }

    pub fn identity(c: &ProjComplex) -> ChainMap {
        let maps = c.terms.iter().map(|(&k, t)| (k, MorphismMatrix::identity(t))).collect();
        ChainMap { source: c.clone(), target: c.clone(), shift: 0, maps }
    }

    pub fn zero(source: ProjComplex, target: ProjComplex, shift: i32) -> ChainMap {
        ChainMap { source, target, shift, maps: BTreeMap::new() }
    }

    pub fn source(&self) -> &ProjComplex {
        &self.source
    }

    pub fn target(&self) -> &ProjComplex {
        &self.target
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn components(&self) -> &BTreeMap<i32, MorphismMatrix> {
        &self.maps
    }

    pub fn component(&self, k: i32) -> MorphismMatrix {
        match self.maps.get(&k) {
            Some(m) => m.clone(),
            None => MorphismMatrix::zero(self.target.term(k + self.shift), self.source.term(k)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn check_commutes(&self) -> Result<()> {
        let alg = *self.source.algebra();
        let sign = if self.shift % 2 == 0 { Scalar::ONE } else { -Scalar::ONE };
        let mut degrees: Vec<i32> = self.source.terms().keys().copied().collect();
        degrees.extend(self.source.terms().keys().map(|k| k - 1));
        degrees.sort_unstable();
        degrees.dedup();
        for k in degrees {
            let lhs = self.target.diff(k + self.shift).compose(&alg, &self.component(k)).scale(sign);
            let rhs = self.component(k + 1).compose(&alg, &self.source.diff(k));
            if lhs != rhs && !lhs.sub(&rhs).is_zero() {
                return Err(Error::NotAChainMap(k));
            }
        }
        Ok(())
    }

    /// `self o other` (apply `other` first). Both must have shift 0.
    pub fn compose(&self, other: &ChainMap) -> ChainMap {
        assert!(self.shift == 0 && other.shift == 0, "composition of shifted chain maps");
        let alg = *self.source.algebra();
        let maps =
            other.source.terms().keys().map(|&k| (k, self.component(k).compose(&alg, &other.component(k)))).collect();
        ChainMap::from_parts_unchecked(other.source.clone(), self.target.clone(), 0, maps)
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.shift, other.shift);
        let mut keys: Vec<i32> = self.maps.keys().chain(other.maps.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        let maps = keys.into_iter().map(|k| (k, self.component(k).add(&other.component(k)))).collect();
        ChainMap::from_parts_unchecked(self.source.clone(), self.target.clone(), self.shift, maps)
    }

    pub fn scale(&self, c: Scalar) -> ChainMap {
        let maps = self.maps.iter().map(|(&k, m)| (k, m.scale(c))).collect();
        ChainMap::from_parts_unchecked(self.source.clone(), self.target.clone(), self.shift, maps)
    }

    /// Rescales so that the first nonzero coefficient is one.
    pub fn normalized(&self) -> ChainMap {
        let lead = self
            .maps
            .values()
            .flat_map(|m| m.entries.iter())
            .find(|x| !x.is_zero())
            .and_then(|x| x.terms().next())
            .map(|(_, c)| c);
        match lead {
            Some(c) => self.scale(c.recip()),
            None => self.clone(),
        }
    }

    /// Chain map `A -> B (+) C` from maps into the components.
    pub fn into_sum(source: &ProjComplex, targets: &[&ChainMap]) -> ChainMap {
        let alg = *source.algebra();
        let tgt_parts: Vec<&ProjComplex> = targets.iter().map(|f| f.target()).collect();
        let target = ProjComplex::direct_sum(alg, &tgt_parts);
        let mut maps = BTreeMap::new();
        for &k in source.terms().keys() {
            let mut m = MorphismMatrix::zero(target.term(k), source.term(k));
            let mut r0 = 0;
            for f in targets {
                assert_eq!(f.shift, 0);
                let part = f.component(k);
                for (i, j, x) in part.entries() {
                    if !x.is_zero() {
                        m.set(r0 + i, j, x.clone());
                    }
                }
                r0 += f.target().term(k).len();
            }
            maps.insert(k, m);
        }
        ChainMap::from_parts_unchecked(source.clone(), target, 0, maps)
    }

    /// Chain map `B (+) C -> A` from maps out of the components.
    pub fn from_sum(target: &ProjComplex, sources: &[&ChainMap]) -> ChainMap {
        let alg = *target.algebra();
        let src_parts: Vec<&ProjComplex> = sources.iter().map(|f| f.source()).collect();
        let source = ProjComplex::direct_sum(alg, &src_parts);
        let mut maps = BTreeMap::new();
        for &k in source.terms().keys() {
            let mut m = MorphismMatrix::zero(target.term(k), source.term(k));
            let mut c0 = 0;
            for f in sources {
                assert_eq!(f.shift, 0);
                let part = f.component(k);
                for (i, j, x) in part.entries() {
                    if !x.is_zero() {
                        m.set(i, c0 + j, x.clone());
                    }
                }
                c0 += f.source().term(k).len();
            }
            maps.insert(k, m);
        }
        ChainMap::from_parts_unchecked(source, target.clone(), 0, maps)
    }
}

/// Mapping cone of a shift-0 chain map.
pub fn cone(f: &ChainMap) -> Result<ProjComplex> {
    if f.shift != 0 {
        return Err(Error::NotAChainMap(0));
    }
    f.check_commutes()?;
    let (c, d) = (&f.source, &f.target);
    let alg = *c.algebra();
    let mut degrees: Vec<i32> = c.terms().keys().map(|k| k - 1).chain(d.terms().keys().copied()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let term = |n: i32| -> Vec<u32> { c.term(n + 1).iter().chain(d.term(n)).copied().collect() };
    let terms: BTreeMap<i32, Vec<u32>> = degrees.iter().map(|&n| (n, term(n))).collect();
    let mut diffs = BTreeMap::new();
    for &n in &degrees {
        let dc = c.diff(n + 1).neg();
        let zero = MorphismMatrix::zero(c.term(n + 2), d.term(n));
        let fc = f.component(n + 1);
        let dd = d.diff(n);
        diffs.insert(n, MorphismMatrix::block(&dc, &zero, &fc, &dd));
    }
    let out = ProjComplex::from_parts_unchecked(alg, terms, diffs);
    out.check_square_zero()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(e: u32, m: u32) -> StarAlgebra {
        StarAlgebra::new(e, m).unwrap()
    }

    #[test]
    fn elementary_complexes() {
        let a = alg(3, 1);
        let s = ProjComplex::elementary(a, Elementary::S(1), 0).unwrap();
        assert_eq!(s.term(0), [1]);
        assert!(s.diffs().is_empty());
        let t = ProjComplex::elementary(a, Elementary::T(1, 2), 0).unwrap();
        assert_eq!((t.term(0), t.term(1)), (&[1][..], &[2][..]));
        assert_eq!(t.diff(0).get(0, 0), &Morphism::h(1, 2));
        let t1 = ProjComplex::elementary(a, Elementary::T(1, 2), 1).unwrap();
        assert_eq!((t1.term(-1), t1.term(0)), (&[1][..], &[2][..]));
        assert_eq!(t1.diff(-1).get(0, 0), &Morphism::h(1, 2).neg());
        assert_eq!(ProjComplex::elementary(a, Elementary::T(2, 2), 0), Err(Error::DegenerateElementary));
        assert_eq!(t.render_row(), "0 → P_1 → P_2 → 0");
    }

    #[test]
    fn square_zero_is_enforced() {
        // P_1 -> P_2 -> P_1 with h_12 then h_21 composes to eps, nonzero for m >= 1.
        let a = alg(2, 1);
        let terms = BTreeMap::from([(0, vec![1]), (1, vec![2]), (2, vec![1])]);
        let diffs = BTreeMap::from([
            (0, MorphismMatrix::from_entries(&[2], &[1], vec![Morphism::h(1, 2)]).unwrap()),
            (1, MorphismMatrix::from_entries(&[1], &[2], vec![Morphism::h(2, 1)]).unwrap()),
        ]);
        assert_eq!(ProjComplex::new(a, terms, diffs), Err(Error::NotAComplex(0)));
    }

    #[test]
    fn cone_of_identity_and_of_h() {
        let a = alg(2, 1);
        let s1 = ProjComplex::stalk(a, 1, 0).unwrap();
        let s2 = ProjComplex::stalk(a, 2, 0).unwrap();
        let id = ChainMap::identity(&s1);
        let c = cone(&id).unwrap();
        assert_eq!((c.term(-1), c.term(0)), (&[1][..], &[1][..]));
        let f = ChainMap::new(
            s1.clone(),
            s2.clone(),
            0,
            BTreeMap::from([(0, MorphismMatrix::from_entries(&[2], &[1], vec![Morphism::h(1, 2)]).unwrap())]),
        )
        .unwrap();
        let c = cone(&f).unwrap();
        let expected = ProjComplex::elementary(a, Elementary::T(1, 2), 1).unwrap();
        assert!(c.equal_normalized(&expected));
    }

    #[test]
    fn non_chain_map_rejected() {
        let a = alg(3, 1);
        let t = ProjComplex::elementary(a, Elementary::T(1, 2), 0).unwrap();
        let s = ProjComplex::stalk(a, 1, 0).unwrap();
        // id_1 : S_1 -> T_12 misses the differential h_12 of the target.
        let bad = ChainMap::new(s.clone(), t.clone(), 0, BTreeMap::from([(0, MorphismMatrix::identity(&[1]))]));
        assert_eq!(bad, Err(Error::NotAChainMap(0)));
    }

    #[test]
    fn shift_signs() {
        let a = alg(3, 1);
        let t = ProjComplex::elementary(a, Elementary::T(1, 2), 0).unwrap();
        assert_eq!(t.shift(2).diff(-2).get(0, 0), &Morphism::h(1, 2));
        assert_eq!(t.shift(1).shift(-1), t);
    }

    #[test]
    fn normalization_sorts_and_rescales() {
        let a = alg(3, 1);
        let terms = BTreeMap::from([(0, vec![2, 1]), (1, vec![3])]);
        let d = MorphismMatrix::from_entries(
            &[3],
            &[2, 1],
            vec![Morphism::h(2, 3).scale(Scalar::from_int(-2)), Morphism::zero(1, 3)],
        )
        .unwrap();
        let c = ProjComplex::new(a, terms, BTreeMap::from([(0, d)])).unwrap();
        let n = c.normalized();
        assert_eq!(n.term(0), [1, 2]);
        assert_eq!(n.diff(0).get(0, 1), &Morphism::h(2, 3));
        assert!(!c.equal_normalized(&c.shift(1)));
    }
}
