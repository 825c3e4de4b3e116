//! Normal homogeneous morphisms between the projectives of the Brauer star
//! algebra of type `(e, m)`.
//!
//! The projective `P_i` is uniserial of Loewy length `em + 1`. A map
//! `P_i -> P_j` is determined by its radical degree `s`, which must satisfy
//! `s = {j - i}_e (mod e)` and `s <= em`. Composition adds degrees and
//! vanishes beyond the socle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StarAlgebra {
    e: u32,
    m: u32,
}

/// `eps^ell h~_{source target}`: the normal homogeneous map of degree
/// `ell * e + {target - source}_e`. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisMap {
    pub source: u32,
    pub target: u32,
    pub ell: u32,
}

/// Rational linear combination of basis maps `P_source -> P_target`, keyed by
/// the exponent `ell`. The zero morphism has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: u32,
    target: u32,
    terms: BTreeMap<u32, Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceClass {
    Short,
    Long,
    Zero,
}

impl StarAlgebra {
    pub fn new(e: u32, m: u32) -> Result<Self> {
        if e < 2 || m < 1 {
            return Err(Error::InvalidAlgebra { e, m });
        }
        Ok(StarAlgebra { e, m })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Degree of the socle map; every composite above it vanishes.
    pub fn socle_degree(&self) -> u32 {
        self.e * self.m
    }

    /// `{j - i}_e`, the residue in `0..e`.
    pub fn residue(&self, i: u32, j: u32) -> u32 {
        (j + self.e - i % self.e) % self.e
    }

    fn check_index(&self, i: u32) -> Result<()> {
        if i < 1 || i > self.e {
            Err(Error::InvalidBasisMap(format!("index {i} outside 1..={}", self.e)))
        } else {
            Ok(())
        }
    }

    pub fn basis_map(&self, source: u32, target: u32, ell: u32) -> Result<BasisMap> {
        self.check_index(source)?;
        self.check_index(target)?;
        let max_ell = if source == target { self.m } else { self.m - 1 };
        if ell > max_ell {
            return Err(Error::InvalidBasisMap(format!(
                "exponent {ell} exceeds {max_ell} for P_{source} -> P_{target}"
            )));
        }
        Ok(BasisMap { source, target, ell })
    }

    pub fn degree_of(&self, b: BasisMap) -> u32 {
        b.ell * self.e + self.residue(b.source, b.target)
    }

    /// The basis map `P_source -> P_target` of the given degree, if any.
    pub fn basis_of_degree(&self, source: u32, target: u32, degree: u32) -> Option<BasisMap> {
        let k = self.residue(source, target);
        if degree > self.socle_degree() || degree < k || !(degree - k).is_multiple_of(self.e) {
            return None;
        }
        Some(BasisMap { source, target, ell: (degree - k) / self.e })
    }

    /// Composite `g o f` of basis maps, `None` when it vanishes.
    pub fn compose_basis(&self, g: BasisMap, f: BasisMap) -> Option<BasisMap> {
        debug_assert_eq!(f.target, g.source);
        self.basis_of_degree(f.source, g.target, self.degree_of(f) + self.degree_of(g))
    }

    /// Basis of `Hom(P_i, P_j)`: `m` maps when `i != j`, `m + 1` when `i = j`,
    /// in increasing degree.
    pub fn hom_basis(&self, i: u32, j: u32) -> Vec<BasisMap> {
        let top = if i == j { self.m } else { self.m - 1 };
        (0..=top).map(|ell| BasisMap { source: i, target: j, ell }).collect()
    }

    pub fn hom_dim(&self, i: u32, j: u32) -> usize {
        if i == j {
            self.m as usize + 1
        } else {
            self.m as usize
        }
    }

    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if f.target != g.source {
            return Err(Error::NotComposable(format!(
                "P_{} -> P_{} then P_{} -> P_{}",
                f.source, f.target, g.source, g.target
            )));
        }
        Ok(self.compose_unchecked(g, f))
    }

    pub(crate) fn compose_unchecked(&self, g: &Morphism, f: &Morphism) -> Morphism {
        debug_assert_eq!(f.target, g.source);
        let mut out = Morphism::zero(f.source, g.target);
        for (&lf, &cf) in &f.terms {
            for (&lg, &cg) in &g.terms {
                let bf = BasisMap { source: f.source, target: f.target, ell: lf };
                let bg = BasisMap { source: g.source, target: g.target, ell: lg };
                if let Some(b) = self.compose_basis(bg, bf) {
                    out.add_term(b.ell, cf * cg);
                }
            }
        }
        out
    }

    /// Classifies `r_1 -> ... -> r_l` by the exponent of the composite of the
    /// `h~` maps along it.
    pub fn classify_sequence(&self, seq: &[u32]) -> Result<SequenceClass> {
        if seq.len() < 2 {
            return Err(Error::InvalidBasisMap("sequence needs at least two entries".into()));
        }
        for &r in seq {
            self.check_index(r)?;
        }
        let mut acc = Morphism::identity(seq[0]);
        for w in seq.windows(2) {
            let h = Morphism::basis(BasisMap { source: w[0], target: w[1], ell: 0 });
            acc = self.compose_unchecked(&h, &acc);
        }
        Ok(match acc.terms.keys().next() {
            None => SequenceClass::Zero,
            Some(0) => SequenceClass::Short,
            Some(_) => SequenceClass::Long,
        })
    }
}

impl Morphism {
    pub fn zero(source: u32, target: u32) -> Self {
        Morphism { source, target, terms: BTreeMap::new() }
    }

    pub fn identity(i: u32) -> Self {
        Morphism::basis(BasisMap { source: i, target: i, ell: 0 })
    }

    pub fn basis(b: BasisMap) -> Self {
        Morphism::scaled(b, Scalar::ONE)
    }

    pub fn scaled(b: BasisMap, c: Scalar) -> Self {
        let mut m = Morphism::zero(b.source, b.target);
        m.add_term(b.ell, c);
        m
    }

    /// `h~_{ij}` with coefficient one.
    pub fn h(i: u32, j: u32) -> Self {
        Morphism::basis(BasisMap { source: i, target: j, ell: 0 })
    }

    pub fn source(&self) -> u32 {
        self.source
    }

    pub fn target(&self) -> u32 {
        self.target
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisMap, Scalar)> + '_ {
        self.terms.iter().map(|(&ell, &c)| (BasisMap { source: self.source, target: self.target, ell }, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, ell: u32) -> Scalar {
        self.terms.get(&ell).copied().unwrap_or(Scalar::ZERO)
    }

    pub fn add_term(&mut self, ell: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(ell).or_insert(Scalar::ZERO);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&ell);
        }
    }

    /// The single-term scalar, if this is `c * id` for a nonzero `c`.
    pub fn as_invertible_scalar(&self) -> Option<Scalar> {
        if self.source == self.target && self.terms.len() == 1 {
            self.terms.get(&0).copied()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        debug_assert_eq!((self.source, self.target), (other.source, other.target));
        let mut out = self.clone();
        for (&ell, &c) in &other.terms {
            out.add_term(ell, c);
        }
        out
    }

    pub fn scale(&self, c: Scalar) -> Morphism {
        if c.is_zero() {
            return Morphism::zero(self.source, self.target);
        }
        Morphism {
            source: self.source,
            target: self.target,
            terms: self.terms.iter().map(|(&l, &x)| (l, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Morphism {
        self.scale(-Scalar::ONE)
    }

    /// Same basis maps with every coefficient divided by the leading one.
    pub fn normalized(&self) -> Morphism {
        match self.terms.values().next() {
            Some(&lead) => self.scale(lead.recip()),
            None => self.clone(),
        }
    }

    pub fn render(&self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for BasisMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.source == self.target {
            match self.ell {
                0 => write!(f, "id_{}", self.source),
                1 => write!(f, "ε_{}", self.source),
                l => write!(f, "ε_{}^{}", self.source, l),
            }
        } else {
            match self.ell {
                0 => {}
                1 => write!(f, "ε ")?,
                l => write!(f, "ε^{l} ")?,
            }
            write!(f, "h_{{{} {}}}", self.source, self.target)
        }
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms().enumerate() {
            let neg = c < Scalar::ZERO;
            let abs = if neg { -c } else { c };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[P_{} -> P_{}: {}]", self.source, self.target, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn alg(e: u32, m: u32) -> StarAlgebra {
        StarAlgebra::new(e, m).unwrap()
    }

    #[test]
    fn rejects_degenerate_algebras() {
        assert!(StarAlgebra::new(1, 1).is_err());
        assert!(StarAlgebra::new(3, 0).is_err());
    }

    #[test]
    fn degrees() {
        let a = alg(11, 2);
        assert_eq!(a.degree_of(BasisMap { source: 1, target: 5, ell: 0 }), 4);
        assert_eq!(a.degree_of(BasisMap { source: 3, target: 3, ell: 1 }), 11);
        let b = alg(4, 3);
        assert_eq!(b.degree_of(BasisMap { source: 2, target: 2, ell: 3 }), b.socle_degree());
        assert_eq!(b.degree_of(BasisMap { source: 4, target: 1, ell: 0 }), 1);
    }

    #[test]
    fn worked_composition_examples() {
        let a = alg(11, 2);
        let g = Morphism::h(5, 7);
        let f = Morphism::h(1, 5);
        assert_eq!(a.compose(&g, &f).unwrap(), Morphism::h(1, 7));
        let long = a.compose(&Morphism::h(1, 7), &Morphism::h(5, 1)).unwrap();
        assert_eq!(long, Morphism::basis(BasisMap { source: 5, target: 7, ell: 1 }));
        assert_eq!(long.to_string(), "ε h_{5 7}");
    }

    #[test]
    fn truncation_kills_high_degree() {
        let a = alg(2, 1);
        let eps = Morphism::basis(BasisMap { source: 1, target: 1, ell: 1 });
        assert!(a.compose(&eps, &Morphism::h(2, 1)).unwrap().is_zero());
        assert!(a.compose(&eps, &Morphism::h(1, 2)).is_err());
    }

    #[test]
    fn identity_is_neutral() {
        let a = alg(5, 2);
        let f =
            Morphism::basis(BasisMap { source: 2, target: 4, ell: 1 }).add(&Morphism::h(2, 4).scale(Scalar::new(3, 2)));
        assert_eq!(a.compose(&Morphism::identity(4), &f).unwrap(), f);
        assert_eq!(a.compose(&f, &Morphism::identity(2)).unwrap(), f);
    }

    #[test]
    fn sequences() {
        let a = alg(11, 2);
        assert_eq!(a.classify_sequence(&[1, 5, 7]).unwrap(), SequenceClass::Short);
        assert_eq!(a.classify_sequence(&[5, 1, 7]).unwrap(), SequenceClass::Long);
        assert_eq!(alg(2, 1).classify_sequence(&[1, 2, 1, 2]).unwrap(), SequenceClass::Zero);
        assert!(a.classify_sequence(&[1]).is_err());
    }

    #[test]
    fn hom_basis_examples() {
        let a = alg(5, 1);
        assert_eq!(a.hom_basis(1, 3), [BasisMap { source: 1, target: 3, ell: 0 }]);
        let degs: Vec<u32> = a.hom_basis(2, 2).into_iter().map(|b| a.degree_of(b)).collect();
        assert_eq!(degs, [0, 5]);
        let b = alg(2, 3);
        let degs: Vec<u32> = b.hom_basis(1, 2).into_iter().map(|x| b.degree_of(x)).collect();
        assert_eq!(degs, [1, 3, 5]);
    }

    #[test]
    fn basis_map_bounds() {
        let a = alg(3, 2);
        assert!(a.basis_map(1, 2, 1).is_ok());
        assert!(a.basis_map(1, 2, 2).is_err());
        assert!(a.basis_map(1, 1, 2).is_ok());
        assert!(a.basis_map(0, 1, 0).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(Morphism::identity(3).to_string(), "id_3");
        assert_eq!(Morphism::basis(BasisMap { source: 2, target: 2, ell: 2 }).to_string(), "ε_2^2");
        let m = Morphism::h(1, 2)
            .neg()
            .add(&Morphism::basis(BasisMap { source: 1, target: 2, ell: 1 }).scale(Scalar::from_int(2)));
        assert_eq!(m.to_string(), "-h_{1 2} + 2·ε h_{1 2}");
    }
}
