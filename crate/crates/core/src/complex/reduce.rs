//! Gaussian elimination of invertible differential entries.
//!
//! Every elimination step comes with explicit maps `f : C -> C'`,
//! `g : C' -> C` and a homotopy `T` with `f g = id` and
//! `g f - id = d T + T d`. Steps compose, so the final certificate relates the
//! input to the fully reduced complex.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{ChainMap, MorphismMatrix, ProjComplex};
use crate::algebra::Morphism;
use crate::error::{Error, Result};

/// Homotopy equivalence data between a complex and its reduction.
/// `homotopy[k]` maps `C^k -> C^{k-1}`.
#[derive(Clone, Debug)]
pub struct ReductionCertificate {
    pub f: ChainMap,
    pub g: ChainMap,
    pub homotopy: BTreeMap<i32, MorphismMatrix>,
    pub steps: usize,
}

impl ReductionCertificate {
    fn identity(c: &ProjComplex) -> Self {
        ReductionCertificate { f: ChainMap::identity(c), g: ChainMap::identity(c), homotopy: BTreeMap::new(), steps: 0 }
    }

    pub fn original(&self) -> &ProjComplex {
        self.f.source()
    }

    pub fn reduced(&self) -> &ProjComplex {
        self.f.target()
    }

    fn homotopy_at(&self, k: i32) -> MorphismMatrix {
        let c = self.original();
        match self.homotopy.get(&k) {
            Some(t) => t.clone(),
            None => MorphismMatrix::zero(c.term(k - 1), c.term(k)),
        }
    }

    /// Checks that `f`, `g` are chain maps, `f g = id` and
    /// `g f - id = d T + T d`.
    pub fn verify(&self) -> Result<()> {
        let c = self.original();
        let alg = *c.algebra();
        self.f.check_commutes().map_err(|_| Error::CertificateFailed("f is not a chain map"))?;
        self.g.check_commutes().map_err(|_| Error::CertificateFailed("g is not a chain map"))?;
        let fg = self.f.compose(&self.g);
        for (&k, t) in self.reduced().terms() {
            if !fg.component(k).sub(&MorphismMatrix::identity(t)).is_zero() {
                return Err(Error::CertificateFailed("f g is not the identity"));
            }
        }
        let gf = self.g.compose(&self.f);
        for (&k, t) in c.terms() {
            let lhs = gf.component(k).sub(&MorphismMatrix::identity(t));
            let dt = c.diff(k - 1).compose(&alg, &self.homotopy_at(k));
            let td = self.homotopy_at(k + 1).compose(&alg, &c.diff(k));
            if !lhs.sub(&dt.add(&td)).is_zero() {
                return Err(Error::CertificateFailed("g f - id is not d T + T d"));
            }
        }
        for (&k, t) in &self.homotopy {
            if t.cols() != c.term(k) || t.rows() != c.term(k - 1) {
                return Err(Error::CertificateFailed("homotopy has the wrong shape"));
            }
        }
        Ok(())
    }

    /// Certificate for `self` followed by `next`, where `next` starts at
    /// `self.reduced()`.
    pub fn then(&self, next: &ReductionCertificate) -> ReductionCertificate {
        let alg = *self.original().algebra();
        let f = next.f.compose(&self.f);
        let g = self.g.compose(&next.g);
        let mut homotopy = self.homotopy.clone();
        for (&k, t) in &next.homotopy {
            let part = self.g.component(k - 1).compose(&alg, t).compose(&alg, &self.f.component(k));
            let cur = self.homotopy_at(k);
            homotopy.insert(k, cur.add(&part));
        }
        homotopy.retain(|_, t| !t.is_zero());
        ReductionCertificate { f, g, homotopy, steps: self.steps + next.steps }
    }
}

/// First entry of the form `c * id` in the lowest possible degree.
fn find_cancellable(c: &ProjComplex) -> Option<(i32, usize, usize)> {
    for (&n, d) in c.diffs() {
        for (r, col, x) in d.entries() {
            if x.as_invertible_scalar().is_some() {
                return Some((n, r, col));
            }
        }
    }
    None
}

/// Cancels the invertible entry `d^n[row][col]`.
fn eliminate(c: &ProjComplex, n: i32, row: usize, col: usize) -> Result<ReductionCertificate> {
    let alg = *c.algebra();
    let d = c.diff(n);
    let alpha = d.get(row, col);
    let lambda = alpha.as_invertible_scalar().expect("entry is invertible");
    let alpha_inv = Morphism::identity(alpha.source()).scale(lambda.recip());
    let inv = MorphismMatrix::from_entries(&[alpha.source()], &[alpha.source()], vec![alpha_inv.clone()])?;

    let all_n: Vec<usize> = (0..c.term(n).len()).collect();
    let all_n1: Vec<usize> = (0..c.term(n + 1).len()).collect();
    let keep_n: Vec<usize> = all_n.iter().copied().filter(|&i| i != col).collect();
    let keep_n1: Vec<usize> = all_n1.iter().copied().filter(|&i| i != row).collect();

    let delta = d.select(&keep_n1, &keep_n);
    let gamma = d.select(&keep_n1, &[col]);
    let beta = d.select(&[row], &keep_n);
    let gamma_inv = gamma.compose(&alg, &inv);
    let inv_beta = inv.compose(&alg, &beta);

    let mut terms = c.terms().clone();
    terms.insert(n, keep_n.iter().map(|&i| c.term(n)[i]).collect());
    terms.insert(n + 1, keep_n1.iter().map(|&i| c.term(n + 1)[i]).collect());
    let mut diffs = c.diffs().clone();
    diffs.insert(n, delta.sub(&gamma_inv.compose(&alg, &beta)));
    if let Some(prev) = c.diff_ref(n - 1) {
        let all: Vec<usize> = (0..prev.cols().len()).collect();
        diffs.insert(n - 1, prev.select(&keep_n, &all));
    }
    if let Some(next) = c.diff_ref(n + 1) {
        let all: Vec<usize> = (0..next.rows().len()).collect();
        diffs.insert(n + 1, next.select(&all, &keep_n1));
    }
    let reduced = ProjComplex::from_parts_unchecked(alg, terms, diffs);
    reduced.check_square_zero()?;

    let mut f_maps = BTreeMap::new();
    let mut g_maps = BTreeMap::new();
    for (&k, t) in c.terms() {
        if k != n && k != n + 1 {
            f_maps.insert(k, MorphismMatrix::identity(t));
            g_maps.insert(k, MorphismMatrix::identity(t));
        }
    }
    let id_n = MorphismMatrix::identity(c.term(n));
    f_maps.insert(n, id_n.select(&keep_n, &all_n));
    let mut f1 = MorphismMatrix::zero(reduced.term(n + 1), c.term(n + 1));
    for (j, &i) in keep_n1.iter().enumerate() {
        f1.set(j, i, Morphism::identity(c.term(n + 1)[i]));
        f1.set(j, row, gamma_inv.get(j, 0).neg());
    }
    f_maps.insert(n + 1, f1);

    let mut g0 = MorphismMatrix::zero(c.term(n), reduced.term(n));
    for (j, &i) in keep_n.iter().enumerate() {
        g0.set(i, j, Morphism::identity(c.term(n)[i]));
        g0.set(col, j, inv_beta.get(0, j).neg());
    }
    g_maps.insert(n, g0);
    let id_n1 = MorphismMatrix::identity(c.term(n + 1));
    g_maps.insert(n + 1, id_n1.select(&all_n1, &keep_n1));

    let mut t = MorphismMatrix::zero(c.term(n), c.term(n + 1));
    t.set(col, row, alpha_inv.neg());

    Ok(ReductionCertificate {
        f: ChainMap::from_parts_unchecked(c.clone(), reduced.clone(), 0, f_maps),
        g: ChainMap::from_parts_unchecked(reduced, c.clone(), 0, g_maps),
        homotopy: BTreeMap::from([(n + 1, t)]),
        steps: 1,
    })
}

/// Cancels invertible entries until none remain. The returned certificate is
/// verified before it is handed out.
pub fn reduce(c: &ProjComplex) -> Result<(ProjComplex, ReductionCertificate)> {
    let mut cert = ReductionCertificate::identity(c);
    while let Some((n, r, col)) = find_cancellable(cert.reduced()) {
        let step = eliminate(cert.reduced(), n, r, col)?;
        cert = cert.then(&step);
    }
    cert.verify()?;
    Ok((cert.reduced().clone(), cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StarAlgebra;
    use crate::complex::{cone, hom_dim, Elementary};
    use crate::scalar::Scalar;

    fn alg(e: u32, m: u32) -> StarAlgebra {
        StarAlgebra::new(e, m).unwrap()
    }

    #[test]
    fn contractible_reduces_to_zero() {
        let a = alg(3, 1);
        let t = ProjComplex::elementary(a, Elementary::T(1, 2), 0).unwrap();
        let c = cone(&ChainMap::identity(&t)).unwrap();
        let (r, cert) = reduce(&c).unwrap();
        assert!(r.is_zero());
        assert_eq!(cert.steps, 2);
    }

    #[test]
    fn reduction_keeps_minimal_complexes() {
        let a = alg(3, 2);
        let t = ProjComplex::elementary(a, Elementary::T(1, 3), 2).unwrap();
        let (r, cert) = reduce(&t).unwrap();
        assert_eq!(r, t);
        assert_eq!(cert.steps, 0);
    }

    #[test]
    fn scaled_entry_is_cancelled() {
        // P_1 --(2 id, h_12)--> P_1 (+) P_2 reduces to a stalk P_2 up to homotopy.
        let a = alg(2, 1);
        let terms = BTreeMap::from([(0, vec![1]), (1, vec![1, 2])]);
        let d = MorphismMatrix::from_entries(
            &[1, 2],
            &[1],
            vec![Morphism::identity(1).scale(Scalar::from_int(2)), Morphism::h(1, 2)],
        )
        .unwrap();
        let c = ProjComplex::new(a, terms, BTreeMap::from([(0, d)])).unwrap();
        let (r, cert) = reduce(&c).unwrap();
        assert_eq!(r.term(1), [2]);
        assert_eq!(r.summand_count(), 1);
        cert.verify().unwrap();
        assert_eq!(hom_dim(&r, &r, 0), hom_dim(&c, &c, 0));
    }
}
