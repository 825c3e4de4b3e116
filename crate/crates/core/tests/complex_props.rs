mod common;

use brauer_core::complex::{cone, hom_dim, hom_space, reduce};
use brauer_core::pipeline::pointing_family;
use brauer_core::{ChainMap, PointingKind, ProjComplex};
use proptest::prelude::*;

fn cones_of(rows: &[ProjComplex]) -> Vec<(ChainMap, ProjComplex)> {
    let mut out = Vec::new();
    for x in rows {
        for y in rows {
            for f in hom_space(x, y, 0).basis {
                let c = cone(&f).unwrap();
                out.push((f, c));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reduction_certificates_verify(t in common::arb_tree(2, 5, 2), k in 0usize..3) {
        let kind = [PointingKind::Ordinary, PointingKind::Reversed, PointingKind::LeftAlternating][k];
        let (fam, _) = pointing_family(&t, kind, t.default_initial_edge()).unwrap();
        for (_, c) in cones_of(fam.rows()).into_iter().take(12) {
            let (r, cert) = reduce(&c).unwrap();
            prop_assert!(cert.verify().is_ok());
            prop_assert_eq!(cert.original(), &c);
            prop_assert_eq!(cert.reduced(), &r);
            prop_assert!(r.summand_count() + 2 * cert.steps == c.summand_count());
            // a minimal complex has nothing left to cancel
            let (again, cert2) = reduce(&r).unwrap();
            prop_assert_eq!(cert2.steps, 0);
            prop_assert!(again.equal_normalized(&r));
            for z in fam.rows() {
                for n in -2..=2 {
                    prop_assert_eq!(hom_dim(&c, z, n), hom_dim(&r, z, n));
                    prop_assert_eq!(hom_dim(z, &c, n), hom_dim(z, &r, n));
                }
            }
        }
    }

    #[test]
    fn hom_dims_are_shift_invariant(t in common::arb_tree(2, 5, 3)) {
        let (fam, _) = pointing_family(&t, PointingKind::Reversed, t.default_initial_edge()).unwrap();
        for x in fam.rows() {
            for y in fam.rows() {
                for n in -2..=2 {
                    prop_assert_eq!(hom_dim(x, y, n), hom_dim(&x.shift(3), &y.shift(3), n));
                    prop_assert_eq!(hom_dim(x, y, n), hom_dim(x, &y.shift(n), 0));
                }
            }
        }
    }

    #[test]
    fn hom_basis_maps_are_chain_maps(t in common::arb_tree(2, 5, 2)) {
        let (fam, _) = pointing_family(&t, PointingKind::LeftAlternating, t.default_initial_edge()).unwrap();
        for x in fam.rows() {
            for y in fam.rows() {
                let h = hom_space(x, y, 0);
                prop_assert_eq!(h.dim(), hom_dim(x, y, 0));
                for f in &h.basis {
                    prop_assert!(f.check_commutes().is_ok());
                    prop_assert!(!f.is_zero());
                }
            }
        }
    }
}

#[test]
fn cone_of_identity_is_contractible() {
    let alg = brauer_core::StarAlgebra::new(3, 1).unwrap();
    let t = ProjComplex::two_term(alg, 0, 1, 2, brauer_core::Morphism::h(1, 2)).unwrap();
    let (r, cert) = reduce(&cone(&ChainMap::identity(&t)).unwrap()).unwrap();
    assert!(r.is_zero());
    assert_eq!(cert.steps, 2);
    cert.verify().unwrap();
}
