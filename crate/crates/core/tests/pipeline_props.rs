mod common;

use brauer_core::mutation::run_algorithm_aihara;
use brauer_core::pipeline::*;
use brauer_core::{verify, Mode, PointingKind};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_mode_passes(t in common::arb_tree(2, 8, 3)) {
        for &init in t.roots() {
            for mode in Mode::ALL {
                let r = verify(&t, init, mode);
                prop_assert!(r.pass(), "{} on {:?}: {:?}", mode, t.to_raw(), r.failures);
            }
        }
    }

    #[test]
    fn pointing_families_have_unique_degrees(t in common::arb_tree(2, 8, 2), k in 0usize..3) {
        let kind = [PointingKind::Ordinary, PointingKind::Reversed, PointingKind::LeftAlternating][k];
        let (fam, n) = pointing_family(&t, kind, t.default_initial_edge()).unwrap();
        prop_assert!(fam.unique_degrees().is_some());
        prop_assert!(fam.is_partial_tilting());
        prop_assert_eq!(fam.hom_matrix(), t.cartan_matrix(&n));
    }

    #[test]
    fn sigma_cycles_sit_at_single_vertices(t in common::arb_tree(2, 8, 2)) {
        let init = t.default_initial_edge();
        let log = run_algorithm_aihara(&t, init).unwrap();
        let nat = log.natural_numbering().unwrap();
        let f = compose_inverse_mutations(&log).unwrap();
        let (h, _) = pointing_family(&t, PointingKind::LeftAlternating, init).unwrap();
        let sigma = sigma_of(&f, &h).unwrap();
        prop_assert_eq!(&sigma, &expected_sigma(&t, nat).unwrap());
        for c in sigma.cycles() {
            let shared = t.vertices().find(|&v| c.iter().all(|&n| t.ends(nat.edge(n)).contains(&v)));
            prop_assert!(shared.is_some_and(|v| t.distance(v) % 2 == 0 && t.distance(v) >= 2));
        }
    }
}
