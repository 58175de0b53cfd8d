use hnstrata_core::connectivity::{connectivity, SurfaceBundleSpec};
use hnstrata_core::oracle::suites;
use hnstrata_core::poset::{dominates, enumerate_strata};

#[test]
fn symmetric_strata_agree_with_full_enumeration() {
    let rep = suites::suite_symmetric(8, 3).unwrap();
    assert!(rep.passed, "{:?}", rep.counterexamples);
}

#[test]
fn reductions_hold() {
    let rep = suites::suite_reductions(5, 4, 2).unwrap();
    assert!(rep.passed, "{:?}", rep.counterexamples);
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 1..=4 {
        for k in -3..=3 {
            let set = enumerate_strata(n, k, 1, 12).unwrap();
            let m = &set.members;
            for a in m {
                assert!(dominates(a, a).unwrap());
                for b in m {
                    let ab = dominates(a, b).unwrap();
                    if ab && dominates(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in m {
                        if ab && dominates(b, c).unwrap() {
                            assert!(dominates(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn orientable_connectivity_matches_closed_forms() {
    for (g, n, k, d) in [(1, 2, 1, 2), (1, 4, 2, 4), (1, 6, 4, 4), (2, 6, 2, 14), (3, 3, 1, 10)] {
        let spec: SurfaceBundleSpec = format!("orientable,g={g},n={n},k={k}").parse().unwrap();
        assert_eq!(connectivity(&spec).unwrap().min_codim, Some(d), "g={g} n={n} k={k}");
    }
}
