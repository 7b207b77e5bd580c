use std::collections::BTreeSet;

use ngsemi::enumeration::{enumerate, TreeParams};
use ngsemi::oracle::{self, BruteSemigroup};
use ngsemi::NumericalSemigroup;

fn all(max_genus: u32) -> Vec<NumericalSemigroup> {
    enumerate(&TreeParams::new(max_genus)).unwrap().collect()
}

#[test]
fn membership_and_pf_match_brute_force_up_to_genus_15() {
    for s in all(15) {
        let b = BruteSemigroup::new(s.generators());
        let m = s.multiplicity();
        for z in 0..=s.frobenius() + 2 * m {
            assert_eq!(s.contains(z), b.contains(z), "{s} at {z}");
        }
        assert_eq!(s.pseudo_frobenius(), b.pseudo_frobenius().as_slice(), "{s}");
        assert_eq!(*s.pseudo_frobenius().last().unwrap(), s.frobenius());
        assert_eq!(s.gaps().len() as i64, s.genus());
        assert_eq!(s.gaps(), b.gaps());
    }
}

#[test]
fn generators_and_apery_match_brute_force_up_to_genus_12() {
    for s in all(12) {
        let b = BruteSemigroup::new(s.generators());
        assert_eq!(s.generators(), b.minimal_generators().as_slice());
        assert_eq!(s.apery(), b.apery(s.multiplicity()).as_slice());
        for &n in s.generators() {
            assert_eq!(s.apery_set(n).unwrap(), b.apery(n), "{s} w.r.t. {n}");
        }
        // round-trip through the generator list
        assert_eq!(
            NumericalSemigroup::from_generators(s.generators()).unwrap(),
            s
        );
    }
}

#[test]
fn factorizations_match_brute_force_up_to_genus_12() {
    for s in all(12) {
        let gens = s.generators();
        let mut targets: BTreeSet<i64> = (0..=s.frobenius() + s.multiplicity()).collect();
        for &f in s.pseudo_frobenius() {
            targets.extend(gens.iter().map(|&n| f + n));
        }
        for z in targets {
            if !s.contains(z) {
                assert_eq!(s.factorizations(z), Err(ngsemi::Error::NotInSemigroup(z)));
                assert!(oracle::factorizations(gens, z, None).is_empty());
                continue;
            }
            let got: Vec<Vec<u64>> = s
                .factorizations(z)
                .unwrap()
                .into_iter()
                .map(|f| f.coefficients)
                .collect();
            assert_eq!(got, oracle::factorizations(gens, z, None), "{s} z={z}");
            for i in 0..gens.len() {
                let got: Vec<Vec<u64>> = s
                    .factorizations_avoiding(z, i)
                    .unwrap()
                    .into_iter()
                    .map(|f| f.coefficients)
                    .collect();
                assert_eq!(
                    got,
                    oracle::factorizations(gens, z, Some(i)),
                    "{s} z={z} i={i}"
                );
            }
        }
    }
}

#[test]
fn tree_matches_gap_subset_enumeration_up_to_genus_8() {
    let tree: BTreeSet<Vec<i64>> = all(8).iter().map(|s| s.generators().to_vec()).collect();
    let brute: BTreeSet<Vec<i64>> = oracle::all_up_to_genus(8).into_iter().collect();
    assert_eq!(tree.len(), 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67);
    assert_eq!(tree, brute);
}
