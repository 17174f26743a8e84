mod common;

use common::*;
use gajwb::corpus::algebras;
use gajwb::identity::check_gaj_identity;
use gajwb::representation::{check_rep_via_extension, check_representation, split_null_extension};

#[test]
fn direct_check_agrees_with_split_extension() {
    let mut valid = 0;
    let mut invalid = 0;
    for (f, seed) in [(Q, 11), (f5(), 12)] {
        for (name, alg, p) in corpus_algebras(f) {
            for r in candidates(&alg, &p, 40, seed) {
                let direct = check_representation(&r, &p).unwrap();
                let ext = check_rep_via_extension(&r, &p).unwrap();
                assert_eq!(direct, ext, "{name} over {f}: {:?}", r.generators());
                if direct {
                    valid += 1;
                } else {
                    invalid += 1;
                }
            }
        }
    }
    assert!(valid >= 40 && invalid >= 40, "valid {valid}, invalid {invalid}");
}

#[test]
fn every_one_dimensional_map_over_f5() {
    let f = f5();
    for (name, alg, p) in corpus_algebras(f) {
        for r in all_one_dimensional(&alg) {
            assert_eq!(
                check_representation(&r, &p).unwrap(),
                check_rep_via_extension(&r, &p).unwrap(),
                "{name}: {:?}",
                r.generators()
            );
        }
    }
}

#[test]
fn regular_module_extension_contains_the_algebra() {
    for (_, alg, p) in corpus_algebras(Q) {
        let s = split_null_extension(&gajwb::Representation::regular(alg.clone()));
        assert_eq!(s.algebra.dim(), 2 * alg.dim());
        assert!(check_gaj_identity(&s.algebra, &p).unwrap());
    }
    // A non-admissible point makes the regular module fail as well.
    let alg = algebras::square_root(Q);
    let r = gajwb::Representation::regular(alg);
    assert!(check_representation(&r, &params(Q, 3, -1)).is_err());
}
