mod common;

use common::*;
use gajwb::representation::check_representation;
use gajwb::submodule::{is_irreducible, IrreducibilityStatus};

#[test]
fn ladder_matches_brute_force_over_f5() {
    let f = f5();
    let mut counts = [0usize; 2];
    let mut valid = 0;
    for (i, (name, alg, p)) in corpus_algebras(f).into_iter().enumerate() {
        for r in random_finite_maps(&alg, 60, 100 + i as u64) {
            let v = is_irreducible(&r);
            assert_ne!(v.status, IrreducibilityStatus::Inconclusive, "{name}: {:?}", r.generators());
            let gens: Vec<_> = r.generators().iter().map(residues).collect();
            let oracle = brute_force_irreducible(&gens, r.module_dim(), 5);
            assert_eq!(v.status == IrreducibilityStatus::Irreducible, oracle, "{name}: {:?}", r.generators());
            if let Some(w) = &v.witness {
                assert!(r.generators().iter().all(|a| w.is_invariant_under(a)));
            }
            counts[oracle as usize] += 1;
            valid += check_representation(&r, &p).unwrap() as usize;
        }
    }
    assert!(counts[0] >= 20 && counts[1] >= 20, "{counts:?}");
    assert!(valid > 0);
}

#[test]
fn valid_representations_match_brute_force_over_f5() {
    let f = f5();
    let mut n = 0;
    for (i, (name, alg, p)) in corpus_algebras(f).into_iter().enumerate() {
        for r in candidates(&alg, &p, 60, 200 + i as u64) {
            if r.module_dim() > 3 || !check_representation(&r, &p).unwrap() {
                continue;
            }
            let v = is_irreducible(&r);
            let gens: Vec<_> = r.generators().iter().map(residues).collect();
            assert_eq!(
                v.status == IrreducibilityStatus::Irreducible,
                brute_force_irreducible(&gens, r.module_dim(), 5),
                "{name}"
            );
            n += 1;
        }
    }
    assert!(n >= 20, "{n}");
}
