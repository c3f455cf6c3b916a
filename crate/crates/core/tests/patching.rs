mod common;

use common::prime_index_normals;
use gsp4_core::groups::{linear_characters, monomial_irreps, named_group, GroupRep, Subgroup};
use gsp4_core::patching::*;
use gsp4_core::Scalar;
use proptest::prelude::*;
use std::sync::Arc;

const ABELIAN: [&str; 5] = ["V4", "C4xC2", "C6", "C3xC3", "C2xC2xC2"];

#[test]
fn s3_over_a3() {
    let g = Arc::new(named_group("S3").unwrap());
    let a3 = Subgroup::generated(g.clone(), &[g.label("c").unwrap()]).unwrap();
    let irr = monomial_irreps(&g).unwrap();
    // the 2-dim irreducible is induced from A3, so it is the only extension
    let fam = PatchFamily::from_global(g.clone(), &[a3.clone()], &irr[2], vec![]).unwrap();
    let cert = patch(&fam).unwrap();
    assert_eq!(cert.uniqueness, Uniqueness::Induced);
    assert_eq!(cert.character, irr[2].character());
    // 1 ⊕ 1 on A3 extends as 1 ⊕ 1, 1 ⊕ sgn and sgn ⊕ sgn
    let triv = GroupRep::trivial(g.clone(), 2);
    let fam = PatchFamily::from_global(g.clone(), &[a3], &triv, vec![]).unwrap();
    match patch(&fam) {
        Err(PatchError::Ambiguous { candidates, .. }) => {
            let mut got: Vec<Vec<Scalar>> = candidates.iter().map(|r| r.character().to_vec()).collect();
            got.sort();
            assert_eq!(got.len(), 3);
            assert_eq!(got, oracle_characters(&fam, &irr));
        }
        other => panic!("expected ambiguity, got {:?}", other.map(|c| c.character)),
    }
}

#[test]
fn report_flags_gaps() {
    let g = Arc::new(named_group("V4").unwrap());
    let normals = prime_index_normals(&g);
    let rho = GroupRep::trivial(g.clone(), 2);
    let fam = PatchFamily::from_global(g.clone(), &normals[..1], &rho, vec![]).unwrap();
    let rep = check_family(&fam);
    assert!(rep.conditions_hold);
    assert!(!rep.coverage);
    assert_eq!(rep.uncovered.len(), 2);
    let full = PatchFamily::from_global(g, &normals, &rho, vec![]).unwrap();
    assert!(check_family(&full).coverage);
}

#[test]
fn json_round_trip_preserves_the_outcome() {
    let g = Arc::new(named_group("D4").unwrap());
    let irr = monomial_irreps(&g).unwrap();
    let rho = irr[4].direct_sum(&irr[1]).unwrap();
    let fam = PatchFamily::from_global(g, &prime_index_normals(&rho.group().clone()), &rho, vec![]).unwrap();
    let text = serde_json::to_string(&FamilyJson::from_family(&fam)).unwrap();
    let back = serde_json::from_str::<FamilyJson>(&text).unwrap().build().unwrap();
    assert_eq!(outcome_characters(&patch(&fam)), outcome_characters(&patch(&back)));
}

#[test]
fn cm_search_is_complete_below_the_bound() {
    let r = cm_family_search(&[3, 7], 60).unwrap();
    for a in 1..=60i64 {
        let d = -a;
        let all_split = is_square_free(d) && [3, 7].iter().all(|&p| quadratic_splitting(d, p) == Ok(Splitting::Split));
        assert_eq!(all_split, r.fields.contains(&d), "d = {}", d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// The patch outcome is the oracle's set; under coverage a character is unique.
    #[test]
    fn outcome_matches_oracle(gi in 0usize..5, ci in 0usize..9, cj in 0usize..9, two in any::<bool>()) {
        let g = Arc::new(named_group(ABELIAN[gi]).unwrap());
        let chars = linear_characters(&g);
        let a = GroupRep::linear(g.clone(), &chars[ci % chars.len()]).unwrap();
        let rho = if two {
            a.direct_sum(&GroupRep::linear(g.clone(), &chars[cj % chars.len()]).unwrap()).unwrap()
        } else {
            a
        };
        let fam = PatchFamily::from_global(g.clone(), &prime_index_normals(&g), &rho, vec![]).unwrap();
        let irr = monomial_irreps(&g).unwrap();
        let oracle = oracle_characters(&fam, &irr);
        let res = patch(&fam);
        prop_assert_eq!(outcome_characters(&res), oracle.clone());
        if !two && check_family(&fam).coverage {
            prop_assert_eq!(oracle.len(), 1);
            let cert = res.unwrap();
            prop_assert!(verify_patch(&cert.rho, &fam));
        }
    }

    /// For members disjoint from M, the twisted multiplicities of a fixed constituent add up
    /// to its multiplicity in ρ₀.
    #[test]
    fn twist_multiplicities_are_conserved(gi in 0usize..5, seed in 0usize..1000) {
        let g = Arc::new(named_group(["D4", "S3", "C4xC2", "D6", "Q8"][gi]).unwrap());
        let irr = monomial_irreps(&g).unwrap();
        let a = &irr[seed % irr.len()];
        let b = &irr[(seed / 7) % irr.len()];
        let rho = if a.dim() + b.dim() <= 4 { a.direct_sum(b).unwrap() } else { a.clone() };
        let fam = PatchFamily::from_global(g.clone(), &prime_index_normals(&g), &rho, vec![]).unwrap();
        let Ok(cert) = patch(&fam) else { return Ok(()) };
        let disjoint = &cert.demands[0].witnesses;
        for &e in disjoint {
            for (t, c) in cert.ledger.fixed.iter().enumerate() {
                let total: usize = cert.twist_multiplicities[e][t].iter().sum();
                prop_assert_eq!(total, c.multiplicity);
            }
        }
    }

    #[test]
    fn splitting_matches_root_count(p in 3i64..400, d in -60i64..60) {
        prop_assume!(is_prime(p) && is_square_free(d));
        let roots = (0..p).filter(|x| (x * x - d).rem_euclid(p) == 0).count();
        let expect = [Splitting::Inert, Splitting::Ramified, Splitting::Split][roots];
        prop_assert_eq!(quadratic_splitting(d, p).unwrap(), expect);
    }
}
