use gsp4_core::conductors::*;
use gsp4_core::groups::{monomial_irreps, named_group, FiniteGroup, GroupRep, Subgroup};
use num_rational::BigRational;
use proptest::prelude::*;
use std::sync::Arc;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn s3_filtration() -> (Arc<FiniteGroup>, RamificationFiltration) {
    let g = Arc::new(named_group("S3").unwrap());
    let c = g.label("c").unwrap();
    let a3 = Subgroup::generated(g.clone(), &[c]).unwrap();
    let f = RamificationFiltration::with_wild_part(g.clone(), a3.members(), 2).unwrap();
    (g, f)
}

#[test]
fn s3_with_wild_a3() {
    let (g, f) = s3_filtration();
    let irr = monomial_irreps(&g).unwrap();
    // trivial, sign, 2-dim
    assert_eq!(artin_conductor(&irr[0], &f).unwrap(), int(0));
    assert_eq!(artin_conductor(&irr[1], &f).unwrap(), int(1));
    assert_eq!(swan_conductor(&irr[1], &f).unwrap(), int(0));
    assert!(is_tame_character(&irr[1], &f));
    let a2 = artin_conductor(&irr[2], &f).unwrap();
    let s2 = swan_conductor(&irr[2], &f).unwrap();
    assert_eq!(&a2 - &s2, int(2));
    let rep = swan_depth_identity(&irr[2], &f).unwrap();
    assert!(rep.consistent);
    assert_eq!(rep.depth, s2 / int(2));
}

#[test]
fn depth_formula() {
    for n in 1..6 {
        for f in n..4 * n {
            let d = depth_from_conductor(f, n).unwrap();
            assert_eq!(d * int(n) + int(n), int(f));
        }
    }
    assert!(depth_from_conductor(1, 0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conductors_are_additive(a in 0usize..3, b in 0usize..3, m in 1usize..4) {
        let g = Arc::new(named_group("D4").unwrap());
        let irr = monomial_irreps(&g).unwrap();
        let center = g.elements().find(|&x| x != g.identity() && g.elements().all(|y| g.mul(x, y) == g.mul(y, x))).unwrap();
        let f = RamificationFiltration::with_wild_part(g.clone(), &[g.identity(), center], m).unwrap();
        let (r1, r2): (&GroupRep, &GroupRep) = (&irr[a + 2], &irr[b]);
        let sum = r1.direct_sum(r2).unwrap();
        prop_assert_eq!(artin_conductor(&sum, &f).unwrap(), artin_conductor(r1, &f).unwrap() + artin_conductor(r2, &f).unwrap());
        prop_assert_eq!(swan_conductor(&sum, &f).unwrap(), swan_conductor(r1, &f).unwrap() + swan_conductor(r2, &f).unwrap());
        let codim = invariant_codim(&sum, &Subgroup::whole(g.clone()));
        prop_assert_eq!(artin_conductor(&sum, &f).unwrap() - swan_conductor(&sum, &f).unwrap(), int(codim as i64));
    }
}
