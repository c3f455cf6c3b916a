use gsp4_core::groups::construct::{quaternion, symmetric};
use gsp4_core::groups::{linear_characters, monomial_irreps, GroupRep};
use gsp4_core::symplectic::*;
use gsp4_core::Matrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

#[test]
fn random_conjugates_classify_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for label in OrbitLabel::ALL {
        for _ in 0..40 {
            let g = random_gsp4(&mut rng, 5);
            let n = &(&g * &label.representative()) * &g.inverse().unwrap();
            let c = classify_nilpotent(&n).unwrap();
            assert_eq!(c.orbit, label);
            let h = &c.conjugator;
            assert_eq!(&(h * &n) * &h.inverse().unwrap(), label.representative());
        }
    }
}

#[test]
fn bilinear_form_examples() {
    let s3 = Arc::new(symmetric(3));
    let irr = monomial_irreps(&s3).unwrap();
    assert_eq!(bilinear_form_type(&irr[2]).unwrap(), FormType::Orthogonal);
    let q8 = Arc::new(quaternion());
    let qirr = monomial_irreps(&q8).unwrap();
    assert_eq!(bilinear_form_type(&qirr[4]).unwrap(), FormType::Symplectic);
    let z3 = Arc::new(gsp4_core::groups::construct::cyclic(3));
    let chi = &linear_characters(&z3)[1];
    let r = GroupRep::linear(z3, chi).unwrap();
    assert_eq!(bilinear_form_type(&r).unwrap(), FormType::None);
    let red = irr[0].direct_sum(&irr[1]).unwrap();
    assert_eq!(bilinear_form_type(&red), Err(SymplecticError::Reducible));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn similitude_is_multiplicative(s1 in 0u64..10_000, s2 in 0u64..10_000) {
        let g = random_gsp4(&mut ChaCha8Rng::seed_from_u64(s1), 4);
        let h = random_gsp4(&mut ChaCha8Rng::seed_from_u64(s2), 4);
        let cg = similitude(&g).unwrap().unwrap();
        let ch = similitude(&h).unwrap().unwrap();
        prop_assert_eq!(similitude(&(&g * &h)).unwrap().unwrap(), &cg * &ch);
    }

    #[test]
    fn classification_certificate_holds(seed in 0u64..10_000, which in 0usize..4) {
        let label = OrbitLabel::ALL[which];
        let g = random_gsp4(&mut ChaCha8Rng::seed_from_u64(seed), 6);
        let n = &(&g * &label.representative()) * &g.inverse().unwrap();
        let c = classify_nilpotent(&n).unwrap();
        prop_assert_eq!(c.orbit, label);
        prop_assert!(similitude(&c.conjugator).unwrap().is_some());
        prop_assert_eq!(&(&c.conjugator * &n) * &c.conjugator.inverse().unwrap(), label.representative());
    }
}

#[test]
fn partitions_of_four() {
    for (p, ok) in [(vec![4], true), (vec![3, 1], false), (vec![2, 2], true), (vec![2, 1, 1], true), (vec![1, 1, 1, 1], true)] {
        let v = symplectic_partition_test(&p).unwrap();
        assert_eq!(v.symplectic, ok, "{:?}", p);
        if let Some(x) = v.certificate {
            let conj = &(&x * &Matrix::jordan_form(&p)) * &x.inverse().unwrap();
            assert!(in_lie_algebra(&conj));
        }
    }
}
