use gsp4_core::hodge_tate::*;
use num_rational::BigRational;
use proptest::prelude::*;

#[test]
fn smallest_weight() {
    let wd = WeightData::new(0, 0, 0).unwrap();
    assert_eq!(ht_weights(&wd), [0, 1, 2, 3]);
    let bl = blattner(wd.nu1, wd.nu2).unwrap();
    assert_eq!((bl.k1, bl.k2), (3, 3));
    assert!(WeightData::new(0, 1, 1).is_err());
}

#[test]
fn composition_reverses_the_sign_of_b() {
    let wd = WeightData::new(2, 0, 0).unwrap();
    for b in -3..=3 {
        let Ok(quad) = clozel_quadruple(b, wd.bold_w, wd.n, wd.n_prime) else { continue };
        assert!(is_weakly_increasing(&quad));
        assert_eq!(ht_from_quadruple(&quad), ht_weights(&wd).map(|h| h - b));
        assert_eq!(composed_weights(&wd, b).unwrap(), ht_weights(&wd).map(|h| h - b));
    }
}

#[test]
fn descent_needs_positive_integral_gap() {
    let int = |n: i64| BigRational::from_integer(n.into());
    let half = |n: i64| BigRational::new(n.into(), 2.into());
    let d = descent_condition(1, &int(2), 5, &int(0));
    assert!(d.descends);
    assert_eq!(d.packet, Some((4, 3, 2)));
    assert!(!descent_condition(5, &half(1), 1, &half(1)).descends);
    assert!(!descent_condition(1, &int(0), 5, &int(2)).descends);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn weight_invariants(mu1 in 0i64..=6, d in 0i64..=6, w in -6i64..=6, b in -3i64..=3) {
        let mu2 = mu1 - d.min(mu1);
        let Ok(wd) = WeightData::new(mu1, mu2, w) else { return Ok(()) };
        let ht = ht_weights(&wd);
        prop_assert!(ht.windows(2).all(|p| p[0] < p[1]));
        prop_assert!((0..4).all(|i| ht[i] + ht[3 - i] == w + 3));
        let bl = blattner(wd.nu1, wd.nu2).unwrap();
        prop_assert_eq!(bl.k1 + bl.k2 - 3, wd.nu1 + wd.nu2);
        if let Ok(q) = clozel_quadruple(b, wd.bold_w, wd.n, wd.n_prime) {
            prop_assert_eq!(ht_from_quadruple(&q), ht.map(|h| h - b));
        }
    }

    #[test]
    fn archimedean_exponents_are_symmetric(nu2 in 0i64..6, gap in 1i64..6, mu0 in -6i64..6) {
        let nu1 = nu2 + gap;
        if let Ok(p) = archimedean_parameter(mu0, nu1, nu2) {
            let e = &p.exponents;
            let n = e.len();
            let centre = &e[0] + &e[n - 1];
            prop_assert!((0..n).all(|i| &e[i] + &e[n - 1 - i] == centre));
        }
    }
}
