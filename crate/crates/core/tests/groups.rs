use gsp4_core::groups::construct::{cyclic, klein_four, quaternion, symmetric};
use gsp4_core::groups::*;
use gsp4_core::{Matrix, Scalar};
use std::sync::Arc;

fn s3() -> Arc<FiniteGroup> {
    Arc::new(symmetric(3))
}

fn a3(g: &Arc<FiniteGroup>) -> Subgroup {
    let c = g.label("c").unwrap();
    Subgroup::generated(g.clone(), &[c]).unwrap()
}

fn irreps_by_dim(g: &Arc<FiniteGroup>) -> Vec<GroupRep> {
    monomial_irreps(g).unwrap()
}

#[test]
fn inner_product_examples() {
    let g = s3();
    let triv = GroupRep::trivial(g.clone(), 1);
    assert_eq!(triv.inner(&triv).unwrap(), Scalar::one());
    let irr = irreps_by_dim(&g);
    assert_eq!(irr.iter().map(|r| r.dim()).collect::<Vec<_>>(), vec![1, 1, 2]);
    let std2 = &irr[2];
    assert_eq!(std2.inner(std2).unwrap(), Scalar::one());
    let reg = GroupRep::regular(g.clone());
    assert_eq!(reg.inner(&triv).unwrap(), Scalar::one());
    let other = GroupRep::trivial(Arc::new(cyclic(6)), 1);
    assert!(triv.inner(&other).is_err());
}

#[test]
fn irreducibility_examples() {
    let g = s3();
    let irr = irreps_by_dim(&g);
    assert!(is_irreducible(&irr[0]));
    assert!(!is_irreducible(&irr[0].direct_sum(&irr[1]).unwrap()));
    let q8 = Arc::new(quaternion());
    let qirr = irreps_by_dim(&q8);
    assert_eq!(qirr.len(), 5);
    assert_eq!(qirr[4].dim(), 2);
    assert!(is_irreducible(&qirr[4]));
}

#[test]
fn restriction_and_induction() {
    let g = s3();
    let h = a3(&g);
    let irr = irreps_by_dim(&g);
    let whole = Subgroup::whole(g.clone());
    assert_eq!(restrict(&irr[2], &whole).unwrap().character(), irr[2].character());
    let res = restrict(&irr[2], &h).unwrap();
    let lin = linear_characters(h.group());
    let nontriv: Vec<_> = lin.iter().filter(|c| c.iter().any(|v| !v.is_one())).collect();
    assert_eq!(nontriv.len(), 2);
    let sum: Vec<Scalar> = (0..3).map(|i| &nontriv[0][i] + &nontriv[1][i]).collect();
    assert_eq!(res.character(), sum.as_slice());

    let triv_h = GroupRep::trivial(h.group().clone(), 1);
    let perm = induce(&triv_h, &h).unwrap();
    assert_eq!(perm.dim(), 2);
    assert!(perm.images().iter().all(|m| m.entries().iter().all(|x| x.is_zero() || x.is_one())));
    let lam = GroupRep::linear(h.group().clone(), nontriv[0]).unwrap();
    let ind = induce(&lam, &h).unwrap();
    assert!(ind.is_isomorphic(&irr[2]));
}

#[test]
fn conjugation_swaps_characters_of_a3() {
    let g = s3();
    let h = a3(&g);
    let s = g.label("s").unwrap();
    let lin = linear_characters(h.group());
    let chi = lin.iter().find(|c| c.iter().any(|v| !v.is_one())).unwrap();
    let r = GroupRep::linear(h.group().clone(), chi).unwrap();
    let rc = conjugate_rep(&r, &h, s).unwrap();
    assert!(!rc.is_isomorphic(&r));
    let conj: Vec<Scalar> = chi.iter().map(|v| v.conj()).collect();
    assert_eq!(rc.character(), conj.as_slice());
    let c = g.label("c").unwrap();
    assert!(conjugate_rep(&r, &h, c).unwrap().is_isomorphic(&r));
    let not_normal = Subgroup::generated(g.clone(), &[s]).unwrap();
    let r2 = GroupRep::trivial(not_normal.group().clone(), 1);
    assert_eq!(conjugate_rep(&r2, &not_normal, c).unwrap_err(), GroupError::NotNormal);
}

#[test]
fn intertwiner_examples() {
    let g = s3();
    let irr = irreps_by_dim(&g);
    let a = intertwiner(&irr[2], &irr[2]).unwrap();
    assert_eq!(a, Matrix::scalar(2, a.get(0, 0)));
    assert!(intertwiner(&irr[0], &irr[1]).is_none());
    let p = Matrix::from_ints(&[[1, 2], [0, 1]]);
    let b = irr[2].change_basis(&p).unwrap();
    let t = intertwiner(&irr[2], &b).unwrap();
    for x in g.elements() {
        assert_eq!(&t * irr[2].image(x), b.image(x) * &t);
    }
}

#[test]
fn extensions_from_index_two() {
    let z4 = Arc::new(cyclic(4));
    let h = Subgroup::generated(z4.clone(), &[2]).unwrap();
    let sign = GroupRep::linear(h.group().clone(), &[Scalar::one(), Scalar::from_i64(-1)]).unwrap();
    let ext = extend_invariant_irrep(&sign, &h).unwrap();
    let gen_val = ext.rep.image(1).get(0, 0).clone();
    assert_eq!(gen_val.root_of_unity().unwrap().0, 4);
    assert_eq!(restrict(&ext.rep, &h).unwrap().character(), sign.character());
    let all = ext.all(&h);
    assert_eq!(all.len(), 2);
    assert!(!all[0].is_isomorphic(&all[1]));

    let triv = GroupRep::trivial(h.group().clone(), 1);
    let t = extend_invariant_irrep(&triv, &h).unwrap();
    assert!(t.rep.character().iter().all(|v| v.is_one()));
}

#[test]
fn extension_of_two_dimensional_irrep() {
    // Q8 × ℤ/3 over Q8 × 1: extensions of the 2-dim irreducible
    let q8 = quaternion();
    let g = Arc::new(q8.direct_product(&cyclic(3)));
    let members: Vec<usize> = (0..8).map(|x| x * 3).collect();
    let h = Subgroup::new(g.clone(), &members).unwrap();
    assert_eq!(h.prime_quotient(), Some(3));
    let irr = monomial_irreps(h.group()).unwrap();
    let tau = irr.iter().find(|r| r.dim() == 2).unwrap();
    let ext = extend_invariant_irrep(tau, &h).unwrap();
    let all = ext.all(&h);
    assert_eq!(all.len(), 3);
    for e in &all {
        assert!(is_irreducible(e));
        assert_eq!(restrict(e, &h).unwrap().character(), tau.character());
    }
}

#[test]
fn decomposition_examples() {
    let g = s3();
    let irr = irreps_by_dim(&g);
    assert_eq!(decompose(&irr[2], &[irr[2].clone()]).unwrap(), vec![1]);
    let reg = GroupRep::regular(g.clone());
    assert_eq!(decompose(&reg, &irr).unwrap(), vec![1, 1, 2]);
    assert_eq!(decompose(&reg, &irr[..2]).unwrap_err(), GroupError::IncompleteConstituents);
}

#[test]
fn klein_four_has_four_characters() {
    let v = Arc::new(klein_four());
    assert_eq!(linear_characters(&v).len(), 4);
}

#[test]
fn three_generator_abelian_group_is_monomial() {
    let g = Arc::new(named_group("C2xC2xC2").unwrap());
    let irr = monomial_irreps(&g).unwrap();
    assert_eq!(irr.len(), 8);
    assert!(irr.iter().all(|r| r.dim() == 1));
}
