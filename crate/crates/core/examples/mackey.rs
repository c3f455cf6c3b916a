//! Restriction and induction along the index-2 subgroup A3 of S3.

use gsp4_core::groups::{conjugate_rep, induce, monomial_irreps, named_group, restrict, Subgroup};
use std::sync::Arc;

fn main() {
    let g = Arc::new(named_group("S3").unwrap());
    let h = Subgroup::generated(g.clone(), &[g.label("c").unwrap()]).unwrap();
    let theta = g.elements().find(|&x| !h.contains(x)).unwrap();
    for pi in monomial_irreps(h.group()).unwrap() {
        let ind = induce(&pi, &h).unwrap();
        let back = restrict(&ind, &h).unwrap();
        let expected = pi.direct_sum(&conjugate_rep(&pi, &h, theta).unwrap()).unwrap();
        println!("Ind of a character of A3 has dim {}; Res Ind = pi + pi^theta: {}", ind.dim(), back.is_isomorphic(&expected));
    }
}
