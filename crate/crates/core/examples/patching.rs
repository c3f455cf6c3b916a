//! Patch a representation of D4 from its restrictions to the index-2 subgroups, and compare
//! with brute-force enumeration.

use gsp4_core::groups::{linear_character_exponents, monomial_irreps, named_group, Subgroup};
use gsp4_core::patching::*;
use std::sync::Arc;

fn main() {
    let g = Arc::new(named_group("D4").unwrap());
    let (_, chars) = linear_character_exponents(&g);
    let mut members: Vec<Subgroup> = Vec::new();
    for v in chars {
        let ker: Vec<usize> = g.elements().filter(|&x| v[x] == 0).collect();
        if ker.len() * 2 == g.order() {
            members.push(Subgroup::new(g.clone(), &ker).unwrap());
        }
    }
    let irr = monomial_irreps(&g).unwrap();
    for (i, r) in irr.iter().enumerate() {
        let fam = PatchFamily::from_global(g.clone(), &members, r, vec![]).unwrap();
        let oracle = oracle_characters(&fam, &irr);
        match patch(&fam) {
            Ok(cert) => println!("irrep {}: unique ({:?}), oracle agrees: {}", i, cert.uniqueness, oracle == vec![cert.character]),
            Err(e) => println!("irrep {}: {} (oracle has {} solutions)", i, e, oracle.len()),
        }
    }
}
