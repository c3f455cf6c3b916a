//! A height-2 family on C4 x C2 patched through its index-2 layers.

use gsp4_core::groups::{linear_characters, named_group, GroupRep, Subgroup};
use gsp4_core::patching::{patch_solvable, PatchFamily};
use std::sync::Arc;

fn main() {
    let g = Arc::new(named_group("C4xC2").unwrap());
    let (x, y) = (2, 1);
    let gens = [vec![x], vec![g.mul(x, y)], vec![g.mul(x, x)], vec![y], vec![g.mul(g.mul(x, x), y)]];
    let subs: Vec<Subgroup> = gens.iter().map(|s| Subgroup::generated(g.clone(), s).unwrap()).collect();
    for chi in linear_characters(&g) {
        let rho = GroupRep::linear(g.clone(), &chi).unwrap();
        let fam = PatchFamily::from_global(g.clone(), &subs, &rho, vec![]).unwrap();
        let cert = patch_solvable(&fam, Some(2)).unwrap();
        println!(
            "{:?}: recovered {}, {} layers",
            chi.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            cert.character == chi,
            cert.layers.len()
        );
    }
}
