//! Artin and Swan conductors over a ramification filtration, and the depth they determine.

use gsp4_core::conductors::*;
use gsp4_core::groups::{named_group, GroupRep};
use gsp4_core::{Matrix, Scalar};
use std::sync::Arc;

fn main() {
    let c3 = Arc::new(named_group("C3").unwrap());
    let w = Scalar::zeta(3, 1);
    let r = GroupRep::from_generators(c3.clone(), &[(1, Matrix::diag(&[w.clone(), w.pow(2)]))]).unwrap();
    for jumps in 1..4 {
        let f = RamificationFiltration::with_wild_part(c3.clone(), &[0, 1, 2], jumps).unwrap();
        let rep = swan_depth_identity(&r, &f).unwrap();
        println!("wild jumps at {}: artin {}, swan {}, depth {}", jumps, rep.artin, rep.swan, rep.depth);
    }
    println!("depth from f = 6, n = 4: {}", depth_from_conductor(6, 4).unwrap());
}
