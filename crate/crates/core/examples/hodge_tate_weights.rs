//! Hodge-Tate weights, Blattner parameters and the GL(4) weight of a few cohomological weights.

use gsp4_core::hodge_tate::*;

fn main() {
    for (mu1, mu2, w) in [(0, 0, 0), (3, 1, 4), (2, 2, 0), (5, 0, 1)] {
        let wd = WeightData::new(mu1, mu2, w).unwrap();
        let bl = blattner(wd.nu1, wd.nu2).unwrap();
        let quad = clozel_quadruple(0, wd.bold_w, wd.n, wd.n_prime).unwrap();
        println!(
            "mu = ({}, {}; {}): HT {:?}, Blattner ({}, {}), quadruple {:?}",
            mu1,
            mu2,
            w,
            ht_weights(&wd),
            bl.k1,
            bl.k2,
            quad
        );
    }
    let p = archimedean_parameter(0, 3, 1).unwrap();
    println!("archimedean exponents: {:?}", p.exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>());
}
