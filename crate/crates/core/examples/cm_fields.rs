//! Splitting of primes in quadratic fields and a search for CM fields splitting a set of primes.

use gsp4_core::patching::{cm_family_search, quadratic_splitting};

fn main() {
    for (d, p) in [(-1, 5), (-1, 3), (-5, 5), (-7, 2)] {
        println!("{} in Q(sqrt {}): {}", p, d, quadratic_splitting(d, p).unwrap());
    }
    let r = cm_family_search(&[3, 5, 7], 200).unwrap();
    println!("fields splitting 3, 5, 7 with |d| <= 200: {:?}", r.fields);
}
