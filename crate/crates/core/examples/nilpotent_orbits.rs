//! Conjugate each orbit representative at random and classify it back with a certificate.

use gsp4_core::symplectic::{classify_nilpotent, random_gsp4, symplectic_partition_test, OrbitLabel};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for label in OrbitLabel::ALL {
        let g = random_gsp4(&mut rng, 5);
        let n = &(&g * &label.representative()) * &g.inverse().unwrap();
        let c = classify_nilpotent(&n).unwrap();
        println!("{}: classified as {} (rank {}, similitude of certificate {})", label, c.orbit, c.orbit.rank(), c.similitude);
    }
    for p in [vec![3, 1], vec![2, 2]] {
        let v = symplectic_partition_test(&p).unwrap();
        println!("partition {:?}: symplectic = {}", p, v.symplectic);
    }
}
