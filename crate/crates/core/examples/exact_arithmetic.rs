//! Cyclotomic scalars, square roots through Gauss sums, and exact Jordan data.

use gsp4_core::exact::{parse_scalar, Matrix};
use gsp4_core::Scalar;
use num_rational::BigRational;

fn main() {
    let q = BigRational::from_integer(5.into());
    let s = parse_scalar("q^{1/2}", Some(&q)).unwrap();
    println!("sqrt(5) = {}  (squared: {})", s, &s * &s);
    let z = Scalar::zeta(12, 1);
    println!("zeta12^3 = {}, order of zeta12 = {}", z.pow(3), z.order());

    let m = Matrix::from_ints(&[[2, 1, 0], [0, 2, 0], [0, 0, 3]]);
    println!("char poly of m: {:?}", m.char_poly().unwrap().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let n = Matrix::from_ints(&[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
    let (partition, _) = n.jordan_data().unwrap();
    println!("Jordan type of n: {:?}", partition);
}
