#![allow(dead_code)]

use gsp4_core::exact::Matrix;
use gsp4_core::groups::{linear_character_exponents, FiniteGroup, Subgroup};
use gsp4_core::weil_deligne::{wd_from_parameter, SL2Parameter, WDPair};
use gsp4_core::Scalar;
use num_rational::BigRational;
use rand::Rng;
use std::sync::Arc;

/// Kernels of linear characters of prime order, without repeats.
pub fn prime_index_normals(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let (e, chars) = linear_character_exponents(g);
    let mut out: Vec<Subgroup> = Vec::new();
    for v in chars {
        let ker: Vec<usize> = g.elements().filter(|&x| v[x] == 0).collect();
        let index = g.order() / ker.len();
        if index > 1 && gsp4_core::patching::is_prime(index as i64) && e % index == 0 {
            let s = Subgroup::new(g.clone(), &ker).unwrap();
            if !out.iter().any(|t| t.members() == s.members()) {
                out.push(s);
            }
        }
    }
    out
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Partitions of n, largest part first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A random invertible integer matrix: a product of elementary matrices and signs.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let t = rng.gen_range(-2i64..=2);
            let e = &Matrix::identity(n) + &Matrix::e(n, i + 1, j + 1).scale(&Scalar::from_i64(t));
            m = &m * &e;
        }
    }
    m
}

/// A random unramified pair of dimension ≤ 4: a sum of twisted Sym^{d-1} pieces, plus possibly a
/// non-semisimple Frobenius block, seen in a random basis.
pub fn random_pair<R: Rng>(rng: &mut R, qq: i64) -> WDPair {
    let twists = [Scalar::one(), -Scalar::one(), Scalar::from_i64(2), Scalar::frac(1, 3), Scalar::i()];
    let budget = rng.gen_range(1..=4usize);
    let jordan = budget >= 2 && rng.gen_bool(0.4);
    let rest = if jordan { budget - 2 } else { budget };
    let mut comps = Vec::new();
    let mut left = rest;
    while left > 0 {
        let d = rng.gen_range(1..=left);
        let t = twists[rng.gen_range(0..twists.len())].clone();
        comps.push((WDPair::unramified_character(q(qq), t).unwrap(), d));
        left -= d;
    }
    let mut w = if comps.is_empty() { None } else { Some(wd_from_parameter(&SL2Parameter::new(comps).unwrap()).unwrap()) };
    if jordan {
        let a = twists[rng.gen_range(0..twists.len())].clone();
        let block = Matrix::from_rows(vec![vec![a.clone(), Scalar::one()], vec![Scalar::zero(), a]]).unwrap();
        let j = WDPair::unramified(q(qq), block).unwrap();
        w = Some(match w {
            Some(x) => x.direct_sum(&j).unwrap(),
            None => j,
        });
    }
    let w = w.unwrap();
    let p = random_unimodular(rng, w.dim());
    w.change_basis(&p).unwrap()
}
