//! Cyclotomic field data: Φ_n and the power table ζ_n^k in the power basis.

use num_integer::Integer;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub(crate) struct CycloField {
    pub phi: usize,
    /// `pow[k]` is ζ_n^k written in the basis 1, ζ, …, ζ^{φ-1}; k ranges over 0..n.
    pub pow: Vec<Vec<i64>>,
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<CycloField>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of Φ_n, lowest degree first.
pub(crate) fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_poly(d);
            num = exact_div(&num, &div);
        }
    }
    let p = Arc::new(num);
    poly_cache().write().unwrap().insert(n, p.clone());
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let nn = rem.len() - 1;
    let mut quot = vec![0i64; nn - dn + 1];
    for i in (0..=nn - dn).rev() {
        // den is monic
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub(crate) fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut res = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            res -= res / p;
        }
        p += 1;
    }
    if m > 1 {
        res -= res / m;
    }
    res as usize
}

pub(crate) fn prime_factors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Orders congruent to 2 mod 4 give the same field as n/2; we never store them.
pub(crate) fn canonical_order(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

pub(crate) fn lcm_order(a: u32, b: u32) -> u32 {
    canonical_order(a.lcm(&b))
}

pub(crate) fn field(n: u32) -> Arc<CycloField> {
    debug_assert!(n % 4 != 2);
    if let Some(f) = cache().read().unwrap().get(&n) {
        return f.clone();
    }
    let phi_poly = cyclotomic_poly(n);
    let phi = phi_poly.len() - 1;
    let mut pow = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        pow.push(cur.clone());
        // multiply by x and reduce with the monic Φ_n
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * phi_poly[j];
            }
        }
    }
    let f = Arc::new(CycloField { phi, pow });
    cache().write().unwrap().insert(n, f.clone());
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(*cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(euler_phi(24), 8);
    }

    #[test]
    fn zeta_to_the_n_is_one() {
        let f = field(12);
        // ζ^6 = -1
        let mut m1 = vec![0; 4];
        m1[0] = -1;
        assert_eq!(f.pow[6], m1);
    }
}
