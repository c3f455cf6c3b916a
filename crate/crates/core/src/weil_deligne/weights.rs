//! Weights of Frobenius eigenvalues without computing the eigenvalues.
//!
//! For a triangular block the eigenvalues are on the diagonal. Otherwise the characteristic
//! polynomial is pushed down to ℚ by multiplying its Galois conjugates, its roots are squared,
//! and for each candidate weight j the polynomial with roots λ²/q^j is stripped of cyclotomic
//! factors; the degree removed counts the eigenvalues of weight j.

use super::WdError;
use crate::exact::{cyclotomic_poly, euler_phi, rational_pow, Matrix, Poly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Multiset of q-weights of the eigenvalues of a square block, sorted.
pub fn eigenvalue_weights(block: &Matrix, q: &BigRational) -> Result<Vec<i64>, WdError> {
    if block.rows() == 0 {
        return Ok(vec![]);
    }
    if q == &BigRational::one() || !q.is_positive() {
        return Err(WdError::WeightUndeterminable);
    }
    let mut out = if block.is_upper_triangular() {
        (0..block.rows())
            .map(|i| block.get(i, i).q_weight(q).ok_or(WdError::WeightUndeterminable))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        weights_from_char_poly(block, q)?
    };
    out.sort_unstable();
    Ok(out)
}

type QPoly = Vec<BigRational>;

fn weights_from_char_poly(block: &Matrix, q: &BigRational) -> Result<Vec<i64>, WdError> {
    let p = block.char_poly().map_err(|_| WdError::WeightUndeterminable)?;
    let n = p.coeffs().iter().fold(1u32, |acc, c| acc.lcm(&c.minimal().order()));
    let norm = norm_down(&p, n)?;
    let copies = euler_phi(n);
    let sq = squared_roots(&norm);
    let deg = sq.len() - 1;
    if sq[0].is_zero() {
        return Err(WdError::WeightUndeterminable);
    }
    let (lo, hi) = weight_range(&sq, q);
    let mut out = Vec::new();
    let mut found = 0;
    for j in lo..=hi {
        let scaled = rescale(&sq, &rational_pow(q, j));
        let c = unit_root_count(scaled);
        if c % copies != 0 {
            return Err(WdError::WeightUndeterminable);
        }
        found += c;
        out.extend(std::iter::repeat(j).take(c / copies));
    }
    if found != deg {
        return Err(WdError::WeightUndeterminable);
    }
    Ok(out)
}

/// Π over Gal(ℚ(ζ_n)/ℚ) of the conjugates of p, as a rational polynomial.
fn norm_down(p: &Poly, n: u32) -> Result<QPoly, WdError> {
    let mut acc = Poly::one();
    for a in (1..=n).filter(|a| a.gcd(&n) == 1) {
        let conj = Poly::new(p.coeffs().iter().map(|c| c.minimal().galois(a as u64)).collect());
        acc = acc.mul(&conj);
    }
    acc.coeffs().iter().map(|c| c.as_rational().ok_or(WdError::WeightUndeterminable)).collect()
}

/// Monic polynomial whose roots are the squares of the roots of p (p monic).
fn squared_roots(p: &QPoly) -> QPoly {
    let d = p.len() - 1;
    let neg: QPoly = p.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    let prod = qmul(p, &neg);
    let sign = if d % 2 == 1 { -BigRational::one() } else { BigRational::one() };
    (0..=d).map(|i| &prod[2 * i] * &sign).collect()
}

/// Bounds on j with q^j = |λ²| from Cauchy's bound on the roots and on their inverses.
fn weight_range(p: &QPoly, q: &BigRational) -> (i64, i64) {
    let cauchy = |c: &[BigRational]| {
        let lead = c.last().unwrap().abs();
        BigRational::one() + c[..c.len() - 1].iter().map(|x| x.abs() / &lead).fold(BigRational::zero(), |a, b| a.max(b))
    };
    let upper = cauchy(p);
    let rev: QPoly = p.iter().rev().cloned().collect();
    let lower = cauchy(&rev);
    let qq = if q > &BigRational::one() { q.clone() } else { q.recip() };
    let log_ceil = |r: &BigRational| {
        let mut k = 0i64;
        let mut acc = BigRational::one();
        while &acc < r {
            acc *= &qq;
            k += 1;
        }
        k
    };
    let (a, b) = (log_ceil(&upper), log_ceil(&lower));
    if q > &BigRational::one() {
        (-b, a)
    } else {
        (-a, b)
    }
}

/// Monic polynomial with roots λ/s.
fn rescale(p: &QPoly, s: &BigRational) -> QPoly {
    let d = p.len() - 1;
    let mut pow = BigRational::one();
    let mut out = vec![BigRational::zero(); d + 1];
    for i in 0..=d {
        out[i] = &p[i] * &pow;
        pow *= s;
    }
    // now the coefficient of x^i carries s^i; divide through by s^d
    let lead = out[d].clone();
    out.iter().map(|c| c / &lead).collect()
}

/// Number of roots (with multiplicity) that are roots of unity.
fn unit_root_count(mut p: QPoly) -> usize {
    let d = p.len() - 1;
    let mut count = 0;
    let mut m = 1u32;
    // φ(m) ≥ √(m/2), so m ≤ 2d² covers every cyclotomic factor of degree ≤ d
    let limit = (2 * d * d).max(2) as u32;
    while m <= limit && p.len() > 1 {
        if euler_phi(m) <= p.len() - 1 {
            let phi: QPoly = cyclotomic_poly(m).iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
            while let Some(quot) = qdiv_exact(&p, &phi) {
                p = quot;
                count += phi.len() - 1;
            }
        }
        m += 1;
    }
    count
}

fn qmul(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// a / b when b (monic) divides a exactly.
fn qdiv_exact(a: &QPoly, b: &QPoly) -> Option<QPoly> {
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let db = b.len() - 1;
    let mut quot = vec![BigRational::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            rem[i + j] -= &c * y;
        }
        quot[i] = c;
    }
    rem.iter().all(|x| x.is_zero()).then_some(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn diagonal_weights() {
        let m = Matrix::diag(&[Scalar::one(), Scalar::from_i64(9), -Scalar::from_i64(3)]);
        assert_eq!(eigenvalue_weights(&m, &q(3)).unwrap(), vec![0, 2, 4]);
    }

    #[test]
    fn companion_of_x2_minus_q() {
        // eigenvalues ±√5, weight 1 each
        let m = Matrix::from_ints(&[[0, 1], [5, 0]]);
        assert_eq!(eigenvalue_weights(&m, &q(5)).unwrap(), vec![1, 1]);
    }

    #[test]
    fn rotation_times_q() {
        // q·(order-3 rotation): weight 2 twice
        let m = Matrix::from_ints(&[[0, -7], [7, -7]]);
        assert_eq!(eigenvalue_weights(&m, &q(7)).unwrap(), vec![2, 2]);
    }

    #[test]
    fn cyclotomic_entries() {
        let i = Scalar::i();
        let m = Matrix::from_rows(vec![vec![Scalar::zero(), i.clone()], vec![Scalar::from_i64(4) * i, Scalar::zero()]]).unwrap();
        // λ² = -4, so |λ|² = 4 = 2²
        assert_eq!(eigenvalue_weights(&m, &q(2)).unwrap(), vec![2, 2]);
    }

    #[test]
    fn non_monomial_is_reported() {
        // eigenvalues (1 ± √5)/2
        let m = Matrix::from_ints(&[[0, 1], [1, 1]]);
        assert_eq!(eigenvalue_weights(&m, &q(3)), Err(WdError::WeightUndeterminable));
        assert_eq!(eigenvalue_weights(&Matrix::diag(&[Scalar::from_i64(2)]), &q(3)), Err(WdError::WeightUndeterminable));
    }
}
