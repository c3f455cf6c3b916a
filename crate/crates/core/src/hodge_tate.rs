//! Weight numerology for GSp(4): archimedean parameters, the descent condition from GL(4),
//! Blattner parameters, Clozel's highest-weight quadruple and Hodge–Tate weight sets.
//!
//! Parameters of the real Weil group are recorded by exponent data: a character
//! z ↦ |z|^s (z/z̄)^a of ℂ^* is the pair (s, a), and j by its matrix.

use crate::exact::Matrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("weights must satisfy μ1 ≥ μ2 ≥ 0 (got {0}, {1})")]
    NotDominant(i64, i64),
    #[error("parity: {0}")]
    Parity(String),
    #[error("need ν1 > ν2 ≥ 1 (got {0}, {1})")]
    NuOrdering(i64, i64),
    #[error("need n ≥ 1 (got {0})")]
    NonPositive(i64),
}

fn half(a: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(2))
}

fn int(a: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(a))
}

/// (μ₁, μ₂, w) with the derived quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightData {
    pub mu1: i64,
    pub mu2: i64,
    pub w: i64,
    pub nu1: i64,
    pub nu2: i64,
    pub delta: i64,
    pub bold_w: i64,
    pub n: i64,
    pub n_prime: i64,
}

impl WeightData {
    pub fn new(mu1: i64, mu2: i64, w: i64) -> Result<WeightData, WeightError> {
        if !(mu1 >= mu2 && mu2 >= 0) {
            return Err(WeightError::NotDominant(mu1, mu2));
        }
        if (mu1 + mu2 - w).is_odd() {
            return Err(WeightError::Parity(format!("μ1 + μ2 = {} and w = {} differ in parity", mu1 + mu2, w)));
        }
        let (nu1, nu2) = (mu1 + 2, mu2 + 1);
        Ok(WeightData {
            mu1,
            mu2,
            w,
            nu1,
            nu2,
            delta: (w - mu1 - mu2) / 2,
            bold_w: w + 3,
            n: nu1 - nu2,
            n_prime: nu1 + nu2,
        })
    }
}

/// {δ, ν₂+δ, ν₁+δ, ν₁+ν₂+δ}, strictly increasing.
pub fn ht_weights(wd: &WeightData) -> [i64; 4] {
    let d = wd.delta;
    [d, wd.nu2 + d, wd.nu1 + d, wd.nu1 + wd.nu2 + d]
}

/// (b+3−(w+n′)/2, b+2−(w+n)/2, b+1−(w−n)/2, b−(w−n′)/2) with w the motivic weight.
pub fn clozel_quadruple(b: i64, bold_w: i64, n: i64, n_prime: i64) -> Result<[i64; 4], WeightError> {
    for (name, v) in [("w+n", bold_w + n), ("w-n", bold_w - n), ("w+n'", bold_w + n_prime), ("w-n'", bold_w - n_prime)] {
        if v.is_odd() {
            return Err(WeightError::Parity(format!("{} = {} is odd", name, v)));
        }
    }
    Ok([
        b + 3 - (bold_w + n_prime) / 2,
        b + 2 - (bold_w + n) / 2,
        b + 1 - (bold_w - n) / 2,
        b - (bold_w - n_prime) / 2,
    ])
}

pub fn is_weakly_increasing(mu: &[i64; 4]) -> bool {
    mu.windows(2).all(|p| p[0] <= p[1])
}

/// Hodge–Tate weights j = i − μ_{4−i}, i = 0..3, of a quadruple μ₁..μ₄.
pub fn ht_from_quadruple(mu: &[i64; 4]) -> [i64; 4] {
    [0 - mu[3], 1 - mu[2], 2 - mu[1], 3 - mu[0]]
}

/// The four weights of the clozel quadruple for this datum, read through j = i − μ_{4−i}.
pub fn composed_weights(wd: &WeightData, b: i64) -> Result<[i64; 4], WeightError> {
    Ok(ht_from_quadruple(&clozel_quadruple(b, wd.bold_w, wd.n, wd.n_prime)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Blattner {
    pub k1: i64,
    pub k2: i64,
    /// k₁ + k₂ − 3.
    pub motivic_weight: i64,
}

pub fn blattner(nu1: i64, nu2: i64) -> Result<Blattner, WeightError> {
    if !(nu1 > nu2 && nu2 >= 1) {
        return Err(WeightError::NuOrdering(nu1, nu2));
    }
    let (k1, k2) = (nu1 + 1, nu2 + 2);
    Ok(Blattner { k1, k2, motivic_weight: k1 + k2 - 3 })
}

/// A character z ↦ z^p z̄^q of ℂ^*.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HodgeType {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub p: BigRational,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub q: BigRational,
}

/// z ↦ |z|^s (z/z̄)^a, written as z^{s/2 + a} z̄^{s/2 − a}.
fn hodge_type(s: &BigRational, a: &BigRational) -> HodgeType {
    let h = s / int(2);
    HodgeType { p: &h + a, q: &h - a }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArchimedeanParameter {
    pub mu0: i64,
    pub nu1: i64,
    pub nu2: i64,
    /// a in (z/z̄)^a on the diagonal: (ν₁+ν₂)/2, (ν₁−ν₂)/2, −(ν₁−ν₂)/2, −(ν₁+ν₂)/2.
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub exponents: Vec<BigRational>,
    /// The common |z|-power μ₀.
    pub norm_power: i64,
    pub j_image: Matrix,
    /// Types of the restriction to ℂ^* after twisting by |·|^{−3}.
    pub twisted_types: Vec<HodgeType>,
    /// The twisted types are distinct integer pairs with p + q = μ₀ − 3, closed under (p, q) ↦ (q, p).
    pub regular_algebraic: bool,
    /// The image lies in the dual of the elliptic endoscopic group (block pattern and equal determinants).
    pub endoscopic: bool,
    /// j² acts as φ(−1) = (−1)^{ν₁+ν₂}.
    pub j_square_consistent: bool,
}

pub fn archimedean_parameter(mu0: i64, nu1: i64, nu2: i64) -> Result<ArchimedeanParameter, WeightError> {
    if !(nu1 > nu2 && nu2 >= 1) {
        return Err(WeightError::NuOrdering(nu1, nu2));
    }
    let exponents = vec![half(nu1 + nu2), half(nu1 - nu2), half(nu2 - nu1), half(-nu1 - nu2)];
    let s = if (mu0 + 1).is_even() { 1 } else { -1 };
    let j = Matrix::from_ints(&[[0, 0, 0, 1], [0, 0, 1, 0], [0, s, 0, 0], [s, 0, 0, 0]]);
    let twisted = int(mu0 - 3);
    let twisted_types: Vec<HodgeType> = exponents.iter().map(|a| hodge_type(&twisted, a)).collect();
    let regular_algebraic = {
        let mut sorted = twisted_types.clone();
        sorted.sort();
        sorted.dedup();
        sorted.len() == 4
            && twisted_types.iter().all(|t| t.p.is_integer() && t.q.is_integer() && &t.p + &t.q == twisted)
            && twisted_types.iter().all(|t| twisted_types.iter().any(|u| u.p == t.q && u.q == t.p))
    };
    // the endoscopic dual: entries only at the outer (1,4) and inner (2,3) 2×2 blocks, equal dets
    let outer = [(0, 0), (0, 3), (3, 0), (3, 3)];
    let inner = [(1, 1), (1, 2), (2, 1), (2, 2)];
    let pattern = (0..4).all(|r| (0..4).all(|c| j.get(r, c).is_zero() || outer.contains(&(r, c)) || inner.contains(&(r, c))));
    let det = |idx: &[(usize, usize); 4]| {
        let e = |k: usize| j.get(idx[k].0, idx[k].1).clone();
        &e(0) * &e(3) - &e(1) * &e(2)
    };
    // on ℂ^* the outer block carries ±(ν₁+ν₂)/2 and the inner ±(ν₁−ν₂)/2, both with determinant |z|^{2μ₀}
    let endoscopic = pattern && det(&outer) == det(&inner) && &exponents[0] + &exponents[3] == exponents[1].clone() + &exponents[2];
    let j2 = &j * &j;
    let sign = if (nu1 + nu2).is_even() { 1 } else { -1 };
    let j_square_consistent = j2 == Matrix::scalar(4, &crate::exact::Scalar::from_i64(sign));
    Ok(ArchimedeanParameter {
        mu0,
        nu1,
        nu2,
        exponents,
        norm_power: mu0,
        j_image: j,
        twisted_types,
        regular_algebraic,
        endoscopic,
        j_square_consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gl2Parameter {
    pub n: i64,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub lambda: BigRational,
    /// n − 1 + 2λ.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub norm_power: BigRational,
    /// ±n/2.
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub exponents: Vec<BigRational>,
    pub j_image: Matrix,
    /// The inducing character z ↦ |z|^{n−1+2λ}(z/z̄)^{n/2} of ℂ^*.
    pub induced_from: HodgeType,
    /// det on ℂ^* is |z|^{det_norm_power}; det(j) = det_j_sign.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub det_norm_power: BigRational,
    pub det_j_sign: i64,
    /// Bounded image, i.e. σ_n(λ) unitary: norm power zero.
    pub bounded: bool,
}

pub fn gl2_parameter(n: i64, lambda: &BigRational) -> Result<Gl2Parameter, WeightError> {
    if n < 1 {
        return Err(WeightError::NonPositive(n));
    }
    let norm_power = int(n - 1) + lambda * int(2);
    let sign = if n.is_even() { 1 } else { -1 };
    let j = Matrix::from_ints(&[[0, 1], [sign, 0]]);
    let det_j = j.det().expect("square").as_i64().expect("integer");
    Ok(Gl2Parameter {
        n,
        lambda: lambda.clone(),
        exponents: vec![half(n), half(-n)],
        j_image: j,
        induced_from: hodge_type(&norm_power, &half(n)),
        det_norm_power: &norm_power * int(2),
        det_j_sign: det_j,
        bounded: norm_power.is_zero(),
        norm_power,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Descent {
    pub descends: bool,
    /// (μ₀, ν₁, ν₂) of the packet when the condition holds.
    pub packet: Option<(i64, i64, i64)>,
}

/// λ − λ′ = (n′ − n)/2 ∈ ℤ₊.
pub fn descent_condition(n: i64, lambda: &BigRational, n_prime: i64, lambda_prime: &BigRational) -> Descent {
    let diff = lambda - lambda_prime;
    let target = half(n_prime - n);
    let ok = n >= 1 && n_prime >= 1 && diff == target && diff.is_integer() && diff.is_positive();
    if !ok {
        return Descent { descends: false, packet: None };
    }
    let mu0 = int(n - 1) + lambda * int(2);
    let packet = mu0.is_integer().then(|| {
        let m: i64 = mu0.to_integer().try_into().expect("small");
        (m, (n_prime + n) / 2, (n_prime - n) / 2)
    });
    Descent { descends: packet.is_some(), packet }
}

/// Exponent data of φ_n(λ) ⊕ φ_{n′}(λ′) when both have the same norm power, sorted decreasing.
pub fn isobaric_exponents(n: i64, lambda: &BigRational, n_prime: i64, lambda_prime: &BigRational) -> Option<(BigRational, Vec<BigRational>)> {
    let a = gl2_parameter(n, lambda).ok()?;
    let b = gl2_parameter(n_prime, lambda_prime).ok()?;
    if a.norm_power != b.norm_power {
        return None;
    }
    let mut e: Vec<BigRational> = a.exponents.into_iter().chain(b.exponents).collect();
    e.sort_by(|x, y| y.cmp(x));
    Some((a.norm_power, e))
}
