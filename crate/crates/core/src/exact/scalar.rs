//! Exact scalars: elements of a cyclotomic field ℚ(ζ_n), with the square roots of
//! rationals embedded through quadratic Gauss sums.
//!
//! The embedding is fixed by ζ_n ↦ e^{2πi/n}. Values of different orders are combined
//! in ℚ(ζ_lcm). Because √q lives inside a cyclotomic field, half-integral powers of the
//! residue cardinality and character values share one field and never produce zero divisors.

use super::field::{canonical_order, euler_phi, field, lcm_order, prime_factors};
use super::qlin::solve_columns;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Largest prime allowed in the square-free part of a radicand.
pub const MAX_SQRT_PRIME: u64 = 400;

#[derive(Clone)]
pub struct Scalar {
    n: u32,
    c: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Scalar {
    fn from_parts(n: u32, c: Vec<BigRational>) -> Scalar {
        if n > 1 && c[1..].iter().all(|x| x.is_zero()) {
            let c0 = c.into_iter().next().unwrap();
            return Scalar { n: 1, c: vec![c0] };
        }
        Scalar { n, c }
    }

    pub fn zero() -> Scalar {
        Scalar { n: 1, c: vec![BigRational::zero()] }
    }

    pub fn one() -> Scalar {
        Scalar { n: 1, c: vec![BigRational::one()] }
    }

    pub fn from_i64(v: i64) -> Scalar {
        Scalar { n: 1, c: vec![rat(v)] }
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar { n: 1, c: vec![r] }
    }

    pub fn frac(num: i64, den: i64) -> Scalar {
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ_n^k.
    pub fn zeta(n: u32, k: i64) -> Scalar {
        assert!(n > 0, "root of unity of order 0");
        if n % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
            let m = n / 2;
            let e = k.rem_euclid(n as i64);
            let base = Scalar::zeta(m, e * ((m as i64 + 1) / 2));
            return if e % 2 == 0 { base } else { -base };
        }
        let f = field(n);
        let k = k.rem_euclid(n as i64) as usize;
        Scalar::from_parts(n, f.pow[k].iter().map(|&v| rat(v)).collect())
    }

    /// The imaginary unit ζ_4.
    pub fn i() -> Scalar {
        Scalar::zeta(4, 1)
    }

    /// The order of the cyclotomic field the value is currently stored in.
    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_one())
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|v| v.to_i64())
    }

    fn lift(&self, to: u32) -> Vec<BigRational> {
        if to == self.n {
            return self.c.clone();
        }
        let f = field(to);
        let step = (to / self.n) as usize;
        let mut out = vec![BigRational::zero(); f.phi];
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(f.pow[j * step].iter()) {
                if p != 0 {
                    *o += cj * rat(p);
                }
            }
        }
        out
    }

    fn apply_exponent_map(&self, a: u64) -> Scalar {
        if self.n == 1 {
            return self.clone();
        }
        let f = field(self.n);
        let n = self.n as u64;
        let mut out = vec![BigRational::zero(); f.phi];
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let e = ((j as u64) * a % n) as usize;
            for (o, &p) in out.iter_mut().zip(f.pow[e].iter()) {
                if p != 0 {
                    *o += cj * rat(p);
                }
            }
        }
        Scalar::from_parts(self.n, out)
    }

    /// Complex conjugate: ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Scalar {
        if self.n == 1 {
            return self.clone();
        }
        self.apply_exponent_map(self.n as u64 - 1)
    }

    /// The Galois automorphism ζ_n ↦ ζ_n^a of the field the value lives in (gcd(a, n) = 1).
    pub fn galois(&self, a: u64) -> Scalar {
        self.apply_exponent_map(a)
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        if self.n == 1 {
            return Some(Scalar::from_rational(self.c[0].recip()));
        }
        // solve (multiplication by self) · y = 1
        let phi = self.c.len();
        let cols: Vec<Vec<BigRational>> = (0..phi)
            .map(|j| (self * &Scalar::zeta(self.n, j as i64)).lift(self.n))
            .collect();
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let y = solve_columns(&cols, &rhs).expect("nonzero element of a field is invertible");
        Some(Scalar::from_parts(self.n, y))
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let mut base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The same value stored in the smallest cyclotomic field containing it.
    pub fn minimal(&self) -> Scalar {
        let mut cur = self.clone();
        'outer: loop {
            if cur.n == 1 {
                return cur;
            }
            for p in prime_factors(cur.n) {
                let m = canonical_order(cur.n / p);
                if let Some(s) = cur.descend(m) {
                    cur = s;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    fn descend(&self, m: u32) -> Option<Scalar> {
        let n = self.n as u64;
        // Gal(ℚ(ζ_n)/ℚ(ζ_m)) = {a : a ≡ 1 mod m, gcd(a, n) = 1}
        let mut a = 1 + m as u64;
        while a < n + m as u64 {
            let a_red = a % n;
            if a_red != 1 && a_red.gcd(&n) == 1 && self.galois(a_red) != *self {
                return None;
            }
            a += m as u64;
        }
        let phi_m = euler_phi(m);
        let cols: Vec<Vec<BigRational>> = (0..phi_m).map(|j| Scalar::zeta(m, j as i64).lift(self.n)).collect();
        let y = solve_columns(&cols, &self.c)?;
        Some(Scalar::from_parts(m, y))
    }

    /// √r for a rational r, realized in a cyclotomic field via Gauss sums.
    /// Returns `None` when the square-free part of r has a prime factor above
    /// [`MAX_SQRT_PRIME`] or does not fit in 64 bits.
    pub fn sqrt_rational(r: &BigRational) -> Option<Scalar> {
        if r.is_zero() {
            return Some(Scalar::zero());
        }
        let neg = r.is_negative();
        let r = r.abs();
        // √(a/b) = √(ab)/b
        let m = (r.numer() * r.denom()).to_u64()?;
        let den = Scalar::from_rational(BigRational::from_integer(r.denom().clone()));
        let (sq, free) = square_free_split(m)?;
        let mut root = Scalar::from_i64(sq as i64);
        for p in prime_factors(free as u32) {
            root = &root * &sqrt_prime(p as u64);
        }
        root = &root / &den;
        if neg {
            root = &root * &Scalar::i();
        }
        Some(root)
    }

    /// Square root of a scalar that is a rational times a root of unity.
    pub fn sqrt(&self) -> Option<Scalar> {
        if let Some(r) = self.as_rational() {
            return Scalar::sqrt_rational(&r);
        }
        // x = r·ζ with r rational: r² = x·x̄ up to sign choice
        let norm = (self * &self.conj()).as_rational()?;
        let r = rational_sqrt_exact(&norm)?;
        let unit = self / &Scalar::from_rational(r.clone());
        let (l, k) = unit.root_of_unity()?;
        let half = Scalar::zeta(2 * l, k as i64);
        let rr = Scalar::sqrt_rational(&r)?;
        Some(&rr * &half)
    }

    /// Some(ℓ, k) with the value equal to ζ_ℓ^k (k coprime to ℓ when k ≠ 0), if it is a root of unity.
    pub fn root_of_unity(&self) -> Option<(u32, u32)> {
        if !(self * &self.conj()).is_one() {
            return None;
        }
        let s = self.minimal();
        let l = s.n.lcm(&2);
        for k in 0..l {
            if Scalar::zeta(l, k as i64) == s {
                let g = k.gcd(&l).max(1);
                return Some(if k == 0 { (1, 0) } else { (l / g, k / g) });
            }
        }
        None
    }

    /// q^{k/2} for a positive rational q.
    pub fn q_half_power(q: &BigRational, k: i64) -> Option<Scalar> {
        let a = k.div_euclid(2);
        let base = Scalar::from_rational(rational_pow(q, a));
        if k.rem_euclid(2) == 1 {
            Some(&base * &Scalar::sqrt_rational(q)?)
        } else {
            Some(base)
        }
    }

    /// The k with value = (root of unity)·q^{k/2}, if the value has that form.
    pub fn q_weight(&self, q: &BigRational) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let norm = (self * &self.conj()).as_rational()?;
        let k = rational_log(&norm, q)?;
        let unit = self / &Scalar::q_half_power(q, k)?;
        unit.root_of_unity().map(|_| k)
    }

    /// Renders the value as `±ζ·q^{k/2}` or `r·ζ·q^{k/2}` when such a form exists,
    /// falling back to the cyclotomic form.
    pub fn to_string_q(&self, q: &BigRational) -> String {
        if self.as_rational().is_some() || q <= &BigRational::one() {
            return self.to_string();
        }
        let norm = match (self * &self.conj()).as_rational() {
            Some(n) if n.is_positive() => n,
            _ => return self.to_string(),
        };
        let ks = [0i64, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6];
        // prefer a pure q-power over a rational multiple of one
        let exact = rational_log(&norm, q).into_iter();
        for k in exact.chain(ks) {
            let ratio = &norm / rational_pow(q, k);
            let Some(r) = rational_sqrt_exact(&ratio) else { continue };
            let Some(qk) = Scalar::q_half_power(q, k) else { continue };
            let unit = self / &(&qk * &Scalar::from_rational(r.clone()));
            let Some((l, j)) = unit.root_of_unity() else { continue };
            let mut parts: Vec<String> = Vec::new();
            let mut sign = "";
            let mut rr = r;
            let root = match (l, j) {
                (1, _) => None,
                (2, 1) => {
                    sign = "-";
                    None
                }
                _ => Some(format!("z{}^{}", l, j)),
            };
            if rr.is_negative() {
                rr = -rr;
            }
            if !rr.is_one() {
                parts.push(rr.to_string());
            }
            if let Some(z) = root {
                parts.push(z);
            }
            if k != 0 {
                if k % 2 == 0 {
                    parts.push(format!("q^{{{}}}", k / 2));
                } else {
                    parts.push(format!("q^{{{}/2}}", k));
                }
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            return format!("{}{}", sign, parts.join("*"));
        }
        self.to_string()
    }
}

pub(crate) fn rational_pow(q: &BigRational, e: i64) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        out *= q;
    }
    if e < 0 {
        out.recip()
    } else {
        out
    }
}

/// k with q^k = x, for q > 0, q ≠ 1.
fn rational_log(x: &BigRational, q: &BigRational) -> Option<i64> {
    if !x.is_positive() || q.is_one() || !q.is_positive() {
        return None;
    }
    let one = BigRational::one();
    if q < &one {
        return rational_log(x, &q.recip()).map(|k| -k);
    }
    let (mut v, mut k) = (x.clone(), 0i64);
    if v >= one {
        while v > one {
            v /= q;
            k += 1;
        }
    } else {
        while v < one {
            v *= q;
            k -= 1;
        }
    }
    if v.is_one() {
        Some(k)
    } else {
        None
    }
}

fn isqrt_u64(m: u64) -> u64 {
    let mut r = (m as f64).sqrt() as u64;
    while r * r > m {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    r
}

fn rational_sqrt_exact(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// m = sq² · free with free square-free.
fn square_free_split(m: u64) -> Option<(u64, u64)> {
    let mut rest = m;
    let mut sq = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        sq *= p.pow(e / 2);
        if e % 2 == 1 {
            if p > MAX_SQRT_PRIME {
                return None;
            }
            free *= p;
        }
        p += 1;
        if p > 1_000_000 {
            // remaining cofactor is either prime or too large to handle
            break;
        }
    }
    if rest > 1 {
        let r = isqrt_u64(rest);
        if r * r == rest {
            sq *= r;
        } else if rest <= MAX_SQRT_PRIME {
            free *= rest;
        } else {
            return None;
        }
    }
    Some((sq, free))
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else if result == 0 {
        0
    } else {
        -1
    }
}

fn sqrt_prime(p: u64) -> Scalar {
    if p == 2 {
        return &Scalar::zeta(8, 1) + &Scalar::zeta(8, -1);
    }
    let mut g = Scalar::zero();
    for a in 1..p {
        let s = legendre(a, p);
        g = &g + &(&Scalar::from_i64(s) * &Scalar::zeta(p as u32, a as i64));
    }
    if p % 4 == 1 {
        g
    } else {
        // g = i√p
        -(&g * &Scalar::i())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let n = lcm_order(self.n, other.n);
        self.lift(n) == other.lift(n)
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let m = self.minimal();
        m.n.hash(state);
        m.c.hash(state);
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order on canonical forms; it carries no arithmetic meaning.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (a, b) = (self.minimal(), other.minimal());
        a.n.cmp(&b.n).then_with(|| a.c.cmp(&b.c))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.n == rhs.n {
            let c = self.c.iter().zip(rhs.c.iter()).map(|(a, b)| a + b).collect();
            return Scalar::from_parts(self.n, c);
        }
        let n = lcm_order(self.n, rhs.n);
        let c = self.lift(n).into_iter().zip(rhs.lift(n)).map(|(a, b)| a + b).collect();
        Scalar::from_parts(n, c)
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.n == 1 {
            let k = &self.c[0];
            return Scalar::from_parts(rhs.n, rhs.c.iter().map(|x| x * k).collect());
        }
        if rhs.n == 1 {
            let k = &rhs.c[0];
            return Scalar::from_parts(self.n, self.c.iter().map(|x| x * k).collect());
        }
        let n = lcm_order(self.n, rhs.n);
        let (a, b) = (self.lift(n), rhs.lift(n));
        let f = field(n);
        let mut conv = vec![BigRational::zero(); 2 * f.phi - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    conv[i + j] += ai * bj;
                }
            }
        }
        let mut out: Vec<BigRational> = conv[..f.phi].to_vec();
        for (e, ce) in conv.iter().enumerate().skip(f.phi) {
            if ce.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(f.pow[e % n as usize].iter()) {
                if p != 0 {
                    *o += ce * rat(p);
                }
            }
        }
        Scalar::from_parts(n, out)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Scalar {
        Scalar::from_rational(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimal();
        if m.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, cj) in m.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let neg = cj.is_negative();
            let a = cj.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "z{}^{}", m.n, j)?;
            } else {
                write!(f, "{}*z{}^{}", a, m.n, j)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => super::parse::parse_scalar(&s, None).map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(Scalar::from_i64)
                .ok_or_else(|| serde::de::Error::custom("only integer JSON numbers are accepted as scalars")),
            _ => Err(serde::de::Error::custom("scalar must be a string or integer")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        rat(n)
    }

    #[test]
    fn roots_of_unity_basics() {
        let z = Scalar::zeta(3, 1);
        assert_eq!(z.pow(3), Scalar::one());
        assert_eq!(&(&z + &z.pow(2)) + &Scalar::one(), Scalar::zero());
        assert_eq!(Scalar::zeta(6, 3), Scalar::from_i64(-1));
        assert_eq!(Scalar::zeta(12, 4), Scalar::zeta(3, 1));
        assert_eq!(Scalar::zeta(12, 4).minimal().order(), 3);
    }

    #[test]
    fn gauss_sum_square_roots() {
        for p in [2i64, 3, 5, 7, 11, 13, 6, 10, 15] {
            let s = Scalar::sqrt_rational(&q(p)).unwrap();
            assert_eq!(&s * &s, Scalar::from_i64(p), "sqrt {}", p);
            // the embedded root is the positive one: it is fixed by conjugation
            assert_eq!(s.conj(), s);
        }
        let s = Scalar::sqrt_rational(&BigRational::new(BigInt::from(3), BigInt::from(4))).unwrap();
        assert_eq!(&s * &s, Scalar::frac(3, 4));
        let m = Scalar::sqrt_rational(&q(-3)).unwrap();
        assert_eq!(&m * &m, Scalar::from_i64(-3));
    }

    #[test]
    fn sqrt_three_lives_in_q_zeta_12() {
        let s = Scalar::sqrt_rational(&q(3)).unwrap();
        assert_eq!(s.minimal().order(), 12);
        // √3 = ζ12 + ζ12^{-1}
        assert_eq!(s, &Scalar::zeta(12, 1) + &Scalar::zeta(12, -1));
    }

    #[test]
    fn inverse_in_cyclotomic_field() {
        let a = &Scalar::zeta(5, 1) + &Scalar::from_i64(2);
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, Scalar::one());
    }

    #[test]
    fn weights() {
        let three = q(3);
        let x = Scalar::q_half_power(&three, 3).unwrap();
        assert_eq!(x.q_weight(&three), Some(3));
        let y = &x * &Scalar::zeta(7, 2);
        assert_eq!(y.q_weight(&three), Some(3));
        assert_eq!(Scalar::from_i64(2).q_weight(&three), None);
        assert_eq!(y.to_string_q(&three), "z7^2*q^{3/2}");
        assert_eq!((-x).to_string_q(&three), "-q^{3/2}");
    }

    #[test]
    fn root_of_unity_detection() {
        assert_eq!(Scalar::zeta(12, 5).root_of_unity(), Some((12, 5)));
        assert_eq!(Scalar::from_i64(-1).root_of_unity(), Some((2, 1)));
        assert_eq!(Scalar::from_i64(2).root_of_unity(), None);
    }

    #[test]
    fn display_minimal_form() {
        assert_eq!(Scalar::frac(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::zeta(4, 1).to_string(), "z4^1");
        let s = Scalar::sqrt_rational(&q(2)).unwrap();
        assert_eq!(s.to_string(), "z8^1 - z8^3");
    }
}
