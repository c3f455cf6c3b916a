//! Splitting of rational primes in ℚ(√d), and the search for imaginary quadratic fields in
//! which a given finite set of primes splits.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl std::fmt::Display for Splitting {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Splitting::Split => "split",
            Splitting::Inert => "inert",
            Splitting::Ramified => "ramified",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error("{0} is not a nonzero square-free integer")]
    NotSquareFree(i64),
    #[error("{0} is not prime")]
    NotPrime(i64),
}

pub fn is_prime(p: i64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub fn is_square_free(d: i64) -> bool {
    let a = d.unsigned_abs();
    d != 0 && (2..).take_while(|k: &u64| k * k <= a).all(|k| a % (k * k) != 0)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// The splitting type of p in ℚ(√d).
pub fn quadratic_splitting(d: i64, p: i64) -> Result<Splitting, SplitError> {
    if !is_square_free(d) {
        return Err(SplitError::NotSquareFree(d));
    }
    if !is_prime(p) {
        return Err(SplitError::NotPrime(p));
    }
    if p == 2 {
        return Ok(match d.rem_euclid(8) {
            1 => Splitting::Split,
            2 | 3 | 6 | 7 => Splitting::Ramified,
            _ => Splitting::Inert,
        });
    }
    let r = d.rem_euclid(p) as u64;
    if r == 0 {
        return Ok(Splitting::Ramified);
    }
    // Euler's criterion
    Ok(if pow_mod(r, (p as u64 - 1) / 2, p as u64) == 1 { Splitting::Split } else { Splitting::Inert })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmSearch {
    pub primes: Vec<i64>,
    pub bound: i64,
    /// Negative square-free d, |d| ≤ bound, with every prime split in ℚ(√d); decreasing.
    pub fields: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hint: Option<String>,
}

pub fn cm_family_search(primes: &[i64], bound: i64) -> Result<CmSearch, SplitError> {
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(SplitError::NotPrime(p));
    }
    let mut fields = Vec::new();
    for a in 1..=bound.max(0) {
        let d = -a;
        if !is_square_free(d) {
            continue;
        }
        if primes.iter().all(|&p| quadratic_splitting(d, p) == Ok(Splitting::Split)) {
            fields.push(d);
        }
    }
    let hint = fields.is_empty().then(|| "no field below the bound; Dirichlet guarantees one for a larger bound".to_string());
    Ok(CmSearch { primes: primes.to_vec(), bound, fields, hint })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(quadratic_splitting(-1, 5), Ok(Splitting::Split));
        assert_eq!(quadratic_splitting(-1, 3), Ok(Splitting::Inert));
        assert_eq!(quadratic_splitting(-5, 5), Ok(Splitting::Ramified));
        assert_eq!(quadratic_splitting(-7, 2), Ok(Splitting::Split));
        assert_eq!(quadratic_splitting(-1, 2), Ok(Splitting::Ramified));
        assert_eq!(quadratic_splitting(5, 2), Ok(Splitting::Inert));
        assert!(quadratic_splitting(12, 5).is_err());
        assert!(quadratic_splitting(3, 9).is_err());
    }

    #[test]
    fn searches() {
        assert!(cm_family_search(&[5], 30).unwrap().fields.contains(&-1));
        let all = cm_family_search(&[], 10).unwrap().fields;
        assert_eq!(all, vec![-1, -2, -3, -5, -6, -7, -10]);
        let r = cm_family_search(&[3, 5], 100).unwrap();
        assert!(!r.fields.is_empty());
        for d in r.fields {
            assert_eq!(quadratic_splitting(d, 3), Ok(Splitting::Split));
            assert_eq!(quadratic_splitting(d, 5), Ok(Splitting::Split));
        }
        assert!(cm_family_search(&[3, 5, 7, 11], 5).unwrap().hint.is_some());
    }
}
