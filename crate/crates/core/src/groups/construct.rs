//! Standard small groups.

use super::{FiniteGroup, GroupError};
use std::collections::{BTreeMap, HashMap};

/// ℤ/n with element k ↔ a^k.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let mut labels = BTreeMap::new();
    if n > 1 {
        labels.insert("a".to_string(), 1);
    }
    FiniteGroup::from_table_bounded(table, usize::MAX).unwrap().with_labels(labels).unwrap()
}

/// Group generated by permutations of {0..d-1}; (στ)(x) = σ(τ(x)).
/// Element 0 is the identity; the rest appear in breadth-first order from the generators.
pub fn from_permutations(gens: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let d = gens.first().map_or(0, |g| g.len());
    for g in gens {
        let mut s = g.clone();
        s.sort_unstable();
        if g.len() != d || s != (0..d).collect::<Vec<_>>() {
            return Err(GroupError::InvalidTable("generators must be permutations of one set".into()));
        }
    }
    let id: Vec<usize> = (0..d).collect();
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(id, 0);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p: Vec<usize> = (0..d).map(|x| elems[i][g[x]]).collect();
            if !index.contains_key(&p) {
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        i += 1;
        if elems.len() > 100_000 {
            return Err(GroupError::TooLarge { order: elems.len(), bound: 100_000 });
        }
    }
    let table = elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| index[&(0..d).map(|x| a[b[x]]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    let g = FiniteGroup::from_table_bounded(table, usize::MAX)?;
    let mut labels = BTreeMap::new();
    for (k, gen) in gens.iter().enumerate() {
        labels.insert(format!("g{}", k + 1), index[gen]);
    }
    g.with_labels(labels)
}

/// Symmetric group on n letters, generated by (0 1) and (0 1 … n-1).
pub fn symmetric(n: usize) -> FiniteGroup {
    if n <= 1 {
        return cyclic(1);
    }
    let mut t: Vec<usize> = (0..n).collect();
    t.swap(0, 1);
    let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut g = from_permutations(&[t, c]).unwrap();
    let labels = BTreeMap::from([("s".to_string(), g.label("g1").unwrap()), ("c".to_string(), g.label("g2").unwrap())]);
    g = g.with_labels(labels).unwrap();
    g
}

pub fn alternating4() -> FiniteGroup {
    from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap()
}

/// Dihedral group of order 2n: rotation r and reflection s.
pub fn dihedral(n: usize) -> FiniteGroup {
    let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let g = from_permutations(&[r, s]).unwrap();
    let labels = BTreeMap::from([("r".to_string(), g.label("g1").unwrap()), ("s".to_string(), g.label("g2").unwrap())]);
    g.with_labels(labels).unwrap()
}

/// Quaternion group of order 8 with generators i, j.
pub fn quaternion() -> FiniteGroup {
    // regular representation on {±1, ±i, ±j, ±k} indexed 1,-1,i,-i,j,-j,k,-k
    let mul = |a: usize, b: usize| -> usize {
        // unit index u (0=1,1=i,2=j,3=k) and sign
        let (ua, sa) = (a / 2, a % 2);
        let (ub, sb) = (b / 2, b % 2);
        let (u, s) = match (ua, ub) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (x, y) if x == y => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        };
        2 * u + (s + sa + sb) % 2
    };
    let table = (0..8).map(|a| (0..8).map(|b| mul(a, b)).collect()).collect();
    let labels = BTreeMap::from([("i".to_string(), 2), ("j".to_string(), 4)]);
    FiniteGroup::from_table(table).unwrap().with_labels(labels).unwrap()
}

pub fn klein_four() -> FiniteGroup {
    cyclic(2).direct_product(&cyclic(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(alternating4().order(), 12);
        assert!(!quaternion().is_abelian());
        assert!(klein_four().is_abelian());
        assert_eq!(quaternion().exponent(), 4);
        assert_eq!(klein_four().exponent(), 2);
        assert!(symmetric(4).is_solvable());
    }

    #[test]
    fn class_counts() {
        assert_eq!(symmetric(3).conjugacy_classes().len(), 3);
        assert_eq!(quaternion().conjugacy_classes().len(), 5);
        assert_eq!(symmetric(4).conjugacy_classes().len(), 5);
    }

    #[test]
    fn rejects_non_group() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 2]]).is_err());
    }
}
