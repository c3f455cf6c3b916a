//! Artin and Swan conductor exponents of a representation of a finite inertia quotient with a
//! given chain of ramification subgroups, and the conductor/depth relation.

use crate::exact::Scalar;
use crate::groups::{FiniteGroup, GroupError, GroupRep, Subgroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConductorError {
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("filtration and representation live on different groups")]
    MismatchedGroups,
    #[error("conductor exponent {f} is below the dimension {n}")]
    ConductorBelowDimension { f: i64, n: i64 },
    #[error("representation has {0} dimensions of invariants under the inertia quotient")]
    InvariantsPresent(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A descending chain Ĩ₀ ⊇ Ĩ₁ ⊇ … ⊇ Ĩ_m = {1} with Ĩ₀ the whole group.
#[derive(Clone, Debug)]
pub struct RamificationFiltration {
    group: Arc<FiniteGroup>,
    chain: Vec<Subgroup>,
    genuine: bool,
}

impl RamificationFiltration {
    /// `chain[i]` lists the elements of Ĩᵢ. Consecutive terms may coincide. When `genuine` is
    /// set the chain is claimed to come from a local field, and conductors are expected integral.
    pub fn new(group: Arc<FiniteGroup>, chain: &[Vec<usize>], genuine: bool) -> Result<RamificationFiltration, ConductorError> {
        if chain.is_empty() {
            return Err(ConductorError::InvalidFiltration("empty chain".into()));
        }
        let subs = chain
            .iter()
            .map(|m| Subgroup::new(group.clone(), m))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| ConductorError::InvalidFiltration(e.to_string()))?;
        if subs[0].order() != group.order() {
            return Err(ConductorError::InvalidFiltration("Ĩ₀ must be the whole group".into()));
        }
        if subs.last().unwrap().order() != 1 {
            return Err(ConductorError::InvalidFiltration("chain must end at the trivial group".into()));
        }
        for w in subs.windows(2) {
            if !w[1].is_subset_of(&w[0]) {
                return Err(ConductorError::InvalidFiltration("chain is not descending".into()));
            }
        }
        Ok(RamificationFiltration { group, chain: subs, genuine })
    }

    /// Ĩ₀ = G, Ĩ₁ = … = Ĩ_{m} = P, then {1}: the shape of a filtration with wild part P
    /// and all jumps at m.
    pub fn with_wild_part(group: Arc<FiniteGroup>, wild: &[usize], m: usize) -> Result<RamificationFiltration, ConductorError> {
        let mut chain = vec![group.elements().collect::<Vec<_>>()];
        chain.extend(std::iter::repeat(wild.to_vec()).take(m));
        chain.push(vec![group.identity()]);
        RamificationFiltration::new(group, &chain, false)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn chain(&self) -> &[Subgroup] {
        &self.chain
    }

    pub fn is_genuine(&self) -> bool {
        self.genuine
    }

    /// [Ĩ₀ : Ĩᵢ].
    pub fn indices(&self) -> Vec<usize> {
        self.chain.iter().map(|s| s.index()).collect()
    }
}

/// dim V − dim V^H, from the character.
pub fn invariant_codim(r: &GroupRep, h: &Subgroup) -> usize {
    let sum: Scalar = h.members().iter().map(|&g| r.character()[g].clone()).sum();
    let fixed = (sum / Scalar::from_i64(h.order() as i64)).as_i64().expect("invariant dimension is an integer");
    r.dim() - fixed as usize
}

fn check(r: &GroupRep, filt: &RamificationFiltration) -> Result<(), ConductorError> {
    if Arc::ptr_eq(r.group(), &filt.group) || **r.group() == *filt.group {
        Ok(())
    } else {
        Err(ConductorError::MismatchedGroups)
    }
}

fn conductor_sum(r: &GroupRep, filt: &RamificationFiltration, start: usize) -> BigRational {
    filt.chain
        .iter()
        .skip(start)
        .map(|h| BigRational::new(BigInt::from(invariant_codim(r, h)), BigInt::from(h.index())))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Σ_{i ≥ 0} codim(V^{Ĩᵢ}) / [Ĩ₀ : Ĩᵢ].
pub fn artin_conductor(r: &GroupRep, filt: &RamificationFiltration) -> Result<BigRational, ConductorError> {
    check(r, filt)?;
    Ok(conductor_sum(r, filt, 0))
}

/// The same sum from i = 1.
pub fn swan_conductor(r: &GroupRep, filt: &RamificationFiltration) -> Result<BigRational, ConductorError> {
    check(r, filt)?;
    Ok(conductor_sum(r, filt, 1))
}

/// depth = (f − n)/n.
pub fn depth_from_conductor(f: i64, n: i64) -> Result<BigRational, ConductorError> {
    if n <= 0 || f < n {
        return Err(ConductorError::ConductorBelowDimension { f, n });
    }
    Ok(BigRational::new(BigInt::from(f - n), BigInt::from(n)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwanDepthReport {
    pub dim: usize,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub artin: BigRational,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub swan: BigRational,
    /// swan / dim.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub depth: BigRational,
    /// Whether swan = dim·depth_from_conductor(artin, dim).
    pub consistent: bool,
    /// Whether both conductors are integers; expected when the filtration is genuine.
    pub integral: bool,
    pub genuine_filtration: bool,
}

/// For r without inertia invariants: artin = swan + dim, so swan = dim·depth.
pub fn swan_depth_identity(r: &GroupRep, filt: &RamificationFiltration) -> Result<SwanDepthReport, ConductorError> {
    check(r, filt)?;
    let fixed = r.dim() - invariant_codim(r, &filt.chain[0]);
    if fixed != 0 {
        return Err(ConductorError::InvariantsPresent(fixed));
    }
    let n = r.dim() as i64;
    let artin = artin_conductor(r, filt)?;
    let swan = swan_conductor(r, filt)?;
    let nn = BigRational::from_integer(BigInt::from(n));
    let depth = &swan / &nn;
    let consistent = if artin.is_integer() {
        let f: i64 = artin.to_integer().try_into().unwrap_or(i64::MAX);
        depth_from_conductor(f, n).map(|d| d * &nn == swan).unwrap_or(false)
    } else {
        &artin - &nn == swan
    };
    Ok(SwanDepthReport {
        dim: r.dim(),
        integral: artin.is_integer() && swan.is_integer(),
        artin,
        swan,
        depth,
        consistent,
        genuine_filtration: filt.genuine,
    })
}

/// Whether a one-dimensional r is trivial on Ĩ₁.
pub fn is_tame_character(r: &GroupRep, filt: &RamificationFiltration) -> bool {
    filt.chain.get(1).map_or(true, |h| h.members().iter().all(|&g| r.image(g).is_identity()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Matrix;
    use crate::groups::construct;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn sign4() -> (GroupRep, RamificationFiltration) {
        let g = Arc::new(construct::cyclic(2));
        let r = GroupRep::from_generators(g.clone(), &[(1, Matrix::scalar(4, &-Scalar::one()))]).unwrap();
        let f = RamificationFiltration::new(g, &[vec![0, 1], vec![0]], true).unwrap();
        (r, f)
    }

    fn wild3() -> (GroupRep, RamificationFiltration) {
        let g = Arc::new(construct::cyclic(3));
        let w = Scalar::zeta(3, 1);
        let m = Matrix::diag(&[w.clone(), w.clone(), w.pow(2), w.pow(2)]);
        let r = GroupRep::from_generators(g.clone(), &[(1, m)]).unwrap();
        let f = RamificationFiltration::new(g, &[vec![0, 1, 2], vec![0, 1, 2], vec![0]], true).unwrap();
        (r, f)
    }

    #[test]
    fn worked_examples() {
        let (r, f) = sign4();
        assert_eq!(artin_conductor(&r, &f).unwrap(), int(4));
        assert_eq!(swan_conductor(&r, &f).unwrap(), int(0));
        let (r, f) = wild3();
        assert_eq!(artin_conductor(&r, &f).unwrap(), int(8));
        assert_eq!(swan_conductor(&r, &f).unwrap(), int(4));
        let triv = GroupRep::trivial(f.group().clone(), 3);
        assert_eq!(artin_conductor(&triv, &f).unwrap(), int(0));
    }

    #[test]
    fn depth() {
        assert_eq!(depth_from_conductor(4, 4).unwrap(), int(0));
        assert_eq!(depth_from_conductor(8, 4).unwrap(), int(1));
        assert_eq!(depth_from_conductor(6, 4).unwrap(), BigRational::new(1.into(), 2.into()));
        assert!(depth_from_conductor(3, 4).is_err());
    }

    #[test]
    fn swan_depth_reports() {
        let (r, f) = sign4();
        let rep = swan_depth_identity(&r, &f).unwrap();
        assert_eq!((rep.swan.clone(), rep.depth.clone(), rep.consistent), (int(0), int(0), true));
        let (r, f) = wild3();
        let rep = swan_depth_identity(&r, &f).unwrap();
        assert_eq!((rep.swan.clone(), rep.depth.clone(), rep.consistent), (int(4), int(1), true));
        let triv = GroupRep::trivial(f.group().clone(), 2);
        assert_eq!(swan_depth_identity(&triv, &f), Err(ConductorError::InvariantsPresent(2)));
    }

    #[test]
    fn bad_chains() {
        let g = Arc::new(construct::cyclic(4));
        assert!(RamificationFiltration::new(g.clone(), &[vec![0, 2], vec![0]], false).is_err());
        assert!(RamificationFiltration::new(g.clone(), &[vec![0, 1, 2, 3], vec![0, 2]], false).is_err());
        assert!(RamificationFiltration::new(g.clone(), &[vec![0, 1, 2, 3], vec![0, 1], vec![0]], false).is_err());
        let other = Arc::new(construct::cyclic(2));
        let f = RamificationFiltration::new(g, &[vec![0, 1, 2, 3], vec![0]], false).unwrap();
        assert_eq!(artin_conductor(&GroupRep::trivial(other, 1), &f), Err(ConductorError::MismatchedGroups));
    }
}
