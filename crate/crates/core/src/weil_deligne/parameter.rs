use super::{WDPair, WdError, WeilModel};
use crate::exact::{Matrix, Scalar};
use crate::groups::{construct, monomial_irreps, GroupRep};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::str::FromStr;
use std::sync::Arc;

/// φ = ⊕ ρᵢ ⊠ S_{dᵢ} with each ρᵢ a representation of the model (N = 0).
#[derive(Clone, Debug)]
pub struct SL2Parameter {
    components: Vec<(WDPair, usize)>,
}

impl SL2Parameter {
    pub fn new(components: Vec<(WDPair, usize)>) -> Result<SL2Parameter, WdError> {
        if components.is_empty() {
            return Err(WdError::MalformedPartition("no components".into()));
        }
        let first = components[0].0.model().clone();
        for (w, d) in &components {
            if *d == 0 {
                return Err(WdError::MalformedPartition("block size 0".into()));
            }
            if !w.monodromy().is_zero() {
                return Err(WdError::MalformedPartition("Weil part must have N = 0".into()));
            }
            if !w.model().same_as(&first) {
                return Err(WdError::MalformedPartition("components live on different models".into()));
            }
        }
        Ok(SL2Parameter { components })
    }

    /// ρ ⊠ S_d for each d in the partition, all sharing one Weil part.
    pub fn uniform(weil_part: WDPair, partition: &[usize]) -> Result<SL2Parameter, WdError> {
        SL2Parameter::new(partition.iter().map(|&d| (weil_part.clone(), d)).collect())
    }

    pub fn components(&self) -> &[(WDPair, usize)] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.iter().map(|(w, d)| w.dim() * d).sum()
    }
}

/// Raising operator of S_d: e_{i+1} ↦ e_i.
fn raising(d: usize) -> Matrix {
    Matrix::jordan_form(&[d])
}

/// Converts φ into (r, N) with r(Frob) = φ(Frob, diag(q^{-1/2}, q^{1/2})) on each S_d.
pub fn wd_from_parameter(phi: &SL2Parameter) -> Result<WDPair, WdError> {
    let mut out: Option<WDPair> = None;
    for (w, d) in phi.components() {
        let q = w.q();
        let mut diag = Vec::with_capacity(*d);
        for i in 0..*d {
            let k = 2 * i as i64 - (*d as i64 - 1);
            diag.push(
                Scalar::q_half_power(q, k).ok_or_else(|| WdError::RootOutsideTower(format!("q^({}/2) for q = {}", k, q)))?,
            );
        }
        let frob = w.frobenius().kron(&Matrix::diag(&diag));
        let images: Vec<Matrix> = w.inertia().images().iter().map(|m| m.kron(&Matrix::identity(*d))).collect();
        let rho = GroupRep::new(w.model().inertia().clone(), images)?;
        let n = Matrix::identity(w.dim()).kron(&raising(*d));
        let block = WDPair::new(w.model().clone(), frob, rho, n)?;
        out = Some(match out {
            None => block,
            Some(acc) => acc.direct_sum(&block)?,
        });
    }
    out.ok_or_else(|| WdError::MalformedPartition("no components".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SteinbergKind {
    Gsp4Steinberg,
    KlingenSt,
}

impl FromStr for SteinbergKind {
    type Err = WdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gsp4_steinberg" => Ok(SteinbergKind::Gsp4Steinberg),
            "klingen_st" => Ok(SteinbergKind::KlingenSt),
            other => Err(WdError::InvalidKind(other.to_string())),
        }
    }
}

/// The Steinberg-type parameters: α ⊠ S₄, and τ ⊠ S₂ with τ the 2-dim irreducible type of S₃
/// (inertia acting through S₃, trivial Frobenius action, Frobenius by α).
///
/// Both are conjugated by diag(1, 1, 1, −1) so that N is 𝒩₃, resp. 𝒩₂.
pub fn steinberg_parameter(kind: SteinbergKind, q: &BigRational, twist: &Scalar) -> Result<WDPair, WdError> {
    if q <= &BigRational::one() {
        return Err(WdError::InvalidModel("q must exceed 1".into()));
    }
    let w = match kind {
        SteinbergKind::Gsp4Steinberg => {
            let chi = WDPair::unramified_character(q.clone(), twist.clone())?;
            wd_from_parameter(&SL2Parameter::uniform(chi, &[4])?)?
        }
        SteinbergKind::KlingenSt => {
            let s3 = Arc::new(construct::symmetric(3));
            let tau = monomial_irreps(&s3)?
                .into_iter()
                .find(|r| r.dim() == 2)
                .expect("S3 has a 2-dimensional irreducible");
            let model = WeilModel::split(s3, q.clone())?;
            let piece = WDPair::new(model, Matrix::scalar(2, twist), tau, Matrix::zeros(2, 2))?;
            wd_from_parameter(&SL2Parameter::uniform(piece, &[2])?)?
        }
    };
    let p = Matrix::diag(&[Scalar::one(), Scalar::one(), Scalar::one(), -Scalar::one()]);
    w.change_basis(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{classify_nilpotent, OrbitLabel};
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn steinberg_eigenvalues_and_rank() {
        let w = steinberg_parameter(SteinbergKind::Gsp4Steinberg, &q(3), &Scalar::one()).unwrap();
        let f = w.frobenius();
        assert!(f.is_diagonal());
        let ks: Vec<i64> = (0..4).map(|i| f.get(i, i).q_weight(&q(3)).unwrap()).collect();
        assert_eq!(ks, vec![-3, -1, 1, 3]);
        assert_eq!(f.get(0, 0), &Scalar::q_half_power(&q(3), -3).unwrap());
        assert_eq!(w.monodromy_rank(), 3);
        assert_eq!(classify_nilpotent(w.monodromy()).unwrap().orbit, OrbitLabel::N3);
        assert_eq!(*w.monodromy(), OrbitLabel::N3.representative());
    }

    #[test]
    fn klingen_has_rank_two() {
        let w = steinberg_parameter(SteinbergKind::KlingenSt, &q(5), &Scalar::one()).unwrap();
        assert_eq!(w.monodromy_rank(), 2);
        assert_eq!(classify_nilpotent(w.monodromy()).unwrap().orbit, OrbitLabel::N2);
    }

    #[test]
    fn all_ones_partition_is_trivial() {
        let chi = WDPair::unramified_character(q(2), Scalar::from_i64(7)).unwrap();
        let w = wd_from_parameter(&SL2Parameter::uniform(chi, &[1, 1, 1]).unwrap()).unwrap();
        assert!(w.monodromy().is_zero());
        assert_eq!(*w.frobenius(), Matrix::scalar(3, &Scalar::from_i64(7)));
    }

    #[test]
    fn twist_scales_frobenius_only() {
        let a = Scalar::from_i64(2);
        let w1 = steinberg_parameter(SteinbergKind::Gsp4Steinberg, &q(3), &Scalar::one()).unwrap();
        let w2 = steinberg_parameter(SteinbergKind::Gsp4Steinberg, &q(3), &a).unwrap();
        assert_eq!(*w2.frobenius(), w1.frobenius().scale(&a));
        assert_eq!(w1.monodromy(), w2.monodromy());
    }

    #[test]
    fn bad_kind() {
        assert!(matches!("siegel".parse::<SteinbergKind>(), Err(WdError::InvalidKind(_))));
    }
}
