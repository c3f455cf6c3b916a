//! Weil–Deligne pairs (r, N) over a model ⟨Frob⟩ ⋉ I with I finite.
//!
//! Frobenius is represented by its matrix only. The relation with the inertia action is
//! F·ρ(σ)·F⁻¹ = ρ(φ(σ)) where φ is the given automorphism of I, and N·F = q·F·N.

mod json;
mod ops;
mod parameter;
mod weights;

pub use json::{Entry, EntryMatrix, InertiaJson, WdPairJson, WeilModelJson};
pub use ops::{
    frobenius_semisimplify, graded_weights, is_indecomposable, local_base_change, monodromy_filtration, purity_check,
    MonodromyFiltration, QuadraticExtension,
};
pub use parameter::{steinberg_parameter, wd_from_parameter, SL2Parameter, SteinbergKind};
pub use weights::eigenvalue_weights;

use crate::exact::{Matrix, Scalar};
use crate::groups::{FiniteGroup, GroupError, GroupRep};
use num_rational::BigRational;
use num_traits::Signed;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WdError {
    #[error("invalid Weil model: {0}")]
    InvalidModel(String),
    #[error("invalid Weil-Deligne pair: {0}")]
    InvalidPair(String),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("square root outside the scalar tower: {0}")]
    RootOutsideTower(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("eigenvalue weight not determinable in the tower")]
    WeightUndeterminable,
    #[error("unsupported extension: {0}")]
    UnsupportedExtension(String),
    #[error("invalid kind: {0}")]
    InvalidKind(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// ⟨Frob⟩ ⋉ I with I finite; `frobenius_action[σ]` is φ(σ).
#[derive(Clone, Debug)]
pub struct WeilModel {
    inertia: Arc<FiniteGroup>,
    frobenius_action: Vec<usize>,
    q: BigRational,
    tame_generator: Option<usize>,
}

impl WeilModel {
    pub fn new(
        inertia: Arc<FiniteGroup>,
        frobenius_action: Vec<usize>,
        q: BigRational,
        tame_generator: Option<usize>,
    ) -> Result<WeilModel, WdError> {
        let n = inertia.order();
        if !q.is_positive() {
            return Err(WdError::InvalidModel("q must be positive".into()));
        }
        if frobenius_action.len() != n {
            return Err(WdError::InvalidModel(format!("action has {} entries for a group of order {}", frobenius_action.len(), n)));
        }
        let mut seen = vec![false; n];
        for &x in &frobenius_action {
            if x >= n || seen[x] {
                return Err(WdError::InvalidModel("action is not a permutation".into()));
            }
            seen[x] = true;
        }
        for a in inertia.elements() {
            for b in inertia.elements() {
                if frobenius_action[inertia.mul(a, b)] != inertia.mul(frobenius_action[a], frobenius_action[b]) {
                    return Err(WdError::InvalidModel("action is not a homomorphism".into()));
                }
            }
        }
        if tame_generator.is_some_and(|t| t >= n) {
            return Err(WdError::InvalidModel("tame generator outside the inertia group".into()));
        }
        Ok(WeilModel { inertia, frobenius_action, q, tame_generator })
    }

    /// Trivial inertia.
    pub fn unramified(q: BigRational) -> Result<WeilModel, WdError> {
        let triv = Arc::new(FiniteGroup::from_table(vec![vec![0]])?);
        WeilModel::new(triv, vec![0], q, None)
    }

    /// Inertia with trivial Frobenius action.
    pub fn split(inertia: Arc<FiniteGroup>, q: BigRational) -> Result<WeilModel, WdError> {
        let action = inertia.elements().collect();
        WeilModel::new(inertia, action, q, None)
    }

    pub fn inertia(&self) -> &Arc<FiniteGroup> {
        &self.inertia
    }

    pub fn frobenius_action(&self) -> &[usize] {
        &self.frobenius_action
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn tame_generator(&self) -> Option<usize> {
        self.tame_generator
    }

    fn same_as(&self, other: &WeilModel) -> bool {
        self.q == other.q
            && self.frobenius_action == other.frobenius_action
            && (Arc::ptr_eq(&self.inertia, &other.inertia) || self.inertia == other.inertia)
    }
}

/// A Weil–Deligne representation on the model.
#[derive(Clone, Debug)]
pub struct WDPair {
    model: WeilModel,
    frobenius: Matrix,
    inertia: GroupRep,
    monodromy: Matrix,
}

impl WDPair {
    pub fn new(model: WeilModel, frobenius: Matrix, inertia: GroupRep, monodromy: Matrix) -> Result<WDPair, WdError> {
        let d = frobenius.rows();
        if !frobenius.is_square() || monodromy.rows() != d || monodromy.cols() != d || inertia.dim() != d {
            return Err(WdError::InvalidPair("dimensions disagree".into()));
        }
        if !(Arc::ptr_eq(inertia.group(), &model.inertia) || **inertia.group() == *model.inertia) {
            return Err(WdError::InvalidPair("inertia representation lives on another group".into()));
        }
        let finv = frobenius.inverse().ok_or_else(|| WdError::InvalidPair("Frobenius is singular".into()))?;
        for s in model.inertia.elements() {
            if &(&frobenius * inertia.image(s)) * &finv != *inertia.image(model.frobenius_action[s]) {
                return Err(WdError::InvalidPair(format!("F·ρ({})·F⁻¹ != ρ(φ({}))", s, s)));
            }
            if inertia.image(s) * &monodromy != &monodromy * inertia.image(s) {
                return Err(WdError::InvalidPair(format!("N does not commute with ρ({})", s)));
            }
        }
        if !monodromy.is_nilpotent() {
            return Err(WdError::NotNilpotent);
        }
        let q = Scalar::from_rational(model.q.clone());
        if &monodromy * &frobenius != (&frobenius * &monodromy).scale(&q) {
            return Err(WdError::InvalidPair("N·F != q·F·N".into()));
        }
        Ok(WDPair { model, frobenius, inertia, monodromy })
    }

    /// N = 0 and trivial inertia, Frobenius acting by the given matrix.
    pub fn unramified(q: BigRational, frobenius: Matrix) -> Result<WDPair, WdError> {
        let model = WeilModel::unramified(q)?;
        let d = frobenius.rows();
        let rho = GroupRep::trivial(model.inertia.clone(), d);
        WDPair::new(model, frobenius, rho, Matrix::zeros(d, d))
    }

    /// The unramified character sending Frobenius to α.
    pub fn unramified_character(q: BigRational, alpha: Scalar) -> Result<WDPair, WdError> {
        WDPair::unramified(q, Matrix::diag(&[alpha]))
    }

    pub fn model(&self) -> &WeilModel {
        &self.model
    }

    pub fn dim(&self) -> usize {
        self.frobenius.rows()
    }

    pub fn frobenius(&self) -> &Matrix {
        &self.frobenius
    }

    pub fn inertia(&self) -> &GroupRep {
        &self.inertia
    }

    pub fn monodromy(&self) -> &Matrix {
        &self.monodromy
    }

    pub fn q(&self) -> &BigRational {
        &self.model.q
    }

    /// exp(N) as the image of the designated tame generator's ℓ-adic coordinate 1.
    pub fn tame_unipotent(&self) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for k in 1..=n {
            term = (&term * &self.monodromy).scale(&Scalar::frac(1, k as i64));
            out = &out + &term;
        }
        out
    }

    pub fn direct_sum(&self, other: &WDPair) -> Result<WDPair, WdError> {
        if !self.model.same_as(&other.model) {
            return Err(WdError::InvalidPair("pairs live on different models".into()));
        }
        WDPair::new(
            self.model.clone(),
            self.frobenius.direct_sum(&other.frobenius),
            self.inertia.direct_sum(&other.inertia)?,
            self.monodromy.direct_sum(&other.monodromy),
        )
    }

    /// Twist by the unramified character Frob ↦ α.
    pub fn twist_unramified(&self, alpha: &Scalar) -> Result<WDPair, WdError> {
        if alpha.is_zero() {
            return Err(WdError::InvalidPair("twist by zero".into()));
        }
        Ok(WDPair { frobenius: self.frobenius.scale(alpha), ..self.clone() })
    }

    /// The same pair written in the basis given by the columns of p.
    pub fn change_basis(&self, p: &Matrix) -> Result<WDPair, WdError> {
        let pinv = p.inverse().ok_or_else(|| WdError::InvalidPair("change of basis is singular".into()))?;
        let conj = |m: &Matrix| &(&pinv * m) * p;
        Ok(WDPair {
            model: self.model.clone(),
            frobenius: conj(&self.frobenius),
            inertia: self.inertia.change_basis(&pinv)?,
            monodromy: conj(&self.monodromy),
        })
    }

    /// Rank of N.
    pub fn monodromy_rank(&self) -> usize {
        self.monodromy.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::construct;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rejects_bad_monodromy_relation() {
        let f = Matrix::diag(&[Scalar::one(), Scalar::one()]);
        let n = Matrix::e(2, 1, 2);
        let model = WeilModel::unramified(q(3)).unwrap();
        let rho = GroupRep::trivial(model.inertia().clone(), 2);
        assert!(matches!(WDPair::new(model, f, rho, n), Err(WdError::InvalidPair(_))));
    }

    #[test]
    fn rejects_non_automorphism() {
        let g = Arc::new(construct::cyclic(3));
        assert!(WeilModel::new(g.clone(), vec![0, 1, 1], q(2), None).is_err());
        assert!(WeilModel::new(g, vec![0, 2, 1], q(2), Some(1)).is_ok());
    }

    #[test]
    fn frobenius_must_normalize_inertia() {
        // φ inverts ℤ/3; Frobenius swapping the two characters of a 2-dim sum realizes it
        let g = Arc::new(construct::cyclic(3));
        let model = WeilModel::new(g.clone(), vec![0, 2, 1], q(2), None).unwrap();
        let w = Scalar::zeta(3, 1);
        let rho = GroupRep::from_generators(g, &[(1, Matrix::diag(&[w.clone(), w.pow(2)]))]).unwrap();
        let swap = Matrix::from_ints(&[[0, 1], [1, 0]]);
        assert!(WDPair::new(model.clone(), swap, rho.clone(), Matrix::zeros(2, 2)).is_ok());
        assert!(WDPair::new(model, Matrix::identity(2), rho, Matrix::zeros(2, 2)).is_err());
    }
}
