use super::weights::eigenvalue_weights;
use super::{WDPair, WdError, WeilModel};
use crate::exact::{Matrix, Scalar};
use crate::groups::{restrict, GroupRep, Subgroup};
use std::collections::BTreeMap;

/// Replaces Frobenius by its semisimple part.
///
/// The semisimple part is a polynomial in F: with f the square-free part of the characteristic
/// polynomial, Newton's iteration S ← S − f(S)·f′(S)⁻¹ from S = F reaches it in finitely many
/// steps. No eigenvalues are needed.
pub fn frobenius_semisimplify(w: &WDPair) -> Result<WDPair, WdError> {
    let s = semisimple_part(w.frobenius())?;
    WDPair::new(w.model().clone(), s, w.inertia().clone(), w.monodromy().clone())
}

fn semisimple_part(f: &Matrix) -> Result<Matrix, WdError> {
    let chi = f.char_poly().map_err(|e| WdError::InvalidPair(e.to_string()))?;
    let g = chi.gcd(&chi.derivative());
    let sf = chi.div_rem(&g).0.monic();
    let dsf = sf.derivative();
    let mut s = f.clone();
    // quadratic convergence: the nilpotent error squares each step
    for _ in 0..=f.rows() {
        let val = sf.eval_matrix(&s);
        if val.is_zero() {
            return Ok(s);
        }
        let d = dsf.eval_matrix(&s).inverse().ok_or_else(|| WdError::InvalidPair("f′(S) is singular".into()))?;
        s = &s - &(&val * &d);
    }
    Err(WdError::InvalidPair("Newton iteration for the semisimple part did not terminate".into()))
}

/// The monodromy (weight) filtration of a nilpotent N.
///
/// `basis` has the Jordan chain vectors as columns, sorted by degree; the chain
/// (N^{s−1}h, …, Nh, h) of a block of size s sits in degrees −(s−1), −(s−3), …, s−1.
#[derive(Clone, Debug)]
pub struct MonodromyFiltration {
    basis: Matrix,
    degrees: Vec<i64>,
}

impl MonodromyFiltration {
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Degree of each basis column.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// dim gr_k for every k with gr_k ≠ 0.
    pub fn graded_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    /// Basis of M_k.
    pub fn step(&self, k: i64) -> Vec<Vec<Scalar>> {
        self.columns_where(|d| d <= k)
    }

    /// Basis of a complement of M_{k−1} in M_k, mapping isomorphically onto gr_k.
    pub fn graded(&self, k: i64) -> Vec<Vec<Scalar>> {
        self.columns_where(|d| d == k)
    }

    /// Nonzero steps (k, M_k) from the lowest degree to the highest.
    pub fn steps(&self) -> Vec<(i64, Vec<Vec<Scalar>>)> {
        let (lo, hi) = (self.degrees[0], *self.degrees.last().unwrap());
        (lo..=hi).map(|k| (k, self.step(k))).collect()
    }

    fn columns_where(&self, pred: impl Fn(i64) -> bool) -> Vec<Vec<Scalar>> {
        self.degrees.iter().enumerate().filter(|(_, &d)| pred(d)).map(|(i, _)| self.basis.column(i)).collect()
    }

    fn indices(&self, k: i64) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == k).collect()
    }
}

pub fn monodromy_filtration(n: &Matrix) -> Result<MonodromyFiltration, WdError> {
    if !n.is_square() || !n.is_nilpotent() {
        return Err(WdError::NotNilpotent);
    }
    if n.rows() == 0 {
        return Err(WdError::InvalidPair("empty space".into()));
    }
    let (partition, g) = n.jordan_data().map_err(|_| WdError::NotNilpotent)?;
    let chains = g.inverse().expect("Jordan basis is invertible");
    let mut cols: Vec<(i64, Vec<Scalar>)> = Vec::new();
    let mut off = 0;
    for &s in &partition {
        for k in 0..s {
            cols.push((2 * k as i64 - (s as i64 - 1), chains.column(off + k)));
        }
        off += s;
    }
    cols.sort_by_key(|(d, _)| *d);
    let degrees: Vec<i64> = cols.iter().map(|(d, _)| *d).collect();
    let basis = Matrix::from_columns(&cols.into_iter().map(|(_, c)| c).collect::<Vec<_>>()).expect("square");
    let filt = MonodromyFiltration { basis, degrees };
    verify_filtration(n, &filt)?;
    Ok(filt)
}

fn verify_filtration(n: &Matrix, f: &MonodromyFiltration) -> Result<(), WdError> {
    let binv = f.basis.inverse().ok_or_else(|| WdError::InvalidPair("filtration basis is singular".into()))?;
    let local = &(&binv * n) * &f.basis;
    let dim = n.rows();
    // N·M_k ⊆ M_{k−2}
    for c in 0..dim {
        for r in 0..dim {
            if !local.get(r, c).is_zero() && f.degrees[r] > f.degrees[c] - 2 {
                return Err(WdError::InvalidPair("N does not lower the filtration by two".into()));
            }
        }
    }
    // N^k : gr_k → gr_{−k} bijective
    let top = *f.degrees.last().unwrap();
    for k in 1..=top {
        let src = f.indices(k);
        let dst = f.indices(-k);
        if src.len() != dst.len() {
            return Err(WdError::InvalidPair(format!("dim gr_{} != dim gr_{}", k, -k)));
        }
        if src.is_empty() {
            continue;
        }
        let nk = local.pow(k as u32);
        let block = Matrix::from_rows(dst.iter().map(|&r| src.iter().map(|&c| nk.get(r, c).clone()).collect()).collect())
            .expect("square block");
        if block.rank() != src.len() {
            return Err(WdError::InvalidPair(format!("N^{} is not bijective from gr_{} to gr_{}", k, k, -k)));
        }
    }
    Ok(())
}

/// Whether every Frobenius eigenvalue on gr_k has weight `weight + k`.
pub fn purity_check(w: &WDPair, weight: i64) -> Result<bool, WdError> {
    for (k, ws) in graded_weights(w)? {
        if ws.iter().any(|&j| j != weight + k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Frobenius eigenvalue weights on each graded piece of the monodromy filtration.
pub fn graded_weights(w: &WDPair) -> Result<BTreeMap<i64, Vec<i64>>, WdError> {
    let filt = monodromy_filtration(w.monodromy())?;
    let b = filt.basis();
    let local = &(&b.inverse().expect("invertible") * w.frobenius()) * b;
    let mut out = BTreeMap::new();
    for k in filt.graded_dims().keys() {
        let idx = filt.indices(*k);
        // degrees are sorted, so each graded block is contiguous and F is block triangular
        let block = local.submatrix(idx[0], idx[0], idx.len(), idx.len());
        out.insert(*k, eigenvalue_weights(&block, w.q())?);
    }
    Ok(out)
}

/// A quadratic extension of the local field, seen on the model.
#[derive(Clone, Debug)]
pub enum QuadraticExtension {
    /// Frobenius is replaced by its square, q by q².
    Unramified,
    /// Inertia is replaced by an index-2 subgroup stable under Frobenius (given by its elements).
    Ramified(Vec<usize>),
}

pub fn local_base_change(w: &WDPair, ext: &QuadraticExtension) -> Result<WDPair, WdError> {
    let model = w.model();
    match ext {
        QuadraticExtension::Unramified => {
            let act = model.frobenius_action();
            let squared = act.iter().map(|&x| act[x]).collect();
            let new_model = WeilModel::new(model.inertia().clone(), squared, model.q() * model.q(), model.tame_generator())?;
            let f2 = w.frobenius() * w.frobenius();
            WDPair::new(new_model, f2, w.inertia().clone(), w.monodromy().clone())
        }
        QuadraticExtension::Ramified(members) => {
            let h = Subgroup::new(model.inertia().clone(), members)
                .map_err(|e| WdError::UnsupportedExtension(e.to_string()))?;
            if h.index() != 2 {
                return Err(WdError::UnsupportedExtension(format!("subgroup has index {}", h.index())));
            }
            if members.iter().any(|&x| !h.contains(model.frobenius_action()[x])) {
                return Err(WdError::UnsupportedExtension("subgroup is not stable under Frobenius".into()));
            }
            let action = (0..h.order()).map(|i| h.to_local(model.frobenius_action()[h.to_parent(i)]).unwrap()).collect();
            let tame = model.tame_generator().map(|t| {
                let t = if h.contains(t) { t } else { model.inertia().mul(t, t) };
                h.to_local(t).unwrap()
            });
            let new_model = WeilModel::new(h.group().clone(), action, model.q().clone(), tame)?;
            let rho: GroupRep = restrict(w.inertia(), &h)?;
            WDPair::new(new_model, w.frobenius().clone(), rho, w.monodromy().clone())
        }
    }
}

/// Whether no nontrivial decomposition is stable under F, inertia and N.
///
/// The commutant C of all these operators is local exactly when C/rad(C) is one-dimensional
/// over the algebraic closure; in characteristic 0 that dimension is the rank of the trace
/// form (x, y) ↦ tr(xy) on C.
pub fn is_indecomposable(w: &WDPair) -> bool {
    let mut ops: Vec<Matrix> = vec![w.frobenius().clone(), w.monodromy().clone()];
    for s in w.model().inertia().generators() {
        ops.push(w.inertia().image(s).clone());
    }
    let basis = Matrix::commutant(&ops);
    let k = basis.len();
    let mut gram = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = (&basis[i] * &basis[j]).trace();
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    gram.rank() == 1
}

#[cfg(test)]
mod tests {
    use super::super::{steinberg_parameter, wd_from_parameter, SL2Parameter, SteinbergKind};
    use super::*;
    use crate::groups::{construct, decompose, monomial_irreps};
    use crate::symplectic::OrbitLabel;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use std::sync::Arc;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qs(n: i64, k: i64) -> Scalar {
        Scalar::q_half_power(&q(n), k).unwrap()
    }

    #[test]
    fn filtration_degrees() {
        let zero = monodromy_filtration(&Matrix::zeros(4, 4)).unwrap();
        assert_eq!(zero.graded_dims(), BTreeMap::from([(0, 4)]));
        let reg = monodromy_filtration(&OrbitLabel::N3.representative()).unwrap();
        assert_eq!(reg.graded_dims(), BTreeMap::from([(-3, 1), (-1, 1), (1, 1), (3, 1)]));
        let n1 = monodromy_filtration(&OrbitLabel::N1.representative()).unwrap();
        assert_eq!(n1.graded_dims(), BTreeMap::from([(-1, 1), (0, 2), (1, 1)]));
        assert_eq!(reg.step(-1).len(), 2);
        assert!(monodromy_filtration(&Matrix::identity(2)).is_err());
    }

    #[test]
    fn steinberg_is_pure_after_normalization() {
        let w = steinberg_parameter(SteinbergKind::Gsp4Steinberg, &q(3), &qs(3, 3)).unwrap();
        let f = w.frobenius();
        let eig: Vec<Scalar> = (0..4).map(|i| f.get(i, i).clone()).collect();
        assert_eq!(eig, vec![Scalar::one(), Scalar::from_i64(3), Scalar::from_i64(9), Scalar::from_i64(27)]);
        assert!(purity_check(&w, 3).unwrap());
        assert!(!purity_check(&w, 2).unwrap());
        assert!(is_indecomposable(&w));
    }

    #[test]
    fn unramified_purity() {
        let w = WDPair::unramified(q(5), Matrix::diag(&[qs(5, 2), -qs(5, 2)])).unwrap();
        assert!(purity_check(&w, 2).unwrap());
        let mixed = WDPair::unramified(q(5), Matrix::diag(&[Scalar::one(), Scalar::from_i64(5)])).unwrap();
        for k in -4..6 {
            assert!(!purity_check(&mixed, k).unwrap());
        }
        let bad = WDPair::unramified(q(5), Matrix::diag(&[Scalar::from_i64(2)])).unwrap();
        assert_eq!(purity_check(&bad, 0), Err(WdError::WeightUndeterminable));
    }

    #[test]
    fn semisimplify_unipotent_block() {
        let w = WDPair::unramified(q(7), Matrix::from_ints(&[[1, 1], [0, 1]])).unwrap();
        let s = frobenius_semisimplify(&w).unwrap();
        assert!(s.frobenius().is_identity());
        let w2 = WDPair::unramified(q(7), Matrix::from_ints(&[[2, 1, 0], [0, 2, 0], [0, 0, 3]])).unwrap();
        let s2 = frobenius_semisimplify(&w2).unwrap();
        assert_eq!(*s2.frobenius(), Matrix::from_ints(&[[2, 0, 0], [0, 2, 0], [0, 0, 3]]));
        assert_eq!(frobenius_semisimplify(&s2).unwrap().frobenius(), s2.frobenius());
    }

    #[test]
    fn base_change_unramified_squares() {
        let a = Scalar::from_i64(3);
        let chi = WDPair::unramified_character(q(2), a.clone()).unwrap();
        let e = local_base_change(&chi, &QuadraticExtension::Unramified).unwrap();
        assert_eq!(*e.frobenius().get(0, 0), &a * &a);
        assert_eq!(*e.q(), q(4));

        let st = steinberg_parameter(SteinbergKind::Gsp4Steinberg, &q(3), &Scalar::one()).unwrap();
        let st_e = local_base_change(&st, &QuadraticExtension::Unramified).unwrap();
        let direct = steinberg_parameter(SteinbergKind::Gsp4Steinberg, &q(9), &Scalar::one()).unwrap();
        assert_eq!(st_e.frobenius(), direct.frobenius());
        assert_eq!(st_e.monodromy(), direct.monodromy());
    }

    #[test]
    fn base_change_ramified_splits_induced_type() {
        let s3 = Arc::new(construct::symmetric(3));
        let tau = monomial_irreps(&s3).unwrap().into_iter().find(|r| r.dim() == 2).unwrap();
        let model = WeilModel::split(s3.clone(), q(5)).unwrap();
        let w = WDPair::new(model, Matrix::identity(2), tau, Matrix::zeros(2, 2)).unwrap();
        let a3 = Subgroup::generated(s3.clone(), &[s3.label("c").unwrap()]).unwrap();
        let e = local_base_change(&w, &QuadraticExtension::Ramified(a3.members().to_vec())).unwrap();
        let lin = monomial_irreps(e.model().inertia()).unwrap();
        let mult = decompose(e.inertia(), &lin).unwrap();
        // two distinct characters, each once
        assert_eq!(mult.iter().filter(|&&m| m == 1).count(), 2);
        assert!(mult.iter().all(|&m| m <= 1));
        assert!(!is_indecomposable(&e));
        assert!(is_indecomposable(&w));
    }

    #[test]
    fn decomposable_pairs() {
        let w = WDPair::unramified(q(3), Matrix::diag(&[Scalar::one(), Scalar::from_i64(2)])).unwrap();
        assert!(!is_indecomposable(&w));
        let k = steinberg_parameter(SteinbergKind::KlingenSt, &q(3), &Scalar::one()).unwrap();
        assert!(is_indecomposable(&k));
        let chi = WDPair::unramified_character(q(2), Scalar::one()).unwrap();
        let two = wd_from_parameter(&SL2Parameter::uniform(chi, &[2, 2]).unwrap()).unwrap();
        assert!(!is_indecomposable(&two));
    }
}
