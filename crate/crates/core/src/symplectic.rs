//! The symplectic form on a 4-dimensional space, similitudes, and nilpotent orbits in 𝔰𝔭₄
//! up to GSp₄-conjugacy.

use crate::exact::{ExactError, Matrix, Scalar};
use crate::groups::{is_irreducible, GroupRep};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymplecticError {
    #[error("matrix must be 4x4")]
    NotFourByFour,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not in the symplectic Lie algebra")]
    NotInLieAlgebra,
    #[error("not a partition of 4: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("representation is reducible")]
    Reducible,
    #[error("certificate needs a square root outside the tower: {0}")]
    RootOutsideTower(String),
    #[error("internal certificate failure: {0}")]
    Internal(String),
}

impl From<ExactError> for SymplecticError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::NotNilpotent => SymplecticError::NotNilpotent,
            other => SymplecticError::Internal(other.to_string()),
        }
    }
}

/// The fixed form ω(x, y) = xᵀJy with J = [[0, S], [−S, 0]], S = [[0, 1], [1, 0]].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    j: Matrix,
}

impl Default for SymplecticForm {
    fn default() -> Self {
        SymplecticForm::standard()
    }
}

impl SymplecticForm {
    pub fn standard() -> SymplecticForm {
        SymplecticForm { j: Matrix::from_ints(&[[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.j
    }

    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        x.iter().zip(self.j.mul_vec(y)).map(|(a, b)| a * &b).sum()
    }
}

pub fn form_matrix() -> Matrix {
    SymplecticForm::standard().j
}

fn omega(x: &[Scalar], y: &[Scalar]) -> Scalar {
    SymplecticForm::standard().pair(x, y)
}

/// c with gᵀJg = c·J, or `None` when g is not a symplectic similitude.
pub fn similitude(g: &Matrix) -> Result<Option<Scalar>, SymplecticError> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(SymplecticError::NotFourByFour);
    }
    if g.det()?.is_zero() {
        return Err(SymplecticError::Singular);
    }
    let j = form_matrix();
    let m = &(&g.transpose() * &j) * g;
    let c = m.get(0, 3).clone();
    Ok(if m == j.scale(&c) { Some(c) } else { None })
}

/// True iff J·N is symmetric.
pub fn in_lie_algebra(n: &Matrix) -> bool {
    if n.rows() != 4 || n.cols() != 4 {
        return false;
    }
    let jn = &form_matrix() * n;
    jn == jn.transpose()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OrbitLabel {
    N0,
    N1,
    N2,
    N3,
}

impl OrbitLabel {
    pub const ALL: [OrbitLabel; 4] = [OrbitLabel::N0, OrbitLabel::N1, OrbitLabel::N2, OrbitLabel::N3];

    pub fn rank(self) -> usize {
        self as usize
    }

    pub fn from_rank(r: usize) -> Option<OrbitLabel> {
        OrbitLabel::ALL.get(r).copied()
    }

    /// gl₄ Jordan type of the orbit.
    pub fn partition(self) -> Vec<usize> {
        match self {
            OrbitLabel::N0 => vec![1, 1, 1, 1],
            OrbitLabel::N1 => vec![2, 1, 1],
            OrbitLabel::N2 => vec![2, 2],
            OrbitLabel::N3 => vec![4],
        }
    }

    pub fn from_partition(p: &[usize]) -> Option<OrbitLabel> {
        OrbitLabel::ALL.into_iter().find(|l| l.partition() == p)
    }

    /// The stored representative: 0, E23, E12 − E34, E12 + E23 − E34.
    pub fn representative(self) -> Matrix {
        let e = |i, j| Matrix::e(4, i, j);
        match self {
            OrbitLabel::N0 => Matrix::zeros(4, 4),
            OrbitLabel::N1 => e(2, 3),
            OrbitLabel::N2 => &e(1, 2) - &e(3, 4),
            OrbitLabel::N3 => &(&e(1, 2) + &e(2, 3)) - &e(3, 4),
        }
    }

    pub fn orbit(self) -> NilpotentOrbit {
        NilpotentOrbit { label: self, representative: self.representative(), partition: self.partition(), rank: self.rank() }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl std::str::FromStr for OrbitLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "N0" => Ok(OrbitLabel::N0),
            "N1" => Ok(OrbitLabel::N1),
            "N2" => Ok(OrbitLabel::N2),
            "N3" => Ok(OrbitLabel::N3),
            _ => Err(format!("unknown orbit label {:?}", s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentOrbit {
    pub label: OrbitLabel,
    pub representative: Matrix,
    pub partition: Vec<usize>,
    pub rank: usize,
}

/// The root vector at (1,4).
pub fn n1_prime() -> Matrix {
    Matrix::e(4, 1, 4)
}

/// E14 + E23.
pub fn n2_prime() -> Matrix {
    &Matrix::e(4, 1, 4) + &Matrix::e(4, 2, 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub orbit: OrbitLabel,
    /// g ∈ GSp₄ with g·N·g⁻¹ equal to the representative.
    pub conjugator: Matrix,
    pub similitude: Scalar,
}

/// Orbit label and a verified conjugator into the stored representative.
pub fn classify_nilpotent(n: &Matrix) -> Result<Classification, SymplecticError> {
    if n.rows() != 4 || n.cols() != 4 {
        return Err(SymplecticError::NotFourByFour);
    }
    if !n.is_nilpotent() {
        return Err(SymplecticError::NotNilpotent);
    }
    if !in_lie_algebra(n) {
        return Err(SymplecticError::NotInLieAlgebra);
    }
    let orbit = OrbitLabel::from_rank(n.rank()).expect("nilpotent 4x4 has rank at most 3");
    let v = match orbit {
        OrbitLabel::N0 => Matrix::identity(4),
        OrbitLabel::N1 => basis_n1(n)?,
        OrbitLabel::N2 => basis_n2(n)?,
        OrbitLabel::N3 => basis_n3(n)?,
    };
    let g = v.inverse().ok_or_else(|| SymplecticError::Internal("adapted basis is singular".into()))?;
    let gi = v;
    if &(&g * n) * &gi != orbit.representative() {
        return Err(SymplecticError::Internal("conjugator does not reach the representative".into()));
    }
    let c = similitude(&g)?.ok_or_else(|| SymplecticError::Internal("conjugator is not a similitude".into()))?;
    Ok(Classification { orbit, conjugator: g, similitude: c })
}

fn unit(i: usize) -> Vec<Scalar> {
    (0..4).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect()
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

fn neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

fn candidates() -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = (0..4).map(unit).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            out.push(add(&unit(i), &unit(j)));
        }
    }
    out
}

/// Columns v with N·v₂ = v₁, N·v₃ = v₂, N·v₄ = −v₃, N·v₁ = 0 and ω(vᵢ, vⱼ) = c·J_{ij}.
fn basis_n3(n: &Matrix) -> Result<Matrix, SymplecticError> {
    let n3 = n.pow(3);
    let w = candidates()
        .into_iter()
        .find(|w| !omega(&n3.mul_vec(w), w).is_zero())
        .ok_or_else(|| SymplecticError::Internal("no vector with ω(N³w, w) ≠ 0".into()))?;
    let b3 = omega(&n3.mul_vec(&w), &w);
    let b1 = omega(&n.mul_vec(&w), &w);
    // w ← w + t·N²w kills ω(Nw, w)
    let t = -(&b1 / &(&Scalar::from_i64(2) * &b3));
    let w = add(&w, &scale(&n.pow(2).mul_vec(&w), &t));
    let v4 = w;
    let v3 = neg(&n.mul_vec(&v4));
    let v2 = n.mul_vec(&v3);
    let v1 = n.mul_vec(&v2);
    Ok(Matrix::from_columns(&[v1, v2, v3, v4])?)
}

/// Columns with N·v₂ = v₁, N·v₄ = −v₃, N·v₁ = N·v₃ = 0.
fn basis_n2(n: &Matrix) -> Result<Matrix, SymplecticError> {
    let beta = |x: &[Scalar], y: &[Scalar]| omega(&n.mul_vec(x), y);
    // complement of ker N spanned by standard vectors
    let kernel = n.nullspace();
    let mut span = kernel.clone();
    let mut comp: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..4 {
        span.push(unit(i));
        if Matrix::from_columns(&span)?.rank() == span.len() {
            comp.push(unit(i));
        } else {
            span.pop();
        }
    }
    let (u1, u2) = (&comp[0], &comp[1]);
    let (a, b, d) = (beta(u1, u1), beta(u1, u2), beta(u2, u2));
    let (x, y) = if a.is_zero() {
        // u1 is isotropic; u2 + s·u1 with d + 2bs = 0
        let s = -(&d / &(&Scalar::from_i64(2) * &b));
        (u1.clone(), add(u2, &scale(u1, &s)))
    } else {
        // roots of a·s² + 2b·s + d
        let disc = &(&b * &b) - &(&a * &d);
        let r = disc.sqrt().ok_or_else(|| SymplecticError::RootOutsideTower(disc.to_string()))?;
        let s1 = &(&(-&b) + &r) / &a;
        let s2 = &(&(-&b) - &r) / &a;
        (add(&scale(u1, &s1), u2), add(&scale(u1, &s2), u2))
    };
    let c = beta(&x, &y);
    let mut v2 = x;
    let v4 = y;
    let v1 = n.mul_vec(&v2);
    let v3 = neg(&n.mul_vec(&v4));
    let t = -(&omega(&v2, &v4) / &c);
    v2 = add(&v2, &scale(&v1, &t));
    Ok(Matrix::from_columns(&[v1, v2, v3, v4])?)
}

/// Columns with N·v₃ = v₂ and N killing v₁, v₂, v₄.
fn basis_n1(n: &Matrix) -> Result<Matrix, SymplecticError> {
    let v3 = (0..4)
        .map(unit)
        .find(|e| n.mul_vec(e).iter().any(|x| !x.is_zero()))
        .ok_or_else(|| SymplecticError::Internal("rank one matrix kills every basis vector".into()))?;
    let v2 = n.mul_vec(&v3);
    let c = omega(&v2, &v3);
    let j = form_matrix();
    let constraints = Matrix::from_rows(vec![j.transpose().mul_vec(&v2), j.transpose().mul_vec(&v3)])?;
    let perp = constraints.nullspace();
    let (p1, p2) = (&perp[0], &perp[1]);
    let k = omega(p1, p2);
    let v4 = scale(p2, &(&c / &k));
    Ok(Matrix::from_columns(&[p1.clone(), v2, v3, v4])?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionVerdict {
    pub partition: Vec<usize>,
    pub symplectic: bool,
    pub orbit: Option<OrbitLabel>,
    /// X ∈ GL₄ with X·J_λ·X⁻¹ equal to the orbit representative.
    pub certificate: Option<Matrix>,
}

/// Whether a nilpotent of gl₄-type λ can be conjugated into 𝔰𝔭₄: odd parts must occur with
/// even multiplicity; a positive answer comes with a conjugator.
pub fn symplectic_partition_test(lambda: &[usize]) -> Result<PartitionVerdict, SymplecticError> {
    if lambda.iter().sum::<usize>() != 4 || lambda.iter().any(|&x| x == 0) {
        return Err(SymplecticError::NotAPartition(lambda.to_vec()));
    }
    let mut p = lambda.to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    let criterion = (1..=4).filter(|k| k % 2 == 1).all(|k| p.iter().filter(|&&x| x == k).count() % 2 == 0);
    if !criterion {
        return Ok(PartitionVerdict { partition: p, symplectic: false, orbit: None, certificate: None });
    }
    let orbit = OrbitLabel::from_partition(&p)
        .ok_or_else(|| SymplecticError::Internal(format!("criterion accepts {:?} but no orbit has that type", p)))?;
    let rep = orbit.representative();
    let (q, g) = rep.jordan_data()?;
    if q != p {
        return Err(SymplecticError::Internal(format!("representative has type {:?}, expected {:?}", q, p)));
    }
    let x = g.inverse().ok_or_else(|| SymplecticError::Internal("singular Jordan basis".into()))?;
    let conj = &(&x * &Matrix::jordan_form(&p)) * &g;
    if conj != rep || !in_lie_algebra(&conj) {
        return Err(SymplecticError::Internal("certificate does not land in the Lie algebra".into()));
    }
    Ok(PartitionVerdict { partition: p, symplectic: true, orbit: Some(orbit), certificate: Some(x) })
}

/// True iff only scalar matrices commute with every given matrix.
pub fn centralizer_is_scalar(images: &[Matrix]) -> bool {
    !images.is_empty() && Matrix::commutant(images).len() == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormType {
    Orthogonal,
    Symplectic,
    None,
}

/// Type of the invariant bilinear form of an irreducible representation,
/// via the Frobenius–Schur indicator.
pub fn bilinear_form_type(r: &GroupRep) -> Result<FormType, SymplecticError> {
    if !is_irreducible(r) {
        return Err(SymplecticError::Reducible);
    }
    let chi = r.character();
    if chi.iter().any(|v| v.conj() != *v) {
        return Ok(FormType::None);
    }
    let g = r.group();
    let total: Scalar = g.elements().map(|x| chi[g.mul(x, x)].clone()).sum();
    let ind = &total / &Scalar::from_i64(g.order() as i64);
    match ind.as_i64() {
        Some(1) => Ok(FormType::Orthogonal),
        Some(-1) => Ok(FormType::Symplectic),
        _ => Err(SymplecticError::Internal(format!("Frobenius–Schur indicator {} for a self-dual irreducible", ind))),
    }
}

/// Root-group generators of Sp₄: nilpotent X ∈ 𝔰𝔭₄ with X² = 0, so exp(tX) = I + tX.
pub fn root_nilpotents() -> Vec<Matrix> {
    let e = |i, j| Matrix::e(4, i, j);
    vec![
        &e(1, 2) - &e(3, 4),
        e(2, 3),
        e(1, 4),
        &e(1, 3) + &e(2, 4),
        &e(2, 1) - &e(4, 3),
        e(3, 2),
        e(4, 1),
        &e(3, 1) + &e(4, 2),
    ]
}

/// A random element of GSp₄(ℚ): a product of root-group elements, a torus element and
/// possibly J, with small integer parameters.
pub fn random_gsp4<R: Rng>(rng: &mut R, steps: usize) -> Matrix {
    let roots = root_nilpotents();
    let mut g = Matrix::identity(4);
    for _ in 0..steps {
        let x = &roots[rng.gen_range(0..roots.len())];
        let mut t = rng.gen_range(-2i64..=2);
        if t == 0 {
            t = 1;
        }
        g = &g * &(&Matrix::identity(4) + &x.scale(&Scalar::from_i64(t)));
    }
    let pick = |rng: &mut R| [1i64, -1, 2, -2, 3][rng.gen_range(0..5)];
    let (a, b, c) = (pick(rng), pick(rng), pick(rng));
    let torus = Matrix::diag(&[
        Scalar::from_i64(a * b),
        Scalar::from_i64(a),
        Scalar::from_i64(c * b),
        Scalar::from_i64(c),
    ]);
    // x1·x4 = x2·x3 = abc
    g = &g * &torus;
    if rng.gen_bool(0.5) {
        g = &g * &form_matrix();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_invariants() {
        let j = form_matrix();
        assert_eq!(j.transpose(), -&j);
        assert_eq!(&j * &j, -&Matrix::identity(4));
    }

    #[test]
    fn similitude_examples() {
        let a = Scalar::from_i64(3);
        assert_eq!(similitude(&Matrix::scalar(4, &a)).unwrap(), Some(Scalar::from_i64(9)));
        assert_eq!(similitude(&form_matrix()).unwrap(), Some(Scalar::one()));
        assert_eq!(similitude(&Matrix::diag(&[1, 2, 3, 4].map(Scalar::from_i64))).unwrap(), None);
        assert_eq!(similitude(&Matrix::zeros(4, 4)), Err(SymplecticError::Singular));
    }

    #[test]
    fn representatives_are_in_the_lie_algebra() {
        for l in OrbitLabel::ALL {
            let r = l.representative();
            assert!(in_lie_algebra(&r));
            assert_eq!(r.rank(), l.rank());
            assert_eq!(r.jordan_data().unwrap().0, l.partition());
        }
        assert!(!in_lie_algebra(&Matrix::jordan_form(&[3, 1])));
    }

    #[test]
    fn root_vectors() {
        // H = diag(t1, t2, −t2, −t1) with t1 = 5, t2 = 2
        let h = Matrix::diag(&[5, 2, -2, -5].map(Scalar::from_i64));
        let br = |x: &Matrix| &(&h * x) - &(x * &h);
        let n1 = OrbitLabel::N1.representative();
        let n2 = OrbitLabel::N2.representative();
        assert_eq!(br(&n1), n1.scale(&Scalar::from_i64(4)));
        assert_eq!(br(&n2), n2.scale(&Scalar::from_i64(3)));
        assert_eq!(&n1 + &n2, OrbitLabel::N3.representative());
    }

    #[test]
    fn classify_examples() {
        let c = classify_nilpotent(&Matrix::zeros(4, 4)).unwrap();
        assert_eq!(c.orbit, OrbitLabel::N0);
        assert!(c.conjugator.is_identity());
        assert_eq!(classify_nilpotent(&n1_prime()).unwrap().orbit, OrbitLabel::N1);
        assert_eq!(classify_nilpotent(&n2_prime()).unwrap().orbit, OrbitLabel::N2);
        assert_eq!(classify_nilpotent(&Matrix::jordan_form(&[3, 1])), Err(SymplecticError::NotInLieAlgebra));
        assert_eq!(classify_nilpotent(&Matrix::identity(4)), Err(SymplecticError::NotNilpotent));
    }

    #[test]
    fn partition_examples() {
        assert!(symplectic_partition_test(&[1, 1, 1, 1]).unwrap().symplectic);
        assert!(!symplectic_partition_test(&[3, 1]).unwrap().symplectic);
        let v = symplectic_partition_test(&[2, 2]).unwrap();
        assert_eq!(v.orbit, Some(OrbitLabel::N2));
        assert!(symplectic_partition_test(&[2, 1]).is_err());
    }

    #[test]
    fn centralizer_examples() {
        assert!(!centralizer_is_scalar(&[Matrix::identity(4)]));
        let d = Matrix::diag(&[1, 2, 3, 4].map(Scalar::from_i64));
        let p = Matrix::from_ints(&[[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
        assert!(centralizer_is_scalar(&[d, p]));
    }
}
