use super::group::same_group;
use super::{FiniteGroup, GroupError, Subgroup};
use crate::exact::{Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// A matrix representation of a finite group with its character cached.
#[derive(Clone, Debug)]
pub struct GroupRep {
    group: Arc<FiniteGroup>,
    dim: usize,
    images: Vec<Matrix>,
    character: Vec<Scalar>,
}

impl GroupRep {
    /// Builds a representation from one image per element, checking the homomorphism
    /// property on a generating set against every element.
    pub fn new(group: Arc<FiniteGroup>, images: Vec<Matrix>) -> Result<GroupRep, GroupError> {
        if images.len() != group.order() {
            return Err(GroupError::InvalidRep(format!("{} images for a group of order {}", images.len(), group.order())));
        }
        let dim = images[0].rows();
        if images.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(GroupError::InvalidRep("images must be square of one size".into()));
        }
        if !images[group.identity()].is_identity() {
            return Err(GroupError::InvalidRep("identity must map to the identity matrix".into()));
        }
        for s in group.generators() {
            for h in group.elements() {
                if &images[s] * &images[h] != images[group.mul(s, h)] {
                    return Err(GroupError::InvalidRep(format!("image({}·{}) != image({})·image({})", s, h, s, h)));
                }
            }
        }
        Ok(GroupRep::trusted(group, images))
    }

    fn trusted(group: Arc<FiniteGroup>, images: Vec<Matrix>) -> GroupRep {
        let dim = images[0].rows();
        let character = images.iter().map(|m| m.trace()).collect();
        GroupRep { group, dim, images, character }
    }

    /// Extends images given on generators to the whole group.
    pub fn from_generators(group: Arc<FiniteGroup>, gens: &[(usize, Matrix)]) -> Result<GroupRep, GroupError> {
        let dim = gens.first().map_or(1, |(_, m)| m.rows());
        let n = group.order();
        let mut images: Vec<Option<Matrix>> = vec![None; n];
        images[group.identity()] = Some(Matrix::identity(dim));
        let mut stack = vec![group.identity()];
        while let Some(x) = stack.pop() {
            for (g, m) in gens {
                if *g >= n {
                    return Err(GroupError::InvalidRep(format!("generator {} outside the group", g)));
                }
                let y = group.mul(x, *g);
                let img = images[x].as_ref().unwrap().checked_mul(m).map_err(|e| GroupError::InvalidRep(e.to_string()))?;
                match &images[y] {
                    Some(prev) if *prev != img => {
                        return Err(GroupError::InvalidRep("generator images do not define a homomorphism".into()))
                    }
                    Some(_) => {}
                    None => {
                        images[y] = Some(img);
                        stack.push(y);
                    }
                }
            }
        }
        if images.iter().any(|m| m.is_none()) {
            return Err(GroupError::InvalidRep("given elements do not generate the group".into()));
        }
        GroupRep::new(group, images.into_iter().map(|m| m.unwrap()).collect())
    }

    /// One-dimensional representation with the given values.
    pub fn linear(group: Arc<FiniteGroup>, values: &[Scalar]) -> Result<GroupRep, GroupError> {
        let images = values.iter().map(|v| Matrix::diag(std::slice::from_ref(v))).collect();
        GroupRep::new(group, images)
    }

    pub fn trivial(group: Arc<FiniteGroup>, dim: usize) -> GroupRep {
        let images = vec![Matrix::identity(dim); group.order()];
        GroupRep::trusted(group, images)
    }

    pub fn regular(group: Arc<FiniteGroup>) -> GroupRep {
        let n = group.order();
        let images = group
            .elements()
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                for x in 0..n {
                    m.set(group.mul(g, x), x, Scalar::one());
                }
                m
            })
            .collect();
        GroupRep::trusted(group, images)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, g: usize) -> &Matrix {
        &self.images[g]
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    pub fn character(&self) -> &[Scalar] {
        &self.character
    }

    pub fn direct_sum(&self, other: &GroupRep) -> Result<GroupRep, GroupError> {
        self.same(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(GroupRep::trusted(self.group.clone(), images))
    }

    pub fn tensor(&self, other: &GroupRep) -> Result<GroupRep, GroupError> {
        self.same(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a.kron(b)).collect();
        Ok(GroupRep::trusted(self.group.clone(), images))
    }

    /// The contragredient g ↦ ρ(g⁻¹)ᵀ.
    pub fn dual(&self) -> GroupRep {
        let images = self.group.elements().map(|g| self.images[self.group.inv(g)].transpose()).collect();
        GroupRep::trusted(self.group.clone(), images)
    }

    /// Conjugates every image by a fixed invertible matrix: g ↦ P·ρ(g)·P⁻¹.
    pub fn change_basis(&self, p: &Matrix) -> Result<GroupRep, GroupError> {
        let pi = p.inverse().ok_or_else(|| GroupError::InvalidRep("basis change is singular".into()))?;
        let images = self.images.iter().map(|m| &(p * m) * &pi).collect();
        Ok(GroupRep::trusted(self.group.clone(), images))
    }

    pub fn is_isomorphic(&self, other: &GroupRep) -> bool {
        same_group(&self.group, &other.group) && self.character == other.character
    }

    fn same(&self, other: &GroupRep) -> Result<(), GroupError> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(GroupError::MismatchedGroups)
        }
    }

    /// ⟨χ_self, χ_other⟩.
    pub fn inner(&self, other: &GroupRep) -> Result<Scalar, GroupError> {
        self.same(other)?;
        inner_product(&self.group, &self.character, &other.character)
    }
}

/// (1/|G|) Σ χ₁(g)·conj(χ₂(g)).
pub fn inner_product(group: &FiniteGroup, chi1: &[Scalar], chi2: &[Scalar]) -> Result<Scalar, GroupError> {
    if chi1.len() != group.order() || chi2.len() != group.order() {
        return Err(GroupError::MismatchedGroups);
    }
    let mut acc = Scalar::zero();
    for (a, b) in chi1.iter().zip(chi2) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * &b.conj());
        }
    }
    Ok(&acc / &Scalar::from_i64(group.order() as i64))
}

pub fn is_irreducible(r: &GroupRep) -> bool {
    r.inner(r).map_or(false, |v| v.is_one())
}

pub fn restrict(r: &GroupRep, h: &Subgroup) -> Result<GroupRep, GroupError> {
    if !same_group(r.group(), h.parent()) {
        return Err(GroupError::NotASubgroup("subgroup does not live in the representation's group".into()));
    }
    let images = h.members().iter().map(|&m| r.images[m].clone()).collect();
    Ok(GroupRep::trusted(h.group().clone(), images))
}

/// Ind_h^G r, with blocks indexed by the left transversal of h.
pub fn induce(r: &GroupRep, h: &Subgroup) -> Result<GroupRep, GroupError> {
    if !same_group(r.group(), h.group()) {
        return Err(GroupError::NotASubgroup("representation is not defined on the given subgroup".into()));
    }
    let g = h.parent();
    let reps = h.left_transversal();
    let k = reps.len();
    let d = r.dim();
    let images = g
        .elements()
        .map(|x| {
            let mut m = Matrix::zeros(k * d, k * d);
            for (j, &tj) in reps.iter().enumerate() {
                let xt = g.mul(x, tj);
                // x·t_j = t_i·h for a unique i
                for (i, &ti) in reps.iter().enumerate() {
                    if let Some(loc) = h.to_local(g.mul(g.inv(ti), xt)) {
                        let blk = r.image(loc);
                        for a in 0..d {
                            for b in 0..d {
                                m.set(i * d + a, j * d + b, blk.get(a, b).clone());
                            }
                        }
                        break;
                    }
                }
            }
            m
        })
        .collect();
    Ok(GroupRep::trusted(g.clone(), images))
}

/// Character of the induced representation, without building matrices.
pub fn induced_character(chi: &[Scalar], h: &Subgroup) -> Vec<Scalar> {
    let g = h.parent();
    let scale = Scalar::frac(1, h.order() as i64);
    g.elements()
        .map(|x| {
            let mut acc = Scalar::zero();
            for y in g.elements() {
                if let Some(loc) = h.to_local(g.mul(g.mul(g.inv(y), x), y)) {
                    acc += &chi[loc];
                }
            }
            &acc * &scale
        })
        .collect()
}

/// x ↦ r(g⁻¹·x·g) on a normal subgroup.
pub fn conjugate_rep(r: &GroupRep, h: &Subgroup, g: usize) -> Result<GroupRep, GroupError> {
    if !same_group(r.group(), h.group()) {
        return Err(GroupError::NotASubgroup("representation is not defined on the given subgroup".into()));
    }
    if !h.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let p = h.parent();
    if g >= p.order() {
        return Err(GroupError::NotASubgroup(format!("element {} outside the group", g)));
    }
    let gi = p.inv(g);
    let images = h
        .members()
        .iter()
        .map(|&x| r.image(h.to_local(p.mul(p.mul(gi, x), g)).unwrap()).clone())
        .collect();
    Ok(GroupRep::trusted(h.group().clone(), images))
}

const INTERTWINER_ATTEMPTS: u64 = 64;

/// An invertible A with A·a(g) = b(g)·A for all g, when a ≅ b.
pub fn intertwiner(a: &GroupRep, b: &GroupRep) -> Option<Matrix> {
    if !a.is_isomorphic(b) {
        return None;
    }
    let g = a.group();
    let d = a.dim();
    for seed in 0..INTERTWINER_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<Scalar> = (0..d * d).map(|_| Scalar::from_i64(rng.gen_range(-3..=3))).collect();
        let x = Matrix::new(d, d, entries).unwrap();
        let mut acc = Matrix::zeros(d, d);
        for h in g.elements() {
            acc = &acc + &(&(b.image(h) * &x) * a.image(g.inv(h)));
        }
        if acc.det().map_or(false, |v| !v.is_zero()) {
            return Some(acc);
        }
    }
    None
}

/// Multiplicities of the given irreducible constituents in r.
pub fn decompose(r: &GroupRep, constituents: &[GroupRep]) -> Result<Vec<usize>, GroupError> {
    let mut mult = Vec::with_capacity(constituents.len());
    let mut rest: Vec<Scalar> = r.character().to_vec();
    for c in constituents {
        if !is_irreducible(c) {
            return Err(GroupError::Reducible);
        }
        let m = r.inner(c)?;
        let k = m
            .as_i64()
            .filter(|&k| k >= 0)
            .ok_or_else(|| GroupError::InvalidRep(format!("multiplicity {} is not a natural number", m)))?;
        for (x, y) in rest.iter_mut().zip(c.character()) {
            *x -= &(y * &Scalar::from_i64(k));
        }
        mult.push(k as usize);
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return Err(GroupError::IncompleteConstituents);
    }
    Ok(mult)
}

/// An extension of a Galois-invariant irreducible τ of a normal subgroup of prime index.
#[derive(Clone, Debug)]
pub struct Extension {
    /// The chosen extension τ̃.
    pub rep: GroupRep,
    /// The element σ ∉ Γ₀ whose image normalizes the intertwiner.
    pub sigma: usize,
    /// The prime index q₀.
    pub prime: usize,
    /// The scalar c with B^{q₀} = c·τ(σ^{q₀}) for the raw intertwiner B.
    pub scalar_c: Scalar,
    /// The q₀-th root of c used to normalize B.
    pub root: Scalar,
}

impl Extension {
    /// Characters η of G/Γ₀ as functions on G: η_k(σ^j·x) = ζ_{q₀}^{jk}.
    pub fn quotient_characters(&self, h: &Subgroup) -> Vec<Vec<Scalar>> {
        quotient_characters(h, self.sigma)
    }

    /// All q₀ extensions τ̃ ⊗ η.
    pub fn all(&self, h: &Subgroup) -> Vec<GroupRep> {
        self.quotient_characters(h)
            .into_iter()
            .map(|eta| {
                let images = self.rep.images().iter().zip(&eta).map(|(m, e)| m.scale(e)).collect();
                GroupRep::trusted(self.rep.group().clone(), images)
            })
            .collect()
    }
}

/// Characters of the cyclic prime quotient G/h pulled back to G.
pub fn quotient_characters(h: &Subgroup, sigma: usize) -> Vec<Vec<Scalar>> {
    let p = h.index();
    let g = h.parent();
    let level = coset_level(h, sigma);
    (0..p)
        .map(|k| g.elements().map(|x| Scalar::zeta(p as u32, (level[x] * k) as i64)).collect())
        .collect()
}

/// For each x ∈ G the j with x ∈ σ^j·h.
fn coset_level(h: &Subgroup, sigma: usize) -> Vec<usize> {
    let g = h.parent();
    let p = h.index();
    let mut level = vec![usize::MAX; g.order()];
    let mut s = g.identity();
    for j in 0..p {
        for &m in h.members() {
            level[g.mul(s, m)] = j;
        }
        s = g.mul(s, sigma);
    }
    level
}

pub fn extend_invariant_irrep(tau: &GroupRep, h: &Subgroup) -> Result<Extension, GroupError> {
    let Some(p) = h.prime_quotient() else {
        return Err(GroupError::NotPrimeCyclicQuotient);
    };
    if !same_group(tau.group(), h.group()) {
        return Err(GroupError::NotASubgroup("representation is not defined on the given subgroup".into()));
    }
    if !is_irreducible(tau) {
        return Err(GroupError::Reducible);
    }
    let g = h.parent();
    let sigma = g.elements().find(|&x| !h.contains(x)).unwrap();
    // ρ'(x) = τ(σ x σ⁻¹); B·τ(x) = ρ'(x)·B
    let conj = conjugate_rep(tau, h, g.inv(sigma))?;
    let b = intertwiner(tau, &conj).ok_or(GroupError::NotInvariant)?;
    let sp = h.to_local(g.pow(sigma, p as i64)).unwrap();
    let tau_sp = tau.image(sp);
    let bp = b.pow(p as u32);
    let c = {
        let m = &tau_sp.inverse().unwrap() * &bp;
        let c = m.get(0, 0).clone();
        debug_assert!(m == Matrix::scalar(tau.dim(), &c));
        c
    };
    let root = pth_root(&c, p, &b, tau_sp)?;
    let a = b.scale(&root.inv().unwrap());
    let level = coset_level(h, sigma);
    // τ̃(σ^j·x) = A^j·τ(x)
    let mut a_pows = vec![Matrix::identity(tau.dim())];
    for j in 1..p {
        a_pows.push(&a_pows[j - 1] * &a);
    }
    let mut s_pows = vec![g.identity()];
    for j in 1..p {
        s_pows.push(g.mul(s_pows[j - 1], sigma));
    }
    let images: Vec<Matrix> = g
        .elements()
        .map(|x| {
            let j = level[x];
            let loc = h.to_local(g.mul(g.inv(s_pows[j]), x)).unwrap();
            &a_pows[j] * tau.image(loc)
        })
        .collect();
    let rep = GroupRep::new(g.clone(), images)?;
    Ok(Extension { rep, sigma, prime: p, scalar_c: c, root })
}

/// A p-th root of c in the tower.
fn pth_root(c: &Scalar, p: usize, b: &Matrix, tau_sp: &Matrix) -> Result<Scalar, GroupError> {
    let d = b.rows() as i64;
    let pi = p as i64;
    if let Some((l, k)) = c.root_of_unity() {
        // the canonical choice ζ_{p·l}^k
        return Ok(Scalar::zeta(l * p as u32, k as i64));
    }
    if d % pi != 0 {
        // u·d + v·p = 1, c = (c^d)^u·(c^v)^p and det(B)^p = c^d·det τ(σ^p)
        let (u, v) = bezout(d, pi);
        let delta = b.det().unwrap();
        let det_sp = tau_sp.det().unwrap();
        let (l, k) = det_sp
            .root_of_unity()
            .ok_or_else(|| GroupError::RootOutsideTower("det τ(σ^p) is not a root of unity".into()))?;
        let corr = Scalar::zeta(l * p as u32, -(u * k as i64));
        let root = &(&delta.pow(u) * &c.pow(v)) * &corr;
        debug_assert!(root.pow(pi) == *c);
        return Ok(root);
    }
    if p == 2 {
        if let Some(r) = c.sqrt() {
            return Ok(r);
        }
    }
    if let Some(r) = rational_times_unit_root(c, p) {
        return Ok(r);
    }
    Err(GroupError::RootOutsideTower(format!("no {}-th root of {} found", p, c)))
}

fn rational_times_unit_root(c: &Scalar, p: usize) -> Option<Scalar> {
    use num_traits::Signed;
    let norm = (c * &c.conj()).as_rational()?;
    // |c|² = r²; look for r = s^p with s rational
    let r = {
        let n = norm.numer().sqrt();
        let d = norm.denom().sqrt();
        if &(&n * &n) != norm.numer() || &(&d * &d) != norm.denom() {
            return None;
        }
        num_rational::BigRational::new(n, d)
    };
    let sn = r.numer().nth_root(p as u32);
    let sd = r.denom().nth_root(p as u32);
    if &num_traits::pow(sn.clone(), p) != r.numer() || &num_traits::pow(sd.clone(), p) != r.denom() {
        return None;
    }
    let s = num_rational::BigRational::new(sn, sd).abs();
    let unit = c / &Scalar::from_rational(r);
    let (l, k) = unit.root_of_unity()?;
    Some(&Scalar::from_rational(s) * &Scalar::zeta(l * p as u32, k as i64))
}

fn bezout(a: i64, b: i64) -> (i64, i64) {
    // extended Euclid: u·a + v·b = gcd = 1
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_s, old_t)
}
