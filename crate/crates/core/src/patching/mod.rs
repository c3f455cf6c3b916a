//! Patching Galois-invariant representations of prime-index normal subgroups into one
//! representation of the whole group, plus the solvable-tower recursion and the quadratic
//! splitting toy used to produce general families.
//!
//! Field/subgroup dictionary: a cyclic extension E/F of prime degree is a normal subgroup Γ_E of
//! prime index, and E is linearly disjoint from M when Γ_E·Γ_M = G. The Zariski closure of a
//! finite image is the image itself, so Γ_M = ker ρ₀.

mod json;
mod oracle;
mod solvable;
mod splitting;

pub use json::{FamilyJson, MemberJson};
pub use oracle::{brute_force_extensions, oracle_characters, outcome_characters};
pub use solvable::{patch_solvable, LayerCertificate, LayerSource};
pub use splitting::{cm_family_search, is_prime, is_square_free, quadratic_splitting, CmSearch, SplitError, Splitting};

use crate::exact::Scalar;
use crate::groups::{
    conjugate_rep, decompose, extend_invariant_irrep, induce, inner_product, monomial_irreps, FiniteGroup, GroupError,
    GroupRep, RepJson, Subgroup,
};
use serde::{Serialize, Serializer};
use std::sync::Arc;

#[derive(Debug, Clone, thiserror::Error)]
pub enum PatchError {
    #[error("malformed member {index}: {reason}")]
    MalformedMember { index: usize, reason: String },
    #[error("empty family")]
    EmptyFamily,
    #[error("member {0} is not Galois invariant")]
    NotInvariant(usize),
    #[error("members {0} and {1} disagree on their intersection")]
    Incompatible(usize, usize),
    #[error("family not general enough: {0}")]
    NotGeneralEnough(Demand),
    #[error("uniqueness unavailable: {} candidates restrict correctly ({demand})", candidates.len())]
    Ambiguous { candidates: Vec<GroupRep>, demand: Demand },
    #[error("no extension restricts to member {0}")]
    NoExtension(usize),
    #[error("not a solvable tower: {0}")]
    NotSolvableTower(String),
    #[error("layer {layer}: {source}")]
    Layer { layer: String, source: Box<PatchError> },
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Γ_E with ρ_E, a representation of the abstract group of Γ_E.
#[derive(Clone, Debug)]
pub struct Member {
    pub subgroup: Subgroup,
    pub rep: GroupRep,
}

#[derive(Clone, Debug)]
pub struct PatchFamily {
    group: Arc<FiniteGroup>,
    members: Vec<Member>,
    excluded: Vec<usize>,
    prime_layers: bool,
}

impl PatchFamily {
    /// Members of prime index.
    pub fn new(group: Arc<FiniteGroup>, members: Vec<(Subgroup, GroupRep)>, excluded: Vec<usize>) -> Result<PatchFamily, PatchError> {
        let fam = PatchFamily::build(group, members, excluded)?;
        if let Some(i) = fam.members.iter().position(|m| m.subgroup.prime_quotient().is_none()) {
            return Err(PatchError::MalformedMember { index: i, reason: "quotient is not cyclic of prime order".into() });
        }
        Ok(fam)
    }

    /// Members of arbitrary index with normal subgroups, as a solvable tower.
    pub fn tower(group: Arc<FiniteGroup>, members: Vec<(Subgroup, GroupRep)>, excluded: Vec<usize>) -> Result<PatchFamily, PatchError> {
        PatchFamily::build(group, members, excluded)
    }

    /// ρ_E = ρ|_{Γ_E} for each listed subgroup.
    pub fn from_global(group: Arc<FiniteGroup>, subgroups: &[Subgroup], rho: &GroupRep, excluded: Vec<usize>) -> Result<PatchFamily, PatchError> {
        let members = subgroups
            .iter()
            .map(|h| Ok((h.clone(), crate::groups::restrict(rho, h)?)))
            .collect::<Result<Vec<_>, GroupError>>()?;
        PatchFamily::tower(group, members, excluded)
    }

    fn build(group: Arc<FiniteGroup>, members: Vec<(Subgroup, GroupRep)>, excluded: Vec<usize>) -> Result<PatchFamily, PatchError> {
        if members.is_empty() {
            return Err(PatchError::EmptyFamily);
        }
        let dim = members[0].1.dim();
        let mut out = Vec::with_capacity(members.len());
        for (i, (h, r)) in members.into_iter().enumerate() {
            let bad = |reason: &str| PatchError::MalformedMember { index: i, reason: reason.into() };
            if !same_group(h.parent(), &group) {
                return Err(bad("subgroup of another group"));
            }
            if !same_group(r.group(), h.group()) {
                return Err(bad("representation is not defined on the subgroup"));
            }
            if r.dim() != dim {
                return Err(bad("dimension differs from the first member"));
            }
            if !h.is_normal() {
                return Err(bad("subgroup is not normal"));
            }
            if h.index() == 1 {
                return Err(bad("subgroup is the whole group"));
            }
            out.push(Member { subgroup: h, rep: r });
        }
        if excluded.iter().any(|&x| x >= group.order()) {
            return Err(PatchError::MalformedMember { index: 0, reason: "excluded element outside the group".into() });
        }
        let prime_layers = out.iter().all(|m| m.subgroup.prime_quotient().is_some());
        Ok(PatchFamily { group, members: out, excluded, prime_layers })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn excluded(&self) -> &[usize] {
        &self.excluded
    }

    pub fn dim(&self) -> usize {
        self.members[0].rep.dim()
    }

    /// Whether every member has prime index.
    pub fn has_prime_layers(&self) -> bool {
        self.prime_layers
    }
}

/// χ restricted to h, in h's local indexing.
fn restrict_char(chi: &[Scalar], h: &Subgroup) -> Vec<Scalar> {
    h.members().iter().map(|&g| chi[g].clone()).collect()
}

fn agrees_on(chi: &[Scalar], m: &Member) -> bool {
    m.subgroup.members().iter().enumerate().all(|(i, &g)| chi[g] == m.rep.character()[i])
}

/// Whether |A·B| = n, for sorted member lists.
fn product_has_order(a: &[usize], b: &[usize], n: usize) -> bool {
    let common = a.iter().filter(|x| b.binary_search(x).is_ok()).count();
    a.len() * b.len() == n * common
}

fn product_is_whole(g: &FiniteGroup, a: &[usize], b: &[usize]) -> bool {
    product_has_order(a, b, g.order())
}

fn member_invariant(g: &FiniteGroup, m: &Member) -> bool {
    let h = &m.subgroup;
    let chi = m.rep.character();
    g.elements().all(|s| {
        h.members()
            .iter()
            .enumerate()
            .all(|(i, &x)| chi[h.to_local(g.conj(s, x)).expect("normal")] == chi[i])
    })
}

fn members_compatible(a: &Member, b: &Member) -> bool {
    a.subgroup.members().iter().all(|&x| match b.subgroup.to_local(x) {
        Some(j) => a.rep.character()[a.subgroup.to_local(x).unwrap()] == b.rep.character()[j],
        None => true,
    })
}

/// An exact demand raised while patching: some member Γ_E with Γ_E·H = G.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Demand {
    pub step: u8,
    pub description: String,
    pub subgroup: Vec<usize>,
    pub witnesses: Vec<usize>,
    pub satisfied: bool,
}

impl std::fmt::Display for Demand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "step {}: {} (|H| = {}, {})", self.step, self.description, self.subgroup.len(), if self.satisfied { "met" } else { "unmet" })
    }
}

fn demand(fam: &PatchFamily, step: u8, description: &str, h: &[usize]) -> Demand {
    let witnesses: Vec<usize> = fam
        .members
        .iter()
        .enumerate()
        .filter(|(_, m)| product_is_whole(&fam.group, m.subgroup.members(), h))
        .map(|(i, _)| i)
        .collect();
    Demand { step, description: description.into(), subgroup: h.to_vec(), satisfied: !witnesses.is_empty(), witnesses }
}

/// ker ρ as a list of elements of G.
fn kernel_in_parent(m: &Member) -> Vec<usize> {
    m.subgroup
        .members()
        .iter()
        .enumerate()
        .filter(|(i, _)| m.rep.image(*i).is_identity())
        .map(|(_, &g)| g)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub first: usize,
    pub second: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    /// Condition (a) per member.
    pub invariance: Vec<bool>,
    /// Condition (b) per pair.
    pub compatibility: Vec<PairCheck>,
    /// Elements outside the excluded set lying in no member.
    pub uncovered: Vec<usize>,
    pub coverage: bool,
    /// Disjointness from the kernel datum of the base member.
    pub demands: Vec<Demand>,
    /// (a) and (b) hold.
    pub conditions_hold: bool,
}

pub fn check_family(fam: &PatchFamily) -> FamilyReport {
    let invariance: Vec<bool> = fam.members.iter().map(|m| member_invariant(&fam.group, m)).collect();
    let mut compatibility = Vec::new();
    for i in 0..fam.members.len() {
        for j in i + 1..fam.members.len() {
            compatibility.push(PairCheck { first: i, second: j, holds: members_compatible(&fam.members[i], &fam.members[j]) });
        }
    }
    let uncovered: Vec<usize> = fam
        .group
        .elements()
        .filter(|g| !fam.excluded.contains(g) && !fam.members.iter().any(|m| m.subgroup.contains(*g)))
        .collect();
    let kernel = kernel_in_parent(&fam.members[0]);
    let demands = vec![demand(fam, 6, "a member disjoint from M = fixed field of ker ρ₀", &kernel)];
    FamilyReport {
        conditions_hold: invariance.iter().all(|&x| x) && compatibility.iter().all(|p| p.holds),
        invariance,
        compatibility,
        coverage: uncovered.is_empty(),
        uncovered,
        demands,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constituent {
    /// Position in the list of irreducibles of Γ₀.
    pub index: usize,
    pub dim: usize,
    pub multiplicity: usize,
    pub character: Vec<Scalar>,
}

/// Constituents of ρ₀ sorted into fixed points P and non-trivial orbits C of Gal(E₀/F).
#[derive(Clone, Debug, Serialize)]
pub struct OrbitLedger {
    pub base: usize,
    pub prime: usize,
    /// σ ∉ Γ₀ generating the quotient.
    pub sigma: usize,
    pub fixed: Vec<Constituent>,
    pub orbits: Vec<Vec<Constituent>>,
    /// Orbit representatives C₀, least character vector first in each orbit.
    pub representatives: Vec<Constituent>,
    #[serde(skip)]
    irreps: Vec<GroupRep>,
}

impl OrbitLedger {
    pub fn irreps(&self) -> &[GroupRep] {
        &self.irreps
    }
}

pub fn orbit_ledger(fam: &PatchFamily, base: usize) -> Result<OrbitLedger, PatchError> {
    let m = fam.members.get(base).ok_or(PatchError::MalformedMember { index: base, reason: "no such member".into() })?;
    let h = &m.subgroup;
    let prime = h.prime_quotient().ok_or(PatchError::MalformedMember { index: base, reason: "quotient is not cyclic of prime order".into() })?;
    let g = &fam.group;
    let irreps = monomial_irreps(h.group())?;
    let mult = decompose(&m.rep, &irreps)?;
    let sigma = g.elements().find(|&x| !h.contains(x)).expect("proper subgroup");
    // τ ↦ τ^σ on indices
    let action = irreps
        .iter()
        .map(|t| {
            let c = conjugate_rep(t, h, sigma)?;
            irreps
                .iter()
                .position(|u| u.character() == c.character())
                .ok_or(PatchError::Group(GroupError::IncompleteConstituents))
        })
        .collect::<Result<Vec<usize>, PatchError>>()?;
    let entry = |i: usize| Constituent { index: i, dim: irreps[i].dim(), multiplicity: mult[i], character: irreps[i].character().to_vec() };
    let mut fixed = Vec::new();
    let mut orbits = Vec::new();
    let mut representatives = Vec::new();
    let mut seen = vec![false; irreps.len()];
    for i in 0..irreps.len() {
        if mult[i] == 0 || seen[i] {
            continue;
        }
        let mut orbit = vec![i];
        let mut j = action[i];
        while j != i {
            orbit.push(j);
            j = action[j];
        }
        for &k in &orbit {
            seen[k] = true;
            if mult[k] != mult[i] {
                return Err(PatchError::NotInvariant(base));
            }
        }
        if orbit.len() == 1 {
            fixed.push(entry(i));
        } else {
            let rep = *orbit.iter().min_by(|&&a, &&b| irreps[a].character().cmp(irreps[b].character())).unwrap();
            representatives.push(entry(rep));
            orbits.push(orbit.into_iter().map(entry).collect());
        }
    }
    Ok(OrbitLedger { base, prime, sigma, fixed, orbits, representatives, irreps })
}

pub fn verify_patch(rho: &GroupRep, fam: &PatchFamily) -> bool {
    same_group(rho.group(), &fam.group) && rho.dim() == fam.dim() && fam.members.iter().all(|m| agrees_on(rho.character(), m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Uniqueness {
    /// No invariant constituents: ρ is a sum of induced representations.
    Induced,
    /// Twist multiplicities read off a member disjoint from M.
    DisjointMember,
    /// The only candidate extension that restricts correctly to every member.
    Exhaustion,
}

fn rep_as_json<S: Serializer>(r: &GroupRep, s: S) -> Result<S::Ok, S::Error> {
    RepJson::from_rep(r).serialize(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct PatchCertificate {
    #[serde(serialize_with = "rep_as_json")]
    pub rho: GroupRep,
    pub character: Vec<Scalar>,
    pub ledger: OrbitLedger,
    pub base: usize,
    /// E₁, when a member disjoint from M exists.
    pub reference: Option<usize>,
    /// m_{τ̃,η,E} = dim Hom((τ̃⊗η)|Γ_E, ρ_E), indexed [member][fixed constituent][η].
    pub twist_multiplicities: Vec<Vec<Vec<usize>>>,
    /// The m_{τ̃,η} used to assemble ρ, indexed [fixed constituent][η].
    pub chosen: Vec<Vec<usize>>,
    pub uniqueness: Uniqueness,
    pub demands: Vec<Demand>,
    pub transcript: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub layers: Vec<LayerCertificate>,
}

/// Compositions of m into k non-negative parts.
fn compositions(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for first in (0..=m).rev() {
        for mut rest in compositions(m - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn assemble(pieces: &[(&GroupRep, usize)]) -> Result<Option<GroupRep>, GroupError> {
    let mut acc: Option<GroupRep> = None;
    for (r, m) in pieces {
        for _ in 0..*m {
            acc = Some(match acc {
                None => (*r).clone(),
                Some(a) => a.direct_sum(r)?,
            });
        }
    }
    Ok(acc)
}

/// The patch-up representation of a prime-layer family, with its certificate.
pub fn patch(fam: &PatchFamily) -> Result<PatchCertificate, PatchError> {
    if !fam.prime_layers {
        let i = fam.members.iter().position(|m| m.subgroup.prime_quotient().is_none()).unwrap();
        return Err(PatchError::MalformedMember { index: i, reason: "quotient is not cyclic of prime order".into() });
    }
    let g = &fam.group;
    let mut transcript = Vec::new();
    for i in 0..fam.members.len() {
        for j in i + 1..fam.members.len() {
            if !members_compatible(&fam.members[i], &fam.members[j]) {
                return Err(PatchError::Incompatible(i, j));
            }
        }
    }
    transcript.push(format!("(b) holds for all {} pairs", fam.members.len() * (fam.members.len() - 1) / 2));
    let base = 0;
    let m0 = &fam.members[base];
    if !member_invariant(g, m0) {
        return Err(PatchError::NotInvariant(base));
    }
    let ledger = orbit_ledger(fam, base)?;
    let h0 = &m0.subgroup;
    transcript.push(format!(
        "base E0 = member {}: |Γ0| = {}, q0 = {}, {} fixed and {} non-trivial orbits",
        base,
        h0.order(),
        ledger.prime,
        ledger.fixed.len(),
        ledger.orbits.len()
    ));

    // Step 1
    let mut twists: Vec<Vec<GroupRep>> = Vec::new();
    for c in &ledger.fixed {
        let ext = extend_invariant_irrep(&ledger.irreps[c.index], h0)?;
        twists.push(ext.all(h0));
    }
    let induced: Vec<GroupRep> = ledger
        .representatives
        .iter()
        .map(|c| induce(&ledger.irreps[c.index], h0))
        .collect::<Result<_, _>>()?;
    transcript.push(format!("step 1: {} extensions τ̃ and {} inductions", twists.len(), induced.len()));

    // Steps 2 and 3: the kernel datum and the disjoint reference member
    let kernel = kernel_in_parent(m0);
    let d6 = demand(fam, 6, "a member disjoint from M = fixed field of ker ρ₀", &kernel);
    let reference = d6.witnesses.first().copied();
    if let Some(e1) = reference {
        let inter: Vec<usize> = h0.members().iter().copied().filter(|&x| fam.members[e1].subgroup.contains(x)).collect();
        let dense = product_has_order(&inter, &kernel, h0.order());
        transcript.push(format!("steps 2-3: ρ0(Γ0 ∩ Γ_E{}) = ρ0(Γ0): {}", e1, dense));
    }

    // Step 5: twist multiplicities for every member
    let twist_multiplicities: Vec<Vec<Vec<usize>>> = fam
        .members
        .iter()
        .map(|m| {
            twists
                .iter()
                .map(|ts| {
                    ts.iter()
                        .map(|t| {
                            let chi = restrict_char(t.character(), &m.subgroup);
                            let v = inner_product(m.subgroup.group(), &chi, m.rep.character()).expect("same group");
                            v.as_i64().unwrap_or(0).max(0) as usize
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let fixed_mults: Vec<usize> = ledger.fixed.iter().map(|c| c.multiplicity).collect();
    let rep_mults: Vec<usize> = ledger.representatives.iter().map(|c| c.multiplicity).collect();
    let build = |chosen: &[Vec<usize>]| -> Result<GroupRep, GroupError> {
        let mut pieces: Vec<(&GroupRep, usize)> = induced.iter().zip(rep_mults.iter().copied()).collect();
        for (ts, ms) in twists.iter().zip(chosen) {
            pieces.extend(ts.iter().zip(ms.iter().copied()));
        }
        Ok(assemble(&pieces)?.expect("positive dimension"))
    };

    let mut demands = vec![d6.clone()];
    let (rho, chosen, uniqueness) = if twists.is_empty() {
        transcript.push("no invariant constituents: ρ = ⊕ m_τ·Ind(τ), no demand raised".into());
        (build(&[])?, Vec::new(), Uniqueness::Induced)
    } else if let Some(e1) = reference {
        let chosen = twist_multiplicities[e1].clone();
        for (k, ms) in chosen.iter().enumerate() {
            if ms.iter().sum::<usize>() != fixed_mults[k] {
                return Err(PatchError::NoExtension(e1));
            }
        }
        transcript.push(format!("step 5: m_(τ̃,η,E{}) = {:?}", e1, chosen));
        transcript.push(format!("step 6: ρ assembled from reference E1 = member {}", e1));
        (build(&chosen)?, chosen, Uniqueness::DisjointMember)
    } else {
        // no disjoint member: fall back to all extensions of ρ₀ and keep those that restrict correctly
        let per: Vec<Vec<Vec<usize>>> = fixed_mults.iter().map(|&m| compositions(m, ledger.prime)).collect();
        let mut idx = vec![0usize; per.len()];
        let mut valid: Vec<(GroupRep, Vec<Vec<usize>>)> = Vec::new();
        loop {
            let chosen: Vec<Vec<usize>> = idx.iter().zip(&per).map(|(&i, p)| p[i].clone()).collect();
            let r = build(&chosen)?;
            if verify_patch(&r, fam) {
                valid.push((r, chosen));
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < per[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
        transcript.push(format!("step 6 demand unmet; {} of the extensions of ρ0 restrict correctly", valid.len()));
        match valid.len() {
            0 => return Err(PatchError::NotGeneralEnough(d6)),
            1 => {
                let (r, c) = valid.pop().unwrap();
                (r, c, Uniqueness::Exhaustion)
            }
            _ => return Err(PatchError::Ambiguous { candidates: valid.into_iter().map(|(r, _)| r).collect(), demand: d6 }),
        }
    };

    // Step 7
    if let Some(e1) = reference.filter(|_| uniqueness == Uniqueness::DisjointMember) {
        let me1: Vec<usize> = kernel.iter().copied().filter(|&x| fam.members[e1].subgroup.contains(x)).collect();
        let d7 = demand(fam, 7, "an auxiliary member disjoint from M·E1", &me1);
        for (i, m) in fam.members.iter().enumerate() {
            if product_is_whole(g, m.subgroup.members(), &me1) {
                transcript.push(format!("step 7: member {} disjoint from M·E1", i));
            } else if let Some(&aux) = d7.witnesses.first() {
                transcript.push(format!("step 7: member {} inside M·E1, auxiliary member {}", i, aux));
            } else {
                transcript.push(format!("step 7: member {} inside M·E1, no auxiliary member; checked directly", i));
            }
        }
        demands.push(d7);
    }
    for (i, m) in fam.members.iter().enumerate() {
        if !agrees_on(rho.character(), m) {
            return Err(PatchError::NoExtension(i));
        }
    }
    transcript.push(format!("verified ρ|Γ_E ≅ ρ_E for all {} members", fam.members.len()));
    Ok(PatchCertificate {
        character: rho.character().to_vec(),
        rho,
        ledger,
        base,
        reference: reference.filter(|_| uniqueness == Uniqueness::DisjointMember),
        twist_multiplicities,
        chosen,
        uniqueness,
        demands,
        transcript,
        layers: Vec::new(),
    })
}
