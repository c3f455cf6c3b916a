//! Patching over solvable extensions of bounded height, by induction on the height: patch each
//! family 𝓘_K over a prime-degree first step K, then patch the resulting ρ_K over F.

use super::{agrees_on, members_compatible, patch, PatchCertificate, PatchError, PatchFamily};
use crate::groups::{linear_character_exponents, FiniteGroup, GroupRep, Subgroup};
use num_integer::Integer;
use serde::Serialize;
use std::sync::Arc;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LayerSource {
    /// K itself is a member of the family.
    Member(usize),
    /// ρ_K patched from the members inside K.
    Patched(Box<PatchCertificate>),
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerCertificate {
    /// Γ_K as elements of G.
    pub layer: Vec<usize>,
    pub prime: usize,
    /// Members of 𝓘_K.
    pub members: Vec<usize>,
    pub source: LayerSource,
}

/// Number of prime factors of n, with multiplicity.
fn big_omega(mut n: usize) -> usize {
    let mut k = 0;
    let mut p = 2;
    while n > 1 {
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        p += 1;
    }
    k
}

/// The last term of the derived series.
fn perfect_core(g: &FiniteGroup) -> Vec<usize> {
    let mut cur: Vec<usize> = g.elements().collect();
    loop {
        let next = g.derived_of(&cur);
        if next.len() == cur.len() {
            return cur;
        }
        cur = next;
    }
}

/// Normal subgroups of prime index, as kernels of characters of prime order.
fn prime_index_normals(g: &Arc<FiniteGroup>) -> Vec<(Vec<usize>, usize)> {
    let (e, chars) = linear_character_exponents(g);
    let mut out: Vec<(Vec<usize>, usize)> = Vec::new();
    for v in chars {
        let gcd = v.iter().fold(e, |a, &b| a.gcd(&b));
        let ord = e / gcd;
        if super::splitting::is_prime(ord as i64) {
            let ker: Vec<usize> = g.elements().filter(|&x| v[x] == 0).collect();
            if !out.iter().any(|(k, _)| *k == ker) {
                out.push((ker, ord));
            }
        }
    }
    out.sort();
    out
}

fn layer_error(layer: &Subgroup, e: PatchError) -> PatchError {
    PatchError::Layer { layer: format!("K = {:?}", layer.members()), source: Box::new(e) }
}

/// The patch-up representation of a family of solvable extensions. Members of height above
/// `max_height` (number of prime factors of the index) are rejected, as are members with
/// non-solvable quotient. A family with all members of prime index is handed to `patch` as is.
pub fn patch_solvable(fam: &PatchFamily, max_height: Option<usize>) -> Result<PatchCertificate, PatchError> {
    let g = fam.group();
    let core = perfect_core(g);
    for (i, m) in fam.members().iter().enumerate() {
        if !core.iter().all(|&x| m.subgroup.contains(x)) {
            return Err(PatchError::NotSolvableTower(format!("member {} has non-solvable quotient", i)));
        }
        let h = big_omega(m.subgroup.index());
        if max_height.is_some_and(|b| h > b) {
            return Err(PatchError::NotSolvableTower(format!("member {} has height {} above the bound", i, h)));
        }
    }
    if fam.has_prime_layers() {
        return patch(fam);
    }
    let mut top_members = Vec::new();
    let mut layers = Vec::new();
    for (ker, prime) in prime_index_normals(g) {
        let k = Subgroup::new(g.clone(), &ker)?;
        let inside: Vec<usize> = (0..fam.members().len()).filter(|&i| fam.members()[i].subgroup.is_subset_of(&k)).collect();
        if inside.is_empty() {
            continue;
        }
        let (rho_k, source) = if let Some(&i) = inside.iter().find(|&&i| fam.members()[i].subgroup.order() == k.order()) {
            let mi = &fam.members()[i];
            for &j in &inside {
                if !members_compatible(mi, &fam.members()[j]) {
                    return Err(layer_error(&k, PatchError::Incompatible(i, j)));
                }
            }
            // re-home the member's representation on K's abstract group
            (GroupRep::new(k.group().clone(), mi.rep.images().to_vec())?, LayerSource::Member(i))
        } else {
            let members = inside
                .iter()
                .map(|&i| {
                    let m = &fam.members()[i];
                    let sub = m.subgroup.within(&k)?;
                    let r = GroupRep::new(sub.group().clone(), m.rep.images().to_vec())?;
                    Ok((sub, r))
                })
                .collect::<Result<Vec<_>, PatchError>>()?;
            let excluded: Vec<usize> = fam.excluded().iter().filter_map(|&x| k.to_local(x)).collect();
            let sub = PatchFamily::tower(k.group().clone(), members, excluded).map_err(|e| layer_error(&k, e))?;
            let cert = patch_solvable(&sub, max_height.map(|b| b.saturating_sub(1))).map_err(|e| layer_error(&k, e))?;
            (cert.rho.clone(), LayerSource::Patched(Box::new(cert)))
        };
        top_members.push((k.clone(), rho_k));
        layers.push(LayerCertificate { layer: ker, prime, members: inside, source });
    }
    let top = PatchFamily::new(g.clone(), top_members, fam.excluded().to_vec())?;
    let mut cert = patch(&top).map_err(|e| PatchError::Layer { layer: "first steps over F".into(), source: Box::new(e) })?;
    for (i, m) in fam.members().iter().enumerate() {
        if !agrees_on(cert.rho.character(), m) {
            return Err(PatchError::NoExtension(i));
        }
    }
    cert.transcript.push(format!(
        "solvable recursion over {} first steps; verified against all {} members",
        layers.len(),
        fam.members().len()
    ));
    cert.layers = layers;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{linear_characters, named_group};

    fn sub(g: &Arc<FiniteGroup>, gens: &[usize]) -> Subgroup {
        Subgroup::generated(g.clone(), gens).unwrap()
    }

    #[test]
    fn height_two_recovers_character() {
        let g = Arc::new(named_group("C4xC2").unwrap());
        // elements encoded a·2 + b for (a mod 4, b mod 2)
        let (x, y) = (2, 1);
        let subs = vec![
            sub(&g, &[x]),
            sub(&g, &[g.mul(x, y)]),
            sub(&g, &[g.mul(x, x)]),
            sub(&g, &[y]),
            sub(&g, &[g.mul(g.mul(x, x), y)]),
        ];
        let chars = linear_characters(&g);
        assert_eq!(chars.len(), 8);
        for chi in &chars {
            let rho = GroupRep::linear(g.clone(), chi).unwrap();
            let fam = PatchFamily::from_global(g.clone(), &subs, &rho, vec![]).unwrap();
            let cert = patch_solvable(&fam, Some(2)).unwrap();
            assert_eq!(&cert.character, chi);
            assert!(!cert.layers.is_empty());
            let hits = chars
                .iter()
                .filter(|c| fam.members().iter().all(|m| super::super::agrees_on(c, m)))
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn height_bound_rejects() {
        let g = Arc::new(named_group("C4xC2").unwrap());
        let t = Subgroup::trivial(g.clone());
        let fam = PatchFamily::tower(g.clone(), vec![(t.clone(), GroupRep::trivial(t.group().clone(), 1))], vec![]).unwrap();
        assert!(matches!(patch_solvable(&fam, Some(2)), Err(PatchError::NotSolvableTower(_))));
    }
}
