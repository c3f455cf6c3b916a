//! Brute-force enumeration of every semisimple representation of G that restricts correctly.

use super::{agrees_on, PatchCertificate, PatchError, PatchFamily};
use crate::exact::Scalar;
use crate::groups::GroupRep;

/// Multiplicity vectors over `irreps` (a complete list of irreducibles of G) whose sum has the
/// family's dimension and restricts to every member's representation.
pub fn brute_force_extensions(fam: &PatchFamily, irreps: &[GroupRep]) -> Vec<Vec<usize>> {
    let n = fam.group().order();
    let mut out = Vec::new();
    let mut mult = vec![0usize; irreps.len()];
    let mut chi = vec![Scalar::zero(); n];
    search(fam, irreps, 0, fam.dim(), &mut mult, &mut chi, &mut out);
    out
}

fn search(
    fam: &PatchFamily,
    irreps: &[GroupRep],
    start: usize,
    remaining: usize,
    mult: &mut Vec<usize>,
    chi: &mut Vec<Scalar>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        if fam.members().iter().all(|m| agrees_on(chi, m)) {
            out.push(mult.clone());
        }
        return;
    }
    for i in start..irreps.len() {
        let d = irreps[i].dim();
        if d > remaining {
            continue;
        }
        mult[i] += 1;
        for (x, y) in chi.iter_mut().zip(irreps[i].character()) {
            *x += y;
        }
        search(fam, irreps, i, remaining - d, mult, chi, out);
        mult[i] -= 1;
        for (x, y) in chi.iter_mut().zip(irreps[i].character()) {
            *x -= y;
        }
    }
}

fn sum_character(irreps: &[GroupRep], mult: &[usize], n: usize) -> Vec<Scalar> {
    let mut chi = vec![Scalar::zero(); n];
    for (r, &m) in irreps.iter().zip(mult) {
        let k = Scalar::from_i64(m as i64);
        for (x, y) in chi.iter_mut().zip(r.character()) {
            *x += &(y * &k);
        }
    }
    chi
}

/// Characters of the brute-force solutions, sorted.
pub fn oracle_characters(fam: &PatchFamily, irreps: &[GroupRep]) -> Vec<Vec<Scalar>> {
    let n = fam.group().order();
    let mut out: Vec<Vec<Scalar>> = brute_force_extensions(fam, irreps).iter().map(|m| sum_character(irreps, m, n)).collect();
    out.sort();
    out
}

/// The character set a patch outcome stands for: the certified ρ, the ambiguous candidates,
/// or nothing.
pub fn outcome_characters(res: &Result<PatchCertificate, PatchError>) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = match res {
        Ok(c) => vec![c.character.clone()],
        Err(PatchError::Ambiguous { candidates, .. }) => candidates.iter().map(|r| r.character().to_vec()).collect(),
        Err(_) => Vec::new(),
    };
    out.sort();
    out
}
