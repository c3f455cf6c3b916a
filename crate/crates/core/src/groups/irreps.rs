//! Linear characters and irreducible representations of small monomial groups.

use super::rep::{induce, induced_character, inner_product};
use super::{FiniteGroup, GroupError, GroupRep, Subgroup};
use crate::exact::Scalar;
use std::sync::Arc;

/// All one-dimensional characters, as exponent vectors k with χ(g) = ζ_e^{k[g]}, e the group exponent.
pub fn linear_character_exponents(g: &FiniteGroup) -> (usize, Vec<Vec<usize>>) {
    let e = g.exponent();
    let gens = g.generators();
    let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    // exponents allowed for generator i: multiples of e / ord(g_i)
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(v) = extend_linear(g, &gens, &choice, e, &orders) {
            out.push(v);
        }
        // odometer over allowed exponents
        let mut i = 0;
        loop {
            if i == gens.len() {
                return (e, out);
            }
            choice[i] += 1;
            if choice[i] < orders[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn extend_linear(g: &FiniteGroup, gens: &[usize], choice: &[usize], e: usize, orders: &[usize]) -> Option<Vec<usize>> {
    let vals: Vec<usize> = choice.iter().zip(orders).map(|(&c, &o)| c * (e / o)).collect();
    let mut val = vec![usize::MAX; g.order()];
    val[g.identity()] = 0;
    let mut stack = vec![g.identity()];
    while let Some(x) = stack.pop() {
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let v = (val[x] + vals[i]) % e;
            if val[y] == usize::MAX {
                val[y] = v;
                stack.push(y);
            } else if val[y] != v {
                return None;
            }
        }
    }
    Some(val)
}

pub fn linear_characters(g: &FiniteGroup) -> Vec<Vec<Scalar>> {
    let (e, exps) = linear_character_exponents(g);
    exps.into_iter()
        .map(|v| v.into_iter().map(|k| Scalar::zeta(e as u32, k as i64)).collect())
        .collect()
}

/// Every subgroup generated by at most two elements, largest first.
pub fn small_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for a in g.elements() {
        for b in a..g.order() {
            let m = g.closure(&[a, b]);
            if !seen.contains(&m) {
                seen.push(m);
            }
        }
    }
    seen.sort_by(|x, y| y.len().cmp(&x.len()).then(x.cmp(y)));
    seen.into_iter().map(|m| Subgroup::new(g.clone(), &m).unwrap()).collect()
}

/// Irreducible representations obtained by inducing linear characters of G and of its
/// subgroups on at most two generators, stopping once the squared dimensions add up to |G|.
pub fn monomial_irreps(g: &Arc<FiniteGroup>) -> Result<Vec<GroupRep>, GroupError> {
    let n = g.order();
    let mut found: Vec<GroupRep> = Vec::new();
    let mut total = 0usize;
    let mut subs = small_subgroups(g);
    if subs[0].order() != n {
        subs.insert(0, Subgroup::whole(g.clone()));
    }
    for h in subs {
        for lam in linear_characters(h.group()) {
            let chi = induced_character(&lam, &h);
            if !inner_product(g, &chi, &chi)?.is_one() {
                continue;
            }
            if found.iter().any(|r| r.character() == chi.as_slice()) {
                continue;
            }
            let lin = GroupRep::linear(h.group().clone(), &lam)?;
            let r = induce(&lin, &h)?;
            total += r.dim() * r.dim();
            found.push(r);
            if total == n {
                found.sort_by_key(|r| r.dim());
                return Ok(found);
            }
        }
    }
    Err(GroupError::NotMonomial)
}
