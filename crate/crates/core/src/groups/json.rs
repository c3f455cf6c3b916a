//! JSON forms of groups and representations.
//!
//! A group is either an explicit table `{"order": n, "table": [[...]], "labels": {...}}` or a
//! name such as `{"named": "C4xC2"}`. Names: `C<n>`, `D<n>` (order 2n), `S3`, `S4`, `A4`, `Q8`,
//! `V4`, joined by `x` for direct products.

use super::construct;
use super::{FiniteGroup, GroupError, GroupRep};
use crate::exact::Matrix;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        labels: BTreeMap<String, usize>,
    },
    Named {
        named: String,
    },
}

impl GroupJson {
    pub fn from_group(g: &FiniteGroup) -> GroupJson {
        GroupJson::Table { order: g.order(), table: g.table_rows(), labels: g.labels().clone() }
    }

    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupJson::Table { order, table, labels } => {
                if table.len() != *order {
                    return Err(GroupError::InvalidTable(format!("order {} but {} rows", order, table.len())));
                }
                FiniteGroup::from_table(table.clone())?.with_labels(labels.clone())
            }
            GroupJson::Named { named } => named_group(named),
        }
    }
}

pub fn named_group(name: &str) -> Result<FiniteGroup, GroupError> {
    let mut parts = name.split(['x', '×']).map(str::trim);
    let first = parts.next().ok_or_else(|| GroupError::InvalidTable("empty group name".into()))?;
    let mut g = single_named(first)?;
    for p in parts {
        g = g.direct_product(&single_named(p)?);
    }
    Ok(g)
}

fn single_named(name: &str) -> Result<FiniteGroup, GroupError> {
    let bad = || GroupError::InvalidTable(format!("unknown group name {:?}", name));
    let num = |s: &str| s.parse::<usize>().ok().filter(|&n| (1..=256).contains(&n));
    match name {
        "S3" => Ok(construct::symmetric(3)),
        "S4" => Ok(construct::symmetric(4)),
        "A4" => Ok(construct::alternating4()),
        "Q8" => Ok(construct::quaternion()),
        "V4" => Ok(construct::klein_four()),
        _ => {
            if let Some(n) = name.strip_prefix('C').and_then(num) {
                Ok(construct::cyclic(n))
            } else if let Some(n) = name.strip_prefix('D').and_then(num).filter(|&n| n >= 2) {
                Ok(construct::dihedral(n))
            } else {
                Err(bad())
            }
        }
    }
}

/// Element reference: a decimal index or a label of the group.
pub fn element_ref(g: &FiniteGroup, key: &str) -> Result<usize, GroupError> {
    if let Ok(i) = key.parse::<usize>() {
        if i < g.order() {
            return Ok(i);
        }
    }
    g.label(key).ok_or_else(|| GroupError::InvalidRep(format!("unknown element {:?}", key)))
}

/// `{"dim": d, "images": {element: matrix}}`; images may cover the whole group or just a generating set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepJson {
    pub dim: usize,
    pub images: BTreeMap<String, Matrix>,
}

impl RepJson {
    pub fn from_rep(r: &GroupRep) -> RepJson {
        let images = r.group().elements().map(|g| (g.to_string(), r.image(g).clone())).collect();
        RepJson { dim: r.dim(), images }
    }

    pub fn build(&self, group: Arc<FiniteGroup>) -> Result<GroupRep, GroupError> {
        let mut gens = Vec::new();
        for (k, m) in &self.images {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(GroupError::InvalidRep(format!("image of {} is not {}x{}", k, self.dim, self.dim)));
            }
            gens.push((element_ref(&group, k)?, m.clone()));
        }
        if gens.is_empty() {
            return Ok(GroupRep::trivial(group, self.dim));
        }
        GroupRep::from_generators(group, &gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_products() {
        let g = named_group("C4xC2").unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(named_group("S3").unwrap().order(), 6);
        assert!(named_group("Z5").is_err());
    }

    #[test]
    fn table_roundtrip() {
        let g = construct::symmetric(3);
        let js = serde_json::to_string(&GroupJson::from_group(&g)).unwrap();
        let back: GroupJson = serde_json::from_str(&js).unwrap();
        assert_eq!(back.build().unwrap(), g);
    }

    #[test]
    fn rep_from_generator_images() {
        let g = Arc::new(construct::cyclic(4));
        let js = r#"{"dim": 1, "images": {"a": [["i"]]}}"#;
        let r: RepJson = serde_json::from_str(js).unwrap();
        let rep = r.build(g).unwrap();
        assert_eq!(rep.character()[2].to_string(), "-1");
    }
}
