//! `{"group": ..., "members": [{"subgroup": [generators], "rep": {...}}], "global": {...}, "excluded": [...]}`.
//!
//! Elements are referenced as in the group document (index or label). A member's `rep` lists
//! images of elements of the subgroup, keyed by their names in G; a member without `rep` takes
//! the restriction of `global`.

use super::{PatchError, PatchFamily};
use crate::exact::Matrix;
use crate::groups::{element_ref, restrict, GroupError, GroupJson, GroupRep, RepJson, Subgroup};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MemberJson {
    pub subgroup: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<RepJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub group: GroupJson,
    pub members: Vec<MemberJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub global: Option<RepJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub excluded: Vec<String>,
}

impl FamilyJson {
    /// Builds the family; members need not have prime index (see `PatchFamily::new` for that check).
    pub fn build(&self) -> Result<PatchFamily, PatchError> {
        let g = Arc::new(self.group.build()?);
        let global = self.global.as_ref().map(|r| r.build(g.clone())).transpose()?;
        let mut members = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            let gens = m.subgroup.iter().map(|k| element_ref(&g, k)).collect::<Result<Vec<_>, _>>()?;
            let h = Subgroup::generated(g.clone(), &gens)?;
            let r = match (&m.rep, &global) {
                (Some(r), _) => {
                    let mut local: Vec<(usize, Matrix)> = Vec::new();
                    for (k, img) in &r.images {
                        let x = element_ref(&g, k)?;
                        let loc = h.to_local(x).ok_or_else(|| PatchError::MalformedMember {
                            index: i,
                            reason: format!("image given for {} outside the subgroup", k),
                        })?;
                        if img.rows() != r.dim || img.cols() != r.dim {
                            return Err(GroupError::InvalidRep(format!("image of {} is not {}x{}", k, r.dim, r.dim)).into());
                        }
                        local.push((loc, img.clone()));
                    }
                    if local.is_empty() {
                        GroupRep::trivial(h.group().clone(), r.dim)
                    } else {
                        GroupRep::from_generators(h.group().clone(), &local)?
                    }
                }
                (None, Some(rho)) => restrict(rho, &h)?,
                (None, None) => {
                    return Err(PatchError::MalformedMember { index: i, reason: "no rep and no global representation".into() })
                }
            };
            members.push((h, r));
        }
        let excluded = self.excluded.iter().map(|k| element_ref(&g, k)).collect::<Result<Vec<_>, _>>()?;
        PatchFamily::tower(g, members, excluded)
    }

    pub fn from_family(fam: &PatchFamily) -> FamilyJson {
        let members = fam
            .members()
            .iter()
            .map(|m| {
                let images: BTreeMap<String, Matrix> = m
                    .subgroup
                    .members()
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| (x.to_string(), m.rep.image(i).clone()))
                    .collect();
                MemberJson {
                    subgroup: m.subgroup.members().iter().map(|x| x.to_string()).collect(),
                    rep: Some(RepJson { dim: m.rep.dim(), images }),
                }
            })
            .collect();
        FamilyJson {
            group: GroupJson::from_group(fam.group()),
            members,
            global: None,
            excluded: fam.excluded().iter().map(|x| x.to_string()).collect(),
        }
    }
}
