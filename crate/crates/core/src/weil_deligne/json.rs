//! `{"q": "3", "dim": 4, "frobenius": matrix, "inertia": "trivial" | {...}, "N": matrix}`.
//!
//! Matrix entries are scalar strings; inside this document `q` may appear in them
//! (`"q^{3/2}"`) and is read as the pair's residue cardinality.

use super::{WDPair, WdError, WeilModel};
use crate::exact::{parse_rational, parse_scalar, Matrix, Scalar};
use crate::groups::{element_ref, GroupJson, GroupRep, RepJson};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Int(i64),
}

pub type EntryMatrix = Vec<Vec<Entry>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeilModelJson {
    pub group: GroupJson,
    /// φ(σ) for each element σ; identity when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius_action: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tame_generator: Option<String>,
    pub rep: RepJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InertiaJson {
    Trivial(String),
    Model(WeilModelJson),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WdPairJson {
    pub q: String,
    pub dim: usize,
    pub frobenius: EntryMatrix,
    pub inertia: InertiaJson,
    #[serde(rename = "N")]
    pub n: EntryMatrix,
}

fn to_matrix(m: &EntryMatrix, dim: usize, q: &BigRational) -> Result<Matrix, WdError> {
    if m.len() != dim || m.iter().any(|r| r.len() != dim) {
        return Err(WdError::InvalidPair(format!("expected a {}x{} matrix", dim, dim)));
    }
    let rows = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    Entry::Int(i) => Ok(Scalar::from_i64(*i)),
                    Entry::Text(s) => parse_scalar(s, Some(q)).map_err(|e| WdError::InvalidPair(e.to_string())),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows).expect("rectangular"))
}

fn from_matrix(m: &Matrix) -> EntryMatrix {
    m.to_string_rows().into_iter().map(|r| r.into_iter().map(Entry::Text).collect()).collect()
}

impl WdPairJson {
    pub fn build(&self) -> Result<WDPair, WdError> {
        let q = parse_rational(&self.q).map_err(|e| WdError::InvalidModel(e.to_string()))?;
        let f = to_matrix(&self.frobenius, self.dim, &q)?;
        let n = to_matrix(&self.n, self.dim, &q)?;
        let (model, rho) = match &self.inertia {
            InertiaJson::Trivial(s) if s == "trivial" => {
                let model = WeilModel::unramified(q)?;
                let rho = GroupRep::trivial(model.inertia().clone(), self.dim);
                (model, rho)
            }
            InertiaJson::Trivial(s) => return Err(WdError::InvalidModel(format!("unknown inertia {:?}", s))),
            InertiaJson::Model(m) => {
                let g = Arc::new(m.group.build()?);
                let action = m.frobenius_action.clone().unwrap_or_else(|| g.elements().collect());
                let tame = m.tame_generator.as_deref().map(|t| element_ref(&g, t)).transpose()?;
                let rho = m.rep.build(g.clone())?;
                (WeilModel::new(g, action, q, tame)?, rho)
            }
        };
        WDPair::new(model, f, rho, n)
    }

    pub fn from_pair(w: &WDPair) -> WdPairJson {
        let model = w.model();
        let inertia = if model.inertia().order() == 1 {
            InertiaJson::Trivial("trivial".into())
        } else {
            let ident: Vec<usize> = model.inertia().elements().collect();
            InertiaJson::Model(WeilModelJson {
                group: GroupJson::from_group(model.inertia()),
                frobenius_action: (model.frobenius_action() != ident.as_slice()).then(|| model.frobenius_action().to_vec()),
                tame_generator: model.tame_generator().map(|t| t.to_string()),
                rep: RepJson::from_rep(w.inertia()),
            })
        };
        WdPairJson {
            q: model.q().to_string(),
            dim: w.dim(),
            frobenius: from_matrix(w.frobenius()),
            inertia,
            n: from_matrix(w.monodromy()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{steinberg_parameter, SteinbergKind};
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parses_q_terms() {
        let js = r#"{"q": "3", "dim": 2, "frobenius": [["q^{-1/2}", 0], [0, "q^{1/2}"]],
                     "inertia": "trivial", "N": [[0, 1], [0, 0]]}"#;
        let w: WdPairJson = serde_json::from_str(js).unwrap();
        let w = w.build().unwrap();
        assert_eq!(w.monodromy_rank(), 1);
    }

    #[test]
    fn roundtrip_with_inertia() {
        let q = BigRational::from_integer(BigInt::from(5));
        let w = steinberg_parameter(SteinbergKind::KlingenSt, &q, &Scalar::one()).unwrap();
        let js = serde_json::to_string(&WdPairJson::from_pair(&w)).unwrap();
        let back: WdPairJson = serde_json::from_str(&js).unwrap();
        let w2 = back.build().unwrap();
        assert_eq!(w2.frobenius(), w.frobenius());
        assert_eq!(w2.inertia().character(), w.inertia().character());
    }
}
