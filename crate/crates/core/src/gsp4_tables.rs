//! Generic Iwahori-spherical representations of GSp(4): parahoric fixed-space dimensions and
//! monodromy, the Atkin–Lehner element, the tame inertia shape and the Klingen χ-vector test.

use crate::exact::{Matrix, Scalar};
use crate::groups::{construct, GroupRep};
use crate::symplectic::{form_matrix, similitude, OrbitLabel};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("unknown type label {0:?}")]
    UnknownLabel(String),
    #[error("uniformizer must be nonzero")]
    ZeroUniformizer,
    #[error("character must be nontrivial")]
    TrivialCharacter,
    #[error("character value is not a root of unity")]
    NotRootOfUnity,
    #[error("character order {order} is divisible by the residue characteristic {p}")]
    NotTame { order: u32, p: u32 },
    #[error("unknown descriptor: {0}")]
    UnknownDescriptor(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IwahoriLabel {
    I,
    IIa,
    IIIa,
    IVa,
    Va,
    VIa,
}

impl IwahoriLabel {
    pub const ALL: [IwahoriLabel; 6] =
        [IwahoriLabel::I, IwahoriLabel::IIa, IwahoriLabel::IIIa, IwahoriLabel::IVa, IwahoriLabel::Va, IwahoriLabel::VIa];
}

impl fmt::Display for IwahoriLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl FromStr for IwahoriLabel {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IwahoriLabel::ALL
            .into_iter()
            .find(|l| l.to_string() == s)
            .ok_or_else(|| TableError::UnknownLabel(s.to_string()))
    }
}

/// The five parahoric subgroups up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ParahoricLabel {
    /// GSp₄(𝒪), hyperspecial.
    K,
    /// Paramodular, generated by J_Q and its η-conjugate.
    KTilde,
    /// Siegel parahoric.
    JP,
    /// Klingen parahoric.
    JQ,
    /// Iwahori, J_P ∩ J_Q.
    I,
}

impl ParahoricLabel {
    /// Column order of the table.
    pub const ALL: [ParahoricLabel; 5] =
        [ParahoricLabel::K, ParahoricLabel::KTilde, ParahoricLabel::JP, ParahoricLabel::JQ, ParahoricLabel::I];

    /// Whether `self` ⊆ `other` (for the standard representatives).
    pub fn is_contained_in(self, other: ParahoricLabel) -> bool {
        use ParahoricLabel::*;
        self == other
            || matches!(
                (self, other),
                (I, _) | (JP, K) | (JQ, K) | (JQ, KTilde)
            )
    }

    pub fn is_maximal(self) -> bool {
        matches!(self, ParahoricLabel::K | ParahoricLabel::KTilde)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ParahoricLabel::K => "K",
            ParahoricLabel::KTilde => "K~",
            ParahoricLabel::JP => "J_P",
            ParahoricLabel::JQ => "J_Q",
            ParahoricLabel::I => "I",
        }
    }
}

/// Fixed-space dimensions in the order K, K̃, J_P, J_Q, I.
pub type Dims = [u32; 5];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IwahoriType {
    #[serde(rename = "type")]
    pub label: IwahoriLabel,
    #[serde(rename = "N")]
    pub monodromy: OrbitLabel,
    pub dims: Dims,
    pub discrete_series: bool,
    pub inducing_data: &'static str,
}

impl IwahoriType {
    pub fn dim(&self, p: ParahoricLabel) -> u32 {
        self.dims[ParahoricLabel::ALL.iter().position(|&x| x == p).unwrap()]
    }
}

const ROWS: [(IwahoriLabel, OrbitLabel, Dims, bool, &str); 6] = [
    (IwahoriLabel::I, OrbitLabel::N0, [1, 2, 4, 4, 8], false, "χ1 × χ2 ⋊ χ3"),
    (IwahoriLabel::IIa, OrbitLabel::N1, [0, 1, 1, 2, 4], false, "St_GL(2)(χ1) ⋊ χ2"),
    (IwahoriLabel::IIIa, OrbitLabel::N2, [0, 0, 2, 1, 4], false, "χ1 ⋊ St_GL(2)(χ2)"),
    (IwahoriLabel::IVa, OrbitLabel::N3, [0, 0, 0, 0, 1], true, "St_GSp(4)(χ)"),
    (IwahoriLabel::Va, OrbitLabel::N2, [0, 0, 0, 1, 2], true, "⊂ St_GL(2)(ν^{1/2}ξ0) ⋊ ν^{-1/2}χ"),
    (IwahoriLabel::VIa, OrbitLabel::N2, [0, 0, 1, 1, 3], false, "⊂ 1 ⋊ St_GL(2)(χ)"),
];

pub fn table() -> Vec<IwahoriType> {
    ROWS.iter()
        .map(|&(label, monodromy, dims, discrete_series, inducing_data)| IwahoriType {
            label,
            monodromy,
            dims,
            discrete_series,
            inducing_data,
        })
        .collect()
}

pub fn table_row(label: IwahoriLabel) -> IwahoriType {
    table().into_iter().find(|r| r.label == label).expect("every label has a row")
}

pub fn table_row_by_name(name: &str) -> Result<IwahoriType, TableError> {
    Ok(table_row(name.parse()?))
}

pub fn classify_from_dims(dims: &Dims) -> Option<IwahoriLabel> {
    table().into_iter().find(|r| &r.dims == dims).map(|r| r.label)
}

/// Aligned text with columns type, N, K, K̃, J_P, J_Q, I.
pub fn render_table_text() -> String {
    let header = ["type", "N", "K", "K~", "J_P", "J_Q", "I"];
    let mut lines = vec![header.to_vec().iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    for r in table() {
        let n = if r.monodromy == OrbitLabel::N0 { "0".to_string() } else { r.monodromy.to_string() };
        let mut cells = vec![r.label.to_string(), n];
        cells.extend(r.dims.iter().map(|d| d.to_string()));
        lines.push(cells);
    }
    let widths: Vec<usize> = (0..header.len()).map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap()).collect();
    lines
        .iter()
        .map(|l| {
            l.iter().zip(&widths).map(|(s, w)| format!("{:<w$}", s, w = *w)).collect::<Vec<_>>().join("  ").trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// One equivalence of the monodromy-rank corollary, evaluated on a row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub rank: usize,
    pub property: &'static str,
    pub rank_holds: bool,
    pub property_holds: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    #[serde(rename = "type")]
    pub label: IwahoriLabel,
    pub monodromy_rank: usize,
    pub equivalences: Vec<Equivalence>,
    /// A unique J_P-fixed line does not force rank 1: true when this row witnesses that.
    pub unique_jp_line_without_rank_one: bool,
}

impl RankReport {
    pub fn all_consistent(&self) -> bool {
        self.equivalences.iter().all(|e| e.consistent)
    }
}

pub fn monodromy_rank_equivalences(row: &IwahoriType) -> RankReport {
    use ParahoricLabel::*;
    let rank = row.monodromy.rank();
    let ramified = row.dim(K) == 0;
    let eq = |r: usize, property: &'static str, holds: bool| Equivalence {
        rank: r,
        property,
        rank_holds: rank == r,
        property_holds: holds,
        consistent: (rank == r) == holds,
    };
    let steinberg = row.label == IwahoriLabel::IVa;
    let unique_jq = row.dim(JQ) == 1;
    let para_spherical = row.dim(KTilde) >= 1 && ramified;
    // cross-check the labels against the stored dims
    let jq_labels = matches!(row.label, IwahoriLabel::IIIa | IwahoriLabel::Va | IwahoriLabel::VIa);
    let ps_labels = row.label == IwahoriLabel::IIa;
    RankReport {
        label: row.label,
        monodromy_rank: rank,
        equivalences: vec![
            eq(3, "Steinberg type", steinberg && row.discrete_series && row.dim(I) == 1),
            eq(2, "unique J_Q-fixed line", unique_jq && jq_labels),
            eq(1, "para-spherical", para_spherical && ps_labels),
        ],
        unique_jp_line_without_rank_one: row.dim(JP) == 1 && rank != 1,
    }
}

/// η with rows (0,0,1,0), (0,0,0,1), (ϖ,0,0,0), (0,ϖ,0,0); checks η² = ϖ·I and c(η) = −ϖ.
pub fn atkin_lehner(varpi: &Scalar) -> Result<Matrix, TableError> {
    if varpi.is_zero() {
        return Err(TableError::ZeroUniformizer);
    }
    let mut eta = Matrix::zeros(4, 4);
    eta.set(0, 2, Scalar::one());
    eta.set(1, 3, Scalar::one());
    eta.set(2, 0, varpi.clone());
    eta.set(3, 1, varpi.clone());
    if &eta * &eta != Matrix::scalar(4, varpi) {
        return Err(TableError::Internal("η² != ϖ·I".into()));
    }
    match similitude(&eta) {
        Ok(Some(c)) if c == -varpi.clone() => Ok(eta),
        _ => Err(TableError::Internal("c(η) != −ϖ".into())),
    }
}

/// The inertia action 1 ⊕ 1 ⊕ χ ⊕ χ through a cyclic tame quotient, N = 0.
#[derive(Clone, Debug)]
pub struct TameInertiaShape {
    /// Representation of ℤ/m (m the order of χ) with the generator acting by diag(1, 1, χ, χ).
    pub rep: GroupRep,
    pub monodromy: Matrix,
    pub trivial_eigenspace: Vec<Vec<Scalar>>,
    pub chi_eigenspace: Vec<Vec<Scalar>>,
    /// Similitude factor of the generator's image.
    pub similitude: Scalar,
}

/// Builds the shape with 1 on span(e₁, e₂) and χ on span(e₃, e₄), checks both spans are
/// totally isotropic for J and the image lies in GSp₄. `p` is the residue characteristic.
pub fn tame_inertia_shape(chi: &Scalar, p: u32) -> Result<TameInertiaShape, TableError> {
    if chi.is_one() {
        return Err(TableError::TrivialCharacter);
    }
    let (order, _) = chi.root_of_unity().ok_or(TableError::NotRootOfUnity)?;
    if p > 0 && order % p == 0 {
        return Err(TableError::NotTame { order, p });
    }
    let g = Arc::new(construct::cyclic(order as usize));
    let t = Matrix::diag(&[Scalar::one(), Scalar::one(), chi.clone(), chi.clone()]);
    let rep = GroupRep::from_generators(g, &[(1, t.clone())]).map_err(|e| TableError::Internal(e.to_string()))?;
    let e = |i: usize| (0..4).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>();
    let ones = vec![e(0), e(1)];
    let chis = vec![e(2), e(3)];
    let j = form_matrix();
    for space in [&ones, &chis] {
        for x in space.iter() {
            for y in space.iter() {
                let v: Scalar = x.iter().zip(j.mul_vec(y)).map(|(a, b)| a * &b).sum();
                if !v.is_zero() {
                    return Err(TableError::Internal("eigenspace is not isotropic".into()));
                }
            }
        }
    }
    let c = similitude(&t)
        .map_err(|e| TableError::Internal(e.to_string()))?
        .ok_or_else(|| TableError::Internal("image is not a similitude".into()))?;
    Ok(TameInertiaShape { rep, monodromy: Matrix::zeros(4, 4), trivial_eigenspace: ones, chi_eigenspace: chis, similitude: c })
}

/// Restriction of a character of F_v^* to the units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ramification {
    Unramified,
    /// Tamely ramified; the value is the character on a generator of 𝔽_v^*.
    Tame(Scalar),
    Wild,
}

/// The generic shapes for which χ-fixed vectors are decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InducingShape {
    /// χ₁ × χ₂ ⋊ σ.
    PrincipalSeries(Ramification, Ramification, Ramification),
    /// χ ⋊ St_GL(2)(σ), induced from the Klingen parabolic.
    KlingenSteinberg(Ramification, Ramification),
    /// St_GL(2)(χ) ⋊ σ, induced from the Siegel parabolic.
    SiegelSteinberg(Ramification, Ramification),
    /// St_GSp(4)(χ).
    Steinberg(Ramification),
    /// A generic supercuspidal.
    Supercuspidal,
}

fn parse_ram(s: &str) -> Result<Ramification, TableError> {
    let s = s.trim();
    match s {
        "unram" => Ok(Ramification::Unramified),
        "wild" => Ok(Ramification::Wild),
        _ => {
            let v = s
                .strip_prefix("tame:")
                .ok_or_else(|| TableError::UnknownDescriptor(format!("character {:?}", s)))?;
            let x: Scalar = v.trim().parse().map_err(|e: crate::exact::ParseError| TableError::UnknownDescriptor(e.to_string()))?;
            if x.is_one() {
                Ok(Ramification::Unramified)
            } else {
                Ok(Ramification::Tame(x))
            }
        }
    }
}

impl FromStr for InducingShape {
    type Err = TableError;

    /// `ps(a, b, c)`, `klingen_st(a, b)`, `siegel_st(a, b)`, `steinberg(a)` or `supercuspidal`,
    /// with each argument `unram`, `wild` or `tame:<scalar>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "supercuspidal" {
            return Ok(InducingShape::Supercuspidal);
        }
        let unknown = || TableError::UnknownDescriptor(s.to_string());
        let open = s.find('(').ok_or_else(unknown)?;
        let body = s[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
        let args = body.split(',').map(parse_ram).collect::<Result<Vec<_>, _>>()?;
        let mut it = args.into_iter();
        let mut next = || it.next().ok_or_else(unknown);
        let shape = match &s[..open] {
            "ps" => InducingShape::PrincipalSeries(next()?, next()?, next()?),
            "klingen_st" => InducingShape::KlingenSteinberg(next()?, next()?),
            "siegel_st" => InducingShape::SiegelSteinberg(next()?, next()?),
            "steinberg" => InducingShape::Steinberg(next()?),
            _ => return Err(unknown()),
        };
        if next().is_ok() {
            return Err(unknown());
        }
        Ok(shape)
    }
}

/// Whether π^{J_Q, χ} ≠ 0, by case analysis on the inducing shape: only χ̃ × (unram.) ⋊ (unram.)
/// with χ̃ tame extending χ survives (χ̃ may sit in either GL(1) slot, the two being
/// Weyl-conjugate). Every Steinberg-type or supercuspidal shape gives zero.
pub fn klingen_chi_test(shape: &InducingShape, chi: &Scalar) -> Result<bool, TableError> {
    if chi.is_one() {
        return Err(TableError::TrivialCharacter);
    }
    let extends = |r: &Ramification| matches!(r, Ramification::Tame(x) if x == chi);
    Ok(match shape {
        InducingShape::PrincipalSeries(a, b, c) => {
            *c == Ramification::Unramified
                && ((extends(a) && *b == Ramification::Unramified) || (extends(b) && *a == Ramification::Unramified))
        }
        _ => false,
    })
}

/// s₁ and s₂, the simple reflections used for Q\G/J_Q = {1, s₁, s₁s₂s₁}.
pub fn weyl_reflections() -> (Matrix, Matrix) {
    let s1 = Matrix::from_ints(&[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
    let s2 = Matrix::from_ints(&[[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 1]]);
    (s1, s2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_distinct_and_invert() {
        for r in table() {
            assert_eq!(classify_from_dims(&r.dims), Some(r.label));
        }
        assert_eq!(classify_from_dims(&[9, 9, 9, 9, 9]), None);
        assert_eq!(table_row(IwahoriLabel::Va).dims, [0, 0, 0, 1, 2]);
        assert!(table_row_by_name("VIIa").is_err());
    }

    #[test]
    fn dims_respect_containment() {
        for r in table() {
            for a in ParahoricLabel::ALL {
                for b in ParahoricLabel::ALL {
                    if a.is_contained_in(b) {
                        assert!(r.dim(b) <= r.dim(a), "{:?}: {:?} ⊆ {:?}", r.label, a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn rank_report() {
        for r in table() {
            let rep = monodromy_rank_equivalences(&r);
            assert!(rep.all_consistent(), "{:?}", rep);
        }
        assert!(monodromy_rank_equivalences(&table_row(IwahoriLabel::VIa)).unique_jp_line_without_rank_one);
    }

    #[test]
    fn eta() {
        let w = Scalar::from_i64(5);
        let eta = atkin_lehner(&w).unwrap();
        assert_eq!(eta.pow(2), Matrix::scalar(4, &w));
        assert!(atkin_lehner(&Scalar::one()).unwrap().pow(4).is_identity());
        assert_eq!(atkin_lehner(&Scalar::zero()), Err(TableError::ZeroUniformizer));
    }

    #[test]
    fn tame_shape() {
        let s = tame_inertia_shape(&Scalar::zeta(3, 1), 7).unwrap();
        assert!(s.monodromy.is_zero());
        assert_eq!(s.rep.group().order(), 3);
        assert_eq!(tame_inertia_shape(&Scalar::one(), 7).unwrap_err(), TableError::TrivialCharacter);
        assert!(matches!(tame_inertia_shape(&Scalar::zeta(3, 1), 3), Err(TableError::NotTame { .. })));
    }

    #[test]
    fn chi_test() {
        let chi = Scalar::zeta(3, 1);
        let ps: InducingShape = "ps(tame:z3^1, unram, unram)".parse().unwrap();
        assert!(klingen_chi_test(&ps, &chi).unwrap());
        let st: InducingShape = "klingen_st(tame:z3^1, unram)".parse().unwrap();
        assert!(!klingen_chi_test(&st, &chi).unwrap());
        let unr: InducingShape = "ps(unram, unram, unram)".parse().unwrap();
        assert!(!klingen_chi_test(&unr, &chi).unwrap());
        let other: InducingShape = "ps(tame:z3^2, unram, unram)".parse().unwrap();
        assert!(!klingen_chi_test(&other, &chi).unwrap());
        assert!("borel(unram)".parse::<InducingShape>().is_err());
    }

    #[test]
    fn reflections_are_similitudes() {
        let (s1, s2) = weyl_reflections();
        assert!(similitude(&s1).unwrap().is_some());
        assert!(similitude(&s2).unwrap().is_some());
    }
}
