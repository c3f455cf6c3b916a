//! Finite groups given by multiplication tables, their subgroups and matrix representations.

pub mod construct;
mod json;
mod group;
mod irreps;
mod rep;

pub use group::{FiniteGroup, Subgroup, DEFAULT_ORDER_BOUND};
pub use json::{element_ref, named_group, GroupJson, RepJson};
pub use irreps::{linear_character_exponents, linear_characters, monomial_irreps, small_subgroups};
pub use rep::{
    conjugate_rep, decompose, extend_invariant_irrep, induce, induced_character, inner_product, intertwiner,
    is_irreducible, quotient_characters, restrict, Extension, GroupRep,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("group of order {order} exceeds the bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("objects live on different groups")]
    MismatchedGroups,
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("quotient is not cyclic of prime order")]
    NotPrimeCyclicQuotient,
    #[error("representation is reducible")]
    Reducible,
    #[error("representation is not invariant under conjugation")]
    NotInvariant,
    #[error("character is not in the span of the listed constituents")]
    IncompleteConstituents,
    #[error("root outside the representable tower: {0}")]
    RootOutsideTower(String),
    #[error("could not find all irreducibles by inducing linear characters")]
    NotMonomial,
}
