//! Exact computations around Weil–Deligne representations and GSp(4).
//!
//! Everything is exact: scalars live in cyclotomic fields (square roots of rationals are
//! embedded through Gauss sums), and all decisions are made by canonical-form comparison.

pub mod exact;
pub mod groups;
pub mod symplectic;
pub mod weil_deligne;
pub mod gsp4_tables;
pub mod conductors;
pub mod hodge_tate;
pub mod patching;
pub mod cli;
mod serde_util;

pub use exact::{Matrix, Poly, Scalar};
