//! The Iwahori-spherical generic types, their monodromy, and inversion from fixed-space dimensions.

use gsp4_core::gsp4_tables::{classify_from_dims, monodromy_rank_equivalences, render_table_text, table};

fn main() {
    println!("{}", render_table_text());
    for row in table() {
        let report = monodromy_rank_equivalences(&row);
        println!(
            "{:?}: dims {:?} -> {:?}; rank statements consistent: {}",
            row.label,
            row.dims,
            classify_from_dims(&row.dims).unwrap(),
            report.all_consistent()
        );
    }
}
