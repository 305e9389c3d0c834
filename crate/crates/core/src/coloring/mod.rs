//! Fox colorings: the coloring matrix, its invariants, and enumeration.

mod enumerate;
mod matrix;
mod profile;
mod types;

pub use enumerate::{
    brute_force_colorings, brute_force_count, enumerate_colorings, enumerate_colorings_with,
    EnumerationOptions, BRUTE_FORCE_LIMIT, DEFAULT_BUDGET,
};
pub use matrix::{coloring_matrix, ColoringMatrix};
pub use profile::{
    coloring_smith, count_colorings, generating_arcs, link_determinant, p_nullity, ColoringProfile,
};
pub use types::{satisfies_relations, Coloring, ColoringJson};
