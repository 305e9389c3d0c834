//! Planar diagram codes, arcs, and Reidemeister moves.

mod catalog;
mod moves;
mod pd;
mod planar;

pub use catalog::{catalog, catalog_names};
pub use moves::{
    apply_move, canonical_labels, detect_sites, random_insertion, reidemeister_variants, Layer,
    MoveKind, MoveSite, Side,
};
pub use pd::{parse_pd, Crossing, PdCode};
pub use planar::{build_diagram, CrossingRelation, Dart, PlanarDiagram};
