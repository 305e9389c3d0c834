//! Coloring automorphism groups acting on colorings, and their orbits.

mod action;
mod group;
mod partition;
mod verify;

pub use action::{apply_map, apply_permutation_unchecked, permutation_from_cycles};
pub use group::{build_group, AffineMap, GroupKind, GroupSpec};
pub use partition::{orbit_partition, orbit_partition_with, Orbit, OrbitPartition};
pub use verify::{
    predicted_class_count, verify_counts, DiagramCounts, VerificationReport, VerifyOptions,
    DEFAULT_SEED,
};
