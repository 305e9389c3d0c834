//! Fox colorings of knot and link diagrams.
//!
//! A PD code is turned into a [`diagram::PlanarDiagram`], whose coloring
//! matrix is reduced to Smith normal form ([`linalg::smith_normal_form`]).
//! The invariant factors give the determinant, `p`-nullities and coloring
//! counts; colorings are enumerated from the same decomposition and split
//! into orbits under the affine automorphism group of `Z_m` or its inner
//! subgroup ([`orbits`]).
//!
//! ```
//! use fox_coloring::coloring::{coloring_smith, count_colorings, enumerate_colorings, p_nullity};
//! use fox_coloring::diagram::{build_diagram, catalog};
//! use fox_coloring::orbits::{build_group, orbit_partition, GroupKind};
//!
//! let d = build_diagram(catalog("4_1").unwrap());
//! let sd = coloring_smith(&d);
//! assert_eq!(p_nullity(&sd, 5).unwrap(), 2);
//! assert_eq!(count_colorings(&sd, 5).unwrap(), 25u32.into());
//!
//! let colorings = enumerate_colorings(&d, 5, true).unwrap();
//! let inner = orbit_partition(&colorings, &build_group(GroupKind::Inn, 5).unwrap()).unwrap();
//! assert_eq!(inner.sizes(), vec![10, 10]);
//! ```

pub mod coloring;
pub mod diagram;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod orbits;
pub mod primes;

pub use error::{Error, Result};
pub use exec::Execution;
