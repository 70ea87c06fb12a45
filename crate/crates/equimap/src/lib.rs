//! Semi-equivelar maps on the torus and the Klein bottle.
//!
//! The crate represents finite polyhedral maps combinatorially, classifies
//! them by the face-cycle type of their vertices, enumerates the admissible
//! types on Euler-characteristic-zero surfaces by exact arithmetic, computes
//! automorphism groups and orbits through flag propagation, generates torus
//! maps as quotients of Archimedean tilings by integer translation lattices,
//! and ships a catalog of eighteen example maps together with the auxiliary
//! graph constructions that certify most of them as not vertex-transitive.
//!
//! Start with the `examples/` directory: each example exercises one of these
//! capabilities end to end. The `equimap` binary exposes the same operations
//! as subcommands, including `verify-paper`, which runs the whole verification
//! suite.

pub mod automorphism;
pub mod aux_graphs;
pub mod catalog;
pub mod classifier;
pub mod enumerator;
pub mod map;
pub mod tilings;
pub mod verify;

pub use automorphism::{
    are_isomorphic, automorphism_group, is_face_transitive, is_vertex_transitive, vertex_orbits,
    FlagSystem, MapAutomorphism,
};
pub use aux_graphs::{
    auxiliary_graph, cycle_components, transitivity_obstruction, AuxGraphSpec, Selector,
};
pub use classifier::{classify, face_cycle_type, Classification, TypeString};
pub use enumerator::{admissible_types, solve_vertex_equation, violates_restriction, Surface};
pub use map::{build_map, MapError, PolyhedralMap, SurfaceInfo};
pub use tilings::{builtin_tilings, torus_quotient, LatticeBasis, TilingSpec};
pub use verify::{paper_report, Report};
