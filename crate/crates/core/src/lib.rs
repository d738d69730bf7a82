//! Bargmann scenarios and their invariants.
//!
//! A *scenario* is a finite set of cyclic words over positive-integer letters.
//! Each word `(l1, ..., lm)` indexes the multivariate trace
//! `Tr(rho_l1 ... rho_lm)` of a tuple of positive operators. This crate
//! evaluates those invariants, builds the classical (jointly diagonal)
//! polytope of a scenario in exact arithmetic, and decides whether a vector
//! of invariants leaves that polytope, which certifies set coherence of the
//! underlying states.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod analytic;
pub mod combinators;
mod error;
pub mod exact;
pub mod families;
pub mod invariants;
pub mod linalg;
mod lp;
pub mod polytope;
pub mod random;
pub mod scenario;
mod verdict;

pub use error::{Error, Result};
pub use invariants::{
    bargmann, classical_point, evaluate, gram_invariants, incoherent_realization,
    pointedness_functional, schatten2_distance_sq, ClassicalModel, DensityOperator, GramMatrix,
    InvariantVector, Realization,
};
pub use polytope::{
    affine_hull, facet_enumerate, max_violation, verify_facet, vertex_enumerate, FacetCheck,
    FacetInequality, HRepresentation, HullLimits, MembershipReport, Provenance, VertexSet,
};
pub use scenario::{
    build_scenario, canonical_form, classify, event_graph_scenario, full_scenario, Classification,
    Letter, Scenario, Word,
};
pub use verdict::Verdict;
