//! The classical (Bargmann) polytope of a scenario.
//!
//! Its points are the invariant vectors of tuples diagonal in one common
//! basis. The polytope is the convex hull of the 0/1 vectors `lambda_alpha`
//! of deterministic assignments `alpha: L -> {1..|L|}`, where coordinate
//! `w` is 1 exactly when `alpha` is constant on the letters of `w`.
//!
//! Vertices, the affine hull and the facets are computed in exact integer
//! and rational arithmetic. Floating point only enters when testing the
//! membership of measured points.

mod facet;
mod hull;
mod membership;
mod vertices;

pub use facet::{max_violation, verify_facet, FacetCheck, FacetInequality, Provenance};
pub use hull::{
    affine_hull, facet_enumerate, facet_enumerate_with, AffineHull, HRepresentation, HullLimits,
    LinearConstraint,
};
pub use membership::{
    membership, membership_exact, ConstraintKind, MembershipReport, Polytope, Violation,
    DEFAULT_MEMBERSHIP_TOL,
};
pub use vertices::{
    vertex_enumerate, vertex_enumerate_capped, vertex_enumerate_with_alphabet, Assignment,
    VertexSet, DEFAULT_ASSIGNMENT_CAP,
};
