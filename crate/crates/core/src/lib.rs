//! Interval-valued fuzzy graphs.
//!
//! Vertices and edges carry membership intervals `[mu, nu]` with
//! `0 <= mu <= nu <= 1`, every edge bounded componentwise by the minimum of
//! its endpoint intervals. On top of the data model ([`IvfGraph`]) the crate
//! provides:
//!
//! - exact fixed-point arithmetic ([`Scalar`], ten-thousandths);
//! - path enumeration, mu/nu distances, eccentricity, radius, diameter and
//!   strength of connectedness ([`metrics`]);
//! - the antipodal graph construction ([`antipodal`]);
//! - vertex status, median set and the self-median test ([`status`]);
//! - homomorphism, isomorphism and co-weak isomorphism searches
//!   ([`morphism`]);
//! - complement, completeness and subgraph tests on [`IvfGraph`] itself,
//!   and generators for standard families ([`generate`]).
//!
//! Everything is exact: distances and statuses are sums and extrema of
//! fixed-point values, and all equality tests (antipodal adjacency,
//! self-median, isomorphism) are exact comparisons.

pub mod antipodal;
pub mod generate;
mod graph;
mod index;
mod interval;
pub mod metrics;
pub mod morphism;
mod scalar;
pub mod status;

pub use graph::{
    GraphError, InvalidVertexId, IvfGraph, ValidationReport, VertexId, VertexPair, Violation,
};
pub use interval::MembershipInterval;
pub use scalar::{ParseScalarError, Scalar};
