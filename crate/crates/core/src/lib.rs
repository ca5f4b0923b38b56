//! Exact computation of the Θ-invariant of rational homology spheres from
//! Heegaard diagrams, via Θ = ℓ₂ + lk − e over the rationals.
//!
//! The pipeline is: parse a rectangular layout ([`layout::parse_layout`]),
//! check its conventions ([`layout::validate_layout`]), read off the
//! combinatorial diagram ([`layout::derive_combinatorics`]), and evaluate
//! the invariant ([`invariants::theta_report`], or [`theta`] for all of it
//! at once).

pub mod corpus;
pub mod diagram;
pub mod invariants;
pub mod layout;
pub mod matrix;
pub mod rational;
pub mod report;

pub use invariants::{compute, theta, Computation, ComputeRequest, ThetaError};
