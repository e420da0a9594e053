//! Exact homogeneity degrees of the discriminant of complete intersections.
//!
//! A complete intersection of codimension `c` in projective `N`-space is cut
//! out by forms of degrees `d_1, ..., d_c`. Its discriminant is homogeneous in
//! the coefficients of each form and in the variables. This crate computes
//! those partial degrees exactly, in any characteristic.
//!
//! [`formulas`] has the closed forms. [`character`] recovers the same numbers
//! from face moments of a Cayley polytope ([`polytope`]) and from an
//! alternating lattice-point sum. [`oracle_algebraic`] expands small Sylvester
//! resultants and binary discriminants symbolically.

pub mod character;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod oracle_algebraic;
pub mod polytope;

pub use character::CharacterVector;
pub use error::{Error, Result};
pub use exact::{MPoly, Rat, UPoly};
pub use formulas::{DegreeReport, Verdict};
pub use polytope::{Face, LatticeVector, Profile};
