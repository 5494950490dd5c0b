//! Exact computation of real and complex Vasquez invariants of finite groups.
//!
//! The library works entirely in exact arithmetic: arbitrary-precision
//! integers and rationals, real quadratic extensions `Q(√d)`, formal
//! `i`-extensions on top of those, and cyclotomic values for characters.
//! On this foundation it provides
//!
//! * integer-lattice linear algebra (Hermite and Smith normal forms,
//!   saturation, intersection, membership) — [`exact`],
//! * a small finite-group engine (closure from matrix or permutation
//!   generators, conjugacy classes, power maps, prime-order subgroup
//!   representatives) — [`groups`],
//! * complex character tables with Frobenius–Schur indicators, Galois
//!   orbits and Schur indices — [`characters`],
//! * validation and reduction of Bieberbach data: the special-element
//!   (torsion-freeness) tests and the real and complex Vasquez
//!   reductions — [`bieberbach`],
//! * exact complex structures, holomorphic characters and Hodge-type
//!   preserving adaptation — [`cxstruct`],
//! * the invariant calculators and closed forms — [`bounds`].
//!
//! No floating point is used anywhere.

pub mod bieberbach;
pub mod bounds;
pub mod characters;
pub mod cxstruct;
pub mod exact;
pub mod groups;
pub mod json;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
