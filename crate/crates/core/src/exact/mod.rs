//! Exact arithmetic and integer-lattice linear algebra.
//!
//! Scalars are arbitrary-precision throughout: [`Rational`] for `Q`,
//! [`QuadExt`] for real quadratic fields `Q(√d)`, [`FormalI`] for the
//! formal extension by `i` on top of either, and [`Cyclotomic`] for
//! values in `Q(ζ_e)`. Sublattices of `Z^n` are kept in a canonical
//! column Hermite normal form so that lattice equality is matrix
//! equality.

mod cyclotomic;
mod field;
mod formal_i;
mod hnf;
mod lattice;
mod linalg;
mod matrix;
pub(crate) mod poly;
mod quadext;
mod rational;

pub use cyclotomic::Cyclotomic;
pub(crate) use cyclotomic::cyclotomic_polynomial;
pub use field::{ExactField, ExactScalar};
pub use formal_i::FormalI;
pub use hnf::{hnf, int_kernel, snf, Hnf, Snf};
pub use lattice::IntLattice;
pub use linalg::{
    column_space, inverse, kernel_over_field, rank, rref, solve, solve_matrix,
    subspace_intersection,
};
pub use matrix::{IMat, Mat, QMat};
pub use quadext::QuadExt;
pub(crate) use quadext::check_discriminant;
pub use rational::{fmt_rational, frac_part, parse_rational, rat, Rational};
