//! Sublattices of `Z^n` in canonical Hermite form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One,Zero};

use super::hnf::{hnf, int_kernel, snf};
use super::linalg::inverse;
use super::matrix::IMat;
use crate::{Error, Result};

/// A sublattice of `Z^ambient`, stored as an `ambient × rank` basis in
/// canonical column Hermite form. Equal lattices have equal bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntLattice {
    ambient: usize,
    basis: IMat,
}

impl IntLattice {
    /// Lattice spanned by the columns of `m` (dependent or redundant
    /// columns are fine).
    pub fn from_columns(ambient: usize, m: &IMat) -> Self {
        assert_eq!(m.rows(), ambient);
        let n = hnf(m);
        IntLattice {
            ambient,
            basis: n.h.submatrix(0..ambient, 0..n.rank),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        IntLattice {
            ambient,
            basis: IMat::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        IntLattice {
            ambient,
            basis: IMat::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IMat {
        &self.basis
    }

    /// True iff `v` is an integer combination of the basis columns,
    /// decided by back-substitution along the Hermite staircase.
    pub fn member(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut residue = v.to_vec();
        let mut col = 0;
        for row in 0..self.ambient {
            if col < self.rank() && !self.basis[(row, col)].is_zero() {
                let (q, r) = residue[row].div_rem(&self.basis[(row, col)]);
                if !r.is_zero() {
                    return false;
                }
                for i in row..self.ambient {
                    let t = &self.basis[(i, col)] * &q;
                    residue[i] -= t;
                }
                col += 1;
            } else if !residue[row].is_zero() {
                return false;
            }
        }
        true
    }

    pub fn contains(&self, other: &IntLattice) -> bool {
        assert_eq!(self.ambient, other.ambient);
        other.basis.columns().all(|c| self.member(&c))
    }

    /// Smallest pure sublattice containing this one: the integer points
    /// of the rational span. Computed from the row transform of the
    /// Smith form, which scales the invariant factors away.
    pub fn saturate(&self) -> IntLattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let n = snf(&self.basis);
        let uinv = inverse(&n.u.to_rational())
            .expect("unimodular")
            .to_integer()
            .expect("unimodular inverse is integral");
        let first = uinv.submatrix(0..self.ambient, 0..self.rank());
        IntLattice::from_columns(self.ambient, &first)
    }

    /// True iff `Z^n` modulo this lattice is torsion-free, i.e. all
    /// invariant factors of the basis are 1.
    pub fn is_pure(&self) -> bool {
        snf(&self.basis).factors.iter().all(|f| f.is_one())
    }

    /// Intersection of two sublattices of the same ambient space.
    pub fn intersect(&self, other: &IntLattice) -> IntLattice {
        assert_eq!(self.ambient, other.ambient, "ambient rank mismatch");
        if self.rank() == 0 || other.rank() == 0 {
            return IntLattice::zero(self.ambient);
        }
        // solutions of B1·x = -B2·y give the common vectors B1·x
        let stacked = self.basis.hstack(&other.basis);
        let ker = int_kernel(&stacked);
        let x_part = ker.submatrix(0..self.rank(), 0..ker.cols());
        IntLattice::from_columns(self.ambient, &self.basis.mul(&x_part))
    }

    /// Completes the basis of a pure sublattice to a basis of the whole
    /// ambient lattice: returns a unimodular `p` whose first `rank`
    /// columns span this lattice, together with `p⁻¹`.
    pub fn adapted_basis(&self) -> Result<(IMat, IMat)> {
        let r = self.rank();
        let n = snf(&self.basis);
        if !n.factors.iter().all(|f| f.is_one()) {
            return Err(Error::NotPure);
        }
        let uinv = inverse(&n.u.to_rational())
            .expect("unimodular")
            .to_integer()
            .expect("unimodular inverse is integral");
        // first r columns of u⁻¹ span the lattice; u is its inverse
        let p = uinv;
        let pinv = n.u.clone();
        debug_assert_eq!(
            IntLattice::from_columns(self.ambient, &p.submatrix(0..self.ambient, 0..r)),
            *self
        );
        Ok((p, pinv))
    }
}
