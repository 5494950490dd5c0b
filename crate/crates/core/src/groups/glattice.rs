//! G-lattices: `Z^n` with a group acting by integer matrices.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::exact::{solve_matrix, IMat, IntLattice};
use crate::{Error, Result};

use super::FiniteGroup;

/// A free abelian group `Z^rank` with a `G`-action. The matrix of every
/// group element is stored, computed once along the closure words; the
/// constructor rejects generator matrices that do not define a
/// homomorphism.
#[derive(Clone)]
pub struct GLattice {
    group: Arc<FiniteGroup>,
    rank: usize,
    gen_mats: Vec<IMat>,
    elem_mats: Vec<IMat>,
}

impl std::fmt::Debug for GLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GLattice(rank {}, group order {})",
            self.rank,
            self.group.order()
        )
    }
}

impl GLattice {
    pub fn new(group: Arc<FiniteGroup>, rank: usize, gen_mats: Vec<IMat>) -> Result<GLattice> {
        if gen_mats.len() != group.generators().len() {
            return Err(Error::NotAnAction(format!(
                "{} matrices for {} generators",
                gen_mats.len(),
                group.generators().len()
            )));
        }
        for m in &gen_mats {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::Dimension(format!(
                    "action matrix is {}x{}, expected {rank}x{rank}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let n = group.order();
        let mut elem_mats = vec![IMat::identity(rank); n];
        // Fill along the closure words: every element has a word
        // `parent · gen` with `parent` of smaller index.
        for i in 1..n {
            let (parent, gen_pos) = group.word(i).expect("non-identity element has a word");
            elem_mats[i] = elem_mats[parent].mul(&gen_mats[gen_pos]);
        }
        // Homomorphism check over the whole multiplication action.
        for x in 0..n {
            for (pos, &g) in group.generators().iter().enumerate() {
                let product = group.mul(x, g);
                if elem_mats[product] != elem_mats[x].mul(&gen_mats[pos]) {
                    return Err(Error::NotAnAction(format!(
                        "matrices are inconsistent at element {product}"
                    )));
                }
            }
        }
        Ok(GLattice {
            group,
            rank,
            gen_mats,
            elem_mats,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gen_mats(&self) -> &[IMat] {
        &self.gen_mats
    }

    pub fn elem_mat(&self, element: usize) -> &IMat {
        &self.elem_mats[element]
    }

    /// Trace of each class representative: the lattice character.
    pub fn character(&self) -> Vec<BigInt> {
        self.group
            .conjugacy_classes()
            .reps()
            .iter()
            .map(|&r| self.elem_mats[r].trace())
            .collect()
    }

    /// Is the sublattice carried into itself by the whole action?
    pub fn is_invariant(&self, sub: &IntLattice) -> bool {
        let lat = sub.clone();
        self.gen_mats.iter().all(|a| {
            a.mul(sub.basis())
                .columns()
                .all(|c| lat.member(&c))
        })
    }

    /// Action restricted to an invariant sublattice, in the coordinates
    /// of its basis.
    pub fn restrict(&self, sub: &IntLattice) -> Result<GLattice> {
        let basis = sub.basis().to_rational();
        let mut mats = Vec::with_capacity(self.gen_mats.len());
        for a in &self.gen_mats {
            let image = a.to_rational().mul(&basis);
            let coords = solve_matrix(&basis, &image).ok_or(Error::NotInvariant)?;
            let integral = coords.to_integer().ok_or(Error::NotInvariant)?;
            mats.push(integral);
        }
        GLattice::new(self.group.clone(), sub.rank(), mats)
    }

    /// Action induced on `Z^n / sub` for a pure invariant sublattice.
    /// Returns the quotient lattice together with the adapted basis `p`
    /// (first columns spanning `sub`) and its inverse.
    pub fn quotient(&self, sub: &IntLattice) -> Result<(GLattice, IMat, IMat)> {
        if !self.is_invariant(sub) {
            return Err(Error::NotInvariant);
        }
        let (p, pinv) = sub.adapted_basis()?;
        let r = sub.rank();
        let q = self.rank - r;
        let mut mats = Vec::with_capacity(self.gen_mats.len());
        for a in &self.gen_mats {
            let m = pinv.mul(a).mul(&p);
            // invariance makes the bottom-left block vanish
            for row in r..self.rank {
                for col in 0..r {
                    if !num_traits::Zero::is_zero(&m[(row, col)]) {
                        return Err(Error::NotInvariant);
                    }
                }
            }
            mats.push(m.submatrix(r..self.rank, r..self.rank));
        }
        let quotient = GLattice::new(self.group.clone(), q, mats)?;
        Ok((quotient, p, pinv))
    }

    /// Block-diagonal sum of two actions of the same group.
    pub fn direct_sum(&self, other: &GLattice) -> GLattice {
        assert!(Arc::ptr_eq(&self.group, &other.group), "same group required");
        let mats = self
            .gen_mats
            .iter()
            .zip(&other.gen_mats)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        GLattice::new(self.group.clone(), self.rank + other.rank, mats)
            .expect("sum of actions is an action")
    }

    /// Conjugated action `g ↦ u · h(g) · u⁻¹` for unimodular `u`.
    pub fn conjugated(&self, u: &IMat, uinv: &IMat) -> GLattice {
        let mats = self
            .gen_mats
            .iter()
            .map(|a| u.mul(a).mul(uinv))
            .collect();
        GLattice::new(self.group.clone(), self.rank, mats).expect("conjugate action")
    }
}

/// The permutation lattice `Z[G/H]` with the left `G`-action. `H` is
/// given by generator elements; cosets are ordered by their least
/// element index.
pub fn induced_trivial_lattice(group: &Arc<FiniteGroup>, h_gens: &[usize]) -> Result<GLattice> {
    let subgroup = group.close_subset(h_gens);
    induced_from_subgroup(group, &subgroup)
}

/// Same as [`induced_trivial_lattice`] but `H` is a full element list,
/// which must be closed.
pub fn induced_from_subgroup(group: &Arc<FiniteGroup>, subgroup: &[usize]) -> Result<GLattice> {
    group.verify_subgroup(subgroup)?;
    let reps = group.coset_reps(subgroup);
    let index_of_coset = {
        let mut map = vec![usize::MAX; group.order()];
        for (c, &rep) in reps.iter().enumerate() {
            for &h in subgroup {
                map[group.mul(rep, h)] = c;
            }
        }
        map
    };
    let k = reps.len();
    let mut mats = Vec::new();
    for &g in group.generators() {
        let mut m = IMat::zeros(k, k);
        for (c, &rep) in reps.iter().enumerate() {
            let image = index_of_coset[group.mul(g, rep)];
            m[(image, c)] = num_traits::One::one();
        }
        mats.push(m);
    }
    GLattice::new(group.clone(), k, mats)
}

/// The regular lattice `Z[G]` with the left action.
pub fn regular_lattice(group: &Arc<FiniteGroup>) -> GLattice {
    induced_from_subgroup(group, &[group.identity()]).expect("regular action")
}
