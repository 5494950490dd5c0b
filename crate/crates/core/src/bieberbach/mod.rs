//! Crystallographic extension data and the torsion-freeness tests.
//!
//! A datum is a faithful integral action together with one rational
//! translation per generator; the translation of every group element is
//! derived along the closure words through the twisted product rule
//! `a_{xg} = a_x + h(x)·a_g (mod Z^n)` and checked for consistency, so
//! a validated datum is exactly a group extension of the holonomy group
//! by `Z^n` with the lattice as maximal abelian subgroup.
//!
//! Restriction to a prime-order subgroup `⟨g⟩` is evaluated through the
//! norm element: with `A = h(g)` and `N_A = I + A + … + A^{p-1}`, the
//! restricted class vanishes iff `N_A·a_g ∈ N_A·Z^n`. The functional
//! form of the same test asks for an integral `A`-fixed functional that
//! is nonzero on `N_A·a_g` modulo `p`.

mod reduce;

pub use reduce::{complex_vasquez_reduce, quotient_datum, vasquez_reduce, ReductionResult};

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{frac_part, int_kernel, IMat, IntLattice, QMat, Rational};
use crate::groups::{FiniteGroup, GLattice};
use crate::{Error, Result};

#[derive(Clone)]
pub struct BieberbachDatum {
    holonomy: GLattice,
    gen_translations: Vec<Vec<Rational>>,
    elem_translations: Vec<Vec<Rational>>,
}

impl std::fmt::Debug for BieberbachDatum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BieberbachDatum(dim {}, holonomy order {})",
            self.dim(),
            self.group().order()
        )
    }
}

impl BieberbachDatum {
    /// Validates raw generator data: closes the matrix group, derives
    /// and checks all element translations, and normalizes them into
    /// `[0,1)`. The holonomy group is the matrix group itself, so the
    /// action is faithful by construction; a pure fractional translation
    /// (identity matrix part) is rejected as a violation of maximality.
    pub fn from_generators(
        dim: usize,
        generators: &[(IMat, Vec<Rational>)],
        limit: usize,
    ) -> Result<BieberbachDatum> {
        for (m, t) in generators {
            if m.rows() != dim || m.cols() != dim || t.len() != dim {
                return Err(Error::Dimension(format!(
                    "generator blocks must be {dim}x{dim} with {dim} translation entries"
                )));
            }
        }
        let mats: Vec<IMat> = generators.iter().map(|(m, _)| m.clone()).collect();
        let group = FiniteGroup::from_matrices(dim, &mats, limit)?;
        let holonomy = GLattice::new(group, dim, mats)?;
        let translations = generators.iter().map(|(_, t)| t.clone()).collect();
        Self::from_action(holonomy, translations)
    }

    /// Assembles a datum over an already-built action (used for
    /// quotients, where the action need not stay faithful). Verifies the
    /// cocycle condition across the whole multiplication table.
    pub fn from_action(
        holonomy: GLattice,
        gen_translations: Vec<Vec<Rational>>,
    ) -> Result<BieberbachDatum> {
        let group = holonomy.group().clone();
        let dim = holonomy.rank();
        if gen_translations.len() != group.generators().len() {
            return Err(Error::Dimension(
                "one translation vector per generator required".into(),
            ));
        }
        let gen_translations: Vec<Vec<Rational>> = gen_translations
            .iter()
            .map(|t| t.iter().map(frac_part).collect())
            .collect();

        let n = group.order();
        let mut elem_translations = vec![vec![Rational::zero(); dim]; n];
        for i in 1..n {
            let (parent, pos) = group.word(i).expect("word");
            elem_translations[i] = twisted_sum(
                &elem_translations[parent],
                holonomy.elem_mat(parent),
                &gen_translations[pos],
            );
        }
        // cocycle condition on every relation
        for x in 0..n {
            for (pos, &g) in group.generators().iter().enumerate() {
                let product = group.mul(x, g);
                let expected = twisted_sum(
                    &elem_translations[x],
                    holonomy.elem_mat(x),
                    &gen_translations[pos],
                );
                if expected != elem_translations[product] {
                    if product == group.identity() {
                        return Err(Error::NotMaximalAbelian);
                    }
                    return Err(Error::CocycleViolation { element: product });
                }
            }
        }
        Ok(BieberbachDatum {
            holonomy,
            gen_translations,
            elem_translations,
        })
    }

    pub fn dim(&self) -> usize {
        self.holonomy.rank()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.holonomy.group()
    }

    pub fn holonomy(&self) -> &GLattice {
        &self.holonomy
    }

    pub fn gen_translations(&self) -> &[Vec<Rational>] {
        &self.gen_translations
    }

    pub fn translation(&self, element: usize) -> &[Rational] {
        &self.elem_translations[element]
    }

    /// `N_A = I + A + … + A^{p-1}` for `A = h(g)`.
    fn norm_matrix(&self, element: usize, p: u64) -> IMat {
        let a = self.holonomy.elem_mat(element);
        let mut power = IMat::identity(self.dim());
        let mut sum = IMat::zeros(self.dim(), self.dim());
        for _ in 0..p {
            sum = sum.add(&power);
            power = power.mul(a);
        }
        sum
    }

    /// `N_A·a_g` as an integer vector; integrality is part of the
    /// validated-datum contract.
    fn norm_translation(&self, element: usize, norm: &IMat) -> Result<Vec<BigInt>> {
        let t = QMat::from_columns(vec![self.elem_translations[element].clone()]);
        let image = norm.to_rational().mul(&t);
        image
            .to_integer()
            .map(|m| m.column(0))
            .ok_or_else(|| Error::Inconsistency("norm of a translation is fractional".into()))
    }

    /// Torsion-freeness: the restriction to every prime-order subgroup
    /// representative is nonvanishing, i.e. `N_A·a ∉ N_A·Z^n`.
    pub fn special_test(&self) -> Result<bool> {
        for (g, p) in self.group().vasquez_set() {
            let norm = self.norm_matrix(g, p);
            let x = self.norm_translation(g, &norm)?;
            let image = IntLattice::from_columns(self.dim(), &norm);
            if image.member(&x) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The functional form of the same predicate: some integral fixed
    /// functional of `h(g)` must be nonzero on `N_A·a` modulo `p`.
    pub fn special_test_functional(&self) -> Result<bool> {
        for (g, p) in self.group().vasquez_set() {
            let norm = self.norm_matrix(g, p);
            let x = self.norm_translation(g, &norm)?;
            if self.first_detecting_functional(g, p, &x).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Integral basis of the fixed functionals of `h(g)`: the integer
    /// kernel of `h(g)ᵀ - I`, in Hermite order.
    pub fn fixed_functionals(&self, element: usize) -> IMat {
        let a = self.holonomy.elem_mat(element);
        let m = a.transpose().sub(&IMat::identity(self.dim()));
        int_kernel(&m)
    }

    /// First fixed functional (in Hermite basis order) with
    /// `φ(x) ≢ 0 (mod p)`.
    pub(crate) fn first_detecting_functional(
        &self,
        element: usize,
        p: u64,
        x: &[BigInt],
    ) -> Option<Vec<BigInt>> {
        let functionals = self.fixed_functionals(element);
        let modulus = BigInt::from(p);
        (0..functionals.cols()).find_map(|c| {
            let phi = functionals.column(c);
            let pairing: BigInt = phi.iter().zip(x).map(|(a, b)| a * b).sum();
            if (pairing % &modulus).is_zero() {
                None
            } else {
                Some(phi)
            }
        })
    }
}

fn twisted_sum(base: &[Rational], mat: &IMat, translation: &[Rational]) -> Vec<Rational> {
    let rotated = mat.to_rational().mul_vec(translation);
    base.iter()
        .zip(&rotated)
        .map(|(a, b)| frac_part(&(a + b)))
        .collect()
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::exact::rat;

    #[test]
    fn torus_validates_and_is_special() {
        let d = torus(2);
        assert!(d.special_test().unwrap());
        assert!(d.special_test_functional().unwrap());
    }

    #[test]
    fn dim6_example_validates() {
        let d = dim6_c2();
        assert_eq!(d.group().order(), 2);
        assert!(d.special_test().unwrap());
        assert!(d.special_test_functional().unwrap());
    }

    #[test]
    fn klein_bottle_is_special_but_flipped_translation_is_not() {
        assert!(klein_bottle().special_test().unwrap());
        assert!(klein_bottle().special_test_functional().unwrap());

        let a = IMat::from_i64_rows(&[vec![1, 0], vec![0, -1]]);
        let d =
            BieberbachDatum::from_generators(2, &[(a, vec![rat(0, 1), rat(1, 2)])], 16).unwrap();
        assert!(!d.special_test().unwrap());
        assert!(!d.special_test_functional().unwrap());
    }

    #[test]
    fn zero_translations_with_nontrivial_group_are_not_special() {
        let a = IMat::from_i64_rows(&[vec![1, 0], vec![0, -1]]);
        let d =
            BieberbachDatum::from_generators(2, &[(a, vec![rat(0, 1), rat(0, 1)])], 16).unwrap();
        assert!(!d.special_test().unwrap());
        assert!(!d.special_test_functional().unwrap());
    }

    #[test]
    fn cocycle_violation_is_rejected() {
        // g of order 2 with N_A·a ∉ Z: (A, a)² is a fractional pure
        // translation, so the closure collides at the identity
        let a = IMat::from_i64_rows(&[vec![1, 0], vec![0, -1]]);
        let err = BieberbachDatum::from_generators(2, &[(a, vec![rat(1, 3), rat(0, 1)])], 16);
        assert!(matches!(err, Err(Error::NotMaximalAbelian)));

        // pure fractional translation generator
        let err = BieberbachDatum::from_generators(
            2,
            &[(IMat::identity(2), vec![rat(1, 2), rat(0, 1)])],
            16,
        );
        assert!(matches!(err, Err(Error::NotMaximalAbelian)));

        // inconsistent pair: (A, a) and (A², b) with b ≢ a + A·a
        let rot = IMat::from_i64_rows(&[vec![0, -1, 0], vec![1, -1, 0], vec![0, 0, 1]]);
        let rot2 = rot.mul(&rot);
        let err = BieberbachDatum::from_generators(
            3,
            &[
                (rot, vec![rat(0, 1), rat(0, 1), rat(1, 3)]),
                (rot2, vec![rat(0, 1), rat(0, 1), rat(1, 3)]),
            ],
            16,
        );
        assert!(matches!(err, Err(Error::CocycleViolation { .. })));
    }

    #[test]
    fn hantzsche_wendt_and_s3_are_special() {
        let hw = hantzsche_wendt();
        assert!(hw.special_test().unwrap());
        assert!(hw.special_test_functional().unwrap());

        let s3 = s3_dim4();
        assert_eq!(s3.group().order(), 6);
        assert!(s3.special_test().unwrap());
        assert!(s3.special_test_functional().unwrap());
    }

    #[test]
    fn functional_detects_the_dim6_translation() {
        let d = dim6_c2();
        let (g, p) = d.group().vasquez_set()[0];
        assert_eq!(p, 2);
        let norm = d.norm_matrix(g, p);
        let x = d.norm_translation(g, &norm).unwrap();
        // N_A·a = e₆, detected by the functional e₆*
        let expected: Vec<BigInt> = (0..6)
            .map(|i| BigInt::from(if i == 5 { 1 } else { 0 }))
            .collect();
        assert_eq!(x, expected);
        let phi = d.first_detecting_functional(g, p, &x).unwrap();
        let pairing: BigInt = phi.iter().zip(&x).map(|(a, b)| a * b).sum();
        assert!(!(pairing % BigInt::from(2)).is_zero());
    }
}
