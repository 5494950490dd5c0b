//! Exact complex structures on G-lattices.
//!
//! A complex structure is a matrix `J` over `Q` or a real quadratic
//! field with `J² = -I` commuting with the action. Its Hodge type is
//! recorded by the holomorphic character
//! `χ^{1,0}(g) = ½(tr h(g) - i·tr(h(g)·J))` — the character of the
//! `+i` eigenspace of `J` on the complexification — and two structures
//! are compared by these characters, which is exact and avoids any
//! eigenvector computation over extension towers.

mod build;

pub use build::{adapt, construct_complex_structure};

use crate::exact::{
    column_space, kernel_over_field, rank, rat, ExactScalar, FormalI, IntLattice, Mat, QMat,
    QuadExt, Rational,
};
use crate::groups::GLattice;
use crate::{Error, Result};

pub type QuadMat = Mat<QuadExt>;
pub type HodgeValue = FormalI<QuadExt>;

/// A verified complex structure on a lattice action.
#[derive(Clone, Debug)]
pub struct ComplexStructure {
    matrix: QuadMat,
    /// `None` for a rational matrix, `Some(d)` for entries in `Q(√d)`.
    field: Option<u64>,
    /// Holomorphic character per conjugacy class.
    hodge: Vec<HodgeValue>,
}

impl ComplexStructure {
    pub fn matrix(&self) -> &QuadMat {
        &self.matrix
    }

    pub fn field(&self) -> Option<u64> {
        self.field
    }

    /// The holomorphic character, one value per conjugacy class.
    pub fn hodge_character(&self) -> &[HodgeValue] {
        &self.hodge
    }
}

pub(crate) fn to_quad(m: &QMat) -> QuadMat {
    m.map(|x| QuadExt::from_rational(x.clone()))
}

/// Embeds a rational matrix into the surd-matrix type.
pub fn from_rational_matrix(m: &QMat) -> QuadMat {
    to_quad(m)
}

fn field_of(m: &QuadMat) -> Result<Option<u64>> {
    let mut field = None;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if let Some(d) = m[(r, c)].discriminant() {
                match field {
                    None => field = Some(d),
                    Some(existing) if existing == d => {}
                    Some(existing) => {
                        return Err(Error::ExtensionRequired(format!(
                            "matrix mixes Q(√{existing}) and Q(√{d})"
                        )))
                    }
                }
            }
        }
    }
    Ok(field)
}

/// Checks `J² = -I` and equivariance, and computes the holomorphic
/// character.
pub fn verify(lattice: &GLattice, j: &QuadMat) -> Result<ComplexStructure> {
    let n2 = lattice.rank();
    if j.rows() != n2 || j.cols() != n2 {
        return Err(Error::Dimension(format!(
            "structure is {}x{}, lattice rank is {n2}",
            j.rows(),
            j.cols()
        )));
    }
    if n2 % 2 != 0 {
        return Err(Error::NotAComplexStructure(
            "odd rank admits no square root of -1".into(),
        ));
    }
    let field = field_of(j)?;
    let minus_one = QuadMat::identity(n2).neg();
    if j.mul(j) != minus_one {
        return Err(Error::NotAComplexStructure("J² ≠ -I".into()));
    }
    for a in lattice.gen_mats() {
        let aq = to_quad(&a.to_rational());
        if aq.mul(j) != j.mul(&aq) {
            return Err(Error::NotAComplexStructure(
                "J does not commute with the action".into(),
            ));
        }
    }
    let hodge = hodge_character(lattice, j);
    // χ^{1,0}(1) = n
    let at_identity = &hodge[lattice.group().conjugacy_classes().class_of(0)];
    let expected = HodgeValue::from_real(QuadExt::from_rational(rat(n2 as i64 / 2, 1)));
    if *at_identity != expected {
        return Err(Error::NotAComplexStructure(
            "holomorphic character is wrong at the identity".into(),
        ));
    }
    Ok(ComplexStructure {
        matrix: j.clone(),
        field,
        hodge,
    })
}

/// `χ^{1,0}(g) = ½(tr h(g) - i·tr(h(g)·J))` per class.
pub(crate) fn hodge_character(lattice: &GLattice, j: &QuadMat) -> Vec<HodgeValue> {
    let classes = lattice.group().conjugacy_classes();
    let half = rat(1, 2);
    classes
        .reps()
        .iter()
        .map(|&rep| {
            let h = to_quad(&lattice.elem_mat(rep).to_rational());
            let re = h.trace();
            let im = h.mul(j).trace();
            HodgeValue::new(
                re.mul(&QuadExt::from_rational(half.clone())),
                im.mul(&QuadExt::from_rational(-half.clone())),
            )
        })
        .collect()
}

/// True iff `J·span(w) ⊆ span(w)`, by exact rank comparison.
pub fn subspace_invariant(j: &ComplexStructure, w: &QuadMat) -> bool {
    let jw = j.matrix.mul(w);
    rank(&w.hstack(&jw)) == rank(w)
}

/// The largest rational subspace of `span_Q(w)` carried into the real
/// span of `w` by `J`: the kernel of the composed projection
/// `v ↦ (complement of w)∘J·v` restricted to `w`. The basis `w` must be
/// rational; each `Q(√d)`-linear condition splits into its rational and
/// surd parts, both of which a rational vector has to satisfy.
pub fn maximal_invariant_subspace(j: &ComplexStructure, w: &QuadMat) -> Result<QMat> {
    if w.cols() == 0 {
        return Ok(QMat::zeros(j.matrix.rows(), 0));
    }
    let w_rat = {
        let mut cols = Vec::with_capacity(w.cols());
        for c in 0..w.cols() {
            let mut col = Vec::with_capacity(w.rows());
            for r in 0..w.rows() {
                match w[(r, c)].as_rational() {
                    Some(v) => col.push(v.clone()),
                    None => {
                        return Err(Error::InvalidInput(
                            "sublattice basis must be rational".into(),
                        ))
                    }
                }
            }
            cols.push(col);
        }
        QMat::from_columns(cols)
    };
    // functionals vanishing on span(w): kernel of wᵀ
    let left_null = kernel_over_field(&w_rat.transpose());
    // conditions on coordinates x: N ᵀ·J·w·x = 0 over Q(√d)
    let conditions = to_quad(&left_null.transpose())
        .mul(&j.matrix)
        .mul(&to_quad(&w_rat));
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for r in 0..conditions.rows() {
        let mut rational_part = Vec::with_capacity(conditions.cols());
        let mut surd_part = Vec::with_capacity(conditions.cols());
        for c in 0..conditions.cols() {
            rational_part.push(conditions[(r, c)].rational_part().clone());
            surd_part.push(conditions[(r, c)].surd_part().clone());
        }
        rows.push(rational_part);
        rows.push(surd_part);
    }
    let system = if rows.is_empty() {
        QMat::zeros(0, w_rat.cols())
    } else {
        QMat::from_rows(rows)
    };
    let x = kernel_over_field(&system);
    Ok(column_space(&w_rat.mul(&x)))
}

/// Equality of Hodge types: the holomorphic characters agree on every
/// class.
pub fn hodge_equal(a: &ComplexStructure, b: &ComplexStructure) -> bool {
    a.hodge == b.hodge
}

/// The structure induced on the quotient by a pure invariant sublattice
/// whose real span is `J`-invariant; unique with `f∘J = J'∘f`.
pub fn induced_quotient_structure(
    lattice: &GLattice,
    j: &ComplexStructure,
    sublattice: &IntLattice,
) -> Result<(ComplexStructure, GLattice)> {
    let sub_span = to_quad(&sublattice.basis().to_rational());
    if !subspace_invariant(j, &sub_span) {
        return Err(Error::KernelNotInvariant);
    }
    let (quotient, p, pinv) = lattice.quotient(sublattice)?;
    let r = sublattice.rank();
    let n = lattice.rank();
    let conj = to_quad(&pinv.to_rational())
        .mul(&j.matrix)
        .mul(&to_quad(&p.to_rational()));
    // invariance makes the bottom-left block vanish
    for row in r..n {
        for col in 0..r {
            if !conj[(row, col)].is_zero() {
                return Err(Error::KernelNotInvariant);
            }
        }
    }
    let induced = conj.submatrix(r..n, r..n);
    let structure = verify(&quotient, &induced)?;
    Ok((structure, quotient))
}

/// Entry for building structures over `Q(√d)` from rational data.
pub fn quad_entry(a: Rational, b: Rational, d: u64) -> QuadExt {
    QuadExt::new(a, b, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::IMat;
    use crate::groups::{cyclic, FiniteGroup, GLattice};

    fn trivial_lattice(rank: usize) -> GLattice {
        let g = FiniteGroup::trivial();
        GLattice::new(g, rank, vec![]).unwrap()
    }

    fn rotation_j() -> QuadMat {
        to_quad(&IMat::from_i64_rows(&[vec![0, -1], vec![1, 0]]).to_rational())
    }

    /// The 4×4 matrix over `Q(√3)` from the six-dimensional example.
    pub(crate) fn sqrt3_structure() -> QuadMat {
        let q = |a: (i64, i64), b: (i64, i64)| QuadExt::new(rat(a.0, a.1), rat(b.0, b.1), 3);
        Mat::from_rows(vec![
            vec![q((-1, 1), (0, 1)), q((0, 1), (-1, 3)), q((-1, 1), (0, 1)), q((0, 1), (0, 1))],
            vec![q((3, 1), (1, 1)), q((0, 1), (0, 1)), q((0, 1), (0, 1)), q((0, 1), (1, 1))],
            vec![q((1, 1), (-1, 1)), q((0, 1), (1, 3)), q((1, 1), (0, 1)), q((-1, 1), (0, 1))],
            vec![q((1, 1), (1, 1)), q((1, 1), (0, 1)), q((1, 1), (1, 1)), q((0, 1), (0, 1))],
        ])
    }

    #[test]
    fn rotation_on_trivial_plane_verifies() {
        let l = trivial_lattice(2);
        let s = verify(&l, &rotation_j()).unwrap();
        assert_eq!(s.field(), None);
        let expected = HodgeValue::from_real(QuadExt::from_rational(rat(1, 1)));
        assert_eq!(s.hodge_character(), &[expected]);
    }

    #[test]
    fn identity_is_not_a_complex_structure() {
        let l = trivial_lattice(2);
        let id = QuadMat::identity(2);
        assert!(matches!(
            verify(&l, &id),
            Err(Error::NotAComplexStructure(_))
        ));
    }

    #[test]
    fn sqrt3_matrix_squares_to_minus_identity() {
        let j = sqrt3_structure();
        assert_eq!(j.mul(&j), QuadMat::identity(4).neg());
        let l = trivial_lattice(4);
        let s = verify(&l, &j).unwrap();
        assert_eq!(s.field(), Some(3));
    }

    #[test]
    fn maximal_invariant_subspace_of_the_first_three_axes() {
        // with the √3 structure, the J-compatible part of span(e₁,e₂,e₃)
        // is the line through (1,0,-1,0)
        let l = trivial_lattice(4);
        let s = verify(&l, &sqrt3_structure()).unwrap();
        let w = to_quad(&IMat::from_i64_rows(&[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![0, 0, 0],
        ])
        .to_rational());
        assert!(!subspace_invariant(&s, &w));
        let max = maximal_invariant_subspace(&s, &w).unwrap();
        assert_eq!(max.cols(), 1);
        let target = IMat::from_i64_rows(&[vec![1], vec![0], vec![-1], vec![0]]).to_rational();
        assert_eq!(rank(&max.hstack(&target)), 1);
    }

    #[test]
    fn whole_space_and_j_planes_are_invariant() {
        let l = trivial_lattice(4);
        let j2 = rotation_j();
        let s = verify(&l, &j2.direct_sum(&j2)).unwrap();
        assert!(subspace_invariant(&s, &QuadMat::identity(4)));
        // the plane spanned by v and Jv is always invariant
        let v = to_quad(
            &IMat::from_i64_rows(&[vec![1], vec![2], vec![3], vec![4]]).to_rational(),
        );
        let jv = s.matrix().mul(&v);
        assert!(subspace_invariant(&s, &v.hstack(&jv)));
    }

    #[test]
    fn hodge_distinguishes_j_from_minus_j_on_complex_type() {
        // C₄ rotation action: J = h(r) itself
        let g = cyclic(4).unwrap();
        let rot = IMat::from_i64_rows(&[vec![0, -1], vec![1, 0]]);
        let l = GLattice::new(g, 2, vec![rot]).unwrap();
        let j = verify(&l, &rotation_j()).unwrap();
        let minus = verify(&l, &rotation_j().neg()).unwrap();
        assert!(!hodge_equal(&j, &minus));
        // but on a trivial action (real type) J and -J agree
        let l = trivial_lattice(2);
        let j = verify(&l, &rotation_j()).unwrap();
        let minus = verify(&l, &rotation_j().neg()).unwrap();
        assert!(hodge_equal(&j, &minus));
        assert!(hodge_equal(&j, &j));
    }

    #[test]
    fn induced_structure_on_block_quotient() {
        // trivial action on Z⁴, J = two rotation blocks, M = first plane
        let l = trivial_lattice(4);
        let j2 = rotation_j();
        let j = j2.direct_sum(&j2);
        let s = verify(&l, &j).unwrap();
        let m = IntLattice::from_columns(
            4,
            &IMat::from_i64_rows(&[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]]),
        );
        let (induced, quotient) = induced_quotient_structure(&l, &s, &m).unwrap();
        assert_eq!(quotient.rank(), 2);
        assert_eq!(induced.matrix(), &rotation_j());
        // quotient by zero gives the same structure back
        let zero = IntLattice::zero(4);
        let (same, _) = induced_quotient_structure(&l, &s, &zero).unwrap();
        assert_eq!(same.matrix(), &j);
    }

    #[test]
    fn real_type_pieces_accept_any_structure() {
        // on a homogeneous real-type piece the Hodge type is unique:
        // conjugated block structures all give the same character
        let g = cyclic(2).unwrap();
        let minus = IMat::identity(4).neg();
        let l = GLattice::new(g, 4, vec![minus]).unwrap();
        let j = rotation_j().direct_sum(&rotation_j());
        let base = verify(&l, &j).unwrap();
        for mixer in [
            IMat::from_i64_rows(&[
                vec![1, 2, 0, -1],
                vec![0, 1, 1, 0],
                vec![0, 0, 1, 3],
                vec![0, 0, 0, 1],
            ]),
            IMat::from_i64_rows(&[
                vec![1, 0, 0, 0],
                vec![-2, 1, 0, 0],
                vec![1, 4, 1, 0],
                vec![0, -3, 2, 1],
            ]),
        ] {
            let mx = to_quad(&mixer.to_rational());
            let mx_inv = to_quad(
                &crate::exact::inverse(&mixer.to_rational()).unwrap(),
            );
            let other = verify(&l, &mx.mul(&j).mul(&mx_inv)).unwrap();
            assert!(hodge_equal(&base, &other));
        }
    }

    #[test]
    fn balance_of_eigenvalues_over_formal_i() {
        // rank of (J - i·I) kernel is n for every verified structure
        let l = trivial_lattice(4);
        let j = sqrt3_structure();
        let s = verify(&l, &j).unwrap();
        let m = s.matrix().map(|x| FormalI::from_real(x.clone()));
        let mut shifted = m.clone();
        for d in 0..4 {
            shifted[(d, d)] = shifted[(d, d)].sub(&FormalI::i());
        }
        assert_eq!(kernel_over_field(&shifted).cols(), 2);
    }
}
