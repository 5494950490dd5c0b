//! The real and complex reductions.
//!
//! For each prime-order subgroup representative `H = ⟨g⟩` of a special
//! datum, the first integral fixed functional `φ` detecting the
//! restricted class (`φ(N_A·a) ≢ 0 mod p`) defines the equivariant map
//! `l ↦ (φ(h(x)⁻¹·l))_x` over the coset representatives of `G/H`. Its
//! kernel is the pure invariant sublattice `L'_H`; the intersection over
//! all representatives is the reduction kernel `N`, and the quotient
//! datum is special again of rank at most `Σ [G:H]`.
//!
//! The complex reduction shrinks `N` further: each real-type component
//! with odd complex multiplicity in `L/N` gets one simple copy split off
//! `N ⊗ Q` through a surjection onto a spun simple module, which makes
//! the quotient essentially complex at the price of at most doubling its
//! rank.

use num_bigint::BigInt;

use crate::characters::{hom_space, RationalTable};
use crate::exact::{
    column_space, int_kernel, kernel_over_field, subspace_intersection, IMat, IntLattice, QMat,
    Rational,
};
use crate::{Error, Result};

use super::BieberbachDatum;

pub struct ReductionResult {
    /// The invariant pure sublattice that was quotiented out (`N` for
    /// the real reduction, `M` for the complex one).
    pub sublattice: IntLattice,
    pub quotient: BieberbachDatum,
    /// Unimodular adapted basis: the first `sublattice.rank()` columns
    /// span the sublattice.
    pub adapted: IMat,
    pub adapted_inv: IMat,
    /// Orbits that required an extra simple copy in the complex case.
    pub shrunk_orbits: Vec<usize>,
}

impl ReductionResult {
    pub fn quotient_rank(&self) -> usize {
        self.quotient.dim()
    }
}

/// Datum induced on `Z^n / s` for a pure invariant sublattice `s`.
pub fn quotient_datum(datum: &BieberbachDatum, sublattice: &IntLattice) -> Result<ReductionResult> {
    let (quotient_lattice, p, pinv) = datum.holonomy().quotient(sublattice)?;
    let r = sublattice.rank();
    let dim = datum.dim();
    let pinv_q = pinv.to_rational();
    let translations: Vec<Vec<Rational>> = datum
        .gen_translations()
        .iter()
        .map(|t| {
            let coords = pinv_q.mul_vec(t);
            coords[r..dim].to_vec()
        })
        .collect();
    let quotient = BieberbachDatum::from_action(quotient_lattice, translations)?;
    Ok(ReductionResult {
        sublattice: sublattice.clone(),
        quotient,
        adapted: p,
        adapted_inv: pinv,
        shrunk_orbits: Vec::new(),
    })
}

/// The reduction kernel `N = ∩_H L'_H` of a special datum.
fn reduction_kernel(datum: &BieberbachDatum) -> Result<IntLattice> {
    let group = datum.group();
    let dim = datum.dim();
    let mut n = IntLattice::full(dim);
    for (g, p) in group.vasquez_set() {
        let norm = datum.norm_matrix(g, p);
        let x = datum.norm_translation(g, &norm)?;
        let phi = datum.first_detecting_functional(g, p, &x).ok_or_else(|| {
            Error::Inconsistency(
                "special datum without a detecting fixed functional".into(),
            )
        })?;
        let subgroup = group.close_subset(&[g]);
        let reps = group.coset_reps(&subgroup);
        // row per coset representative x: φᵀ·h(x)⁻¹
        let rows: Vec<Vec<BigInt>> = reps
            .iter()
            .map(|&rep| {
                let hinv = datum.holonomy().elem_mat(group.inv(rep));
                (0..dim)
                    .map(|c| {
                        phi.iter()
                            .enumerate()
                            .map(|(k, coeff)| coeff * &hinv[(k, c)])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let projection = IMat::from_rows(rows);
        let kernel = IntLattice::from_columns(dim, &int_kernel(&projection));
        n = n.intersect(&kernel);
    }
    debug_assert!(n.is_pure());
    Ok(n)
}

/// The real reduction: quotient by `N`, re-verified to be special and
/// within the coset-count bound.
pub fn vasquez_reduce(datum: &BieberbachDatum) -> Result<ReductionResult> {
    if !datum.special_test()? {
        return Err(Error::NotSpecial);
    }
    let group = datum.group();
    let n = reduction_kernel(datum)?;
    let result = quotient_datum(datum, &n)?;

    let bound: usize = group
        .vasquez_set()
        .iter()
        .map(|&(_, p)| group.order() / p as usize)
        .sum();
    if result.quotient_rank() > bound {
        return Err(Error::Inconsistency(format!(
            "quotient rank {} exceeds the coset bound {bound}",
            result.quotient_rank()
        )));
    }
    if !result.quotient.special_test()? {
        return Err(Error::Inconsistency(
            "reduced datum fails the special test".into(),
        ));
    }
    Ok(result)
}

/// The complex reduction. Requires the lattice to be essentially
/// complex; produces an essentially complex quotient of even rank at
/// most twice the real quotient rank.
pub fn complex_vasquez_reduce(
    datum: &BieberbachDatum,
    rational: &RationalTable,
) -> Result<ReductionResult> {
    let (ec, _) = rational.essentially_complex(datum.holonomy())?;
    if !ec {
        return Err(Error::NotEssentiallyComplex);
    }
    let real = vasquez_reduce(datum)?;
    let n = real.sublattice.clone();

    // components blocking a complex structure on the quotient
    let (_, bad) = rational.essentially_complex(real.quotient.holonomy())?;

    let dim = datum.dim();
    let n_basis = n.basis().to_rational();
    let n_action = datum.holonomy().restrict(&n)?;
    let n_actions: Vec<QMat> = n_action
        .gen_mats()
        .iter()
        .map(|m| m.to_rational())
        .collect();

    let mut m_prime = QMat::identity(n.rank()); // coordinates within N
    let mut shrunk = Vec::new();
    for bad_component in &bad {
        let orbit = bad_component.orbit;
        let (simple, regular) = rational.simple_module(orbit)?;
        let simple_actions: Vec<QMat> = regular
            .restricted_action(&simple)
            .ok_or_else(|| Error::Inconsistency("spun module not invariant".into()))?;
        let homs = hom_space(n.rank(), simple.cols(), &n_actions, &simple_actions);
        let psi = homs
            .iter()
            .find(|h| !h.is_zero())
            .ok_or_else(|| {
                Error::Inconsistency(
                    "blocking component does not occur in the reduction kernel".into(),
                )
            })?;
        // a nonzero hom into a simple module is surjective; cut its kernel
        let kernel = kernel_over_field(psi);
        m_prime = subspace_intersection(&m_prime, &kernel);
        shrunk.push(orbit);
    }

    // M = saturate(L ∩ M'): integer points of the rational span
    let span_ambient = column_space(&n_basis.mul(&m_prime));
    let scaled = clear_denominators(&span_ambient);
    let m = IntLattice::from_columns(dim, &scaled).saturate();

    if !n.contains(&m) {
        return Err(Error::Inconsistency("M is not contained in N".into()));
    }
    let mut result = quotient_datum(datum, &m)?;
    result.shrunk_orbits = shrunk;

    if result.quotient_rank() % 2 != 0 {
        return Err(Error::Inconsistency("complex quotient rank is odd".into()));
    }
    if result.quotient_rank() > 2 * real.quotient_rank() {
        return Err(Error::Inconsistency(
            "complex quotient exceeds twice the real quotient rank".into(),
        ));
    }
    let (ec, _) = rational.essentially_complex(result.quotient.holonomy())?;
    if !ec {
        return Err(Error::Inconsistency(
            "complex reduction quotient is not essentially complex".into(),
        ));
    }
    if !result.quotient.special_test()? {
        return Err(Error::Inconsistency(
            "complex reduction quotient fails the special test".into(),
        ));
    }
    Ok(result)
}

fn clear_denominators(m: &QMat) -> IMat {
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            lcm = lcm.lcm(m[(r, c)].denom());
        }
    }
    let scale = Rational::from(lcm);
    m.scale(&scale)
        .to_integer()
        .expect("denominators cleared")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bieberbach::fixtures::*;
    use crate::characters::{CharacterTable, RationalTable};
    use crate::exact::rat;
    use std::sync::Arc;

    fn rational_table(datum: &BieberbachDatum) -> RationalTable {
        let table = CharacterTable::build(datum.group().clone()).unwrap();
        RationalTable::build(Arc::new(table), 0)
    }

    #[test]
    fn torus_reduces_to_a_point() {
        let d = torus(3);
        let r = vasquez_reduce(&d).unwrap();
        assert_eq!(r.sublattice.rank(), 3);
        assert_eq!(r.quotient_rank(), 0);
    }

    #[test]
    fn klein_bottle_reduces_to_rank_one() {
        let d = klein_bottle();
        let r = vasquez_reduce(&d).unwrap();
        assert_eq!(r.quotient_rank(), 1);
        // N = ker(e₁*) = span{e₂}
        assert_eq!(r.sublattice.rank(), 1);
        assert!(r
            .sublattice
            .member(&[BigInt::from(0), BigInt::from(1)]));
    }

    #[test]
    fn dim6_real_reduction_has_rank_one() {
        let d = dim6_c2();
        let r = vasquez_reduce(&d).unwrap();
        assert_eq!(r.sublattice.rank(), 5);
        assert_eq!(r.quotient_rank(), 1);
        // the quotient has trivial induced action and translation 1/2
        assert!(r.quotient.gen_translations()[0][0] == rat(1, 2));
        assert!(r.quotient.holonomy().gen_mats()[0].is_identity());
    }

    #[test]
    fn dim6_complex_reduction_is_rank_two_and_essentially_complex() {
        let d = dim6_c2();
        let rt = rational_table(&d);
        let r = complex_vasquez_reduce(&d, &rt).unwrap();
        assert_eq!(r.sublattice.rank(), 4);
        assert_eq!(r.quotient_rank(), 2);
        assert_eq!(r.shrunk_orbits.len(), 1);
        let (ec, _) = rt.essentially_complex(r.quotient.holonomy()).unwrap();
        assert!(ec);
    }

    #[test]
    fn doubled_klein_complex_reduction() {
        // C₂ on Z⁴ = Klein ⊕ Klein with translation (1/2,0,0,0)
        let a = IMat::from_i64_rows(&[
            vec![1, 0, 0, 0],
            vec![0, -1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, -1],
        ]);
        let d = BieberbachDatum::from_generators(
            4,
            &[(a, vec![rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1)])],
            16,
        )
        .unwrap();
        let rt = rational_table(&d);
        let real = vasquez_reduce(&d).unwrap();
        assert_eq!(real.sublattice.rank(), 3);
        let r = complex_vasquez_reduce(&d, &rt).unwrap();
        assert!(r.quotient_rank() % 2 == 0);
        assert!(r.quotient_rank() <= 2 * real.quotient_rank());
        let (ec, _) = rt.essentially_complex(r.quotient.holonomy()).unwrap();
        assert!(ec);
    }

    #[test]
    fn torus_complex_reduction_keeps_m_equal_n() {
        // no blocking components at all: M = N = L
        let d = torus(4);
        let rt = rational_table(&d);
        let r = complex_vasquez_reduce(&d, &rt).unwrap();
        assert_eq!(r.sublattice, IntLattice::full(4));
        assert_eq!(r.quotient_rank(), 0);
        assert!(r.shrunk_orbits.is_empty());
    }

    #[test]
    fn doubled_hantzsche_wendt_hits_the_doubling_bound() {
        // HW ⊕ HW with the translations on the first copy: the real
        // quotient is the full rank-3 sign lattice, every sign component
        // is blocking, and M shrinks all the way to zero.
        let hw = hantzsche_wendt();
        let a0 = &hw.holonomy().gen_mats()[0];
        let b0 = &hw.holonomy().gen_mats()[1];
        let pad = |t: &[Rational]| {
            let mut v = t.to_vec();
            v.extend(std::iter::repeat_n(rat(0, 1), 3));
            v
        };
        let d = BieberbachDatum::from_generators(
            6,
            &[
                (a0.direct_sum(a0), pad(&hw.gen_translations()[0])),
                (b0.direct_sum(b0), pad(&hw.gen_translations()[1])),
            ],
            16,
        )
        .unwrap();
        let rt = rational_table(&d);
        let real = vasquez_reduce(&d).unwrap();
        assert_eq!(real.quotient_rank(), 3);
        let complex = complex_vasquez_reduce(&d, &rt).unwrap();
        assert!(real.sublattice.contains(&complex.sublattice));
        assert_eq!(complex.quotient_rank(), 6);
        assert_eq!(complex.shrunk_orbits.len(), 3);
    }

    #[test]
    fn quotient_datum_composes() {
        let d = dim6_c2();
        let r = vasquez_reduce(&d).unwrap();
        // quotient by 0 is the identity reduction
        let zero = IntLattice::zero(6);
        let same = quotient_datum(&d, &zero).unwrap();
        assert_eq!(same.quotient_rank(), 6);
        // quotient by the full lattice is the point
        let full = IntLattice::full(6);
        let point = quotient_datum(&d, &full).unwrap();
        assert_eq!(point.quotient_rank(), 0);
        // and N itself gives the rank-1 circle datum
        assert_eq!(r.quotient_rank(), 1);
    }

    #[test]
    fn quotient_composition() {
        // quotient by S then by S'/S equals quotient by S'
        let d = dim6_c2();
        let s_small = IntLattice::from_columns(
            6,
            &IMat::from_i64_rows(&[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0], vec![0, 0], vec![0, 0]]),
        );
        let s_large = IntLattice::from_columns(
            6,
            &IMat::from_i64_rows(&[
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![0, 0, 0],
                vec![0, 0, 0],
                vec![0, 0, 0],
            ]),
        );
        let first = quotient_datum(&d, &s_small).unwrap();
        // image of S' in the first quotient's coordinates
        let pinv = first.adapted_inv.to_rational();
        let r = s_small.rank();
        let image_cols: Vec<Vec<num_bigint::BigInt>> = (0..s_large.rank())
            .map(|c| {
                let col: Vec<Rational> = s_large
                    .basis()
                    .column(c)
                    .iter()
                    .map(|x| Rational::from(x.clone()))
                    .collect();
                pinv.mul_vec(&col)[r..6]
                    .iter()
                    .map(|x| x.to_integer())
                    .collect()
            })
            .collect();
        let image = IntLattice::from_columns(
            4,
            &IMat::from_fn(4, image_cols.len(), |rr, cc| image_cols[cc][rr].clone()),
        );
        let second = quotient_datum(&first.quotient, &image).unwrap();
        let direct = quotient_datum(&d, &s_large).unwrap();
        assert_eq!(second.quotient_rank(), direct.quotient_rank());
        assert_eq!(
            second.quotient.holonomy().gen_mats(),
            direct.quotient.holonomy().gen_mats()
        );
        assert_eq!(
            second.quotient.gen_translations(),
            direct.quotient.gen_translations()
        );
    }

    #[test]
    fn non_special_data_cannot_reduce() {
        let a = IMat::from_i64_rows(&[vec![1, 0], vec![0, -1]]);
        let d =
            BieberbachDatum::from_generators(2, &[(a, vec![rat(0, 1), rat(0, 1)])], 16).unwrap();
        assert!(matches!(vasquez_reduce(&d), Err(Error::NotSpecial)));
    }

    #[test]
    fn s3_reduction_respects_the_bound() {
        let d = s3_dim4();
        let r = vasquez_reduce(&d).unwrap();
        // Σ [G:H] over representatives of prime-order subgroups of S₃:
        // [S₃:C₂] + [S₃:C₃] = 3 + 2 = 5
        assert!(r.quotient_rank() <= 5);
        assert!(r.quotient.special_test().unwrap());
    }
}
