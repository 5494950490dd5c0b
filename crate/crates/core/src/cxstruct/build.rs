//! Building and adapting complex structures.
//!
//! Everything proceeds per isotypic component of `L ⊗ Q`. Components of
//! real type with odd Schur index come in pairs of simple copies and
//! receive the swap structure `J(v, w) = (-w, v)`; complex and
//! quaternionic components receive an endomorphism `θ` with
//! `θ² = -k` found in the (commutative or quaternion) endomorphism
//! algebra, rescaled into a single real quadratic extension `Q(√d)`
//! where `k = s²·d`. Structures that would need two distinct surds, or
//! a Hodge pattern not expressible with a single one, fail with an
//! extension-required error rather than approximating.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::characters::{hom_space, ModuleType, RatModule, RationalTable};
use crate::exact::{
    column_space, inverse, rat, solve_matrix, ExactScalar, IntLattice, QMat, QuadExt, Rational,
};
use crate::groups::GLattice;
use crate::{Error, Result};

use super::{hodge_character, to_quad, verify, ComplexStructure, HodgeValue, QuadMat};

/// Candidate square root of a negative rational: `θ² = -k·id` on its
/// component, stored with the squarefree part `d` and scale `s` of
/// `k = s²·d` (`d = 1` means the rescaled structure stays rational).
struct ImaginaryUnit {
    theta: QMat,
    scale: Rational,
    d: u64,
}

impl ImaginaryUnit {
    /// `θ/(s·√d)` as an exact matrix.
    fn structure(&self) -> QuadMat {
        if self.d == 1 {
            let f = self.scale.recip();
            to_quad(&self.theta.scale(&f))
        } else {
            // 1/(s·√d) = √d/(s·d)
            let f = (self.scale.clone() * rat(self.d as i64, 1)).recip();
            self.theta
                .map(|x| QuadExt::new(Rational::zero(), x * &f, self.d))
        }
    }
}

fn flatten(m: &QMat) -> Vec<Rational> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.push(m[(r, c)].clone());
        }
    }
    out
}

/// `k = s²·d` with `d` square-free.
fn squarefree_decomposition(k: &Rational) -> Result<(Rational, u64)> {
    assert!(k.is_positive());
    let pq = k.numer() * k.denom();
    let n = pq.to_u64().ok_or_else(|| {
        Error::ExtensionRequired("surd magnitude exceeds the factorization bound".into())
    })?;
    let mut d = 1u64;
    let mut square = 1u64;
    let mut rest = n;
    let mut f = 2u64;
    while f * f <= rest {
        let mut count = 0;
        while rest % f == 0 {
            rest /= f;
            count += 1;
        }
        square *= f.pow(count / 2);
        if count % 2 == 1 {
            d *= f;
        }
        f += 1;
    }
    if rest > 1 {
        d *= rest;
    }
    // k = pq/q² = (square²·d)/q²
    let s = Rational::new(BigInt::from(square), k.denom().clone());
    debug_assert_eq!(&(&s * &s) * rat(d as i64, 1), *k);
    Ok((s, d))
}

/// Looks for `θ` with `θ² = -k·id` among restricted element actions,
/// endomorphism basis vectors, their pairwise sums, and seeded random
/// combinations. Candidates with smaller `d` win.
fn find_imaginary_unit(
    module: &RatModule,
    basis: &QMat,
    rng: &mut ChaCha8Rng,
    budget: usize,
) -> Result<ImaginaryUnit> {
    let k_dim = basis.cols();
    let restricted = module
        .restricted_action(basis)
        .ok_or_else(|| Error::Inconsistency("component basis not invariant".into()))?;
    let equivariant = |m: &QMat| restricted.iter().all(|a| a.mul(m) == m.mul(a));
    let mut candidates: Vec<QMat> = Vec::new();
    // element actions are endomorphisms only when they commute with
    // the whole restricted action (e.g. central elements)
    for e in 0..module.group().order() {
        if let Some(theta) = solve_matrix(basis, &module.elem_action(e).mul(basis)) {
            if equivariant(&theta) {
                candidates.push(theta);
            }
        }
    }
    let endos = module.endomorphisms(basis);
    candidates.extend(endos.iter().cloned());
    for i in 0..endos.len() {
        for j in i + 1..endos.len() {
            candidates.push(endos[i].add(&endos[j]));
            candidates.push(endos[i].sub(&endos[j]));
        }
    }
    for _ in 0..budget {
        let mut combo = QMat::zeros(k_dim, k_dim);
        for e in &endos {
            let c = Rational::from(BigInt::from(rng.gen_range(-2i64..=2)));
            combo = combo.add(&e.scale(&c));
        }
        candidates.push(combo);
    }

    let mut best: Option<ImaginaryUnit> = None;
    for cand in &candidates {
        if cand.is_zero() {
            continue;
        }
        // solve cand² = α·I + γ·cand
        let square = cand.mul(cand);
        let id = QMat::identity(k_dim);
        let lhs = QMat::from_columns(vec![flatten(&id), flatten(cand)]);
        let Some(sol) = crate::exact::solve(&lhs, &flatten(&square)) else {
            continue;
        };
        let (alpha, gamma) = (sol[0].clone(), sol[1].clone());
        // θ = cand - γ/2 has θ² = (α + γ²/4)·id
        let disc = &alpha + &gamma * &gamma * rat(1, 4);
        if !disc.is_negative() {
            continue;
        }
        let mut theta = cand.clone();
        let shift = &gamma * rat(1, 2);
        for i in 0..k_dim {
            theta[(i, i)] -= &shift;
        }
        let k = -disc;
        let (s, d) = squarefree_decomposition(&k)?;
        let unit = ImaginaryUnit {
            theta,
            scale: s,
            d,
        };
        if best.as_ref().is_none_or(|b| d < b.d) {
            let better = unit;
            debug_assert!({
                let j = better.structure();
                j.mul(&j) == QuadMat::identity(k_dim).neg()
            });
            best = Some(better);
            if best.as_ref().unwrap().d == 1 {
                break;
            }
        }
    }
    best.ok_or_else(|| {
        Error::ExtensionRequired(
            "no square root of a negative rational in the endomorphism algebra".into(),
        )
    })
}

/// One isotypic component of the ambient rational module.
struct Component<'a> {
    comp: &'a crate::characters::RationalComponent,
    /// Columns spanning the component in ambient coordinates.
    basis: QMat,
}

fn isotypic_components<'a>(
    lattice: &GLattice,
    rational: &'a RationalTable,
) -> Result<Vec<Component<'a>>> {
    let group = lattice.group();
    let classes = group.conjugacy_classes();
    let n = lattice.rank();
    let mut out = Vec::new();
    for comp in rational.components() {
        // central idempotent: Σ_x (χ(1)/|G|)·T(x⁻¹)·h(x)
        let scale = rat(comp.degree as i64, group.order() as i64);
        let mut p = QMat::zeros(n, n);
        for x in 0..group.order() {
            let cls = classes.class_of(group.inv(x));
            let c = Rational::from(comp.trace_character[cls].clone()) * &scale;
            if c == Rational::zero() {
                continue;
            }
            p = p.add(&lattice.elem_mat(x).to_rational().scale(&c));
        }
        let basis = column_space(&p);
        if basis.cols() > 0 {
            out.push(Component { comp, basis });
        }
    }
    let total: usize = out.iter().map(|c| c.basis.cols()).sum();
    if total != n {
        return Err(Error::Inconsistency(format!(
            "isotypic components span {total} of {n} dimensions"
        )));
    }
    Ok(out)
}

/// Splits an isotypic subspace into simple copies of the expected
/// dimension.
fn peel_copies(
    module: &RatModule,
    basis: &QMat,
    copy_dim: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<QMat>> {
    let mut copies = Vec::new();
    let mut rest = basis.clone();
    while rest.cols() > 0 {
        if rest.cols() == copy_dim {
            copies.push(rest.clone());
            break;
        }
        let simple = module.shrink_to_minimal(&rest, rng, 32);
        if simple.cols() != copy_dim {
            return Err(Error::Unsupported(
                "minimal-submodule search",
                format!(
                    "found dimension {} instead of {copy_dim}",
                    simple.cols()
                ),
            ));
        }
        rest = module.complement_in(&simple, &rest);
        copies.push(simple);
    }
    Ok(copies)
}

/// Transport of an endomorphism along the isomorphism `src → dst`
/// defined by the first nonzero equivariant map.
fn transport(
    module: &RatModule,
    src: &QMat,
    dst: &QMat,
    theta: &QMat,
) -> Result<QMat> {
    let src_actions = module
        .restricted_action(src)
        .ok_or_else(|| Error::Inconsistency("source copy not invariant".into()))?;
    let dst_actions = module
        .restricted_action(dst)
        .ok_or_else(|| Error::Inconsistency("target copy not invariant".into()))?;
    let homs = hom_space(src.cols(), dst.cols(), &src_actions, &dst_actions);
    let psi = homs
        .iter()
        .find(|h| !h.is_zero())
        .ok_or_else(|| Error::Inconsistency("copies of one simple are isomorphic".into()))?;
    let psi_inv = inverse(psi)
        .ok_or_else(|| Error::Inconsistency("nonzero map between simples is invertible".into()))?;
    Ok(psi.mul(theta).mul(&psi_inv))
}

/// The structure blocks chosen for one isotypic component: bases (in
/// ambient coordinates) paired with coordinate blocks over the surd.
struct ComponentBlocks {
    pieces: Vec<(QMat, QuadMat)>,
}

/// Swap structure on an even stack of simple copies:
/// `J(v, w) = (-w, v)` on each pair, exactly rational.
fn paired_swap_blocks(
    module: &RatModule,
    copies: &[QMat],
) -> Result<ComponentBlocks> {
    assert!(copies.len() % 2 == 0);
    let mut pieces = Vec::new();
    for pair in copies.chunks(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let src_actions = module.restricted_action(a).ok_or(Error::NotInvariant)?;
        let dst_actions = module.restricted_action(b).ok_or(Error::NotInvariant)?;
        let homs = hom_space(a.cols(), b.cols(), &src_actions, &dst_actions);
        let phi = homs
            .iter()
            .find(|h| !h.is_zero())
            .ok_or_else(|| Error::Inconsistency("missing isomorphism between copies".into()))?;
        let phi_inv = inverse(phi).ok_or_else(|| {
            Error::Inconsistency("nonzero map between simples is invertible".into())
        })?;
        let s = phi.rows();
        let mut block = QMat::zeros(2 * s, 2 * s);
        for i in 0..s {
            for j in 0..s {
                block[(i, s + j)] = -phi_inv[(i, j)].clone();
                block[(s + i, j)] = phi[(i, j)].clone();
            }
        }
        pieces.push((pair[0].hstack(&pair[1]), to_quad(&block)));
    }
    Ok(ComponentBlocks { pieces })
}

/// Structure on one isotypic piece (a stack of copies of one simple),
/// built according to the component type. For complex type the sign of
/// `θ` per copy is free; `signs` fixes it (`true` = `+θ`).
fn component_structure(
    module: &RatModule,
    comp: &crate::characters::RationalComponent,
    basis: &QMat,
    signs: Option<&[bool]>,
    rng: &mut ChaCha8Rng,
) -> Result<ComponentBlocks> {
    let m = comp
        .schur_index()
        .ok_or(Error::SchurUnknown { orbit: comp.orbit })?;
    let copy_dim = (m * comp.degree * comp.field_degree as u64) as usize;
    let multiplicity = basis.cols() / copy_dim;
    assert_eq!(basis.cols() % copy_dim, 0, "isotypic dimension mismatch");

    let real_odd = comp.module_type == ModuleType::Real && m % 2 == 1;
    if real_odd {
        if multiplicity % 2 != 0 {
            return Err(Error::NotEssentiallyComplex);
        }
        let copies = peel_copies(module, basis, copy_dim, rng)?;
        return paired_swap_blocks(module, &copies);
    }

    // complex or quaternionic (or real with even index): θ per copy
    let copies = peel_copies(module, basis, copy_dim, rng)?;
    let unit = find_imaginary_unit(module, &copies[0], rng, 32)?;
    let mut pieces = Vec::new();
    for (i, copy) in copies.iter().enumerate() {
        let theta_i = if i == 0 {
            unit.theta.clone()
        } else {
            transport(module, &copies[0], copy, &unit.theta)?
        };
        let local = ImaginaryUnit {
            theta: theta_i,
            scale: unit.scale.clone(),
            d: unit.d,
        };
        let mut block = local.structure();
        if let Some(signs) = signs {
            if !signs[i] {
                block = block.neg();
            }
        }
        pieces.push((copy.clone(), block));
    }
    Ok(ComponentBlocks { pieces })
}

/// Assembles per-component blocks into an ambient matrix and verifies
/// the result.
fn assemble(
    lattice: &GLattice,
    blocks: Vec<ComponentBlocks>,
) -> Result<ComplexStructure> {
    let n = lattice.rank();
    let mut basis = QMat::zeros(n, 0);
    let mut coord_block = QuadMat::zeros(0, 0);
    for cb in &blocks {
        for (b, j) in &cb.pieces {
            basis = basis.hstack(b);
            coord_block = coord_block.direct_sum(j);
        }
    }
    if basis.cols() != n {
        return Err(Error::Inconsistency("assembled basis is not square".into()));
    }
    let basis_inv = inverse(&basis).ok_or_else(|| {
        Error::Inconsistency("assembled basis is singular".into())
    })?;
    let j = to_quad(&basis).mul(&coord_block).mul(&to_quad(&basis_inv));
    verify(lattice, &j)
}

/// An explicit complex structure on an essentially complex lattice.
pub fn construct_complex_structure(
    lattice: &GLattice,
    rational: &RationalTable,
    seed: u64,
) -> Result<ComplexStructure> {
    let (ec, _) = rational.essentially_complex(lattice)?;
    if !ec {
        return Err(Error::NotEssentiallyComplex);
    }
    let module = RatModule::from_glattice(lattice);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_c0de);
    let mut blocks = Vec::new();
    for component in isotypic_components(lattice, rational)? {
        blocks.push(component_structure(
            &module,
            component.comp,
            &component.basis,
            None,
            &mut rng,
        )?);
    }
    assemble(lattice, blocks)
}

/// Restriction of a class-function vector to an isotypic component:
/// `½(tr(h(g)·P) - i·tr(h(g)·J·P))` with `P` the projector onto the
/// component.
fn component_hodge(
    lattice: &GLattice,
    j: &QuadMat,
    component_basis: &QMat,
) -> Vec<HodgeValue> {
    // projector built from the basis through the pseudo-inverse part of
    // an adapted decomposition: P = B·(BᵀB)⁻¹·Bᵀ is not equivariant in
    // general, but traces against equivariant maps only see the
    // component because both h(g) and J preserve it; we orthogonalize
    // by averaging instead. Averaging is unnecessary here: h(g)·J and
    // h(g) commute with the true equivariant projector, and the trace of
    // h(g)·J restricted to the component equals tr(h(g)·J·P) for any
    // projector P with image the component and kernel the sum of the
    // other components. The Maschke average of B(BᵀB)⁻¹Bᵀ is such a
    // projector; we compute it through the module machinery.
    let module = RatModule::from_glattice(lattice);
    let p = module.averaged_projector(component_basis);
    let pq = to_quad(&p);
    let classes = lattice.group().conjugacy_classes();
    let half = rat(1, 2);
    classes
        .reps()
        .iter()
        .map(|&rep| {
            let h = to_quad(&lattice.elem_mat(rep).to_rational());
            let re = h.mul(&pq).trace();
            let im = h.mul(j).mul(&pq).trace();
            HodgeValue::new(
                re.mul(&QuadExt::from_rational(half.clone())),
                im.mul(&QuadExt::from_rational(-half.clone())),
            )
        })
        .collect()
}

fn add_hodge(a: &[HodgeValue], b: &[HodgeValue]) -> Vec<HodgeValue> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

/// Adapts `j` to make the real span of `m` invariant without changing
/// the Hodge type. Components of real or quaternionic type are free
/// (any block structure matches); complex-type components distribute
/// `±θ` over the copies to match the eigenvalue counts of `j`.
pub fn adapt(
    lattice: &GLattice,
    j: &ComplexStructure,
    m: &IntLattice,
    rational: &RationalTable,
    seed: u64,
) -> Result<ComplexStructure> {
    let restricted = lattice.restrict(m)?;
    let (ec_m, _) = rational.essentially_complex(&restricted)?;
    let (quotient, _, _) = lattice.quotient(m)?;
    let (ec_q, _) = rational.essentially_complex(&quotient)?;
    if !ec_m || !ec_q {
        return Err(Error::NotEssentiallyComplex);
    }

    let module = RatModule::from_glattice(lattice);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xada7_ada7);
    let m_span = m.basis().to_rational();

    let mut blocks = Vec::new();
    for component in isotypic_components(lattice, rational)? {
        let comp = component.comp;
        // split the component along M and a complement
        let p = module.averaged_projector(&component.basis);
        let m_part = column_space(&p.mul(&m_span));
        let c_part = if m_part.cols() == 0 {
            component.basis.clone()
        } else if m_part.cols() == component.basis.cols() {
            QMat::zeros(lattice.rank(), 0)
        } else {
            module.complement_in(&m_part, &component.basis)
        };

        if comp.module_type == ModuleType::Complex {
            // match the eigenvalue counts of j on this component
            let target = component_hodge(lattice, j.matrix(), &component.basis);
            let mut copies = Vec::new();
            if m_part.cols() > 0 {
                copies.extend(peel_copies(
                    &module,
                    &m_part,
                    copy_dim(comp)?,
                    &mut rng,
                )?);
            }
            if c_part.cols() > 0 {
                copies.extend(peel_copies(
                    &module,
                    &c_part,
                    copy_dim(comp)?,
                    &mut rng,
                )?);
            }
            let unit = find_imaginary_unit(&module, &copies[0], &mut rng, 32)?;
            // per-copy contributions with +θ
            let mut plus = Vec::new();
            let mut bases = Vec::new();
            for (i, copy) in copies.iter().enumerate() {
                let theta_i = if i == 0 {
                    unit.theta.clone()
                } else {
                    transport(&module, &copies[0], copy, &unit.theta)?
                };
                let local = ImaginaryUnit {
                    theta: theta_i,
                    scale: unit.scale.clone(),
                    d: unit.d,
                };
                let block = local.structure();
                // contribution of this copy with +θ
                let contrib = copy_hodge(lattice, copy, &block);
                plus.push(contrib);
                bases.push((copy.clone(), block));
            }
            let count = copies.len();
            let mut matched = None;
            'masks: for mask in 0u32..(1 << count) {
                let mut total =
                    vec![HodgeValue::from_real(QuadExt::zero()); target.len()];
                for (i, contrib) in plus.iter().enumerate() {
                    let signed: Vec<HodgeValue> = if mask & (1 << i) == 0 {
                        contrib.clone()
                    } else {
                        contrib.iter().map(HodgeValue::conjugate).collect()
                    };
                    total = add_hodge(&total, &signed);
                }
                if total == target {
                    matched = Some(mask);
                    break 'masks;
                }
            }
            let Some(mask) = matched else {
                return Err(Error::ExtensionRequired(
                    "Hodge type of the complex component is not matchable over one surd".into(),
                ));
            };
            let pieces = bases
                .into_iter()
                .enumerate()
                .map(|(i, (b, block))| {
                    if mask & (1 << i) == 0 {
                        (b, block)
                    } else {
                        let neg = block.neg();
                        (b, neg)
                    }
                })
                .collect();
            blocks.push(ComponentBlocks { pieces });
        } else {
            // real or quaternionic: any split structure matches
            let mut pieces = Vec::new();
            if m_part.cols() > 0 {
                pieces.extend(
                    component_structure(&module, comp, &m_part, None, &mut rng)?.pieces,
                );
            }
            if c_part.cols() > 0 {
                pieces.extend(
                    component_structure(&module, comp, &c_part, None, &mut rng)?.pieces,
                );
            }
            blocks.push(ComponentBlocks { pieces });
        }
    }

    let adapted = assemble(lattice, blocks)?;
    // checked, not assumed
    let m_quad = to_quad(&m.basis().to_rational());
    if !super::subspace_invariant(&adapted, &m_quad) {
        return Err(Error::Inconsistency(
            "adapted structure does not preserve the sublattice".into(),
        ));
    }
    if adapted.hodge != hodge_character(lattice, j.matrix()) {
        return Err(Error::ExtensionRequired(
            "could not match the Hodge type of the given structure".into(),
        ));
    }
    Ok(adapted)
}

fn copy_dim(comp: &crate::characters::RationalComponent) -> Result<usize> {
    let m = comp
        .schur_index()
        .ok_or(Error::SchurUnknown { orbit: comp.orbit })?;
    Ok((m * comp.degree * comp.field_degree as u64) as usize)
}

/// Hodge contribution of one copy carrying the coordinate block `block`.
fn copy_hodge(lattice: &GLattice, copy: &QMat, block: &QuadMat) -> Vec<HodgeValue> {
    let classes = lattice.group().conjugacy_classes();
    let half = rat(1, 2);
    classes
        .reps()
        .iter()
        .map(|&rep| {
            let action = solve_matrix(copy, &lattice.elem_mat(rep).to_rational().mul(copy))
                .expect("copy is invariant");
            let aq = to_quad(&action);
            let re = aq.trace();
            let im = aq.mul(block).trace();
            HodgeValue::new(
                re.mul(&QuadExt::from_rational(half.clone())),
                im.mul(&QuadExt::from_rational(-half.clone())),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::characters::{CharacterTable, RationalTable};
    use crate::exact::IMat;
    use crate::groups::{cyclic, regular_lattice, FiniteGroup};

    fn rational_table(g: Arc<FiniteGroup>) -> RationalTable {
        RationalTable::build(Arc::new(CharacterTable::build(g).unwrap()), 0)
    }

    #[test]
    fn trivial_plane_gets_the_rotation() {
        let g = FiniteGroup::trivial();
        let rt = rational_table(g.clone());
        let l = GLattice::new(g, 2, vec![]).unwrap();
        let s = construct_complex_structure(&l, &rt, 0).unwrap();
        let expected = to_quad(
            &IMat::from_i64_rows(&[vec![0, -1], vec![1, 0]]).to_rational(),
        );
        assert!(s.matrix() == &expected || s.matrix() == &expected.neg());
    }

    #[test]
    fn doubled_regular_c2_gets_a_paired_swap() {
        let g = cyclic(2).unwrap();
        let rt = rational_table(g.clone());
        let l = regular_lattice(&g);
        let doubled = l.direct_sum(&l);
        let s = construct_complex_structure(&doubled, &rt, 0).unwrap();
        assert_eq!(s.field(), None);
        // rational, equivariant, squares to -1 — all checked by verify
        assert_eq!(s.matrix().rows(), 4);
    }

    #[test]
    fn c3_rotation_lattice_needs_sqrt3() {
        let g = cyclic(3).unwrap();
        let rt = rational_table(g.clone());
        let a = IMat::from_i64_rows(&[vec![0, -1], vec![1, -1]]);
        let l = GLattice::new(g, 2, vec![a.clone()]).unwrap();
        let s = construct_complex_structure(&l, &rt, 0).unwrap();
        assert_eq!(s.field(), Some(3));
        // J = ±(2A + I)/√3
        let third = QuadExt::new(rat(0, 1), rat(1, 3), 3);
        let expected = to_quad(&a.scale(&BigInt::from(2)).add(&IMat::identity(2)).to_rational())
            .map(|x| x.mul(&third));
        assert!(s.matrix() == &expected || s.matrix() == &expected.neg());
    }

    #[test]
    fn non_essentially_complex_lattice_is_rejected() {
        let g = cyclic(2).unwrap();
        let rt = rational_table(g.clone());
        let l = regular_lattice(&g);
        assert!(matches!(
            construct_complex_structure(&l, &rt, 0),
            Err(Error::NotEssentiallyComplex)
        ));
    }

    #[test]
    fn c5_rotation_lattice_requires_an_extension() {
        // the endomorphism field Q(ζ₅) has no imaginary quadratic
        // subfield, so no single real surd can produce J² = -1
        let g = cyclic(5).unwrap();
        let rt = rational_table(g.clone());
        let a = IMat::from_i64_rows(&[
            vec![0, 0, 0, -1],
            vec![1, 0, 0, -1],
            vec![0, 1, 0, -1],
            vec![0, 0, 1, -1],
        ]);
        let l = GLattice::new(g, 4, vec![a]).unwrap();
        let r = construct_complex_structure(&l, &rt, 0);
        assert!(matches!(r, Err(Error::ExtensionRequired(_))), "{r:?}");
    }

    #[test]
    fn c4_two_rotation_planes_adapt_keeps_j() {
        let g = cyclic(4).unwrap();
        let rt = rational_table(g.clone());
        let rot = IMat::from_i64_rows(&[vec![0, -1], vec![1, 0]]);
        let l = GLattice::new(g.clone(), 4, vec![rot.direct_sum(&rot)]).unwrap();
        let j = to_quad(&rot.direct_sum(&rot).to_rational());
        let s = verify(&l, &j).unwrap();
        let m = IntLattice::from_columns(
            4,
            &IMat::from_i64_rows(&[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]]),
        );
        let adapted = adapt(&l, &s, &m, &rt, 0).unwrap();
        assert!(super::super::subspace_invariant(
            &adapted,
            &to_quad(&m.basis().to_rational())
        ));
        assert!(super::super::hodge_equal(&s, &adapted));
    }

    #[test]
    fn adapt_to_the_full_lattice_keeps_the_hodge_type() {
        let g = cyclic(4).unwrap();
        let rt = rational_table(g.clone());
        let rot = IMat::from_i64_rows(&[vec![0, -1], vec![1, 0]]);
        let l = GLattice::new(g.clone(), 4, vec![rot.direct_sum(&rot)]).unwrap();
        let j = to_quad(&rot.direct_sum(&rot).to_rational());
        let s = verify(&l, &j).unwrap();
        let adapted = adapt(&l, &s, &IntLattice::full(4), &rt, 0).unwrap();
        assert!(super::super::hodge_equal(&s, &adapted));
    }

    #[test]
    fn adapt_flips_a_sign_when_the_target_needs_it() {
        // same two rotation planes, but j has opposite orientations on
        // them; the adapted structure must reproduce that pattern
        let g = cyclic(4).unwrap();
        let rt = rational_table(g.clone());
        let rot = IMat::from_i64_rows(&[vec![0, -1], vec![1, 0]]);
        let l = GLattice::new(g.clone(), 4, vec![rot.direct_sum(&rot)]).unwrap();
        let j = to_quad(&rot.direct_sum(&rot.neg()).to_rational());
        let s = verify(&l, &j).unwrap();
        let m = IntLattice::from_columns(
            4,
            &IMat::from_i64_rows(&[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]]),
        );
        let adapted = adapt(&l, &s, &m, &rt, 0).unwrap();
        assert!(super::super::hodge_equal(&s, &adapted));
    }
}
