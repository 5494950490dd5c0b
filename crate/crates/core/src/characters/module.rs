//! Rational G-modules and the spinning machinery: cyclic-submodule
//! closure, equivariant projectors, endomorphism algebras, and the
//! Las Vegas search for minimal submodules.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exact::poly::{self, Poly};
use crate::exact::{
    cyclotomic_polynomial, kernel_over_field, rat, rref, solve_matrix, ExactScalar, QMat, Rational,
};
use crate::groups::{FiniteGroup, GLattice};

/// A finite-dimensional `QG`-module given by the action of the
/// generators. Element actions are filled in along the closure words.
pub struct RatModule {
    group: Arc<FiniteGroup>,
    dim: usize,
    gen_actions: Vec<QMat>,
    elem_actions: Vec<QMat>,
    /// Set for the regular module, enabling the permutation shortcuts.
    regular: bool,
}

impl RatModule {
    pub fn new(group: Arc<FiniteGroup>, dim: usize, gen_actions: Vec<QMat>) -> RatModule {
        let n = group.order();
        let mut elem_actions = vec![QMat::identity(dim); n];
        for i in 1..n {
            let (parent, pos) = group.word(i).expect("word");
            elem_actions[i] = elem_actions[parent].mul(&gen_actions[pos]);
        }
        RatModule {
            group,
            dim,
            gen_actions,
            elem_actions,
            regular: false,
        }
    }

    pub fn from_glattice(lattice: &GLattice) -> RatModule {
        let gen_actions = lattice.gen_mats().iter().map(|m| m.to_rational()).collect();
        RatModule::new(lattice.group().clone(), lattice.rank(), gen_actions)
    }

    /// Left regular module `Q[G]`.
    pub fn regular(group: Arc<FiniteGroup>) -> RatModule {
        let n = group.order();
        let mut gen_actions = Vec::new();
        for &g in group.generators() {
            let mut m = QMat::zeros(n, n);
            for x in 0..n {
                m[(group.mul(g, x), x)] = ExactScalar::one();
            }
            gen_actions.push(m);
        }
        let mut elem_actions = Vec::with_capacity(n);
        for e in 0..n {
            let mut m = QMat::zeros(n, n);
            for x in 0..n {
                m[(group.mul(e, x), x)] = ExactScalar::one();
            }
            elem_actions.push(m);
        }
        RatModule {
            group,
            dim: n,
            gen_actions,
            elem_actions,
            regular: true,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gen_actions(&self) -> &[QMat] {
        &self.gen_actions
    }

    pub fn elem_action(&self, e: usize) -> &QMat {
        &self.elem_actions[e]
    }

    /// Closure of the span of the seed vectors under the action:
    /// a basis of the generated submodule, as columns.
    pub fn spin(&self, seeds: &[Vec<Rational>]) -> QMat {
        let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        let reduce_insert = |v: &[Rational], echelon: &mut Vec<(usize, Vec<Rational>)>| -> bool {
            let mut w = v.to_vec();
            for (pivot, row) in echelon.iter() {
                if !w[*pivot].is_zero() {
                    let f = w[*pivot].clone();
                    for (a, b) in w.iter_mut().zip(row) {
                        *a -= &f * b;
                    }
                }
            }
            let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
                return false;
            };
            let inv = w[pivot].recip();
            for a in w.iter_mut() {
                *a *= &inv;
            }
            echelon.push((pivot, w));
            true
        };
        let mut queue: Vec<Vec<Rational>> = Vec::new();
        for s in seeds {
            if reduce_insert(s, &mut echelon) {
                queue.push(s.clone());
                basis.push(s.clone());
            }
        }
        let mut cursor = 0;
        while cursor < queue.len() {
            for a in &self.gen_actions {
                let img = a.mul_vec(&queue[cursor]);
                if reduce_insert(&img, &mut echelon) {
                    queue.push(img.clone());
                    basis.push(img);
                }
            }
            cursor += 1;
        }
        QMat::from_columns(basis)
    }

    /// Generator actions restricted to the span of `w`, in `w`-coordinates.
    pub fn restricted_action(&self, w: &QMat) -> Option<Vec<QMat>> {
        self.gen_actions
            .iter()
            .map(|a| solve_matrix(w, &a.mul(w)))
            .collect()
    }

    /// The submodule spanned by `w` as a module in its own right.
    pub fn restrict(&self, w: &QMat) -> RatModule {
        let actions = self
            .restricted_action(w)
            .expect("restricting to a non-invariant subspace");
        RatModule::new(self.group.clone(), w.cols(), actions)
    }

    /// Basis of `End_G(span w)` in `w`-coordinates.
    pub fn endomorphisms(&self, w: &QMat) -> Vec<QMat> {
        let k = w.cols();
        let actions = self
            .restricted_action(w)
            .expect("endomorphisms of a non-invariant subspace");
        if k == 0 {
            return Vec::new();
        }
        // unknowns X (k×k), constraints A·X - X·A = 0 per generator;
        // with no generators every matrix commutes
        let unknowns = k * k;
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); unknowns]];
        for a in &actions {
            for i in 0..k {
                for j in 0..k {
                    let mut row = vec![Rational::zero(); unknowns];
                    // (A·X)[i][j] = Σ_s A[i][s] X[s][j]
                    for s in 0..k {
                        row[s * k + j] += &a[(i, s)];
                    }
                    // (X·A)[i][j] = Σ_s X[i][s] A[s][j]
                    for s in 0..k {
                        row[i * k + s] -= &a[(s, j)];
                    }
                    rows.push(row);
                }
            }
        }
        let system = QMat::from_rows(rows);
        let kernel = kernel_over_field(&system);
        (0..kernel.cols())
            .map(|c| {
                let v = kernel.column(c);
                QMat::from_fn(k, k, |i, j| v[i * k + j].clone())
            })
            .collect()
    }

    /// Equivariant projector of the ambient module onto `span(w)`,
    /// obtained by averaging the orthogonal projection over the group.
    pub fn averaged_projector(&self, w: &QMat) -> QMat {
        let gram = w.transpose().mul(w);
        let gram_inv = crate::exact::inverse(&gram).expect("independent columns");
        let proj = w.mul(&gram_inv).mul(&w.transpose());
        let n = self.dim;
        let mut sum = QMat::zeros(n, n);
        if self.regular {
            // ρ(g)·Π·ρ(g)⁻¹ permutes the entries of Π
            for e in 0..self.group.order() {
                let einv = self.group.inv(e);
                for a in 0..n {
                    for b in 0..n {
                        let v = &proj[(self.group.mul(einv, a), self.group.mul(einv, b))];
                        if !v.is_zero() {
                            sum[(a, b)] += v;
                        }
                    }
                }
            }
        } else {
            for e in 0..self.group.order() {
                let einv = self.group.inv(e);
                let term = self.elem_actions[e]
                    .mul(&proj)
                    .mul(&self.elem_actions[einv]);
                sum = sum.add(&term);
            }
        }
        sum.scale(&rat(1, self.group.order() as i64))
    }

    /// G-invariant complement of `span(sub)` inside `span(whole)`;
    /// `sub`'s columns must lie in `span(whole)`. Returned in ambient
    /// coordinates.
    pub fn complement_in(&self, sub: &QMat, whole: &QMat) -> QMat {
        let inner = self.restrict(whole);
        let sub_coords = solve_matrix(whole, sub).expect("sub inside whole");
        let p = inner.averaged_projector(&sub_coords);
        let ker = kernel_over_field(&p);
        whole.mul(&ker)
    }

    /// Minimal polynomial of a `w`-coordinate endomorphism.
    fn minimal_polynomial(theta: &QMat) -> Poly {
        let k = theta.rows();
        let mut result: Poly = vec![ExactScalar::one()];
        for start in 0..k {
            // annihilator of the Krylov sequence from e_start
            let mut vectors: Vec<Vec<Rational>> = Vec::new();
            let mut v = vec![Rational::zero(); k];
            v[start] = ExactScalar::one();
            loop {
                // test dependency of v on vectors
                let mut m = QMat::from_columns(vectors.iter().cloned().chain([v.clone()]).collect());
                let pivots = rref(&mut m);
                if pivots.len() <= vectors.len() {
                    // dependent: extract the relation by solving
                    let basis = QMat::from_columns(vectors.clone());
                    let coeffs = crate::exact::solve(&basis, &v).expect("dependent vector");
                    let mut p: Poly = coeffs.iter().map(|c| -c.clone()).collect();
                    p.push(ExactScalar::one());
                    result = lcm_poly(&result, &poly::trim(p));
                    break;
                }
                vectors.push(v.clone());
                v = theta.mul_vec(&v);
            }
            if poly_of_matrix(&result, theta).is_zero() {
                break;
            }
        }
        result
    }

    /// Looks for a proper nonzero submodule of `span(w)`. Deterministic
    /// candidates come first; `budget` bounds the randomized attempts.
    fn find_proper_submodule(
        &self,
        w: &QMat,
        rng: &mut ChaCha8Rng,
        budget: usize,
    ) -> Option<QMat> {
        let k = w.cols();
        if k <= 1 {
            return None;
        }

        // spun cyclic submodules: the basis columns first (deterministic
        // output for the common fully-reducible cases), then random
        // combinations
        let mut spin_seeds: Vec<Vec<Rational>> = w.columns().take(4).collect();
        for _ in 0..3 {
            let coeffs: Vec<Rational> = (0..k)
                .map(|_| Rational::from(BigInt::from(rng.gen_range(-3i64..=3))))
                .collect();
            spin_seeds.push(w.mul_vec_cols(&coeffs));
        }
        for v in spin_seeds {
            if v.iter().all(ExactScalar::is_zero) {
                continue;
            }
            let spun = self.spin(&[v]);
            if spun.cols() > 0 && spun.cols() < k {
                return Some(spun);
            }
        }

        // the cheap endomorphism candidates come in stages; the full
        // commutant is only solved when everything else failed
        let try_candidates = |candidates: &[QMat]| -> Option<QMat> {
            let exponent = self.group.exponent();
            for theta in candidates {
                if theta.is_zero() || is_scalar(theta) {
                    continue;
                }
                let mu = Self::minimal_polynomial(theta);
                for f in split_factors(&mu, exponent) {
                    let image = poly_of_matrix(&f, theta);
                    let ker = kernel_over_field(&image);
                    if ker.cols() > 0 && ker.cols() < k {
                        return Some(w.mul(&ker));
                    }
                }
            }
            None
        };

        // central element actions
        let mut stage: Vec<QMat> = Vec::new();
        for &z in &self.group.center() {
            if z == self.group.identity() {
                continue;
            }
            if let Some(theta) = solve_matrix(w, &self.elem_actions[z].mul(w)) {
                stage.push(theta);
            }
        }
        if let Some(found) = try_candidates(&stage) {
            return Some(found);
        }

        // right multiplications on the regular module, projected back in
        if self.regular {
            let p = self.averaged_projector(w);
            let classes = self.group.conjugacy_classes();
            let mut stage = Vec::new();
            for &x in classes.reps() {
                if x == self.group.identity() {
                    continue;
                }
                let xinv = self.group.inv(x);
                // (R(x)·w)[row] = w[row·x⁻¹]
                let rw = QMat::from_fn(self.dim, k, |row, c| {
                    w[(self.group.mul(row, xinv), c)].clone()
                });
                if let Some(theta) = solve_matrix(w, &p.mul(&rw)) {
                    stage.push(theta);
                }
            }
            if let Some(found) = try_candidates(&stage) {
                return Some(found);
            }
        }

        // endomorphism algebra basis, plus seeded random combinations
        let endos = self.endomorphisms(w);
        let mut stage: Vec<QMat> = endos.clone();
        for i in 0..endos.len() {
            for j in i + 1..endos.len() {
                stage.push(endos[i].add(&endos[j]));
            }
        }
        for _ in 0..budget {
            let mut combo = QMat::zeros(k, k);
            for e in &endos {
                let c = Rational::from(BigInt::from(rng.gen_range(-3i64..=3)));
                combo = combo.add(&e.scale(&c));
            }
            stage.push(combo);
        }
        try_candidates(&stage)
    }

    /// Shrinks `span(w)` to a minimal submodule found by the search.
    /// The result is genuinely minimal whenever the search succeeds at
    /// every level; callers certify the outcome independently.
    pub fn shrink_to_minimal(&self, w: &QMat, rng: &mut ChaCha8Rng, budget: usize) -> QMat {
        let mut current = w.clone();
        while let Some(smaller) = self.find_proper_submodule(&current, rng, budget) {
            current = smaller;
        }
        current
    }
}

/// Basis of the space of equivariant maps between two modules given by
/// generator actions: matrices `Ψ` (dst_dim × src_dim) with
/// `Ψ·A_src(g) = A_dst(g)·Ψ`. With no generators every matrix counts.
pub fn hom_space(src_dim: usize, dst_dim: usize, src_actions: &[QMat], dst_actions: &[QMat]) -> Vec<QMat> {
    assert_eq!(src_actions.len(), dst_actions.len());
    let (r, s) = (src_dim, dst_dim);
    if r == 0 || s == 0 {
        return Vec::new();
    }
    let unknowns = s * r;
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); unknowns]];
    for (a, b) in src_actions.iter().zip(dst_actions) {
        for i in 0..s {
            for j in 0..r {
                let mut row = vec![Rational::zero(); unknowns];
                // (Ψ·A)[i][j] = Σ_t Ψ[i][t]·A[t][j]
                for t in 0..r {
                    row[i * r + t] += &a[(t, j)];
                }
                // (B·Ψ)[i][j] = Σ_t B[i][t]·Ψ[t][j]
                for t in 0..s {
                    row[t * r + j] -= &b[(i, t)];
                }
                rows.push(row);
            }
        }
    }
    let system = QMat::from_rows(rows);
    let kernel = kernel_over_field(&system);
    (0..kernel.cols())
        .map(|c| {
            let v = kernel.column(c);
            QMat::from_fn(s, r, |i, j| v[i * r + j].clone())
        })
        .collect()
}

fn is_scalar(m: &QMat) -> bool {
    let k = m.rows();
    if k == 0 {
        return true;
    }
    let d = m[(0, 0)].clone();
    for i in 0..k {
        for j in 0..k {
            let expected = if i == j { d.clone() } else { Rational::zero() };
            if m[(i, j)] != expected {
                return false;
            }
        }
    }
    true
}

fn lcm_poly(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let g = poly::gcd(a, b);
    poly::div_exact(&poly::mul(a, b), &g)
}

fn poly_of_matrix(p: &Poly, m: &QMat) -> QMat {
    let k = m.rows();
    let mut acc = QMat::zeros(k, k);
    for c in p.iter().rev() {
        acc = m.mul(&acc);
        for i in 0..k {
            acc[(i, i)] += c;
        }
    }
    acc
}

/// Nontrivial factors of `mu` worth testing for kernel splits: linear
/// factors from rational roots, cyclotomic divisors, and the squarefree
/// part. No general factorization is attempted.
fn split_factors(mu: &Poly, exponent: u64) -> Vec<Poly> {
    let Some(deg) = poly::degree(mu) else {
        return Vec::new();
    };
    if deg <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();

    for root in rational_root_candidates(mu) {
        if poly::eval(mu, &root).is_zero() {
            out.push(vec![-root.clone(), ExactScalar::one()]);
        }
    }

    let mut d = 1;
    while d <= exponent {
        if exponent % d == 0 {
            let phi = cyclotomic_polynomial(d);
            let g = poly::gcd(mu, &phi);
            if let Some(gd) = poly::degree(&g) {
                if gd > 0 && gd < deg {
                    out.push(g);
                }
            }
        }
        d += 1;
    }

    let derivative = poly::derivative(mu);
    let g = poly::gcd(mu, &derivative);
    if let Some(gd) = poly::degree(&g) {
        if gd > 0 {
            // squarefree radical μ/g
            let radical = poly::div_exact(mu, &g);
            if poly::degree(&radical).is_some_and(|rd| rd < deg) {
                out.push(radical);
            }
        }
    }
    out
}

fn rational_root_candidates(mu: &Poly) -> Vec<Rational> {
    let Some(deg) = poly::degree(mu) else {
        return Vec::new();
    };
    // clear denominators to a primitive integer polynomial
    let mut denom_lcm = BigInt::from(1);
    for c in mu.iter() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = mu
        .iter()
        .map(|c| (c * Rational::from(denom_lcm.clone())).to_integer())
        .collect();
    let a0 = ints[0].clone();
    let ad = ints[deg].clone();
    if a0.is_zero() {
        return vec![Rational::zero()];
    }
    let mut out = Vec::new();
    for p in bounded_divisors(&a0) {
        for q in bounded_divisors(&ad) {
            let r = Rational::new(p.clone(), q.clone());
            out.push(r.clone());
            out.push(-r);
        }
    }
    out.push(Rational::zero());
    out
}

fn bounded_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let cap = BigInt::from(1_000_000_000u64);
    if n > cap {
        // fall back on small candidates only
        return (1..=16u64).map(BigInt::from).collect();
    }
    let n64: u64 = n.to_u64().unwrap_or(1).max(1);
    let mut out = Vec::new();
    let mut f = 1u64;
    while f * f <= n64 {
        if n64 % f == 0 {
            out.push(BigInt::from(f));
            out.push(BigInt::from(n64 / f));
        }
        f += 1;
        if out.len() > 4000 {
            break;
        }
    }
    out.sort();
    out.dedup();
    out
}

impl QMat {
    /// Linear combination of the columns.
    fn mul_vec_cols(&self, coeffs: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols(), coeffs.len());
        (0..self.rows())
            .map(|r| {
                let mut acc = Rational::zero();
                for (c, coef) in coeffs.iter().enumerate() {
                    acc += &self[(r, c)] * coef;
                }
                acc
            })
            .collect()
    }
}
