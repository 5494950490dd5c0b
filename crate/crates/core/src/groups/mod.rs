//! Finite groups from matrix or permutation generators.
//!
//! Elements are enumerated breadth-first from the identity with the
//! generators taken in the order given, so element indexing — and
//! everything derived from it, like class representatives and coset
//! representatives — is deterministic.

mod classes;
mod families;
mod glattice;

pub use classes::ConjClasses;
pub use families::{
    alternating, cyclic, dihedral, elementary_abelian, quaternion8, symmetric,
};
pub use glattice::{induced_trivial_lattice, regular_lattice, GLattice};

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use crate::exact::{inverse, IMat};
use crate::{Error, Result};

/// Default ceiling on the closure size.
pub const DEFAULT_ORDER_LIMIT: usize = 20_000;

/// A group element: a permutation of `0..degree` or an integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Elem {
    Perm(Vec<u32>),
    Mat(IMat),
}

impl Elem {
    fn compose(&self, other: &Elem) -> Elem {
        match (self, other) {
            (Elem::Perm(a), Elem::Perm(b)) => {
                // (a·b)(x) = a(b(x))
                Elem::Perm(b.iter().map(|&x| a[x as usize]).collect())
            }
            (Elem::Mat(a), Elem::Mat(b)) => Elem::Mat(a.mul(b)),
            _ => panic!("mixed element kinds"),
        }
    }

    fn invert(&self) -> Elem {
        match self {
            Elem::Perm(p) => {
                let mut q = vec![0u32; p.len()];
                for (i, &x) in p.iter().enumerate() {
                    q[x as usize] = i as u32;
                }
                Elem::Perm(q)
            }
            Elem::Mat(m) => {
                let inv = inverse(&m.to_rational())
                    .and_then(|q| q.to_integer())
                    .expect("element of a finite matrix group is unimodular");
                Elem::Mat(inv)
            }
        }
    }
}

pub struct FiniteGroup {
    elems: Vec<Elem>,
    index: HashMap<Elem, usize>,
    /// Element index of each input generator, in input order.
    gens: Vec<usize>,
    /// `words[i] = Some((parent, gen_pos))` with `elem_i = parent · gen`.
    words: Vec<Option<(usize, usize)>>,
    inv: Vec<usize>,
    orders: Vec<u32>,
    mult_table: Option<Vec<u32>>,
    classes: OnceLock<ConjClasses>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

impl FiniteGroup {
    pub fn from_permutations(
        degree: usize,
        gens: &[Vec<usize>],
        limit: usize,
    ) -> Result<Arc<FiniteGroup>> {
        let mut elems = Vec::new();
        for g in gens {
            if g.len() != degree {
                return Err(Error::BadPermutation(format!(
                    "expected {} images, got {}",
                    degree,
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(Error::BadPermutation(format!("{g:?} is not a bijection")));
                }
                seen[x] = true;
            }
            elems.push(Elem::Perm(g.iter().map(|&x| x as u32).collect()));
        }
        let identity = Elem::Perm((0..degree as u32).collect());
        Self::close(identity, elems, limit)
    }

    pub fn from_matrices(dim: usize, gens: &[IMat], limit: usize) -> Result<Arc<FiniteGroup>> {
        for g in gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Dimension(format!(
                    "generator is {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            let invertible = inverse(&g.to_rational())
                .map(|q| q.to_integer().is_some())
                .unwrap_or(false);
            if !invertible {
                return Err(Error::NonInvertibleGenerator);
            }
        }
        let gen_elems = gens.iter().map(|g| Elem::Mat(g.clone())).collect();
        Self::close(Elem::Mat(IMat::identity(dim)), gen_elems, limit)
    }

    pub fn trivial() -> Arc<FiniteGroup> {
        Self::from_matrices(0, &[], 2).expect("trivial group")
    }

    fn close(identity: Elem, gen_elems: Vec<Elem>, limit: usize) -> Result<Arc<FiniteGroup>> {
        let mut elems = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut words: Vec<Option<(usize, usize)>> = vec![None];

        let mut cursor = 0;
        while cursor < elems.len() {
            for (pos, g) in gen_elems.iter().enumerate() {
                let fresh = elems[cursor].compose(g);
                if !index.contains_key(&fresh) {
                    if elems.len() >= limit {
                        return Err(Error::ClosureLimit(limit));
                    }
                    index.insert(fresh.clone(), elems.len());
                    elems.push(fresh);
                    words.push(Some((cursor, pos)));
                }
            }
            cursor += 1;
        }

        let gens = gen_elems.iter().map(|g| index[g]).collect();
        let n = elems.len();
        let inv: Vec<usize> = elems.iter().map(|e| index[&e.invert()]).collect();

        let mult_table = if n <= 256 {
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = index[&elems[i].compose(&elems[j])] as u32;
                }
            }
            Some(t)
        } else {
            None
        };

        let mut group = FiniteGroup {
            elems,
            index,
            gens,
            words,
            inv,
            orders: Vec::new(),
            mult_table,
            classes: OnceLock::new(),
        };
        group.orders = (0..n).map(|i| group.order_of(i)).collect();
        Ok(Arc::new(group))
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn element(&self, i: usize) -> &Elem {
        &self.elems[i]
    }

    pub fn word(&self, i: usize) -> Option<(usize, usize)> {
        self.words[i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.mult_table {
            t[a * self.order() + b] as usize
        } else {
            self.index[&self.elems[a].compose(&self.elems[b])]
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    fn order_of(&self, a: usize) -> u32 {
        let mut x = a;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1u64, |acc, &o| acc.lcm(&(o as u64)))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Number of solutions of `g² = 1`, the identity included.
    pub fn involution_count(&self) -> usize {
        (0..self.order()).filter(|&g| self.mul(g, g) == 0).count()
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| {
                self.gens
                    .iter()
                    .all(|&g| self.mul(z, g) == self.mul(g, z))
            })
            .collect()
    }

    pub fn conjugacy_classes(&self) -> &ConjClasses {
        self.classes.get_or_init(|| ConjClasses::compute(self))
    }

    /// Closure of a subset under multiplication, sorted by index.
    pub fn close_subset(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity()] = true;
        let mut out = vec![self.identity()];
        let mut cursor = 0;
        while cursor < out.len() {
            for &g in gens {
                let y = self.mul(out[cursor], g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            cursor += 1;
        }
        out.sort_unstable();
        out
    }

    /// Checks that `elems` is a subgroup given as a full element list.
    pub fn verify_subgroup(&self, elems: &[usize]) -> Result<()> {
        let set: std::collections::BTreeSet<usize> = elems.iter().copied().collect();
        if !set.contains(&self.identity()) {
            return Err(Error::SubgroupNotClosed);
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(Error::SubgroupNotClosed);
                }
            }
        }
        Ok(())
    }

    /// Left-coset representatives of the subgroup, each the least element
    /// index in its coset, in ascending order.
    pub fn coset_reps(&self, subgroup: &[usize]) -> Vec<usize> {
        let mut taken = vec![false; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if taken[x] {
                continue;
            }
            reps.push(x);
            for &h in subgroup {
                taken[self.mul(x, h)] = true;
            }
        }
        reps
    }

    /// One representative per conjugacy class of prime-order subgroups,
    /// as `(generator element, prime)` pairs, sorted by prime and then
    /// generator index.
    pub fn vasquez_set(&self) -> Vec<(usize, u64)> {
        let mut subgroups: Vec<Vec<usize>> = Vec::new();
        let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
        for x in 1..self.order() {
            let p = self.orders[x] as u64;
            if !is_prime(p) {
                continue;
            }
            let mut sub: Vec<usize> = (0..p).map(|k| self.pow(x, k)).collect();
            sub.sort_unstable();
            if seen.insert(sub.clone()) {
                subgroups.push(sub);
            }
        }

        // orbits of the conjugation action on subgroups
        let mut assigned: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
        let mut reps = Vec::new();
        for sub in &subgroups {
            if assigned.contains(sub) {
                continue;
            }
            let mut orbit = vec![sub.clone()];
            let mut in_orbit: std::collections::HashSet<Vec<usize>> =
                std::collections::HashSet::new();
            in_orbit.insert(sub.clone());
            let mut cursor = 0;
            while cursor < orbit.len() {
                let current = orbit[cursor].clone();
                for &g in &self.gens {
                    let mut conj: Vec<usize> = current
                        .iter()
                        .map(|&h| self.mul(self.mul(g, h), self.inv(g)))
                        .collect();
                    conj.sort_unstable();
                    if in_orbit.insert(conj.clone()) {
                        orbit.push(conj);
                    }
                }
                cursor += 1;
            }
            let least = orbit.iter().min().expect("nonempty orbit").clone();
            for s in orbit {
                assigned.insert(s);
            }
            let generator = least[1]; // least non-identity element
            reps.push((generator, self.orders[generator] as u64));
        }
        reps.sort_by_key(|&(g, p)| (p, g));
        reps
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}
