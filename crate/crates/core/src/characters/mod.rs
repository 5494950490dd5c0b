//! Complex character tables, Frobenius–Schur indicators, Galois orbits,
//! Schur indices and rational decomposition of G-lattices.

mod dixon;
mod module;
mod rational;
mod spin;

pub use module::{hom_space, RatModule};
pub use rational::{
    essentially_complex, BadComponent, DecompositionEntry, LatticeDecomposition, ModuleType,
    RationalComponent, RationalTable,
};
pub use spin::{schur_index, spin_minimal_module, SpinOutcome};

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::exact::{Cyclotomic, ExactScalar, Rational};
use crate::groups::{ConjClasses, FiniteGroup};
use crate::{Error, Result};

/// The table of complex irreducible characters of a finite group, with
/// exact cyclotomic values of conductor `exp(G)`.
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    conductor: u64,
    /// `values[j][i]`: character `j` at class `i`. Characters are
    /// ordered with the trivial one first, then by degree and value.
    values: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    nu2: Vec<i8>,
    /// Partition of the character indices into Galois orbits, each
    /// sorted, ordered by least member.
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    dixon_prime: u64,
}

impl CharacterTable {
    /// Computes the table and checks orthogonality, the degree sum, the
    /// involution-count identity and orbit constancy of the indicator.
    pub fn build(group: Arc<FiniteGroup>) -> Result<CharacterTable> {
        let modular = dixon::modular_character_table(&group);
        let classes = group.conjugacy_classes();
        let r = classes.count();
        let conductor = group.exponent();

        // deterministic row order: trivial first, then (degree, values)
        let mut order: Vec<usize> = (0..r).collect();
        let trivial = (0..r)
            .find(|&j| modular.values[j].iter().all(|v| v.is_one()))
            .ok_or_else(|| Error::Inconsistency("no trivial character found".into()))?;
        order.sort_by(|&a, &b| {
            if a == trivial || b == trivial {
                return (a != trivial).cmp(&(b != trivial));
            }
            modular.degrees[a].cmp(&modular.degrees[b]).then_with(|| {
                for i in 0..r {
                    let c = modular.values[a][i].lex_cmp(&modular.values[b][i]);
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
                std::cmp::Ordering::Equal
            })
        });
        let values: Vec<Vec<Cyclotomic>> = order.iter().map(|&j| modular.values[j].clone()).collect();
        let degrees: Vec<u64> = order.iter().map(|&j| modular.degrees[j]).collect();

        let mut table = CharacterTable {
            group: group.clone(),
            conductor,
            values,
            degrees,
            nu2: Vec::new(),
            orbits: Vec::new(),
            orbit_of: Vec::new(),
            dixon_prime: modular.prime,
        };
        table.nu2 = (0..r)
            .map(|j| table.frobenius_schur(j))
            .collect::<Result<Vec<i8>>>()?;
        table.compute_orbits()?;
        table.verify(group.conjugacy_classes())?;
        Ok(table)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &ConjClasses {
        self.group.conjugacy_classes()
    }

    pub fn count(&self) -> usize {
        self.degrees.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn dixon_prime(&self) -> u64 {
        self.dixon_prime
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Frobenius–Schur indicator of one character.
    pub fn nu2(&self, chi: usize) -> i8 {
        self.nu2[chi]
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, chi: usize) -> usize {
        self.orbit_of[chi]
    }

    /// Degree of `Q(χ)` over `Q` — the size of the Galois orbit.
    pub fn field_degree(&self, orbit: usize) -> usize {
        self.orbits[orbit].len()
    }

    /// `(1/|G|)·Σ_g χ(g²)`, evaluated through class sizes and the
    /// squaring power map.
    fn frobenius_schur(&self, chi: usize) -> Result<i8> {
        let classes = self.classes();
        let mut sum: Cyclotomic = ExactScalar::zero();
        for i in 0..classes.count() {
            let sq = self.group.power_class(i, 2);
            let term = self.values[chi][sq].scale(&Rational::from(BigInt::from(
                classes.sizes()[i] as i64,
            )));
            sum = sum.add(&term);
        }
        let total = sum.scale(&crate::exact::rat(1, self.group.order() as i64));
        let r = total
            .as_rational()
            .filter(Rational::is_integer)
            .ok_or_else(|| Error::Inconsistency("indicator is not an integer".into()))?;
        let n = r.to_integer();
        if n.abs() > BigInt::one() {
            return Err(Error::Inconsistency(format!("indicator {n} out of range")));
        }
        Ok(if n.is_zero() {
            0
        } else if n.is_positive() {
            1
        } else {
            -1
        })
    }

    /// Public form of the indicator, recomputed on demand.
    pub fn fs_indicator(&self, chi: usize) -> i8 {
        self.nu2[chi]
    }

    /// Inner product of two rows, exact.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Rational {
        let classes = self.classes();
        let mut sum: Cyclotomic = ExactScalar::zero();
        for i in 0..classes.count() {
            let conj = &b[classes.inverse_class(i)];
            let term = a[i]
                .mul(conj)
                .scale(&Rational::from(BigInt::from(classes.sizes()[i] as i64)));
            sum = sum.add(&term);
        }
        let total = sum.scale(&crate::exact::rat(1, self.group.order() as i64));
        total
            .as_rational()
            .expect("inner product of characters is rational")
    }

    fn compute_orbits(&mut self) -> Result<()> {
        let r = self.count();
        let classes = self.classes();
        let mut orbit_of = vec![usize::MAX; r];
        let mut orbits = Vec::new();
        for start in 0..r {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            for k in 2..self.conductor {
                if k.gcd(&self.conductor) != 1 {
                    continue;
                }
                // σ_k picture: the row with values χ(g^k)
                let mapped: Vec<Cyclotomic> = (0..classes.count())
                    .map(|i| self.values[start][self.group.power_class(i, k)].clone())
                    .collect();
                let image = (0..r)
                    .find(|&j| self.values[j] == mapped)
                    .ok_or_else(|| {
                        Error::Inconsistency("Galois image of a character is missing".into())
                    })?;
                if orbit_of[image] == usize::MAX {
                    orbit_of[image] = id;
                    members.push(image);
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        self.orbits = orbits;
        self.orbit_of = orbit_of;
        Ok(())
    }

    fn verify(&self, classes: &ConjClasses) -> Result<()> {
        let r = self.count();
        // row orthogonality
        for a in 0..r {
            for b in 0..r {
                let ip = self.inner_product(&self.values[a], &self.values[b]);
                let expected = if a == b {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                if ip != expected {
                    return Err(Error::Inconsistency(format!(
                        "orthogonality fails at rows {a},{b}: ({ip})"
                    )));
                }
            }
        }
        // degree sum
        let sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sq != self.group.order() as u64 {
            return Err(Error::Inconsistency(format!(
                "degree squares sum to {sq}, group order is {}",
                self.group.order()
            )));
        }
        // involution-count identity
        let lhs: i64 = (0..r)
            .map(|j| self.nu2[j] as i64 * self.degrees[j] as i64)
            .sum();
        if lhs != self.group.involution_count() as i64 {
            return Err(Error::Inconsistency(format!(
                "indicator identity fails: {lhs} vs {}",
                self.group.involution_count()
            )));
        }
        // indicator constant on orbits; degrees match class count
        for orbit in &self.orbits {
            let first = self.nu2[orbit[0]];
            if orbit.iter().any(|&j| self.nu2[j] != first) {
                return Err(Error::Inconsistency(
                    "indicator varies within a Galois orbit".into(),
                ));
            }
        }
        if r != classes.count() {
            return Err(Error::Inconsistency("row count vs class count".into()));
        }
        Ok(())
    }

    /// Values of the trace character `Σ_σ σχ` of an orbit: rational
    /// integers per class.
    pub fn orbit_trace_character(&self, orbit: usize) -> Vec<BigInt> {
        let classes = self.classes();
        (0..classes.count())
            .map(|i| {
                let mut sum: Cyclotomic = ExactScalar::zero();
                for &j in &self.orbits[orbit] {
                    sum = sum.add(&self.values[j][i]);
                }
                sum.as_rational()
                    .filter(Rational::is_integer)
                    .map(|r| r.to_integer())
                    .expect("orbit trace character is integral")
            })
            .collect()
    }
}
