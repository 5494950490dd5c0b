//! Rational (simple `QG`-module) components, lattice decomposition, and
//! the essentially-complex criterion.
//!
//! A lattice is essentially complex exactly when every simple rational
//! component of real type with odd Schur index occurs with even
//! multiplicity. Writing `k = (χ_L, χ_s) = n_V·m(V)` for a real-type
//! orbit, `k` is odd precisely when both the multiplicity and the Schur
//! index are odd, so the decision needs only the parity of `k` — the
//! Schur index enters the reported witness, not the verdict.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::exact::{Cyclotomic, ExactScalar, QMat, Rational};
use crate::groups::GLattice;
use crate::{Error, Result};

use super::module::RatModule;
use super::spin::{certified_simple_module, schur_index, SpinOutcome};
use super::CharacterTable;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleType {
    Real,
    Complex,
    Quaternionic,
}

impl ModuleType {
    fn from_nu2(nu2: i8) -> ModuleType {
        match nu2 {
            1 => ModuleType::Real,
            0 => ModuleType::Complex,
            _ => ModuleType::Quaternionic,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            ModuleType::Real => "R",
            ModuleType::Complex => "C",
            ModuleType::Quaternionic => "H",
        }
    }
}

/// One Galois orbit of complex irreducibles, i.e. one simple rational
/// component up to the Schur index.
#[derive(Clone, Debug)]
pub struct RationalComponent {
    pub orbit: usize,
    /// Least character index in the orbit.
    pub rep_char: usize,
    pub degree: u64,
    /// `[Q(χ):Q]`, the orbit size.
    pub field_degree: usize,
    pub nu2: i8,
    pub module_type: ModuleType,
    pub schur: SpinOutcome,
    /// `Σ_σ σχ` per class: integral values.
    pub trace_character: Vec<BigInt>,
}

impl RationalComponent {
    pub fn schur_index(&self) -> Option<u64> {
        self.schur.m
    }

    /// `dim_Q` of the simple module: `m·χ(1)·[Q(χ):Q]`.
    pub fn dim_q(&self) -> Option<u64> {
        self.schur
            .m
            .map(|m| m * self.degree * self.field_degree as u64)
    }

    /// Values of `m·Σ_σ σχ`, the character of the simple module.
    pub fn rational_character(&self) -> Option<Vec<BigInt>> {
        self.schur
            .m
            .map(|m| self.trace_character.iter().map(|v| v * m).collect())
    }
}

/// A character table together with the per-orbit rational data.
pub struct RationalTable {
    table: Arc<CharacterTable>,
    components: Vec<RationalComponent>,
    seed: u64,
}

impl RationalTable {
    pub fn build(table: Arc<CharacterTable>, seed: u64) -> RationalTable {
        let components = (0..table.orbits().len())
            .map(|orbit| {
                let rep = table.orbits()[orbit][0];
                let nu2 = table.nu2(rep);
                RationalComponent {
                    orbit,
                    rep_char: rep,
                    degree: table.degree(rep),
                    field_degree: table.field_degree(orbit),
                    nu2,
                    module_type: ModuleType::from_nu2(nu2),
                    schur: schur_index(&table, orbit, seed),
                    trace_character: table.orbit_trace_character(orbit),
                }
            })
            .collect();
        RationalTable {
            table,
            components,
            seed,
        }
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn components(&self) -> &[RationalComponent] {
        &self.components
    }

    /// `(χ_L, χ_s)` for the orbit representative: the multiplicity of
    /// the representative complex irreducible in `L ⊗ C`. Errors if the
    /// inner product fails to be a non-negative integer, which signals a
    /// broken action.
    pub fn complex_multiplicity(
        &self,
        lattice_character: &[BigInt],
        orbit: usize,
    ) -> Result<BigInt> {
        let table = &self.table;
        let classes = table.classes();
        let rep = self.components[orbit].rep_char;
        let mut sum: Cyclotomic = ExactScalar::zero();
        for i in 0..classes.count() {
            let conj = table.value(rep, classes.inverse_class(i));
            let weight = Rational::from(
                BigInt::from(classes.sizes()[i] as i64) * &lattice_character[i],
            );
            sum = sum.add(&conj.scale(&weight));
        }
        let total = sum.scale(&crate::exact::rat(1, table.group().order() as i64));
        let r = total
            .as_rational()
            .filter(|r| r.is_integer() && !r.is_negative())
            .ok_or_else(|| {
                Error::NotAnAction("non-integral character inner product".into())
            })?;
        Ok(r.to_integer())
    }

    /// Multiplicities of the simple rational modules in the lattice.
    pub fn decompose(&self, lattice: &GLattice) -> Result<LatticeDecomposition> {
        let character = lattice.character();
        let mut entries = Vec::new();
        for comp in &self.components {
            let k = self.complex_multiplicity(&character, comp.orbit)?;
            if k.is_zero() {
                continue;
            }
            let m = comp
                .schur_index()
                .ok_or(Error::SchurUnknown { orbit: comp.orbit })?;
            let (n_v, rem) = k.div_rem(&BigInt::from(m));
            if !rem.is_zero() {
                return Err(Error::Inconsistency(format!(
                    "complex multiplicity {k} not divisible by the Schur index {m}"
                )));
            }
            entries.push(DecompositionEntry {
                orbit: comp.orbit,
                multiplicity: n_v
                    .to_string()
                    .parse()
                    .expect("multiplicity fits in u64"),
            });
        }
        let decomposition = LatticeDecomposition { entries };
        self.verify_decomposition(lattice, &character, &decomposition)?;
        Ok(decomposition)
    }

    fn verify_decomposition(
        &self,
        lattice: &GLattice,
        character: &[BigInt],
        d: &LatticeDecomposition,
    ) -> Result<()> {
        // dimensions add up
        let mut total = 0u64;
        for e in &d.entries {
            let dim = self.components[e.orbit]
                .dim_q()
                .ok_or(Error::SchurUnknown { orbit: e.orbit })?;
            total += dim * e.multiplicity;
        }
        if total != lattice.rank() as u64 {
            return Err(Error::Inconsistency(format!(
                "decomposition dimensions sum to {total}, rank is {}",
                lattice.rank()
            )));
        }
        // multiplicities reconstruct the character
        let classes = self.table.classes();
        for i in 0..classes.count() {
            let mut acc: BigInt = ExactScalar::zero();
            for e in &d.entries {
                let comp = &self.components[e.orbit];
                let rc = comp
                    .rational_character()
                    .ok_or(Error::SchurUnknown { orbit: e.orbit })?;
                acc += rc[i].clone() * BigInt::from(e.multiplicity);
            }
            if acc != character[i] {
                return Err(Error::Inconsistency(format!(
                    "character reconstruction fails at class {i}"
                )));
            }
        }
        Ok(())
    }

    /// The essentially-complex test with its witness: real-type
    /// components whose complex multiplicity `(χ_L, χ_s)` is odd. Such a
    /// component necessarily has Schur index 1 and odd multiplicity.
    pub fn essentially_complex(&self, lattice: &GLattice) -> Result<(bool, Vec<BadComponent>)> {
        let character = lattice.character();
        let mut bad = Vec::new();
        for comp in &self.components {
            if comp.module_type != ModuleType::Real {
                continue;
            }
            let k = self.complex_multiplicity(&character, comp.orbit)?;
            if k.is_odd() {
                bad.push(BadComponent {
                    orbit: comp.orbit,
                    degree: comp.degree,
                    field_degree: comp.field_degree,
                    multiplicity: k.clone(),
                });
            }
        }
        Ok((bad.is_empty(), bad))
    }

    /// `Σ_{χ: ν₂(χ)=1} m(χ)·χ(1)`, summed over characters (each orbit
    /// contributes its field degree times).
    pub fn irr1_sum(&self) -> Result<u64> {
        let mut total = 0u64;
        for comp in &self.components {
            if comp.nu2 != 1 {
                continue;
            }
            let m = comp
                .schur_index()
                .ok_or(Error::SchurUnknown { orbit: comp.orbit })?;
            total += m * comp.degree * comp.field_degree as u64;
        }
        Ok(total)
    }

    /// An explicit simple module for the orbit, certified against the
    /// known Schur index.
    pub fn simple_module(&self, orbit: usize) -> Result<(QMat, RatModule)> {
        let m = self.components[orbit]
            .schur_index()
            .ok_or(Error::SchurUnknown { orbit })?;
        certified_simple_module(&self.table, orbit, self.seed, m)
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionEntry {
    pub orbit: usize,
    /// Multiplicity `n_V` of the simple rational module.
    pub multiplicity: u64,
}

#[derive(Clone, Debug, Default)]
pub struct LatticeDecomposition {
    pub entries: Vec<DecompositionEntry>,
}

impl LatticeDecomposition {
    pub fn multiplicity_of(&self, orbit: usize) -> u64 {
        self.entries
            .iter()
            .find(|e| e.orbit == orbit)
            .map_or(0, |e| e.multiplicity)
    }
}

/// A real-type component blocking a complex structure.
#[derive(Clone, Debug)]
pub struct BadComponent {
    pub orbit: usize,
    pub degree: u64,
    pub field_degree: usize,
    /// The odd complex multiplicity `(χ_L, χ_s)`.
    pub multiplicity: BigInt,
}

/// Convenience wrapper for one-off queries.
pub fn essentially_complex(
    lattice: &GLattice,
    rational: &RationalTable,
) -> Result<(bool, Vec<BadComponent>)> {
    rational.essentially_complex(lattice)
}
