//! Schur indices by the spinning method.
//!
//! For each Galois orbit the homogeneous two-sided ideal of `Q[G]` (the
//! image of the orbit's rational central idempotent) is shrunk to a
//! minimal submodule by seeded Las Vegas spinning. If the minimal found
//! dimension is `q·χ(1)·[Q(χ):Q]` then `q` is a multiple of the Schur
//! index `m`; the outcome is certified as follows and never guessed:
//!
//! * `q = 1` forces `m = 1`;
//! * a quaternionic orbit (`ν₂ = -1`) has even `m ≤ 2` by
//!   Brauer–Speiser and the ramified real place, so `q = 2` certifies
//!   `m = 2`;
//! * anything else is reported as unknown.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{column_space, rat, ExactScalar, QMat, Rational};
use crate::{Error, Result};

use super::module::RatModule;
use super::CharacterTable;

/// Retry budget for the randomized part of the search.
pub const SPIN_BUDGET: usize = 32;

#[derive(Clone, Debug)]
pub struct SpinOutcome {
    pub orbit: usize,
    /// Minimal spun dimension, when spinning ran.
    pub spun_dim: Option<usize>,
    /// Certified Schur index, or `None` for an uncertified (unknown)
    /// outcome.
    pub m: Option<u64>,
    pub seed: u64,
    /// True when the result came from the shortcut table rather than
    /// spinning.
    pub shortcut: bool,
}

/// The orbit's homogeneous ideal: image of the rational central
/// idempotent `Σ_σ e_{σχ}` in the regular module.
pub fn homogeneous_ideal(table: &CharacterTable, orbit: usize) -> QMat {
    let group = table.group();
    let classes = table.classes();
    let n = group.order();
    let trace = table.orbit_trace_character(orbit);
    let degree = table.degree(table.orbits()[orbit][0]);
    // e = (χ(1)/|G|)·Σ_x T(x⁻¹)·x acting by left multiplication:
    // E[z][y] = (χ(1)/|G|)·T(y⁻¹z ... z·y⁻¹? both give the same ideal;
    // the left-multiplication operator by e has E[z][y] = c(z·y⁻¹).
    let scale = rat(degree as i64, n as i64);
    let coeff = |x: usize| -> Rational {
        let xinv = group.inv(x);
        let cls = classes.class_of(xinv);
        Rational::from(trace[cls].clone()) * &scale
    };
    let mut e = QMat::zeros(n, n);
    for z in 0..n {
        for y in 0..n {
            let x = group.mul(z, group.inv(y));
            e[(z, y)] = coeff(x);
        }
    }
    column_space(&e)
}

/// Spins the orbit's ideal down to the smallest submodule the search
/// finds, returning its basis in regular-module coordinates.
pub fn spin_minimal_module(
    table: &CharacterTable,
    orbit: usize,
    seed: u64,
) -> (QMat, RatModule) {
    let module = RatModule::regular(table.group().clone());
    let ideal = homogeneous_ideal(table, orbit);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (orbit as u64).wrapping_mul(0x9e37_79b9));
    let minimal = module.shrink_to_minimal(&ideal, &mut rng, SPIN_BUDGET);
    (minimal, module)
}

/// Schur index of one Galois orbit. Shortcuts: the trivial character
/// and abelian groups have index 1. Everything else is spun.
pub fn schur_index(table: &CharacterTable, orbit: usize, seed: u64) -> SpinOutcome {
    let rep = table.orbits()[orbit][0];
    let trivial = table.degree(rep) == 1 && table.row(rep).iter().all(|v| v.is_one());
    if trivial || table.group().is_abelian() {
        return SpinOutcome {
            orbit,
            spun_dim: None,
            m: Some(1),
            seed,
            shortcut: true,
        };
    }
    let (minimal, _) = spin_minimal_module(table, orbit, seed);
    let dim = minimal.cols();
    let degree = table.degree(rep);
    let t = table.field_degree(orbit) as u64;
    let unit = degree * t;
    let m = if dim as u64 % unit == 0 {
        let q = dim as u64 / unit;
        match (q, table.nu2(rep)) {
            (1, _) => Some(1),
            (2, -1) => Some(2),
            _ => None,
        }
    } else {
        None
    };
    SpinOutcome {
        orbit,
        spun_dim: Some(dim),
        m,
        seed,
        shortcut: false,
    }
}

/// A certified simple module for the orbit, needed when one explicit
/// copy of the simple is required (not just its index). Errors if the
/// spun module cannot be certified simple.
pub fn certified_simple_module(
    table: &CharacterTable,
    orbit: usize,
    seed: u64,
    known_m: u64,
) -> Result<(QMat, RatModule)> {
    let (minimal, module) = spin_minimal_module(table, orbit, seed);
    let rep = table.orbits()[orbit][0];
    let expected = (known_m * table.degree(rep) * table.field_degree(orbit) as u64) as usize;
    if minimal.cols() != expected {
        return Err(Error::SchurUnknown { orbit });
    }
    Ok((minimal, module))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::characters::CharacterTable;
    use crate::groups::{cyclic, elementary_abelian, quaternion8, symmetric};

    fn table(g: Arc<crate::groups::FiniteGroup>) -> CharacterTable {
        CharacterTable::build(g).unwrap()
    }

    #[test]
    fn trivial_character_shortcut() {
        let t = table(symmetric(3).unwrap());
        let orbit = t.orbit_of(0);
        let s = schur_index(&t, orbit, 0);
        assert_eq!(s.m, Some(1));
        assert!(s.shortcut);
    }

    #[test]
    fn abelian_groups_have_index_one() {
        for g in [cyclic(6).unwrap(), elementary_abelian(3, 2).unwrap()] {
            let t = table(g);
            for orbit in 0..t.orbits().len() {
                assert_eq!(schur_index(&t, orbit, 0).m, Some(1));
            }
        }
    }

    #[test]
    fn spun_dimension_identity_for_abelian_orbits() {
        // the shortcut is consulted by schur_index, but spinning itself
        // must agree: the ideal of a linear orbit is already minimal
        let t = table(cyclic(4).unwrap());
        for orbit in 0..t.orbits().len() {
            let (w, _) = spin_minimal_module(&t, orbit, 1);
            let rep = t.orbits()[orbit][0];
            assert_eq!(w.cols() as u64, t.degree(rep) * t.field_degree(orbit) as u64);
        }
    }

    #[test]
    fn s3_two_dimensional_character_has_index_one() {
        let t = table(symmetric(3).unwrap());
        let orbit = (0..t.orbits().len())
            .find(|&o| t.degree(t.orbits()[o][0]) == 2)
            .unwrap();
        let s = schur_index(&t, orbit, 0);
        assert_eq!(s.spun_dim, Some(2));
        assert_eq!(s.m, Some(1));
    }

    #[test]
    fn q8_quaternionic_character_has_index_two() {
        let t = table(quaternion8().unwrap());
        let orbit = (0..t.orbits().len())
            .find(|&o| t.nu2(t.orbits()[o][0]) == -1)
            .unwrap();
        let s = schur_index(&t, orbit, 0);
        assert_eq!(s.spun_dim, Some(4));
        assert_eq!(s.m, Some(2));
        // 4 = m·χ(1)·[Q(χ):Q] = 2·2·1
    }
}
