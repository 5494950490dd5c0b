//! Invariant bounds: the coset-sum upper bound, p-group exactness, the
//! three complex bounds and their closed forms, and the degree threshold
//! above which Chern classes vanish.

use serde::Deserialize;

use crate::characters::RationalTable;
use crate::groups::FiniteGroup;
use crate::{Error, Result};

/// An exact value or an interval, with a note on where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub lo: u64,
    pub hi: u64,
    pub provenance: String,
}

impl BoundValue {
    fn exact(value: u64, provenance: &str) -> BoundValue {
        BoundValue {
            lo: value,
            hi: value,
            provenance: provenance.to_string(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub group_order: usize,
    /// `Σ [G:H]` over the prime-order subgroup representatives.
    pub coset_sum: u64,
    pub n_real: BoundValue,
    pub n_complex: BoundValue,
    pub irr1_sum: Option<u64>,
    pub chern_vanishing_threshold: u64,
}

/// `Σ_{H∈X} [G:H]`; exact equality with the invariant holds for
/// p-groups, where the flag is set.
pub fn vasquez_upper_bound(group: &FiniteGroup) -> (u64, bool) {
    let sum = group
        .vasquez_set()
        .iter()
        .map(|&(_, p)| group.order() as u64 / p)
        .sum();
    (sum, is_p_group(group))
}

pub fn is_p_group(group: &FiniteGroup) -> bool {
    let mut order = group.order();
    if order == 1 {
        return true;
    }
    let mut p = 2;
    while p * p <= order {
        if order % p == 0 {
            while order % p == 0 {
                order /= p;
            }
            return order == 1;
        }
        p += 1;
    }
    true // prime order
}

#[derive(Deserialize)]
struct KnownEntry {
    order: usize,
    class_sizes: Vec<usize>,
    n: u64,
    source: String,
}

/// Known exact values that are stored, not computed. Groups are
/// fingerprinted by order and class-size multiset, which is unambiguous
/// for the listed entries.
const KNOWN_VALUES: &str = r#"[
  { "order": 60, "class_sizes": [1, 12, 12, 15, 20], "n": 16,
    "source": "stored value for the alternating group on five letters" }
]"#;

pub fn known_vasquez_value(group: &FiniteGroup) -> Option<(u64, String)> {
    let entries: Vec<KnownEntry> =
        serde_json::from_str(KNOWN_VALUES).expect("known-values table parses");
    let mut sizes: Vec<usize> = group.conjugacy_classes().sizes().to_vec();
    sizes.sort_unstable();
    entries
        .iter()
        .find(|e| e.order == group.order() && e.class_sizes == sizes)
        .map(|e| (e.n, e.source.clone()))
}

/// Exact value or interval for the real invariant. An externally known
/// value can be injected with `assume`.
pub fn real_bounds(group: &FiniteGroup, assume: Option<u64>) -> BoundValue {
    let (sum, p_group) = vasquez_upper_bound(group);
    if let Some(v) = assume {
        return BoundValue::exact(v, "assumed");
    }
    if group.order() == 1 {
        return BoundValue::exact(0, "trivial group");
    }
    if p_group {
        return BoundValue::exact(sum, "p-group coset sum");
    }
    if let Some((v, source)) = known_vasquez_value(group) {
        return BoundValue {
            lo: v,
            hi: v,
            provenance: source,
        };
    }
    BoundValue {
        lo: 1,
        hi: sum,
        provenance: "generic interval: positive, bounded by the coset sum".to_string(),
    }
}

/// `n_C` for odd-order groups with exactly known `n`: `⌊(n+1)/2⌋`.
pub fn odd_order_value(group: &FiniteGroup, n_exact: u64) -> Result<u64> {
    if group.order() % 2 == 0 {
        return Err(Error::Unsupported(
            "odd-order closed form",
            "a group of odd order".into(),
        ));
    }
    Ok((n_exact + 1) / 2)
}

/// `n_C` of an elementary abelian 2-group of rank `k ≥ 2`:
/// `2^{k-1} + 2^{k-2}(2^k - 1)`.
pub fn elementary_abelian_2_value(k: u32) -> Result<u64> {
    if k < 2 {
        return Err(Error::Unsupported(
            "elementary-abelian closed form",
            "rank at least 2".into(),
        ));
    }
    Ok((1 << (k - 1)) + (1 << (k - 2)) * ((1 << k) - 1))
}

/// The matching real invariant `n = 2^{k-1}(2^k - 1)`.
pub fn elementary_abelian_2_real(k: u32) -> u64 {
    (1 << (k - 1)) * ((1 << k) - 1)
}

fn elementary_abelian_2_rank(group: &FiniteGroup) -> Option<u32> {
    let order = group.order();
    if order < 2 || order & (order - 1) != 0 || group.exponent() != 2 {
        return None;
    }
    Some(order.trailing_zeros())
}

/// The three bounds combined: `⌈n/2⌉ ≤ n_C ≤ min(n, ⌊(n + Σ)/2⌋)`,
/// collapsed to a point by the closed forms where they apply.
pub fn complex_bounds(
    group: &FiniteGroup,
    rational: &RationalTable,
    assume_n: Option<u64>,
) -> Result<(BoundValue, u64)> {
    let irr1 = rational.irr1_sum()?;
    if group.order() == 1 {
        return Ok((BoundValue::exact(0, "trivial group"), irr1));
    }
    let n = real_bounds(group, assume_n);
    let lo = n.lo.div_ceil(2);
    let hi = n.hi.min((n.hi + irr1) / 2);
    let value = if let Some(k) = elementary_abelian_2_rank(group) {
        if k >= 2 {
            let v = elementary_abelian_2_value(k)?;
            Some((v, "elementary-abelian-2 closed form"))
        } else {
            None
        }
    } else if group.order() % 2 == 1 && n.is_exact() {
        Some((odd_order_value(group, n.lo)?, "odd-order closed form"))
    } else {
        None
    };
    let bound = match value {
        Some((v, provenance)) => {
            if v < lo || v > hi {
                return Err(Error::Inconsistency(format!(
                    "closed form {v} escapes the generic interval [{lo}, {hi}]"
                )));
            }
            BoundValue::exact(v, provenance)
        }
        None if lo == hi => BoundValue::exact(lo, "interval collapse"),
        None => BoundValue {
            lo,
            hi,
            provenance: "generic three-bound interval".to_string(),
        },
    };
    Ok((bound, irr1))
}

/// Chern classes of a generalized hyperelliptic manifold with this
/// holonomy vanish in all degrees above the returned threshold.
pub fn chern_vanishing_threshold(
    group: &FiniteGroup,
    rational: &RationalTable,
    assume_n: Option<u64>,
) -> Result<u64> {
    Ok(complex_bounds(group, rational, assume_n)?.0.hi)
}

pub fn bound_report(
    group: &FiniteGroup,
    rational: &RationalTable,
    assume_n: Option<u64>,
) -> Result<BoundReport> {
    let (coset_sum, _) = vasquez_upper_bound(group);
    let n_real = real_bounds(group, assume_n);
    let (n_complex, irr1) = complex_bounds(group, rational, assume_n)?;
    // the three bounds must cohere
    if n_real.lo.div_ceil(2) > n_complex.hi {
        return Err(Error::Inconsistency(
            "complex bounds fall below half the real bound".into(),
        ));
    }
    Ok(BoundReport {
        group_order: group.order(),
        coset_sum,
        n_real,
        n_complex: n_complex.clone(),
        irr1_sum: Some(irr1),
        chern_vanishing_threshold: n_complex.hi,
    })
}
