//! Built-in group families, all given by permutation generators.

use std::sync::Arc;

use crate::exact::IMat;
use crate::{Error, Result};

use super::{FiniteGroup, DEFAULT_ORDER_LIMIT};

pub fn cyclic(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic(0)".into()));
    }
    if n == 1 {
        return Ok(FiniteGroup::trivial());
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(n, &[cycle], DEFAULT_ORDER_LIMIT)
}

pub fn elementary_abelian(p: usize, rank: usize) -> Result<Arc<FiniteGroup>> {
    if !super::is_prime(p as u64) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if rank == 0 {
        return Ok(FiniteGroup::trivial());
    }
    let degree = p * rank;
    let mut gens = Vec::new();
    for block in 0..rank {
        let mut perm: Vec<usize> = (0..degree).collect();
        for i in 0..p {
            perm[block * p + i] = block * p + (i + 1) % p;
        }
        gens.push(perm);
    }
    FiniteGroup::from_permutations(degree, &gens, DEFAULT_ORDER_LIMIT)
}

/// Dihedral group of order `2n`. For `n = 2` this is the Klein group,
/// realized on four points.
pub fn dihedral(n: usize) -> Result<Arc<FiniteGroup>> {
    if n < 2 {
        return Err(Error::InvalidInput("dihedral(n) needs n >= 2".into()));
    }
    if n == 2 {
        return FiniteGroup::from_permutations(
            4,
            &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]],
            DEFAULT_ORDER_LIMIT,
        );
    }
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(n, &[rotation, reflection], DEFAULT_ORDER_LIMIT)
}

/// The quaternion group, as the regular permutation action derived from
/// its integral 4×4 model (left multiplication on the basis 1, i, j, k).
pub fn quaternion8() -> Result<Arc<FiniteGroup>> {
    let i = IMat::from_i64_rows(&[
        vec![0, -1, 0, 0],
        vec![1, 0, 0, 0],
        vec![0, 0, 0, -1],
        vec![0, 0, 1, 0],
    ]);
    let j = IMat::from_i64_rows(&[
        vec![0, 0, -1, 0],
        vec![0, 0, 0, 1],
        vec![1, 0, 0, 0],
        vec![0, -1, 0, 0],
    ]);
    let mat_group = FiniteGroup::from_matrices(4, &[i, j], 16)?;
    regular_permutation_form(&mat_group)
}

/// Regular permutation realization of an already-closed group.
fn regular_permutation_form(g: &FiniteGroup) -> Result<Arc<FiniteGroup>> {
    let n = g.order();
    let gens: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .map(|&gen| (0..n).map(|x| g.mul(gen, x)).collect())
        .collect();
    FiniteGroup::from_permutations(n, &gens, DEFAULT_ORDER_LIMIT)
}

pub fn symmetric(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 || n > 5 {
        return Err(Error::InvalidInput("symmetric(n) supports 1 <= n <= 5".into()));
    }
    if n == 1 {
        return Ok(FiniteGroup::trivial());
    }
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(n, &[transposition, cycle], DEFAULT_ORDER_LIMIT)
}

pub fn alternating(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 || n > 5 {
        return Err(Error::InvalidInput(
            "alternating(n) supports 1 <= n <= 5".into(),
        ));
    }
    if n <= 2 {
        return Ok(FiniteGroup::trivial());
    }
    let mut three_cycle: Vec<usize> = (0..n).collect();
    three_cycle[0] = 1;
    three_cycle[1] = 2;
    three_cycle[2] = 0;
    if n == 3 {
        return FiniteGroup::from_permutations(n, &[three_cycle], DEFAULT_ORDER_LIMIT);
    }
    let second: Vec<usize> = if n % 2 == 1 {
        (0..n).map(|i| (i + 1) % n).collect()
    } else {
        // fix 0, cycle the rest
        (0..n).map(|i| if i == 0 { 0 } else { i % (n - 1) + 1 }).collect()
    };
    FiniteGroup::from_permutations(n, &[three_cycle, second], DEFAULT_ORDER_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(elementary_abelian(3, 3).unwrap().order(), 27);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dihedral(2).unwrap().order(), 4);
        assert_eq!(quaternion8().unwrap().order(), 8);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q = quaternion8().unwrap();
        let count = (0..q.order())
            .filter(|&x| x != q.identity() && q.element_order(x) == 2)
            .count();
        assert_eq!(count, 1);
    }

    #[test]
    fn p_group_vasquez_subgroups_have_order_p() {
        for (p, k) in [(2, 3), (3, 2)] {
            let g = elementary_abelian(p, k).unwrap();
            assert!(g.vasquez_set().iter().all(|&(_, q)| q == p as u64));
        }
    }
}
