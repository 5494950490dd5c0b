//! Hermite and Smith normal forms of integer matrices.
//!
//! The Hermite form used everywhere in this crate is the column style:
//! pivot rows strictly increase from left to right, pivots are positive,
//! entries to the left of a pivot in its row are reduced into
//! `[0, pivot)`, and zero columns are pushed to the right. This form is
//! unique, so two bases span the same lattice exactly when their forms
//! coincide.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IMat;

pub struct Hnf {
    /// The normal form, same shape as the input; `h = a · u`.
    pub h: IMat,
    /// Unimodular column transformation.
    pub u: IMat,
    /// Number of nonzero columns of `h`.
    pub rank: usize,
}

/// Column Hermite normal form.
pub fn hnf(a: &IMat) -> Hnf {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IMat::identity(cols);
    let mut next = 0; // next pivot column
    for row in 0..rows {
        if next == cols {
            break;
        }
        // Clear row `row` across the active columns down to one entry by
        // repeated division steps.
        loop {
            let mut pivot: Option<usize> = None;
            for c in next..cols {
                if !h[(row, c)].is_zero()
                    && pivot.is_none_or(|p| h[(row, c)].abs() < h[(row, p)].abs())
                {
                    pivot = Some(c);
                }
            }
            let Some(p) = pivot else {
                break;
            };
            let mut others = false;
            for c in next..cols {
                if c == p || h[(row, c)].is_zero() {
                    continue;
                }
                let q: BigInt = &h[(row, c)] / &h[(row, p)];
                let f = -q;
                h.add_multiple_of_column(c, p, &f);
                u.add_multiple_of_column(c, p, &f);
                others = others || !h[(row, c)].is_zero();
            }
            if !others {
                h.swap_columns(next, p);
                u.swap_columns(next, p);
                if h[(row, next)].is_negative() {
                    h.negate_column(next);
                    u.negate_column(next);
                }
                // reduce the earlier columns against the new pivot
                let pv = h[(row, next)].clone();
                for c in 0..next {
                    let q = h[(row, c)].div_floor(&pv);
                    if !q.is_zero() {
                        let f = -q;
                        h.add_multiple_of_column(c, next, &f);
                        u.add_multiple_of_column(c, next, &f);
                    }
                }
                next += 1;
                break;
            }
        }
    }
    Hnf { h, u, rank: next }
}

/// Integer kernel of `a`, returned as columns in Hermite form. The
/// kernel of an integer matrix is automatically saturated.
pub fn int_kernel(a: &IMat) -> IMat {
    let n = hnf(a);
    let zero_cols: Vec<usize> = (n.rank..a.cols()).collect();
    let basis = n.u.select_columns(&zero_cols);
    let again = hnf(&basis);
    again
        .h
        .submatrix(0..again.h.rows(), 0..again.rank)
}

pub struct Snf {
    /// Diagonal form `s = u · a · v` with `d_1 | d_2 | …`.
    pub s: IMat,
    pub u: IMat,
    pub v: IMat,
    /// Nonzero diagonal entries.
    pub factors: Vec<BigInt>,
}

/// Smith normal form with both transformations.
pub fn snf(a: &IMat) -> Snf {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IMat::identity(rows);
    let mut v = IMat::identity(cols);
    let mut t = 0;
    while t < rows && t < cols {
        // find the entry of least absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if !s[(r, c)].is_zero()
                    && best.is_none_or(|(br, bc)| s[(r, c)].abs() < s[(br, bc)].abs())
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else {
            break;
        };
        s.swap_rows(t, br);
        u.swap_rows(t, br);
        s.swap_columns(t, bc);
        v.swap_columns(t, bc);

        let mut dirty = false;
        for r in t + 1..rows {
            if !s[(r, t)].is_zero() {
                let q = -(&s[(r, t)] / &s[(t, t)]);
                s.add_multiple_of_row(r, t, &q);
                u.add_multiple_of_row(r, t, &q);
                dirty = dirty || !s[(r, t)].is_zero();
            }
        }
        for c in t + 1..cols {
            if !s[(t, c)].is_zero() {
                let q = -(&s[(t, c)] / &s[(t, t)]);
                s.add_multiple_of_column(c, t, &q);
                v.add_multiple_of_column(c, t, &q);
                dirty = dirty || !s[(t, c)].is_zero();
            }
        }
        if dirty {
            continue;
        }
        // divisibility fix-up: fold in any entry the pivot does not divide
        let mut fixed = true;
        'scan: for r in t + 1..rows {
            for c in t + 1..cols {
                if !(&s[(r, c)] % &s[(t, t)]).is_zero() {
                    let one = BigInt::from(1);
                    s.add_multiple_of_row(t, r, &one);
                    u.add_multiple_of_row(t, r, &one);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            if s[(t, t)].is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
    }
    let mut factors = Vec::new();
    for i in 0..rows.min(cols) {
        if s[(i, i)].is_zero() {
            break;
        }
        factors.push(s[(i, i)].clone());
    }
    Snf { s, u, v, factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::inverse;

    fn det2(m: &IMat) -> BigInt {
        assert_eq!((m.rows(), m.cols()), (2, 2));
        &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)]
    }

    #[test]
    fn hnf_of_identity() {
        let id = IMat::identity(3);
        let n = hnf(&id);
        assert_eq!(n.h, id);
        assert_eq!(n.u, IMat::identity(3));
    }

    #[test]
    fn hnf_postconditions() {
        let a = IMat::from_i64_rows(&[vec![2, 4], vec![0, 2]]);
        let n = hnf(&a);
        assert_eq!(a.mul(&n.u), n.h);
        assert_eq!(det2(&n.u).abs(), BigInt::from(1));
        // pivots positive and staircase shaped
        assert_eq!(n.h, IMat::from_i64_rows(&[vec![2, 0], vec![0, 2]]));
    }

    #[test]
    fn hnf_pushes_zero_columns_right() {
        let a = IMat::from_i64_rows(&[vec![2, 0], vec![0, 0]]);
        let n = hnf(&a);
        assert_eq!(n.rank, 1);
        assert_eq!(n.h, IMat::from_i64_rows(&[vec![2, 0], vec![0, 0]]));
    }

    #[test]
    fn snf_zero_and_diagonal() {
        let z = IMat::zeros(2, 3);
        let n = snf(&z);
        assert!(n.s.is_zero());
        assert!(n.factors.is_empty());

        let d = IMat::from_i64_rows(&[vec![3, 0], vec![0, 3]]);
        let n = snf(&d);
        assert_eq!(n.factors, vec![BigInt::from(3), BigInt::from(3)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let a = IMat::from_i64_rows(&[vec![2, 1], vec![0, 3]]);
        let n = snf(&a);
        assert_eq!(n.s, IMat::from_i64_rows(&[vec![1, 0], vec![0, 6]]));
        assert_eq!(n.u.mul(&a).mul(&n.v), n.s);
        // transforms are unimodular
        assert!(inverse(&n.u.to_rational()).unwrap().to_integer().is_some());
        assert!(inverse(&n.v.to_rational()).unwrap().to_integer().is_some());
    }

    #[test]
    fn int_kernel_is_exact() {
        let a = IMat::from_i64_rows(&[vec![1, 1, 1]]);
        let k = int_kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
        // (1,-1,0) must be an integer combination of the kernel basis
        let full = hnf(&k);
        assert_eq!(full.rank, 2);
    }
}
