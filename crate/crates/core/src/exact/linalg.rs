//! Gaussian elimination over an arbitrary exact field.

use super::field::ExactField;
use super::matrix::Mat;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: ExactField>(m: &mut Mat<F>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m[(r, c)].inv();
        for j in 0..cols {
            m[(r, j)] = m[(r, j)].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].neg();
                m.add_multiple_of_row(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: ExactField>(m: &Mat<F>) -> usize {
    let mut c = m.clone();
    rref(&mut c).len()
}

/// Basis of the null space, as columns.
pub fn kernel_over_field<F: ExactField>(m: &Mat<F>) -> Mat<F> {
    let cols = m.cols();
    let mut red = m.clone();
    let pivots = rref(&mut red);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Mat::zeros(cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        basis[(fc, k)] = F::one();
        for (pr, &pc) in pivots.iter().enumerate() {
            basis[(pc, k)] = red[(pr, fc)].neg();
        }
    }
    basis
}

/// Basis of the column space: the subset of original columns sitting on
/// pivots of the row-reduced transpose-free elimination.
pub fn column_space<F: ExactField>(m: &Mat<F>) -> Mat<F> {
    let mut red = m.clone();
    let pivots = rref(&mut red);
    m.select_columns(&pivots)
}

/// Solves `m · x = b` for one vector; `None` if inconsistent.
pub fn solve<F: ExactField>(m: &Mat<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(m.rows(), b.len());
    let mut aug = m.hstack(&Mat::from_columns(vec![b.to_vec()]));
    let pivots = rref(&mut aug);
    if pivots.contains(&m.cols()) {
        return None;
    }
    let mut x = vec![F::zero(); m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[(r, m.cols())].clone();
    }
    Some(x)
}

/// Solves `m · X = b` column-wise; `None` if any column is inconsistent.
pub fn solve_matrix<F: ExactField>(m: &Mat<F>, b: &Mat<F>) -> Option<Mat<F>> {
    let mut cols = Vec::with_capacity(b.cols());
    for c in 0..b.cols() {
        cols.push(solve(m, &b.column(c))?);
    }
    Some(Mat::from_columns(cols))
}

/// Basis of `span(a) ∩ span(b)`, both given by columns.
pub fn subspace_intersection<F: ExactField>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    assert_eq!(a.rows(), b.rows());
    if a.cols() == 0 || b.cols() == 0 {
        return Mat::zeros(a.rows(), 0);
    }
    let stacked = a.hstack(&b.neg());
    let ker = kernel_over_field(&stacked);
    let x_part = ker.submatrix(0..a.cols(), 0..ker.cols());
    column_space(&a.mul(&x_part))
}

/// Exact inverse of a square matrix; `None` if singular.
pub fn inverse<F: ExactField>(m: &Mat<F>) -> Option<Mat<F>> {
    assert!(m.is_square());
    let n = m.rows();
    let mut aug = m.hstack(&Mat::identity(n));
    let pivots = rref(&mut aug);
    if pivots.len() < n {
        return None;
    }
    Some(aug.submatrix(0..n, n..2 * n))
}
