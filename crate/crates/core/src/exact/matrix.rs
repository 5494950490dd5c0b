//! Dense matrices over exact scalars. Row-major storage; `0×0` and
//! other degenerate shapes are legal everywhere.

use num_bigint::BigInt;

use super::field::ExactScalar;
use super::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IMat = Mat<BigInt>;
pub type QMat = Mat<Rational>;

impl<T: ExactScalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Mat {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: Vec<Vec<T>>) -> Self {
        let nc = cols.len();
        let nr = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|c| c.len() == nr), "ragged columns");
        Mat::from_fn(nr, nc, |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<T>> + '_ {
        (0..self.cols).map(|c| self.column(c))
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<U: ExactScalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::<T>::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let t = a.mul(&other[(k, c)]);
                    out[(r, c)] = out[(r, c)].add(&t);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    acc = acc.add(&self[(r, c)].mul(&v[c]));
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.add(&self[(i, i)]);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactScalar::is_zero)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Mat::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self[(r, c)].clone()
            } else {
                other[(r - self.rows, c)].clone()
            }
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Mat::from_fn(rows.len(), cols.len(), |r, c| {
            self[(rows.start + r, cols.start + c)].clone()
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Mat::from_fn(self.rows, idx.len(), |r, c| self[(r, idx[c])].clone())
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `col_j += f * col_i`
    pub fn add_multiple_of_column(&mut self, j: usize, i: usize, f: &T) {
        for r in 0..self.rows {
            let t = self[(r, i)].mul(f);
            self[(r, j)] = self[(r, j)].add(&t);
        }
    }

    pub fn negate_column(&mut self, j: usize) {
        for r in 0..self.rows {
            self[(r, j)] = self[(r, j)].neg();
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row_j += f * row_i`
    pub fn add_multiple_of_row(&mut self, j: usize, i: usize, f: &T) {
        for c in 0..self.cols {
            let t = self[(i, c)].mul(f);
            self[(j, c)] = self[(j, c)].add(&t);
        }
    }

    pub fn negate_row(&mut self, j: usize) {
        for c in 0..self.cols {
            self[(j, c)] = self[(j, c)].neg();
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl IMat {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> QMat {
        self.map(|x| Rational::from(x.clone()))
    }
}

impl QMat {
    /// Exact conversion back to integers; `None` if any entry is fractional.
    pub fn to_integer(&self) -> Option<IMat> {
        if self.data.iter().all(num_rational::BigRational::is_integer) {
            Some(self.map(num_rational::BigRational::to_integer))
        } else {
            None
        }
    }
}

impl<T: ExactScalar + std::fmt::Display> std::fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_identity() {
        let a = IMat::from_i64_rows(&[vec![1, 2], vec![3, 4]]);
        let id = IMat::identity(2);
        assert_eq!(a.mul(&id), a);
        let b = IMat::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, IMat::from_i64_rows(&[vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn degenerate_shapes() {
        let e = IMat::zeros(0, 0);
        assert_eq!(e.mul(&e), e);
        assert!(e.is_identity());
        let tall = IMat::zeros(3, 0);
        assert_eq!(tall.mul(&IMat::zeros(0, 2)), IMat::zeros(3, 2));
    }
}
