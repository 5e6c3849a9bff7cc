use std::ops::Index;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::{Error, Result, Scalar};

/// Dense row-major matrix over any [`Scalar`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".to_string()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds entry `(i, j)` from `f(i, j)` with 1-based indices.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j - 1, i - 1)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, t| {
                acc + self[(i - 1, t)].clone() * rhs[(t, j - 1)].clone()
            })
        }))
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix times length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// `v * self` for a row vector `v`.
    pub fn left_mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        self.transpose().mul_vec(v).map_err(|_| {
            Error::Dimension(format!(
                "length-{} row vector times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            ))
        })
    }

    /// Copy with column `j` (1-based) replaced by `v`.
    pub fn with_column(&self, j: usize, v: &[T]) -> Result<Self> {
        if j < 1 || j > self.cols || v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "cannot replace column {j} of a {}x{} matrix with a length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = self.clone();
        for (i, x) in v.iter().enumerate() {
            out.data[i * self.cols + j - 1] = x.clone();
        }
        Ok(out)
    }

    /// Contiguous `size x size` block with top-left corner at 0-based `(r, c)`.
    pub fn block(&self, r: usize, c: usize, size: usize) -> Self {
        Self::from_fn(size, size, |i, j| self[(r + i - 1, c + j - 1)].clone())
    }

    /// First entry (1-based) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.data.len())
            .find(|&t| self.data[t] != other.data[t])
            .map(|t| (t / self.cols + 1, t % self.cols + 1))
    }
}

/// 0-based indexing.
impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

/// Arrays of arrays of decimal or `p/q` strings.
impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(T::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn products() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(Matrix::identity(2).mul(&a).unwrap(), a);
        assert_eq!(a.mul_vec(&[1, 1]).unwrap(), [3, 7]);
        assert_eq!(a.left_mul_vec(&[1, 1]).unwrap(), [4, 6]);
        let wide = Matrix::new(1, 3, vec![1i64, 2, 3]).unwrap();
        assert!(matches!(a.mul(&wide.transpose().transpose()), Err(Error::Dimension(_))));
        assert!(a.mul_vec(&[1]).is_err());
        assert!(a.left_mul_vec(&[1, 2, 3]).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(Matrix::new(2, 2, vec![1i64, 2, 3]).is_err());
        assert!(Matrix::from_rows(vec![vec![1i64, 2], vec![3]]).is_err());
    }

    #[test]
    fn column_replace_and_diff() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = a.with_column(2, &[9, 9]).unwrap();
        assert_eq!(b, m(vec![vec![1, 9], vec![3, 9]]));
        assert_eq!(a.first_difference(&b), Some((1, 2)));
        assert_eq!(a.first_difference(&a), None);
        assert!(a.with_column(3, &[1, 1]).is_err());
        assert_eq!(a.block(1, 1, 1), m(vec![vec![4]]));
    }

    #[test]
    fn serializes_as_strings() {
        let a = m(vec![vec![1, -2], vec![3, 4]]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"[["1","-2"],["3","4"]]"#);
    }
}
