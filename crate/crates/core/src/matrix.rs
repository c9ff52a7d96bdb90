//! Dense integer matrices and the exact linear algebra the Coxeter
//! computations need: fraction-free determinant, unimodular inverse and a
//! division-free characteristic polynomial.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::poly::Poly;
use crate::scalar::{self, Overflow, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(rows.iter().all(|r| r.as_ref().len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| T::from_i64(rows[i].as_ref()[j]))
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

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j { v.is_one() } else { v.is_zero() }
                })
            })
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_one() && (0..i).all(|j| self[(i, j)].is_zero())
            })
    }

    pub fn checked_neg(&self) -> Result<Self, Overflow> {
        let data = self.data.iter().map(scalar::neg).collect::<Result<_, _>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, Overflow> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = scalar::mul(a, &rhs[(k, j)])?;
                    out[(i, j)] = scalar::add(&out[(i, j)], &t)?;
                }
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, mut e: u64) -> Result<Self, Overflow> {
        assert!(self.is_square());
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<T, Overflow> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(T::zero());
                };
                a.swap_rows(k, p);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let x = scalar::mul(&a[(i, j)], &a[(k, k)])?;
                    let y = scalar::mul(&a[(i, k)], &a[(k, j)])?;
                    a[(i, j)] = scalar::sub(&x, &y)? / prev.clone();
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign_flip { scalar::neg(&d) } else { Ok(d) }
    }

    /// Exact inverse of a matrix with determinant `±1`; `Ok(None)` for any
    /// other determinant.
    pub fn inverse_unimodular(&self) -> Result<Option<Self>, Overflow> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            // Euclidean reduction of column k below the diagonal.
            loop {
                let pivot = (k..n)
                    .filter(|&i| !a[(i, k)].is_zero())
                    .min_by(|&i, &j| a[(i, k)].abs().cmp(&a[(j, k)].abs()));
                let Some(p) = pivot else {
                    return Ok(None);
                };
                a.swap_rows(k, p);
                inv.swap_rows(k, p);
                let mut done = true;
                for i in k + 1..n {
                    if a[(i, k)].is_zero() {
                        continue;
                    }
                    let q = a[(i, k)].div_floor(&a[(k, k)]);
                    a.sub_row_multiple(i, k, &q)?;
                    inv.sub_row_multiple(i, k, &q)?;
                    if !a[(i, k)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if !a[(k, k)].abs().is_one() {
                return Ok(None);
            }
            if a[(k, k)].is_negative() {
                a.negate_row(k)?;
                inv.negate_row(k)?;
            }
        }
        for k in (0..n).rev() {
            for i in 0..k {
                let q = a[(i, k)].clone();
                if !q.is_zero() {
                    a.sub_row_multiple(i, k, &q)?;
                    inv.sub_row_multiple(i, k, &q)?;
                }
            }
        }
        Ok(Some(inv))
    }

    /// `det(xI - A)` by Berkowitz's algorithm; no divisions.
    pub fn charpoly(&self) -> Result<Poly<T>, Overflow> {
        assert!(self.is_square());
        let n = self.rows;
        // Coefficients high-to-low; p_0 = 1.
        let mut p: Vec<T> = vec![T::one()];
        for k in 0..n {
            // Leading (k+1)x(k+1) block: previous block, column c, row r, corner.
            let c: Vec<T> = (0..k).map(|i| self[(i, k)].clone()).collect();
            let r: Vec<T> = (0..k).map(|j| self[(k, j)].clone()).collect();
            let mut t = Vec::with_capacity(k + 2);
            t.push(T::one());
            t.push(scalar::neg(&self[(k, k)])?);
            let mut v = c;
            for _ in 0..k {
                let mut dot = T::zero();
                for (ri, vi) in r.iter().zip(&v) {
                    dot = scalar::add(&dot, &scalar::mul(ri, vi)?)?;
                }
                t.push(scalar::neg(&dot)?);
                let mut w = vec![T::zero(); k];
                for (i, wi) in w.iter_mut().enumerate() {
                    for (j, vj) in v.iter().enumerate() {
                        let a = &self[(i, j)];
                        if !a.is_zero() {
                            *wi = scalar::add(wi, &scalar::mul(a, vj)?)?;
                        }
                    }
                }
                v = w;
            }
            let mut next = vec![T::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for j in 0..=i.min(k) {
                    if i - j < t.len() {
                        *slot = scalar::add(slot, &scalar::mul(&t[i - j], &p[j])?)?;
                    }
                }
            }
            p = next;
        }
        p.reverse();
        Ok(Poly::new(p))
    }

    pub fn to_bigint(&self) -> Matrix<BigInt> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::to_bigint).collect(),
        }
    }

    pub fn try_convert<U: Scalar>(&self) -> Option<Matrix<U>> {
        let data = self
            .data
            .iter()
            .map(|v| U::from_bigint(&v.to_bigint()))
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// `row[i] -= q * row[k]`
    fn sub_row_multiple(&mut self, i: usize, k: usize, q: &T) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let t = scalar::mul(q, &self[(k, j)])?;
            self[(i, j)] = scalar::sub(&self[(i, j)], &t)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<(), Overflow> {
        for j in 0..self.cols {
            self[(i, j)] = scalar::neg(&self[(i, j)])?;
        }
        Ok(())
    }
}

impl<T: Scalar> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> =
                self.row(i).iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{:?}", self.to_rows())
    }
}

/// Serialized as an array of rows with the same coefficient convention as
/// [`Poly`].
impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<serde_cell::Cell> =
                self.row(i).iter().map(serde_cell::Cell::of).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

mod serde_cell {
    use super::*;

    pub(super) enum Cell {
        Small(i64),
        Large(String),
    }

    impl Cell {
        pub(super) fn of<T: Scalar>(v: &T) -> Self {
            match i64::from_bigint(&v.to_bigint()) {
                Some(x) => Cell::Small(x),
                None => Cell::Large(v.to_string()),
            }
        }
    }

    impl Serialize for Cell {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self {
                Cell::Small(x) => s.serialize_i64(*x),
                Cell::Large(x) => s.serialize_str(x),
            }
        }
    }
}
