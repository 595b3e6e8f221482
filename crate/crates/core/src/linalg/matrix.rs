use std::ops::{Add, Mul, Neg, Sub};

use super::{Polynomial, Scalar, Vector};
use crate::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Builds a square-or-not matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector<F>]) -> Result<Self> {
        for c in columns {
            super::check_len(c, rows)?;
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    /// Reshapes a flat row-major vector into a `rows x cols` matrix.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        super::check_len(&data, rows * cols)?;
        Ok(Matrix { rows, cols, data })
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

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Row-major entries; used to treat `n x n` matrices as vectors in `F^(n^2)`.
    pub fn as_flat(&self) -> &[F] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<F> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(F::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `M^dim == 0`.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows).is_zero()
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).inv();
            for k in c..m.cols {
                let v = m.get(lead, k).clone() * inv.clone();
                m.set(lead, k, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c).clone();
                for k in c..m.cols {
                    let sub = f.clone() * m.get(lead, k).clone();
                    if !sub.is_zero() {
                        let v = m.get(r, k).clone() - sub;
                        m.set(r, k, v);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of `{v : M v = 0}`: one vector per free column, with a
    /// 1 in that column.
    pub fn null_space(&self) -> Vec<Vector<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |r, c| red.get(r, c + n).clone()))
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square());
        let cp = self.characteristic_polynomial();
        let c0 = cp.coeff(0);
        if self.rows.is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }

    /// `det(x I - M)` by the Faddeev-LeVerrier recurrence (exact in
    /// characteristic zero).
    pub fn characteristic_polynomial(&self) -> Polynomial<F> {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                let v = next.get(i, i).clone() + coeffs[n - k + 1].clone();
                next.set(i, i, v);
            }
            m = next;
            let am = self * &m;
            coeffs[n - k] = -am.trace() / F::from_int(k as i64);
        }
        Polynomial::new(coeffs)
    }

    /// Monic minimal polynomial, found as the first linear dependency among
    /// `I, M, M^2, ...`.
    pub fn minimal_polynomial(&self) -> Polynomial<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut powers: Vec<Vec<F>> = vec![Self::identity(n).data];
        let mut current = Self::identity(n);
        loop {
            current = &current * self;
            let d = powers.len();
            // Solve sum_k a_k M^k = -M^d on the flattened entries.
            let system = Self::from_fn(n * n, d + 1, |r, c| {
                if c < d {
                    powers[c][r].clone()
                } else {
                    current.data[r].clone()
                }
            });
            let (red, pivots) = system.rref();
            if !pivots.contains(&d) {
                let mut coeffs = vec![F::zero(); d + 1];
                coeffs[d] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    coeffs[p] = -red.get(i, d).clone();
                }
                return Polynomial::new(coeffs);
            }
            powers.push(current.data.clone());
        }
    }
}

impl<'a, F: Scalar> Mul<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;

    fn mul(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::<F>::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let idx = r * rhs.cols + c;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<'a, F: Scalar> Add<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;

    fn add(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: super::vec_add(&self.data, &rhs.data),
        }
    }
}

impl<'a, F: Scalar> Sub<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;

    fn sub(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: super::vec_sub(&self.data, &rhs.data),
        }
    }
}

impl<F: Scalar> Neg for &Matrix<F> {
    type Output = Matrix<F>;

    fn neg(self) -> Matrix<F> {
        self.scale(&-F::one())
    }
}
