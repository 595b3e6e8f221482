use super::{check_len, Matrix, Scalar, Vector};
use crate::{Error, Result};

/// A linear subspace of `F^n`, stored by its reduced row-echelon basis.
///
/// The basis is canonical, so structural equality is subspace equality.
/// Basis vectors are ordered by pivot column.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vector<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| super::basis_vector(ambient, i)))
            .expect("standard basis has the right length")
    }

    /// Span of the given vectors, canonicalised.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector<F>>,
    {
        let rows: Vec<Vector<F>> = vectors.into_iter().collect();
        for r in &rows {
            check_len(r, ambient)?;
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Matrix::from_rows(rows)?;
        let (red, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    /// Span of standard basis vectors `e_i` for the given (zero-based) indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::span(ambient, indices.iter().map(|&i| super::basis_vector(ambient, i)))
            .expect("coordinate vectors have the right length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot coordinates in ascending order.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduce `v` modulo the subspace; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &[F]) -> Vector<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = -out[p].clone();
            super::add_scaled(&mut out, &c, row);
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        check_len(v, self.ambient)?;
        Ok(super::is_zero_vec(&self.reduce(v)))
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vector<F>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// `{x : <b, x> = 0 for every basis vector b}` under the standard bilinear
    /// pairing.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::whole(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone()).expect("basis rows share a length");
        Self::span(self.ambient, m.null_space()).expect("null space vectors have ambient length")
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).expect("basis rows share a length")
    }
}
