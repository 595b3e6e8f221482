//! Exact linear algebra: scalars, dense matrices, canonical subspaces and
//! polynomials over the rationals and the Gaussian rationals.

mod closure;
mod factor;
mod matrix;
mod poly;
pub(crate) mod scalar;
mod subspace;

pub use closure::{
    associative_closure, matrix_span, nilpotency_index, span_matrices, trace_form_nilpotent, trace_radical,
};
pub use factor::{factor_gaussian, factor_rational, is_irreducible, DEGREE_CAP, RESIDUAL_CAP};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use scalar::{parse_rational, FieldTag, Gaussian, Rational, Scalar};
pub use subspace::Subspace;

/// Dense coordinate vector.
pub type Vector<F> = Vec<F>;

/// The `i`-th standard basis vector of length `n`.
pub fn basis_vector<F: Scalar>(n: usize, i: usize) -> Vector<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub(crate) fn check_len<F>(v: &[F], n: usize) -> crate::Result<()> {
    if v.len() != n {
        return Err(crate::Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

pub(crate) fn add_scaled<F: Scalar>(acc: &mut [F], c: &F, v: &[F]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = a.clone() + c.clone() * b.clone();
        }
    }
}

pub(crate) fn vec_sub<F: Scalar>(a: &[F], b: &[F]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub(crate) fn vec_add<F: Scalar>(a: &[F], b: &[F]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub(crate) fn is_zero_vec<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}
