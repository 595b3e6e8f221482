use super::{Matrix, Scalar, Subspace};

/// Matrices of size `n x n` viewed as vectors of length `n^2` (row-major).
pub(crate) fn flatten<F: Scalar>(m: &Matrix<F>) -> Vec<F> {
    m.as_flat().to_vec()
}

pub(crate) fn unflatten<F: Scalar>(n: usize, v: &[F]) -> Matrix<F> {
    Matrix::from_flat(n, n, v.to_vec()).expect("vector has n^2 entries")
}

/// Span of the given `n x n` matrices inside `F^{n^2}`.
pub fn matrix_span<F: Scalar>(n: usize, mats: &[Matrix<F>]) -> Subspace<F> {
    Subspace::span(n * n, mats.iter().map(flatten)).expect("matrices are n x n")
}

/// Basis matrices of a subspace of `F^{n^2}`.
pub fn span_matrices<F: Scalar>(n: usize, s: &Subspace<F>) -> Vec<Matrix<F>> {
    s.basis().iter().map(|v| unflatten(n, v)).collect()
}

/// The (non-unital) associative algebra generated by `gens`.
pub fn associative_closure<F: Scalar>(n: usize, gens: &[Matrix<F>]) -> Subspace<F> {
    let mut s = matrix_span(n, gens);
    loop {
        let basis = span_matrices(n, &s);
        let mut prods = Vec::with_capacity(basis.len() * gens.len());
        for b in &basis {
            for g in gens {
                prods.push(flatten(&(b * g)));
            }
        }
        let next = s
            .sum(&Subspace::span(n * n, prods).expect("products are n x n"))
            .expect("same ambient");
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Least `m >= 1` such that every product of `m` generators vanishes, if one
/// exists within `cap` steps.
pub fn nilpotency_index<F: Scalar>(n: usize, gens: &[Matrix<F>], cap: usize) -> Option<usize> {
    let mut p = matrix_span(n, gens);
    for m in 1..=cap {
        if p.is_zero() {
            return Some(m);
        }
        let basis = span_matrices(n, &p);
        let mut prods = Vec::new();
        for b in &basis {
            for g in gens {
                prods.push(flatten(&(b * g)));
            }
        }
        p = Subspace::span(n * n, prods).expect("products are n x n");
    }
    None
}

/// Trace-form test: a matrix algebra with basis `u_i` consists of nilpotent
/// matrices iff `tr(u_i) = 0` and `tr(u_i u_j) = 0` for all `i, j`.
pub fn trace_form_nilpotent<F: Scalar>(basis: &[Matrix<F>]) -> bool {
    basis.iter().all(|u| u.trace().is_zero())
        && basis
            .iter()
            .all(|u| basis.iter().all(|v| (u * v).trace().is_zero()))
}

/// Radical of the associative algebra `U` (a subspace of `F^{n^2}`):
/// `{u in U : tr(u) = 0 and tr(u v) = 0 for all v in U}`, valid in
/// characteristic zero.
pub fn trace_radical<F: Scalar>(n: usize, u: &Subspace<F>) -> Subspace<F> {
    let basis = span_matrices(n, u);
    let m = basis.len();
    let rows: Vec<Vec<F>> = basis
        .iter()
        .map(|b| {
            let mut row: Vec<F> = basis.iter().map(|v| (b * v).trace()).collect();
            row.push(b.trace());
            row
        })
        .collect();
    // Column k of the system holds the constraints on coefficient k.
    let system = Matrix::from_fn(m + 1, m, |r, k| rows[k][r].clone());
    let coeffs = system.null_space();
    Subspace::span(
        n * n,
        coeffs.iter().map(|c| {
            let mut out = vec![F::zero(); n * n];
            for (ck, b) in c.iter().zip(u.basis()) {
                super::add_scaled(&mut out, ck, b);
            }
            out
        }),
    )
    .expect("radical vectors have length n^2")
}
