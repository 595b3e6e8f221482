//! Multiplication algebras, simplicity, complexification and isomorphism
//! witnesses.

use rand::Rng;

use crate::algebra::Algebra;
use crate::lie;
use crate::linalg::{self, Gaussian, Matrix, Polynomial, Rational, Scalar, Subspace, Vector};
use crate::rng;
use crate::{Error, Result};

/// Default seed for the randomized stage.
pub const DEFAULT_SEED: u64 = 0;
/// Default number of random elements tried before giving up.
pub const DEFAULT_BUDGET: usize = 32;

/// The associative algebra generated by all `L_{e_i}` and `R_{e_i}`, as a
/// subspace of `F^{n^2}` (row-major matrices).
#[derive(Debug, Clone)]
pub struct MultiplicationAlgebra<F> {
    pub dim: usize,
    pub generators: Vec<Matrix<F>>,
    pub closure: Subspace<F>,
    /// `{m : tr(m) = 0 and tr(m u) = 0 for all u}`.
    pub radical: Subspace<F>,
}

impl<F: Scalar> MultiplicationAlgebra<F> {
    pub fn closure_matrices(&self) -> Vec<Matrix<F>> {
        linalg::span_matrices(self.dim, &self.closure)
    }

    pub fn radical_matrices(&self) -> Vec<Matrix<F>> {
        linalg::span_matrices(self.dim, &self.radical)
    }
}

pub fn multiplication_algebra<F: Scalar>(a: &Algebra<F>) -> MultiplicationAlgebra<F> {
    let n = a.dim();
    let generators: Vec<Matrix<F>> = (0..n).flat_map(|i| [a.left_basis(i), a.right_basis(i)]).collect();
    let closure = linalg::associative_closure(n, &generators);
    let radical = linalg::trace_radical(n, &closure);
    MultiplicationAlgebra {
        dim: n,
        generators,
        closure,
        radical,
    }
}

/// Why an algebra was found not simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotSimpleReason {
    /// All products vanish.
    ZeroProduct,
    /// `A^2` is a proper ideal.
    SquareProper,
    /// The multiplication algebra has a nonzero radical `J`; the witness is
    /// `J A`.
    Radical,
    /// A kernel vector of `f(m)` generates a proper ideal.
    Submodule,
    /// The transposed action has a proper submodule; the witness is its
    /// annihilator.
    DualSubmodule,
}

impl NotSimpleReason {
    pub fn describe(self) -> &'static str {
        match self {
            NotSimpleReason::ZeroProduct => "zero product",
            NotSimpleReason::SquareProper => "A^2 is a proper ideal",
            NotSimpleReason::Radical => "multiplication algebra has a nonzero radical",
            NotSimpleReason::Submodule => "Norton test found a proper ideal",
            NotSimpleReason::DualSubmodule => "Norton test found a proper dual submodule",
        }
    }
}

/// Certificate of simplicity from the Norton criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct NortonCertificate<F> {
    /// Random element of the multiplication algebra that was used.
    pub element: Matrix<F>,
    /// Irreducible factor `f` with `dim ker f(m) = deg f`.
    pub factor: Polynomial<F>,
    /// Number of random elements drawn.
    pub attempts: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SimplicityVerdict<F> {
    Simple(NortonCertificate<F>),
    NotSimple {
        reason: NotSimpleReason,
        /// A proper two-sided ideal; nonzero unless the algebra is the
        /// one-dimensional zero algebra.
        witness: Subspace<F>,
    },
    Undecided {
        budget: usize,
    },
}

impl<F: Scalar> SimplicityVerdict<F> {
    pub fn is_simple(&self) -> Option<bool> {
        match self {
            SimplicityVerdict::Simple(_) => Some(true),
            SimplicityVerdict::NotSimple { .. } => Some(false),
            SimplicityVerdict::Undecided { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Subspace<F>> {
        match self {
            SimplicityVerdict::NotSimple { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

/// Decide simplicity with a fresh generator seeded by `seed`.
pub fn is_simple<F: Scalar>(a: &Algebra<F>, seed: u64, budget: usize) -> Result<SimplicityVerdict<F>> {
    is_simple_with(a, &mut rng::seeded(seed), budget)
}

pub fn is_simple_with<F: Scalar, R: Rng + ?Sized>(
    a: &Algebra<F>,
    rng: &mut R,
    budget: usize,
) -> Result<SimplicityVerdict<F>> {
    let n = a.dim();
    if n == 0 {
        return Err(Error::EmptyAlgebra);
    }
    let verdict = decide(a, rng, budget)?;
    if let SimplicityVerdict::NotSimple { witness, reason } = &verdict {
        let proper = !witness.is_whole() && (!witness.is_zero() || n == 1);
        if !proper || !lie::ideal_flags(a, witness)?.two_sided {
            return Err(Error::InternalConsistency(format!(
                "simplicity witness ({}) is not a proper two-sided ideal",
                reason.describe()
            )));
        }
    }
    Ok(verdict)
}

fn decide<F: Scalar, R: Rng + ?Sized>(
    a: &Algebra<F>,
    rng: &mut R,
    budget: usize,
) -> Result<SimplicityVerdict<F>> {
    let n = a.dim();
    let not_simple = |reason, witness| Ok(SimplicityVerdict::NotSimple { reason, witness });
    if a.is_zero_product() {
        let witness = if n == 1 {
            Subspace::zero(1)
        } else {
            Subspace::coordinate(n, &[0])
        };
        return not_simple(NotSimpleReason::ZeroProduct, witness);
    }
    let square = a.square();
    if !square.is_whole() {
        return not_simple(NotSimpleReason::SquareProper, square);
    }
    let mult = multiplication_algebra(a);
    if !mult.radical.is_zero() {
        let images = mult
            .radical_matrices()
            .iter()
            .flat_map(|m| (0..n).map(|j| m.column(j)).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        return not_simple(NotSimpleReason::Radical, Subspace::span(n, images)?);
    }

    // Unital closure: its invariant subspaces are the two-sided ideals.
    let mut basis = mult.closure_matrices();
    basis.push(Matrix::identity(n));
    let unital = linalg::matrix_span(n, &basis);
    let basis = linalg::span_matrices(n, &unital);
    let transposes: Vec<Matrix<F>> = mult.generators.iter().map(Matrix::transpose).collect();

    for attempt in 1..=budget {
        let coeffs: Vector<F> = rng::small_vector(rng, basis.len());
        let mut m = Matrix::zeros(n, n);
        for (c, b) in coeffs.iter().zip(&basis) {
            m = &m + &b.scale(c);
        }
        let Ok(factors) = F::factor(&m.characteristic_polynomial()) else {
            continue;
        };
        for (f, _) in factors {
            let theta = f.eval_matrix(&m);
            let kernel = theta.null_space();
            let Some(v) = kernel.first() else { continue };
            let ideal = lie::ideal_closure(a, &Subspace::span(n, [v.clone()])?)?;
            if !ideal.is_whole() {
                return not_simple(NotSimpleReason::Submodule, ideal);
            }
            if kernel.len() != f.degree().unwrap_or(0) {
                continue;
            }
            let w = theta.transpose().null_space().swap_remove(0);
            let dual = invariant_closure(n, &transposes, Subspace::span(n, [w])?);
            if dual.is_whole() {
                return Ok(SimplicityVerdict::Simple(NortonCertificate {
                    element: m,
                    factor: f,
                    attempts: attempt,
                }));
            }
            return not_simple(NotSimpleReason::DualSubmodule, dual.annihilator());
        }
    }
    Ok(SimplicityVerdict::Undecided { budget })
}

/// Smallest subspace containing `s` and stable under every matrix in `ops`.
fn invariant_closure<F: Scalar>(n: usize, ops: &[Matrix<F>], s: Subspace<F>) -> Subspace<F> {
    let mut w = s;
    loop {
        let images: Vec<Vector<F>> = w
            .basis()
            .iter()
            .flat_map(|b| ops.iter().map(move |m| m.mul_vec(b)))
            .collect();
        let next = w
            .sum(&Subspace::span(n, images).expect("images have length n"))
            .expect("same ambient");
        if next == w {
            return w;
        }
        w = next;
    }
}

/// Same structure constants over the Gaussian rationals.
///
/// With `A` embedded as `(x, 0)` in `A + A`, the product
/// `(x,y)(x',y') = (xx' - yy', xy' + yx')` and the scalar action
/// `(a + bi)(x,y) = (ax - by, ay + bx)` reduce to this on the basis
/// `(e_k, 0)`.
pub fn complexify(a: &Algebra<Rational>) -> Algebra<Gaussian> {
    let mut out = a.map_field(|q| Gaussian::new(q.clone(), Rational::from_int(0)));
    if let Some(name) = a.name() {
        out = out.with_name(format!("{name}_C"));
    }
    out
}

/// Whether `P(x y) = P(x) P(y)` on all basis pairs, for invertible `P`.
pub fn iso_witness<F: Scalar>(a: &Algebra<F>, b: &Algebra<F>, p: &Matrix<F>) -> Result<bool> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.dim(),
        });
    }
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.rows().max(p.cols()),
        });
    }
    if p.determinant().is_zero() {
        return Err(Error::Singular);
    }
    let images: Vec<Vector<F>> = (0..n).map(|i| p.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            if p.mul_vec(a.basis_product(i, j)) != b.mul(&images[i], &images[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;

    fn v(c: &[i64]) -> Vector<Q> {
        c.iter().map(|&x| Q::from_int(x)).collect()
    }

    fn a2() -> Algebra<Q> {
        Algebra::from_products(
            2,
            [
                (0, 0, v(&[1, 0])),
                (0, 1, v(&[0, 1])),
                (1, 0, v(&[0, 1])),
                (1, 1, v(&[-1, 0])),
            ],
        )
        .unwrap()
    }

    fn a21() -> Algebra<Q> {
        Algebra::from_products(2, [(0, 0, v(&[1, 0])), (0, 1, v(&[0, 1]))]).unwrap()
    }

    fn g(re: i64, im: i64, d: i64) -> Gaussian {
        Gaussian::new(Q::from_ratio(re, d), Q::from_ratio(im, d))
    }

    #[test]
    fn multiplication_algebras() {
        let m = multiplication_algebra(&a2());
        assert_eq!(m.closure.dim(), 2);
        assert!(m.radical.is_zero());
        let z = multiplication_algebra(&Algebra::<Q>::zero(2));
        assert!(z.closure.is_zero());
        assert!(!multiplication_algebra(&a21()).radical.is_zero());
    }

    #[test]
    fn a2_is_simple_over_q() {
        let verdict = is_simple(&a2(), DEFAULT_SEED, DEFAULT_BUDGET).unwrap();
        assert_eq!(verdict.is_simple(), Some(true));
    }

    #[test]
    fn complexified_a2_is_not_simple() {
        let c = complexify(&a2());
        let verdict = is_simple(&c, DEFAULT_SEED, DEFAULT_BUDGET).unwrap();
        assert_eq!(verdict.is_simple(), Some(false));
        let w = verdict.witness().unwrap();
        assert_eq!(w.dim(), 1);
        let e1p = vec![g(1, 0, 2), g(0, 1, 2)];
        let e2p = vec![g(1, 0, 2), g(0, -1, 2)];
        assert!(w.contains(&e1p).unwrap() || w.contains(&e2p).unwrap());
    }

    #[test]
    fn a21_witness() {
        let verdict = is_simple(&a21(), 0, 32).unwrap();
        assert_eq!(verdict.witness(), Some(&Subspace::coordinate(2, &[1])));
    }

    #[test]
    fn small_cases() {
        let z1 = is_simple(&Algebra::<Q>::zero(1), 0, 32).unwrap();
        assert!(matches!(
            z1,
            SimplicityVerdict::NotSimple {
                reason: NotSimpleReason::ZeroProduct,
                ..
            }
        ));
        let field = Algebra::from_products(1, [(0, 0, v(&[1]))]).unwrap();
        assert_eq!(is_simple(&field, 0, 32).unwrap().is_simple(), Some(true));
        assert!(matches!(
            is_simple(&Algebra::<Q>::zero(0), 0, 32),
            Err(Error::EmptyAlgebra)
        ));
    }

    #[test]
    fn direct_sum_of_fields_is_split_by_norton() {
        let f2 = Algebra::from_products(2, [(0, 0, v(&[1, 0])), (1, 1, v(&[0, 1]))]).unwrap();
        let verdict = is_simple(&f2, 0, 32).unwrap();
        assert_eq!(verdict.is_simple(), Some(false));
    }

    #[test]
    fn complexified_a2_is_a_sum_of_fields() {
        let c = complexify(&a2());
        let mut fields = Algebra::<Gaussian>::zero(2);
        fields.set_constant(0, 0, 0, Gaussian::from_int(1));
        fields.set_constant(1, 1, 1, Gaussian::from_int(1));
        // Columns of Q are e1' and e2'; P = Q^{-1} maps A to the field basis.
        let q = Matrix::from_rows(vec![vec![g(1, 0, 2), g(1, 0, 2)], vec![g(0, 1, 2), g(0, -1, 2)]]).unwrap();
        let p = q.inverse().unwrap();
        assert!(iso_witness(&c, &fields, &p).unwrap());
        assert!(iso_witness(&c, &c, &Matrix::identity(2)).unwrap());
        assert!(matches!(
            iso_witness(&c, &fields, &Matrix::zeros(2, 2)),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn complexify_preserves_profile() {
        let a22 = a21().opposite_negative();
        let p = a22.identity_profile().unwrap();
        let pc = complexify(&a22).identity_profile().unwrap();
        assert_eq!(p, pc);
        assert!(complexify(&Algebra::zero(2)).is_zero_product());
    }
}
