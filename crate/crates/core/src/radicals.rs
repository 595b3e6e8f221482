//! Trace kernel, Koszul radical, completeness, nilpotent ideals and the
//! splitting of derivation algebras.

use rand::Rng;

use crate::algebra::Algebra;
use crate::lie::{self, kernel_of_columns};
use crate::linalg::{self, Matrix, Polynomial, Scalar, Subspace, Vector};
use crate::{Error, Result};

/// `tr(R_{e_i})` for each basis vector.
pub fn right_traces<F: Scalar>(a: &Algebra<F>) -> Vec<F> {
    let n = a.dim();
    (0..n)
        .map(|i| (0..n).fold(F::zero(), |acc, j| acc + a.constant(j, i, j).clone()))
        .collect()
}

/// `I(A) = {a : tr(R_a) = 0}`.
pub fn trace_kernel<F: Scalar>(a: &Algebra<F>) -> Subspace<F> {
    let t = right_traces(a);
    kernel_of_columns(a.dim(), |i| vec![t[i].clone()])
}

/// Largest left ideal contained in `s`: iterate `W <- {x in W : A x in W}`.
pub fn largest_left_ideal_in<F: Scalar>(a: &Algebra<F>, s: &Subspace<F>) -> Result<Subspace<F>> {
    largest_ideal(a, s, false)
}

/// Largest two-sided ideal contained in `s`.
pub fn largest_two_sided_ideal_in<F: Scalar>(a: &Algebra<F>, s: &Subspace<F>) -> Result<Subspace<F>> {
    largest_ideal(a, s, true)
}

fn largest_ideal<F: Scalar>(a: &Algebra<F>, s: &Subspace<F>, two_sided: bool) -> Result<Subspace<F>> {
    let n = a.dim();
    if s.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.ambient_dim(),
        });
    }
    let mut w = s.clone();
    loop {
        let basis = w.basis().to_vec();
        let coeffs = kernel_of_columns(basis.len(), |k| {
            let mut col = Vec::new();
            for j in 0..n {
                let e = linalg::basis_vector(n, j);
                col.extend(w.reduce(&a.mul(&e, &basis[k])));
                if two_sided {
                    col.extend(w.reduce(&a.mul(&basis[k], &e)));
                }
            }
            col
        });
        let next = Subspace::span(n, coeffs.basis().iter().map(|c| combine(c, &basis, n)))?;
        if next == w {
            return Ok(w);
        }
        w = next;
    }
}

fn combine<F: Scalar>(coeffs: &[F], basis: &[Vector<F>], n: usize) -> Vector<F> {
    let mut out = vec![F::zero(); n];
    for (c, b) in coeffs.iter().zip(basis) {
        linalg::add_scaled(&mut out, c, b);
    }
    out
}

/// Right multiplications of a left-symmetric algebra are all nilpotent iff
/// every `tr(R_{e_i})` vanishes.
pub fn is_complete<F: Scalar>(a: &Algebra<F>) -> Result<bool> {
    a.require_left_symmetric()?;
    Ok(right_traces(a).iter().all(|t| t.is_zero()))
}

/// Direct check that `R_x` is nilpotent.
pub fn right_mul_nilpotent<F: Scalar>(a: &Algebra<F>, x: &[F]) -> Result<bool> {
    Ok(a.right_mul(x)?.is_nilpotent())
}

/// `R(A)`: the largest left ideal inside `I(A)`, checked to be complete.
pub fn koszul_radical<F: Scalar>(a: &Algebra<F>) -> Result<Subspace<F>> {
    a.require_left_symmetric()?;
    let r = largest_left_ideal_in(a, &trace_kernel(a))?;
    let sub = a.restrict(&r)?;
    if !right_traces(&sub).iter().all(|t| t.is_zero()) {
        return Err(Error::InternalConsistency(
            "Koszul radical is not complete".into(),
        ));
    }
    for b in r.basis() {
        let rb = a.right_mul(b)?;
        let restricted = restrict_operator(&rb, &r)?;
        if !restricted.is_nilpotent() {
            return Err(Error::InternalConsistency(
                "a right multiplication on the Koszul radical is not nilpotent".into(),
            ));
        }
    }
    Ok(r)
}

/// Matrix of an operator leaving `s` invariant, in the canonical basis of `s`.
pub(crate) fn restrict_operator<F: Scalar>(m: &Matrix<F>, s: &Subspace<F>) -> Result<Matrix<F>> {
    let cols = s
        .basis()
        .iter()
        .map(|b| s.coordinates(&m.mul_vec(b))?.ok_or(Error::NotSubalgebra))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(s.dim(), &cols)
}

/// Nilpotency certificates for an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyReport {
    pub left_nilpotent: bool,
    pub right_nilpotent: bool,
    /// Least `m` with every `m`-fold product `L_{a_1}...L_{a_m}` zero.
    pub left_index: Option<usize>,
    /// Least `m` with every `m`-fold product `R_{a_1}...R_{a_m}` zero.
    pub right_index: Option<usize>,
}

impl NilpotencyReport {
    /// The index of whichever side is nilpotent, left first.
    pub fn index(&self) -> Option<usize> {
        self.left_index.or(self.right_index)
    }
}

fn side_check<F: Scalar>(n: usize, gens: &[Matrix<F>]) -> (bool, Option<usize>) {
    let closure = linalg::associative_closure(n, gens);
    let basis = linalg::span_matrices(n, &closure);
    if !linalg::trace_form_nilpotent(&basis) {
        return (false, None);
    }
    let index = linalg::nilpotency_index(n, gens, closure.dim() + 1);
    (true, index)
}

pub fn nilpotent_ideal_checks<F: Scalar>(a: &Algebra<F>, ideal: &Subspace<F>) -> Result<NilpotencyReport> {
    if !lie::ideal_flags(a, ideal)?.two_sided {
        return Err(Error::NotIdeal);
    }
    let n = a.dim();
    let ls = ideal
        .basis()
        .iter()
        .map(|b| a.left_mul(b))
        .collect::<Result<Vec<_>>>()?;
    let rs = ideal
        .basis()
        .iter()
        .map(|b| a.right_mul(b))
        .collect::<Result<Vec<_>>>()?;
    let (left_nilpotent, left_index) = side_check(n, &ls);
    let (right_nilpotent, right_index) = side_check(n, &rs);
    if left_nilpotent != left_index.is_some() || right_nilpotent != right_index.is_some() {
        return Err(Error::InternalConsistency(
            "trace-form nilpotency disagrees with the product chain".into(),
        ));
    }
    Ok(NilpotencyReport {
        left_nilpotent,
        right_nilpotent,
        left_index,
        right_index,
    })
}

/// `{x : R_x nilpotent}` when the right multiplications commute.
///
/// The associative algebra `U` generated by commuting `R_{e_i}` is
/// commutative, so its radical is exactly its nilpotent elements.
fn right_nil_elements<F: Scalar>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    let gens: Vec<Matrix<F>> = (0..n).map(|i| a.right_basis(i)).collect();
    let rad = linalg::trace_radical(n, &linalg::associative_closure(n, &gens));
    kernel_of_columns(n, |i| rad.reduce(gens[i].as_flat()))
}

/// The right radical `N(A)` of a Novikov algebra: the largest two-sided
/// ideal whose elements have nilpotent right multiplication.
///
/// It is verified right-nilpotent and equal to the Koszul radical `R(A)`.
/// It need not equal the trace kernel `I(A)`, which can fail to be an ideal
/// (for `e1e1 = e1, e1e2 = e2e1 = e2, e2e2 = -e1`, `I(A) = span{e2}` while
/// `N(A) = 0`).
pub fn novikov_right_radical<F: Scalar>(a: &Algebra<F>) -> Result<Subspace<F>> {
    let p = a.require_left_symmetric()?;
    if !p.novikov {
        return Err(Error::NotNovikov);
    }
    let nil = largest_two_sided_ideal_in(a, &right_nil_elements(a))?;
    if !nilpotent_ideal_checks(a, &nil)?.right_nilpotent {
        return Err(Error::InternalConsistency(
            "right radical of a Novikov algebra is not right-nilpotent".into(),
        ));
    }
    if koszul_radical(a)? != nil {
        return Err(Error::InternalConsistency(
            "right radical of a Novikov algebra differs from its Koszul radical".into(),
        ));
    }
    Ok(nil)
}

/// `A = A0 + A*` for a derivation algebra.
#[derive(Debug, Clone)]
pub struct DerivationSplit<F> {
    pub a0: Subspace<F>,
    pub a_star: Subspace<F>,
    /// Identity element of `A*` (zero when `A*` is zero).
    pub idempotent: Vector<F>,
    /// Random elements tried before every clause verified.
    pub attempts: usize,
}

pub const SPLIT_ATTEMPTS: usize = 8;

/// Split a derivation algebra along an idempotent of its center.
///
/// A generic `z` in `Z(A)` has minimal polynomial `x^a g(x)` with
/// `g(0) != 0` on `Z(A)`; the polynomial `h = s x^{a+1}` with
/// `s x^{a+1} = 1 mod g` has no constant term, and `e = h(z)` is the
/// identity of the semisimple-plus-unipotent part.
pub fn derivation_split<F: Scalar, R: Rng + ?Sized>(
    a: &Algebra<F>,
    rng: &mut R,
) -> Result<DerivationSplit<F>> {
    let p = a.require_left_symmetric()?;
    if !p.derivation {
        return Err(Error::NotDerivation);
    }
    let n = a.dim();
    let center = lie::algebra_center(a)?;
    let mut failures = Vec::new();
    for attempt in 1..=SPLIT_ATTEMPTS {
        let e = if center.is_zero() {
            vec![F::zero(); n]
        } else {
            candidate_idempotent(a, &center, rng)?
        };
        match verify_split(a, &e) {
            Ok((a0, a_star)) => {
                return Ok(DerivationSplit {
                    a0,
                    a_star,
                    idempotent: e,
                    attempts: attempt,
                })
            }
            Err(reason) => failures.push(reason),
        }
        if center.is_zero() {
            break;
        }
    }
    Err(Error::IdempotentSearch(failures.join("; ")))
}

fn candidate_idempotent<F: Scalar, R: Rng + ?Sized>(
    a: &Algebra<F>,
    center: &Subspace<F>,
    rng: &mut R,
) -> Result<Vector<F>> {
    let n = a.dim();
    let basis = center.basis();
    let p: Vector<F> = crate::rng::small_vector(rng, basis.len());
    let z = combine(&p, basis, n);
    let t = restrict_operator(&a.left_mul(&z)?, center)?;
    let mu = t.minimal_polynomial();
    let a_exp = mu.coeffs().iter().take_while(|c| c.is_zero()).count();
    let g = Polynomial::new(mu.coeffs()[a_exp..].to_vec());
    let (_, s, _) = Polynomial::monomial(a_exp + 1).ext_gcd(&g);
    let h_prime = s.mul(&Polynomial::monomial(a_exp));
    let zc = center.coordinates(&z)?.expect("z lies in the center");
    let ec = h_prime.eval_matrix(&t).mul_vec(&zc);
    Ok(combine(&ec, basis, n))
}

fn verify_split<F: Scalar>(
    a: &Algebra<F>,
    e: &[F],
) -> std::result::Result<(Subspace<F>, Subspace<F>), String> {
    let n = a.dim();
    let err = |e: Error| e.to_string();
    let le = a.left_mul(e).map_err(err)?;
    if a.mul(e, e) != e {
        return Err("candidate is not idempotent".into());
    }
    let a_star = Subspace::span(n, (0..n).map(|j| le.column(j))).map_err(err)?;
    let a0 = Subspace::span(n, le.null_space()).map_err(err)?;
    for (name, s) in [("A0", &a0), ("A*", &a_star)] {
        if !lie::ideal_flags(a, s).map_err(err)?.two_sided {
            return Err(format!("{name} is not a two-sided ideal"));
        }
    }
    if a0.dim() + a_star.dim() != n || !a0.intersect(&a_star).map_err(err)?.is_zero() {
        return Err("A0 and A* are not complementary".into());
    }
    if !right_traces(&a.restrict(&a0).map_err(err)?)
        .iter()
        .all(|t| t.is_zero())
    {
        return Err("A0 is not complete".into());
    }
    if !a.commutator_span().is_subspace_of(&a0).map_err(err)? {
        return Err("[A,A] is not contained in A0".into());
    }
    for b in a_star.basis() {
        if a.mul(e, b) != *b || a.mul(b, e) != *b {
            return Err("e is not the identity of A*".into());
        }
        for c in a_star.basis() {
            if a.mul(b, c) != a.mul(c, b) {
                return Err("A* is not commutative".into());
            }
        }
    }
    let center = lie::algebra_center(a).map_err(err)?;
    if !a_star.is_subspace_of(&center).map_err(err)? {
        return Err("A* is not contained in Z(A)".into());
    }
    let t = lie::translation_kernel(a);
    if !t.is_subspace_of(&a0).map_err(err)? {
        return Err("T(A) is not contained in A0".into());
    }
    if t.is_zero() != a0.is_zero() {
        return Err("T(A) = 0 and A0 = 0 disagree".into());
    }
    Ok((a0, a_star))
}

/// Everything the radicals module computes for one algebra.
#[derive(Debug, Clone)]
pub struct RadicalReport<F> {
    pub right_traces: Vec<F>,
    pub trace_kernel: Subspace<F>,
    pub koszul_radical: Subspace<F>,
    pub complete: bool,
    /// `[A, A]` is contained in `R(A)`.
    pub derived_in_radical: bool,
    pub novikov_radical: Option<Subspace<F>>,
    pub split: Option<DerivationSplit<F>>,
}

pub fn radical_report<F: Scalar, R: Rng + ?Sized>(a: &Algebra<F>, rng: &mut R) -> Result<RadicalReport<F>> {
    let p = a.require_left_symmetric()?;
    let koszul = koszul_radical(a)?;
    let derived_in_radical = a.commutator_span().is_subspace_of(&koszul)?;
    let novikov_radical = if p.novikov {
        Some(novikov_right_radical(a)?)
    } else {
        None
    };
    let split = if p.derivation {
        Some(derivation_split(a, rng)?)
    } else {
        None
    };
    Ok(RadicalReport {
        right_traces: right_traces(a),
        trace_kernel: trace_kernel(a),
        complete: is_complete(a)?,
        koszul_radical: koszul,
        derived_in_radical,
        novikov_radical,
        split,
    })
}
