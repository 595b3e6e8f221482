//! Affine representation `x -> (L_x, x)` and exact exponentials.

use crate::algebra::Algebra;
use crate::linalg::{self, Matrix, Scalar, Vector};
use crate::{Error, Result};

/// An `(n+1) x (n+1)` matrix `[[L, t], [0, 0]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMatrix<F> {
    matrix: Matrix<F>,
}

impl<F: Scalar> AffineMatrix<F> {
    pub fn new(linear: &Matrix<F>, translation: &[F]) -> Result<Self> {
        let n = linear.rows();
        if !linear.is_square() {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: linear.cols(),
            });
        }
        linalg::check_len(translation, n)?;
        let matrix = Matrix::from_fn(n + 1, n + 1, |r, c| match (r < n, c < n) {
            (true, true) => linear.get(r, c).clone(),
            (true, false) => translation[r].clone(),
            _ => F::zero(),
        });
        Ok(AffineMatrix { matrix })
    }

    fn n(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn linear(&self) -> Matrix<F> {
        let n = self.n();
        Matrix::from_fn(n, n, |r, c| self.matrix.get(r, c).clone())
    }

    pub fn translation(&self) -> Vector<F> {
        let n = self.n();
        (0..n).map(|r| self.matrix.get(r, n).clone()).collect()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }
}

fn aff<F: Scalar>(a: &Algebra<F>, x: &[F]) -> Result<AffineMatrix<F>> {
    AffineMatrix::new(&a.left_mul(x)?, x)
}

/// `aff(x) = [[L_x, x], [0, 0]]`.
pub fn affine_rep<F: Scalar>(a: &Algebra<F>, x: &[F]) -> Result<AffineMatrix<F>> {
    a.require_left_symmetric()?;
    aff(a, x)
}

/// Whether `aff([e_i, e_j]) = [aff(e_i), aff(e_j)]` for all basis pairs.
/// Defined for any algebra; it holds exactly when the algebra is
/// left-symmetric.
pub fn affine_homomorphism_holds<F: Scalar>(a: &Algebra<F>) -> Result<bool> {
    let n = a.dim();
    let reps = (0..n)
        .map(|i| aff(a, &linalg::basis_vector(n, i)))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..n {
        for j in 0..n {
            let br = linalg::vec_sub(a.basis_product(i, j), a.basis_product(j, i));
            if aff(a, &br)?.matrix != reps[i].matrix.commutator(&reps[j].matrix) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `sum_k M^k / k!` for nilpotent `M`.
pub fn exp_nilpotent<F: Scalar>(m: &Matrix<F>) -> Result<Matrix<F>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    if !m.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let n = m.rows();
    let mut acc = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..n.max(1) {
        term = (&term * m).scale(&F::from_ratio(1, k as i64));
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Whether `L_x = 0` for every `x` in `[A, A]`, cross-checked against
/// identity (4) and, for nilpotent `L_x`, against `exp(aff(x))` having
/// identity linear part.
pub fn derived_acts_by_translations<F: Scalar>(a: &Algebra<F>) -> Result<bool> {
    let profile = a.require_left_symmetric()?;
    let derived = a.commutator_span();
    let mut translations = true;
    for x in derived.basis() {
        let rep = aff(a, x)?;
        let lx = rep.linear();
        if lx.is_nilpotent() {
            let e = AffineMatrix {
                matrix: exp_nilpotent(rep.matrix())?,
            };
            if (e.linear() == Matrix::identity(a.dim())) != lx.is_zero() {
                return Err(Error::InternalConsistency(
                    "exp(aff(x)) linear part disagrees with L_x = 0".into(),
                ));
            }
        }
        if !lx.is_zero() {
            translations = false;
        }
    }
    if translations != profile.id4 {
        return Err(Error::InternalConsistency(format!(
            "L vanishes on [A,A] = {translations} but identity (4) = {}",
            profile.id4
        )));
    }
    Ok(translations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    type Q = Rational;

    fn v(c: &[i64]) -> Vector<Q> {
        c.iter().map(|&x| Q::from_int(x)).collect()
    }

    fn a21() -> Algebra<Q> {
        Algebra::from_products(2, [(0, 0, v(&[1, 0])), (0, 1, v(&[0, 1]))]).unwrap()
    }

    fn exp4() -> Algebra<Q> {
        Algebra::from_products(
            4,
            [
                (1, 2, v(&[1, 0, 0, 0])),
                (2, 3, v(&[1, 0, 0, 0])),
                (3, 2, v(&[1, 0, 0, 0])),
                (3, 3, v(&[0, 1, 0, 0])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn representations() {
        let r = affine_rep(&a21(), &v(&[1, 0])).unwrap();
        assert_eq!(r.linear(), Matrix::identity(2));
        assert_eq!(r.translation(), v(&[1, 0]));
        assert!(affine_rep(&exp4(), &v(&[0, 0, 0, 0])).unwrap().matrix().is_zero());
        let r = affine_rep(&exp4(), &v(&[1, 0, 0, 0])).unwrap();
        assert!(r.linear().is_zero());
        assert_eq!(r.translation(), v(&[1, 0, 0, 0]));
    }

    #[test]
    fn exponentials() {
        assert_eq!(
            exp_nilpotent(&Matrix::<Q>::zeros(3, 3)).unwrap(),
            Matrix::identity(3)
        );
        let m = Matrix::from_rows(vec![v(&[0, 1]), v(&[0, 0])]).unwrap();
        assert_eq!(exp_nilpotent(&m).unwrap(), &Matrix::identity(2) + &m);
        assert!(matches!(
            exp_nilpotent(&Matrix::<Q>::identity(2)),
            Err(Error::NotNilpotent)
        ));

        let x = affine_rep(&exp4(), &v(&[0, 1, 0, 0])).unwrap();
        let m = x.matrix();
        let expect = &(&Matrix::identity(5) + m) + &(m * m).scale(&Q::from_ratio(1, 2));
        assert_eq!(exp_nilpotent(m).unwrap(), expect);

        let y = affine_rep(&exp4(), &v(&[0, 0, 0, 1])).unwrap();
        let m = y.matrix();
        assert!(!(m * m).is_zero());
        let neg = exp_nilpotent(&m.scale(&Q::from_int(-1))).unwrap();
        assert_eq!(&exp_nilpotent(m).unwrap() * &neg, Matrix::identity(5));
    }

    #[test]
    fn translations() {
        assert!(derived_acts_by_translations(&exp4()).unwrap());
        assert!(!derived_acts_by_translations(&a21().opposite_negative()).unwrap());
        assert!(derived_acts_by_translations(&Algebra::<Q>::zero(2)).unwrap());
        let e1 = affine_rep(&exp4(), &v(&[1, 0, 0, 0])).unwrap();
        let g = exp_nilpotent(e1.matrix()).unwrap();
        assert_eq!(g, &Matrix::identity(5) + e1.matrix());
    }

    #[test]
    fn homomorphism_fails_off_left_symmetric() {
        assert!(affine_homomorphism_holds(&exp4()).unwrap());
        let mut bad = Algebra::<Q>::zero(2);
        bad.set_constant(0, 1, 0, Q::from_int(1));
        bad.set_constant(1, 1, 0, Q::from_int(1));
        assert!(!bad.identity_profile().unwrap().left_symmetric);
        assert!(!affine_homomorphism_holds(&bad).unwrap());
    }
}
