//! Generated test algebras.
//!
//! Raw random structure constants are almost never left-symmetric, so each
//! family is built by a construction that guarantees the identities it is
//! meant to exercise.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::Algebra;
use crate::catalog;
use crate::lie;
use crate::linalg::{self, Matrix, Rational, Scalar, Vector};
use crate::rng::{self, SeededRng};
use crate::Result;

/// A generated algebra and the family it came from.
#[derive(Debug, Clone)]
pub struct Instance {
    pub family: &'static str,
    pub algebra: Algebra<Rational>,
}

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

fn small_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    r(rng.random_range(-bound..=bound))
}

/// Random invertible matrix with small integer entries.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<Rational> {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| small_int(rng, 2));
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

/// Transport of structure: `x * y = P (P^{-1} x . P^{-1} y)`.
pub fn conjugate<F: Scalar>(a: &Algebra<F>, p: &Matrix<F>) -> Result<Algebra<F>> {
    let n = a.dim();
    let inv = p.inverse()?;
    let cols: Vec<Vector<F>> = (0..n).map(|i| inv.column(i)).collect();
    let mut out = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            let v = p.mul_vec(&a.product(&cols[i], &cols[j])?);
            for (k, c) in v.into_iter().enumerate() {
                out.set_constant(i, j, k, c);
            }
        }
    }
    Ok(out)
}

/// Direct sum with `b` on the coordinates after those of `a`.
pub fn direct_sum<F: Scalar>(a: &Algebra<F>, b: &Algebra<F>) -> Algebra<F> {
    let (m, n) = (a.dim(), b.dim());
    let mut out = Algebra::zero(m + n);
    for (src, off, d) in [(a, 0, m), (b, m, n)] {
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    out.set_constant(i + off, j + off, k + off, src.constant(i, j, k).clone());
                }
            }
        }
    }
    out
}

/// The completed `A3gamma` table at random small parameters.
pub fn a3gamma_family(rng: &mut SeededRng, count: usize) -> Result<Vec<Instance>> {
    (0..count)
        .map(|k| {
            // Every fourth sample sits on gamma = 0.
            let gamma = if k % 4 == 0 { r(0) } else { rng::small_scalar(rng) };
            let p = [rng::small_scalar(rng), rng::small_scalar(rng), gamma];
            Ok(Instance {
                family: "a3gamma",
                algebra: catalog::get_example("A3gamma", &p)?.algebra,
            })
        })
        .collect()
}

/// A random two-step nilpotent bracket on `gens + center` coordinates, the
/// brackets of generators landing in the last `center` coordinates.
pub fn random_two_step_bracket(rng: &mut SeededRng, gens: usize, center: usize) -> Result<Algebra<Rational>> {
    let n = gens + center;
    let mut pairs = Vec::new();
    for i in 0..gens {
        for j in i + 1..gens {
            let mut v = vec![r(0); n];
            for c in v.iter_mut().skip(gens) {
                *c = small_int(rng, 2);
            }
            pairs.push((i, j, v));
        }
    }
    lie::bracket_from(n, pairs)
}

/// `x . y = [f x, y]` with `f = id/2 + g`, `g` mapping into the center of
/// the bracket. Both inner-derivation conditions hold, so the product
/// satisfies identity (4).
pub fn inner_algebra(rng: &mut SeededRng, bracket: &Algebra<Rational>) -> Result<Algebra<Rational>> {
    let n = bracket.dim();
    let center = lie::lie_center(bracket);
    let mut f = Matrix::identity(n).scale(&Rational::from_ratio(1, 2));
    for col in 0..n {
        for b in center.basis() {
            let c = small_int(rng, 1);
            for (row, x) in b.iter().enumerate() {
                let v = f.get(row, col).clone() + c.clone() * x.clone();
                f.set(row, col, v);
            }
        }
    }
    let (a, holds) = lie::inner_from_endo(bracket, &f)?;
    if !holds {
        return Err(crate::Error::InternalConsistency(
            "inner-derivation conditions fail for f = id/2 + central map".into(),
        ));
    }
    Ok(a)
}

/// Inner-derivation algebras over random two-step nilpotent brackets.
pub fn inner_derivation_family(rng: &mut SeededRng, count: usize) -> Result<Vec<Instance>> {
    (0..count)
        .map(|_| {
            let gens = rng.random_range(2..=3);
            let center = rng.random_range(1..=3);
            let bracket = random_two_step_bracket(rng, gens, center)?;
            Ok(Instance {
                family: "inner",
                algebra: inner_algebra(rng, &bracket)?,
            })
        })
        .collect()
}

/// Heisenberg brackets of dimension 3 and 5 and the free two-step
/// nilpotent Lie algebra on three generators: nonsingular nilpotent.
pub fn nonsingular_brackets() -> Result<Vec<Algebra<Rational>>> {
    let e = |n: usize, k: usize| linalg::basis_vector::<Rational>(n, k);
    Ok(vec![
        lie::bracket_from(3, [(1, 2, e(3, 0))])?,
        lie::bracket_from(5, [(1, 2, e(5, 0)), (3, 4, e(5, 0))])?,
        lie::bracket_from(6, [(0, 1, e(6, 3)), (0, 2, e(6, 4)), (1, 2, e(6, 5))])?,
    ])
}

/// Inner-derivation algebras over the nonsingular brackets.
pub fn nonsingular_family(rng: &mut SeededRng) -> Result<Vec<Instance>> {
    nonsingular_brackets()?
        .iter()
        .map(|b| {
            Ok(Instance {
                family: "nonsingular",
                algebra: inner_algebra(rng, b)?,
            })
        })
        .collect()
}

/// Commutative associative building blocks: `Q`, `Q[x]/(x^2)`,
/// `Q[x]/(x^3)`, `Q(i)` and the one-dimensional zero algebra.
fn commutative_block(kind: usize) -> Result<Algebra<Rational>> {
    let v = |c: &[i64]| c.iter().map(|&x| r(x)).collect::<Vec<_>>();
    match kind {
        0 => Algebra::from_products(1, [(0, 0, v(&[1]))]),
        1 => Algebra::from_products(2, [(0, 0, v(&[1, 0])), (0, 1, v(&[0, 1])), (1, 0, v(&[0, 1]))]),
        2 => Algebra::from_products(
            3,
            [
                (0, 0, v(&[1, 0, 0])),
                (0, 1, v(&[0, 1, 0])),
                (1, 0, v(&[0, 1, 0])),
                (0, 2, v(&[0, 0, 1])),
                (2, 0, v(&[0, 0, 1])),
                (1, 1, v(&[0, 0, 1])),
            ],
        ),
        3 => Algebra::from_products(
            2,
            [
                (0, 0, v(&[1, 0])),
                (0, 1, v(&[0, 1])),
                (1, 0, v(&[0, 1])),
                (1, 1, v(&[-1, 0])),
            ],
        ),
        _ => Ok(Algebra::zero(1)),
    }
}

/// Direct sums of commutative associative blocks of total dimension at most
/// 4, conjugated by a random invertible matrix.
pub fn commutative_family(rng: &mut SeededRng, count: usize) -> Result<Vec<Instance>> {
    (0..count)
        .map(|_| {
            let mut a = commutative_block(rng.random_range(0..5))?;
            while a.dim() < 4 && rng.random_bool(0.6) {
                let b = commutative_block(rng.random_range(0..5))?;
                if a.dim() + b.dim() <= 4 {
                    a = direct_sum(&a, &b);
                }
            }
            let p = random_invertible(rng, a.dim());
            Ok(Instance {
                family: "commutative",
                algebra: conjugate(&a, &p)?,
            })
        })
        .collect()
}

/// Catalog fixtures transported by random basis changes.
pub fn conjugated_catalog(rng: &mut SeededRng, count: usize) -> Result<Vec<Instance>> {
    let pool: Vec<_> = catalog::catalog()?.into_iter().map(|e| e.algebra).collect();
    (0..count)
        .map(|_| {
            let a = &pool[rng.random_range(0..pool.len())];
            let p = random_invertible(rng, a.dim());
            Ok(Instance {
                family: "conjugated",
                algebra: conjugate(a, &p)?,
            })
        })
        .collect()
}

/// Direct sums of two small fixtures.
pub fn direct_sum_family(rng: &mut SeededRng, count: usize) -> Result<Vec<Instance>> {
    let pool: Vec<_> = catalog::catalog()?
        .into_iter()
        .map(|e| e.algebra)
        .filter(|a| a.dim() <= 3)
        .collect();
    Ok((0..count)
        .map(|_| {
            let a = &pool[rng.random_range(0..pool.len())];
            let b = &pool[rng.random_range(0..pool.len())];
            Instance {
                family: "direct_sum",
                algebra: direct_sum(a, b),
            }
        })
        .collect())
}

/// Random small-integer tables that fail left-symmetry.
pub fn negative_family(rng: &mut SeededRng, count: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(2..=3);
        let table = (0..n * n * n)
            .map(|_| {
                if rng.random_bool(0.3) {
                    small_int(rng, 2)
                } else {
                    r(0)
                }
            })
            .collect();
        let a = Algebra::from_constants(n, table)?;
        if !a.identity_profile()?.left_symmetric {
            out.push(Instance {
                family: "negative",
                algebra: a,
            });
        }
    }
    Ok(out)
}

/// Left-symmetric test set used by the proposition suite: at least 200
/// generated algebras across all positive families.
pub fn standard_suite(seed: u64) -> Result<Vec<Instance>> {
    let mut rng = rng::seeded(seed);
    let mut out = Vec::new();
    out.extend(a3gamma_family(&mut rng, 48)?);
    out.extend(inner_derivation_family(&mut rng, 48)?);
    out.extend(nonsingular_family(&mut rng)?);
    out.extend(commutative_family(&mut rng, 56)?);
    out.extend(conjugated_catalog(&mut rng, 32)?);
    out.extend(direct_sum_family(&mut rng, 24)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Identity;

    #[test]
    fn families_are_left_symmetric() {
        let suite = standard_suite(7).unwrap();
        assert!(suite.len() >= 200);
        for inst in &suite {
            let p = inst.algebra.identity_profile().unwrap();
            assert!(p.left_symmetric, "{}", inst.family);
            match inst.family {
                "inner" | "nonsingular" => assert!(p.id4),
                "commutative" => assert!(p.commutative && p.associative),
                _ => {}
            }
        }
    }

    #[test]
    fn conjugation_preserves_profile() {
        let mut rng = rng::seeded(3);
        for e in catalog::catalog().unwrap() {
            let p = random_invertible(&mut rng, e.algebra.dim());
            let b = conjugate(&e.algebra, &p).unwrap();
            let (pb, pa) = (
                b.identity_profile().unwrap(),
                e.algebra.identity_profile().unwrap(),
            );
            for id in Identity::ALL {
                assert_eq!(pb.holds(id), pa.holds(id), "{} {}", e.name, id.key());
            }
            assert_eq!(conjugate(&b, &p.inverse().unwrap()).unwrap(), e.algebra);
        }
    }

    #[test]
    fn nonsingular_brackets_are_nonsingular() {
        for b in nonsingular_brackets().unwrap() {
            let data = lie::lie_data_of_bracket(b);
            assert_eq!(data.nilpotent_class, Some(2));
            assert_eq!(data.nonsingular, Some(true));
        }
    }

    #[test]
    fn negatives_fail_left_symmetry() {
        let mut rng = rng::seeded(1);
        for inst in negative_family(&mut rng, 10).unwrap() {
            assert!(!inst.algebra.identity_profile().unwrap().left_symmetric);
        }
    }

    #[test]
    fn direct_sums_keep_blocks() {
        let a = catalog::get_example("A21", &[]).unwrap().algebra;
        let b = catalog::get_example("A2", &[]).unwrap().algebra;
        let s = direct_sum(&a, &b);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.basis_product(2, 3), &[r(0), r(0), r(0), r(1)]);
        assert_eq!(s.basis_product(0, 3), vec![r(0); 4].as_slice());
    }
}
