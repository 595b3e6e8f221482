//! Associated Lie algebra, centers, ideals, quotients and inner-derivation
//! products.

use crate::algebra::Algebra;
use crate::linalg::{self, Matrix, Scalar, Subspace, Vector};
use crate::{Error, Result};

/// Solution space of the homogeneous system whose `i`-th column is
/// `column(i)`, i.e. `{x : sum_i x_i column(i) = 0}`.
pub(crate) fn kernel_of_columns<F: Scalar>(n: usize, column: impl Fn(usize) -> Vector<F>) -> Subspace<F> {
    let cols: Vec<Vector<F>> = (0..n).map(column).collect();
    let height = cols.first().map_or(0, |c| c.len());
    if height == 0 {
        return Subspace::whole(n);
    }
    let m = Matrix::from_columns(height, &cols).expect("columns share a length");
    Subspace::span(n, m.null_space()).expect("null space lives in F^n")
}

/// The commutator algebra `[x, y] = xy - yx` on the same space.
pub fn commutator_algebra<F: Scalar>(a: &Algebra<F>) -> Algebra<F> {
    let n = a.dim();
    let mut out = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = a.constant(i, j, k).clone() - a.constant(j, i, k).clone();
                out.set_constant(i, j, k, c);
            }
        }
    }
    out
}

/// Antisymmetric bracket from `(i, j, [e_i, e_j])` with `i < j`, zero-based.
pub fn bracket_from<F: Scalar, I>(dim: usize, brackets: I) -> Result<Algebra<F>>
where
    I: IntoIterator<Item = (usize, usize, Vector<F>)>,
{
    let mut pairs = Vec::new();
    for (i, j, v) in brackets {
        let neg = v.iter().map(|c| -c.clone()).collect();
        pairs.push((i, j, v));
        pairs.push((j, i, neg));
    }
    Algebra::from_products(dim, pairs)
}

/// Jacobi identity on basis triples, for a product read as a bracket.
pub fn satisfies_jacobi<F: Scalar>(bracket: &Algebra<F>) -> bool {
    let n = bracket.dim();
    let e = |i| linalg::basis_vector::<F>(n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = bracket.mul(&e(i), bracket.basis_product(j, k));
                let b = bracket.mul(&e(j), bracket.basis_product(k, i));
                let c = bracket.mul(&e(k), bracket.basis_product(i, j));
                if !linalg::is_zero_vec(&linalg::vec_add(&linalg::vec_add(&a, &b), &c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Associated Lie algebra with its series.
#[derive(Debug, Clone)]
pub struct LieData<F> {
    /// Bracket as an algebra: product `[x, y]`.
    pub bracket: Algebra<F>,
    /// `D^0 = A, D^{k+1} = [D^k, D^k]`, until stable.
    pub derived_series: Vec<Subspace<F>>,
    /// `C^0 = A, C^{k+1} = [A, C^k]`, until stable.
    pub lower_central_series: Vec<Subspace<F>>,
    /// Least `k` with `D^k = 0`.
    pub solvable_class: Option<usize>,
    /// Least `k` with `C^k = 0`.
    pub nilpotent_class: Option<usize>,
    /// Whether the center equals `C^{k-1}` for a non-abelian nilpotent
    /// algebra of class `k`; absent otherwise.
    pub nonsingular: Option<bool>,
    pub center: Subspace<F>,
}

impl<F: Scalar> LieData<F> {
    /// `[A, A]`.
    pub fn derived_algebra(&self) -> &Subspace<F> {
        self.derived_series.get(1).unwrap_or(&self.derived_series[0])
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotent_class.is_some()
    }

    /// `C^k`, taking the stable term once the series has stabilised.
    pub fn lower_central(&self, k: usize) -> &Subspace<F> {
        let s = &self.lower_central_series;
        &s[k.min(s.len() - 1)]
    }

    pub fn derived(&self, k: usize) -> &Subspace<F> {
        let s = &self.derived_series;
        &s[k.min(s.len() - 1)]
    }
}

fn series<F: Scalar>(
    n: usize,
    mut next: impl FnMut(&Subspace<F>) -> Subspace<F>,
) -> (Vec<Subspace<F>>, Option<usize>) {
    let mut terms = vec![Subspace::whole(n)];
    for _ in 0..=n {
        let last = terms.last().expect("series is nonempty");
        if last.is_zero() {
            break;
        }
        let t = next(last);
        if &t == last {
            break;
        }
        terms.push(t);
    }
    let class = terms.iter().position(|t| t.is_zero());
    (terms, class)
}

/// Lie data of a left-symmetric algebra.
pub fn lie_data<F: Scalar>(a: &Algebra<F>) -> Result<LieData<F>> {
    a.require_left_symmetric()?;
    Ok(lie_data_of_bracket(commutator_algebra(a)))
}

/// Series and center of an arbitrary bracket.
pub fn lie_data_of_bracket<F: Scalar>(bracket: Algebra<F>) -> LieData<F> {
    let n = bracket.dim();
    let whole = Subspace::whole(n);
    let (derived_series, solvable_class) = series(n, |d| bracket.product_span(d, d).expect("same ambient"));
    let (lower_central_series, nilpotent_class) =
        series(n, |c| bracket.product_span(&whole, c).expect("same ambient"));
    let center = kernel_of_columns(n, |i| {
        (0..n)
            .flat_map(|j| bracket.basis_product(i, j).to_vec())
            .collect()
    });
    let nonsingular = match nilpotent_class {
        Some(k) if k >= 2 => Some(center == lower_central_series[k - 1]),
        _ => None,
    };
    LieData {
        bracket,
        derived_series,
        lower_central_series,
        solvable_class,
        nilpotent_class,
        nonsingular,
        center,
    }
}

/// `{z : [z, x] = 0 for all x}`.
pub fn lie_center<F: Scalar>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    kernel_of_columns(n, |i| {
        (0..n)
            .flat_map(|j| linalg::vec_sub(a.basis_product(i, j), a.basis_product(j, i)))
            .collect()
    })
}

/// `(e_i, e_j, e_k)` on basis vectors.
pub(crate) fn basis_associator<F: Scalar>(a: &Algebra<F>, i: usize, j: usize, k: usize) -> Vector<F> {
    let n = a.dim();
    let lhs = a.mul(a.basis_product(i, j), &linalg::basis_vector(n, k));
    let rhs = a.mul(&linalg::basis_vector(n, i), a.basis_product(j, k));
    linalg::vec_sub(&lhs, &rhs)
}

fn commutes_column<F: Scalar>(a: &Algebra<F>, i: usize) -> Vector<F> {
    (0..a.dim())
        .flat_map(|j| linalg::vec_sub(a.basis_product(i, j), a.basis_product(j, i)))
        .collect()
}

/// Center of a left-symmetric algebra: `{z in lie center : (z, x, y) = 0 for all x, y}`.
pub fn algebra_center_left_symmetric<F: Scalar>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    kernel_of_columns(n, |i| {
        let mut col = commutes_column(a, i);
        for x in 0..n {
            for y in 0..n {
                col.extend(basis_associator(a, i, x, y));
            }
        }
        col
    })
}

/// Center of a general algebra: commutes with everything and every associator
/// with `z` in any slot vanishes.
pub fn algebra_center_general<F: Scalar>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    kernel_of_columns(n, |i| {
        let mut col = commutes_column(a, i);
        for x in 0..n {
            for y in 0..n {
                col.extend(basis_associator(a, i, x, y));
                col.extend(basis_associator(a, x, i, y));
                col.extend(basis_associator(a, x, y, i));
            }
        }
        col
    })
}

/// `Z(A)`. For left-symmetric input the reduced system is solved and checked
/// against the general definition.
pub fn algebra_center<F: Scalar>(a: &Algebra<F>) -> Result<Subspace<F>> {
    let general = algebra_center_general(a);
    if a.identity_profile()?.left_symmetric {
        let reduced = algebra_center_left_symmetric(a);
        if reduced != general {
            return Err(Error::InternalConsistency(format!(
                "reduced center (dim {}) differs from the general center (dim {})",
                reduced.dim(),
                general.dim()
            )));
        }
    }
    Ok(general)
}

/// `T(A) = {x : x A = 0}`.
pub fn translation_kernel<F: Scalar>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    kernel_of_columns(n, |i| {
        (0..n).flat_map(|j| a.basis_product(i, j).to_vec()).collect()
    })
}

/// Ideal predicates of a subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealFlags {
    pub left: bool,
    pub right: bool,
    pub two_sided: bool,
    pub lie_ideal: bool,
}

pub fn ideal_flags<F: Scalar>(a: &Algebra<F>, s: &Subspace<F>) -> Result<IdealFlags> {
    let whole = Subspace::whole(a.dim());
    let left = a.product_span(&whole, s)?.is_subspace_of(s)?;
    let right = a.product_span(s, &whole)?.is_subspace_of(s)?;
    let lie_ideal = a.bracket_span(&whole, s)?.is_subspace_of(s)?;
    Ok(IdealFlags {
        left,
        right,
        two_sided: left && right,
        lie_ideal,
    })
}

/// Smallest two-sided ideal containing `s`.
pub fn ideal_closure<F: Scalar>(a: &Algebra<F>, s: &Subspace<F>) -> Result<Subspace<F>> {
    let whole = Subspace::whole(a.dim());
    let mut w = s.clone();
    loop {
        let next = w
            .sum(&a.product_span(&whole, &w)?)?
            .sum(&a.product_span(&w, &whole)?)?;
        if next == w {
            return Ok(w);
        }
        w = next;
    }
}

/// The four centers of a left-symmetric algebra with their ideal flags.
#[derive(Debug, Clone)]
pub struct CentersReport<F> {
    pub lie_center: Subspace<F>,
    pub algebra_center: Subspace<F>,
    pub translation_kernel: Subspace<F>,
    pub translational_center: Subspace<F>,
    pub lie_center_flags: IdealFlags,
    pub algebra_center_flags: IdealFlags,
    pub translation_kernel_flags: IdealFlags,
    pub translational_center_flags: IdealFlags,
}

pub fn centers<F: Scalar>(a: &Algebra<F>) -> Result<CentersReport<F>> {
    a.require_left_symmetric()?;
    let lie_center = lie_center(a);
    let algebra_center = algebra_center(a)?;
    let translation_kernel = translation_kernel(a);
    let translational_center = translation_kernel.intersect(&algebra_center)?;
    Ok(CentersReport {
        lie_center_flags: ideal_flags(a, &lie_center)?,
        algebra_center_flags: ideal_flags(a, &algebra_center)?,
        translation_kernel_flags: ideal_flags(a, &translation_kernel)?,
        translational_center_flags: ideal_flags(a, &translational_center)?,
        lie_center,
        algebra_center,
        translation_kernel,
        translational_center,
    })
}

/// `A / I` on the coordinates complementary to the pivots of `I`.
#[derive(Debug, Clone)]
pub struct Quotient<F> {
    pub algebra: Algebra<F>,
    pub ideal: Subspace<F>,
    /// Ambient coordinates whose images form the quotient basis, ascending.
    pub complement: Vec<usize>,
}

impl<F: Scalar> Quotient<F> {
    /// Image of `v` in quotient coordinates.
    pub fn project(&self, v: &[F]) -> Result<Vector<F>> {
        linalg::check_len(v, self.ideal.ambient_dim())?;
        let r = self.ideal.reduce(v);
        Ok(self.complement.iter().map(|&c| r[c].clone()).collect())
    }

    /// Representative of a quotient vector supported on the complement.
    pub fn lift(&self, v: &[F]) -> Result<Vector<F>> {
        linalg::check_len(v, self.complement.len())?;
        let mut out = vec![F::zero(); self.ideal.ambient_dim()];
        for (c, x) in self.complement.iter().zip(v) {
            out[*c] = x.clone();
        }
        Ok(out)
    }
}

pub fn quotient<F: Scalar>(a: &Algebra<F>, ideal: &Subspace<F>) -> Result<Quotient<F>> {
    if !ideal_flags(a, ideal)?.two_sided {
        return Err(Error::NotIdeal);
    }
    let complement = ideal.complement_indices();
    let m = complement.len();
    let mut q = Algebra::zero(m);
    for (x, &ci) in complement.iter().enumerate() {
        for (y, &cj) in complement.iter().enumerate() {
            let r = ideal.reduce(a.basis_product(ci, cj));
            for (k, &ck) in complement.iter().enumerate() {
                q.set_constant(x, y, k, r[ck].clone());
            }
        }
    }
    let out = Quotient {
        algebra: q,
        ideal: ideal.clone(),
        complement,
    };
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = out.project(a.basis_product(i, j))?;
            let pi = out.project(&linalg::basis_vector(n, i))?;
            let pj = out.project(&linalg::basis_vector(n, j))?;
            if lhs != out.algebra.mul(&pi, &pj) {
                return Err(Error::InternalConsistency(format!(
                    "quotient projection is not multiplicative at (e{}, e{})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(out)
}

/// The product `x * y = [f(x), y]` built from a bracket and an endomorphism
/// `f`, together with whether
/// `[x,y] = [f x, y] + [x, f y]` and `f[x,y] - [f x, f y]` central
/// both hold on basis pairs.
pub fn inner_from_endo<F: Scalar>(bracket: &Algebra<F>, f: &Matrix<F>) -> Result<(Algebra<F>, bool)> {
    let n = bracket.dim();
    if f.rows() != n || f.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.rows().max(f.cols()),
        });
    }
    let fe: Vec<Vector<F>> = (0..n).map(|i| f.column(i)).collect();
    let e = |i| linalg::basis_vector::<F>(n, i);
    let mut b = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in bracket.mul(&fe[i], &e(j)).into_iter().enumerate() {
                b.set_constant(i, j, k, c);
            }
        }
    }
    let center = lie_center(bracket);
    let mut holds = true;
    'pairs: for i in 0..n {
        for j in 0..n {
            let xy = bracket.basis_product(i, j).to_vec();
            let first = linalg::vec_add(&bracket.mul(&fe[i], &e(j)), &bracket.mul(&e(i), &fe[j]));
            let defect = linalg::vec_sub(&f.mul_vec(&xy), &bracket.mul(&fe[i], &fe[j]));
            if first != xy || !center.contains(&defect)? {
                holds = false;
                break 'pairs;
            }
        }
    }
    Ok((b, holds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    type Q = Rational;

    fn v(c: &[i64]) -> Vector<Q> {
        c.iter().map(|&x| Q::from_int(x)).collect()
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

    fn a21() -> Algebra<Q> {
        Algebra::from_products(2, [(0, 0, v(&[1, 0])), (0, 1, v(&[0, 1]))]).unwrap()
    }

    fn a22() -> Algebra<Q> {
        a21().opposite_negative()
    }

    fn a4() -> Algebra<Q> {
        Algebra::from_products(
            4,
            [
                (0, 3, v(&[0, 1, 0, 0])),
                (3, 0, v(&[0, 1, 0, 0])),
                (1, 2, v(&[1, 0, 0, 0])),
                (1, 3, v(&[0, 0, -1, 0])),
                (2, 2, v(&[0, 1, 0, 0])),
            ],
        )
        .unwrap()
    }

    fn heisenberg() -> Algebra<Q> {
        bracket_from(3, [(1, 2, v(&[1, 0, 0]))]).unwrap()
    }

    #[test]
    fn exp4_lie_data() {
        let d = lie_data(&exp4()).unwrap();
        assert_eq!(d.nilpotent_class, Some(2));
        assert_eq!(d.lower_central(1), &Subspace::coordinate(4, &[0]));
        assert_eq!(d.center, Subspace::coordinate(4, &[0, 3]));
        assert_eq!(d.nonsingular, Some(false));
        assert_eq!(d.solvable_class, Some(2));
    }

    #[test]
    fn a21_is_solvable_not_nilpotent() {
        let d = lie_data(&a21()).unwrap();
        assert_eq!(d.solvable_class, Some(2));
        assert_eq!(d.nilpotent_class, None);
        assert_eq!(d.nonsingular, None);
        assert_eq!(d.lower_central(5), &Subspace::coordinate(2, &[1]));
    }

    #[test]
    fn abelian_classes() {
        let d = lie_data(&Algebra::<Q>::zero(3)).unwrap();
        assert_eq!(d.solvable_class, Some(1));
        assert_eq!(d.nilpotent_class, Some(1));
        assert_eq!(d.nonsingular, None);
    }

    #[test]
    fn exp4_centers() {
        let c = centers(&exp4()).unwrap();
        assert_eq!(c.lie_center, Subspace::coordinate(4, &[0, 3]));
        assert_eq!(c.algebra_center, Subspace::coordinate(4, &[0]));
        assert_eq!(c.translation_kernel, Subspace::coordinate(4, &[0]));
        assert_eq!(c.translational_center, Subspace::coordinate(4, &[0]));
        assert!(c.translation_kernel_flags.two_sided);
    }

    #[test]
    fn a4_lie_center_is_not_a_one_sided_ideal() {
        let c = centers(&a4()).unwrap();
        assert_eq!(c.lie_center, Subspace::coordinate(4, &[0]));
        assert!(!c.lie_center_flags.left);
        assert!(!c.lie_center_flags.right);
        assert!(c.algebra_center.is_zero());
    }

    #[test]
    fn novikov_center_matches_lie_center() {
        assert_eq!(algebra_center(&a22()).unwrap(), lie_center(&a22()));
    }

    #[test]
    fn zero_algebra_centers() {
        let c = centers(&Algebra::<Q>::zero(3)).unwrap();
        assert!(c.translation_kernel.is_whole() && c.translational_center.is_whole());
    }

    #[test]
    fn flags_and_closure() {
        let s = Subspace::coordinate(2, &[1]);
        assert!(ideal_flags(&a21(), &s).unwrap().two_sided);
        assert_eq!(ideal_closure(&a21(), &s).unwrap(), s);
        let z = Subspace::zero(4);
        let f = ideal_flags(&exp4(), &z).unwrap();
        assert!(f.left && f.right && f.two_sided && f.lie_ideal);
        assert!(!ideal_flags(&a4(), &Subspace::coordinate(4, &[0])).unwrap().left);
    }

    #[test]
    fn quotients() {
        let q = quotient(&exp4(), &Subspace::coordinate(4, &[0])).unwrap();
        assert_eq!(q.complement, vec![1, 2, 3]);
        let expect = Algebra::from_products(3, [(2, 2, v(&[1, 0, 0]))]).unwrap();
        assert_eq!(q.algebra, expect);
        let p = q.algebra.identity_profile().unwrap();
        assert!(p.commutative && p.id4);

        let full = quotient(&a21(), &Subspace::whole(2)).unwrap();
        assert_eq!(full.algebra.dim(), 0);

        let q = quotient(&a21(), &Subspace::coordinate(2, &[1])).unwrap();
        assert_eq!(q.algebra, Algebra::from_products(1, [(0, 0, v(&[1]))]).unwrap());

        assert!(matches!(
            quotient(&a4(), &Subspace::coordinate(4, &[0])),
            Err(Error::NotIdeal)
        ));
    }

    #[test]
    fn inner_derivation_heisenberg() {
        let h = heisenberg();
        let half = Matrix::identity(3).scale(&Q::from_ratio(1, 2));
        let (b, ok) = inner_from_endo(&h, &half).unwrap();
        assert!(ok);
        assert_eq!(
            b.basis_product(1, 2),
            &[Q::from_ratio(1, 2), Q::from_int(0), Q::from_int(0)][..]
        );
        assert_eq!(b.basis_product(2, 1)[0], Q::from_ratio(-1, 2));
        let p = b.identity_profile().unwrap();
        assert!(p.left_symmetric && p.id4);
        assert_eq!(commutator_algebra(&b), h);

        let (_, ok) = inner_from_endo(&h, &Matrix::identity(3)).unwrap();
        assert!(!ok);

        let (b, ok) = inner_from_endo(&Algebra::<Q>::zero(2), &Matrix::identity(2)).unwrap();
        assert!(ok && b.is_zero_product());
    }

    #[test]
    fn jacobi() {
        assert!(satisfies_jacobi(&heisenberg()));
        assert!(satisfies_jacobi(&commutator_algebra(&exp4())));
        // [e1,e2]=e1, [e2,e3]=e2, [e1,e3]=e3 fails Jacobi.
        let bad = bracket_from(
            3,
            [
                (0, 1, v(&[1, 0, 0])),
                (1, 2, v(&[0, 1, 0])),
                (0, 2, v(&[0, 0, 1])),
            ],
        )
        .unwrap();
        assert!(!satisfies_jacobi(&bad));
    }
}
