//! Finite-dimensional algebras given by structure constants.

use crate::linalg::{self, Matrix, Scalar, Subspace, Vector};
use crate::{Error, Result};

/// An algebra on `F^n` with `e_i * e_j = sum_k c[i][j][k] e_k`.
///
/// Equality compares dimension and structure constants only; the optional
/// name is a label.
#[derive(Clone, Debug)]
pub struct Algebra<F> {
    dim: usize,
    table: Vec<F>,
    name: Option<String>,
}

impl<F: Scalar> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.table == other.table
    }
}

/// The six polynomial identities tracked by [`IdentityProfile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `(x,y,z) = (y,x,z)`
    LeftSymmetric,
    /// `(xy)z = (xz)y`
    Novikov,
    /// `(xy)z = (zy)x`
    Derivation,
    /// `(xy)z = (yx)z`, i.e. `[x,y]z = 0`
    Id4,
    /// `(xy)z = x(yz)`
    Associative,
    /// `xy = yx`
    Commutative,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::LeftSymmetric,
        Identity::Novikov,
        Identity::Derivation,
        Identity::Id4,
        Identity::Associative,
        Identity::Commutative,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Identity::LeftSymmetric => "left_symmetric",
            Identity::Novikov => "novikov",
            Identity::Derivation => "derivation",
            Identity::Id4 => "id4",
            Identity::Associative => "associative",
            Identity::Commutative => "commutative",
        }
    }
}

/// Which identities hold, with the lexicographically smallest falsifying basis
/// triple (zero-based) for each one that fails. For commutativity the triple
/// is `(i, j, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityProfile {
    pub left_symmetric: bool,
    pub novikov: bool,
    pub derivation: bool,
    pub id4: bool,
    pub associative: bool,
    pub commutative: bool,
    witnesses: Vec<(Identity, [usize; 3])>,
}

impl IdentityProfile {
    pub fn holds(&self, id: Identity) -> bool {
        match id {
            Identity::LeftSymmetric => self.left_symmetric,
            Identity::Novikov => self.novikov,
            Identity::Derivation => self.derivation,
            Identity::Id4 => self.id4,
            Identity::Associative => self.associative,
            Identity::Commutative => self.commutative,
        }
    }

    pub fn witness(&self, id: Identity) -> Option<[usize; 3]> {
        self.witnesses.iter().find(|(i, _)| *i == id).map(|(_, w)| *w)
    }

    /// Left-symmetric and Novikov.
    pub fn is_novikov_algebra(&self) -> bool {
        self.left_symmetric && self.novikov
    }

    /// Left-symmetric and derivation.
    pub fn is_derivation_algebra(&self) -> bool {
        self.left_symmetric && self.derivation
    }

    /// Number of `{novikov, derivation, id4}` that hold.
    pub fn triad_count(&self) -> usize {
        [self.novikov, self.derivation, self.id4]
            .iter()
            .filter(|b| **b)
            .count()
    }
}

/// Truth values of the operator reformulations of each identity, evaluated on
/// basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorForms {
    /// `[L_x, L_y] = L_[x,y]`
    pub left_bracket: bool,
    /// `[L_x, R_y] = R_{xy} - R_y R_x`
    pub left_right: bool,
    /// `[R_x, R_y] = 0`
    pub right_commute: bool,
    /// `L_{xy} = R_y L_x`
    pub left_of_product: bool,
    /// `L_{xy} = R_x R_y`
    pub derivation_form: bool,
    /// `[x,y] z = 0`
    pub bracket_annihilates: bool,
    /// `[L_x, L_y] = 0`
    pub left_commute: bool,
}

impl<F: Scalar> Algebra<F> {
    /// The zero algebra of dimension `dim`.
    pub fn zero(dim: usize) -> Self {
        Algebra {
            dim,
            table: vec![F::zero(); dim * dim * dim],
            name: None,
        }
    }

    /// From a flat tensor indexed `[(i * n + j) * n + k]`.
    pub fn from_constants(dim: usize, table: Vec<F>) -> Result<Self> {
        linalg::check_len(&table, dim * dim * dim)?;
        Ok(Algebra {
            dim,
            table,
            name: None,
        })
    }

    /// From a product list `(i, j, e_i * e_j)` with zero-based indices;
    /// unspecified products are zero.
    pub fn from_products<I>(dim: usize, products: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vector<F>)>,
    {
        let mut a = Self::zero(dim);
        for (i, j, v) in products {
            linalg::check_len(&v, dim)?;
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j) + 1,
                });
            }
            for (k, c) in v.into_iter().enumerate() {
                a.set_constant(i, j, k, c);
            }
        }
        Ok(a)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field_tag(&self) -> linalg::FieldTag {
        F::FIELD
    }

    pub fn table(&self) -> &[F] {
        &self.table
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, v: F) {
        let n = self.dim;
        self.table[(i * n + j) * n + k] = v;
    }

    /// `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F] {
        let n = self.dim;
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(|c| c.is_zero())
    }

    pub(crate) fn mul(&self, x: &[F], y: &[F]) -> Vector<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                linalg::add_scaled(&mut out, &c, self.basis_product(i, j));
            }
        }
        out
    }

    /// Bilinear product `x * y`.
    pub fn product(&self, x: &[F], y: &[F]) -> Result<Vector<F>> {
        linalg::check_len(x, self.dim)?;
        linalg::check_len(y, self.dim)?;
        Ok(self.mul(x, y))
    }

    /// `x*y - y*x`.
    pub fn commutator(&self, x: &[F], y: &[F]) -> Result<Vector<F>> {
        Ok(linalg::vec_sub(&self.product(x, y)?, &self.product(y, x)?))
    }

    /// `(x*y)*z - x*(y*z)`.
    pub fn associator(&self, x: &[F], y: &[F], z: &[F]) -> Result<Vector<F>> {
        let xy = self.product(x, y)?;
        let yz = self.product(y, z)?;
        Ok(linalg::vec_sub(&self.mul(&xy, z), &self.mul(x, &yz)))
    }

    /// Left multiplication `L_x : y -> x*y` as a matrix acting on columns.
    pub fn left_mul(&self, x: &[F]) -> Result<Matrix<F>> {
        linalg::check_len(x, self.dim)?;
        let n = self.dim;
        let cols: Vec<Vector<F>> = (0..n).map(|j| self.mul(x, &linalg::basis_vector(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Right multiplication `R_x : y -> y*x`.
    pub fn right_mul(&self, x: &[F]) -> Result<Matrix<F>> {
        linalg::check_len(x, self.dim)?;
        let n = self.dim;
        let cols: Vec<Vector<F>> = (0..n).map(|j| self.mul(&linalg::basis_vector(n, j), x)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// `(L_x, R_x)`.
    pub fn mul_operators(&self, x: &[F]) -> Result<(Matrix<F>, Matrix<F>)> {
        Ok((self.left_mul(x)?, self.right_mul(x)?))
    }

    /// `L_{e_i}`: entry `(k, j)` is `c[i][j][k]`.
    pub fn left_basis(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
    }

    /// `R_{e_i}`: entry `(k, j)` is `c[j][i][k]`.
    pub fn right_basis(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(j, i, k).clone())
    }

    /// The opposite-negative product `x o y = -(y * x)`.
    pub fn opposite_negative(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set_constant(i, j, k, -self.constant(j, i, k).clone());
                }
            }
        }
        out.name = self.name.as_ref().map(|s| format!("{s}^op-"));
        out
    }

    /// `span{u * v : u in basis(U), v in basis(V)}`.
    pub fn product_span(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        for s in [u, v] {
            if s.ambient_dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: s.ambient_dim(),
                });
            }
        }
        let mut prods = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                prods.push(self.mul(a, b));
            }
        }
        Subspace::span(self.dim, prods)
    }

    /// `span{[u, v]}` over the two bases.
    pub fn bracket_span(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        for s in [u, v] {
            if s.ambient_dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: s.ambient_dim(),
                });
            }
        }
        let mut prods = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                prods.push(linalg::vec_sub(&self.mul(a, b), &self.mul(b, a)));
            }
        }
        Subspace::span(self.dim, prods)
    }

    /// `A * A`.
    pub fn square(&self) -> Subspace<F> {
        let whole = Subspace::whole(self.dim);
        self.product_span(&whole, &whole)
            .expect("whole space has the algebra's dimension")
    }

    /// `[A, A]`.
    pub fn commutator_span(&self) -> Subspace<F> {
        let whole = Subspace::whole(self.dim);
        self.bracket_span(&whole, &whole)
            .expect("whole space has the algebra's dimension")
    }

    /// The product restricted to a subalgebra `S`, written in the canonical
    /// basis of `S`.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<Self> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        let m = s.dim();
        let mut out = Self::zero(m);
        for (a, u) in s.basis().iter().enumerate() {
            for (b, v) in s.basis().iter().enumerate() {
                let p = self.mul(u, v);
                let coords = s.coordinates(&p)?.ok_or(Error::NotSubalgebra)?;
                for (k, c) in coords.into_iter().enumerate() {
                    out.set_constant(a, b, k, c);
                }
            }
        }
        Ok(out)
    }

    /// Same structure constants over another field.
    pub fn map_field<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Algebra<G> {
        Algebra {
            dim: self.dim,
            table: self.table.iter().map(f).collect(),
            name: self.name.clone(),
        }
    }

    /// Basis products `e_i e_j` as a cached `n x n` grid of vectors.
    fn product_grid(&self) -> Vec<Vec<Vector<F>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    fn combine(&self, coeffs: &[F], grid_row: impl Fn(usize) -> Vector<F>) -> Vector<F> {
        let mut out = vec![F::zero(); self.dim];
        for (a, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                linalg::add_scaled(&mut out, c, &grid_row(a));
            }
        }
        out
    }

    /// Decide every identity by exhaustive evaluation over basis triples and
    /// cross-check against the operator reformulations.
    ///
    /// A disagreement between the two routes is reported as
    /// [`Error::InternalConsistency`].
    pub fn identity_profile(&self) -> Result<IdentityProfile> {
        let profile = self.elementwise_profile();
        let ops = self.operator_forms();
        let checks = [
            ("[L_x,L_y]=L_[x,y]", profile.left_symmetric, ops.left_bracket),
            ("[L_x,R_y]=R_xy-R_yR_x", profile.left_symmetric, ops.left_right),
            ("[R_x,R_y]=0", profile.novikov, ops.right_commute),
            ("L_xy=R_yL_x", profile.novikov, ops.left_of_product),
            ("L_xy=R_xR_y", profile.derivation, ops.derivation_form),
            ("[x,y]z=0", profile.id4, ops.bracket_annihilates),
        ];
        for (form, elementwise, operator) in checks {
            if elementwise != operator {
                return Err(Error::InternalConsistency(format!(
                    "operator form {form} = {operator} disagrees with the elementwise identity = {elementwise}"
                )));
            }
        }
        if profile.left_symmetric && profile.id4 != ops.left_commute {
            return Err(Error::InternalConsistency(format!(
                "operator form [L_x,L_y]=0 = {} disagrees with id4 = {}",
                ops.left_commute, profile.id4
            )));
        }
        Ok(profile)
    }

    /// Exhaustive basis-triple evaluation without the operator cross-check.
    pub fn elementwise_profile(&self) -> IdentityProfile {
        let n = self.dim;
        let grid = self.product_grid();
        // (e_i e_j) e_k and e_i (e_j e_k)
        let left = |i: usize, j: usize, k: usize| self.combine(&grid[i][j], |a| grid[a][k].clone());
        let right = |i: usize, j: usize, k: usize| self.combine(&grid[j][k], |a| grid[i][a].clone());
        let mut witnesses: Vec<(Identity, [usize; 3])> = Vec::new();
        let mut record = |id: Identity, w: [usize; 3]| {
            if !witnesses.iter().any(|(i, _)| *i == id) {
                witnesses.push((id, w));
            }
        };
        let mut left_cache = vec![Vec::new(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    left_cache[(i * n + j) * n + k] = left(i, j, k);
                }
            }
        }
        let l = |i: usize, j: usize, k: usize| &left_cache[(i * n + j) * n + k];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r_ijk = right(i, j, k);
                    let r_jik = right(j, i, k);
                    let assoc_ijk = linalg::vec_sub(l(i, j, k), &r_ijk);
                    let assoc_jik = linalg::vec_sub(l(j, i, k), &r_jik);
                    if assoc_ijk != assoc_jik {
                        record(Identity::LeftSymmetric, [i, j, k]);
                    }
                    if l(i, j, k) != l(i, k, j) {
                        record(Identity::Novikov, [i, j, k]);
                    }
                    if l(i, j, k) != l(k, j, i) {
                        record(Identity::Derivation, [i, j, k]);
                    }
                    if l(i, j, k) != l(j, i, k) {
                        record(Identity::Id4, [i, j, k]);
                    }
                    if !linalg::is_zero_vec(&assoc_ijk) {
                        record(Identity::Associative, [i, j, k]);
                    }
                }
                if grid[i][j] != grid[j][i] {
                    record(Identity::Commutative, [i, j, 0]);
                }
            }
        }
        let fails = |id: Identity| witnesses.iter().any(|(i, _)| *i == id);
        IdentityProfile {
            left_symmetric: !fails(Identity::LeftSymmetric),
            novikov: !fails(Identity::Novikov),
            derivation: !fails(Identity::Derivation),
            id4: !fails(Identity::Id4),
            associative: !fails(Identity::Associative),
            commutative: !fails(Identity::Commutative),
            witnesses: {
                let mut w = witnesses.clone();
                w.sort();
                w
            },
        }
    }

    /// Evaluate the operator reformulations on all basis pairs.
    pub fn operator_forms(&self) -> OperatorForms {
        let n = self.dim;
        let ls: Vec<Matrix<F>> = (0..n).map(|i| self.left_basis(i)).collect();
        let rs: Vec<Matrix<F>> = (0..n).map(|i| self.right_basis(i)).collect();
        let combo = |ops: &[Matrix<F>], v: &[F]| {
            let mut acc = Matrix::zeros(n, n);
            for (c, m) in v.iter().zip(ops) {
                if !c.is_zero() {
                    acc = &acc + &m.scale(c);
                }
            }
            acc
        };
        let mut f = OperatorForms {
            left_bracket: true,
            left_right: true,
            right_commute: true,
            left_of_product: true,
            derivation_form: true,
            bracket_annihilates: true,
            left_commute: true,
        };
        for i in 0..n {
            for j in 0..n {
                let xy = self.basis_product(i, j);
                let yx = self.basis_product(j, i);
                let br = linalg::vec_sub(xy, yx);
                let lxly = ls[i].commutator(&ls[j]);
                let l_br = combo(&ls, &br);
                let l_xy = combo(&ls, xy);
                let r_xy = combo(&rs, xy);
                if lxly != l_br {
                    f.left_bracket = false;
                }
                if ls[i].commutator(&rs[j]) != &r_xy - &(&rs[j] * &rs[i]) {
                    f.left_right = false;
                }
                if !rs[i].commutator(&rs[j]).is_zero() {
                    f.right_commute = false;
                }
                if l_xy != &rs[j] * &ls[i] {
                    f.left_of_product = false;
                }
                if l_xy != &rs[i] * &rs[j] {
                    f.derivation_form = false;
                }
                if !l_br.is_zero() {
                    f.bracket_annihilates = false;
                }
                if !lxly.is_zero() {
                    f.left_commute = false;
                }
            }
        }
        f
    }

    /// Fails with [`Error::NotLeftSymmetric`] unless the algebra is
    /// left-symmetric.
    pub fn require_left_symmetric(&self) -> Result<IdentityProfile> {
        let p = self.identity_profile()?;
        if !p.left_symmetric {
            let w = p
                .witness(Identity::LeftSymmetric)
                .expect("failed identity has a witness");
            return Err(Error::NotLeftSymmetric {
                witness: (w[0], w[1], w[2]),
            });
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{basis_vector, Rational};
    use proptest::prelude::*;

    type Q = Rational;

    fn e(n: usize, i: usize) -> Vector<Q> {
        basis_vector(n, i - 1)
    }

    fn v(c: &[i64]) -> Vector<Q> {
        c.iter().map(|&x| Q::from_int(x)).collect()
    }

    fn a21() -> Algebra<Q> {
        Algebra::from_products(2, [(0, 0, e(2, 1)), (0, 1, e(2, 2))]).unwrap()
    }

    fn a22() -> Algebra<Q> {
        Algebra::from_products(2, [(0, 0, v(&[-1, 0])), (1, 0, v(&[0, -1]))]).unwrap()
    }

    fn exp4() -> Algebra<Q> {
        Algebra::from_products(
            4,
            [(1, 2, e(4, 1)), (2, 3, e(4, 1)), (3, 2, e(4, 1)), (3, 3, e(4, 2))],
        )
        .unwrap()
    }

    #[test]
    fn exp4_products() {
        let a = exp4();
        assert_eq!(a.product(&e(4, 2), &e(4, 3)).unwrap(), e(4, 1));
        assert_eq!(a.product(&e(4, 2), &v(&[0, 0, 0, 0])).unwrap(), v(&[0, 0, 0, 0]));
        let x = linalg::vec_add(&e(4, 2), &e(4, 4));
        assert_eq!(a.product(&x, &e(4, 3)).unwrap(), v(&[2, 0, 0, 0]));
        assert!(matches!(
            a.product(&e(3, 1), &e(4, 1)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn multiplication_operators() {
        let (l1, _) = a21().mul_operators(&e(2, 1)).unwrap();
        assert_eq!(l1, Matrix::identity(2));
        let (l2, _) = a21().mul_operators(&e(2, 2)).unwrap();
        assert!(l2.is_zero());
        let (_, r1) = a22().mul_operators(&e(2, 1)).unwrap();
        assert_eq!(r1, Matrix::identity(2).scale(&Q::from_int(-1)));
        assert_eq!(a21().left_basis(0), l1);
    }

    #[test]
    fn associators() {
        let a = exp4();
        assert_eq!(a.associator(&e(4, 4), &e(4, 4), &e(4, 3)).unwrap(), e(4, 1));
        assert_eq!(
            a.associator(&e(4, 1), &e(4, 2), &v(&[0, 0, 0, 0])).unwrap(),
            v(&[0, 0, 0, 0])
        );
        assert_eq!(
            a21().associator(&e(2, 1), &e(2, 1), &e(2, 2)).unwrap(),
            v(&[0, 0])
        );
    }

    #[test]
    fn profiles_of_two_dimensional_examples() {
        let p = a21().identity_profile().unwrap();
        assert!(p.left_symmetric && p.id4 && !p.novikov && !p.derivation);
        assert!(p.associative);
        let p = a22().identity_profile().unwrap();
        assert!(p.left_symmetric && p.novikov && !p.derivation && !p.id4);
        let z = Algebra::<Q>::zero(3).identity_profile().unwrap();
        assert!(Identity::ALL.iter().all(|&i| z.holds(i)));
    }

    #[test]
    fn witnesses_are_lexicographically_smallest() {
        let p = a21().identity_profile().unwrap();
        // (e1 e2) e1 = 0 but (e1 e1) e2 = e2: first failure of Novikov at (0,0,1).
        assert_eq!(p.witness(Identity::Novikov), Some([0, 0, 1]));
        assert_eq!(p.witness(Identity::Commutative), Some([0, 1, 0]));
        assert_eq!(p.witness(Identity::Id4), None);
    }

    #[test]
    fn opposite_negative_maps_a21_to_a22() {
        assert_eq!(a21().opposite_negative(), a22());
        assert_eq!(a21().opposite_negative().opposite_negative(), a21());
        assert_eq!(Algebra::<Q>::zero(2).opposite_negative(), Algebra::zero(2));
        assert!(a21().opposite_negative().identity_profile().unwrap().novikov);
    }

    #[test]
    fn product_span_exp4() {
        let a = exp4();
        let u = Subspace::coordinate(4, &[1]);
        let w = Subspace::coordinate(4, &[2]);
        assert_eq!(a.product_span(&u, &w).unwrap(), Subspace::coordinate(4, &[0]));
    }

    fn random_algebra(n: usize) -> impl Strategy<Value = Algebra<Q>> {
        prop::collection::vec(-2i64..=2, n * n * n)
            .prop_map(move |c| Algebra::from_constants(n, c.into_iter().map(Q::from_int).collect()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn product_is_bilinear(a in random_algebra(3),
                               x in prop::collection::vec(-3i64..=3, 3),
                               x2 in prop::collection::vec(-3i64..=3, 3),
                               y in prop::collection::vec(-3i64..=3, 3)) {
            let (x, x2, y) = (v(&x), v(&x2), v(&y));
            let lhs = a.product(&linalg::vec_add(&x, &x2), &y).unwrap();
            let rhs = linalg::vec_add(&a.product(&x, &y).unwrap(), &a.product(&x2, &y).unwrap());
            prop_assert_eq!(lhs, rhs);
            let (l, r) = a.mul_operators(&x).unwrap();
            prop_assert_eq!(l.mul_vec(&y), a.product(&x, &y).unwrap());
            prop_assert_eq!(r.mul_vec(&y), a.product(&y, &x).unwrap());
        }

        #[test]
        fn operator_forms_agree_on_arbitrary_algebras(a in random_algebra(2)) {
            // identity_profile errors on any disagreement.
            prop_assert!(a.identity_profile().is_ok());
        }

        #[test]
        fn opposite_negative_is_an_involution(a in random_algebra(3)) {
            let op = a.opposite_negative();
            prop_assert_eq!(op.opposite_negative(), a.clone());
            prop_assert_eq!(
                a.identity_profile().unwrap().associative,
                op.identity_profile().unwrap().associative
            );
        }
    }
}
