use std::cmp::Ordering;
use std::fmt;

use super::{Matrix, Scalar};

/// Univariate polynomial, coefficients lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![F::zero(); k + 1];
        c[k] = F::one();
        Self::new(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| F::from_int(v)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv();
        self.scale(&inv)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| c.clone() * x.clone()).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            acc = &acc + &Matrix::identity(n).scale(c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().inv();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| F::from_int(k as i64) * c.clone())
                .collect(),
        )
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g = gcd(self, other)`.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (qt, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&qt.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&qt.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &F) -> Self {
        let lin = Self::new(vec![c.clone(), F::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            acc.mul(&lin).add(&Self::constant(a.clone()))
        })
    }

    /// Yun's square-free decomposition of a nonzero polynomial: monic
    /// `(s_i, i)` with `self = lc * prod s_i^i`, each `s_i` square-free and
    /// pairwise coprime. Constant parts are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Deterministic order: degree, then coefficients lowest first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.canonical_cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl<F: Scalar> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let body = match k {
                0 => c.render(),
                1 if c.is_one() => "x".to_string(),
                1 => format!("{}*x", c.render()),
                _ if c.is_one() => format!("x^{k}"),
                _ => format!("{}*x^{k}", c.render()),
            };
            f.write_str(&body)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    type P = Polynomial<Rational>;

    #[test]
    fn division_identity() {
        let a = P::from_ints(&[1, 0, -3, 2, 5]);
        let b = P::from_ints(&[2, 1, 1]);
        let (qt, r) = a.div_rem(&b);
        assert_eq!(qt.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = P::from_ints(&[0, 0, 1]); // x^2
        let b = P::from_ints(&[1, 1]); // x + 1
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, P::one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^2 (x+2)^3 x
        let p = P::from_ints(&[-1, 1])
            .pow(2)
            .mul(&P::from_ints(&[2, 1]).pow(3))
            .mul(&P::x());
        let sq = p.squarefree_decomposition();
        let rebuilt = sq.iter().fold(P::one(), |acc, (s, i)| acc.mul(&s.pow(*i)));
        assert_eq!(rebuilt, p);
        assert_eq!(sq.iter().map(|(_, i)| *i).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn shift_and_eval() {
        let p = P::from_ints(&[1, 2, 3]);
        let c = Rational::from_int(2);
        let s = p.shift(&c);
        for x in -3..4 {
            let x = Rational::from_int(x);
            assert_eq!(s.eval(&x), p.eval(&(x.clone() + c.clone())));
        }
    }

    #[test]
    fn display() {
        assert_eq!(P::from_ints(&[-1, 0, 1]).to_string(), "x^2 + -1");
        assert_eq!(P::zero().to_string(), "0");
    }
}
