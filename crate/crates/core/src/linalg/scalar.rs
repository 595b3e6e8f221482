use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::factor;
use super::Polynomial;
use crate::Result;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Gaussian rational `a + b i` with `a, b` rational.
pub type Gaussian = Complex<BigRational>;

/// Which exact field an algebra is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Qi")]
    GaussianRational,
}

impl FieldTag {
    pub fn symbol(self) -> &'static str {
        match self {
            FieldTag::Rational => "Q",
            FieldTag::GaussianRational => "Qi",
        }
    }
}

impl std::fmt::Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

/// An exact field of characteristic zero.
///
/// Everything in the crate is generic over this trait; the two
/// implementations are [`Rational`] and [`Gaussian`].
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> + Send + Sync + 'static {
    const FIELD: FieldTag;

    fn from_rational(q: Rational) -> Self;

    /// `Some` iff the value lies in the rational subfield.
    fn to_rational(&self) -> Option<Rational>;

    /// `Some` iff the Gaussian rational lies in this field.
    fn from_gaussian(g: &Gaussian) -> Option<Self>;

    /// Complex conjugate (identity on the rationals).
    fn conj(&self) -> Self;

    /// Text form accepted by the `.lsa` grammar.
    fn render(&self) -> String;

    /// Total order used only for deterministic output.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    /// Factor a nonzero polynomial into monic irreducibles over this field.
    fn factor(p: &Polynomial<Self>) -> Result<Vec<(Polynomial<Self>, usize)>>;

    fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// Orders rationals by absolute value, negative before positive on ties.
pub(crate) fn magnitude_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.abs()
        .cmp(&b.abs())
        .then_with(|| b.is_negative().cmp(&a.is_negative()))
}

impl Scalar for Rational {
    const FIELD: FieldTag = FieldTag::Rational;

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn from_gaussian(g: &Gaussian) -> Option<Self> {
        g.im.is_zero().then(|| g.re.clone())
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        magnitude_cmp(self, other)
    }

    fn factor(p: &Polynomial<Self>) -> Result<Vec<(Polynomial<Self>, usize)>> {
        factor::factor_rational(p)
    }
}

impl Scalar for Gaussian {
    const FIELD: FieldTag = FieldTag::GaussianRational;

    fn from_rational(q: Rational) -> Self {
        Complex::new(q, Rational::zero())
    }

    fn to_rational(&self) -> Option<Rational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn from_gaussian(g: &Gaussian) -> Option<Self> {
        Some(g.clone())
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn render(&self) -> String {
        if self.im.is_zero() {
            self.re.to_string()
        } else {
            format!("({})+({})i", self.re, self.im)
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        magnitude_cmp(&self.re, &other.re).then_with(|| magnitude_cmp(&self.im, &other.im))
    }

    fn factor(p: &Polynomial<Self>) -> Result<Vec<(Polynomial<Self>, usize)>> {
        factor::factor_gaussian(p)
    }
}

/// Parses `3`, `-1/3`, `+2/4` into a reduced rational. Decimal points and
/// anything else are rejected.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let value = match body.split_once('/') {
        Some((n, d)) => {
            if !digits(n) || !digits(d) {
                return None;
            }
            let d = BigInt::from_str(d).ok()?;
            if d.is_zero() {
                return None;
            }
            Rational::new(BigInt::from_str(n).ok()?, d)
        }
        None => {
            if !digits(body) {
                return None;
            }
            Rational::from_integer(BigInt::from_str(body).ok()?)
        }
    };
    Some(if neg { -value } else { value })
}

#[cfg(test)]
pub(crate) fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-1/3"), Some(q(-1, 3)));
        assert_eq!(parse_rational("4/6"), Some(q(2, 3)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn gaussian_render() {
        let z = Gaussian::new(q(1, 2), q(3, 1));
        assert_eq!(z.render(), "(1/2)+(3)i");
        assert_eq!(Gaussian::from_int(-2).render(), "-2");
        assert_eq!(z.clone() * z.conj(), Gaussian::from_ratio(37, 4));
    }

    #[test]
    fn gaussian_division_is_exact() {
        let a = Gaussian::new(q(1, 1), q(2, 1));
        let b = Gaussian::new(q(3, 1), q(-1, 5));
        assert_eq!((a.clone() / b.clone()) * b, a);
    }
}
