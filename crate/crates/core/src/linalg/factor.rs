//! Factorization of univariate polynomials over `Q` and `Q(i)`.
//!
//! Over the rationals: square-free decomposition, rational-root extraction,
//! then Kronecker's interpolation search on whatever residual is left.
//! Over the Gaussian rationals: Trager's norm method on top of the rational
//! factorizer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Gaussian, Polynomial, Rational, Scalar};
use crate::{Error, Result};

/// Largest input degree accepted by the public factorizers.
pub const DEGREE_CAP: usize = 12;

/// Largest root-free square-free residual handed to the Kronecker search.
pub const RESIDUAL_CAP: usize = 8;

const TRIAL_LIMIT: u64 = 1_000_000;

type QPoly = Polynomial<Rational>;
type GPoly = Polynomial<Gaussian>;

fn check_input<F: Scalar>(p: &Polynomial<F>) -> Result<()> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(d) if d > DEGREE_CAP => Err(Error::DegreeCap {
            degree: d,
            cap: DEGREE_CAP,
        }),
        Some(_) => Ok(()),
    }
}

fn sort_factors<F: Scalar>(factors: &mut [(Polynomial<F>, usize)]) {
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
}

/// Factor a nonzero rational polynomial into monic irreducibles with
/// multiplicities, so that `p = lc(p) * prod f^m`.
///
/// Output is ordered by degree, then by coefficients (lowest degree first,
/// smaller magnitude first, negative before positive).
pub fn factor_rational(p: &QPoly) -> Result<Vec<(QPoly, usize)>> {
    check_input(p)?;
    let mut out = Vec::new();
    for (s, mult) in p.squarefree_decomposition() {
        for f in factor_squarefree_rational(&s)? {
            out.push((f, mult));
        }
    }
    sort_factors(&mut out);
    Ok(out)
}

/// Factor a nonzero Gaussian-rational polynomial into monic irreducibles over
/// `Q(i)`.
pub fn factor_gaussian(p: &GPoly) -> Result<Vec<(GPoly, usize)>> {
    check_input(p)?;
    let mut out = Vec::new();
    for (s, mult) in p.squarefree_decomposition() {
        for f in trager(&s)? {
            out.push((f, mult));
        }
    }
    sort_factors(&mut out);
    Ok(out)
}

/// Scale a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
fn primitive_integer(p: &QPoly) -> Vec<BigInt> {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

fn from_integer(c: &[BigInt]) -> QPoly {
    QPoly::new(c.iter().cloned().map(Rational::from_integer).collect())
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

fn factor_squarefree_rational(s: &QPoly) -> Result<Vec<QPoly>> {
    let mut out = Vec::new();
    let mut rest = s.monic();
    // Rational roots first.
    if rest.coeff(0).is_zero() && rest.degree() > Some(0) {
        out.push(QPoly::x());
        rest = rest.div_rem(&QPoly::x()).0;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let ints = primitive_integer(&rest);
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let nums = divisors(&a0)?;
        let dens = divisors(&an)?;
        let mut roots: Vec<Rational> = Vec::new();
        for n in &nums {
            for d in &dens {
                for sign in [1, -1] {
                    let r = Rational::new(n * BigInt::from(sign), d.clone());
                    if !roots.contains(&r) && rest.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        for r in roots {
            let lin = QPoly::new(vec![-r, Rational::one()]);
            rest = rest.div_rem(&lin).0;
            out.push(lin);
        }
    }
    match rest.degree() {
        None | Some(0) => {}
        Some(d) if d <= 3 => out.push(rest),
        Some(d) if d > RESIDUAL_CAP => {
            return Err(Error::DegreeCap {
                degree: d,
                cap: RESIDUAL_CAP,
            })
        }
        Some(_) => {
            for f in kronecker(&primitive_integer(&rest))? {
                out.push(from_integer(&f).monic());
            }
        }
    }
    Ok(out)
}

/// Kronecker's method for a primitive, square-free integer polynomial with
/// no rational roots. Returns primitive irreducible factors.
fn kronecker(p: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let d = p.len() - 1;
    let target = from_integer(p);
    for k in 2..=d / 2 {
        if let Some(h) = kronecker_factor_of_degree(p, k)? {
            let hq = from_integer(&h);
            let (quot, rem) = target.div_rem(&hq);
            debug_assert!(rem.is_zero());
            let mut out = kronecker(&h)?;
            out.extend(kronecker(&primitive_integer(&quot))?);
            return Ok(out);
        }
    }
    Ok(vec![p.to_vec()])
}

fn kronecker_factor_of_degree(p: &[BigInt], k: usize) -> Result<Option<Vec<BigInt>>> {
    // Evaluation points: prefer small |p(x)|, which keeps divisor lists short.
    let mut candidates: Vec<(BigInt, BigInt)> = (0..(4 * (k as i64 + 1)))
        .map(|i| {
            let x = if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 };
            let x = BigInt::from(x);
            let v = eval_int(p, &x).abs();
            (x, v)
        })
        .collect();
    candidates.sort_by(|a, b| a.1.cmp(&b.1));
    let points: Vec<(BigInt, BigInt)> = candidates.into_iter().take(k + 1).collect();
    let mut choices: Vec<Vec<BigInt>> = Vec::with_capacity(k + 1);
    for (i, (_, v)) in points.iter().enumerate() {
        let divs = divisors(v)?;
        if i == 0 {
            // Fix the sign at the first point: h and -h are the same factor.
            choices.push(divs);
        } else {
            choices.push(divs.iter().flat_map(|d| [d.clone(), -d.clone()]).collect());
        }
    }
    let lc = p[p.len() - 1].clone();
    let target = from_integer(p);
    let xs: Vec<Rational> = points
        .iter()
        .map(|(x, _)| Rational::from_integer(x.clone()))
        .collect();
    let bases = lagrange_bases(&xs);
    let mut idx = vec![0usize; k + 1];
    loop {
        let h = idx
            .iter()
            .zip(&choices)
            .zip(&bases)
            .fold(QPoly::zero(), |acc, ((&i, c), b)| {
                acc.add(&b.scale(&Rational::from_integer(c[i].clone())))
            });
        if h.degree() == Some(k) && h.coeffs().iter().all(|c| c.is_integer()) {
            let hl = h.leading().to_integer();
            if (&lc % &hl).is_zero() && target.rem(&h).is_zero() {
                return Ok(Some(primitive_integer(&h)));
            }
        }
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Lagrange basis polynomials for the nodes `xs`: `b_i(x_j) = [i == j]`.
fn lagrange_bases(xs: &[Rational]) -> Vec<QPoly> {
    xs.iter()
        .enumerate()
        .map(|(i, xi)| {
            let mut basis = QPoly::one();
            let mut denom = Rational::one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&QPoly::new(vec![-xj.clone(), Rational::one()]));
                    denom *= xi - xj;
                }
            }
            basis.scale(&denom.recip())
        })
        .collect()
}

/// Positive divisors of `n > 0`, ascending.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    assert!(n.is_positive(), "divisors of a non-positive integer");
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        let mut e = 0;
        while (&m % &bd).is_zero() {
            m /= &bd;
            e += 1;
        }
        if e > 0 {
            primes.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        let limit = BigInt::from(TRIAL_LIMIT) * BigInt::from(TRIAL_LIMIT);
        if m > limit && !is_probable_prime(&m) {
            return Err(Error::IntegerTooLarge(n.to_string()));
        }
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Miller-Rabin with the first twelve prime bases; deterministic below
/// 3.3e24, which covers every cofactor that survives trial division in
/// practice. Larger cofactors are rejected by the caller's error path.
fn is_probable_prime(n: &BigInt) -> bool {
    let bound: BigInt = "3317044064679887385961981".parse().expect("literal");
    if n >= &bound {
        return false;
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d /= &two;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn to_gaussian(p: &QPoly) -> GPoly {
    GPoly::new(p.coeffs().iter().cloned().map(Gaussian::from_rational).collect())
}

/// `p * conj(p)`, which has rational coefficients.
fn norm(p: &GPoly) -> QPoly {
    let conj = GPoly::new(p.coeffs().iter().map(Scalar::conj).collect());
    let n = p.mul(&conj);
    QPoly::new(
        n.coeffs()
            .iter()
            .map(|c| c.to_rational().expect("norm has rational coefficients"))
            .collect(),
    )
}

/// Trager's algorithm for a monic square-free polynomial over `Q(i)`.
fn trager(s: &GPoly) -> Result<Vec<GPoly>> {
    if s.degree() == Some(1) {
        return Ok(vec![s.monic()]);
    }
    for step in 0..24i64 {
        let k = if step % 2 == 0 { step / 2 } else { -(step + 1) / 2 };
        let c = Gaussian::new(Rational::zero(), Rational::from_integer(BigInt::from(k)));
        let shifted = s.shift(&c);
        let n = norm(&shifted);
        if !n.is_squarefree() {
            continue;
        }
        let mut out = Vec::new();
        for g in factor_squarefree_rational(&n)? {
            let h = shifted.gcd(&to_gaussian(&g));
            if h.degree().unwrap_or(0) > 0 {
                out.push(h.shift(&-c.clone()).monic());
            }
        }
        return Ok(out);
    }
    Err(Error::InternalConsistency(
        "no square-free norm shift found".into(),
    ))
}

/// `true` iff the polynomial has no nontrivial factorization over its field.
pub fn is_irreducible<F: Scalar>(p: &Polynomial<F>) -> Result<bool> {
    let f = F::factor(p)?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::q;
    use num_traits::ToPrimitive;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn rebuild<F: Scalar>(p: &Polynomial<F>, f: &[(Polynomial<F>, usize)]) -> Polynomial<F> {
        f.iter().fold(Polynomial::constant(p.leading()), |acc, (g, m)| {
            acc.mul(&g.pow(*m))
        })
    }

    /// Independent irreducibility oracle for degrees 2 and 3: irreducible iff
    /// no rational root, found by brute force over all candidates p/q.
    fn has_rational_root(c: &[i64]) -> bool {
        let poly = p(c);
        let a0 = c[0].abs().max(1);
        let an = c[c.len() - 1].abs();
        for num in 0..=a0 {
            for den in 1..=an {
                for sign in [1, -1] {
                    if poly.eval(&q(sign * num, den)).is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn x_squared_plus_one_is_irreducible() {
        assert!(!has_rational_root(&[1, 0, 1]));
        let f = factor_rational(&p(&[1, 0, 1])).unwrap();
        assert_eq!(f, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn visible_factorizations() {
        assert_eq!(
            factor_rational(&p(&[0, -1, 1])).unwrap(),
            vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 1)]
        );
        assert_eq!(
            factor_rational(&p(&[0, -1, 0, 1])).unwrap(),
            vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 1), (p(&[1, 1]), 1)]
        );
    }

    #[test]
    fn errors() {
        assert_eq!(factor_rational(&QPoly::zero()), Err(Error::ZeroPolynomial));
        let big = QPoly::monomial(13);
        assert_eq!(
            factor_rational(&big),
            Err(Error::DegreeCap {
                degree: 13,
                cap: DEGREE_CAP
            })
        );
    }

    #[test]
    fn kronecker_splits_quartic_without_roots() {
        // (x^2 + 1)(x^2 - 2) has no rational roots.
        let a = p(&[1, 0, 1]);
        let b = p(&[-2, 0, 1]);
        let f = factor_rational(&a.mul(&b).scale(&q(3, 1))).unwrap();
        assert_eq!(f, vec![(a, 1), (b, 1)]);
    }

    #[test]
    fn kronecker_degree_eight() {
        let a = p(&[1, 1, 0, 0, 1]); // x^4 + x + 1, irreducible
        let b = p(&[2, 0, 1, 1]); // x^3 + x^2 + 2
        let c = p(&[3, 0, 1]);
        let prod = a.mul(&b);
        let f = factor_rational(&prod).unwrap();
        assert_eq!(rebuild(&prod, &f), prod);
        assert_eq!(f.len(), 2);
        let f2 = factor_rational(&b.mul(&c).mul(&p(&[-5, 1]).pow(2))).unwrap();
        assert_eq!(f2.len(), 3);
        assert_eq!(f2[0], (p(&[-5, 1]), 2));
    }

    #[test]
    fn irreducible_sextic_stays_whole() {
        let s = p(&[-1, 0, 0, 0, 0, 1, 1]); // x^6 + x^5 - 1
        let f = factor_rational(&s).unwrap();
        assert_eq!(f, vec![(s, 1)]);
    }

    #[test]
    fn gaussian_splits_x2_plus_1() {
        let x2p1 = to_gaussian(&p(&[1, 0, 1]));
        let f = factor_gaussian(&x2p1).unwrap();
        assert_eq!(f.len(), 2);
        for (g, m) in &f {
            assert_eq!(g.degree(), Some(1));
            assert_eq!(*m, 1);
        }
        assert_eq!(rebuild(&x2p1, &f), x2p1);
    }

    #[test]
    fn gaussian_keeps_x2_minus_2() {
        let g = to_gaussian(&p(&[-2, 0, 1]));
        assert!(is_irreducible(&g).unwrap());
        let x2p4 = to_gaussian(&p(&[4, 0, 1]).mul(&p(&[-2, 0, 1])).pow(2));
        let f = factor_gaussian(&x2p4).unwrap();
        assert_eq!(rebuild(&x2p4, &f), x2p4);
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn divisor_lists() {
        let d = divisors(&BigInt::from(36)).unwrap();
        let expect: Vec<BigInt> = [1, 2, 3, 4, 6, 9, 12, 18, 36]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(d, expect);
        assert!(is_probable_prime(&BigInt::from(1_000_000_007u64)));
        assert!(!is_probable_prime(
            &(BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64))
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn factors_remultiply(c in prop::collection::vec(-6i64..=6, 2..=7)) {
                let poly = p(&c);
                prop_assume!(poly.degree().unwrap_or(0) >= 1);
                let f = factor_rational(&poly).unwrap();
                prop_assert_eq!(rebuild(&poly, &f), poly);
                for (g, _) in &f {
                    prop_assert!(g.leading().is_one());
                    if g.degree() <= Some(3) && g.degree() >= Some(2) {
                        let ints: Vec<i64> = primitive_integer(g).iter().map(|x| x.to_i64().unwrap()).collect();
                        prop_assert!(!has_rational_root(&ints));
                    }
                }
            }
        }
    }
}
