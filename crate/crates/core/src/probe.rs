//! Property paths: a small query language over the live modules.
//!
//! A path names one computed property of an algebra, for example
//! `profile.id4`, `associator(e4,e4,e3)`, `centers.algebra_center`,
//! `ideal(lie_center).left` or `quotient(koszul).profile.associative`.
//! Values come back as JSON: subspaces as their canonical basis rendered in
//! the `.lsa` syntax, vectors as single strings, matrices as rows of strings.
//!
//! Subspace arguments accept `whole`, `zero`, `derived` (`[A,A]`), `square`
//! (`A^2`), `lie_center`, `center`, `translation_kernel`,
//! `translational_center`, `trace_kernel`, `koszul`, `novikov`, `a0`,
//! `a_star`, `lower_central(k)`, `closure(S)` and `span(v, w, ...)`.

use serde_json::{json, Value};

use crate::algebra::{Algebra, Identity};
use crate::format;
use crate::linalg::{Matrix, Rational, Scalar, Subspace, Vector};
use crate::rng;
use crate::simplicity::{self, SimplicityVerdict, DEFAULT_BUDGET};
use crate::{affine, lie, radicals, Error, Result};

fn bad(path: &str, why: &str) -> Error {
    Error::Parse {
        line: 1,
        column: 1,
        message: format!("bad property path `{path}`: {why}"),
    }
}

/// Split `head(args).rest` or `head.rest`.
fn split_head(path: &str) -> Result<(&str, Option<&str>, &str)> {
    let stop = path.find(['(', '.']).unwrap_or(path.len());
    let head = &path[..stop];
    if path[stop..].starts_with('(') {
        let mut depth = 0usize;
        for (i, c) in path[stop..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        let args = &path[stop + 1..stop + i];
                        let rest = &path[stop + i + 1..];
                        let rest = rest.strip_prefix('.').unwrap_or(rest);
                        return Ok((head, Some(args), rest));
                    }
                }
                _ => {}
            }
        }
        return Err(bad(path, "unbalanced parentheses"));
    }
    Ok((head, None, path[stop..].strip_prefix('.').unwrap_or("")))
}

/// Split on commas outside parentheses.
fn split_args(args: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in args.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(args[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = args[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

fn vector_arg<F: Scalar>(a: &Algebra<F>, text: &str) -> Result<Vector<F>> {
    format::parse_vector(text, a.dim())
}

fn vector_args<F: Scalar>(
    a: &Algebra<F>,
    args: Option<&str>,
    count: usize,
    path: &str,
) -> Result<Vec<Vector<F>>> {
    let parts = split_args(args.ok_or_else(|| bad(path, "missing arguments"))?);
    if parts.len() != count {
        return Err(bad(path, &format!("expected {count} arguments")));
    }
    parts.into_iter().map(|p| vector_arg(a, p)).collect()
}

fn identity_key(path: &str, key: &str) -> Result<Identity> {
    Identity::ALL
        .into_iter()
        .find(|id| id.key() == key)
        .ok_or_else(|| bad(path, &format!("unknown identity `{key}`")))
}

pub fn subspace_value<F: Scalar>(s: &Subspace<F>) -> Value {
    json!(format::render_subspace(s))
}

pub fn matrix_value<F: Scalar>(m: &Matrix<F>) -> Value {
    json!((0..m.rows())
        .map(|r| m.row(r).iter().map(Scalar::render).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn index_arg(path: &str, args: Option<&str>) -> Result<usize> {
    args.and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| bad(path, "expected an integer argument"))
}

/// Evaluate a subspace expression.
pub fn subspace<F: Scalar>(a: &Algebra<F>, expr: &str, seed: u64) -> Result<Subspace<F>> {
    let n = a.dim();
    let (head, args, rest) = split_head(expr.trim())?;
    if !rest.is_empty() {
        return Err(bad(expr, "unexpected suffix"));
    }
    Ok(match head {
        "whole" => Subspace::whole(n),
        "zero" => Subspace::zero(n),
        "derived" => a.commutator_span(),
        "square" => a.square(),
        "lie_center" => lie::lie_center(a),
        "center" => lie::algebra_center(a)?,
        "translation_kernel" => lie::translation_kernel(a),
        "translational_center" => lie::centers(a)?.translational_center,
        "trace_kernel" => radicals::trace_kernel(a),
        "koszul" => radicals::koszul_radical(a)?,
        "novikov" => radicals::novikov_right_radical(a)?,
        "a0" => radicals::derivation_split(a, &mut rng::seeded(seed))?.a0,
        "a_star" => radicals::derivation_split(a, &mut rng::seeded(seed))?.a_star,
        "lower_central" => lie::lie_data(a)?.lower_central(index_arg(expr, args)?).clone(),
        "closure" => lie::ideal_closure(a, &subspace(a, args.unwrap_or(""), seed)?)?,
        "span" => {
            let vs = split_args(args.unwrap_or(""))
                .into_iter()
                .map(|p| vector_arg(a, p))
                .collect::<Result<Vec<_>>>()?;
            Subspace::span(n, vs)?
        }
        _ => return Err(bad(expr, "unknown subspace")),
    })
}

fn leaf(path: &str, rest: &str) -> Result<()> {
    if rest.is_empty() {
        Ok(())
    } else {
        Err(bad(path, &format!("unexpected suffix `{rest}`")))
    }
}

fn verdict_value<F: Scalar>(v: &SimplicityVerdict<F>, path: &str, rest: &str) -> Result<Value> {
    Ok(match rest {
        "" => json!(v.is_simple()),
        "witness" => v.witness().map_or(Value::Null, subspace_value),
        "witness_dim" => v.witness().map_or(Value::Null, |w| json!(w.dim())),
        "reason" => match v {
            SimplicityVerdict::NotSimple { reason, .. } => json!(reason.describe()),
            _ => Value::Null,
        },
        _ => return Err(bad(path, "unknown simplicity field")),
    })
}

/// Evaluate a property path over an algebra of either field.
pub fn probe<F: Scalar>(a: &Algebra<F>, path: &str, seed: u64) -> Result<Value> {
    let (head, args, rest) = split_head(path.trim())?;
    match head {
        "dim" => {
            leaf(path, rest)?;
            Ok(json!(a.dim()))
        }
        "lsa" => {
            leaf(path, rest)?;
            Ok(json!(format::serialize(&a.clone().with_name(""))
                .lines()
                .filter(|l| !l.starts_with('#'))
                .map(|l| format!("{l}\n"))
                .collect::<String>()))
        }
        "profile" => Ok(json!(a.identity_profile()?.holds(identity_key(path, rest)?))),
        "witness" => {
            let id = identity_key(path, rest)?;
            Ok(a.identity_profile()?
                .witness(id)
                .map_or(Value::Null, |[i, j, k]| {
                    json!(format!("e{},e{},e{}", i + 1, j + 1, k + 1))
                }))
        }
        "product" | "bracket" => {
            leaf(path, rest)?;
            let v = vector_args(a, args, 2, path)?;
            let r = if head == "product" {
                a.product(&v[0], &v[1])?
            } else {
                a.commutator(&v[0], &v[1])?
            };
            Ok(json!(format::render_vector(&r)))
        }
        "associator" => {
            leaf(path, rest)?;
            let v = vector_args(a, args, 3, path)?;
            Ok(json!(format::render_vector(&a.associator(&v[0], &v[1], &v[2])?)))
        }
        "L" | "R" => {
            leaf(path, rest)?;
            let v = vector_args(a, args, 1, path)?;
            let (l, r) = a.mul_operators(&v[0])?;
            Ok(matrix_value(if head == "L" { &l } else { &r }))
        }
        "lie" => {
            let data = lie::lie_data(a)?;
            let (field, fargs, tail) = split_head(rest)?;
            leaf(path, tail)?;
            Ok(match field {
                "center" => subspace_value(&data.center),
                "derived_algebra" => subspace_value(data.derived_algebra()),
                "lower_central" => subspace_value(data.lower_central(index_arg(path, fargs)?)),
                "derived" => subspace_value(data.derived(index_arg(path, fargs)?)),
                "nilpotent_class" => json!(data.nilpotent_class),
                "solvable_class" => json!(data.solvable_class),
                "nonsingular" => json!(data.nonsingular),
                "jacobi" => json!(lie::satisfies_jacobi(&data.bracket)),
                _ => return Err(bad(path, "unknown lie field")),
            })
        }
        "centers" => {
            let c = lie::centers(a)?;
            let (name, flag) = rest.split_once('.').unwrap_or((rest, ""));
            let (space, flags) = match name {
                "lie_center" => (&c.lie_center, c.lie_center_flags),
                "algebra_center" => (&c.algebra_center, c.algebra_center_flags),
                "translation_kernel" => (&c.translation_kernel, c.translation_kernel_flags),
                "translational_center" => (&c.translational_center, c.translational_center_flags),
                _ => return Err(bad(path, "unknown center")),
            };
            Ok(match flag {
                "" => subspace_value(space),
                "left" => json!(flags.left),
                "right" => json!(flags.right),
                "two_sided" => json!(flags.two_sided),
                _ => return Err(bad(path, "unknown ideal flag")),
            })
        }
        "radicals" => {
            let r = radicals::radical_report(a, &mut rng::seeded(seed))?;
            Ok(match rest {
                "right_traces" => json!(r.right_traces.iter().map(Scalar::render).collect::<Vec<_>>()),
                "trace_kernel" => subspace_value(&r.trace_kernel),
                "koszul" => subspace_value(&r.koszul_radical),
                "complete" => json!(r.complete),
                "derived_in_radical" => json!(r.derived_in_radical),
                "novikov" => r.novikov_radical.as_ref().map_or(Value::Null, subspace_value),
                _ => return Err(bad(path, "unknown radicals field")),
            })
        }
        "split" => {
            let s = radicals::derivation_split(a, &mut rng::seeded(seed))?;
            Ok(match rest {
                "a0" => subspace_value(&s.a0),
                "a_star" => subspace_value(&s.a_star),
                "idempotent" => json!(format::render_vector(&s.idempotent)),
                _ => return Err(bad(path, "unknown split field")),
            })
        }
        "ideal" => {
            let flags = lie::ideal_flags(a, &subspace(a, args.unwrap_or(""), seed)?)?;
            Ok(match rest {
                "left" => json!(flags.left),
                "right" => json!(flags.right),
                "two_sided" => json!(flags.two_sided),
                "lie_ideal" => json!(flags.lie_ideal),
                _ => return Err(bad(path, "unknown ideal flag")),
            })
        }
        "space" => {
            leaf(path, rest)?;
            Ok(subspace_value(&subspace(a, args.unwrap_or(""), seed)?))
        }
        "within" | "equal" => {
            leaf(path, rest)?;
            let parts = split_args(args.unwrap_or(""));
            if parts.len() != 2 {
                return Err(bad(path, "expected two subspaces"));
            }
            let s = subspace(a, parts[0], seed)?;
            let t = subspace(a, parts[1], seed)?;
            Ok(json!(if head == "within" {
                s.is_subspace_of(&t)?
            } else {
                s == t
            }))
        }
        "nilpotent" => {
            let r = radicals::nilpotent_ideal_checks(a, &subspace(a, args.unwrap_or(""), seed)?)?;
            Ok(match rest {
                "left" => json!(r.left_nilpotent),
                "right" => json!(r.right_nilpotent),
                "left_index" => json!(r.left_index),
                "right_index" => json!(r.right_index),
                _ => return Err(bad(path, "unknown nilpotency field")),
            })
        }
        "quotient" => {
            let q = lie::quotient(a, &subspace(a, args.unwrap_or(""), seed)?)?;
            probe(&q.algebra, rest, seed)
        }
        "restrict" => {
            let r = a.restrict(&subspace(a, args.unwrap_or(""), seed)?)?;
            probe(&r, rest, seed)
        }
        "opposite_negative" => probe(&a.opposite_negative(), rest, seed),
        "simple" => verdict_value(&simplicity::is_simple(a, seed, DEFAULT_BUDGET)?, path, rest),
        "multiplication" => {
            let m = simplicity::multiplication_algebra(a);
            Ok(match rest {
                "closure_dim" => json!(m.closure.dim()),
                "radical_dim" => json!(m.radical.dim()),
                _ => return Err(bad(path, "unknown multiplication-algebra field")),
            })
        }
        "translations" => {
            leaf(path, rest)?;
            Ok(json!(affine::derived_acts_by_translations(a)?))
        }
        "affine_homomorphism" => {
            leaf(path, rest)?;
            Ok(json!(affine::affine_homomorphism_holds(a)?))
        }
        _ => Err(bad(path, &format!("unknown property `{head}`"))),
    }
}

/// [`probe`] for rational algebras, adding `complexified.<path>`.
pub fn probe_rational(a: &Algebra<Rational>, path: &str, seed: u64) -> Result<Value> {
    match path.trim().strip_prefix("complexified.") {
        Some(rest) => probe(&simplicity::complexify(a), rest, seed),
        None => probe(a, path, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp4() -> Algebra<Rational> {
        format::parse_as("dim 4\ne2*e3 = e1\ne3*e4 = e1\ne4*e3 = e1\ne4*e4 = e2\n").unwrap()
    }

    #[test]
    fn path_splitting() {
        assert_eq!(split_head("profile.id4").unwrap(), ("profile", None, "id4"));
        assert_eq!(
            split_head("ideal(span(e1,e2)).left").unwrap(),
            ("ideal", Some("span(e1,e2)"), "left")
        );
        assert_eq!(
            split_args("e1, (1)+(2)i*e2 ,span(e1,e2)"),
            vec!["e1", "(1)+(2)i*e2", "span(e1,e2)"]
        );
        assert!(split_args("").is_empty());
        assert!(split_head("ideal(span(e1)").is_err());
    }

    #[test]
    fn basic_paths() {
        let a = exp4();
        assert_eq!(probe(&a, "product(e2+e4,e3)", 0).unwrap(), json!("2*e1"));
        assert_eq!(probe(&a, "associator(e4,e4,e3)", 0).unwrap(), json!("e1"));
        assert_eq!(probe(&a, "lie.center", 0).unwrap(), json!(["e1", "e4"]));
        assert_eq!(probe(&a, "centers.algebra_center", 0).unwrap(), json!(["e1"]));
        assert_eq!(
            probe(&a, "within(lower_central(1),translational_center)", 0).unwrap(),
            json!(true)
        );
        assert_eq!(
            probe(&a, "quotient(span(e1)).lsa", 0).unwrap(),
            json!("dim 3\nfield Q\ne3*e3 = e1\n")
        );
        assert_eq!(probe(&a, "witness.novikov", 0).unwrap(), json!("e4,e3,e4"));
        assert!(probe(&a, "profile.nonsense", 0).is_err());
        assert!(probe(&a, "lie.center.extra", 0).is_err());
    }

    #[test]
    fn complexified_paths() {
        let a2: Algebra<Rational> =
            format::parse_as("dim 2\ne1*e1 = e1\ne1*e2 = e2\ne2*e1 = e2\ne2*e2 = -e1\n").unwrap();
        assert_eq!(probe_rational(&a2, "simple", 0).unwrap(), json!(true));
        assert_eq!(
            probe_rational(&a2, "complexified.simple", 0).unwrap(),
            json!(false)
        );
        assert_eq!(
            probe_rational(&a2, "complexified.simple.witness_dim", 0).unwrap(),
            json!(1)
        );
    }
}
