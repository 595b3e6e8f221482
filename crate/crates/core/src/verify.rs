//! Property suite: every structural claim about left-symmetric algebras that
//! the library relies on, evaluated exactly over the catalog and the
//! generated families, with non-vacuity counts and a traceability matrix.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Algebra, IdentityProfile};
use crate::catalog;
use crate::families;
use crate::lie::{self, CentersReport, LieData};
use crate::linalg::{self, Rational, Subspace};
use crate::radicals::{self, DerivationSplit};
use crate::rng;
use crate::simplicity::{self, SimplicityVerdict, DEFAULT_BUDGET};
use crate::{affine, Result};

type Q = Rational;

/// Random vectors per algebra for the completeness cross-check.
pub const RANDOM_VECTORS: usize = 100;
/// Largest dimension for which the complexification is tested for
/// simplicity.
pub const COMPLEXIFY_DIM_CAP: usize = 4;

/// Whether a property is a claim about algebras or a cross-check between two
/// routes through this library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Claim,
    Consistency,
}

/// Outcome of one property on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Hypothesis does not hold.
    Vacuous,
    Pass,
    Fail(String),
}

impl Outcome {
    fn from_bool(ok: bool, msg: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(msg())
        }
    }

    fn from_result(r: Result<Outcome>) -> Self {
        r.unwrap_or_else(|e| Outcome::Fail(e.to_string()))
    }
}

/// One analysed instance.
pub struct Facts {
    pub label: String,
    pub algebra: Algebra<Q>,
    /// Elementwise route, always computed.
    pub elementwise: IdentityProfile,
    /// Cross-checked route; an error means the two routes disagree.
    pub profile: std::result::Result<IdentityProfile, String>,
    pub ls: Option<LsFacts>,
    pub seed: u64,
}

/// Everything computed for a left-symmetric instance.
pub struct LsFacts {
    pub profile: IdentityProfile,
    pub lie: LieData<Q>,
    pub centers: CentersReport<Q>,
    pub general_center: Subspace<Q>,
    pub reduced_center: Subspace<Q>,
    pub trace_kernel: Subspace<Q>,
    pub koszul: Subspace<Q>,
    pub complete: bool,
    pub novikov_radical: Option<std::result::Result<Subspace<Q>, String>>,
    pub split: Option<std::result::Result<DerivationSplit<Q>, String>>,
    pub simplicity: std::result::Result<SimplicityVerdict<Q>, String>,
}

impl Facts {
    pub fn analyse(label: impl Into<String>, algebra: Algebra<Q>, seed: u64) -> Result<Self> {
        let elementwise = algebra.elementwise_profile();
        let profile = algebra.identity_profile().map_err(|e| e.to_string());
        let ls = match &profile {
            Ok(p) if p.left_symmetric => Some(LsFacts::analyse(&algebra, p.clone(), seed)?),
            _ => None,
        };
        Ok(Facts {
            label: label.into(),
            algebra,
            elementwise,
            profile,
            ls,
            seed,
        })
    }
}

impl LsFacts {
    fn analyse(a: &Algebra<Q>, profile: IdentityProfile, seed: u64) -> Result<Self> {
        let s = |r: Result<Subspace<Q>>| r.map_err(|e| e.to_string());
        let novikov_radical = profile.novikov.then(|| s(radicals::novikov_right_radical(a)));
        let split = profile
            .derivation
            .then(|| radicals::derivation_split(a, &mut rng::seeded(seed)).map_err(|e| e.to_string()));
        let simplicity = if a.dim() == 0 {
            Err("dimension 0".into())
        } else {
            simplicity::is_simple(a, seed, DEFAULT_BUDGET).map_err(|e| e.to_string())
        };
        Ok(LsFacts {
            lie: lie::lie_data(a)?,
            centers: lie::centers(a)?,
            general_center: lie::algebra_center_general(a),
            reduced_center: lie::algebra_center_left_symmetric(a),
            trace_kernel: radicals::trace_kernel(a),
            koszul: radicals::koszul_radical(a)?,
            complete: radicals::is_complete(a)?,
            novikov_radical,
            split,
            simplicity,
            profile,
        })
    }
}

type Check = fn(&Facts) -> Outcome;

/// A property evaluated on every instance.
pub struct Property {
    pub key: &'static str,
    pub statement: &'static str,
    pub kind: Kind,
    /// Claims with an exact counterexample on record: failures are findings,
    /// not implementation failures.
    pub refuted: bool,
    pub check: Check,
}

fn ls_only(f: &Facts, g: impl FnOnce(&Algebra<Q>, &LsFacts) -> Result<Outcome>) -> Outcome {
    match &f.ls {
        Some(ls) => Outcome::from_result(g(&f.algebra, ls)),
        None => Outcome::Vacuous,
    }
}

fn sub(a: &Subspace<Q>, b: &Subspace<Q>) -> Result<bool> {
    a.is_subspace_of(b)
}

fn render(s: &Subspace<Q>) -> String {
    format!("[{}]", crate::format::render_subspace(s).join(", "))
}

fn basis(n: usize) -> Vec<linalg::Vector<Q>> {
    (0..n).map(|i| linalg::basis_vector(n, i)).collect()
}

fn operator_forms_agree(f: &Facts) -> Outcome {
    match &f.profile {
        Ok(p) if *p == f.elementwise => Outcome::Pass,
        Ok(_) => Outcome::Fail("cross-checked profile differs from the elementwise one".into()),
        Err(e) => Outcome::Fail(e.clone()),
    }
}

fn affine_homomorphism(f: &Facts) -> Outcome {
    Outcome::from_result(affine::affine_homomorphism_holds(&f.algebra).map(|h| {
        Outcome::from_bool(h == f.elementwise.left_symmetric, || {
            format!(
                "affine homomorphism {h}, left-symmetric {}",
                f.elementwise.left_symmetric
            )
        })
    }))
}

fn commutative_lemma(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        let p = &ls.profile;
        let abelian = ls.lie.derived_algebra().is_zero();
        if p.commutative != abelian {
            return Ok(Outcome::Fail(format!(
                "commutative {} but abelian {abelian}",
                p.commutative
            )));
        }
        if !p.commutative {
            return Ok(Outcome::Vacuous);
        }
        Ok(Outcome::from_bool(
            p.associative && p.novikov && p.derivation && p.id4,
            || "commutative but not associative, Novikov, derivation and (4)".into(),
        ))
    })
}

fn two_of_three(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        Ok(match ls.profile.triad_count() {
            0 | 1 => Outcome::Vacuous,
            2 => Outcome::Fail("exactly two of Novikov, derivation, (4) hold".into()),
            _ => Outcome::Pass,
        })
    })
}

fn id4_two_step_solvable(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        if !ls.profile.id4 {
            return Ok(Outcome::Vacuous);
        }
        Ok(Outcome::from_bool(ls.lie.derived(2).is_zero(), || {
            format!("second derived term {}", render(ls.lie.derived(2)))
        }))
    })
}

fn id4_derived_ideal(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        if !ls.profile.id4 {
            return Ok(Outcome::Vacuous);
        }
        let flags = lie::ideal_flags(a, ls.lie.derived_algebra())?;
        Ok(Outcome::from_bool(flags.two_sided, || {
            "[A,A] is not a two-sided ideal".into()
        }))
    })
}

fn opposite_novikov(f: &Facts) -> Outcome {
    // Holds for any associative algebra, left-symmetric or not.
    let p = &f.elementwise;
    if !p.associative {
        return Outcome::Vacuous;
    }
    let q = f.algebra.opposite_negative().elementwise_profile();
    Outcome::from_bool(p.id4 == q.novikov, || {
        format!(
            "(4) is {} but the opposite-negative is Novikov {}",
            p.id4, q.novikov
        )
    })
}

fn associative_novikov_solvable(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        let p = &ls.profile;
        if !(p.associative && p.novikov) {
            return Ok(Outcome::Vacuous);
        }
        Ok(Outcome::from_bool(ls.lie.derived(2).is_zero(), || {
            "associative Novikov algebra with non-metabelian Lie algebra".into()
        }))
    })
}

fn reduced_center(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        Ok(Outcome::from_bool(ls.reduced_center == ls.general_center, || {
            format!(
                "reduced center {} but general center {}",
                render(&ls.reduced_center),
                render(&ls.general_center)
            )
        }))
    })
}

fn novikov_or_derivation(ls: &LsFacts) -> bool {
    ls.profile.novikov || ls.profile.derivation
}

fn center_equals_lie_center(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        if !novikov_or_derivation(ls) {
            return Ok(Outcome::Vacuous);
        }
        Ok(Outcome::from_bool(
            ls.centers.algebra_center == ls.centers.lie_center,
            || {
                format!(
                    "Z(A) = {} but the Lie center is {}",
                    render(&ls.centers.algebra_center),
                    render(&ls.centers.lie_center)
                )
            },
        ))
    })
}

fn center_kills_derived(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        if !novikov_or_derivation(ls) {
            return Ok(Outcome::Vacuous);
        }
        for z in ls.centers.algebra_center.basis() {
            for d in ls.lie.derived_algebra().basis() {
                if !linalg::is_zero_vec(&a.mul(d, z)) {
                    return Ok(Outcome::Fail("R_z is nonzero on [A,A] for some central z".into()));
                }
            }
        }
        Ok(Outcome::Pass)
    })
}

fn center_identities(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        if !novikov_or_derivation(ls) {
            return Ok(Outcome::Vacuous);
        }
        let b = basis(a.dim());
        for z in ls.centers.algebra_center.basis() {
            for x in &b {
                for y in &b {
                    if a.mul(x, &a.mul(y, z)) != a.mul(y, &a.mul(x, z)) {
                        return Ok(Outcome::Fail("x(yz) = y(xz) fails for central z".into()));
                    }
                    if a.mul(&a.mul(x, z), y) != a.mul(x, &a.mul(z, y)) {
                        return Ok(Outcome::Fail("(xz)y = x(zy) fails for central z".into()));
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    })
}

fn center_ideal(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        if !novikov_or_derivation(ls) {
            return Ok(Outcome::Vacuous);
        }
        Ok(Outcome::from_bool(
            ls.centers.algebra_center_flags.two_sided,
            || "Z(A) is not a two-sided ideal".into(),
        ))
    })
}

fn translational_center(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        let k = match ls.lie.nilpotent_class {
            Some(k) if k >= 2 && ls.profile.id4 => k,
            _ => return Ok(Outcome::Vacuous),
        };
        let last = ls.lie.lower_central(k - 1);
        let c = &ls.centers.translational_center;
        if !sub(last, c)? || c.is_zero() {
            return Ok(Outcome::Fail(format!(
                "last lower central term {} not inside C(A) = {}",
                render(last),
                render(c)
            )));
        }
        if ls.lie.nonsingular == Some(true)
            && !(*c == ls.centers.algebra_center && *c == ls.centers.lie_center)
        {
            return Ok(Outcome::Fail(
                "nonsingular but C(A), Z(A) and the Lie center differ".into(),
            ));
        }
        Ok(Outcome::Pass)
    })
}

fn jacobi(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        Ok(Outcome::from_bool(lie::satisfies_jacobi(&ls.lie.bracket), || {
            "commutator fails the Jacobi identity".into()
        }))
    })
}

fn central_extension(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        let c = &ls.centers.translational_center;
        if !ls.profile.id4 || c.is_zero() {
            return Ok(Outcome::Vacuous);
        }
        let q = lie::quotient(a, c)?;
        let p = q.algebra.identity_profile()?;
        if !(p.left_symmetric && p.id4) {
            return Ok(Outcome::Fail("A / C(A) fails left-symmetry or (4)".into()));
        }
        Ok(Outcome::from_bool(q.algebra.dim() + c.dim() == a.dim(), || {
            "quotient dimension bookkeeping is off".into()
        }))
    })
}

/// `L_{e_i}` lies in the span of the inner derivations `ad_{e_j}`.
fn is_inner(a: &Algebra<Q>, bracket: &Algebra<Q>) -> Result<bool> {
    let n = a.dim();
    let ads: Vec<_> = (0..n).map(|j| bracket.left_basis(j)).collect();
    let span = linalg::matrix_span(n, &ads);
    for i in 0..n {
        if !span.contains(a.left_basis(i).as_flat())? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn inner_two_step(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        if ls.lie.nilpotent_class != Some(2) || !is_inner(a, &ls.lie.bracket)? {
            return Ok(Outcome::Vacuous);
        }
        Ok(Outcome::from_bool(ls.profile.id4, || {
            "inner derivation algebra on a 2-step nilpotent Lie algebra fails (4)".into()
        }))
    })
}

fn split_for(ls: &LsFacts) -> Option<std::result::Result<&DerivationSplit<Q>, String>> {
    ls.split.as_ref().map(|r| r.as_ref().map_err(Clone::clone))
}

fn derivation_split(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        Ok(match split_for(ls) {
            None => Outcome::Vacuous,
            Some(Ok(s)) if sub(&s.a0, &ls.koszul)? => Outcome::Pass,
            Some(Ok(_)) => Outcome::Fail("A0 is not inside R(A)".into()),
            Some(Err(e)) => Outcome::Fail(e),
        })
    })
}

fn translation_kernel_nonzero(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        if !ls.profile.derivation || ls.profile.commutative {
            return Ok(Outcome::Vacuous);
        }
        Ok(Outcome::from_bool(
            !ls.centers.translation_kernel.is_zero(),
            || "noncommutative derivation algebra with T(A) = 0".into(),
        ))
    })
}

fn nonsingular_complete(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        if !ls.profile.derivation || ls.lie.nonsingular != Some(true) {
            return Ok(Outcome::Vacuous);
        }
        Ok(Outcome::from_bool(ls.complete, || {
            "derivation algebra on a nonsingular nilpotent Lie algebra is not complete".into()
        }))
    })
}

fn radical_ideal(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        if !ls.profile.id4 {
            return Ok(Outcome::Vacuous);
        }
        if !lie::ideal_flags(a, &ls.koszul)?.two_sided {
            return Ok(Outcome::Fail("R(A) is not a two-sided ideal".into()));
        }
        Ok(Outcome::from_bool(
            sub(ls.lie.derived_algebra(), &ls.koszul)?,
            || "[A,A] is not inside R(A)".into(),
        ))
    })
}

fn extension(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        if !ls.profile.id4 {
            return Ok(Outcome::Vacuous);
        }
        let q = lie::quotient(a, &ls.koszul)?;
        let qp = q.algebra.elementwise_profile();
        if !(qp.commutative && qp.associative) {
            return Ok(Outcome::Fail("A / R(A) is not commutative associative".into()));
        }
        let r = a.restrict(&ls.koszul)?;
        let rp = r.identity_profile()?;
        if !(rp.left_symmetric && rp.id4 && radicals::is_complete(&r)?) {
            return Ok(Outcome::Fail(
                "R(A) is not a complete algebra satisfying (4)".into(),
            ));
        }
        Ok(Outcome::Pass)
    })
}

fn radical_complete(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        let r = a.restrict(&ls.koszul)?;
        let ok = radicals::is_complete(&r)? && lie::ideal_flags(a, &ls.koszul)?.left;
        Ok(Outcome::from_bool(ok, || {
            "R(A) is not a complete left ideal".into()
        }))
    })
}

/// Ideals found in the structure of `A` that could be left-nilpotent.
fn candidate_ideals(a: &Algebra<Q>, ls: &LsFacts) -> Vec<Subspace<Q>> {
    let mut out: Vec<Subspace<Q>> = ls.lie.lower_central_series.iter().skip(1).cloned().collect();
    out.extend(ls.lie.derived_series.iter().skip(1).cloned());
    out.push(ls.centers.translation_kernel.clone());
    out.push(ls.centers.translational_center.clone());
    out.push(ls.centers.algebra_center.clone());
    out.push(a.square());
    out.push(ls.koszul.clone());
    out.retain(|s| !s.is_zero());
    out.sort_by_key(|s| s.pivots().to_vec());
    out.dedup();
    out
}

fn left_nilpotent_in_radical(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        let mut any = false;
        for s in candidate_ideals(a, ls) {
            if !lie::ideal_flags(a, &s)?.two_sided {
                continue;
            }
            if !radicals::nilpotent_ideal_checks(a, &s)?.left_nilpotent {
                continue;
            }
            any = true;
            if !sub(&s, &ls.koszul)? {
                return Ok(Outcome::Fail(format!(
                    "left-nilpotent ideal {} not inside R(A)",
                    render(&s)
                )));
            }
        }
        Ok(if any { Outcome::Pass } else { Outcome::Vacuous })
    })
}

fn right_radical_koszul(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        Ok(match &ls.novikov_radical {
            None => Outcome::Vacuous,
            Some(Ok(n)) => Outcome::from_bool(*n == ls.koszul, || "N(A) differs from R(A)".into()),
            Some(Err(e)) => Outcome::Fail(e.clone()),
        })
    })
}

fn right_radical_trace_kernel(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        Ok(match &ls.novikov_radical {
            None => Outcome::Vacuous,
            Some(Ok(n)) => Outcome::from_bool(*n == ls.trace_kernel, || {
                format!("N(A) = {} but I(A) = {}", render(n), render(&ls.trace_kernel))
            }),
            Some(Err(e)) => Outcome::Fail(e.clone()),
        })
    })
}

fn simple_verdict(ls: &LsFacts) -> std::result::Result<Option<bool>, String> {
    ls.simplicity
        .as_ref()
        .map(|v| v.is_simple())
        .map_err(Clone::clone)
}

fn witness_sound(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        let v = match &ls.simplicity {
            Ok(v) => v,
            Err(e) => return Ok(Outcome::Fail(e.clone())),
        };
        match v {
            SimplicityVerdict::NotSimple { witness, .. } => {
                let proper = !witness.is_whole() && (!witness.is_zero() || a.dim() == 1);
                let ok = proper && lie::ideal_flags(a, witness)?.two_sided;
                Ok(Outcome::from_bool(ok, || {
                    format!("witness {} is not a proper ideal", render(witness))
                }))
            }
            SimplicityVerdict::Simple(_) => Ok(Outcome::Vacuous),
            SimplicityVerdict::Undecided { budget } => Ok(Outcome::Fail(format!("undecided after {budget}"))),
        }
    })
}

fn simple_commutative(f: &Facts) -> Outcome {
    ls_only(f, |_, ls| {
        if !(ls.profile.derivation || ls.profile.id4) {
            return Ok(Outcome::Vacuous);
        }
        Ok(match simple_verdict(ls) {
            Ok(Some(true)) => Outcome::from_bool(ls.profile.commutative, || {
                "simple, derivation or (4), but not commutative".into()
            }),
            Ok(Some(false)) => Outcome::Vacuous,
            Ok(None) => Outcome::Fail("simplicity undecided".into()),
            Err(e) => Outcome::Fail(e),
        })
    })
}

fn complete_not_simple(f: &Facts, hypothesis: fn(&IdentityProfile) -> bool) -> Outcome {
    ls_only(f, |_, ls| {
        if !(ls.complete && hypothesis(&ls.profile)) {
            return Ok(Outcome::Vacuous);
        }
        Ok(match simple_verdict(ls) {
            Ok(Some(false)) => Outcome::Pass,
            Ok(Some(true)) => Outcome::Fail("complete but simple".into()),
            Ok(None) => Outcome::Fail("simplicity undecided".into()),
            Err(e) => Outcome::Fail(e),
        })
    })
}

fn complete_novikov_not_simple(f: &Facts) -> Outcome {
    complete_not_simple(f, |p| p.novikov)
}

fn complete_derivation_not_simple(f: &Facts) -> Outcome {
    complete_not_simple(f, |p| p.derivation || p.id4)
}

fn simple_novikov_over_closure(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        if !ls.profile.novikov || a.dim() == 0 || a.dim() > COMPLEXIFY_DIM_CAP {
            return Ok(Outcome::Vacuous);
        }
        // A proper ideal I of A gives the proper ideal I + iI of the
        // complexification, so only simple A can have a simple one.
        if simple_verdict(ls) == Ok(Some(false)) {
            return Ok(Outcome::Vacuous);
        }
        let c = simplicity::complexify(a);
        Ok(
            match simplicity::is_simple(&c, f.seed, DEFAULT_BUDGET)?.is_simple() {
                Some(true) => Outcome::from_bool(a.dim() == 1, || {
                    format!("complexification of dimension {} is simple", a.dim())
                }),
                Some(false) => Outcome::Vacuous,
                None => Outcome::Fail("simplicity of the complexification undecided".into()),
            },
        )
    })
}

fn translations(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        let t = affine::derived_acts_by_translations(a)?;
        Ok(Outcome::from_bool(t == ls.profile.id4, || {
            format!("derived algebra acts by translations {t}, (4) {}", ls.profile.id4)
        }))
    })
}

fn completeness_sampled(f: &Facts) -> Outcome {
    ls_only(f, |a, ls| {
        let n = a.dim();
        let mut r = rng::seeded(f.seed ^ 0x5eed);
        let mut all_nilpotent = true;
        for _ in 0..RANDOM_VECTORS {
            let x: Vec<Q> = rng::small_vector(&mut r, n);
            if !a.right_mul(&x)?.is_nilpotent() {
                all_nilpotent = false;
                break;
            }
        }
        Ok(Outcome::from_bool(all_nilpotent == ls.complete, || {
            format!(
                "trace criterion says complete {}, sampled R_x say {all_nilpotent}",
                ls.complete
            )
        }))
    })
}

/// All properties, in report order.
pub const PROPERTIES: &[Property] = &[
    Property { key: "operator_forms", statement: "elementwise and operator-form identity checks agree", kind: Kind::Consistency, refuted: false, check: operator_forms_agree },
    Property { key: "affine_homomorphism", statement: "x -> aff(x) is a Lie homomorphism exactly for left-symmetric algebras", kind: Kind::Consistency, refuted: false, check: affine_homomorphism },
    Property { key: "commutative", statement: "commutative <=> abelian Lie algebra; then associative, Novikov, derivation and (4)", kind: Kind::Claim, refuted: false, check: commutative_lemma },
    Property { key: "two_of_three", statement: "any two of Novikov, derivation, (4) imply the third", kind: Kind::Claim, refuted: false, check: two_of_three },
    Property { key: "id4_solvable", statement: "(4) => Lie algebra is 2-step solvable", kind: Kind::Claim, refuted: false, check: id4_two_step_solvable },
    Property { key: "id4_derived_ideal", statement: "(4) => [A,A] is a two-sided ideal", kind: Kind::Claim, refuted: false, check: id4_derived_ideal },
    Property { key: "opposite_novikov", statement: "associative => ((4) <=> opposite-negative is Novikov)", kind: Kind::Claim, refuted: false, check: opposite_novikov },
    Property { key: "associative_novikov_solvable", statement: "associative Novikov => Lie algebra is 2-step solvable", kind: Kind::Claim, refuted: false, check: associative_novikov_solvable },
    Property { key: "reduced_center", statement: "Z(A) = {z in Lie center : (z,x,y) = 0} for left-symmetric A", kind: Kind::Claim, refuted: false, check: reduced_center },
    Property { key: "center_novikov_derivation", statement: "Novikov or derivation => Z(A) = Lie center", kind: Kind::Claim, refuted: false, check: center_equals_lie_center },
    Property { key: "center_kills_derived", statement: "Novikov or derivation => R_z = 0 on [A,A] for z in Z(A)", kind: Kind::Claim, refuted: false, check: center_kills_derived },
    Property { key: "center_identities", statement: "Novikov or derivation => x(yz) = y(xz) and (xz)y = x(zy) for z in Z(A)", kind: Kind::Claim, refuted: false, check: center_identities },
    Property { key: "center_ideal", statement: "Novikov or derivation => Z(A) is a two-sided ideal", kind: Kind::Claim, refuted: false, check: center_ideal },
    Property { key: "translational_center", statement: "(4) and k-step nilpotent => last lower central term inside C(A) != 0; nonsingular => C(A) = Z(A) = Lie center", kind: Kind::Claim, refuted: false, check: translational_center },
    Property { key: "central_extension", statement: "(4) => A / C(A) is left-symmetric with (4)", kind: Kind::Claim, refuted: false, check: central_extension },
    Property { key: "jacobi", statement: "the commutator of a left-symmetric algebra is a Lie bracket", kind: Kind::Claim, refuted: false, check: jacobi },
    Property { key: "inner_two_step", statement: "inner derivation algebra with 2-step nilpotent Lie algebra => (4)", kind: Kind::Claim, refuted: false, check: inner_two_step },
    Property { key: "derivation_split", statement: "derivation => A = A0 + A* with every splitting clause verified, and A0 inside R(A)", kind: Kind::Claim, refuted: false, check: derivation_split },
    Property { key: "translation_kernel_nonzero", statement: "noncommutative derivation => T(A) != 0", kind: Kind::Claim, refuted: false, check: translation_kernel_nonzero },
    Property { key: "nonsingular_complete", statement: "derivation with nonsingular nilpotent Lie algebra => complete", kind: Kind::Claim, refuted: false, check: nonsingular_complete },
    Property { key: "radical_ideal", statement: "(4) => R(A) is a two-sided ideal containing [A,A]", kind: Kind::Claim, refuted: false, check: radical_ideal },
    Property { key: "extension", statement: "(4) => A / R(A) commutative associative and R(A) complete with (4)", kind: Kind::Claim, refuted: false, check: extension },
    Property { key: "radical_complete", statement: "R(A) is a complete left ideal", kind: Kind::Claim, refuted: false, check: radical_complete },
    Property { key: "left_nilpotent_in_radical", statement: "left-nilpotent ideals lie inside R(A)", kind: Kind::Claim, refuted: false, check: left_nilpotent_in_radical },
    Property { key: "right_radical_koszul", statement: "Novikov => N(A) = R(A), right-nilpotent", kind: Kind::Claim, refuted: false, check: right_radical_koszul },
    Property { key: "right_radical_trace_kernel", statement: "Novikov => N(A) = I(A)", kind: Kind::Claim, refuted: true, check: right_radical_trace_kernel },
    Property { key: "simple_commutative", statement: "simple and (derivation or (4)) => commutative", kind: Kind::Claim, refuted: false, check: simple_commutative },
    Property { key: "complete_novikov_not_simple", statement: "complete Novikov => not simple", kind: Kind::Claim, refuted: false, check: complete_novikov_not_simple },
    Property { key: "complete_derivation_not_simple", statement: "complete and (derivation or (4)) => not simple", kind: Kind::Claim, refuted: false, check: complete_derivation_not_simple },
    Property { key: "simple_novikov_closed", statement: "simple Novikov over Q(i) => one-dimensional", kind: Kind::Claim, refuted: false, check: simple_novikov_over_closure },
    Property { key: "not_simple_witness", statement: "every 'not simple' verdict carries a proper two-sided ideal", kind: Kind::Consistency, refuted: false, check: witness_sound },
    Property { key: "translations", statement: "[A,A] acts by translations <=> (4)", kind: Kind::Consistency, refuted: false, check: translations },
    Property { key: "completeness_sampled", statement: "trace criterion for completeness agrees with nilpotency of sampled R_x", kind: Kind::Consistency, refuted: false, check: completeness_sampled },
];

pub fn property(key: &str) -> Option<&'static Property> {
    PROPERTIES.iter().find(|p| p.key == key)
}

/// Tally of one property over a suite.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub key: &'static str,
    pub statement: &'static str,
    pub kind: Kind,
    pub refuted: bool,
    pub tested: usize,
    /// Instances where the hypothesis held.
    pub non_vacuous: usize,
    pub passed: usize,
    /// `(instance, message)` for every failure.
    pub failures: Vec<(String, String)>,
}

impl PropertyResult {
    /// A failure that is not an accepted finding.
    pub fn is_failure(&self) -> bool {
        !self.refuted && !self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub instances: usize,
    pub left_symmetric: usize,
    pub families: BTreeMap<String, usize>,
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn result(&self, key: &str) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.key == key)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| r.is_failure())
    }

    pub fn findings(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results
            .iter()
            .filter(|r| r.refuted && !r.failures.is_empty())
    }
}

/// The catalog (with every A3gamma sample) followed by the generated
/// families, labelled.
pub fn standard_instances(seed: u64) -> Result<Vec<(String, &'static str, Algebra<Q>)>> {
    let mut out = Vec::new();
    for e in catalog::catalog()? {
        out.push((e.name.clone(), "catalog", e.algebra));
    }
    let mut counters: BTreeMap<&'static str, usize> = BTreeMap::new();
    for inst in families::standard_suite(seed)?
        .into_iter()
        .chain(families::negative_family(&mut rng::seeded(seed), 16)?)
    {
        let c = counters.entry(inst.family).or_default();
        out.push((format!("{}#{c}", inst.family), inst.family, inst.algebra));
        *c += 1;
    }
    Ok(out)
}

/// Analyse every instance on worker threads; results come back in input
/// order.
pub fn analyse_all(instances: &[(String, &'static str, Algebra<Q>)], seed: u64) -> Vec<Result<Facts>> {
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(16);
    let chunk = instances.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = instances
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|(label, _, a)| Facts::analyse(label.clone(), a.clone(), seed))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("analysis worker panicked"))
            .collect()
    })
}

/// Evaluate `props` on every instance.
pub fn run_suite(
    instances: &[(String, &'static str, Algebra<Q>)],
    props: &[&'static Property],
    seed: u64,
) -> SuiteReport {
    let facts = analyse_all(instances, seed);
    let mut results: Vec<PropertyResult> = props
        .iter()
        .map(|p| PropertyResult {
            key: p.key,
            statement: p.statement,
            kind: p.kind,
            refuted: p.refuted,
            tested: 0,
            non_vacuous: 0,
            passed: 0,
            failures: Vec::new(),
        })
        .collect();
    let mut families: BTreeMap<String, usize> = BTreeMap::new();
    let mut left_symmetric = 0;
    for ((label, family, _), f) in instances.iter().zip(&facts) {
        *families.entry(family.to_string()).or_default() += 1;
        let f = match f {
            Ok(f) => f,
            Err(e) => {
                for r in &mut results {
                    r.tested += 1;
                    r.failures.push((label.clone(), format!("analysis failed: {e}")));
                }
                continue;
            }
        };
        left_symmetric += usize::from(f.ls.is_some());
        // Property checks are cheap next to the analysis; run them in order.
        for (p, r) in props.iter().zip(&mut results) {
            r.tested += 1;
            match (p.check)(f) {
                Outcome::Vacuous => {}
                Outcome::Pass => {
                    r.non_vacuous += 1;
                    r.passed += 1;
                }
                Outcome::Fail(msg) => {
                    r.non_vacuous += 1;
                    r.failures.push((label.clone(), msg));
                }
            }
        }
    }
    SuiteReport {
        seed,
        instances: instances.len(),
        left_symmetric,
        families,
        results,
    }
}

/// Run every property over [`standard_instances`].
pub fn standard_report(seed: u64) -> Result<SuiteReport> {
    let instances = standard_instances(seed)?;
    let props: Vec<&'static Property> = PROPERTIES.iter().collect();
    Ok(run_suite(&instances, &props, seed))
}

/// One row of the traceability matrix: a published result and the evidence
/// checking it.
#[derive(Debug, Clone, Serialize)]
pub struct TraceRow {
    pub result: &'static str,
    /// Keys into [`PROPERTIES`].
    pub properties: &'static [&'static str],
    /// Catalog expectations, as `entry: path`.
    pub fixtures: &'static [&'static str],
}

pub const TRACEABILITY: &[TraceRow] = &[
    TraceRow {
        result: "Lemma: commutative <=> abelian Lie algebra",
        properties: &["commutative"],
        fixtures: &["A2: profile.commutative", "zero3: profile"],
    },
    TraceRow {
        result: "Proposition: two of Novikov, derivation, (4) imply the third",
        properties: &["two_of_three"],
        fixtures: &["A21: profile", "A22: profile", "A3gamma: profile"],
    },
    TraceRow {
        result: "Proposition: (4) => 2-step solvable",
        properties: &["id4_solvable"],
        fixtures: &["exp4: lie.solvable_class"],
    },
    TraceRow {
        result: "Proposition: (4) => [A,A] two-sided ideal",
        properties: &["id4_derived_ideal"],
        fixtures: &["exp4: ideal(derived).two_sided"],
    },
    TraceRow {
        result: "Proposition: associative, (4) <=> opposite Novikov",
        properties: &["opposite_novikov"],
        fixtures: &["D2: opposite_negative.profile.novikov"],
    },
    TraceRow {
        result: "Corollary: associative Novikov => 2-step solvable",
        properties: &["associative_novikov_solvable"],
        fixtures: &[],
    },
    TraceRow {
        result: "Lemma: reduced center criterion",
        properties: &["reduced_center"],
        fixtures: &["exp4: centers.algebra_center", "A4: centers.algebra_center"],
    },
    TraceRow {
        result: "Lemma: Novikov or derivation => Z(A) = Lie center",
        properties: &["center_novikov_derivation"],
        fixtures: &["A22: centers.algebra_center"],
    },
    TraceRow {
        result: "Remark: R_z vanishes on [A,A]",
        properties: &["center_kills_derived"],
        fixtures: &[],
    },
    TraceRow {
        result: "Proposition: Z(A) two-sided ideal for Novikov or derivation",
        properties: &["center_identities", "center_ideal"],
        fixtures: &["A4: centers.lie_center.left", "H3xR: centers.algebra_center.left"],
    },
    TraceRow {
        result: "Proposition: translational center of nilpotent (4) algebras",
        properties: &["translational_center"],
        fixtures: &["exp4: centers.translational_center"],
    },
    TraceRow {
        result: "Corollary: (4) nilpotent algebras are central extensions",
        properties: &["central_extension"],
        fixtures: &[],
    },
    TraceRow {
        result: "Proposition: inner derivation algebra, 2-step nilpotent => (4)",
        properties: &["inner_two_step"],
        fixtures: &["H3half: profile.id4"],
    },
    TraceRow {
        result: "Theorem: splitting of derivation algebras",
        properties: &["derivation_split"],
        fixtures: &["D2: split.a0", "A3gamma: split.a0"],
    },
    TraceRow {
        result: "Corollary: noncommutative derivation => T(A) != 0",
        properties: &["translation_kernel_nonzero"],
        fixtures: &[],
    },
    TraceRow {
        result: "Corollary: nonsingular nilpotent derivation => complete",
        properties: &["nonsingular_complete"],
        fixtures: &["H3half: radicals.complete"],
    },
    TraceRow {
        result: "Theorem: (4) => R(A) two-sided ideal containing [A,A]",
        properties: &["radical_ideal", "radical_complete"],
        fixtures: &["exp4: radicals.koszul"],
    },
    TraceRow {
        result: "Corollary: extension of commutative associative by complete",
        properties: &["extension"],
        fixtures: &["D2: quotient(koszul).profile.associative"],
    },
    TraceRow {
        result: "Left radical inside R(A)",
        properties: &["left_nilpotent_in_radical"],
        fixtures: &[],
    },
    TraceRow {
        result: "Proposition: N(A) = R(A) = I(A) for Novikov algebras",
        properties: &["right_radical_koszul", "right_radical_trace_kernel"],
        fixtures: &[
            "D2: radicals.novikov",
            "A22: radicals.novikov",
            "A2: equal(novikov,trace_kernel)",
        ],
    },
    TraceRow {
        result: "Theorem: simple Novikov over an algebraically closed field is the field",
        properties: &["simple_novikov_closed"],
        fixtures: &["A2: complexified.simple"],
    },
    TraceRow {
        result: "Example/Remark: A2 simple over the reals, complexification split",
        properties: &[],
        fixtures: &["A2: simple", "A2: complexified.iso_witness"],
    },
    TraceRow {
        result: "Theorem: simple real Novikov algebras are A2 or the field",
        properties: &[],
        fixtures: &["A2: simple", "field: simple"],
    },
    TraceRow {
        result: "Lemma: simple and (derivation or (4)) => commutative",
        properties: &["simple_commutative"],
        fixtures: &[],
    },
    TraceRow {
        result: "Propositions: simple derivation or (4) algebras over R or C",
        properties: &["simple_commutative", "simple_novikov_closed"],
        fixtures: &["A2: simple", "field: simple"],
    },
    TraceRow {
        result: "Proposition: complete Novikov => not simple",
        properties: &["complete_novikov_not_simple"],
        fixtures: &[],
    },
    TraceRow {
        result: "Proposition: complete and (derivation or (4)) => not simple",
        properties: &["complete_derivation_not_simple"],
        fixtures: &[],
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Scalar;

    fn facts(name: &str) -> Facts {
        let a = catalog::get_example(name, &[]).unwrap().algebra;
        Facts::analyse(name, a, 0).unwrap()
    }

    #[test]
    fn traceability_names_real_properties() {
        for row in TRACEABILITY {
            for key in row.properties {
                assert!(property(key).is_some(), "{key}");
            }
        }
        for p in PROPERTIES {
            assert!(
                p.kind == Kind::Consistency
                    || TRACEABILITY.iter().any(|r| r.properties.contains(&p.key))
                    || matches!(p.key, "jacobi" | "radical_complete"),
                "{} is not traced",
                p.key
            );
        }
    }

    #[test]
    fn exp4_properties() {
        let f = facts("exp4");
        assert_eq!(
            (property("translational_center").unwrap().check)(&f),
            Outcome::Pass
        );
        assert_eq!((property("two_of_three").unwrap().check)(&f), Outcome::Vacuous);
        assert_eq!((property("radical_ideal").unwrap().check)(&f), Outcome::Pass);
    }

    #[test]
    fn a2_refutes_trace_kernel_radical() {
        let f = facts("A2");
        assert_eq!(
            (property("right_radical_koszul").unwrap().check)(&f),
            Outcome::Pass
        );
        assert!(matches!(
            (property("right_radical_trace_kernel").unwrap().check)(&f),
            Outcome::Fail(_)
        ));
    }

    #[test]
    fn negative_instances_only_see_consistency_checks() {
        let a = Algebra::from_products(2, [(0, 1, vec![Q::from_int(1), Q::from_int(0)])]).unwrap();
        let a = {
            let mut a = a;
            a.set_constant(1, 1, 0, Q::from_int(1));
            a
        };
        let f = Facts::analyse("neg", a, 0).unwrap();
        if f.ls.is_none() {
            assert_eq!(commutative_lemma(&f), Outcome::Vacuous);
            assert_eq!(affine_homomorphism(&f), Outcome::Pass);
        }
    }

    #[test]
    fn catalog_suite_has_no_failures() {
        let instances: Vec<_> = catalog::catalog()
            .unwrap()
            .into_iter()
            .map(|e| (e.name.clone(), "catalog", e.algebra))
            .collect();
        let props: Vec<_> = PROPERTIES.iter().collect();
        let report = run_suite(&instances, &props, 0);
        let failures: Vec<_> = report.failures().map(|r| (r.key, r.failures.clone())).collect();
        assert!(failures.is_empty(), "{failures:?}");
        assert!(report.findings().any(|r| r.key == "right_radical_trace_kernel"));
    }
}
