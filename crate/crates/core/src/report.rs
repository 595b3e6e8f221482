//! The full analysis of one algebra as a serializable, byte-stable report.
//!
//! Subspaces are lists of basis vectors in `.lsa` syntax (reduced row
//! echelon form, pivots ascending); vectors are `.lsa` linear combinations;
//! scalars are strings. Sections that need left-symmetry are `null` for
//! other algebras.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{Algebra, Identity};
use crate::format::{render_subspace, render_vector};
use crate::lie::{self, IdealFlags};
use crate::linalg::{Scalar, Subspace};
use crate::simplicity::{self, SimplicityVerdict};
use crate::{affine, radicals, rng, Result};

/// Schema tag written into every report.
pub const SCHEMA: &str = "lsalg-report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileSection {
    pub left_symmetric: bool,
    pub novikov: bool,
    pub derivation: bool,
    pub id4: bool,
    pub associative: bool,
    pub commutative: bool,
    /// Smallest falsifying basis triple per failing identity, as
    /// `"e1,e2,e3"`.
    pub witnesses: BTreeMap<&'static str, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieSection {
    pub derived_series: Vec<Vec<String>>,
    pub lower_central_series: Vec<Vec<String>>,
    pub solvable_class: Option<usize>,
    pub nilpotent_class: Option<usize>,
    pub nonsingular: Option<bool>,
    pub center: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspaceWithFlags {
    pub basis: Vec<String>,
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub two_sided_ideal: bool,
}

impl SubspaceWithFlags {
    fn new<F: Scalar>(s: &Subspace<F>, flags: IdealFlags) -> Self {
        SubspaceWithFlags {
            basis: render_subspace(s),
            left_ideal: flags.left,
            right_ideal: flags.right,
            two_sided_ideal: flags.two_sided,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentersSection {
    pub lie_center: SubspaceWithFlags,
    pub algebra_center: SubspaceWithFlags,
    pub translation_kernel: SubspaceWithFlags,
    pub translational_center: SubspaceWithFlags,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitSection {
    pub a0: Vec<String>,
    pub a_star: Vec<String>,
    pub idempotent: String,
    pub attempts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalsSection {
    /// `tr R_{e_i}`.
    pub right_traces: Vec<String>,
    pub trace_kernel: Vec<String>,
    pub koszul_radical: Vec<String>,
    pub complete: bool,
    pub derived_in_radical: bool,
    /// Right radical, for Novikov algebras.
    pub novikov_radical: Option<Vec<String>>,
    /// Whether the right radical equals the trace kernel (it need not).
    pub novikov_radical_is_trace_kernel: Option<bool>,
    pub split: Option<SplitSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicitySection {
    /// `"simple"`, `"not_simple"` or `"undecided"`.
    pub verdict: &'static str,
    pub seed: u64,
    pub budget: usize,
    /// Norton certificate: irreducible factor and random elements drawn.
    pub factor: Option<String>,
    pub attempts: Option<usize>,
    pub reason: Option<&'static str>,
    /// Proper two-sided ideal proving non-simplicity.
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineSection {
    /// `aff([x,y]) = [aff(x), aff(y)]` on basis pairs.
    pub homomorphism: bool,
    /// `[A,A]` acts by translations.
    pub derived_acts_by_translations: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub version: &'static str,
    pub field: String,
    pub dim: usize,
    pub seed: u64,
    pub profile: ProfileSection,
    pub lie: Option<LieSection>,
    pub centers: Option<CentersSection>,
    pub radicals: Option<RadicalsSection>,
    /// Absent for dimension 0.
    pub simplicity: Option<SimplicitySection>,
    pub affine: AffineSection,
}

fn subspaces<F: Scalar>(s: &[Subspace<F>]) -> Vec<Vec<String>> {
    s.iter().map(render_subspace).collect()
}

pub fn profile_section<F: Scalar>(a: &Algebra<F>) -> Result<ProfileSection> {
    let p = a.identity_profile()?;
    let witnesses = Identity::ALL
        .iter()
        .filter_map(|&id| {
            p.witness(id)
                .map(|[i, j, k]| (id.key(), format!("e{},e{},e{}", i + 1, j + 1, k + 1)))
        })
        .collect();
    Ok(ProfileSection {
        left_symmetric: p.left_symmetric,
        novikov: p.novikov,
        derivation: p.derivation,
        id4: p.id4,
        associative: p.associative,
        commutative: p.commutative,
        witnesses,
    })
}

pub fn radicals_section<F: Scalar>(a: &Algebra<F>, seed: u64) -> Result<RadicalsSection> {
    let r = radicals::radical_report(a, &mut rng::seeded(seed))?;
    Ok(RadicalsSection {
        right_traces: r.right_traces.iter().map(Scalar::render).collect(),
        trace_kernel: render_subspace(&r.trace_kernel),
        koszul_radical: render_subspace(&r.koszul_radical),
        complete: r.complete,
        derived_in_radical: r.derived_in_radical,
        novikov_radical_is_trace_kernel: r.novikov_radical.as_ref().map(|n| *n == r.trace_kernel),
        novikov_radical: r.novikov_radical.as_ref().map(render_subspace),
        split: r.split.map(|s| SplitSection {
            a0: render_subspace(&s.a0),
            a_star: render_subspace(&s.a_star),
            idempotent: render_vector(&s.idempotent),
            attempts: s.attempts,
        }),
    })
}

pub fn simplicity_section<F: Scalar>(
    v: &SimplicityVerdict<F>,
    seed: u64,
    budget: usize,
) -> SimplicitySection {
    let mut s = SimplicitySection {
        verdict: "undecided",
        seed,
        budget,
        factor: None,
        attempts: None,
        reason: None,
        witness: None,
    };
    match v {
        SimplicityVerdict::Simple(cert) => {
            s.verdict = "simple";
            s.factor = Some(cert.factor.to_string());
            s.attempts = Some(cert.attempts);
        }
        SimplicityVerdict::NotSimple { reason, witness } => {
            s.verdict = "not_simple";
            s.reason = Some(reason.describe());
            s.witness = Some(render_subspace(witness));
        }
        SimplicityVerdict::Undecided { .. } => {}
    }
    s
}

/// Analyse `a` completely. Randomized stages use `seed`.
pub fn analyse<F: Scalar>(a: &Algebra<F>, seed: u64, budget: usize) -> Result<AnalysisReport> {
    let profile = profile_section(a)?;
    let ls = profile.left_symmetric;
    let (lie, centers, radicals, translations) = if ls {
        let d = lie::lie_data(a)?;
        let c = lie::centers(a)?;
        (
            Some(LieSection {
                derived_series: subspaces(&d.derived_series),
                lower_central_series: subspaces(&d.lower_central_series),
                solvable_class: d.solvable_class,
                nilpotent_class: d.nilpotent_class,
                nonsingular: d.nonsingular,
                center: render_subspace(&d.center),
            }),
            Some(CentersSection {
                lie_center: SubspaceWithFlags::new(&c.lie_center, c.lie_center_flags),
                algebra_center: SubspaceWithFlags::new(&c.algebra_center, c.algebra_center_flags),
                translation_kernel: SubspaceWithFlags::new(&c.translation_kernel, c.translation_kernel_flags),
                translational_center: SubspaceWithFlags::new(
                    &c.translational_center,
                    c.translational_center_flags,
                ),
            }),
            Some(radicals_section(a, seed)?),
            Some(affine::derived_acts_by_translations(a)?),
        )
    } else {
        (None, None, None, None)
    };
    let simplicity = if a.dim() == 0 {
        None
    } else {
        Some(simplicity_section(
            &simplicity::is_simple(a, seed, budget)?,
            seed,
            budget,
        ))
    };
    Ok(AnalysisReport {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION"),
        field: F::FIELD.symbol().to_string(),
        dim: a.dim(),
        seed,
        profile,
        lie,
        centers,
        radicals,
        simplicity,
        affine: AffineSection {
            homomorphism: affine::affine_homomorphism_holds(a)?,
            derived_acts_by_translations: translations,
        },
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn span(s: &[String]) -> String {
    if s.is_empty() {
        "{0}".into()
    } else {
        format!("span{{{}}}", s.join(", "))
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

/// The one-line identity summary printed by `check`.
pub fn profile_line(p: &ProfileSection) -> String {
    format!(
        "left-symmetric: {}; (4): {}; Novikov: {}; derivation: {}",
        yes(p.left_symmetric),
        yes(p.id4),
        yes(p.novikov),
        yes(p.derivation)
    )
}

pub fn render_radicals(r: &RadicalsSection) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "right traces: {}", r.right_traces.join(", "));
    let _ = writeln!(out, "trace kernel I(A): {}", span(&r.trace_kernel));
    let _ = writeln!(out, "radical R(A): {}", span(&r.koszul_radical));
    let _ = writeln!(out, "complete: {}", yes(r.complete));
    let _ = writeln!(out, "[A,A] inside R(A): {}", yes(r.derived_in_radical));
    if let Some(n) = &r.novikov_radical {
        let _ = writeln!(out, "right radical N(A): {}", span(n));
    }
    if let Some(s) = &r.split {
        let _ = writeln!(out, "split A0: {}", span(&s.a0));
        let _ = writeln!(out, "split A*: {} (identity {})", span(&s.a_star), s.idempotent);
    }
    out
}

pub fn render_simplicity(s: &SimplicitySection) -> String {
    match s.verdict {
        "simple" => format!("simple: yes (Norton certificate, seed {})", s.seed),
        "not_simple" => format!(
            "simple: no ({}; ideal {})",
            s.reason.unwrap_or(""),
            span(s.witness.as_deref().unwrap_or(&[]))
        ),
        _ => format!(
            "simple: undecided (budget {} exhausted, seed {})",
            s.budget, s.seed
        ),
    }
}

impl AnalysisReport {
    /// Pretty JSON; identical bytes for identical input, seed and version.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable text.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "dimension {} over {}, seed {}",
            self.dim, self.field, self.seed
        );
        let p = &self.profile;
        let _ = writeln!(out, "{}", profile_line(p));
        let _ = writeln!(
            out,
            "associative: {}; commutative: {}",
            yes(p.associative),
            yes(p.commutative)
        );
        for (id, w) in &p.witnesses {
            let _ = writeln!(out, "  {id} fails at ({w})");
        }
        if let Some(l) = &self.lie {
            let _ = writeln!(out, "Lie algebra:");
            let _ = writeln!(out, "  center: {}", span(&l.center));
            let _ = writeln!(
                out,
                "  [A,A]: {}",
                span(l.derived_series.get(1).unwrap_or(&l.derived_series[0]))
            );
            let _ = writeln!(
                out,
                "  solvable class: {}; nilpotent class: {}; nonsingular: {}",
                opt(l.solvable_class),
                opt(l.nilpotent_class),
                opt(l.nonsingular.map(yes))
            );
        }
        if let Some(c) = &self.centers {
            let _ = writeln!(out, "centers:");
            for (name, s) in [
                ("Lie center", &c.lie_center),
                ("Z(A)", &c.algebra_center),
                ("T(A)", &c.translation_kernel),
                ("C(A)", &c.translational_center),
            ] {
                let _ = writeln!(
                    out,
                    "  {name}: {} (left ideal {}, right ideal {})",
                    span(&s.basis),
                    yes(s.left_ideal),
                    yes(s.right_ideal)
                );
            }
        }
        if let Some(r) = &self.radicals {
            let _ = writeln!(out, "radicals:");
            for line in render_radicals(r).lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        if let Some(s) = &self.simplicity {
            let _ = writeln!(out, "{}", render_simplicity(s));
        }
        let _ = writeln!(
            out,
            "affine representation is a homomorphism: {}",
            yes(self.affine.homomorphism)
        );
        if let Some(t) = self.affine.derived_acts_by_translations {
            let _ = writeln!(out, "[A,A] acts by translations: {}", yes(t));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{Rational, Scalar};

    fn report(name: &str) -> AnalysisReport {
        let a: Algebra<Rational> = catalog::get_example(name, &[]).unwrap().algebra;
        analyse(&a, 0, simplicity::DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn zero_algebra_report() {
        let r = analyse(&Algebra::<Rational>::zero(3), 0, 32).unwrap();
        let p = &r.profile;
        assert!(p.left_symmetric && p.novikov && p.derivation && p.id4 && p.associative && p.commutative);
        let rad = r.radicals.unwrap();
        assert_eq!(rad.koszul_radical, vec!["e1", "e2", "e3"]);
        assert!(rad.complete);
    }

    #[test]
    fn json_is_stable() {
        let a = report("exp4").to_json();
        let b = report("exp4").to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["seed"], 0);
        assert_eq!(
            v["centers"]["lie_center"]["basis"],
            serde_json::json!(["e1", "e4"])
        );
    }

    #[test]
    fn text_lines() {
        let r = report("A21");
        assert_eq!(
            profile_line(&r.profile),
            "left-symmetric: yes; (4): yes; Novikov: no; derivation: no"
        );
        let a2 = report("A2");
        assert_eq!(
            render_simplicity(a2.simplicity.as_ref().unwrap()),
            "simple: yes (Norton certificate, seed 0)"
        );
        assert!(r.to_text().contains("radicals:"));
    }

    #[test]
    fn non_left_symmetric_sections_are_null() {
        let mut a = Algebra::<Rational>::zero(2);
        a.set_constant(0, 1, 0, Rational::from_int(1));
        a.set_constant(1, 1, 1, Rational::from_int(1));
        let r = analyse(&a, 0, 32).unwrap();
        if !r.profile.left_symmetric {
            assert!(r.lie.is_none() && r.radicals.is_none());
            assert!(!r.affine.homomorphism);
        }
    }
}
