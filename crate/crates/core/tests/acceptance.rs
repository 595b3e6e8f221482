//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use lsalg::catalog::{self, CatalogEntry};
use lsalg::lie;
use lsalg::probe::probe_rational;
use lsalg::radicals;
use lsalg::simplicity::{self, SimplicityVerdict};
use lsalg::verify::{self, SuiteReport};
use lsalg::{format, Algebra, Rational};
use serde_json::{json, Value};

const SEED: u64 = 0;

struct Criterion {
    name: &'static str,
    problems: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion {
            name,
            problems: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.problems.push(what.into());
        }
    }

    fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

fn entry(name: &str, params: &[Rational]) -> CatalogEntry {
    catalog::get_example(name, params).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn probe(a: &Algebra<Rational>, path: &str) -> Value {
    probe_rational(a, path, SEED).unwrap_or_else(|e| json!({ "error": e.to_string() }))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Values exactly as printed in the examples.
fn catalog_reproduction() -> Criterion {
    let mut c = Criterion::new("catalog reproduction");
    let mut expect = |name: &str, a: &Algebra<Rational>, path: &str, want: Value| {
        let got = probe(a, path);
        c.require(got == want, format!("{name} {path}: expected {want}, got {got}"));
    };

    let a21 = entry("A21", &[]).algebra;
    expect("A21", &a21, "profile.id4", json!(true));
    expect("A21", &a21, "profile.novikov", json!(false));
    expect("A21", &a21, "profile.derivation", json!(false));

    let a22 = entry("A22", &[]).algebra;
    expect("A22", &a22, "profile.novikov", json!(true));
    expect("A22", &a22, "profile.derivation", json!(false));
    expect("A22", &a22, "profile.id4", json!(false));

    for params in catalog::a3gamma_samples() {
        let gamma = params[2].clone();
        let a = entry("A3gamma", &params).algebra;
        let name = format!("A3gamma({gamma})");
        let zero = gamma == q(0, 1);
        expect(&name, &a, "profile.left_symmetric", json!(true));
        expect(&name, &a, "profile.derivation", json!(true));
        expect(&name, &a, "profile.id4", json!(zero));
        expect(&name, &a, "profile.novikov", json!(zero));
    }

    let exp4 = entry("exp4", &[]).algebra;
    expect("exp4", &exp4, "profile.id4", json!(true));
    expect("exp4", &exp4, "profile.novikov", json!(false));
    expect("exp4", &exp4, "profile.derivation", json!(false));
    expect("exp4", &exp4, "centers.lie_center", json!(["e1", "e4"]));
    expect("exp4", &exp4, "associator(e4,e4,e3)", json!("e1"));
    expect("exp4", &exp4, "within(center,lie_center)", json!(true));
    expect("exp4", &exp4, "equal(center,lie_center)", json!(false));

    let a4 = entry("A4", &[]).algebra;
    expect("A4", &a4, "centers.lie_center", json!(["e1"]));
    expect("A4", &a4, "centers.lie_center.left", json!(false));
    expect("A4", &a4, "centers.lie_center.right", json!(false));

    let d2 = entry("D2", &[]).algebra;
    expect("D2", &d2, "radicals.novikov", json!(["e2"]));
    expect("D2", &d2, "radicals.koszul", json!(["e2"]));
    expect("D2", &d2, "split.a0", json!([]));

    let a2 = entry("A2", &[]);
    expect("A2", &a2.algebra, "simple", json!(true));
    let iso = catalog::run_fixtures(&a2)
        .results
        .iter()
        .find(|r| r.path == catalog::ISO_PATH)
        .map(|r| r.actual.clone());
    c.require(
        iso == Some(json!(true)),
        format!("A2 complexification isomorphism: {iso:?}"),
    );
    c
}

fn property_criterion(name: &'static str, report: &SuiteReport, keys: &[&str], strict: bool) -> Criterion {
    let mut c = Criterion::new(name);
    for key in keys {
        let r = report
            .result(key)
            .unwrap_or_else(|| panic!("missing property {key}"));
        c.notes.push(format!(
            "{:<32} tested {:>4}  non-vacuous {:>4}  failed {:>3}",
            r.key,
            r.tested,
            r.non_vacuous,
            r.failures.len()
        ));
        // A refuted claim is still a failure of a criterion that demands it.
        if (strict || !r.refuted) && !r.failures.is_empty() {
            let (inst, msg) = &r.failures[0];
            c.problems.push(format!(
                "{} fails on {} instance(s), first {inst}: {msg}",
                r.key,
                r.failures.len()
            ));
        }
    }
    c
}

fn proposition_suite(report: &SuiteReport) -> Criterion {
    let keys = [
        "two_of_three",
        "commutative",
        "id4_solvable",
        "id4_derived_ideal",
        "opposite_novikov",
        "associative_novikov_solvable",
        "reduced_center",
        "center_novikov_derivation",
        "center_kills_derived",
        "center_identities",
        "center_ideal",
        "translational_center",
        "central_extension",
        "jacobi",
        "inner_two_step",
        "derivation_split",
        "translation_kernel_nonzero",
        "nonsingular_complete",
        "radical_ideal",
        "extension",
        "radical_complete",
        "left_nilpotent_in_radical",
        "right_radical_koszul",
        "right_radical_trace_kernel",
        "simple_commutative",
        "complete_novikov_not_simple",
        "complete_derivation_not_simple",
        "simple_novikov_closed",
    ];
    let mut c = property_criterion("proposition suite", report, &keys, true);
    let generated = report.instances - report.families.get("catalog").copied().unwrap_or(0);
    c.notes.insert(
        0,
        format!(
            "{} instances ({} generated, {} left-symmetric): {:?}",
            report.instances, generated, report.left_symmetric, report.families
        ),
    );
    c.require(generated >= 200, format!("only {generated} generated algebras"));
    for key in [
        "translation_kernel_nonzero",
        "nonsingular_complete",
        "inner_two_step",
        "derivation_split",
    ] {
        let r = report.result(key).expect("property exists");
        c.require(r.non_vacuous > 0, format!("{key} is vacuous on every instance"));
    }
    c
}

fn internal_consistency(report: &SuiteReport) -> Criterion {
    let keys = [
        "operator_forms",
        "affine_homomorphism",
        "reduced_center",
        "translations",
        "completeness_sampled",
    ];
    let mut c = property_criterion("internal consistency", report, &keys, true);
    c.notes
        .push(format!("{} random vectors per algebra", verify::RANDOM_VECTORS));
    c
}

fn simplicity_soundness(report: &SuiteReport) -> Criterion {
    let mut c = property_criterion("simplicity soundness", report, &["not_simple_witness"], true);
    let a2 = entry("A2", &[]).algebra;
    let verdict = simplicity::is_simple(&a2, 0, 32);
    c.require(
        matches!(verdict, Ok(SimplicityVerdict::Simple(_))),
        format!("A2 with seed 0, budget 32: {verdict:?}"),
    );
    for name in ["A4", "H3xR", "A3gamma"] {
        let e = if name == "A3gamma" {
            entry(name, &[q(0, 1), q(0, 1), q(0, 1)])
        } else {
            entry(name, &[])
        };
        let report = catalog::run_fixtures(&e);
        c.require(
            report.failures().count() == 0,
            format!("{name} has fixture failures"),
        );
        let persisting = report.findings.iter().filter(|f| f.persists).count();
        c.require(persisting > 0, format!("{name} emits no discrepancy finding"));
        c.notes.push(format!("{name}: {persisting} finding(s)"));
    }
    c
}

fn round_trips(instances: &[(String, &'static str, Algebra<Rational>)]) -> Criterion {
    let mut c = Criterion::new("round trips");
    let entries = catalog::catalog().expect("catalog builds");
    for e in &entries {
        let parsed = format::parse_as::<Rational>(&e.text);
        c.require(
            parsed.as_ref().ok() == Some(&e.algebra),
            format!("{}: fixture text does not parse back", e.name),
        );
        let again = format::parse_as::<Rational>(&format::serialize(&e.algebra));
        c.require(
            again.as_ref().ok() == Some(&e.algebra),
            format!("{}: serialize/parse is not the identity", e.name),
        );
    }
    let mut quotients = 0;
    for (label, _, a) in instances {
        c.require(
            a.opposite_negative().opposite_negative() == *a,
            format!("{label}: opposite-negative is not an involution"),
        );
        if !a.elementwise_profile().left_symmetric {
            continue;
        }
        let mut ideals = vec![radicals::koszul_radical(a).expect("left-symmetric")];
        ideals.push(lie::translation_kernel(a));
        ideals.push(a.square());
        for ideal in ideals {
            if !lie::ideal_flags(a, &ideal).expect("dimensions agree").two_sided {
                continue;
            }
            match lie::quotient(a, &ideal) {
                Ok(qt) => {
                    quotients += 1;
                    c.require(
                        qt.algebra.dim() + ideal.dim() == a.dim(),
                        format!("{label}: dim A != dim I + dim A/I"),
                    );
                    for v in ideal.basis() {
                        let zero = qt.project(v).expect("dimensions agree");
                        c.require(
                            zero.iter().all(|x| *x == q(0, 1)),
                            format!("{label}: ideal does not vanish in the quotient"),
                        );
                    }
                }
                Err(e) => c.problems.push(format!("{label}: quotient failed: {e}")),
            }
        }
    }
    c.notes.push(format!(
        "{} fixtures, {} instances, {quotients} quotients",
        entries.len(),
        instances.len()
    ));
    c
}

fn main() -> ExitCode {
    let start = Instant::now();
    let instances = verify::standard_instances(SEED).expect("instances build");
    let report = verify::standard_report(SEED).expect("suite runs");
    let criteria = [
        catalog_reproduction(),
        proposition_suite(&report),
        internal_consistency(&report),
        simplicity_soundness(&report),
        round_trips(&instances),
    ];
    let mut all = true;
    for (i, c) in criteria.iter().enumerate() {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        println!("criterion {} {status}: {}", i + 1, c.name);
        for n in &c.notes {
            println!("    {n}");
        }
        for p in &c.problems {
            println!("    problem: {p}");
        }
        all &= c.passed();
    }
    for f in report.findings() {
        println!(
            "finding: {} ({}) fails on {} instance(s)",
            f.key,
            f.statement,
            f.failures.len()
        );
    }
    println!("elapsed {:.1}s", start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
