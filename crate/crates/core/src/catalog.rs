//! Worked examples as fixtures.
//!
//! Every entry is stored as `.lsa` text and parsed on load, so the fixture
//! files and the CLI share one grammar. Each expectation pairs a property
//! path (see [`crate::probe`]) with the value it must produce and says where
//! that value comes from: a claim printed alongside the example, a trivial
//! observation, or a value derived here from the printed table by a named
//! oracle. Known conflicts between a printed table and the prose around it
//! are kept as [`Discrepancy`] records and re-evaluated on every run.

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::format;
use crate::linalg::{Gaussian, Matrix, Rational, Scalar};
use crate::probe;
use crate::simplicity::{self, DEFAULT_SEED};
use crate::{Error, Result};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Claimed in the text accompanying the example.
    Stated,
    /// Immediate from the definitions.
    Trivial,
    /// Computed from the printed table; the note names the oracle.
    Derived,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Stated => "stated",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expectation {
    pub path: String,
    pub expected: Value,
    pub provenance: Provenance,
    /// Verbatim quote of the claim, or the observation for trivial values.
    pub citation: String,
    /// Oracle for derived values, or any caveat.
    pub note: String,
}

/// A claim that the printed data does not support.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub summary: String,
    /// Evaluated on the printed table when it differs from the fixture.
    pub on_printed_table: bool,
    pub path: String,
    pub claimed: Value,
}

/// The printed basis change claimed to give an isomorphism after
/// complexification.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoFixture {
    /// Target table over `Qi`.
    pub target: String,
    /// New basis vectors in old coordinates.
    pub basis: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    /// Fixture source in `.lsa` syntax.
    pub text: String,
    pub algebra: Algebra<Rational>,
    /// Table exactly as printed, when the fixture had to complete it.
    pub printed: Option<Algebra<Rational>>,
    pub expectations: Vec<Expectation>,
    pub discrepancy_log: Vec<Discrepancy>,
    pub iso: Option<IsoFixture>,
}

/// Path that checks [`CatalogEntry::iso`].
pub const ISO_PATH: &str = "complexified.iso_witness";

/// One evaluated expectation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectationResult {
    pub path: String,
    pub expected: Value,
    pub actual: Value,
    pub provenance: Provenance,
    pub citation: String,
    pub note: String,
    pub passed: bool,
}

/// One re-evaluated discrepancy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub entry: String,
    pub summary: String,
    pub path: String,
    pub claimed: Value,
    pub computed: Value,
    /// The computed value still contradicts the claim.
    pub persists: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub results: Vec<ExpectationResult>,
    pub findings: Vec<Finding>,
}

impl FixtureReport {
    pub fn failures(&self) -> impl Iterator<Item = &ExpectationResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

struct Builder {
    expectations: Vec<Expectation>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            expectations: Vec::new(),
        }
    }

    fn push(&mut self, p: Provenance, path: &str, expected: Value, citation: &str, note: &str) -> &mut Self {
        self.expectations.push(Expectation {
            path: path.into(),
            expected,
            provenance: p,
            citation: citation.into(),
            note: note.into(),
        });
        self
    }

    fn stated(&mut self, path: &str, expected: Value, citation: &str) -> &mut Self {
        self.push(Provenance::Stated, path, expected, citation, "")
    }

    fn stated_note(&mut self, path: &str, expected: Value, citation: &str, note: &str) -> &mut Self {
        self.push(Provenance::Stated, path, expected, citation, note)
    }

    fn trivial(&mut self, path: &str, expected: Value, why: &str) -> &mut Self {
        self.push(Provenance::Trivial, path, expected, why, "")
    }

    fn derived(&mut self, path: &str, expected: Value, oracle: &str) -> &mut Self {
        self.push(Provenance::Derived, path, expected, "", oracle)
    }
}

const TRIPLES: &str = "exhaustive basis-triple evaluation";
const TABLE: &str = "read from the table by bilinearity";
const SOLVE: &str = "linear-system solve";
const ITERATE: &str = "iteration to a fixed point";
const TRACES: &str = "traces of the right multiplications";

fn entry(name: &str, text: &str, b: &mut Builder) -> Result<CatalogEntry> {
    Ok(CatalogEntry {
        name: name.into(),
        text: text.into(),
        algebra: format::parse_as::<Rational>(text)?.with_name(name),
        printed: None,
        expectations: std::mem::take(&mut b.expectations),
        discrepancy_log: Vec::new(),
        iso: None,
    })
}

fn flags(b: &mut Builder, pairs: &[(&str, bool)], citation: &str) {
    for (key, v) in pairs {
        b.stated(&format!("profile.{key}"), json!(v), citation);
    }
}

const A21: &str = "\
# A21
dim 2
field Q
e1*e1 = e1
e1*e2 = e2
";

fn a21() -> Result<CatalogEntry> {
    let mut b = Builder::new();
    b.stated(
        "profile.left_symmetric",
        json!(true),
        "multiplication table: e1·e1=e1, e1·e2=e2",
    )
    .stated("bracket(e1,e2)", json!("e2"), "[e1,e2]=e2");
    flags(
        &mut b,
        &[("id4", true), ("novikov", false), ("derivation", false)],
        "satisfies (4) but A21 is neither Novikov nor derivation",
    );
    b.stated(
        "radicals.complete",
        json!(false),
        "Of course, A21 is not complete",
    )
    .derived("radicals.right_traces", json!(["1", "0"]), TRACES)
    .derived("radicals.trace_kernel", json!(["e2"]), TRACES)
    .derived("radicals.koszul", json!(["e2"]), ITERATE)
    .stated(
        "radicals.derived_in_radical",
        json!(true),
        "R(A) is a two-sided ideal of A containing the derived ideal",
    )
    .stated(
        "ideal(koszul).two_sided",
        json!(true),
        "two-sided ideal of A containing",
    )
    .stated("ideal(derived).two_sided", json!(true), "is a two-sided ideal of")
    .derived("L(e1)", json!([["1", "0"], ["0", "1"]]), TABLE)
    .derived("L(e2)", json!([["0", "0"], ["0", "0"]]), TABLE)
    .derived("associator(e1,e1,e2)", json!("0"), TABLE)
    .derived("profile.associative", json!(true), TRIPLES)
    .stated(
        "opposite_negative.profile.novikov",
        json!(true),
        "A satisfies (4) if and only if (A,∘) is Novikov",
    )
    .derived(
        "opposite_negative.lsa",
        json!("dim 2\nfield Q\ne1*e1 = -e1\ne2*e1 = -e2\n"),
        "sign-flip transposition of the table",
    )
    .derived("lie.solvable_class", json!(2), ITERATE)
    .derived("lie.nilpotent_class", Value::Null, ITERATE)
    .derived("lie.lower_central(3)", json!(["e2"]), ITERATE)
    .derived("space(closure(span(e2)))", json!(["e2"]), ITERATE)
    .derived(
        "multiplication.radical_dim",
        json!(1),
        "trace-form kernel of the multiplication algebra",
    )
    .derived("simple", json!(false), "verified ideal witness")
    .derived("simple.witness", json!(["e2"]), "verified ideal witness")
    .derived(
        "quotient(koszul).lsa",
        json!("dim 1\nfield Q\ne1*e1 = e1\n"),
        "projection of the table",
    )
    .stated(
        "quotient(koszul).profile.commutative",
        json!(true),
        "extension of a commutative associative algebra by a complete",
    )
    .stated(
        "quotient(koszul).profile.associative",
        json!(true),
        "extension of a commutative associative algebra by a complete",
    )
    .derived("translations", json!(true), "L vanishes on a basis of [A,A]")
    .derived(
        "affine_homomorphism",
        json!(true),
        "affine matrices compared on basis pairs",
    );
    entry("A21", A21, &mut b)
}

const A22: &str = "\
# A22
dim 2
field Q
e1*e1 = -e1
e2*e1 = -e2
";

fn a22() -> Result<CatalogEntry> {
    let mut b = Builder::new();
    b.stated(
        "profile.left_symmetric",
        json!(true),
        "multiplication table: e1·e1=−e1, e2·e1=−e2",
    )
    .stated("bracket(e1,e2)", json!("e2"), "[e1,e2]=e2");
    flags(
        &mut b,
        &[("novikov", true), ("derivation", false), ("id4", false)],
        "A22 is a Novikov algebra which is not derivation and does not satisfy (4)",
    );
    b.derived("R(e1)", json!([["-1", "0"], ["0", "-1"]]), TABLE)
        .stated("equal(center,lie_center)", json!(true), "then Z(A)=𝒵_A")
        .derived("radicals.trace_kernel", json!(["e2"]), TRACES)
        .derived("radicals.koszul", json!(["e2"]), ITERATE)
        .derived("radicals.novikov", json!(["e2"]), TRACES)
        .stated("equal(novikov,koszul)", json!(true), "N(A)=R(A)=I(A)")
        .derived("nilpotent(span(e2)).right", json!(true), "R_e2 = 0 in the table")
        .derived("nilpotent(whole).right", json!(false), "tr R_e1 = −2")
        .stated("translations", json!(false), "does not satisfy (4)")
        .derived("complexified.profile.novikov", json!(true), TRIPLES)
        .derived("complexified.profile.id4", json!(false), TRIPLES);
    entry("A22", A22, &mut b)
}

fn render_params(p: &[Rational]) -> String {
    p.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
}

/// `A3gamma` with the missing product `e1·e3 = e3` added.
fn a3gamma(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<CatalogEntry> {
    let z = Rational::from_int(0);
    let one = Rational::from_int(1);
    let printed = Algebra::from_products(
        3,
        [
            (0, 0, vec![z.clone(), alpha.clone(), beta.clone()]),
            (0, 1, vec![z.clone(), one.clone(), gamma.clone()]),
            (1, 0, vec![z.clone(), z.clone(), gamma.clone()]),
        ],
    )?;
    let mut completed = printed.clone();
    completed.set_constant(0, 2, 2, one);
    let name = format!(
        "A3gamma({})",
        render_params(&[alpha.clone(), beta.clone(), gamma.clone()])
    );
    let text = format!(
        "# {name}\n# e1*e3 = e3 restores [e1,e3] = e3, which the printed table omits\n{}",
        format::serialize(&completed)
    );
    let flat = gamma.is_zero();
    let mut b = Builder::new();
    b.derived("profile.left_symmetric", json!(true), TRIPLES)
        .stated(
            "profile.derivation",
            json!(true),
            "A3,γ is a derivation algebra for any γ",
        )
        .stated(
            "profile.id4",
            json!(flat),
            "A3,γ satisfies (4) if and only if γ=0",
        )
        .stated(
            "profile.novikov",
            json!(flat),
            "A3,γ is Novikov if and only if γ=0",
        )
        .stated("bracket(e1,e2)", json!("e2"), "[e1,e2]=e2")
        .stated_note(
            "bracket(e1,e3)",
            json!("e3"),
            "[e1,e3]=e3",
            "holds only on the completed table",
        )
        .derived("lie.derived_algebra", json!(["e2", "e3"]), ITERATE)
        .derived("lie.nilpotent_class", Value::Null, ITERATE)
        .derived("centers.algebra_center", json!([]), SOLVE)
        .derived(
            "centers.translation_kernel",
            json!(if flat { vec!["e2", "e3"] } else { vec!["e3"] }),
            SOLVE,
        )
        .derived("radicals.right_traces", json!(["0", "0", "0"]), TRACES)
        .derived("radicals.complete", json!(true), TRACES)
        .derived(
            "split.a0",
            json!(["e1", "e2", "e3"]),
            "idempotents of the center, which is zero",
        )
        .derived(
            "split.a_star",
            json!([]),
            "idempotents of the center, which is zero",
        );
    let mut e = entry(&name, &text, &mut b)?;
    e.printed = Some(printed.with_name(format!("{name} as printed")));
    e.discrepancy_log.push(Discrepancy {
        summary: "the printed table gives no product producing [e1,e3]=e3; the fixture adds e1*e3 = e3"
            .into(),
        on_printed_table: true,
        path: "bracket(e1,e3)".into(),
        claimed: json!("e3"),
    });
    if !flat {
        e.discrepancy_log.push(Discrepancy {
            summary: "the printed table is not left-symmetric when γ is nonzero".into(),
            on_printed_table: true,
            path: "profile.left_symmetric".into(),
            claimed: json!(true),
        });
    }
    Ok(e)
}

const EXP4: &str = "\
# exp4
dim 4
field Q
e2*e3 = e1
e3*e4 = e1
e4*e3 = e1
e4*e4 = e2
";

fn exp4() -> Result<CatalogEntry> {
    let mut b = Builder::new();
    b.stated(
        "profile.left_symmetric",
        json!(true),
        "define a left-symmetric product as follows",
    );
    flags(
        &mut b,
        &[("id4", true), ("novikov", false), ("derivation", false)],
        "A satisfies (4) ... A is neither Novikov nor derivation",
    );
    b.stated("product(e2,e3)", json!("e1"), "e2·e3=e3·e4=e4·e3=e1")
        .stated("product(e4,e4)", json!("e2"), "e4·e4=e2")
        .derived("product(e2+e4,e3)", json!("2*e1"), TABLE)
        .stated("space(derived)", json!(["e1"]), "[A,A]=ℝe1")
        .stated("L(e1)", json!(vec![vec!["0"; 4]; 4]), "L_{e1}=0")
        .stated("lie.center", json!(["e1", "e4"]), "𝒵_A=span{e1,e4}")
        .stated(
            "associator(e4,e4,e3)",
            json!("e1"),
            "(e4,e4,e3) = e2·e3−e4·e1 = e1",
        )
        .derived("centers.algebra_center", json!(["e1"]), SOLVE)
        .stated("equal(center,lie_center)", json!(false), "Z(A) ≠ 𝒵_A")
        .derived("centers.translation_kernel", json!(["e1"]), SOLVE)
        .derived("centers.translational_center", json!(["e1"]), SOLVE)
        .stated(
            "within(lower_central(1),translational_center)",
            json!(true),
            "In particular C(A)≠{0}",
        )
        .derived("lie.nilpotent_class", json!(2), ITERATE)
        .derived("lie.lower_central(1)", json!(["e1"]), ITERATE)
        .derived(
            "lie.nonsingular",
            json!(false),
            "center compared with the last nonzero lower central term",
        )
        .stated(
            "radicals.complete",
            json!(true),
            "a complete left-symmetric algebra satisfying (4) which is neither Novikov nor derivation",
        )
        .derived(
            "quotient(span(e1)).lsa",
            json!("dim 3\nfield Q\ne3*e3 = e1\n"),
            "projection of the table",
        )
        .stated(
            "quotient(span(e1)).profile.id4",
            json!(true),
            "a central extension of a left-symmetric algebra satisfying (4)",
        )
        .derived("nilpotent(derived).left", json!(true), "L_e1 = 0 in the table")
        .derived("nilpotent(derived).left_index", json!(1), "L_e1 = 0 in the table")
        .derived("translations", json!(true), "L vanishes on a basis of [A,A]");
    entry("exp4", EXP4, &mut b)
}

const A4: &str = "\
# A4
dim 4
field Q
e1*e4 = e2
e4*e1 = e2
e2*e3 = e1
e2*e4 = -e3
e3*e3 = e2
";

fn a4() -> Result<CatalogEntry> {
    let mut b = Builder::new();
    b.stated(
        "profile.left_symmetric",
        json!(true),
        "four-dimensional real left-symmetric algebra",
    );
    flags(
        &mut b,
        &[("id4", false), ("novikov", false), ("derivation", false)],
        "does not satisfy (4) and is neither Novikov nor derivation",
    );
    b.stated("product(e4,e1)", json!("e2"), "e1·e4=e4·e1=e2")
        .stated("lie.center", json!(["e1"]), "𝒵_{A4}=ℝe1")
        .stated(
            "centers.lie_center.left",
            json!(false),
            "is neither a left ideal nor a right ideal",
        )
        .stated(
            "centers.lie_center.right",
            json!(false),
            "is neither a left ideal nor a right ideal",
        )
        .derived("associator(e1,e4,e3)", json!("e1"), TABLE)
        .derived("centers.algebra_center", json!([]), SOLVE)
        .derived("centers.translation_kernel", json!([]), SOLVE);
    let mut e = entry("A4", A4, &mut b)?;
    e.discrepancy_log.push(Discrepancy {
        summary: "claimed Z(A4) = 𝒵 = span{e1}, but (e1,e4,e3) = e2·e3 = e1 excludes e1 from Z(A4)".into(),
        on_printed_table: false,
        path: "centers.algebra_center".into(),
        claimed: json!(["e1"]),
    });
    Ok(e)
}

const H3XR: &str = "\
# H3xR
dim 4
field Q
e2*e3 = e1
e3*e2 = 2*e1
e3*e3 = e4
e3*e4 = e2
e4*e3 = e2
e4*e4 = 2*e1
";

fn h3xr() -> Result<CatalogEntry> {
    let mut b = Builder::new();
    b.stated(
        "profile.left_symmetric",
        json!(true),
        "define a left-symmetric product as follows",
    );
    flags(
        &mut b,
        &[("id4", true), ("novikov", false), ("derivation", false)],
        "A satisfies (4) ... A is neither Novikov nor derivation",
    );
    b.stated("space(derived)", json!(["e1"]), "[A,A]=ℝe1")
        .stated("L(e1)", json!(vec![vec!["0"; 4]; 4]), "L_{e1}=0")
        .stated("lie.center", json!(["e1", "e4"]), "𝒵_A=span{e1,e4}")
        .stated(
            "centers.lie_center.left",
            json!(false),
            "is neither a left ideal nor a right ideal",
        )
        .stated(
            "centers.lie_center.right",
            json!(false),
            "is neither a left ideal nor a right ideal",
        )
        .derived("bracket(e2,e3)", json!("-e1"), TABLE)
        .derived("associator(e4,e3,e3)", json!("-e1"), TABLE)
        .derived("centers.algebra_center", json!(["e1"]), SOLVE)
        .derived(
            "centers.algebra_center.two_sided",
            json!(true),
            "closure of the center under both products",
        )
        .derived("radicals.complete", json!(true), TRACES);
    let mut e = entry("H3xR", H3XR, &mut b)?;
    e.discrepancy_log.extend([
        Discrepancy {
            summary: "announced [e2,e3]=e1, but e2·e3 − e3·e2 = e1 − 2e1 = −e1".into(),
            on_printed_table: false,
            path: "bracket(e2,e3)".into(),
            claimed: json!("e1"),
        },
        Discrepancy {
            summary: "claimed Z(A) = 𝒵 = span{e1,e4}, but (e4,e3,e3) = −e1 excludes e4".into(),
            on_printed_table: false,
            path: "centers.algebra_center".into(),
            claimed: json!(["e1", "e4"]),
        },
        Discrepancy {
            summary: "claimed Z(A) is not a left ideal; the computed Z(A) = span{e1} is two-sided".into(),
            on_printed_table: false,
            path: "centers.algebra_center.left".into(),
            claimed: json!(false),
        },
    ]);
    Ok(e)
}

const D2: &str = "\
# D2
dim 2
field Q
e1*e1 = e1
e1*e2 = e2
e2*e1 = e2
";

fn d2() -> Result<CatalogEntry> {
    let mut b = Builder::new();
    b.stated(
        "profile.commutative",
        json!(true),
        "the Lie algebra associated to A is commutative",
    );
    flags(
        &mut b,
        &[("derivation", true), ("novikov", true), ("id4", true)],
        "A is a derivation algebra (it is also Novikov and satisfies (4))",
    );
    b.derived("radicals.right_traces", json!(["2", "0"]), TRACES)
        .derived("radicals.trace_kernel", json!(["e2"]), TRACES)
        .stated("radicals.novikov", json!(["e2"]), "N(A)=R(A)=𝔽e2")
        .stated("radicals.koszul", json!(["e2"]), "N(A)=R(A)=𝔽e2")
        .stated("split.a0", json!([]), "we see that A0={0}")
        .derived(
            "split.a_star",
            json!(["e1", "e2"]),
            "idempotent of the center by minimal-polynomial splitting",
        )
        .derived(
            "split.idempotent",
            json!("e1"),
            "idempotent of the center by minimal-polynomial splitting",
        )
        .stated("within(a0,koszul)", json!(true), "A0⊊R(A)")
        .stated("equal(a0,koszul)", json!(false), "A0⊊R(A)")
        .derived(
            "quotient(novikov).lsa",
            json!("dim 1\nfield Q\ne1*e1 = e1\n"),
            "projection of the table",
        );
    entry("D2", D2, &mut b)
}

const A2: &str = "\
# A2
dim 2
field Q
e1*e1 = e1
e1*e2 = e2
e2*e1 = e2
e2*e2 = -e1
";

const TWO_FIELDS: &str = "\
dim 2
field Qi
e1*e1 = e1
e2*e2 = e2
";

fn a2() -> Result<CatalogEntry> {
    let transfer = "checked over Q; x^2 + 1 has no rational root, so the real argument applies verbatim";
    let mut b = Builder::new();
    flags(
        &mut b,
        &[("commutative", true), ("associative", true)],
        "two-dimensional commutative associative algebra",
    );
    b.stated(
        "profile.novikov",
        json!(true),
        "Being commutative, A2 is a Novikov algebra",
    )
    .stated_note("simple", json!(true), "A_{2,ℝ} is simple", transfer)
    .stated("space(square)", json!(["e1", "e2"]), "we have A²=A")
    .stated(
        "complexified.simple",
        json!(false),
        "A_{2,ℂ} is a direct sum of fields",
    )
    .stated(
        ISO_PATH,
        json!(true),
        "e1′=½(e1+ie2), e2′=½(e1−ie2) ... A_{2,ℂ}≅ℂ⊕ℂ",
    )
    .derived(
        "complexified.simple.witness_dim",
        json!(1),
        "verified ideal witness",
    )
    .stated(
        "radicals.complete",
        json!(false),
        "A_{2,ℝ} and the field 𝔽 are not complete",
    )
    .derived("radicals.right_traces", json!(["2", "0"]), TRACES)
    .derived("radicals.trace_kernel", json!(["e2"]), TRACES)
    .derived(
        "radicals.novikov",
        json!([]),
        "largest ideal of elements with nilpotent R_x",
    )
    .derived("radicals.koszul", json!([]), ITERATE)
    .derived(
        "multiplication.closure_dim",
        json!(2),
        "span of products of the generators",
    )
    .derived("space(closure(span(e1)))", json!(["e1", "e2"]), ITERATE);
    let mut e = entry("A2", A2, &mut b)?;
    e.discrepancy_log.push(Discrepancy {
        summary: "N(A)=R(A)=I(A) is claimed for every Novikov algebra, but I(A2) = span{e2} is not an ideal \
                  (e2·e2 = −e1) while N(A2) = R(A2) = 0"
            .into(),
        on_printed_table: false,
        path: "equal(novikov,trace_kernel)".into(),
        claimed: json!(true),
    });
    e.iso = Some(IsoFixture {
        target: TWO_FIELDS.into(),
        basis: vec!["1/2*e1 + (0)+(1/2)i*e2".into(), "1/2*e1 + (0)+(-1/2)i*e2".into()],
    });
    Ok(e)
}

const FIELD: &str = "\
# field
dim 1
field Q
e1*e1 = e1
";

fn field() -> Result<CatalogEntry> {
    let mut b = Builder::new();
    for key in [
        "left_symmetric",
        "novikov",
        "derivation",
        "id4",
        "associative",
        "commutative",
    ] {
        b.trivial(&format!("profile.{key}"), json!(true), "commutative associative");
    }
    b.trivial("simple", json!(true), "a field has no proper ideal")
        .stated(
            "radicals.complete",
            json!(false),
            "A_{2,ℝ} and the field 𝔽 are not complete",
        );
    entry("field", FIELD, &mut b)
}

const H3HALF: &str = "\
# H3half
dim 3
field Q
e2*e3 = 1/2*e1
e3*e2 = -1/2*e1
";

fn h3half() -> Result<CatalogEntry> {
    let mut b = Builder::new();
    b.stated("profile.id4", json!(true), "Then, A satisfies (4)")
        .derived(
            "bracket(e2,e3)",
            json!("e1"),
            "x·y = ½[x,y] on the Heisenberg bracket",
        )
        .derived("profile.derivation", json!(true), TRIPLES)
        .derived("lie.nilpotent_class", json!(2), ITERATE)
        .derived(
            "lie.nonsingular",
            json!(true),
            "center compared with the last nonzero lower central term",
        )
        .stated(
            "radicals.complete",
            json!(true),
            "every derivation algebra whose Lie algebra is nonsingular nilpotent is complete",
        )
        .stated(
            "within(lower_central(1),translational_center)",
            json!(true),
            "In particular C(A)≠{0}",
        )
        .derived("centers.translational_center", json!(["e1"]), SOLVE);
    entry("H3half", H3HALF, &mut b)
}

fn zero(dim: usize) -> Result<CatalogEntry> {
    if dim == 0 {
        return Err(Error::MissingParameter("dim >= 1".into()));
    }
    let text = format!("# zero{dim}\ndim {dim}\nfield Q\n");
    let whole: Vec<String> = (1..=dim).map(|k| format!("e{k}")).collect();
    let mut b = Builder::new();
    for key in [
        "left_symmetric",
        "novikov",
        "derivation",
        "id4",
        "associative",
        "commutative",
    ] {
        b.trivial(
            &format!("profile.{key}"),
            json!(true),
            "every identity reads 0 = 0",
        );
    }
    b.trivial("centers.translation_kernel", json!(whole), "all products vanish")
        .trivial(
            "centers.translational_center",
            json!(whole),
            "all products vanish",
        )
        .trivial("centers.algebra_center", json!(whole), "all associators vanish")
        .trivial("radicals.koszul", json!(whole), "R_a = 0")
        .trivial("radicals.novikov", json!(whole), "all traces vanish")
        .trivial("radicals.complete", json!(true), "R_a = 0")
        .trivial("split.a0", json!(whole), "no nonzero idempotent")
        .trivial("split.a_star", json!([]), "no nonzero idempotent")
        .trivial("lie.solvable_class", json!(1), "all brackets vanish")
        .trivial("lie.nilpotent_class", json!(1), "all brackets vanish")
        .trivial(
            "lie.nonsingular",
            Value::Null,
            "abelian Lie algebras are outside the definition",
        )
        .trivial("translations", json!(true), "[A,A] = 0")
        .trivial("simple", json!(false), "zero product")
        .trivial("multiplication.closure_dim", json!(0), "all generators vanish");
    entry(&format!("zero{dim}"), &text, &mut b)
}

fn rational_param(params: &[Rational], k: usize, name: &str) -> Result<Rational> {
    params
        .get(k)
        .cloned()
        .ok_or_else(|| Error::MissingParameter(name.into()))
}

/// Look up an example by name. `A3gamma` takes `(alpha, beta, gamma)` and
/// `zero` takes the dimension.
pub fn get_example(name: &str, params: &[Rational]) -> Result<CatalogEntry> {
    match name {
        "A21" => a21(),
        "A22" => a22(),
        "A3gamma" => a3gamma(
            &rational_param(params, 0, "alpha")?,
            &rational_param(params, 1, "beta")?,
            &rational_param(params, 2, "gamma")?,
        ),
        "exp4" => exp4(),
        "A4" => a4(),
        "H3xR" => h3xr(),
        "D2" => d2(),
        "A2" => a2(),
        "field" => field(),
        "H3half" => h3half(),
        "zero" => {
            let d = rational_param(params, 0, "dim")?;
            let d = d
                .to_integer()
                .try_into()
                .ok()
                .filter(|_| d.is_integer())
                .ok_or_else(|| Error::MissingParameter("dim must be a positive integer".into()))?;
            zero(d)
        }
        _ => Err(Error::UnknownExample(name.into())),
    }
}

/// Names accepted by [`get_example`].
pub const NAMES: &[&str] = &[
    "A21", "A22", "A3gamma", "exp4", "A4", "H3xR", "D2", "A2", "field", "H3half", "zero",
];

/// Parameters at which `A3gamma` is instantiated: `γ = 0` and three
/// nonzero values.
pub fn a3gamma_samples() -> Vec<[Rational; 3]> {
    let r = Rational::from_ratio;
    vec![
        [r(0, 1), r(0, 1), r(0, 1)],
        [r(1, 1), r(2, 1), r(1, 2)],
        [r(-1, 1), r(0, 1), r(3, 1)],
        [r(0, 1), r(1, 1), r(-2, 3)],
    ]
}

/// Every fixture, sorted by name.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for name in NAMES {
        match *name {
            "A3gamma" => {
                for p in a3gamma_samples() {
                    out.push(get_example(name, &p)?);
                }
            }
            "zero" => out.push(get_example(name, &[Rational::from_int(3)])?),
            _ => out.push(get_example(name, &[])?),
        }
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

fn iso_value(entry: &CatalogEntry) -> Result<Value> {
    let iso = entry
        .iso
        .as_ref()
        .ok_or_else(|| Error::InternalConsistency(format!("{} has no isomorphism fixture", entry.name)))?;
    let a = simplicity::complexify(&entry.algebra);
    let target = format::parse_as::<Gaussian>(&iso.target)?;
    let cols = iso
        .basis
        .iter()
        .map(|v| format::parse_vector::<Gaussian>(v, a.dim()))
        .collect::<Result<Vec<_>>>()?;
    // Q maps new coordinates to old; the isomorphism is its inverse.
    let q = Matrix::from_columns(a.dim(), &cols)?;
    Ok(json!(simplicity::iso_witness(&a, &target, &q.inverse()?)?))
}

fn evaluate(entry: &CatalogEntry, path: &str) -> Value {
    let r = if path == ISO_PATH {
        iso_value(entry)
    } else {
        probe::probe_rational(&entry.algebra, path, DEFAULT_SEED)
    };
    r.unwrap_or_else(|e| json!({ "error": e.to_string() }))
}

/// Evaluate every expectation and re-check every logged discrepancy.
pub fn run_fixtures(entry: &CatalogEntry) -> FixtureReport {
    let results = entry
        .expectations
        .iter()
        .map(|x| {
            let actual = evaluate(entry, &x.path);
            ExpectationResult {
                path: x.path.clone(),
                passed: actual == x.expected,
                expected: x.expected.clone(),
                actual,
                provenance: x.provenance,
                citation: x.citation.clone(),
                note: x.note.clone(),
            }
        })
        .collect();
    let findings = entry
        .discrepancy_log
        .iter()
        .map(|d| {
            let computed = match (&entry.printed, d.on_printed_table) {
                (Some(p), true) => probe::probe_rational(p, &d.path, DEFAULT_SEED)
                    .unwrap_or_else(|e| json!({ "error": e.to_string() })),
                _ => evaluate(entry, &d.path),
            };
            Finding {
                entry: entry.name.clone(),
                summary: d.summary.clone(),
                path: d.path.clone(),
                persists: computed != d.claimed,
                claimed: d.claimed.clone(),
                computed,
            }
        })
        .collect();
    FixtureReport {
        name: entry.name.clone(),
        results,
        findings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_passes() {
        for e in catalog().unwrap() {
            let report = run_fixtures(&e);
            let failures: Vec<_> = report.failures().collect();
            assert!(failures.is_empty(), "{}: {failures:#?}", e.name);
        }
    }

    #[test]
    fn lookup_errors() {
        assert!(matches!(get_example("B7", &[]), Err(Error::UnknownExample(_))));
        assert!(matches!(
            get_example("A3gamma", &[Rational::from_int(1), Rational::from_int(2)]),
            Err(Error::MissingParameter(p)) if p == "gamma"
        ));
        assert!(matches!(
            get_example("zero", &[]),
            Err(Error::MissingParameter(_))
        ));
        assert!(matches!(
            get_example("zero", &[Rational::from_ratio(1, 2)]),
            Err(Error::MissingParameter(_))
        ));
    }

    #[test]
    fn fixtures_round_trip_through_text() {
        for e in catalog().unwrap() {
            let again: Algebra<Rational> = format::parse_as(&format::serialize(&e.algebra)).unwrap();
            assert_eq!(again, e.algebra, "{}", e.name);
        }
    }

    #[test]
    fn discrepancies_persist() {
        let mut findings = Vec::new();
        for e in catalog().unwrap() {
            findings.extend(run_fixtures(&e).findings);
        }
        assert!(findings.iter().all(|f| f.persists), "{findings:#?}");
        for name in ["A4", "H3xR", "A3gamma(0,0,0)", "A2"] {
            assert!(findings.iter().any(|f| f.entry == name), "{name}");
        }
    }

    #[test]
    fn every_derived_value_names_an_oracle() {
        for e in catalog().unwrap() {
            for x in &e.expectations {
                match x.provenance {
                    Provenance::Derived => assert!(!x.note.is_empty(), "{} {}", e.name, x.path),
                    _ => assert!(!x.citation.is_empty(), "{} {}", e.name, x.path),
                }
            }
        }
    }

    #[test]
    fn spec_example_lookups() {
        let a21 = get_example("A21", &[]).unwrap();
        assert_eq!(a21.algebra.dim(), 2);
        assert!(a21.expectations.iter().any(|x| x.path == "profile.id4"
            && x.expected == json!(true)
            && x.provenance == Provenance::Stated));
        let z = Rational::from_int(0);
        let a3 = get_example("A3gamma", &[z.clone(), z.clone(), z]).unwrap();
        assert!(a3.algebra.identity_profile().unwrap().novikov);
        let zero = get_example("zero", &[Rational::from_int(3)]).unwrap();
        assert!(zero.algebra.is_zero_product());
    }
}
