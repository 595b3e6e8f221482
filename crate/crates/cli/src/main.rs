//! `lsalg`: analyse finite-dimensional algebras given by structure constants.
//!
//! Exit codes: 0 success, 1 property or fixture failure, 2 input error,
//! 3 simplicity undecided within the budget.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lsalg::catalog;
use lsalg::format::{self, AnyAlgebra};
use lsalg::report::{self, AnalysisReport};
use lsalg::simplicity::{self, DEFAULT_BUDGET, DEFAULT_SEED};
use lsalg::verify;
use lsalg::{lie, probe, Algebra, Error, Scalar};

/// `print!` that ignores a closed stdout instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = write!(std::io::stdout().lock(), $($arg)*);
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

const FAILURE: u8 = 1;
const INPUT: u8 = 2;
const UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "lsalg", version, about = "Exact analysis of left-symmetric algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the identity profile.
    Check { file: PathBuf },
    /// Full analysis: profile, Lie data, centers, radicals, simplicity, affine certificate.
    Report {
        file: PathBuf,
        /// Emit the JSON report.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Trace kernel, Koszul radical, right radical and derivation split.
    Radicals {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Decide simplicity with a certificate or an ideal witness.
    Simple {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Quotient by an ideal, e.g. `--ideal koszul` or `--ideal "span(e1, e2)"`.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run the example fixtures and the property suite.
    VerifyPaper {
        /// Only fixtures and instances whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::FieldMismatch { .. }
            | Error::DimensionMismatch { .. }
            | Error::UnknownExample(_)
            | Error::MissingParameter(_)
            | Error::EmptyAlgebra => INPUT,
            Error::Undecided { .. } => UNDECIDED,
            _ => FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn load(path: &PathBuf) -> Result<AnyAlgebra, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    format::parse(&text).map_err(|e| Failure {
        code: INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

/// Run `f` on the algebra over whichever field the file names.
macro_rules! with_algebra {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            AnyAlgebra::Rational($a) => $body,
            AnyAlgebra::Gaussian($a) => $body,
        }
    };
}

fn check<F: Scalar>(a: &Algebra<F>) -> Outcome {
    outln!("{}", report::profile_line(&report::profile_section(a)?));
    Ok(0)
}

fn full_report<F: Scalar>(a: &Algebra<F>, json: bool, seed: u64, budget: usize) -> Outcome {
    let r: AnalysisReport = report::analyse(a, seed, budget)?;
    if json {
        outln!("{}", r.to_json());
    } else {
        out!("{}", r.to_text());
    }
    let undecided = r.simplicity.as_ref().is_some_and(|s| s.verdict == "undecided");
    Ok(if undecided { UNDECIDED } else { 0 })
}

fn radicals<F: Scalar>(a: &Algebra<F>, seed: u64) -> Outcome {
    out!("{}", report::render_radicals(&report::radicals_section(a, seed)?));
    Ok(0)
}

fn simple<F: Scalar>(a: &Algebra<F>, seed: u64, budget: usize) -> Outcome {
    let v = simplicity::is_simple(a, seed, budget)?;
    let s = report::simplicity_section(&v, seed, budget);
    outln!("{}", report::render_simplicity(&s));
    Ok(if v.is_simple().is_none() { UNDECIDED } else { 0 })
}

fn quotient<F: Scalar>(a: &Algebra<F>, spec: &str, seed: u64) -> Outcome {
    let ideal = probe::subspace(a, spec, seed).map_err(|e| Failure {
        code: INPUT,
        message: format!("--ideal {spec}: {e}"),
    })?;
    let q = lie::quotient(a, &ideal)?;
    outln!("# ideal {}", format::render_subspace(&ideal).join(", "));
    outln!(
        "# dim A = {} = dim I + dim A/I = {} + {}",
        a.dim(),
        ideal.dim(),
        q.algebra.dim()
    );
    out!("{}", format::serialize(&q.algebra));
    Ok(0)
}

fn verify_paper(filter: Option<&str>, seed: u64) -> Outcome {
    let keep = |name: &str| filter.is_none_or(|f| name.contains(f));
    let mut failures = 0usize;

    outln!("== fixtures");
    let entries = catalog::catalog()?;
    let mut entries: Vec<_> = entries.into_iter().filter(|e| keep(&e.name)).collect();
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    let mut findings = Vec::new();
    for e in &entries {
        let r = catalog::run_fixtures(e);
        let failed = r.failures().count();
        failures += failed;
        outln!(
            "{} {}: {} expectations, {} failed",
            if failed == 0 { "ok  " } else { "FAIL" },
            r.name,
            r.results.len(),
            failed
        );
        for x in r.failures() {
            outln!(
                "    {} [{}] expected {} got {}",
                x.path,
                x.provenance.label(),
                x.expected,
                x.actual
            );
        }
        findings.extend(r.findings);
    }

    outln!("== findings");
    for f in &findings {
        outln!(
            "{}: {} ({} claimed {}, computed {}){}",
            f.entry,
            f.summary,
            f.path,
            f.claimed,
            f.computed,
            if f.persists { "" } else { " [no longer reproduces]" }
        );
    }

    outln!("== properties");
    let instances: Vec<_> = verify::standard_instances(seed)?
        .into_iter()
        .filter(|(label, family, _)| keep(label) || keep(family))
        .collect();
    let props: Vec<_> = verify::PROPERTIES.iter().collect();
    let suite = verify::run_suite(&instances, &props, seed);
    outln!(
        "{} instances, {} left-symmetric, seed {seed}",
        suite.instances,
        suite.left_symmetric
    );
    for r in &suite.results {
        let status = match (r.failures.is_empty(), r.refuted) {
            (true, _) => "ok  ",
            (false, true) => "REFUTED",
            (false, false) => "FAIL",
        };
        outln!(
            "{status} {:<32} non-vacuous {:>4}/{:<4} failed {:>3}  {}",
            r.key,
            r.non_vacuous,
            r.tested,
            r.failures.len(),
            r.statement
        );
        for (inst, msg) in r.failures.iter().take(3) {
            outln!("    {inst}: {msg}");
        }
        if r.is_failure() {
            failures += r.failures.len();
        }
    }
    for r in suite.findings() {
        outln!(
            "finding: \"{}\" is contradicted on {} instance(s); reported, not counted as a failure",
            r.statement,
            r.failures.len()
        );
    }

    outln!("== traceability");
    for row in verify::TRACEABILITY {
        let mut evidence: Vec<String> = row.properties.iter().map(|p| format!("property {p}")).collect();
        evidence.extend(row.fixtures.iter().map(|f| format!("fixture {f}")));
        outln!("{}\n    {}", row.result, evidence.join("; "));
    }

    outln!("{failures} failure(s)");
    Ok(if failures == 0 { 0 } else { FAILURE })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { file } => with_algebra!(&load(&file)?, a => check(a)),
        Command::Report {
            file,
            json,
            seed,
            budget,
        } => with_algebra!(&load(&file)?, a => full_report(a, json, seed, budget)),
        Command::Radicals { file, seed } => with_algebra!(&load(&file)?, a => radicals(a, seed)),
        Command::Simple { file, seed, budget } => {
            with_algebra!(&load(&file)?, a => simple(a, seed, budget))
        }
        Command::Quotient { file, ideal, seed } => {
            with_algebra!(&load(&file)?, a => quotient(a, &ideal, seed))
        }
        Command::VerifyPaper { filter, seed } => verify_paper(filter.as_deref(), seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
