//! `agraded`: standard pairs, decompositions and A-graded checks from the
//! command line.
//!
//! Exit status: 0 when the checked property holds, 1 when it fails (details
//! on standard output), 2 on bad input or usage.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use agraded::decomposition::{associated_primes, chain_check, decompose};
use agraded::exponents::default_names;
use agraded::grading::{agraded_verify, enumerate_agraded, triangulation, DegreeBox, GradingMap};
use agraded::groebner::{GroebnerBasis, TermOrder};
use agraded::io::{parse_ideal, parse_list, parse_matrix, parse_monomial_ideal, print_ideal, print_matrix};
use agraded::saturated::{is_saturated, verify_primary_decomposition, BinomialIdeal};
use agraded::standard_pairs::compute_standard_pairs;
use agraded::toric::toric_groebner;
use agraded::{counterexample, Error, ExponentVector, Face, MonomialIdeal};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "agraded", version, about = "Standard pairs, primary decompositions and A-graded checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard pairs of a monomial ideal.
    StdPairs { ideal: PathBuf },
    /// Primary decomposition of a monomial ideal, verified on the staircase box plus a margin.
    Decompose {
        ideal: PathBuf,
        #[arg(long, default_value_t = 2)]
        margin: u32,
    },
    /// Associated primes of a monomial ideal.
    AssPrimes { ideal: PathBuf },
    /// Whether the associated primes form saturated chains.
    ChainCheck { ideal: PathBuf },
    /// Bounded check that every degree of the box has one standard preimage.
    VerifyAgraded {
        ideal: PathBuf,
        matrix: PathBuf,
        /// Upper corner of the degree box, e.g. `6,6,6`.
        #[arg(long = "box", value_name = "HI")]
        bound: String,
        /// Lower corner, zero by default.
        #[arg(long, value_name = "LO")]
        lo: Option<String>,
    },
    /// Cones read off the pairs (0, face) and their check as a triangulation.
    Triangulate { ideal: PathBuf, matrix: PathBuf },
    /// Reduced Gröbner basis of the toric ideal of a matrix.
    ToricGb(OrderArgs),
    /// Initial ideal of the toric ideal, printed as an ideal file.
    Initial(OrderArgs),
    /// Whether a binomial ideal is saturated, on a box.
    SaturatedCheck {
        ideal: PathBuf,
        #[arg(long = "box", value_name = "BOX")]
        bound: Option<String>,
    },
    /// Primary decomposition of a binomial ideal through its standard pairs, verified on a box.
    VerifyDecomposition {
        ideal: PathBuf,
        #[arg(long = "box", value_name = "BOX")]
        bound: Option<String>,
    },
    /// Candidate A-graded ideals up to a certificate weight.
    EnumerateAgraded {
        matrix: PathBuf,
        #[arg(long)]
        bound: i64,
    },
    /// The built-in counterexample to the chain property.
    Counterexample {
        #[command(subcommand)]
        action: CounterexampleAction,
    },
}

#[derive(Args)]
struct OrderArgs {
    matrix: PathBuf,
    /// Nonnegative weight vector.
    #[arg(long)]
    weights: String,
    /// Variable preference for ties, a permutation of 0..n-1; identity by default.
    #[arg(long)]
    tiebreak: Option<String>,
    /// Variable names, separated by commas.
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Subcommand)]
enum CounterexampleAction {
    /// Run every check and print a report.
    Verify {
        #[arg(long = "box", value_name = "HI", default_value = "6,6,6")]
        bound: String,
    },
    /// Print the ideal file.
    Ideal,
    /// Print the matrix file.
    Matrix,
}

/// Body lines are sorted before printing; the summary follows as `# key=value`.
#[derive(Default)]
struct Report {
    lines: Vec<String>,
    summary: Vec<(String, String)>,
    holds: bool,
}

impl Report {
    fn new(holds: bool) -> Self {
        Report { holds, ..Default::default() }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn key(&mut self, k: &str, v: impl ToString) {
        self.summary.push((k.to_string(), v.to_string()));
    }

    fn emit(mut self) -> ExitCode {
        self.lines.sort();
        for l in &self.lines {
            println!("{l}");
        }
        self.summary.sort();
        for (k, v) in &self.summary {
            println!("# {k}={v}");
        }
        ExitCode::from(if self.holds { 0 } else { 1 })
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn monomial_ideal(path: &Path) -> Result<MonomialIdeal, Error> {
    parse_monomial_ideal(&read(path)?)
}

fn binomial_ideal(path: &Path) -> Result<BinomialIdeal, Error> {
    Ok(parse_ideal(&read(path)?)?.into_binomial())
}

fn matrix(path: &Path) -> Result<GradingMap, Error> {
    parse_matrix(&read(path)?)
}

fn exponent_box(text: &str, n: usize) -> Result<ExponentVector, Error> {
    let v: Vec<u32> = parse_list(text)?;
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    Ok(ExponentVector::new(v))
}

fn show_ideal(i: &MonomialIdeal) -> String {
    let gens: Vec<String> = i.generators().iter().map(|g| g.display_with(i.names()).to_string()).collect();
    format!("({})", gens.join(", "))
}

/// The prime `(x_i | i ∉ face)`.
fn show_prime(face: Face, names: &[String]) -> String {
    let vars: Vec<&str> = face.complement(names.len()).members().map(|i| names[i].as_str()).collect();
    format!("({})", vars.join(", "))
}

fn std_pairs(path: &Path) -> Result<Report, Error> {
    let i = monomial_ideal(path)?;
    let b = compute_standard_pairs(&i)?;
    let mut r = Report::new(true);
    for p in b.pairs() {
        r.line(p.display_with(i.names()));
    }
    r.key("pairs", b.len());
    r.key("faces", b.faces().len());
    Ok(r)
}

fn decompose_cmd(path: &Path, margin: u32) -> Result<Report, Error> {
    let i = monomial_ideal(path)?;
    let d = decompose(&compute_standard_pairs(&i)?, margin)?;
    let mut r = Report::new(d.verified);
    for c in &d.components {
        let tag = if d.redundant.contains(&c.face) { " redundant" } else { "" };
        r.line(format!(
            "component {} prime {} ideal {}{tag}",
            c.face.display_with(i.names()),
            show_prime(c.face, i.names()),
            show_ideal(&c.ideal)
        ));
    }
    r.key("components", d.components.len());
    r.key("box", d.bound.as_slice().iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    r.key("verified", d.verified);
    Ok(r)
}

fn ass_primes(path: &Path) -> Result<Report, Error> {
    let i = monomial_ideal(path)?;
    let faces = associated_primes(&compute_standard_pairs(&i)?);
    let mut r = Report::new(true);
    for f in &faces {
        r.line(format!("prime {} face {}", show_prime(*f, i.names()), f.display_with(i.names())));
    }
    r.key("primes", faces.len());
    Ok(r)
}

fn chain(path: &Path) -> Result<Report, Error> {
    let i = monomial_ideal(path)?;
    let c = chain_check(&compute_standard_pairs(&i)?);
    let mut r = Report::new(c.holds);
    for f in &c.faces {
        r.line(format!("face {} prime {}", f.display_with(i.names()), show_prime(*f, i.names())));
    }
    for f in &c.violations {
        r.line(format!(
            "violation face {} prime {}: no associated prime of height one less below it",
            f.display_with(i.names()),
            show_prime(*f, i.names())
        ));
    }
    r.key("faces", c.faces.len());
    r.key("violations", c.violations.len());
    r.key("holds", c.holds);
    Ok(r)
}

fn degree_box(hi: &str, lo: Option<&str>, d: usize) -> Result<DegreeBox, Error> {
    let hi: Vec<i64> = parse_list(hi)?;
    let lo: Vec<i64> = match lo {
        Some(t) => parse_list(t)?,
        None => vec![0; hi.len()],
    };
    let b = DegreeBox::new(lo, hi)?;
    if b.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: b.dim() });
    }
    Ok(b)
}

fn show_degree(q: &[i64]) -> String {
    format!("({})", q.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

fn verify_agraded(ideal: &Path, m: &Path, hi: &str, lo: Option<&str>) -> Result<Report, Error> {
    let i = monomial_ideal(ideal)?;
    let a = matrix(m)?;
    let b = degree_box(hi, lo, a.d())?;
    let rep = agraded_verify(&i, &a, &b)?;
    let mut r = Report::new(rep.passed);
    for d in &rep.defects {
        let what = if d.fiber_empty {
            "empty fiber with a standard monomial".to_string()
        } else {
            let s: Vec<String> = d.standard.iter().map(|u| u.display_with(i.names()).to_string()).collect();
            format!("{} standard preimages [{}]", d.standard.len(), s.join(", "))
        };
        r.line(format!("defect degree {}: {what}", show_degree(&d.degree)));
    }
    r.key("box", &rep.bound);
    r.key("degrees", rep.degrees_checked);
    r.key("nonempty_fibers", rep.nonempty_fibers);
    r.key("defects", rep.defects.len());
    r.key("passed", rep.passed);
    Ok(r)
}

fn triangulate(ideal: &Path, m: &Path) -> Result<Report, Error> {
    let i = monomial_ideal(ideal)?;
    let a = matrix(m)?;
    let t = triangulation(&compute_standard_pairs(&i)?, &a)?;
    let mut r = Report::new(t.valid);
    for c in &t.cells {
        let rays: Vec<String> = c.rays.iter().map(|v| show_degree(v)).collect();
        r.line(format!("cell {} rays {}", c.face.display_with(i.names()), rays.join(" ")));
    }
    for v in &t.violations {
        r.line(format!("violation {v}"));
    }
    r.key("cells", t.cells.len());
    r.key("dimension", t.dimension);
    r.key("valid", t.valid);
    Ok(r)
}

fn toric_basis(args: &OrderArgs) -> Result<GroebnerBasis, Error> {
    let a = matrix(&args.matrix)?;
    let n = a.n();
    let weights: Vec<i64> = parse_list(&args.weights)?;
    let tiebreak = match &args.tiebreak {
        Some(t) => parse_list(t)?,
        None => (0..n).collect(),
    };
    let names = match &args.vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
        None => default_names(n),
    };
    if names.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: names.len() });
    }
    toric_groebner(&a, &TermOrder::new(weights, tiebreak)?)?.with_names(names)
}

fn toric_gb(args: &OrderArgs) -> Result<Report, Error> {
    let g = toric_basis(args)?;
    let mut r = Report::new(true);
    for e in g.elements() {
        r.line(e.display_with(g.names()).to_string());
    }
    r.key("elements", g.elements().len());
    Ok(r)
}

fn saturated_check(path: &Path, bound: Option<&str>) -> Result<Report, Error> {
    let i = binomial_ideal(path)?;
    let b = match bound {
        Some(t) => exponent_box(t, i.n())?,
        None => i.default_box()?,
    };
    let s = is_saturated(&i, &b)?;
    let mut r = Report::new(s.saturated);
    if let Some((u, v)) = &s.witness {
        r.line(format!(
            "witness {} - {}: exponent difference in K, binomial not in I",
            u.display_with(i.names()),
            v.display_with(i.names())
        ));
    }
    r.key("lattice", &s.lattice);
    r.key("box", b.as_slice().iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    r.key("saturated", s.saturated);
    Ok(r)
}

fn verify_decomposition_cmd(path: &Path, bound: Option<&str>) -> Result<Report, Error> {
    let i = binomial_ideal(path)?;
    let b = match bound {
        Some(t) => exponent_box(t, i.n())?,
        None => i.default_box()?,
    };
    let d = match verify_primary_decomposition(&i, &b) {
        Err(Error::Precondition(msg)) => {
            let mut r = Report::new(false);
            r.line(format!("not applicable: {msg}"));
            r.key("verified", false);
            return Ok(r);
        }
        other => other?,
    };
    let ok = d.verified && d.primary_violations.is_empty();
    let mut r = Report::new(ok);
    for (face, c) in &d.components {
        r.line(format!("component {} ideal {c}", face.display_with(i.names())));
    }
    if let Some(p) = &d.failing_degree {
        r.line(format!("intersection differs from I in the slice of {}", p.display_with(i.names())));
    }
    for v in &d.primary_violations {
        r.line(format!(
            "not primary {}: {} * {} in the component, no power of {} up to {}",
            v.face.display_with(i.names()),
            v.s.display_with(i.names()),
            v.t.display_with(i.names()),
            v.t.display_with(i.names()),
            d.power_cap
        ));
    }
    r.key("components", d.components.len());
    r.key("box", b.as_slice().iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    r.key("verified", ok);
    Ok(r)
}

fn enumerate(m: &Path, bound: i64) -> Result<Report, Error> {
    let a = matrix(m)?;
    let found = enumerate_agraded(&a, bound)?;
    let names = default_names(a.n());
    let mut r = Report::new(true);
    for t in &found {
        let gens: Vec<String> = t.generators.iter().map(|g| g.display_with(&names).to_string()).collect();
        r.line(format!("candidate ({})", gens.join(", ")));
    }
    r.key("candidates", found.len());
    r.key("bound", bound);
    if let Some(t) = found.first() {
        r.key("certificate", show_degree(&t.certificate));
    }
    Ok(r)
}

fn counterexample_verify(hi: &str) -> Result<Report, Error> {
    let b = degree_box(hi, None, 3)?;
    let rep = counterexample::verify(&b)?;
    let names = counterexample::variable_names();
    let mut r = Report::new(rep.passed());
    let status = |ok: bool| if ok { "PASS" } else { "FAIL" };
    r.line(format!("check generators: {} {}", rep.generator_count, status(rep.generator_count == 100)));
    r.line(format!("check pointed: {}", status(rep.pointedness.is_pointed())));
    r.line(format!("check standard pairs: {} computed {}", rep.basis.len(), status(rep.pairs_match())));
    r.line(format!("check maximal pairs: {}", status(rep.maximal_pairs_match)));
    let faces: Vec<String> = rep.faces.iter().map(|f| f.display_with(&names)).collect();
    r.line(format!("check associated primes: faces {} {}", faces.join(" "), status(rep.faces_match())));
    let bad: Vec<String> = rep.chain.violations.iter().map(|f| f.display_with(&names)).collect();
    r.line(format!("check chain property fails at {} {}", bad.join(" "), status(rep.chain_as_expected())));
    r.line(format!(
        "check A-graded on {}: {} degrees, {} defects {}",
        rep.agraded.bound,
        rep.agraded.degrees_checked,
        rep.agraded.defects.len(),
        status(rep.agraded.passed)
    ));
    for (q, pre) in &rep.special_degrees {
        let pre: Vec<String> = pre.iter().map(|u| u.display_with(&names).to_string()).collect();
        r.line(format!("check degree {} -> {}", show_degree(q), pre.join(", ")));
    }
    r.line(format!("check special degrees {}", status(rep.special_degrees_ok())));
    r.line(format!("check triangulation: {} cell {}", rep.triangulation.cells.len(), status(rep.triangulation_ok())));
    r.line(format!("check quotient {}: 8 roots {}", rep.quotient, status(rep.quotient_ok())));
    for p in &rep.missing_pairs {
        r.line(format!("missing pair {}", p.display_with(&names)));
    }
    for p in &rep.extra_pairs {
        r.line(format!("extra pair {}", p.display_with(&names)));
    }
    r.key("pairs", rep.basis.len());
    r.key("faces", rep.faces.len());
    r.key("chain_violations", rep.chain.violations.len());
    r.key("agraded_defects", rep.agraded.defects.len());
    r.key("quotient", &rep.quotient);
    r.key("passed", rep.passed());
    Ok(r)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let report = match cli.command {
        Command::StdPairs { ideal } => std_pairs(&ideal)?,
        Command::Decompose { ideal, margin } => decompose_cmd(&ideal, margin)?,
        Command::AssPrimes { ideal } => ass_primes(&ideal)?,
        Command::ChainCheck { ideal } => chain(&ideal)?,
        Command::VerifyAgraded { ideal, matrix, bound, lo } => verify_agraded(&ideal, &matrix, &bound, lo.as_deref())?,
        Command::Triangulate { ideal, matrix } => triangulate(&ideal, &matrix)?,
        Command::ToricGb(args) => toric_gb(&args)?,
        Command::Initial(args) => {
            // printed as an ideal file so it can be fed back in
            print!("{}", print_ideal(&toric_basis(&args)?.initial_ideal()));
            return Ok(ExitCode::SUCCESS);
        }
        Command::SaturatedCheck { ideal, bound } => saturated_check(&ideal, bound.as_deref())?,
        Command::VerifyDecomposition { ideal, bound } => verify_decomposition_cmd(&ideal, bound.as_deref())?,
        Command::EnumerateAgraded { matrix, bound } => enumerate(&matrix, bound)?,
        Command::Counterexample { action } => match action {
            CounterexampleAction::Verify { bound } => counterexample_verify(&bound)?,
            CounterexampleAction::Ideal => {
                print!("{}", print_ideal(&counterexample::ideal()));
                return Ok(ExitCode::SUCCESS);
            }
            CounterexampleAction::Matrix => {
                print!("{}", print_matrix(&counterexample::grading()));
                return Ok(ExitCode::SUCCESS);
            }
        },
    };
    Ok(report.emit())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
