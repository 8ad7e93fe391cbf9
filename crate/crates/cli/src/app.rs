//! Command dispatch. [`run`] takes the full argument vector and returns
//! the exit code together with everything the process would print.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use factlang::catalog::example_fixture;
use factlang::decomposition::{decomp_equal, Catenation};
use factlang::factorial::{delta_alphabet, is_factorial, l_pi, pi_alphabet, r_delta};
use factlang::oracle::{bounded_minimality_search, bounded_product_equal, random_factorial, GeneratorConfig};
use factlang::{
    audit_minimality, boundary_split, catenate_canonical, Alphabet, Attestation, Audit,
    Decomposition, Expr, Factor, FactorialLanguage, Language, Word,
};

use crate::json::{self, JsonAutomaton, JsonError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SEMANTIC: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

const INPUT_NOTE: &str = "command line";

#[derive(Parser, Debug)]
#[command(name = "factlang", version, about = "Canonical decompositions of factorial languages")]
struct Cli {
    /// Alphabet, one character per symbol (e.g. `abc`); inferred from the
    /// expressions when omitted
    #[arg(long, global = true)]
    sigma: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for commands that generate languages
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factorial closure of EXPR with its Π and Δ, and whether EXPR was factorial
    Canon { expr: String },
    /// Factorial closure of EXPR
    Closure { expr: String },
    /// Π(L) = {a : La ⊆ L}
    Pi { expr: String },
    /// Δ(L) = {a : aL ⊆ L}
    Delta { expr: String },
    /// Language equality, with a shortest distinguishing word
    Eq { left: String, right: String },
    /// Members of EXPR up to length N, in shortlex order
    Enum { expr: String, n: usize },
    /// R_Δ(L) = Fac(L \ LΔ)
    Rdelta {
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
    /// L_Π(L) = Fac(L \ ΠL)
    Lpi {
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
    },
    /// Exact minimality check of a decomposition "F1 . F2 . ..."
    Audit { decomposition: String },
    /// Canonical decomposition of AB from canonical decompositions of A and B
    Combine {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Re-check the result: exact product, bounded product, audit,
        /// witness search, indecomposability refutations
        #[arg(long)]
        verify: bool,
        /// Word length bound for the bounded product check
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Word length bound for the minimality witness search
        #[arg(long, default_value_t = 4)]
        search_len: usize,
    },
    /// Run one of the worked combinations 1..=5
    Fixture {
        n: usize,
        /// Repetition parameter of fixture 5
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Write the canonical automaton of EXPR as JSON
    Export {
        expr: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// A random factorial language from the seeded generator
    Random {
        #[arg(long, default_value_t = 5)]
        states: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Semantic(String),
}

impl From<factlang::Error> for Failure {
    fn from(e: factlang::Error) -> Self {
        use factlang::Error::*;
        match e {
            Syntax { .. } | UnknownSymbol { .. } | DuplicateSymbol(_) | FixtureOutOfRange(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Language(e) => e.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Report {
    code: i32,
    text: String,
    json: String,
}

impl Report {
    fn new(text: String, json: &impl Serialize) -> Report {
        Report { code: EXIT_OK, text, json: to_json(json) }
    }

    fn with_code(mut self, code: i32) -> Report {
        self.code = code;
        self
    }
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let mut stdout = match cli.format {
                Format::Text => report.text,
                Format::Json => report.json,
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: report.code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(m)) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Semantic(m)) => {
            Outcome { code: EXIT_SEMANTIC, stdout: String::new(), stderr: format!("error: {m}\n") }
        }
    }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let inputs: Vec<&str> = match &cli.command {
        Command::Canon { expr }
        | Command::Closure { expr }
        | Command::Pi { expr }
        | Command::Delta { expr }
        | Command::Enum { expr, .. }
        | Command::Export { expr, .. } => vec![expr],
        Command::Eq { left, right } => vec![left, right],
        Command::Rdelta { expr, delta: syms } | Command::Lpi { expr, pi: syms } => vec![expr, syms],
        Command::Audit { decomposition } => vec![decomposition],
        Command::Combine { a, b, .. } => vec![a, b],
        Command::Fixture { .. } => return fixture_command(cli),
        Command::Random { .. } => vec![],
    };
    let sigma = match &cli.sigma {
        Some(s) => Alphabet::new(s.chars())?,
        None => infer_sigma(&inputs)?,
    };
    match &cli.command {
        Command::Canon { expr } => canon(&language(expr, &sigma)?),
        Command::Closure { expr } => {
            let c = closure(&language(expr, &sigma)?)?;
            Ok(Report::new(c.to_string(), &LanguageOut::of(&c)))
        }
        Command::Pi { expr } => {
            let p = pi_alphabet(&factorial(expr, &sigma)?);
            Ok(Report::new(p.to_string(), &PiOut { pi: symbols(&p) }))
        }
        Command::Delta { expr } => {
            let d = delta_alphabet(&factorial(expr, &sigma)?);
            Ok(Report::new(d.to_string(), &DeltaOut { delta: symbols(&d) }))
        }
        Command::Eq { left, right } => eq(&language(left, &sigma)?, &language(right, &sigma)?),
        Command::Enum { expr, n } => {
            let words = language(expr, &sigma)?.enumerate_up_to(*n);
            let text = words.iter().map(|w| format!("{w}\n")).collect();
            let json = WordsOut { words: words.iter().map(|w| w.symbols().iter().collect()).collect() };
            Ok(Report::new(text, &json))
        }
        Command::Rdelta { expr, delta } => {
            let r = r_delta(&factorial(expr, &sigma)?, &subalphabet(delta, &sigma)?)?;
            Ok(Report::new(r.to_string(), &LanguageOut::of(&r)))
        }
        Command::Lpi { expr, pi } => {
            let r = l_pi(&factorial(expr, &sigma)?, &subalphabet(pi, &sigma)?)?;
            Ok(Report::new(r.to_string(), &LanguageOut::of(&r)))
        }
        Command::Audit { decomposition: src } => audit(&decomposition(src, &sigma)?),
        Command::Combine { a, b, verify, max_len, search_len } => {
            let (a, b) = (decomposition(a, &sigma)?, decomposition(b, &sigma)?);
            let cat = catenate_canonical(&a, &b)?;
            let mut text = combine_text(&a, &b, &cat);
            let mut out = CombineOut::new(&a, &b, &cat);
            let mut code = EXIT_OK;
            if *verify {
                let checks = verify_combination(&a, &b, &cat, *max_len, *search_len)?;
                for c in &checks {
                    let _ = writeln!(text, "verify: {}: {}", c.check, c.detail);
                }
                if checks.iter().any(|c| !c.ok) {
                    code = EXIT_VERIFY;
                }
                out.verify = Some(checks);
            }
            Ok(Report::new(text, &out).with_code(code))
        }
        Command::Export { expr, out } => {
            let l = language(expr, &sigma)?;
            json::write_language(out, &l)?;
            let text = format!("wrote {} ({} states)", out.display(), l.state_count());
            Ok(Report::new(text, &ExportOut { path: out.display().to_string(), states: l.state_count() }))
        }
        Command::Random { states, density } => {
            if sigma.is_empty() {
                return Err(Failure::Usage(String::from("random needs --sigma")));
            }
            let cfg = GeneratorConfig::new(sigma, *states, *density, cli.seed);
            let l = random_factorial(&cfg).map_err(|e| match e {
                factlang::Error::InvalidAutomaton(m) => Failure::Usage(m),
                e => e.into(),
            })?;
            Ok(Report::new(l.to_string(), &RandomOut { seed: cli.seed, language: LanguageOut::of(&l) }))
        }
        Command::Fixture { .. } => unreachable!("handled above"),
    }
}

/// The letters used by the expression arguments. Keywords (`Fac`, `eps`,
/// `empty`), λ/ε, digits and operators are skipped; `@file` arguments
/// contribute the automaton's alphabet.
fn infer_sigma(inputs: &[&str]) -> Result<Alphabet, Failure> {
    let mut sigma = Alphabet::empty();
    for src in inputs {
        if let Some(path) = src.strip_prefix('@') {
            sigma = sigma.union(json::read_language(Path::new(path))?.alphabet());
            continue;
        }
        for part in src.split(" . ") {
            if let Some(path) = part.trim().strip_prefix('@') {
                sigma = sigma.union(json::read_language(Path::new(path))?.alphabet());
                continue;
            }
            let stripped = part.replace("Fac(", "(").replace("empty", "").replace("eps", "");
            sigma = sigma.union(
                &stripped.chars().filter(|c| c.is_alphabetic() && !matches!(c, 'λ' | 'ε')).collect(),
            );
        }
    }
    Ok(sigma)
}

/// An expression, or `@path` for a JSON automaton over the same Σ.
fn language(src: &str, sigma: &Alphabet) -> Result<Language, Failure> {
    if let Some(path) = src.strip_prefix('@') {
        let l = json::read_language(Path::new(path))?;
        if l.alphabet() != sigma {
            return Err(Failure::Semantic(format!(
                "{path}: automaton alphabet {} differs from Σ = {sigma}",
                l.alphabet()
            )));
        }
        return Ok(l);
    }
    Ok(Expr::parse(src, sigma)?.build(sigma)?)
}

fn factorial(src: &str, sigma: &Alphabet) -> Result<FactorialLanguage, Failure> {
    Ok(FactorialLanguage::new(language(src, sigma)?)?)
}

fn closure(l: &Language) -> Result<FactorialLanguage, Failure> {
    Ok(factlang::factorial::factorial_closure(l)?)
}

/// Letters such as `ab`, `{a,b}`, or an empty string / `∅` for no letters.
fn subalphabet(src: &str, sigma: &Alphabet) -> Result<Alphabet, Failure> {
    let letters = src.chars().filter(|c| !matches!(c, '{' | '}' | ',' | '∅') && !c.is_whitespace());
    let mut out = Vec::new();
    for c in letters {
        if !sigma.contains(c) {
            return Err(factlang::Error::UnknownSymbol { symbol: c, position: None }.into());
        }
        out.push(c);
    }
    Ok(out.into_iter().collect())
}

/// Factors separated by ` . `, each taken as indecomposable: Γ* factors
/// are verified, the rest asserted.
fn decomposition(src: &str, sigma: &Alphabet) -> Result<Decomposition, Failure> {
    let mut factors = Vec::new();
    for part in src.split(" . ").map(str::trim) {
        if part.is_empty() {
            return Err(Failure::Usage(format!("empty factor in decomposition {src:?}")));
        }
        factors.push(Factor::attest(factorial(part, sigma)?, INPUT_NOTE).with_source(part));
    }
    Ok(Decomposition::new(factors)?)
}

fn symbols(a: &Alphabet) -> Vec<String> {
    a.iter().map(String::from).collect()
}

#[derive(Serialize)]
struct LanguageOut {
    expression: String,
    automaton: JsonAutomaton,
}

impl LanguageOut {
    fn of(l: &FactorialLanguage) -> LanguageOut {
        LanguageOut { expression: l.to_string(), automaton: JsonAutomaton::from_language(l.language()) }
    }
}

#[derive(Serialize)]
struct PiOut {
    pi: Vec<String>,
}

#[derive(Serialize)]
struct DeltaOut {
    delta: Vec<String>,
}

#[derive(Serialize)]
struct WordsOut {
    words: Vec<String>,
}

#[derive(Serialize)]
struct ExportOut {
    path: String,
    states: usize,
}

#[derive(Serialize)]
struct RandomOut {
    seed: u64,
    language: LanguageOut,
}

#[derive(Serialize)]
struct CanonOut {
    factorial: bool,
    closure: LanguageOut,
    pi: Vec<String>,
    delta: Vec<String>,
}

fn canon(l: &Language) -> Result<Report, Failure> {
    let c = closure(l)?;
    let (pi, delta) = (pi_alphabet(&c), delta_alphabet(&c));
    let factorial = is_factorial(l);
    let text = format!(
        "factorial: {}\nclosure: {c}\nΠ: {pi}\nΔ: {delta}",
        if factorial { "yes" } else { "no" }
    );
    let out = CanonOut { factorial, closure: LanguageOut::of(&c), pi: symbols(&pi), delta: symbols(&delta) };
    Ok(Report::new(text, &out))
}

#[derive(Serialize)]
struct EqOut {
    equal: bool,
    /// A shortest word in exactly one of the two languages.
    witness: Option<String>,
    /// `left` or `right`: the language containing the witness.
    side: Option<&'static str>,
}

fn shortest(l: &Language) -> Option<Word> {
    if l.is_empty() {
        return None;
    }
    (0..=l.state_count()).find_map(|n| l.enumerate_up_to(n).into_iter().next())
}

fn eq(left: &Language, right: &Language) -> Result<Report, Failure> {
    if left == right {
        return Ok(Report::new(String::from("equal"), &EqOut { equal: true, witness: None, side: None }));
    }
    let l = shortest(&left.difference(right)?).map(|w| (w, "left"));
    let r = shortest(&right.difference(left)?).map(|w| (w, "right"));
    let (w, side) = match (l, r) {
        (Some(l), Some(r)) => {
            if r.0 < l.0 {
                r
            } else {
                l
            }
        }
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => unreachable!("unequal languages differ on some word"),
    };
    let text = format!("not equal: {w} is only in the {side} language");
    let out = EqOut { equal: false, witness: Some(w.symbols().iter().collect()), side: Some(side) };
    Ok(Report::new(text, &out))
}

#[derive(Serialize)]
struct FactorOut {
    expression: String,
    attestation: String,
    automaton: JsonAutomaton,
}

fn factors_out(d: &Decomposition) -> Vec<FactorOut> {
    d.factors()
        .iter()
        .map(|f| FactorOut {
            expression: f.expression(),
            attestation: f.attestation().to_string(),
            automaton: JsonAutomaton::from_language(f.language().language()),
        })
        .collect()
}

#[derive(Serialize)]
struct Refutation {
    /// 1-based factor position.
    position: usize,
    left: String,
    right: String,
}

/// Factors shown decomposable by splitting off a boundary star.
fn refutations(d: &Decomposition) -> Result<Vec<Refutation>, Failure> {
    let mut out = Vec::new();
    for (i, f) in d.factors().iter().enumerate() {
        if *f.attestation() == Attestation::VerifiedSigmaStar {
            continue;
        }
        if let Some((y, z)) = boundary_split(f.language())? {
            out.push(Refutation { position: i + 1, left: y.to_string(), right: z.to_string() });
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct AuditOut {
    decomposition: Vec<FactorOut>,
    minimal: bool,
    witness: Option<WitnessOut>,
    decomposable_factors: Vec<Refutation>,
}

#[derive(Serialize)]
struct WitnessOut {
    position: usize,
    candidate: String,
}

fn audit(d: &Decomposition) -> Result<Report, Failure> {
    let result = audit_minimality(d)?;
    let refuted = refutations(d)?;
    let mut text = format!("decomposition: {d}\n");
    let witness = match &result {
        Audit::Minimal => {
            text.push_str("minimal: yes\n");
            None
        }
        Audit::Reducible { position, candidate } => {
            text.push_str("minimal: no\n");
            let _ = writeln!(text, "witness: factor {position} can be replaced by {candidate}");
            Some(WitnessOut { position: *position, candidate: candidate.to_string() })
        }
    };
    for r in &refuted {
        let _ = writeln!(text, "note: factor {} is decomposable: {} . {}", r.position, r.left, r.right);
    }
    let out = AuditOut { decomposition: factors_out(d), minimal: result.is_minimal(), witness, decomposable_factors: refuted };
    let code = if result.is_minimal() { EXIT_OK } else { EXIT_VERIFY };
    Ok(Report::new(text, &out).with_code(code))
}

fn combine_text(a: &Decomposition, b: &Decomposition, cat: &Catenation) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "A: {a}");
    let _ = writeln!(text, "B: {b}");
    let _ = writeln!(text, "Π(A): {}", cat.pi);
    let _ = writeln!(text, "Δ(B): {}", cat.delta);
    let _ = writeln!(text, "case {}: {}", cat.case.number(), cat.case.describe());
    let _ = writeln!(text, "AB: {}", cat.decomposition);
    if let Some(trace) = &cat.trace {
        text.push_str("trace:\n");
        for line in trace.to_string().lines() {
            let _ = writeln!(text, "  {line}");
        }
    }
    let attestations: Vec<String> =
        cat.decomposition.factors().iter().map(|f| f.attestation().to_string()).collect();
    let _ = writeln!(text, "attestations: {}", attestations.join(", "));
    let status = if cat.decomposition.is_conditional() {
        "minimal, canonicity conditional on attestations"
    } else {
        "yes"
    };
    let _ = writeln!(text, "canonical: {status}");
    text
}

#[derive(Serialize)]
struct TraceStepOut {
    index: usize,
    subalphabet: Vec<String>,
    factor: String,
    collapsed: bool,
}

#[derive(Serialize)]
struct CombineOut {
    a: Vec<FactorOut>,
    b: Vec<FactorOut>,
    pi: Vec<String>,
    delta: Vec<String>,
    case: u8,
    rule: &'static str,
    result: Vec<FactorOut>,
    trace: Option<Vec<TraceStepOut>>,
    conditional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<Vec<Check>>,
}

impl CombineOut {
    fn new(a: &Decomposition, b: &Decomposition, cat: &Catenation) -> CombineOut {
        CombineOut {
            a: factors_out(a),
            b: factors_out(b),
            pi: symbols(&cat.pi),
            delta: symbols(&cat.delta),
            case: cat.case.number(),
            rule: cat.case.describe(),
            result: factors_out(&cat.decomposition),
            trace: cat.trace.as_ref().map(|t| {
                t.steps
                    .iter()
                    .map(|s| TraceStepOut {
                        index: s.index,
                        subalphabet: symbols(&s.subalphabet),
                        factor: s.factor.to_string(),
                        collapsed: s.collapsed,
                    })
                    .collect()
            }),
            conditional: cat.decomposition.is_conditional(),
            verify: None,
        }
    }
}

#[derive(Serialize)]
struct Check {
    check: String,
    ok: bool,
    detail: String,
}

fn check(check: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check { check: check.into(), ok, detail: detail.into() }
}

fn verify_combination(
    a: &Decomposition,
    b: &Decomposition,
    cat: &Catenation,
    max_len: usize,
    search_len: usize,
) -> Result<Vec<Check>, Failure> {
    let d = &cat.decomposition;
    let product = a.product()?.concat(&b.product()?)?;
    let mut checks = Vec::new();
    let exact = d.product()? == product;
    checks.push(check("exact product", exact, if exact { "ok" } else { "FAILED" }));
    let bounded = bounded_product_equal(d, &product, max_len);
    checks.push(check(
        format!("product up to length {max_len}"),
        bounded,
        if bounded { "ok" } else { "FAILED" },
    ));
    checks.push(match audit_minimality(d)? {
        Audit::Minimal => check("minimality audit", true, "ok"),
        Audit::Reducible { position, candidate } => check(
            "minimality audit",
            false,
            format!("FAILED, factor {position} can be replaced by {candidate}"),
        ),
    });
    checks.push(match bounded_minimality_search(d, search_len)? {
        None => check(format!("witness search up to length {search_len}"), true, "none found"),
        Some((i, w)) => check(
            format!("witness search up to length {search_len}"),
            false,
            format!("FAILED, factor {i} can omit {w}"),
        ),
    });
    for (name, part) in [("A", a), ("B", b), ("AB", d)] {
        for r in refutations(part)? {
            checks.push(check(
                format!("indecomposability of {name} factor {}", r.position),
                false,
                format!("FAILED, splits as {} . {}", r.left, r.right),
            ));
        }
    }
    Ok(checks)
}

#[derive(Serialize)]
struct FixtureOut {
    name: String,
    k: Option<usize>,
    #[serde(flatten)]
    combination: CombineOut,
    expected: Vec<FactorOut>,
    expected_case: u8,
    matches: bool,
}

fn fixture_command(cli: &Cli) -> Result<Report, Failure> {
    let Command::Fixture { n, k } = &cli.command else { unreachable!("fixture only") };
    let fx = example_fixture(*n, *k)?;
    let cat = catenate_canonical(&fx.a, &fx.b)?;
    let matches = decomp_equal(&cat.decomposition, &fx.expected) && cat.case.number() == fx.case_id;
    let k = (*n == 5).then_some(*k);
    let mut text = match k {
        Some(k) => format!("fixture: {} (k = {k})\n", fx.name),
        None => format!("fixture: {}\n", fx.name),
    };
    text.push_str(&combine_text(&fx.a, &fx.b, &cat));
    let _ = writeln!(text, "expected: {} (case {})", fx.expected, fx.case_id);
    let _ = writeln!(text, "match: {}", if matches { "yes" } else { "no" });
    let out = FixtureOut {
        name: fx.name.clone(),
        k,
        combination: CombineOut::new(&fx.a, &fx.b, &cat),
        expected: factors_out(&fx.expected),
        expected_case: fx.case_id,
        matches,
    };
    let code = if matches { EXIT_OK } else { EXIT_VERIFY };
    Ok(Report::new(text, &out).with_code(code))
}
