//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the test harness so every verdict is printed even when
//! output capture would otherwise hide it. Exits nonzero when any criterion
//! fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use factlang::catalog::{alternating_blocks, example_fixture, fac_word_star};
use factlang::decomposition::{decomp_equal, minimal_left_factor, minimal_right_factor, Catenation};
use factlang::factorial::{delta_alphabet, l_pi, pi_alphabet, r_delta};
use factlang::oracle::{bounded_minimality_search, bounded_product_equal, random_factorial, GeneratorConfig};
use factlang::{
    audit_minimality, boundary_split, catenate_canonical, Alphabet, Audit, Decomposition, Expr,
    Factor, FactorialLanguage, Word,
};
use factlang_cli::json::JsonAutomaton;

type Res<T> = Result<T, factlang::Error>;

/// How many failure details to print per criterion.
const SHOWN: usize = 12;

struct Verdict {
    summary: String,
    failures: Vec<String>,
}

impl Verdict {
    fn new(summary: impl Into<String>, failures: Vec<String>) -> Verdict {
        Verdict { summary: summary.into(), failures }
    }
}

fn sig(s: &str) -> Alphabet {
    s.chars().collect()
}

fn abc() -> Alphabet {
    sig("abc")
}

fn fac(src: &str, sigma: &Alphabet) -> FactorialLanguage {
    FactorialLanguage::new(Expr::parse(src, sigma).unwrap().build(sigma).unwrap()).unwrap()
}

fn random(seed: u64) -> FactorialLanguage {
    random_factorial(&GeneratorConfig::new(abc(), 5, 0.5, seed)).expect("generator")
}

/// A language as a one-factor asserted decomposition, or the unit.
fn single(l: &FactorialLanguage, note: &str) -> Decomposition {
    if l.is_epsilon() {
        Decomposition::unit(l.alphabet())
    } else {
        Decomposition::new(vec![Factor::asserted(l.clone(), note)]).unwrap()
    }
}

fn languages(d: &Decomposition) -> Vec<&FactorialLanguage> {
    d.factors().iter().map(Factor::language).collect()
}

fn product_of(parts: &[&FactorialLanguage], sigma: &Alphabet) -> Res<FactorialLanguage> {
    let mut acc = FactorialLanguage::epsilon(sigma);
    for p in parts {
        acc = acc.concat(p)?;
    }
    Ok(acc)
}

fn subalphabet<R: Rng>(rng: &mut R, sigma: &Alphabet) -> Alphabet {
    sigma.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

fn nonempty_subalphabet<R: Rng>(rng: &mut R, sigma: &Alphabet) -> Alphabet {
    loop {
        let g = subalphabet(rng, sigma);
        if !g.is_empty() {
            return g;
        }
    }
}

fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_factlang"))
}

fn factlang(args: &[&str]) -> (i32, String) {
    let out = Command::new(binary()).args(args).output().expect("run factlang");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

// Criterion 1

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    let runs = [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (5, 3)];
    for (n, k) in runs {
        if let Err(e) = golden_example(n, k, &mut failures) {
            failures.push(format!("example {n} (k = {k}): {e}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(5) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 5 s"));
    }
    Verdict::new(format!("{} fixture runs through combine, {elapsed:.2?}", runs.len()), failures)
}

fn golden_example(n: usize, k: usize, failures: &mut Vec<String>) -> Res<()> {
    let fx = example_fixture(n, k)?;
    let label = format!("example {n} (k = {k})");
    let sigma: String = fx.a.alphabet().iter().collect();
    let (a, b) = (fx.a.to_string(), fx.b.to_string());
    let (code, stdout) =
        factlang(&["--format", "json", "combine", "--sigma", &sigma, "--a", &a, "--b", &b]);
    if code != 0 {
        failures.push(format!("{label}: combine exited with {code}"));
        return Ok(());
    }
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("combine JSON");
    if v["case"] != fx.case_id {
        failures.push(format!("{label}: case {} instead of {}", v["case"], fx.case_id));
    }
    let got: Vec<FactorialLanguage> = v["result"]
        .as_array()
        .expect("result list")
        .iter()
        .map(|f| {
            let aut: JsonAutomaton = serde_json::from_value(f["automaton"].clone()).expect("automaton");
            FactorialLanguage::new(aut.to_language().expect("valid automaton")).expect("factorial")
        })
        .collect();
    let expected = languages(&fx.expected);
    if got.len() != expected.len() || got.iter().zip(&expected).any(|(g, e)| g != *e) {
        failures.push(format!("{label}: combine printed {}, expected {}", v["result"], fx.expected));
    }
    let direct = catenate_canonical(&fx.a, &fx.b)?;
    if !decomp_equal(&direct.decomposition, &fx.expected) {
        failures.push(format!("{label}: library gives {}", direct.decomposition));
    }
    if n == 5 {
        let (astar, bstar) = (fac("a*", &sig("ab")), fac("b*", &sig("ab")));
        let alternating = got.len() == 2 * k + 1
            && got.iter().enumerate().all(|(i, g)| *g == if i % 2 == 0 { astar.clone() } else { bstar.clone() });
        if !alternating {
            failures.push(format!("{label}: output is not (a*·b*)^k·a*"));
        }
        if fx.a.product()? != alternating_blocks(k)? {
            failures.push(format!("{label}: (a*+b*)^2k differs from (a*b*)^k+(b*a*)^k"));
        }
    }
    Ok(())
}

// Criterion 2 and 5 (shared instances)

struct Pair {
    seeds: (u64, u64),
    a: Decomposition,
    b: Decomposition,
    out: Catenation,
}

fn random_pairs() -> Res<(Vec<Pair>, Duration)> {
    let start = Instant::now();
    let mut pairs = Vec::with_capacity(200);
    for i in 0..200u64 {
        let seeds = (2 * i, 2 * i + 1);
        let a = single(&random(seeds.0), "random");
        let b = single(&random(seeds.1), "random");
        let out = catenate_canonical(&a, &b)?;
        pairs.push(Pair { seeds, a, b, out });
    }
    Ok((pairs, start.elapsed()))
}

fn criterion_2(pairs: &[Pair], built: Duration) -> Res<Verdict> {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut product_ok = 0;
    let mut minimal = 0;
    for p in pairs {
        let expected = p.a.product()?.concat(&p.b.product()?)?;
        let got = p.out.decomposition.product()?;
        if got == expected && bounded_product_equal(&p.out.decomposition, &expected, 8) {
            product_ok += 1;
        } else {
            failures.push(format!("seeds {:?}: product differs", p.seeds));
        }
        match audit_minimality(&p.out.decomposition)? {
            Audit::Minimal => minimal += 1,
            Audit::Reducible { position, candidate } => {
                let mut detail = format!(
                    "seeds {:?}: case {} output {} fails audit (factor {position} shrinks to {candidate})",
                    p.seeds,
                    p.out.case.number(),
                    p.out.decomposition
                );
                for (name, d) in [("A", &p.a), ("B", &p.b)] {
                    if let Some((y, z)) = boundary_split(d.first().language())? {
                        detail.push_str(&format!("; input {name} = {} is decomposable as ({y})({z})", d.first()));
                    }
                }
                failures.push(detail);
            }
        }
    }
    let elapsed = built + start.elapsed();
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 60 s"));
    }
    Ok(Verdict::new(
        format!(
            "{} pairs: exact product {product_ok}/{n}, audit passed {minimal}/{n}, {elapsed:.2?}",
            pairs.len(),
            n = pairs.len()
        ),
        failures,
    ))
}

// Criterion 3

/// Indecomposable factors: every Γ*, and letter renamings and reversals of
/// the families `Fac({a,ab}*)` and `a*+b*`.
fn pool() -> Res<Vec<Factor>> {
    let sigma = abc();
    let mut out = Vec::new();
    for g in sigma.subsets().filter(|g| !g.is_empty()) {
        out.push(Factor::sigma_star(&sigma, &g)?);
    }
    let letters: Vec<char> = sigma.iter().collect();
    for &x in &letters {
        for &y in &letters {
            if x == y {
                continue;
            }
            let (xs, xy, yx) = (x.to_string(), format!("{x}{y}"), format!("{y}{x}"));
            out.push(fac_word_star(&sigma, &[Word::from(xs.as_str()), Word::from(xy.as_str())])?);
            out.push(fac_word_star(&sigma, &[Word::from(xs.as_str()), Word::from(yx.as_str())])?);
            if x < y {
                let src = format!("{x}*+{y}*");
                out.push(Factor::asserted(fac(&src, &sigma), "x*+y* class").with_source(src));
            }
        }
    }
    Ok(out)
}

/// Canonical decompositions of 2 to 4 pool factors, combined one factor at
/// a time.
fn built_decompositions(count: usize, seed: u64) -> Res<Vec<Decomposition>> {
    let pool = pool()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=4);
        let mut d = Decomposition::new(vec![pool.choose(&mut rng).unwrap().clone()])?;
        for _ in 1..n {
            let next = Decomposition::new(vec![pool.choose(&mut rng).unwrap().clone()])?;
            d = catenate_canonical(&d, &next)?.decomposition;
        }
        if d.len() >= 2 {
            out.push(d);
        }
    }
    Ok(out)
}

struct Suite {
    name: &'static str,
    instances: usize,
    failures: Vec<String>,
    note: String,
}

fn suite(name: &'static str) -> Suite {
    Suite { name, instances: 0, failures: Vec::new(), note: String::new() }
}

fn criterion_3() -> Res<Verdict> {
    let start = Instant::now();
    let suites = vec![
        boundary_alphabets()?,
        minimal_left()?,
        minimal_right()?,
        two_sided_reduction()?,
        residual_split(false)?,
        residual_split(true)?,
        residual_identity(false)?,
        residual_identity(true)?,
        star_strip(false)?,
        star_strip(true)?,
    ];
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for s in &suites {
        if s.instances < 100 {
            failures.push(format!("{}: only {} instances", s.name, s.instances));
        }
        failures.extend(s.failures.iter().map(|f| format!("{}: {f}", s.name)));
        parts.push(format!("{} {}{}", s.name, s.instances, s.note));
    }
    Ok(Verdict::new(format!("{}; {:.2?}", parts.join(", "), start.elapsed()), failures))
}

fn boundary_alphabets() -> Res<Suite> {
    let mut s = suite("boundary");
    for d in built_decompositions(100, 31)? {
        s.instances += 1;
        if !audit_minimality(&d)?.is_minimal() {
            s.failures.push(format!("{d} is not minimal"));
            continue;
        }
        let product = d.product()?;
        if pi_alphabet(&product) != pi_alphabet(d.last().language())
            || delta_alphabet(&product) != delta_alphabet(d.first().language())
        {
            s.failures.push(format!("{d}: boundary alphabets differ from the product's"));
        }
    }
    Ok(s)
}

/// Factorial languages `Y` near `a` and `a_min`, for containment tests.
fn perturbations<R: Rng>(
    rng: &mut R,
    a: &FactorialLanguage,
    a_min: &FactorialLanguage,
) -> Res<Vec<FactorialLanguage>> {
    let mut out = Vec::with_capacity(20);
    for j in 0..20 {
        let z = random(rng.gen());
        let y = match j % 3 {
            0 => a.language().union(z.language())?,
            1 => a_min.language().union(z.language())?,
            _ => a.language().intersection(z.language())?.union(a_min.language())?,
        };
        out.push(FactorialLanguage::new(y)?);
    }
    Ok(out)
}

fn minimal_left() -> Res<Suite> {
    let mut s = suite("min-left");
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut found = 0;
    for i in 0..100u64 {
        let (a, b) = (random(10_000 + 2 * i), random(10_001 + 2 * i));
        let x = a.concat(&b)?;
        let a_min = minimal_left_factor(&a, &b)?;
        s.instances += 1;
        if a_min.concat(&b)? != x {
            s.failures.push(format!("pair {i}: A'B differs from AB"));
        }
        for y in perturbations(&mut rng, &a, &a_min)? {
            if y.concat(&b)? == x {
                found += 1;
                if !a_min.is_subset(&y)? {
                    s.failures.push(format!("pair {i}: A' = {a_min} not inside {y}"));
                }
            }
        }
    }
    s.note = format!(" ({found} alternatives)");
    Ok(s)
}

fn minimal_right() -> Res<Suite> {
    let mut s = suite("min-right");
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut found = 0;
    for i in 0..100u64 {
        let (a, b) = (random(20_000 + 2 * i), random(20_001 + 2 * i));
        let x = a.concat(&b)?;
        let b_min = minimal_right_factor(&a, &b)?;
        s.instances += 1;
        if a.concat(&b_min)? != x {
            s.failures.push(format!("pair {i}: AB' differs from AB"));
        }
        for y in perturbations(&mut rng, &b, &b_min)? {
            if a.concat(&y)? == x {
                found += 1;
                if !b_min.is_subset(&y)? {
                    s.failures.push(format!("pair {i}: B' = {b_min} not inside {y}"));
                }
            }
        }
    }
    s.note = format!(" ({found} alternatives)");
    Ok(s)
}

fn two_sided_reduction() -> Res<Suite> {
    let mut s = suite("two-sided");
    for i in 0..100u64 {
        let (a, b) = (random(30_000 + 2 * i), random(30_001 + 2 * i));
        let x = a.concat(&b)?;
        let a1 = minimal_left_factor(&a, &b)?;
        let b2 = minimal_right_factor(&a1, &b)?;
        let b1 = minimal_right_factor(&a, &b)?;
        let a2 = minimal_left_factor(&a, &b1)?;
        s.instances += 1;
        if a1.concat(&b2)? != x || a2.concat(&b1)? != x {
            s.failures.push(format!("pair {i}: reduced products differ"));
        }
    }
    Ok(s)
}

/// `R_Δ(XY) = X·R_Δ(Y)` for `Y ⊄ Δ*`, or the mirror
/// `L_Π(XY) = L_Π(X)·Y` for `X ⊄ Π*`.
fn residual_split(mirror: bool) -> Res<Suite> {
    let mut s = suite(if mirror { "split-left" } else { "split-right" });
    let mut rng = ChaCha8Rng::seed_from_u64(if mirror { 53 } else { 51 });
    let mut skipped = 0;
    let mut i = 0u64;
    while s.instances < 100 && i < 1000 {
        let (x, y) = (random(40_000 + 2 * i), random(40_001 + 2 * i));
        i += 1;
        let gamma = subalphabet(&mut rng, &abc());
        let xy = x.concat(&y)?;
        if mirror {
            if x.within_star_of(&gamma) {
                skipped += 1;
                continue;
            }
            s.instances += 1;
            if l_pi(&xy, &gamma)? != l_pi(&x, &gamma)?.concat(&y)? {
                s.failures.push(format!("X = {x}, Y = {y}, Π = {gamma}"));
            }
        } else {
            if y.within_star_of(&gamma) {
                skipped += 1;
                continue;
            }
            s.instances += 1;
            if r_delta(&xy, &gamma)? != x.concat(&r_delta(&y, &gamma)?)? {
                s.failures.push(format!("X = {x}, Y = {y}, Δ = {gamma}"));
            }
        }
    }
    s.note = format!(" ({skipped} filtered)");
    Ok(s)
}

/// `L_Π(X) = X` when `Δ(X) \ Π ≠ ∅`, or the mirror `R_Δ(X) = X` when
/// `Π(X) \ Δ ≠ ∅`. Half the instances are random, filtered by the
/// precondition; the rest are built as `Γ*·Y` (or `Y·Γ*`) so that the
/// extension alphabet is nonempty.
fn residual_identity(mirror: bool) -> Res<Suite> {
    let mut s = suite(if mirror { "identity-right" } else { "identity-left" });
    let mut rng = ChaCha8Rng::seed_from_u64(if mirror { 63 } else { 61 });
    let sigma = abc();
    let (mut from_random, mut built) = (0, 0);
    let mut i = 0u64;
    while s.instances < 100 {
        let y = random(50_000 + i);
        i += 1;
        let use_random = from_random < 50 && i < 2000;
        let x = if use_random {
            y
        } else {
            let star = FactorialLanguage::star_of(&sigma, &nonempty_subalphabet(&mut rng, &sigma))?;
            if mirror {
                y.concat(&star)?
            } else {
                star.concat(&y)?
            }
        };
        let ext = if mirror { pi_alphabet(&x) } else { delta_alphabet(&x) };
        if ext.is_empty() {
            continue;
        }
        // A subalphabet missing at least one extension letter.
        let keep_out = ext.symbols()[rng.gen_range(0..ext.len())];
        let others: Alphabet = sigma.iter().filter(|&c| c != keep_out).collect();
        let gamma = subalphabet(&mut rng, &others);
        if use_random {
            from_random += 1;
        } else {
            built += 1;
        }
        s.instances += 1;
        let got = if mirror { r_delta(&x, &gamma)? } else { l_pi(&x, &gamma)? };
        if got != x {
            s.failures.push(format!("X = {x}, subalphabet {gamma}"));
        }
    }
    s.note = format!(" ({from_random} random, {built} built)");
    Ok(s)
}

/// `L_Δ(X) = X_2⋯X_k` when `X_1 = Δ*` and `X` otherwise, for `Δ = Δ(X)`;
/// the mirror strips `X_k = Π*`. Branch instances are built by putting a
/// star next to a canonical decomposition.
fn star_strip(mirror: bool) -> Res<Suite> {
    let mut s = suite(if mirror { "strip-right" } else { "strip-left" });
    let sigma = abc();
    let mut rng = ChaCha8Rng::seed_from_u64(if mirror { 73 } else { 71 });
    let (mut strip, mut keep) = (0, 0);
    let base = built_decompositions(150, if mirror { 79 } else { 77 })?;
    for (j, d) in base.iter().enumerate() {
        let star = Decomposition::new(vec![Factor::sigma_star(&sigma, &nonempty_subalphabet(&mut rng, &sigma))?])?;
        // Alternate plain and star-bordered instances.
        let d = if j % 2 == 0 {
            d.clone()
        } else if mirror {
            catenate_canonical(d, &star)?.decomposition
        } else {
            catenate_canonical(&star, d)?.decomposition
        };
        let x = d.product()?;
        let parts = languages(&d);
        let (ext, boundary, rest) = if mirror {
            (pi_alphabet(&x), parts[parts.len() - 1], &parts[..parts.len() - 1])
        } else {
            (delta_alphabet(&x), parts[0], &parts[1..])
        };
        let ext_star = FactorialLanguage::star_of(&sigma, &ext)?;
        let stripped = *boundary == ext_star;
        let expected = if stripped { product_of(rest, &sigma)? } else { x.clone() };
        let got = if mirror { r_delta(&x, &ext)? } else { l_pi(&x, &ext)? };
        if stripped {
            strip += 1;
        } else {
            keep += 1;
        }
        s.instances += 1;
        if got != expected {
            s.failures.push(format!("{d}: residual by {ext} is {got}"));
        }
    }
    if strip == 0 || keep == 0 {
        s.failures.push(format!("branches not both exercised ({strip} strip, {keep} keep)"));
    }
    s.note = format!(" ({strip} strip, {keep} keep)");
    Ok(s)
}

// Criterion 4

fn criterion_4() -> Res<Verdict> {
    let start = Instant::now();
    let sigma = abc();
    let mut failures = Vec::new();
    let (mut reducible, mut witnesses) = (0, 0);
    let mut seed = 60_000u64;
    for i in 0..100 {
        let n = 1 + i % 3;
        let mut factors = Vec::with_capacity(n);
        while factors.len() < n {
            let l = random_factorial(&GeneratorConfig::new(sigma.clone(), 4, 0.5, seed))?;
            seed += 1;
            if !l.is_epsilon() {
                factors.push(Factor::asserted(l, "random"));
            }
        }
        let d = Decomposition::new(factors)?;
        let audit = audit_minimality(&d)?;
        let search = bounded_minimality_search(&d, 4)?;
        if let Some((pos, w)) = &search {
            witnesses += 1;
            if audit.is_minimal() {
                failures.push(format!("{d}: search removes {w} from factor {pos}, audit passes"));
            }
        }
        if let Audit::Reducible { position, candidate } = &audit {
            reducible += 1;
            let mut parts = languages(&d);
            parts[position - 1] = candidate;
            if product_of(&parts, &sigma)? != d.product()? {
                failures.push(format!("{d}: candidate {candidate} at {position} changes the product"));
            }
        }
    }
    Ok(Verdict::new(
        format!(
            "100 decompositions: audit reducible {reducible}, search witnesses {witnesses}, {:.2?}",
            start.elapsed()
        ),
        failures,
    ))
}

// Criterion 5

/// `out` begins with `a` or ends with `b`, factor by factor.
fn begins_or_ends(out: &Decomposition, a: &Decomposition, b: &Decomposition) -> bool {
    let (o, a, b) = (languages(out), languages(a), languages(b));
    let prefix = a.len() <= o.len() && o.iter().zip(&a).all(|(x, y)| x == y);
    let suffix = b.len() <= o.len() && o[o.len() - b.len()..].iter().zip(&b).all(|(x, y)| x == y);
    prefix || suffix
}

fn criterion_5(pairs: &[Pair]) -> Res<Verdict> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in pairs {
        checked += 1;
        if !begins_or_ends(&p.out.decomposition, &p.a, &p.b) {
            failures.push(format!("seeds {:?}: {}", p.seeds, p.out.decomposition));
        }
    }
    for (n, k) in [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (5, 3)] {
        let fx = example_fixture(n, k)?;
        let out = catenate_canonical(&fx.a, &fx.b)?;
        checked += 1;
        if !begins_or_ends(&out.decomposition, &fx.a, &fx.b) {
            failures.push(format!("example {n} (k = {k}): {}", out.decomposition));
        }
    }
    Ok(Verdict::new(format!("{checked} outputs checked"), failures))
}

// Criterion 6

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn criterion_6() -> Verdict {
    let runs: [(&str, &[&str]); 8] = [
        ("fixture1", &["fixture", "1"]),
        ("fixture2", &["fixture", "2"]),
        ("fixture3", &["fixture", "3"]),
        ("fixture4", &["fixture", "4"]),
        ("fixture5", &["fixture", "5", "--k", "2"]),
        ("audit", &["audit", "--sigma", "ab", "a* . a*"]),
        ("rdelta", &["rdelta", "--sigma", "ab", "a*b*", "--delta", "b"]),
        ("pi", &["pi", "--sigma", "ab", "Fac({a,ab}*)"]),
    ];
    let mut failures = Vec::new();
    for (name, args) in runs {
        let first = factlang(args);
        let second = factlang(args);
        if first != second {
            failures.push(format!("{name}: output differs between runs"));
        }
        let path = golden_dir().join(format!("{name}.txt"));
        match std::fs::read_to_string(&path) {
            Ok(golden) if golden == first.1 => {}
            Ok(_) => failures.push(format!("{name}: output differs from {}", path.display())),
            Err(e) => failures.push(format!("{name}: {}: {e}", path.display())),
        }
    }
    Verdict::new(format!("{} transcripts run twice and compared with golden files", runs.len()), failures)
}

fn report(n: u8, title: &str, v: Res<Verdict>) -> bool {
    let v = v.unwrap_or_else(|e| Verdict::new("aborted", vec![format!("error: {e}")]));
    let ok = v.failures.is_empty();
    println!("[{}] criterion {n}: {title}: {}", if ok { "PASS" } else { "FAIL" }, v.summary);
    for f in v.failures.iter().take(SHOWN) {
        println!("    {f}");
    }
    if v.failures.len() > SHOWN {
        println!("    ... {} more", v.failures.len() - SHOWN);
    }
    ok
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= report(1, "golden examples", Ok(criterion_1()));
    let pairs = random_pairs();
    ok &= report(2, "combination soundness", pairs.as_ref().map_err(Clone::clone).and_then(|(p, t)| criterion_2(p, *t)));
    ok &= report(3, "residual and factor properties", criterion_3());
    ok &= report(4, "audit cross-check", criterion_4());
    ok &= report(5, "prefix or suffix shape", pairs.as_ref().map_err(Clone::clone).and_then(|(p, _)| criterion_5(p)));
    ok &= report(6, "CLI transcripts", Ok(criterion_6()));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
