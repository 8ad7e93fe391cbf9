//! Decompositions of factorial languages into catenations of factors, and
//! the rules for combining two canonical decompositions.
//!
//! A decomposition is a word over the alphabet of indecomposable factorial
//! languages. Minimality (no factor can be replaced by a proper factorial
//! subset without changing the product) is decided exactly by
//! [`audit_minimality`]. Indecomposability is not decidable here in
//! general; each [`Factor`] instead carries an [`Attestation`] recording
//! why it is believed indecomposable.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Operand, Result};
use crate::expr::Expr;
use crate::factorial::{delta_alphabet, l_pi, pi_alphabet, r_delta, FactorialLanguage};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Attestation {
    /// The factor is Γ* for the letters Γ it uses; checked on construction.
    VerifiedSigmaStar,
    /// Indecomposability taken on trust, with a note on where it came from.
    Asserted(String),
    /// Derived factor with no known indecomposability argument.
    Unverified,
}

impl fmt::Display for Attestation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attestation::VerifiedSigmaStar => f.write_str("verified"),
            Attestation::Asserted(src) => write!(f, "asserted ({src})"),
            Attestation::Unverified => f.write_str("unverified"),
        }
    }
}

/// One entry of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    lang: FactorialLanguage,
    attestation: Attestation,
    source: Option<String>,
}

impl Factor {
    pub fn new(lang: FactorialLanguage, attestation: Attestation) -> Result<Factor> {
        if attestation == Attestation::VerifiedSigmaStar && lang.as_sigma_star().is_none() {
            return Err(Error::InvalidAttestation(format!("{lang} is not of the form Γ*")));
        }
        Ok(Factor { lang, attestation, source: None })
    }

    pub fn asserted(lang: FactorialLanguage, note: impl Into<String>) -> Factor {
        Factor { lang, attestation: Attestation::Asserted(note.into()), source: None }
    }

    pub fn unverified(lang: FactorialLanguage) -> Factor {
        Factor { lang, attestation: Attestation::Unverified, source: None }
    }

    /// Γ*, verified. Γ = ∅ gives {λ}.
    pub fn sigma_star(sigma: &Alphabet, gamma: &Alphabet) -> Result<Factor> {
        let lang = FactorialLanguage::star_of(sigma, gamma)?;
        Ok(Factor { lang, attestation: Attestation::VerifiedSigmaStar, source: None })
    }

    /// Marks Γ* factors as verified, leaves everything else as asserted.
    pub fn attest(lang: FactorialLanguage, note: impl Into<String>) -> Factor {
        if lang.as_sigma_star().is_some() {
            Factor { lang, attestation: Attestation::VerifiedSigmaStar, source: None }
        } else {
            Factor::asserted(lang, note)
        }
    }

    /// Attaches the expression the factor was written as.
    pub fn with_source(mut self, source: impl Into<String>) -> Factor {
        self.source = Some(source.into());
        self
    }

    pub fn language(&self) -> &FactorialLanguage {
        &self.lang
    }

    pub fn attestation(&self) -> &Attestation {
        &self.attestation
    }

    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }

    /// `Γ*` when verified, the source expression when known, otherwise an
    /// expression derived from the automaton.
    pub fn expression(&self) -> String {
        if self.attestation == Attestation::VerifiedSigmaStar {
            if let Some(gamma) = self.lang.as_sigma_star() {
                return sigma_star_text(&gamma);
            }
        }
        match &self.source {
            Some(s) => s.clone(),
            None => Expr::from_language(self.lang.language()).to_string(),
        }
    }
}

fn sigma_star_text(gamma: &Alphabet) -> String {
    match gamma.len() {
        0 => String::from("λ"),
        1 => format!("{}*", gamma.symbols()[0]),
        _ => format!("{gamma}*"),
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expression())
    }
}

/// A nonempty sequence of factors. {λ} only appears as the sole factor of
/// the unit decomposition `[{λ}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    factors: Vec<Factor>,
}

impl Decomposition {
    pub fn new(factors: Vec<Factor>) -> Result<Decomposition> {
        let Some(first) = factors.first() else {
            return Err(Error::InvalidDecomposition(String::from("no factors")));
        };
        let sigma = first.lang.alphabet();
        if factors.iter().any(|f| f.lang.alphabet() != sigma) {
            return Err(Error::AlphabetMismatch);
        }
        if factors.len() > 1 {
            if let Some(i) = factors.iter().position(|f| f.lang.is_epsilon()) {
                return Err(Error::InvalidDecomposition(format!(
                    "factor {} is {{λ}} in a decomposition of length {}",
                    i + 1,
                    factors.len()
                )));
            }
        }
        Ok(Decomposition { factors })
    }

    /// `[{λ}]`
    pub fn unit(sigma: &Alphabet) -> Decomposition {
        let f = Factor::sigma_star(sigma, &Alphabet::empty()).expect("∅ is a subalphabet");
        Decomposition { factors: alloc::vec![f] }
    }

    /// Catenates factor sequences, dropping {λ} entries; all-{λ} gives the
    /// unit decomposition.
    pub fn join(sigma: &Alphabet, parts: &[&[Factor]]) -> Result<Decomposition> {
        let factors: Vec<Factor> = parts
            .iter()
            .flat_map(|p| p.iter())
            .filter(|f| !f.lang.is_epsilon())
            .cloned()
            .collect();
        if factors.is_empty() {
            Ok(Decomposition::unit(sigma))
        } else {
            Decomposition::new(factors)
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.factors[0].lang.alphabet()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].lang.is_epsilon()
    }

    pub fn first(&self) -> &Factor {
        &self.factors[0]
    }

    pub fn last(&self) -> &Factor {
        &self.factors[self.factors.len() - 1]
    }

    /// Some factor carries no indecomposability argument, so canonicity
    /// holds only conditionally.
    pub fn is_conditional(&self) -> bool {
        self.factors.iter().any(|f| f.attestation == Attestation::Unverified)
    }

    /// Left-to-right catenation of the factors.
    pub fn product(&self) -> Result<FactorialLanguage> {
        let mut acc = self.factors[0].lang.clone();
        for f in &self.factors[1..] {
            acc = acc.concat(&f.lang)?;
        }
        Ok(acc)
    }

    /// Minimal, and every factor verified or asserted.
    pub fn is_attested_canonical(&self) -> Result<bool> {
        Ok(!self.is_conditional() && audit_minimality(self)?.is_minimal())
    }
}

impl fmt::Display for Decomposition {
    /// Factors joined by ` . `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" . ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Same length and component-wise equal languages; attestations and
/// sources are ignored.
pub fn decomp_equal(d1: &Decomposition, d2: &Decomposition) -> bool {
    d1.len() == d2.len() && d1.factors.iter().zip(&d2.factors).all(|(x, y)| x.lang == y.lang)
}

/// The smallest factorial `Y` with `Y·b = a·b`, namely `R_{Δ(b)}(a)`.
pub fn minimal_left_factor(a: &FactorialLanguage, b: &FactorialLanguage) -> Result<FactorialLanguage> {
    r_delta(a, &delta_alphabet(b))
}

/// The smallest factorial `Y` with `a·Y = a·b`, namely `L_{Π(a)}(b)`.
pub fn minimal_right_factor(a: &FactorialLanguage, b: &FactorialLanguage) -> Result<FactorialLanguage> {
    l_pi(b, &pi_alphabet(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `R_Δ` applied from the last factor backwards.
    RightResidual,
    /// `L_Π` applied from the first factor forwards.
    LeftResidual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    /// 1-based factor position.
    pub index: usize,
    /// The subalphabet applied at this position (Δ_i or Π_j).
    pub subalphabet: Alphabet,
    /// The resulting factor (A_i′ or B_j′); {λ} when collapsed.
    pub factor: FactorialLanguage,
    /// The input factor lay inside `subalphabet*` and vanished.
    pub collapsed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTrace {
    pub direction: Direction,
    pub steps: Vec<ChainStep>,
}

impl fmt::Display for ChainTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sub, fac) = match self.direction {
            Direction::RightResidual => ("Δ", "A"),
            Direction::LeftResidual => ("Π", "B"),
        };
        for (n, s) in self.steps.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{sub}_{} = {}  {fac}_{}' = ", s.index, s.subalphabet, s.index)?;
            if s.collapsed {
                f.write_str("λ (collapsed)")?;
            } else {
                write!(f, "{}", s.factor)?;
            }
        }
        Ok(())
    }
}

fn reattest(original: &Factor, shrunk: FactorialLanguage) -> Factor {
    if shrunk == original.lang {
        original.clone()
    } else if shrunk.as_sigma_star().is_some() {
        Factor { lang: shrunk, attestation: Attestation::VerifiedSigmaStar, source: None }
    } else {
        Factor::unverified(shrunk)
    }
}

/// Decomposition of `R_Δ(product(d))` for a canonical `d`, computed factor
/// by factor from the last one: `Δ_k = Δ`, and at each position either
/// `A_i′ = R_{Δ_i}(A_i)` with `Δ_{i−1} = Δ(A_i′)`, or, when `A_i ⊆ Δ_i*`,
/// `A_i′ = {λ}` with `Δ_{i−1} = Δ_i`. {λ} entries are dropped.
pub fn r_delta_chain(d: &Decomposition, delta: &Alphabet) -> Result<(Decomposition, ChainTrace)> {
    let sigma = d.alphabet();
    let mut current = delta.clone();
    let mut steps = Vec::with_capacity(d.len());
    let mut out: Vec<Factor> = Vec::with_capacity(d.len());
    for (i, factor) in d.factors.iter().enumerate().rev() {
        if factor.lang.within_star_of(&current) {
            steps.push(ChainStep {
                index: i + 1,
                subalphabet: current.clone(),
                factor: FactorialLanguage::epsilon(sigma),
                collapsed: true,
            });
            continue;
        }
        let shrunk = r_delta(&factor.lang, &current)?;
        let next = delta_alphabet(&shrunk);
        steps.push(ChainStep {
            index: i + 1,
            subalphabet: core::mem::replace(&mut current, next),
            factor: shrunk.clone(),
            collapsed: false,
        });
        out.push(reattest(factor, shrunk));
    }
    out.reverse();
    let trace = ChainTrace { direction: Direction::RightResidual, steps };
    Ok((Decomposition::join(sigma, &[&out])?, trace))
}

/// Mirror of [`r_delta_chain`]: decomposition of `L_Π(product(d))`, scanning
/// from the first factor with `Π_{j+1} = Π(B_j′)`.
pub fn l_pi_chain(d: &Decomposition, pi: &Alphabet) -> Result<(Decomposition, ChainTrace)> {
    let sigma = d.alphabet();
    let mut current = pi.clone();
    let mut steps = Vec::with_capacity(d.len());
    let mut out: Vec<Factor> = Vec::with_capacity(d.len());
    for (j, factor) in d.factors.iter().enumerate() {
        if factor.lang.within_star_of(&current) {
            steps.push(ChainStep {
                index: j + 1,
                subalphabet: current.clone(),
                factor: FactorialLanguage::epsilon(sigma),
                collapsed: true,
            });
            continue;
        }
        let shrunk = l_pi(&factor.lang, &current)?;
        let next = pi_alphabet(&shrunk);
        steps.push(ChainStep {
            index: j + 1,
            subalphabet: core::mem::replace(&mut current, next),
            factor: shrunk.clone(),
            collapsed: false,
        });
        out.push(reattest(factor, shrunk));
    }
    let trace = ChainTrace { direction: Direction::LeftResidual, steps };
    Ok((Decomposition::join(sigma, &[&out])?, trace))
}

/// Which rule produced a combined decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineCase {
    /// One operand is `[{λ}]`; the other is returned.
    Unit,
    /// Π and Δ incomparable: plain catenation.
    Incomparable,
    /// Π = Δ, neither boundary factor is Δ*: plain catenation.
    EqualKept,
    /// Π = Δ and the last left factor is Δ*: it is dropped.
    EqualDropLeft,
    /// Π = Δ, only the first right factor is Δ*: it is dropped.
    EqualDropRight,
    /// Π ⊊ Δ: the left operand is reduced by `R_Δ`.
    ShrinkLeft,
    /// Δ ⊊ Π: the right operand is reduced by `L_Π`.
    ShrinkRight,
}

impl CombineCase {
    /// 1 to 4 for the four rules, 0 for the unit shortcut.
    pub fn number(self) -> u8 {
        match self {
            CombineCase::Unit => 0,
            CombineCase::Incomparable => 1,
            CombineCase::EqualKept => 2,
            CombineCase::EqualDropLeft | CombineCase::EqualDropRight => 3,
            CombineCase::ShrinkLeft | CombineCase::ShrinkRight => 4,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            CombineCase::Unit => "unit operand",
            CombineCase::Incomparable => "Π and Δ incomparable",
            CombineCase::EqualKept => "Π = Δ, boundary factors kept",
            CombineCase::EqualDropLeft => "Π = Δ, last left factor is Δ* and is dropped",
            CombineCase::EqualDropRight => "Π = Δ, first right factor is Δ* and is dropped",
            CombineCase::ShrinkLeft => "Π ⊊ Δ, left operand reduced by R_Δ",
            CombineCase::ShrinkRight => "Δ ⊊ Π, right operand reduced by L_Π",
        }
    }
}

/// Result of [`catenate_canonical`].
#[derive(Clone, Debug)]
pub struct Catenation {
    pub case: CombineCase,
    /// Π of the left operand.
    pub pi: Alphabet,
    /// Δ of the right operand.
    pub delta: Alphabet,
    pub decomposition: Decomposition,
    /// Present for the two reducing rules.
    pub trace: Option<ChainTrace>,
}

/// The canonical decomposition of `AB` from canonical decompositions of
/// `A` and `B`.
///
/// Π is read off the last factor of `a` and Δ off the first factor of `b`
/// (for canonical decompositions these agree with Π(A) and Δ(B)). Both
/// inputs must pass [`audit_minimality`].
pub fn catenate_canonical(a: &Decomposition, b: &Decomposition) -> Result<Catenation> {
    let sigma = a.alphabet();
    if sigma != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if let Audit::Reducible { position, .. } = audit_minimality(a)? {
        return Err(Error::NotCanonical { operand: Operand::Left, position });
    }
    if let Audit::Reducible { position, .. } = audit_minimality(b)? {
        return Err(Error::NotCanonical { operand: Operand::Right, position });
    }
    let pi = pi_alphabet(&a.last().lang);
    let delta = delta_alphabet(&b.first().lang);
    let done = |case, decomposition, trace| Catenation {
        case,
        pi: pi.clone(),
        delta: delta.clone(),
        decomposition,
        trace,
    };
    if a.is_unit() {
        return Ok(done(CombineCase::Unit, b.clone(), None));
    }
    if b.is_unit() {
        return Ok(done(CombineCase::Unit, a.clone(), None));
    }
    let (af, bf) = (a.factors(), b.factors());
    if pi == delta {
        let boundary = FactorialLanguage::star_of(sigma, &delta)?;
        let (case, d) = if a.last().lang == boundary {
            (CombineCase::EqualDropLeft, Decomposition::join(sigma, &[&af[..af.len() - 1], bf])?)
        } else if b.first().lang == boundary {
            (CombineCase::EqualDropRight, Decomposition::join(sigma, &[af, &bf[1..]])?)
        } else {
            (CombineCase::EqualKept, Decomposition::join(sigma, &[af, bf])?)
        };
        Ok(done(case, d, None))
    } else if pi.is_proper_subset(&delta) {
        let (reduced, trace) = r_delta_chain(a, &delta)?;
        let d = Decomposition::join(sigma, &[reduced.factors(), bf])?;
        Ok(done(CombineCase::ShrinkLeft, d, Some(trace)))
    } else if delta.is_proper_subset(&pi) {
        let (reduced, trace) = l_pi_chain(b, &pi)?;
        let d = Decomposition::join(sigma, &[af, reduced.factors()])?;
        Ok(done(CombineCase::ShrinkRight, d, Some(trace)))
    } else {
        Ok(done(CombineCase::Incomparable, Decomposition::join(sigma, &[af, bf])?, None))
    }
}

/// Splits off `Π(x)*` on the right or `Δ(x)*` on the left when that gives
/// a factorization `x = y·z` with `y ≠ x` and `z ≠ x`, which proves `x`
/// decomposable. `None` proves nothing.
pub fn boundary_split(
    x: &FactorialLanguage,
) -> Result<Option<(FactorialLanguage, FactorialLanguage)>> {
    let sigma = x.alphabet();
    let pi = pi_alphabet(x);
    let tail = FactorialLanguage::star_of(sigma, &pi)?;
    if !pi.is_empty() && tail != *x {
        let head = r_delta(x, &pi)?;
        if head != *x && head.concat(&tail)? == *x {
            return Ok(Some((head, tail)));
        }
    }
    let delta = delta_alphabet(x);
    let head = FactorialLanguage::star_of(sigma, &delta)?;
    if !delta.is_empty() && head != *x {
        let tail = l_pi(x, &delta)?;
        if tail != *x && head.concat(&tail)? == *x {
            return Ok(Some((head, tail)));
        }
    }
    Ok(None)
}

/// Outcome of [`audit_minimality`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Audit {
    Minimal,
    /// Factor `position` (1-based) can be replaced by the proper factorial
    /// subset `candidate` without changing the product.
    Reducible { position: usize, candidate: FactorialLanguage },
}

impl Audit {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Audit::Minimal)
    }
}

/// Exact minimality check.
///
/// For each position `i`, with `P` the product of the factors before it and
/// `S` the product of those after it, the candidate
/// `M_i = L_{Π(P)}(R_{Δ(S)}(L_i))` is the reduction of `L_i` against both
/// neighbours; the decomposition is reducible when some `M_i ⊊ L_i` leaves
/// the product unchanged. An empty neighbour product is {λ}, whose Π and Δ
/// are ∅, so the end factors are reduced on one side only. Positions are
/// scanned from the last factor to the first.
pub fn audit_minimality(d: &Decomposition) -> Result<Audit> {
    if d.is_unit() {
        return Ok(Audit::Minimal);
    }
    let sigma = d.alphabet();
    let n = d.len();
    let mut prefixes = Vec::with_capacity(n + 1);
    prefixes.push(FactorialLanguage::epsilon(sigma));
    for f in &d.factors {
        let p = prefixes[prefixes.len() - 1].concat(&f.lang)?;
        prefixes.push(p);
    }
    let mut suffixes = Vec::with_capacity(n + 1);
    suffixes.push(FactorialLanguage::epsilon(sigma));
    for f in d.factors.iter().rev() {
        let s = f.lang.concat(&suffixes[suffixes.len() - 1])?;
        suffixes.push(s);
    }
    suffixes.reverse();
    let total = &prefixes[n];
    for (i, f) in d.factors.iter().enumerate().rev() {
        let (before, after) = (&prefixes[i], &suffixes[i + 1]);
        let right = r_delta(&f.lang, &delta_alphabet(after))?;
        let candidate = l_pi(&right, &pi_alphabet(before))?;
        if candidate.is_proper_subset(&f.lang)?
            && &before.concat(&candidate)?.concat(after)? == total
        {
            return Ok(Audit::Reducible { position: i + 1, candidate });
        }
    }
    Ok(Audit::Minimal)
}
