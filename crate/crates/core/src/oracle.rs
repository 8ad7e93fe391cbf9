//! Verification machinery independent of the decomposition rules:
//! length-bounded word sets, witness search for non-minimality, and seeded
//! generation of random factorial languages.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Word};
use crate::automata::{Automaton, Language};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::factorial::{closure_of, FactorialLanguage};

/// The members of a language up to a length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLanguage {
    pub bound: usize,
    pub words: BTreeSet<Word>,
}

impl TruncatedLanguage {
    pub fn of(lang: &Language, bound: usize) -> TruncatedLanguage {
        TruncatedLanguage { bound, words: lang.enumerate_up_to(bound).into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// All `xy` with `|xy| ≤ bound`. Exact on the slice: every word of
    /// length at most `bound` in `XY` splits into two words that are each
    /// no longer.
    pub fn catenate(&self, other: &TruncatedLanguage) -> TruncatedLanguage {
        let bound = self.bound.min(other.bound);
        let mut words = BTreeSet::new();
        for x in &self.words {
            for y in &other.words {
                if x.len() + y.len() <= bound {
                    words.insert(x.concat(y));
                }
            }
        }
        TruncatedLanguage { bound, words }
    }

    /// Every factor of every member. The slice stays exact because factors
    /// are never longer than the word they come from.
    pub fn factor_closure(&self) -> TruncatedLanguage {
        let words = self.words.iter().flat_map(|w| w.factors().collect::<Vec<_>>()).collect();
        TruncatedLanguage { bound: self.bound, words }
    }

    /// Closed under factors within the bound.
    pub fn is_factor_closed(&self) -> bool {
        self.words.iter().all(|w| w.factors().all(|f| self.words.contains(&f)))
    }
}

pub fn truncate(l: &FactorialLanguage, n: usize) -> TruncatedLanguage {
    TruncatedLanguage::of(l.language(), n)
}

/// `product(d) = l` on words of length at most `n`, computed by catenating
/// the truncated factors.
pub fn bounded_product_equal(d: &Decomposition, l: &FactorialLanguage, n: usize) -> bool {
    let mut acc = truncate(d.factors()[0].language(), n);
    for f in &d.factors()[1..] {
        acc = acc.catenate(&truncate(f.language(), n));
    }
    acc == truncate(l, n)
}

/// The largest factorial subset of `l` avoiding `w` as a factor:
/// `l ∩ complement(Σ*·w·Σ*)`.
pub fn exclude(l: &FactorialLanguage, w: &Word) -> Result<FactorialLanguage> {
    let sigma = l.alphabet();
    let all = Language::universal(sigma);
    let containing = all.concat(&Language::from_words(sigma, [w])?)?.concat(&all)?;
    let lang = l.language().difference(&containing)?;
    if lang.is_empty() {
        // Only possible for w = λ.
        return Err(Error::EmptyLanguage);
    }
    FactorialLanguage::new(lang)
}

/// Looks for a position `i` (1-based) and a nonempty word `w` of factor `i`
/// with `|w| ≤ n` such that replacing the factor by `exclude(L_i, w)`
/// leaves the product unchanged. Any proper factorial subset of `L_i`
/// misses some word `w` and lies inside `exclude(L_i, w)`, so a minimal
/// decomposition never yields a witness.
pub fn bounded_minimality_search(d: &Decomposition, n: usize) -> Result<Option<(usize, Word)>> {
    if d.is_unit() {
        return Ok(None);
    }
    let factors = d.factors();
    let total = d.product()?;
    let sigma = d.alphabet();
    for (i, f) in factors.iter().enumerate() {
        let mut before = FactorialLanguage::epsilon(sigma);
        for g in &factors[..i] {
            before = before.concat(g.language())?;
        }
        let mut after = FactorialLanguage::epsilon(sigma);
        for g in &factors[i + 1..] {
            after = after.concat(g.language())?;
        }
        for w in truncate(f.language(), n).words {
            if w.is_empty() {
                continue;
            }
            let reduced = exclude(f.language(), &w)?;
            if before.concat(&reduced)?.concat(&after)? == total {
                return Ok(Some((i + 1, w)));
            }
        }
    }
    Ok(None)
}

/// Parameters for [`random_factorial`].
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub alphabet: Alphabet,
    /// Upper bound on the state count of the generated acceptor.
    pub max_states: usize,
    /// Probability that a given (state, symbol) pair gets a transition.
    pub transition_density: f64,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(alphabet: Alphabet, max_states: usize, transition_density: f64, seed: u64) -> Self {
        GeneratorConfig { alphabet, max_states, transition_density, seed }
    }

    fn validate(&self) -> Result<()> {
        if self.max_states == 0 {
            return Err(Error::InvalidAutomaton(String::from("max_states must be at least 1")));
        }
        if !(0.0..=1.0).contains(&self.transition_density) {
            return Err(Error::InvalidAutomaton(String::from(
                "transition_density must lie in [0, 1]",
            )));
        }
        Ok(())
    }
}

const MAX_ATTEMPTS: usize = 100;

/// A random acceptor with at most `cfg.max_states` states, one initial
/// state and at most one transition per (state, symbol).
pub fn random_automaton<R: Rng>(cfg: &GeneratorConfig, rng: &mut R) -> Automaton {
    let states = rng.gen_range(1..=cfg.max_states);
    let mut transitions = Vec::new();
    for q in 0..states {
        for a in cfg.alphabet.iter() {
            if rng.gen_bool(cfg.transition_density) {
                transitions.push((q, a, rng.gen_range(0..states)));
            }
        }
    }
    let accepting = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    Automaton {
        alphabet: cfg.alphabet.clone(),
        state_count: states,
        initial: alloc::vec![0],
        accepting,
        transitions,
    }
}

/// The language of one random acceptor; may be empty and need not be
/// factorial. Deterministic in `cfg.seed`.
pub fn random_language(cfg: &GeneratorConfig) -> Result<Language> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Language::from_automaton(&random_automaton(cfg, &mut rng))
}

/// The factorial closure of a random acceptor, retrying while the acceptor
/// recognizes nothing. Deterministic in `cfg.seed`.
pub fn random_factorial(cfg: &GeneratorConfig) -> Result<FactorialLanguage> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..MAX_ATTEMPTS {
        let lang = Language::from_automaton(&random_automaton(cfg, &mut rng))?;
        if !lang.is_empty() {
            return FactorialLanguage::new(closure_of(&lang)?);
        }
    }
    Err(Error::GenerationExhausted { attempts: MAX_ATTEMPTS })
}
