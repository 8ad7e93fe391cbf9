//! Factorial languages, the extension subalphabets Π and Δ, and the
//! residual operators `R_Δ` and `L_Π`.

use core::fmt;

use crate::alphabet::Alphabet;
use crate::automata::{Automaton, Language, Nfa};
use crate::error::{Error, Result};

/// A nonempty regular language closed under taking factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorialLanguage(Language);

impl FactorialLanguage {
    /// Verifies factoriality; the empty language is rejected.
    pub fn new(lang: Language) -> Result<Self> {
        if lang.is_empty() {
            return Err(Error::EmptyLanguage);
        }
        if closure_of(&lang)? != lang {
            return Err(Error::NotFactorial);
        }
        Ok(FactorialLanguage(lang))
    }

    /// Reads an external automaton; factoriality is re-verified.
    pub fn from_automaton(aut: &Automaton) -> Result<Self> {
        Self::new(Language::from_automaton(aut)?)
    }

    /// {λ}
    pub fn epsilon(sigma: &Alphabet) -> Self {
        FactorialLanguage(Language::epsilon(sigma))
    }

    /// Γ*
    pub fn star_of(sigma: &Alphabet, gamma: &Alphabet) -> Result<Self> {
        Ok(FactorialLanguage(Language::star_of(sigma, gamma)?))
    }

    pub fn language(&self) -> &Language {
        &self.0
    }

    pub fn into_language(self) -> Language {
        self.0
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.0.alphabet()
    }

    pub fn is_epsilon(&self) -> bool {
        self.0.is_epsilon()
    }

    /// Catenation; the product of factorial languages is factorial.
    pub fn concat(&self, other: &FactorialLanguage) -> Result<FactorialLanguage> {
        Ok(FactorialLanguage(self.0.concat(&other.0)?))
    }

    pub fn is_subset(&self, other: &FactorialLanguage) -> Result<bool> {
        self.0.is_subset(&other.0)
    }

    pub fn is_proper_subset(&self, other: &FactorialLanguage) -> Result<bool> {
        self.0.is_proper_subset(&other.0)
    }

    /// `Some(Γ)` when the language is exactly Γ* for the set Γ of letters it
    /// uses. {λ} matches with Γ = ∅.
    pub fn as_sigma_star(&self) -> Option<Alphabet> {
        let gamma = self.0.occurring_symbols();
        match Language::star_of(self.alphabet(), &gamma) {
            Ok(s) if s == self.0 => Some(gamma),
            _ => None,
        }
    }

    /// `self ⊆ Γ*`
    pub fn within_star_of(&self, gamma: &Alphabet) -> bool {
        self.0.occurring_symbols().is_subset(gamma)
    }
}

impl fmt::Display for FactorialLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::expr::Expr::from_language(&self.0))
    }
}

/// Fac(x) for any regular `x`, the empty language included.
///
/// Trims the automaton to the states lying on an accepting path and makes
/// every remaining state both initial and accepting.
pub(crate) fn closure_of(x: &Language) -> Result<Language> {
    let sigma = x.alphabet();
    let mut nfa = Nfa::new(sigma.len());
    let map = nfa.embed(x);
    // `embed` already drops dead states; every state of a canonical table is
    // reachable, so the remaining ones are exactly the trimmed automaton.
    for s in map.into_iter().flatten() {
        nfa.add_initial(s);
        nfa.set_accepting(s, true);
    }
    Language::from_nfa(sigma, &nfa)
}

/// Fac(x). Errors on the empty language.
pub fn factorial_closure(x: &Language) -> Result<FactorialLanguage> {
    if x.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    Ok(FactorialLanguage(closure_of(x)?))
}

pub fn is_factorial(x: &Language) -> bool {
    !x.is_empty() && closure_of(x).is_ok_and(|c| &c == x)
}

/// Π(L) = {a : La ⊆ L}.
///
/// In the canonical table, `La ⊆ L` holds exactly when every accepting
/// state moves to an accepting state on `a`.
pub fn pi_alphabet(l: &FactorialLanguage) -> Alphabet {
    let lang = l.language();
    lang.alphabet()
        .iter()
        .enumerate()
        .filter(|&(a, _)| {
            (0..lang.state_count())
                .filter(|&q| lang.is_accepting(q))
                .all(|q| lang.is_accepting(lang.step(q, a)))
        })
        .map(|(_, s)| s)
        .collect()
}

/// Δ(L) = {a : aL ⊆ L}, tested as `L ⊆ a⁻¹L`.
pub fn delta_alphabet(l: &FactorialLanguage) -> Alphabet {
    let lang = l.language();
    lang.alphabet()
        .iter()
        .filter(|&a| {
            let quotient = lang.left_quotient(a).expect("symbol taken from the alphabet");
            lang.is_subset(&quotient).expect("same alphabet")
        })
        .collect()
}

/// R_Δ(A) = Fac(A \ AΔ): the words of `a` ending outside Δ, and their
/// factors.
pub fn r_delta(a: &FactorialLanguage, delta: &Alphabet) -> Result<FactorialLanguage> {
    let sigma = a.alphabet();
    if a.within_star_of(delta) {
        return Ok(FactorialLanguage::epsilon(sigma));
    }
    let tail = a.language().concat(&Language::letters(sigma, delta)?)?;
    factorial_closure(&a.language().difference(&tail)?)
}

/// L_Π(B) = Fac(B \ ΠB): the words of `b` starting outside Π, and their
/// factors.
pub fn l_pi(b: &FactorialLanguage, pi: &Alphabet) -> Result<FactorialLanguage> {
    let sigma = b.alphabet();
    if b.within_star_of(pi) {
        return Ok(FactorialLanguage::epsilon(sigma));
    }
    let head = Language::letters(sigma, pi)?.concat(b.language())?;
    factorial_closure(&b.language().difference(&head)?)
}
