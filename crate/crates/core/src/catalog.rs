//! Named languages and the worked combination fixtures.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::alphabet::{Alphabet, Word};
use crate::automata::Language;
use crate::decomposition::{Decomposition, Factor};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::factorial::{factorial_closure, FactorialLanguage};

/// Γ* as a verified factor. Γ must be nonempty: {λ} only stands alone as
/// the unit decomposition.
pub fn sigma_star(sigma: &Alphabet, gamma: &Alphabet) -> Result<Factor> {
    if gamma.is_empty() {
        return Err(Error::EmptySubalphabet);
    }
    Factor::sigma_star(sigma, gamma)
}

/// Fac(W*) for a nonempty finite set of words W, asserted indecomposable.
pub fn fac_word_star(sigma: &Alphabet, words: &[Word]) -> Result<Factor> {
    if words.is_empty() {
        return Err(Error::InvalidDecomposition(String::from("empty word set")));
    }
    let lang = factorial_closure(&Language::from_words(sigma, words)?.star()?)?;
    let set = Expr::WordSet(words.to_vec());
    Ok(Factor::asserted(lang, "Fac(W*) class").with_source(format!("Fac({set}*)")))
}

/// A worked combination: two canonical decompositions and the expected
/// canonical decomposition of their catenation.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub a: Decomposition,
    pub b: Decomposition,
    pub expected: Decomposition,
    /// Which of the four rules applies (1..=4).
    pub case_id: u8,
}

fn parse_factor(src: &str, sigma: &Alphabet, note: &str) -> Result<Factor> {
    let lang = FactorialLanguage::new(Expr::parse(src, sigma)?.build(sigma)?)?;
    Ok(Factor::attest(lang, note).with_source(src))
}

fn decomposition(srcs: &[&str], sigma: &Alphabet, note: &str) -> Result<Decomposition> {
    Decomposition::new(srcs.iter().map(|s| parse_factor(s, sigma, note)).collect::<Result<_>>()?)
}

/// Fixtures `1..=5`. `k` is the repetition parameter of fixture 5 (the
/// left operand has `2k` factors `a*+b*`); the other fixtures ignore it.
pub fn example_fixture(n: usize, k: usize) -> Result<Fixture> {
    let abc: Alphabet = "abc".chars().collect();
    let ab: Alphabet = "ab".chars().collect();
    let note = format!("catalog example{n}");
    let (sigma, a, b, expected, case_id): (&Alphabet, Vec<&str>, Vec<&str>, Vec<&str>, u8) = match n {
        1 => (&abc, ["{a,b}*"].into(), ["{a,c}*"].into(), ["{a,b}*", "{a,c}*"].into(), 1),
        2 => (
            &abc,
            ["Fac({a,ab}*)"].into(),
            ["Fac({a,ac}*)"].into(),
            ["Fac({a,ab}*)", "Fac({a,ac}*)"].into(),
            2,
        ),
        3 => (&ab, ["a*"].into(), ["Fac({a,ab}*)"].into(), ["Fac({a,ab}*)"].into(), 3),
        4 => (&ab, ["a*", "b*"].into(), ["b*", "a*"].into(), ["a*", "b*", "a*"].into(), 3),
        5 => {
            if k == 0 {
                return Err(Error::FixtureOutOfRange(n));
            }
            let mut expected = Vec::with_capacity(2 * k + 1);
            for _ in 0..k {
                expected.extend(["a*", "b*"]);
            }
            expected.push("a*");
            (&ab, alloc::vec!["a*+b*"; 2 * k], ["a*"].into(), expected, 4)
        }
        _ => return Err(Error::FixtureOutOfRange(n)),
    };
    Ok(Fixture {
        name: format!("example{n}"),
        a: decomposition(&a, sigma, &note)?,
        b: decomposition(&b, sigma, &note)?,
        expected: decomposition(&expected, sigma, &note)?,
        case_id,
    })
}

/// `(a*b*)^k + (b*a*)^k`, the product of fixture 5's left operand.
pub fn alternating_blocks(k: usize) -> Result<FactorialLanguage> {
    let ab: Alphabet = "ab".chars().collect();
    let src = format!("(a*b*)^{k}+(b*a*)^{k}");
    FactorialLanguage::new(Expr::parse(&src, &ab)?.build(&ab)?)
}

impl Fixture {
    /// One-line summary, e.g. `example4: a* . b* ⊗ b* . a* = a* . b* . a* (case 3)`.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} ⊗ {} = {} (case {})",
            self.name,
            self.a,
            self.b,
            self.expected,
            self.case_id
        )
    }
}
