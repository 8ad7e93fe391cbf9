//! JSON interchange for automata.
//!
//! ```json
//! {"alphabet": ["a","b"], "states": 2, "initial": [0], "accepting": [0],
//!  "transitions": [[0, "a", 0], [0, "b", 1], [1, "a", 1], [1, "b", 1]]}
//! ```
//!
//! States are 0-based. Writing always goes through the canonical minimal
//! table, so reading a written file and writing it again reproduces the
//! same bytes.

use std::fmt;
use std::fs;
use std::path::Path;

use factlang::{Alphabet, Automaton, FactorialLanguage, Language};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonAutomaton {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: Vec<usize>,
    pub accepting: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
}

#[derive(Debug)]
pub enum JsonError {
    Io(std::io::Error),
    Parse(serde_json::Error),
    /// A symbol entry is not exactly one character.
    BadSymbol(String),
    Language(factlang::Error),
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsonError::Io(e) => write!(f, "{e}"),
            JsonError::Parse(e) => write!(f, "malformed automaton JSON: {e}"),
            JsonError::BadSymbol(s) => write!(f, "symbol {s:?} is not a single character"),
            JsonError::Language(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for JsonError {}

impl From<factlang::Error> for JsonError {
    fn from(e: factlang::Error) -> Self {
        JsonError::Language(e)
    }
}

fn symbol(s: &str) -> Result<char, JsonError> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(JsonError::BadSymbol(s.to_string())),
    }
}

impl JsonAutomaton {
    pub fn from_automaton(aut: &Automaton) -> JsonAutomaton {
        JsonAutomaton {
            alphabet: aut.alphabet.iter().map(String::from).collect(),
            states: aut.state_count,
            initial: aut.initial.clone(),
            accepting: aut.accepting.clone(),
            transitions: aut.transitions.iter().map(|&(p, a, q)| (p, a.to_string(), q)).collect(),
        }
    }

    /// The canonical form of `lang`.
    pub fn from_language(lang: &Language) -> JsonAutomaton {
        Self::from_automaton(&lang.to_automaton())
    }

    pub fn to_automaton(&self) -> Result<Automaton, JsonError> {
        let symbols = self.alphabet.iter().map(|s| symbol(s)).collect::<Result<Vec<_>, _>>()?;
        let alphabet = Alphabet::new(symbols)?;
        let transitions = self
            .transitions
            .iter()
            .map(|(p, a, q)| Ok((*p, symbol(a)?, *q)))
            .collect::<Result<Vec<_>, JsonError>>()?;
        let aut = Automaton {
            alphabet,
            state_count: self.states,
            initial: self.initial.clone(),
            accepting: self.accepting.clone(),
            transitions,
        };
        aut.validate()?;
        Ok(aut)
    }

    pub fn to_language(&self) -> Result<Language, JsonError> {
        Ok(Language::from_automaton(&self.to_automaton()?)?)
    }

    pub fn parse(text: &str) -> Result<JsonAutomaton, JsonError> {
        serde_json::from_str(text).map_err(JsonError::Parse)
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

pub fn read_language(path: &Path) -> Result<Language, JsonError> {
    let text = fs::read_to_string(path).map_err(JsonError::Io)?;
    JsonAutomaton::parse(&text)?.to_language()
}

/// Reads an automaton and checks that it recognizes a factorial language.
pub fn read_factorial(path: &Path) -> Result<FactorialLanguage, JsonError> {
    Ok(FactorialLanguage::new(read_language(path)?)?)
}

pub fn write_language(path: &Path, lang: &Language) -> Result<(), JsonError> {
    let mut text = JsonAutomaton::from_language(lang).to_pretty();
    text.push('\n');
    fs::write(path, text).map_err(JsonError::Io)
}
