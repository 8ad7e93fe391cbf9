use alloc::string::String;
use core::fmt;

use crate::alphabet::Symbol;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands were built over different session alphabets.
    AlphabetMismatch,
    /// A symbol outside the session alphabet.
    UnknownSymbol { symbol: Symbol, position: Option<usize> },
    /// Duplicate symbol in an alphabet declaration.
    DuplicateSymbol(Symbol),
    /// Expression syntax error at a character offset.
    Syntax { position: usize, message: String },
    /// Determinization exceeded the state cap.
    StateLimit { limit: usize },
    /// A malformed automaton (bad state index, unknown letter, ...).
    InvalidAutomaton(String),
    /// The empty language where a factorial language is required.
    EmptyLanguage,
    /// The language is not closed under factors.
    NotFactorial,
    /// Empty subalphabet where a nonempty one is required.
    EmptySubalphabet,
    /// A factor does not match the attestation it carries.
    InvalidAttestation(String),
    /// A decomposition violates its structural invariants.
    InvalidDecomposition(String),
    /// A decomposition passed to the combiner is not minimal.
    NotCanonical { operand: Operand, position: usize },
    /// Fixture number outside `1..=5`, or a bad repetition parameter.
    FixtureOutOfRange(usize),
    /// Random generation failed to produce a nonempty language.
    GenerationExhausted { attempts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    Left,
    Right,
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Left => f.write_str("left"),
            Operand::Right => f.write_str("right"),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlphabetMismatch => f.write_str("operands have different alphabets"),
            Error::UnknownSymbol { symbol, position: Some(p) } => {
                write!(f, "symbol '{symbol}' at position {p} is not in the alphabet")
            }
            Error::UnknownSymbol { symbol, position: None } => {
                write!(f, "symbol '{symbol}' is not in the alphabet")
            }
            Error::DuplicateSymbol(s) => write!(f, "duplicate symbol '{s}' in alphabet"),
            Error::Syntax { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            Error::StateLimit { limit } => {
                write!(f, "determinization exceeded the limit of {limit} states")
            }
            Error::InvalidAutomaton(m) => write!(f, "invalid automaton: {m}"),
            Error::EmptyLanguage => f.write_str("the empty language is not factorial"),
            Error::NotFactorial => f.write_str("language is not factorial"),
            Error::EmptySubalphabet => f.write_str("subalphabet must be nonempty"),
            Error::InvalidAttestation(m) => write!(f, "invalid attestation: {m}"),
            Error::InvalidDecomposition(m) => write!(f, "invalid decomposition: {m}"),
            Error::NotCanonical { operand, position } => write!(
                f,
                "{operand} decomposition is not minimal: factor {position} can be shrunk"
            ),
            Error::FixtureOutOfRange(n) => write!(f, "no fixture numbered {n} (expected 1..=5)"),
            Error::GenerationExhausted { attempts } => {
                write!(f, "no nonempty language generated after {attempts} attempts")
            }
        }
    }
}

impl core::error::Error for Error {}
