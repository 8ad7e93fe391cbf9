//! Canonical decompositions of factorial languages under catenation.
//!
//! A language is *factorial* when it is closed under taking factors
//! (contiguous subwords). Factorial languages form a monoid under
//! catenation, and every factorial language has a unique canonical
//! decomposition into indecomposable factorial languages. This crate
//! computes the canonical decomposition of a catenation `AB` from the
//! canonical decompositions of `A` and `B`, over regular languages held
//! as minimal deterministic automata.
//!
//! Layers, bottom up:
//!
//! - [`automata`]: exact regular-language engine ([`Language`]).
//! - [`expr`]: the expression syntax (`a*b*`, `Fac({a,ab}*)`, `(a*+b*)^4`).
//! - [`factorial`]: factorial closure, the extension subalphabets Π and Δ,
//!   and the residual operators `R_Δ` / `L_Π`.
//! - [`decomposition`]: decompositions, minimal factors, the chain
//!   procedures, the four-case combiner and the minimality audit.
//! - [`catalog`]: named languages and worked fixtures.
//! - [`oracle`]: bounded enumeration oracles and random generation used
//!   for differential testing.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alphabet;
pub mod automata;
pub mod catalog;
pub mod decomposition;
mod error;
pub mod expr;
pub mod factorial;
pub mod oracle;

pub use alphabet::{Alphabet, Symbol, Word};
pub use automata::{Automaton, Language, DEFAULT_STATE_LIMIT};
pub use decomposition::{
    audit_minimality, boundary_split, catenate_canonical, Attestation, Audit, Catenation, ChainStep, ChainTrace,
    CombineCase, Decomposition, Direction, Factor,
};
pub use error::{Error, Operand, Result};
pub use expr::Expr;
pub use factorial::FactorialLanguage;
