//! Command-line front end for `factlang` and the JSON automaton format.

mod app;
pub mod json;


pub use app::{run, Outcome, EXIT_OK, EXIT_SEMANTIC, EXIT_USAGE, EXIT_VERIFY};
