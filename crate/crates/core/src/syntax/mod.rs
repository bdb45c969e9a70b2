//! Terms, formulas, signatures and the surface grammar.

mod abbrev;
mod ast;
mod parser;
mod signature;
mod subst;

#[cfg(test)]
mod properties;

use thiserror::Error;

pub use abbrev::Abbreviation;
pub use ast::{Formula, Term};
pub use parser::{parse_formula, parse_formula_list, parse_term, parse_variable_list};
pub use signature::{Signature, SymbolKind, KEYWORDS, NIL};
pub use subst::fresh_variable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("invalid declaration: {0}")]
    InvalidDeclaration(String),
    #[error("undeclared symbol `{0}`")]
    Undeclared(String),
    #[error("`{symbol}` expects {expected} argument(s), found {found}")]
    Arity {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}
