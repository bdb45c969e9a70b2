//! The four-valued matrix, finite structures and valuations.

mod eval;
mod structure;
mod truth;

use thiserror::Error;

pub use eval::{
    assignments, countermodel_over, entails_over, eval_formula, eval_term, is_model, Assignment,
};
pub use structure::{propositional_structures, Element, Flavor, Structure, BOTTOM};
pub use truth::{tv_and, tv_impl, tv_not, tv_or, tv_quant, Quantifier, TruthValue, ALL_VALUES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("symbol `{0}` is not interpreted by the structure")]
    Undeclared(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
}
