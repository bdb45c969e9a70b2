//! A checker for sequent-calculus derivations.
//!
//! The checker does not search for proofs. Every rule application names its
//! principal formula and any terms or eigenvariables it instantiates, and the
//! checker verifies the application against the rule schema.

mod check;
mod derivation;
mod file;
mod rules;
mod sequent;


use thiserror::Error;

pub use check::check_rule;
pub use derivation::{check_derivation, derives, Derivation, Justification, Step};
pub use file::{parse_proof_file, parse_sequent, ProofFile};
pub use rules::{RuleInstance, RuleName, RuleSystem, Witness, WitnessKind};
pub use sequent::Sequent;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProofError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("the derivation has no steps")]
    Empty,
    #[error("step {step}: {reason}")]
    InvalidStep { step: usize, reason: String },
    #[error("the derivation proves `{proved}`, which does not weaken to `{wanted}`")]
    WrongConclusion { proved: Sequent, wanted: Sequent },
}

impl ProofError {
    /// The step at fault, for errors that concern a single step.
    pub fn step(&self) -> Option<usize> {
        match self {
            ProofError::InvalidStep { step, .. } => Some(*step),
            _ => None,
        }
    }
}
