//! Relational languages, fact bases, relational theories and databases.

mod axioms;
mod consistency;
pub(crate) mod correction;
mod entail;
mod facts;
mod file;
pub(crate) mod ground;
mod language;
mod relational;

use thiserror::Error;

use crate::semantics::SemanticsError;
use crate::syntax::{Formula, SyntaxError};

pub use axioms::{
    completion_axiom, determinacy, domain_closure, equality_semi_normality, nil_indeterminacy,
    relational_theory, rsa, unique_names,
};
pub use consistency::{consistent_with, is_consistent_db, theory_satisfiable, ConsistencyReport};
pub use entail::{
    canonical_values, entails_rsa, entails_rsa_enumerative, theory_entails,
    theory_entails_canonical, theory_entails_generic,
};
pub use facts::{Fact, FactBase, SemiAtomicFact};
pub use file::{parse_database_file, DatabaseFile};
pub use language::RelationalLanguage;
pub use relational::{
    base_structure, canonical_models, classical_model, enumerate_rsa_models, models_isomorphic,
    nabla, rsa_model_count, RelationalStructure,
};

/// Default cap on the number of structures an enumeration may visit.
pub const DEFAULT_MAX_STRUCTURES: u64 = 10_000_000;

/// Default cap on the candidate-atom universe of the exhaustive repair search.
pub const DEFAULT_MAX_UNIVERSE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatabaseError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Syntax { line: usize, source: SyntaxError },
    #[error("invalid relational language: {0}")]
    InvalidLanguage(String),
    #[error("invalid fact {0}")]
    InvalidFact(String),
    #[error("invalid formula {0}")]
    InvalidFormula(String),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("invalid relational structure: {0}")]
    InvalidStructure(String),
    #[error("the premises lack the relational structure axiom {0}")]
    MissingAxiom(String),
    #[error("{needed} {what} exceed the limit of {limit}")]
    ResourceLimit {
        what: String,
        needed: u128,
        limit: u64,
    },
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

impl DatabaseError {
    /// Whether the error is a refusal to run past a configured ceiling.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, DatabaseError::ResourceLimit { .. })
    }

    /// Whether the error comes from malformed input text.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            DatabaseError::Parse { .. } | DatabaseError::Syntax { .. }
        )
    }
}

/// A relational language, a fact base `Λ` (standing for the theory
/// `RT(R, Λ)`), and integrity constraints `Ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Database {
    lang: RelationalLanguage,
    basis: FactBase,
    constraints: Vec<Formula>,
}

impl Database {
    pub fn new(
        lang: RelationalLanguage,
        basis: FactBase,
        constraints: Vec<Formula>,
    ) -> Result<Self, DatabaseError> {
        basis.check(&lang)?;
        for c in &constraints {
            lang.check_formula(c)?;
        }
        Ok(Database {
            lang,
            basis,
            constraints,
        })
    }

    pub fn language(&self) -> &RelationalLanguage {
        &self.lang
    }

    pub fn basis(&self) -> &FactBase {
        &self.basis
    }

    pub fn constraints(&self) -> &[Formula] {
        &self.constraints
    }

    pub fn theory(&self) -> Vec<Formula> {
        relational_theory(&self.lang, &self.basis)
    }

    /// The same language and constraints over another basis.
    pub fn with_basis(&self, basis: FactBase) -> Result<Database, DatabaseError> {
        Database::new(self.lang.clone(), basis, self.constraints.clone())
    }

    pub fn is_consistent(&self) -> Result<bool, DatabaseError> {
        consistent_with(&self.lang, &self.basis, &self.constraints)
    }
}

#[cfg(test)]
mod tests;
