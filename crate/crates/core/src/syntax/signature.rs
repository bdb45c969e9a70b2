use std::collections::{BTreeMap, BTreeSet};

use super::SyntaxError;

/// The reserved constant denoting an indeterminate value.
pub const NIL: &str = "nil";

/// Words the surface grammar reserves; none of them may be declared as a symbol.
pub const KEYWORDS: &[&str] = &[
    "forall", "exists", "true", "false", "des", "cons", "det", "def",
];

/// The non-logical symbols a language is built from.
///
/// Constants keep their declaration order: the domain closure axiom and the
/// element numbering of relational structures both follow it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    constants: Vec<String>,
    functions: BTreeMap<String, usize>,
    predicates: BTreeMap<String, usize>,
    propositions: BTreeSet<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolKind {
    Constant,
    Function(usize),
    Predicate(usize),
    Proposition,
}

fn check_identifier(name: &str) -> Result<(), SyntaxError> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        }
        _ => false,
    };
    if !ok {
        return Err(SyntaxError::InvalidDeclaration(format!(
            "`{name}` is not a valid identifier"
        )));
    }
    if KEYWORDS.contains(&name) {
        return Err(SyntaxError::InvalidDeclaration(format!(
            "`{name}` is a reserved word"
        )));
    }
    Ok(())
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// A signature whose only constant is `nil`.
    pub fn with_nil() -> Self {
        let mut sig = Self::default();
        sig.constants.push(NIL.to_owned());
        sig
    }

    pub fn kind_of(&self, name: &str) -> Option<SymbolKind> {
        if self.constants.iter().any(|c| c == name) {
            Some(SymbolKind::Constant)
        } else if let Some(&n) = self.functions.get(name) {
            Some(SymbolKind::Function(n))
        } else if let Some(&n) = self.predicates.get(name) {
            Some(SymbolKind::Predicate(n))
        } else if self.propositions.contains(name) {
            Some(SymbolKind::Proposition)
        } else {
            None
        }
    }

    fn check_fresh(&self, name: &str) -> Result<(), SyntaxError> {
        check_identifier(name)?;
        if self.kind_of(name).is_some() {
            return Err(SyntaxError::InvalidDeclaration(format!(
                "`{name}` is declared twice"
            )));
        }
        Ok(())
    }

    pub fn add_constant(&mut self, name: &str) -> Result<(), SyntaxError> {
        // `nil` is the one reserved name that may be declared, and only as a constant.
        if name == NIL {
            if !self.has_constant(NIL) {
                self.constants.push(NIL.to_owned());
            }
            return Ok(());
        }
        self.check_fresh(name)?;
        self.constants.push(name.to_owned());
        Ok(())
    }

    pub fn add_function(&mut self, name: &str, arity: usize) -> Result<(), SyntaxError> {
        if arity == 0 {
            return Err(SyntaxError::InvalidDeclaration(format!(
                "function `{name}` needs a positive arity; declare it as a constant instead"
            )));
        }
        self.check_reserved(name)?;
        self.check_fresh(name)?;
        self.functions.insert(name.to_owned(), arity);
        Ok(())
    }

    pub fn add_predicate(&mut self, name: &str, arity: usize) -> Result<(), SyntaxError> {
        if arity == 0 {
            return Err(SyntaxError::InvalidDeclaration(format!(
                "predicate `{name}` needs a positive arity; declare it as a proposition instead"
            )));
        }
        self.check_reserved(name)?;
        self.check_fresh(name)?;
        self.predicates.insert(name.to_owned(), arity);
        Ok(())
    }

    pub fn add_proposition(&mut self, name: &str) -> Result<(), SyntaxError> {
        self.check_reserved(name)?;
        self.check_fresh(name)?;
        self.propositions.insert(name.to_owned());
        Ok(())
    }

    fn check_reserved(&self, name: &str) -> Result<(), SyntaxError> {
        if name == NIL {
            return Err(SyntaxError::InvalidDeclaration(
                "`nil` is reserved for the null constant".to_owned(),
            ));
        }
        Ok(())
    }

    pub fn has_constant(&self, name: &str) -> bool {
        self.constants.iter().any(|c| c == name)
    }

    pub fn constants(&self) -> &[String] {
        &self.constants
    }

    pub fn functions(&self) -> &BTreeMap<String, usize> {
        &self.functions
    }

    pub fn predicates(&self) -> &BTreeMap<String, usize> {
        &self.predicates
    }

    pub fn propositions(&self) -> &BTreeSet<String> {
        &self.propositions
    }

    pub fn predicate_arity(&self, name: &str) -> Option<usize> {
        self.predicates.get(name).copied()
    }

    pub fn function_arity(&self, name: &str) -> Option<usize> {
        self.functions.get(name).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_disjoint() {
        let mut sig = Signature::new();
        sig.add_constant("a").unwrap();
        assert!(sig.add_predicate("a", 1).is_err());
        assert!(sig.add_proposition("a").is_err());
        sig.add_predicate("P", 2).unwrap();
        assert!(sig.add_function("P", 1).is_err());
        assert_eq!(sig.kind_of("P"), Some(SymbolKind::Predicate(2)));
    }

    #[test]
    fn reserved_words_rejected() {
        let mut sig = Signature::new();
        assert!(sig.add_constant("forall").is_err());
        assert!(sig.add_predicate("nil", 1).is_err());
        assert!(sig.add_predicate("Q", 0).is_err());
        assert!(sig.add_constant("1a").is_err());
        // nil as a constant is idempotent
        sig.add_constant("nil").unwrap();
        sig.add_constant("nil").unwrap();
        assert_eq!(sig.constants(), &["nil".to_owned()]);
    }
}
