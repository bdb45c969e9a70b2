use crate::semantics::Element;
use crate::syntax::{Formula, Signature, NIL};

use super::DatabaseError;

/// A signature meeting the conditions for relational languages: finitely
/// many constants including `nil` and at least one other, no function symbols,
/// no proposition symbols.
///
/// Every relational structure over the language shares one domain: element 0
/// is ⊥ (denoted by `nil`) and element `i ≥ 1` is the `i`-th non-nil constant
/// in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationalLanguage {
    sig: Signature,
    names: Vec<String>,
}

impl RelationalLanguage {
    pub fn new(mut sig: Signature) -> Result<Self, DatabaseError> {
        sig.add_constant(NIL).expect("nil is always declarable");
        if !sig.functions().is_empty() {
            return Err(DatabaseError::InvalidLanguage(
                "relational languages have no function symbols".into(),
            ));
        }
        if !sig.propositions().is_empty() {
            return Err(DatabaseError::InvalidLanguage(
                "relational languages have no proposition symbols".into(),
            ));
        }
        let mut names = vec![NIL.to_owned()];
        names.extend(sig.constants().iter().filter(|c| *c != NIL).cloned());
        if names.len() < 2 {
            return Err(DatabaseError::InvalidLanguage(
                "at least one constant other than nil is required".into(),
            ));
        }
        Ok(RelationalLanguage { sig, names })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// Number of domain elements, ⊥ included.
    pub fn domain_size(&self) -> usize {
        self.names.len()
    }

    /// Constants in element order: `nil` first, then the others as declared.
    pub fn constants(&self) -> &[String] {
        &self.names
    }

    pub fn non_nil_constants(&self) -> &[String] {
        &self.names[1..]
    }

    pub fn element_of(&self, constant: &str) -> Option<Element> {
        self.names.iter().position(|c| c == constant)
    }

    pub fn constant_of(&self, d: Element) -> &str {
        &self.names[d]
    }

    /// Predicate symbols with their arities, sorted by name.
    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> {
        self.sig.predicates().iter().map(|(p, &n)| (p.as_str(), n))
    }

    /// Number of ground atoms `P(c1, ..., cn)` over the language.
    pub fn ground_atom_count(&self) -> u128 {
        self.predicates()
            .map(|(_, n)| (self.domain_size() as u128).saturating_pow(n as u32))
            .fold(0u128, u128::saturating_add)
    }

    pub fn check_formula(&self, f: &Formula) -> Result<(), DatabaseError> {
        f.check(&self.sig)
            .map_err(|e| DatabaseError::InvalidFormula(format!("{f}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nil_is_element_zero() {
        let mut sig = Signature::new();
        sig.add_constant("b").unwrap();
        sig.add_constant("a").unwrap();
        sig.add_predicate("P", 2).unwrap();
        let lang = RelationalLanguage::new(sig).unwrap();
        assert_eq!(lang.constants(), &["nil", "b", "a"]);
        assert_eq!(lang.element_of("nil"), Some(0));
        assert_eq!(lang.element_of("a"), Some(2));
        assert_eq!(lang.ground_atom_count(), 9);
    }

    #[test]
    fn rejects_non_relational_signatures() {
        assert!(RelationalLanguage::new(Signature::with_nil()).is_err());
        let mut sig = Signature::new();
        sig.add_constant("a").unwrap();
        sig.add_function("f", 1).unwrap();
        assert!(RelationalLanguage::new(sig).is_err());
        let mut sig = Signature::new();
        sig.add_constant("a").unwrap();
        sig.add_proposition("p").unwrap();
        assert!(RelationalLanguage::new(sig).is_err());
    }
}
