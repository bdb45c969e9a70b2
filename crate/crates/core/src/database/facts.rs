use std::collections::BTreeSet;
use std::fmt;

use crate::semantics::Element;
use crate::syntax::{Formula, Term};

use super::{DatabaseError, RelationalLanguage};

/// A ground atom `P(c1, ..., cn)` over constants of the language.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fact {
    pub predicate: String,
    pub args: Vec<String>,
}

impl Fact {
    pub fn new(predicate: &str, args: &[&str]) -> Fact {
        Fact {
            predicate: predicate.to_owned(),
            args: args.iter().map(|&a| a.to_owned()).collect(),
        }
    }

    pub fn from_elements(lang: &RelationalLanguage, predicate: &str, tuple: &[Element]) -> Fact {
        Fact {
            predicate: predicate.to_owned(),
            args: tuple
                .iter()
                .map(|&d| lang.constant_of(d).to_owned())
                .collect(),
        }
    }

    /// Reads a ground atom back from a formula; `None` for anything else.
    pub fn from_formula(f: &Formula) -> Option<Fact> {
        match f {
            Formula::Atom(p, args) => Some(Fact {
                predicate: p.clone(),
                args: args
                    .iter()
                    .map(|t| match t {
                        Term::Const(c) => Some(c.clone()),
                        _ => None,
                    })
                    .collect::<Option<_>>()?,
            }),
            _ => None,
        }
    }

    pub fn to_formula(&self) -> Formula {
        Formula::Atom(
            self.predicate.clone(),
            self.args.iter().map(|c| Term::Const(c.clone())).collect(),
        )
    }

    pub fn elements(&self, lang: &RelationalLanguage) -> Result<Vec<Element>, DatabaseError> {
        self.args
            .iter()
            .map(|c| {
                lang.element_of(c).ok_or_else(|| {
                    DatabaseError::InvalidFact(format!("{self}: `{c}` is not a constant"))
                })
            })
            .collect()
    }

    pub fn check(&self, lang: &RelationalLanguage) -> Result<(), DatabaseError> {
        match lang.signature().predicate_arity(&self.predicate) {
            None => Err(DatabaseError::InvalidFact(format!(
                "{self}: `{}` is not a declared predicate",
                self.predicate
            ))),
            Some(n) if n != self.args.len() => Err(DatabaseError::InvalidFact(format!(
                "{self}: `{}` takes {n} argument(s)",
                self.predicate
            ))),
            Some(_) => self.elements(lang).map(drop),
        }
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.predicate, self.args.join(","))
    }
}

/// An atomic fact or the negation of one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemiAtomicFact {
    pub fact: Fact,
    pub positive: bool,
}

impl SemiAtomicFact {
    pub fn positive(fact: Fact) -> Self {
        SemiAtomicFact {
            fact,
            positive: true,
        }
    }

    pub fn negative(fact: Fact) -> Self {
        SemiAtomicFact {
            fact,
            positive: false,
        }
    }

    pub fn to_formula(&self) -> Formula {
        if self.positive {
            self.fact.to_formula()
        } else {
            Formula::not(self.fact.to_formula())
        }
    }
}

impl fmt::Display for SemiAtomicFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.fact)
        } else {
            write!(f, "~{}", self.fact)
        }
    }
}

/// A finite set of atomic facts, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactBase {
    facts: BTreeSet<Fact>,
}

impl FactBase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, fact: Fact) -> bool {
        self.facts.insert(fact)
    }

    pub fn remove(&mut self, fact: &Fact) -> bool {
        self.facts.remove(fact)
    }

    pub fn contains(&self, fact: &Fact) -> bool {
        self.facts.contains(fact)
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fact> {
        self.facts.iter()
    }

    pub fn facts(&self) -> &BTreeSet<Fact> {
        &self.facts
    }

    pub fn symmetric_difference(&self, other: &FactBase) -> BTreeSet<Fact> {
        self.facts
            .symmetric_difference(&other.facts)
            .cloned()
            .collect()
    }

    /// `self` with the membership of every fact in `flips` toggled.
    pub fn toggled<'a>(&self, flips: impl IntoIterator<Item = &'a Fact>) -> FactBase {
        let mut out = self.clone();
        for f in flips {
            if !out.remove(f) {
                out.insert(f.clone());
            }
        }
        out
    }

    pub fn check(&self, lang: &RelationalLanguage) -> Result<(), DatabaseError> {
        self.facts.iter().try_for_each(|f| f.check(lang))
    }
}

impl FromIterator<Fact> for FactBase {
    fn from_iter<I: IntoIterator<Item = Fact>>(iter: I) -> Self {
        FactBase {
            facts: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a FactBase {
    type Item = &'a Fact;
    type IntoIter = std::collections::btree_set::Iter<'a, Fact>;

    fn into_iter(self) -> Self::IntoIter {
        self.facts.iter()
    }
}

impl fmt::Display for FactBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.facts.iter().map(Fact::to_string).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}
