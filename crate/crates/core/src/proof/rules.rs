use std::fmt;
use std::str::FromStr;

use crate::syntax::{Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleName {
    Id,
    Cut,
    FalsumL,
    AndL,
    AndR,
    OrL,
    OrR,
    ImpL,
    ImpR,
    AllL,
    AllR,
    ExL,
    ExR,
    NotFalsumR,
    NotNotL,
    NotNotR,
    NotAndL,
    NotAndR,
    NotOrL,
    NotOrR,
    NotImpL,
    NotImpR,
    NotAllL,
    NotAllR,
    NotExL,
    NotExR,
    EqRefl,
    EqRepl,
    DeltaEqL,
    DeltaEqR,
    NotL,
    NotR,
}

use RuleName::*;

/// (rule, ASCII name, symbolic name)
const NAMES: &[(RuleName, &str, &str)] = &[
    (Id, "Id", "Id"),
    (Cut, "Cut", "Cut"),
    (FalsumL, "F-L", "F-L"),
    (AndL, "and-L", "∧-L"),
    (AndR, "and-R", "∧-R"),
    (OrL, "or-L", "∨-L"),
    (OrR, "or-R", "∨-R"),
    (ImpL, "imp-L", "⊃-L"),
    (ImpR, "imp-R", "⊃-R"),
    (AllL, "all-L", "∀-L"),
    (AllR, "all-R", "∀-R"),
    (ExL, "ex-L", "∃-L"),
    (ExR, "ex-R", "∃-R"),
    (NotFalsumR, "notF-R", "¬F-R"),
    (NotNotL, "notnot-L", "¬¬-L"),
    (NotNotR, "notnot-R", "¬¬-R"),
    (NotAndL, "notand-L", "¬∧-L"),
    (NotAndR, "notand-R", "¬∧-R"),
    (NotOrL, "notor-L", "¬∨-L"),
    (NotOrR, "notor-R", "¬∨-R"),
    (NotImpL, "notimp-L", "¬⊃-L"),
    (NotImpR, "notimp-R", "¬⊃-R"),
    (NotAllL, "notall-L", "¬∀-L"),
    (NotAllR, "notall-R", "¬∀-R"),
    (NotExL, "notex-L", "¬∃-L"),
    (NotExR, "notex-R", "¬∃-R"),
    (EqRefl, "eq-Refl", "=-Refl"),
    (EqRepl, "eq-Repl", "=-Repl"),
    (DeltaEqL, "delta-eq-L", "δ-=-L"),
    (DeltaEqR, "delta-eq-R", "δ-=-R"),
    (NotL, "not-L", "¬-L"),
    (NotR, "not-R", "¬-R"),
];

impl RuleName {
    pub fn all() -> impl Iterator<Item = RuleName> {
        NAMES.iter().map(|&(r, _, _)| r)
    }

    pub fn ascii(self) -> &'static str {
        NAMES
            .iter()
            .find(|e| e.0 == self)
            .expect("every rule is named")
            .1
    }

    pub fn symbolic(self) -> &'static str {
        NAMES
            .iter()
            .find(|e| e.0 == self)
            .expect("every rule is named")
            .2
    }

    /// What the rule's witness list holds, in order.
    pub fn witness_kinds(self) -> &'static [WitnessKind] {
        use WitnessKind::*;
        match self {
            FalsumL | NotFalsumR => &[],
            EqRefl => &[TermW],
            EqRepl => &[Variable, FormulaW, TermW, TermW],
            DeltaEqL | DeltaEqR => &[TermW, TermW],
            AllL | ExR | NotExL | NotAllR => &[FormulaW, TermW],
            AllR | ExL | NotAllL | NotExR => &[FormulaW, Variable],
            _ => &[FormulaW],
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

impl FromStr for RuleName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .find(|&&(_, a, u)| a == s || u == s)
            .map(|e| e.0)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    FormulaW,
    TermW,
    Variable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Formula(Formula),
    Term(Term),
    Variable(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Formula(a) => write!(f, "{a}"),
            Witness::Term(t) => write!(f, "{t}"),
            Witness::Variable(x) => f.write_str(x),
        }
    }
}

/// A rule together with the formulas, terms and variables that instantiate
/// its schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleInstance {
    pub rule: RuleName,
    pub witnesses: Vec<Witness>,
}

impl RuleInstance {
    pub fn new(rule: RuleName, witnesses: Vec<Witness>) -> Self {
        RuleInstance { rule, witnesses }
    }

    pub fn with_formula(rule: RuleName, a: Formula) -> Self {
        RuleInstance::new(rule, vec![Witness::Formula(a)])
    }
}

impl fmt::Display for RuleInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.rule)?;
        for (i, w) in self.witnesses.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

/// Which rules a proof system admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleSystem {
    /// The base calculus, with `=-Refl`.
    Bd,
    /// The calculus for structures with an indeterminate element: `=-Refl`
    /// replaced by the two δ rules.
    Pbd,
    /// Classical first-order logic: the base calculus plus `¬-L` and `¬-R`.
    Focl,
    /// Paraconsistent but not paracomplete: the base calculus plus `¬-R`.
    Lp,
    /// Paracomplete but not paraconsistent: the base calculus plus `¬-L`.
    K3,
}

impl RuleSystem {
    pub fn admits(self, rule: RuleName) -> bool {
        match rule {
            EqRefl => self != RuleSystem::Pbd,
            DeltaEqL | DeltaEqR => self == RuleSystem::Pbd,
            NotL => matches!(self, RuleSystem::Focl | RuleSystem::K3),
            NotR => matches!(self, RuleSystem::Focl | RuleSystem::Lp),
            _ => true,
        }
    }
}

impl FromStr for RuleSystem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bd" => Ok(RuleSystem::Bd),
            "pbd" => Ok(RuleSystem::Pbd),
            "focl" => Ok(RuleSystem::Focl),
            "lp" => Ok(RuleSystem::Lp),
            "k3" => Ok(RuleSystem::K3),
            other => Err(format!(
                "unknown proof system `{other}` (expected bd, pbd, focl, lp or k3)"
            )),
        }
    }
}
