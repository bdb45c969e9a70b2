//! Derived connectives. Each one is shorthand for a core formula and is
//! expanded eagerly; evaluation only ever sees the expansion.

use super::ast::{Formula, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Abbreviation {
    /// `t1 != t2`
    NotEqual(Term, Term),
    /// `true`
    Truth,
    /// `A1 => A2`
    StrongImplies(Formula, Formula),
    /// designatedness
    Des(Formula),
    /// consistency
    Cons(Formula),
    /// determinacy
    Det(Formula),
    /// term determinacy, `t` has a determinate value
    Defined(Term),
    /// strong equality `t1 == t2`
    StrongEqual(Term, Term),
}

impl Abbreviation {
    pub fn expand(self) -> Formula {
        match self {
            Abbreviation::NotEqual(t1, t2) => Formula::not(Formula::eq(t1, t2)),
            Abbreviation::Truth => Formula::not(Formula::Falsum),
            Abbreviation::StrongImplies(a1, a2) => Formula::and(
                Formula::implies(a1.clone(), a2.clone()),
                Formula::implies(Formula::not(a2), Formula::not(a1)),
            ),
            Abbreviation::Des(a) => Formula::not(Formula::implies(a, Formula::Falsum)),
            Abbreviation::Cons(a) => {
                let contradiction = Formula::and(a.clone(), Formula::not(a));
                Formula::not(Abbreviation::Des(contradiction).expand())
            }
            Abbreviation::Det(a) => {
                Abbreviation::Des(Formula::or(a.clone(), Formula::not(a))).expand()
            }
            Abbreviation::Defined(t) => Abbreviation::Des(Formula::eq(t.clone(), t)).expand(),
            Abbreviation::StrongEqual(t1, t2) => Formula::or(
                Formula::eq(t1.clone(), t2.clone()),
                Formula::not(Formula::or(
                    Abbreviation::Defined(t1).expand(),
                    Abbreviation::Defined(t2).expand(),
                )),
            ),
        }
    }
}

impl Formula {
    pub fn truth() -> Formula {
        Abbreviation::Truth.expand()
    }

    pub fn not_equal(t1: Term, t2: Term) -> Formula {
        Abbreviation::NotEqual(t1, t2).expand()
    }

    pub fn strong_implies(a1: Formula, a2: Formula) -> Formula {
        Abbreviation::StrongImplies(a1, a2).expand()
    }

    pub fn des(a: Formula) -> Formula {
        Abbreviation::Des(a).expand()
    }

    pub fn cons(a: Formula) -> Formula {
        Abbreviation::Cons(a).expand()
    }

    pub fn det(a: Formula) -> Formula {
        Abbreviation::Det(a).expand()
    }

    pub fn defined(t: Term) -> Formula {
        Abbreviation::Defined(t).expand()
    }

    pub fn strong_equal(t1: Term, t2: Term) -> Formula {
        Abbreviation::StrongEqual(t1, t2).expand()
    }
}
