//! Queries and the three answer notions: plain, consistent and strongly
//! consistent answers.

mod repairs;

use std::collections::BTreeSet;

use crate::database::ground::{Grounder, Mode};
use crate::database::{
    entails_rsa, rsa, theory_entails, Database, DatabaseError, Fact, FactBase, RelationalLanguage,
    SemiAtomicFact,
};
use crate::semantics::assignments;
use crate::syntax::{Formula, Term, NIL};

pub use repairs::{leq_lambda, repairs, repairs_exhaustive, RepairSet};

/// `(x1, ..., xn) : A`, with a name for referring to it from files and the
/// command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Query {
    name: String,
    head: Vec<String>,
    body: Formula,
}

/// Constants substituted for a query's head variables, in head order.
pub type AnswerTuple = Vec<String>;

impl Query {
    pub fn new(name: &str, head: Vec<String>, body: Formula) -> Result<Self, DatabaseError> {
        let distinct: BTreeSet<&String> = head.iter().collect();
        if distinct.len() != head.len() {
            return Err(DatabaseError::InvalidQuery(format!(
                "{name}: head variables must be distinct"
            )));
        }
        if let Some(x) = body.free_vars().into_iter().find(|x| !head.contains(x)) {
            return Err(DatabaseError::InvalidQuery(format!(
                "{name}: `{x}` is free in the body but not in the head"
            )));
        }
        Ok(Query {
            name: name.to_owned(),
            head,
            body,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn head(&self) -> &[String] {
        &self.head
    }

    pub fn body(&self) -> &Formula {
        &self.body
    }

    pub fn arity(&self) -> usize {
        self.head.len()
    }

    /// `[x1 := c1] ... [xn := cn] A`
    pub fn instance(&self, tuple: &[String]) -> Formula {
        self.head
            .iter()
            .zip(tuple)
            .fold(self.body.clone(), |acc, (x, c)| {
                acc.substitute(x, &Term::constant(c))
            })
    }
}

/// Whether `q` is a query for the database's language.
pub fn is_applicable(q: &Query, db: &Database) -> bool {
    let sig = db.language().signature();
    let free = q.body.free_vars();
    q.body.check(sig).is_ok()
        && free.iter().all(|x| q.head.contains(x))
        && q.head.iter().all(|x| sig.kind_of(x).is_none())
        && q.head.iter().collect::<BTreeSet<_>>().len() == q.head.len()
}

fn require_applicable(q: &Query, db: &Database) -> Result<(), DatabaseError> {
    if is_applicable(q, db) {
        Ok(())
    } else {
        Err(DatabaseError::InvalidQuery(format!(
            "`{}` is not a query for this database's language",
            q.name
        )))
    }
}

/// Every tuple of constants of length `n`, lexicographic in the language's
/// constant order (`nil` first).
pub fn candidate_tuples(lang: &RelationalLanguage, n: usize) -> Vec<AnswerTuple> {
    assignments(
        lang.domain_size(),
        &(0..n).map(|i| i.to_string()).collect::<Vec<_>>(),
    )
    .map(|a| {
        (0..n)
            .map(|i| lang.constant_of(a.get(&i.to_string())).to_owned())
            .collect()
    })
    .collect()
}

/// Drops tuples mentioning `nil`.
pub fn without_nulls(tuples: Vec<AnswerTuple>) -> Vec<AnswerTuple> {
    tuples
        .into_iter()
        .filter(|t| t.iter().all(|c| c != NIL))
        .collect()
}

/// Tuples whose instance of the body follows from `RT(R, Λ)`.
pub fn answers(db: &Database, q: &Query) -> Result<Vec<AnswerTuple>, DatabaseError> {
    require_applicable(q, db)?;
    let mut out = Vec::new();
    for tuple in candidate_tuples(db.language(), q.arity()) {
        if theory_entails(db.language(), db.basis(), &q.instance(&tuple))? {
            out.push(tuple);
        }
    }
    Ok(out)
}

/// A ⊆-maximal set `Φ` of semi-atomic facts that the theory proves and that
/// the constraints can live with.
///
/// The semi-atomic facts the theory proves are one per ground atom: the atom
/// itself when it is listed in `Λ`, its negation otherwise. A core is that
/// whole pool minus the atoms a repair had to change, so it is stored as the
/// basis together with the dropped atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Core {
    basis: FactBase,
    dropped: BTreeSet<Fact>,
}

impl Core {
    pub fn dropped(&self) -> &BTreeSet<Fact> {
        &self.dropped
    }

    /// The literal the core keeps for `fact`, if any.
    pub fn literal_for(&self, fact: &Fact) -> Option<SemiAtomicFact> {
        if self.dropped.contains(fact) {
            None
        } else if self.basis.contains(fact) {
            Some(SemiAtomicFact::positive(fact.clone()))
        } else {
            Some(SemiAtomicFact::negative(fact.clone()))
        }
    }

    /// Every member of the core, in fact order.
    pub fn literals(&self, lang: &RelationalLanguage) -> Vec<SemiAtomicFact> {
        ground_atoms(lang)
            .into_iter()
            .filter_map(|f| self.literal_for(&f))
            .collect()
    }

    /// `Φ, RSA(R) ⊨ A` for this core `Φ`.
    pub fn entails(&self, lang: &RelationalLanguage, a: &Formula) -> Result<bool, DatabaseError> {
        lang.check_formula(a)?;
        let vars: Vec<String> = a.free_vars().into_iter().collect();
        for alpha in assignments(lang.domain_size(), &vars) {
            let mut g = Grounder::new(lang, Mode::FourValued);
            let goal = g.designated(a, alpha.bindings(), true)?;
            g.require(!goal);
            let atoms: Vec<_> = g.atoms().collect();
            for (fact, bits) in atoms {
                match self.literal_for(&fact) {
                    Some(l) if l.positive => g.add_clause(&[bits.designated]),
                    Some(_) => g.add_clause(&[bits.negation_designated]),
                    None => {}
                }
            }
            if g.solve() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Every ground atom of the language, sorted.
pub fn ground_atoms(lang: &RelationalLanguage) -> Vec<Fact> {
    let mut out = Vec::new();
    for (p, n) in lang.predicates() {
        for tuple in candidate_tuples(lang, n) {
            out.push(Fact {
                predicate: p.to_owned(),
                args: tuple,
            });
        }
    }
    out.sort();
    out
}

/// The semi-atomic facts proved by `RT(R, Λ)`: one per ground atom.
pub fn derivable_semi_atomic_facts(
    lang: &RelationalLanguage,
    basis: &FactBase,
) -> Vec<SemiAtomicFact> {
    ground_atoms(lang)
        .into_iter()
        .map(|f| {
            if basis.contains(&f) {
                SemiAtomicFact::positive(f)
            } else {
                SemiAtomicFact::negative(f)
            }
        })
        .collect()
}

/// The maximal qualifying sets `Φ`, one per repair, in repair order.
pub fn consistent_cores(db: &Database) -> Result<Vec<Core>, DatabaseError> {
    let mut sets = crate::database::correction::CorrectionSets::new(
        db.language(),
        db.basis(),
        db.constraints(),
    )?;
    let mut cores = Vec::new();
    while let Some(flips) = sets.next_set() {
        cores.push(Core {
            basis: db.basis().clone(),
            dropped: flips.into_iter().collect(),
        });
    }
    cores.sort();
    Ok(cores)
}

/// `Φ, RSA(R) ⊨ A` for an explicit set of semi-atomic facts.
pub fn phi_entails(
    lang: &RelationalLanguage,
    phi: &[SemiAtomicFact],
    a: &Formula,
) -> Result<bool, DatabaseError> {
    let mut gamma = rsa(lang);
    gamma.extend(phi.iter().map(SemiAtomicFact::to_formula));
    entails_rsa(lang, &gamma, a)
}

/// Tuples for which some qualifying `Φ` together with the structure axioms
/// entails the instance. Entailment is monotone in `Φ`, so only the maximal
/// sets need checking.
pub fn consistent_answers(db: &Database, q: &Query) -> Result<Vec<AnswerTuple>, DatabaseError> {
    let cores = consistent_cores(db)?;
    consistent_answers_with(db, &cores, q)
}

/// [`consistent_answers`] against precomputed cores.
pub fn consistent_answers_with(
    db: &Database,
    cores: &[Core],
    q: &Query,
) -> Result<Vec<AnswerTuple>, DatabaseError> {
    require_applicable(q, db)?;
    let mut out = Vec::new();
    for tuple in candidate_tuples(db.language(), q.arity()) {
        let instance = q.instance(&tuple);
        for core in cores {
            if core.entails(db.language(), &instance)? {
                out.push(tuple);
                break;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongAnswers {
    pub tuples: Vec<AnswerTuple>,
    /// No fact base is consistent with the constraints, so every tuple
    /// qualifies vacuously.
    pub vacuous: bool,
}

/// Tuples whose instance follows from `RT(R, Λ')` for every repair `Λ'`.
pub fn strongly_consistent_answers(
    db: &Database,
    q: &Query,
) -> Result<StrongAnswers, DatabaseError> {
    let found = repairs(db)?;
    strongly_consistent_answers_with(db, &found, q)
}

/// [`strongly_consistent_answers`] against precomputed repairs.
pub fn strongly_consistent_answers_with(
    db: &Database,
    found: &RepairSet,
    q: &Query,
) -> Result<StrongAnswers, DatabaseError> {
    require_applicable(q, db)?;
    let mut tuples = Vec::new();
    'tuples: for tuple in candidate_tuples(db.language(), q.arity()) {
        let instance = q.instance(&tuple);
        for basis in found.iter() {
            if !theory_entails(db.language(), basis, &instance)? {
                continue 'tuples;
            }
        }
        tuples.push(tuple);
    }
    Ok(StrongAnswers {
        tuples,
        vacuous: found.is_empty(),
    })
}
