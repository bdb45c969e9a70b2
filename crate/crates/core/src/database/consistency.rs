use crate::semantics::{assignments, is_model};
use crate::syntax::Formula;

use super::correction::CorrectionSets;
use super::ground::{Grounder, Mode};
use super::relational::classical_model;
use super::{Database, DatabaseError, FactBase, RelationalLanguage, SemiAtomicFact};

/// Whether `Λ'` is consistent with `Ξ`: its classical model (listed facts
/// `t`, every other atom `f`) satisfies every constraint.
///
/// This is the model of `RT(R, Λ')` without glutted atoms; in it the `Cons`
/// of every semi-atomic fact the theory proves is true, so it witnesses that
/// the constraints do not force any derived fact to be glutted.
pub fn consistent_with(
    lang: &RelationalLanguage,
    basis: &FactBase,
    constraints: &[Formula],
) -> Result<bool, DatabaseError> {
    constraints.iter().try_for_each(|c| lang.check_formula(c))?;
    let model = classical_model(lang, basis)?;
    Ok(is_model(&model, constraints)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub consistent: bool,
    /// Indices of the constraints the classical model violates.
    pub violated: Vec<usize>,
    /// A semi-atomic fact of the theory that some repair gives up: a listed
    /// fact the repair removes, or the negation of a fact it adds.
    pub witness: Option<SemiAtomicFact>,
    /// Whether `RT(R, Λ) ∪ Ξ` has a relational model at all. When it has
    /// none, every formula follows from it and the provability-based reading
    /// of consistency holds vacuously.
    pub theory_satisfiable: bool,
}

pub fn is_consistent_db(db: &Database) -> Result<ConsistencyReport, DatabaseError> {
    let lang = db.language();
    let model = classical_model(lang, db.basis())?;
    let mut violated = Vec::new();
    for (i, c) in db.constraints().iter().enumerate() {
        if !is_model(&model, std::slice::from_ref(c))? {
            violated.push(i);
        }
    }
    let consistent = violated.is_empty();
    let witness = if consistent {
        None
    } else {
        let mut sets = CorrectionSets::new(lang, db.basis(), db.constraints())?;
        sets.next_set()
            .and_then(|flips| flips.into_iter().next())
            .map(|fact| {
                if db.basis().contains(&fact) {
                    SemiAtomicFact::positive(fact)
                } else {
                    SemiAtomicFact::negative(fact)
                }
            })
    };
    Ok(ConsistencyReport {
        consistent,
        violated,
        witness,
        theory_satisfiable: theory_satisfiable(lang, db.basis(), db.constraints())?,
    })
}

/// Whether some model of `RT(R, Λ)` satisfies every constraint.
pub fn theory_satisfiable(
    lang: &RelationalLanguage,
    basis: &FactBase,
    constraints: &[Formula],
) -> Result<bool, DatabaseError> {
    let mut g = Grounder::new(lang, Mode::FourValued);
    for xi in constraints {
        lang.check_formula(xi)?;
        let vars: Vec<String> = xi.free_vars().into_iter().collect();
        for alpha in assignments(lang.domain_size(), &vars) {
            let bit = g.designated(xi, alpha.bindings(), true)?;
            g.require(bit);
        }
    }
    let atoms: Vec<_> = g.atoms().collect();
    for (fact, bits) in atoms {
        if basis.contains(&fact) {
            g.add_clause(&[bits.designated]);
        } else {
            g.add_clause(&[!bits.designated]);
            g.add_clause(&[bits.negation_designated]);
        }
    }
    Ok(g.solve())
}
