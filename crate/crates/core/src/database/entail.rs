//! Entailment over the models of the relational structure axioms.

use std::collections::BTreeSet;

use crate::semantics::{assignments, entails_over, Assignment};
use crate::syntax::Formula;

use super::axioms::{relational_theory, rsa};
use super::ground::{Grounder, Mode};
use super::relational::{canonical_models, enumerate_rsa_models};
use super::{DatabaseError, FactBase, RelationalLanguage};

/// Splits `Γ` into its non-axiom part, failing if some relational structure
/// axiom is missing (compared up to renaming of bound variables).
fn without_rsa(
    lang: &RelationalLanguage,
    gamma: &[Formula],
) -> Result<Vec<Formula>, DatabaseError> {
    let axioms: BTreeSet<Formula> = rsa(lang).iter().map(Formula::alpha_normal).collect();
    let present: BTreeSet<Formula> = gamma.iter().map(Formula::alpha_normal).collect();
    if let Some(missing) = axioms.iter().find(|a| !present.contains(*a)) {
        return Err(DatabaseError::MissingAxiom(missing.to_string()));
    }
    Ok(gamma
        .iter()
        .filter(|g| !axioms.contains(&g.alpha_normal()))
        .cloned()
        .collect())
}

fn free_vars(formulas: &[&Formula]) -> Vec<String> {
    let mut vars = BTreeSet::new();
    for f in formulas {
        vars.extend(f.free_vars());
    }
    vars.into_iter().collect()
}

fn check_all(lang: &RelationalLanguage, formulas: &[&Formula]) -> Result<(), DatabaseError> {
    formulas.iter().try_for_each(|f| lang.check_formula(f))
}

/// Searches for a relational structure and assignment making every member
/// of `gamma` designated and `a` undesignated. `fix` may constrain the atoms
/// the encoding introduced before solving.
fn sat_countermodel(
    lang: &RelationalLanguage,
    gamma: &[Formula],
    a: &Formula,
    fix: &dyn Fn(&mut Grounder<'_>) -> Result<(), DatabaseError>,
) -> Result<bool, DatabaseError> {
    let mut all: Vec<&Formula> = gamma.iter().collect();
    all.push(a);
    check_all(lang, &all)?;
    let vars = free_vars(&all);
    for alpha in assignments(lang.domain_size(), &vars) {
        let mut g = Grounder::new(lang, Mode::FourValued);
        for gam in gamma {
            let bit = g.designated(gam, alpha.bindings(), true)?;
            g.require(bit);
        }
        let goal = g.designated(a, alpha.bindings(), true)?;
        g.require(!goal);
        fix(&mut g)?;
        if g.solve() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `Γ ⊨ A` for `Γ ⊇ RSA(R)`. Decided by encoding the question over the
/// fixed relational domain into SAT.
pub fn entails_rsa(
    lang: &RelationalLanguage,
    gamma: &[Formula],
    a: &Formula,
) -> Result<bool, DatabaseError> {
    let rest = without_rsa(lang, gamma)?;
    Ok(!sat_countermodel(lang, &rest, a, &|_| Ok(()))?)
}

/// `Γ ⊨ A` for `Γ ⊇ RSA(R)`, checked structure by structure over every
/// relational structure of the language.
pub fn entails_rsa_enumerative(
    lang: &RelationalLanguage,
    gamma: &[Formula],
    a: &Formula,
    ceiling: u64,
) -> Result<bool, DatabaseError> {
    let rest = without_rsa(lang, gamma)?;
    let mut all: Vec<&Formula> = rest.iter().collect();
    all.push(a);
    check_all(lang, &all)?;
    let family = enumerate_rsa_models(lang, ceiling)?;
    Ok(entails_over(
        family.map(|s| s.into_structure()),
        &rest,
        std::slice::from_ref(a),
    )?)
}

/// `RT(R, Λ) ⊨ A`. The models of the theory are exactly the relational
/// structures giving listed facts `t` or `b` and every other atom `f`; the
/// encoding pins the atoms accordingly.
pub fn theory_entails(
    lang: &RelationalLanguage,
    basis: &FactBase,
    a: &Formula,
) -> Result<bool, DatabaseError> {
    basis.check(lang)?;
    let pin = |g: &mut Grounder<'_>| {
        let atoms: Vec<_> = g.atoms().collect();
        for (fact, bits) in atoms {
            if basis.contains(&fact) {
                g.add_clause(&[bits.designated]);
            } else {
                g.add_clause(&[!bits.designated]);
                g.add_clause(&[bits.negation_designated]);
            }
        }
        Ok(())
    };
    Ok(!sat_countermodel(lang, &[], a, &pin)?)
}

/// `RT(R, Λ) ⊨ A` by evaluating `A` in each of the `2^|Λ|` canonical models.
pub fn theory_entails_canonical(
    lang: &RelationalLanguage,
    basis: &FactBase,
    a: &Formula,
    ceiling: u64,
) -> Result<bool, DatabaseError> {
    lang.check_formula(a)?;
    let models = canonical_models(lang, basis, ceiling)?;
    Ok(entails_over(
        models.map(|s| s.into_structure()),
        &[],
        std::slice::from_ref(a),
    )?)
}

/// `RT(R, Λ) ⊨ A` the slow way: filter all relational structures down to
/// models of the theory, then check `A` in each.
pub fn theory_entails_generic(
    lang: &RelationalLanguage,
    basis: &FactBase,
    a: &Formula,
    ceiling: u64,
) -> Result<bool, DatabaseError> {
    basis.check(lang)?;
    entails_rsa_enumerative(lang, &relational_theory(lang, basis), a, ceiling)
}

/// Values of a closed formula in each canonical model, in canonical-model
/// order.
pub fn canonical_values(
    lang: &RelationalLanguage,
    basis: &FactBase,
    a: &Formula,
    ceiling: u64,
) -> Result<Vec<crate::semantics::TruthValue>, DatabaseError> {
    lang.check_formula(a)?;
    if !a.is_closed() {
        return Err(DatabaseError::InvalidFormula(format!(
            "`{a}` has free variables"
        )));
    }
    canonical_models(lang, basis, ceiling)?
        .map(|s| Ok(crate::semantics::eval_formula(&s, &Assignment::new(0), a)?))
        .collect()
}
