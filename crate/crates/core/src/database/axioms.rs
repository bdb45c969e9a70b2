//! The relational structure axioms and relational theories.

use crate::syntax::{Formula, Term, NIL};

use super::{FactBase, RelationalLanguage};

fn vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `¬(nil↓)`
pub fn nil_indeterminacy() -> Formula {
    Formula::not(Formula::defined(Term::constant(NIL)))
}

/// `∀x,x'. Cons(x = x') ∧ ((x↓ ∧ x'↓) ⊐ Det(x = x'))`
pub fn equality_semi_normality() -> Formula {
    let (x, y) = (Term::var("x"), Term::var("x'"));
    let eq = Formula::eq(x.clone(), y.clone());
    let body = Formula::and(
        Formula::cons(eq.clone()),
        Formula::strong_implies(
            Formula::and(Formula::defined(x), Formula::defined(y)),
            Formula::det(eq),
        ),
    );
    Formula::forall_many(&["x".to_owned(), "x'".to_owned()], body)
}

/// `∀x. x ≈ c1 ∨ ... ∨ x ≈ cn` over every constant, `nil` included.
pub fn domain_closure(lang: &RelationalLanguage) -> Formula {
    let x = Term::var("x");
    let disjuncts = lang
        .constants()
        .iter()
        .map(|c| Formula::strong_equal(x.clone(), Term::constant(c)));
    Formula::forall(
        "x",
        Formula::disjunction(disjuncts).expect("at least two constants"),
    )
}

/// `¬(ci ≈ cj)` for each pair `i < j` of constants other than `nil`.
///
/// Pairs involving `nil` are left out: `c ≈ nil` is `n` for every determinate
/// `c`, so its negation can never be designated and including such pairs would
/// leave the axioms without models.
pub fn unique_names(lang: &RelationalLanguage) -> Vec<Formula> {
    let cs = lang.non_nil_constants();
    let mut out = Vec::new();
    for (i, ci) in cs.iter().enumerate() {
        for cj in &cs[i + 1..] {
            out.push(Formula::not(Formula::strong_equal(
                Term::constant(ci),
                Term::constant(cj),
            )));
        }
    }
    out
}

/// `∀x1...xn. Det P(x1, ..., xn)`
pub fn determinacy(predicate: &str, arity: usize) -> Formula {
    let xs = vars(arity);
    let atom = Formula::atom(predicate, xs.iter().map(|x| Term::var(x)).collect());
    Formula::forall_many(&xs, Formula::det(atom))
}

/// The relational structure axioms, in a fixed order: nil-indeterminacy,
/// equality semi-normality, domain closure, unique names, then determinacy
/// for each predicate by name.
pub fn rsa(lang: &RelationalLanguage) -> Vec<Formula> {
    let mut out = vec![
        nil_indeterminacy(),
        equality_semi_normality(),
        domain_closure(lang),
    ];
    out.extend(unique_names(lang));
    out.extend(lang.predicates().map(|(p, n)| determinacy(p, n)));
    out
}

/// `∀x̄. P(x̄) ⊐ ⋁_i ⋀_j xj ≈ c^i_j` over the `P`-facts of `basis`, or
/// `∀x̄. P(x̄) ⊐ F` when there are none.
pub fn completion_axiom(basis: &FactBase, predicate: &str, arity: usize) -> Formula {
    let xs = vars(arity);
    let atom = Formula::atom(predicate, xs.iter().map(|x| Term::var(x)).collect());
    let disjuncts = basis
        .iter()
        .filter(|f| f.predicate == predicate)
        .map(|fact| {
            let conj = xs
                .iter()
                .zip(&fact.args)
                .map(|(x, c)| Formula::strong_equal(Term::var(x), Term::constant(c)));
            Formula::conjunction(conj).expect("positive arity")
        });
    let rhs = Formula::disjunction(disjuncts).unwrap_or(Formula::Falsum);
    Formula::forall_many(&xs, Formula::strong_implies(atom, rhs))
}

/// `RSA(R) ∪ Λ ∪ {P-completion axioms}`
pub fn relational_theory(lang: &RelationalLanguage, basis: &FactBase) -> Vec<Formula> {
    let mut out = rsa(lang);
    out.extend(basis.iter().map(|f| f.to_formula()));
    out.extend(
        lang.predicates()
            .map(|(p, n)| completion_axiom(basis, p, n)),
    );
    out
}
