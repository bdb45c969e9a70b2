//! Checking a single rule application against its schema.

use std::collections::BTreeSet;

use super::rules::{RuleInstance, RuleName, RuleSystem, Witness};
use super::sequent::Sequent;
use crate::syntax::{Formula, Term};

use RuleName::*;

type Side = BTreeSet<Formula>;

enum Principal {
    Left,
    Right,
}

/// Schema of a rule with one principal formula: where it sits in the
/// conclusion, and what each premise adds to the shared context `Γ ⊢ Δ`.
struct Schema {
    principal: Formula,
    side: Principal,
    premises: Vec<(Vec<Formula>, Vec<Formula>)>,
    /// Variable subject to the eigenvariable condition, with the bound
    /// variable and body it replaces.
    eigen: Option<(String, String, Formula)>,
}

fn formula_at(inst: &RuleInstance, i: usize) -> Result<&Formula, String> {
    match inst.witnesses.get(i) {
        Some(Witness::Formula(a)) => Ok(a),
        _ => Err(format!(
            "{} expects a formula as witness {}",
            inst.rule,
            i + 1
        )),
    }
}

fn term_at(inst: &RuleInstance, i: usize) -> Result<Term, String> {
    match inst.witnesses.get(i) {
        Some(Witness::Term(t)) => Ok(t.clone()),
        // a bare name parses as a variable when the rule also accepts terms
        Some(Witness::Variable(x)) => Ok(Term::var(x)),
        _ => Err(format!("{} expects a term as witness {}", inst.rule, i + 1)),
    }
}

fn variable_at(inst: &RuleInstance, i: usize) -> Result<String, String> {
    match inst.witnesses.get(i) {
        Some(Witness::Variable(x)) => Ok(x.clone()),
        Some(Witness::Term(Term::Var(x))) => Ok(x.clone()),
        _ => Err(format!(
            "{} expects a variable as witness {}",
            inst.rule,
            i + 1
        )),
    }
}

fn shape_error(rule: RuleName, expected: &str, got: &Formula) -> String {
    format!("{rule} needs a principal formula of the form {expected}, got `{got}`")
}

fn binary(p: &Formula) -> Option<(&Formula, &Formula)> {
    match p {
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => Some((a, b)),
        _ => None,
    }
}

fn negated(p: &Formula) -> Option<&Formula> {
    match p {
        Formula::Not(a) => Some(a),
        _ => None,
    }
}

fn quantified(p: &Formula) -> Option<(&str, &Formula)> {
    match p {
        Formula::ForAll(x, a) | Formula::Exists(x, a) => Some((x, a)),
        _ => None,
    }
}

fn neg(a: &Formula) -> Formula {
    Formula::not(a.clone())
}

fn schema(inst: &RuleInstance) -> Result<Schema, String> {
    let rule = inst.rule;
    let left = |p: Formula, premises| Schema {
        principal: p,
        side: Principal::Left,
        premises,
        eigen: None,
    };
    let right = |p: Formula, premises| Schema {
        principal: p,
        side: Principal::Right,
        premises,
        eigen: None,
    };

    if let DeltaEqL | DeltaEqR = rule {
        let (t1, t2) = (term_at(inst, 0)?, term_at(inst, 1)?);
        let p = Formula::or(
            Formula::eq(t1.clone(), t2.clone()),
            Formula::not(Formula::eq(t1.clone(), t2.clone())),
        );
        let q = Formula::and(Formula::eq(t1.clone(), t1), Formula::eq(t2.clone(), t2));
        return Ok(if rule == DeltaEqL {
            left(p, vec![(vec![q], vec![])])
        } else {
            right(p, vec![(vec![], vec![q])])
        });
    }

    let p = formula_at(inst, 0)?.clone();
    let s = match rule {
        AndL | AndR | OrL | OrR | ImpL | ImpR => {
            let ok = matches!(
                (rule, &p),
                (AndL | AndR, Formula::And(..))
                    | (OrL | OrR, Formula::Or(..))
                    | (ImpL | ImpR, Formula::Implies(..))
            );
            let expected = match rule {
                AndL | AndR => "A1 & A2",
                OrL | OrR => "A1 | A2",
                _ => "A1 -> A2",
            };
            let (a1, a2) = binary(&p)
                .filter(|_| ok)
                .map(|(a, b)| (a.clone(), b.clone()))
                .ok_or_else(|| shape_error(rule, expected, &p))?;
            match rule {
                AndL => left(p, vec![(vec![a1, a2], vec![])]),
                AndR => right(p, vec![(vec![], vec![a1]), (vec![], vec![a2])]),
                OrL => left(p, vec![(vec![a1], vec![]), (vec![a2], vec![])]),
                OrR => right(p, vec![(vec![], vec![a1, a2])]),
                ImpL => left(p, vec![(vec![], vec![a1]), (vec![a2], vec![])]),
                _ => right(p, vec![(vec![a1], vec![a2])]),
            }
        }
        AllL | AllR | ExL | ExR => {
            let universal = matches!(rule, AllL | AllR);
            let (x, body) = match (&p, universal) {
                (Formula::ForAll(..), true) | (Formula::Exists(..), false) => {
                    quantified(&p).expect("checked")
                }
                _ => {
                    return Err(shape_error(
                        rule,
                        if universal {
                            "forall x. A"
                        } else {
                            "exists x. A"
                        },
                        &p,
                    ))
                }
            };
            let (x, body) = (x.to_owned(), body.clone());
            if let AllL | ExR = rule {
                let inst_body = body.substitute(&x, &term_at(inst, 1)?);
                if rule == AllL {
                    left(p, vec![(vec![inst_body], vec![])])
                } else {
                    right(p, vec![(vec![], vec![inst_body])])
                }
            } else {
                let y = variable_at(inst, 1)?;
                let inst_body = body.substitute(&x, &Term::var(&y));
                let mut s = if rule == ExL {
                    left(p, vec![(vec![inst_body], vec![])])
                } else {
                    right(p, vec![(vec![], vec![inst_body])])
                };
                s.eigen = Some((y, x, body));
                s
            }
        }
        NotNotL | NotNotR | NotAndL | NotAndR | NotOrL | NotOrR | NotImpL | NotImpR => {
            let inner = negated(&p)
                .ok_or_else(|| shape_error(rule, "~A", &p))?
                .clone();
            match rule {
                NotNotL | NotNotR => {
                    let a = negated(&inner)
                        .ok_or_else(|| shape_error(rule, "~~A", &p))?
                        .clone();
                    if rule == NotNotL {
                        left(p, vec![(vec![a], vec![])])
                    } else {
                        right(p, vec![(vec![], vec![a])])
                    }
                }
                _ => {
                    let ok = matches!(
                        (rule, &inner),
                        (NotAndL | NotAndR, Formula::And(..))
                            | (NotOrL | NotOrR, Formula::Or(..))
                            | (NotImpL | NotImpR, Formula::Implies(..))
                    );
                    let expected = match rule {
                        NotAndL | NotAndR => "~(A1 & A2)",
                        NotOrL | NotOrR => "~(A1 | A2)",
                        _ => "~(A1 -> A2)",
                    };
                    let (a1, a2) = binary(&inner)
                        .filter(|_| ok)
                        .map(|(a, b)| (a.clone(), b.clone()))
                        .ok_or_else(|| shape_error(rule, expected, &p))?;
                    match rule {
                        NotAndL => {
                            left(p, vec![(vec![neg(&a1)], vec![]), (vec![neg(&a2)], vec![])])
                        }
                        NotAndR => right(p, vec![(vec![], vec![neg(&a1), neg(&a2)])]),
                        NotOrL => left(p, vec![(vec![neg(&a1), neg(&a2)], vec![])]),
                        NotOrR => {
                            right(p, vec![(vec![], vec![neg(&a1)]), (vec![], vec![neg(&a2)])])
                        }
                        NotImpL => left(p, vec![(vec![a1, neg(&a2)], vec![])]),
                        _ => right(p, vec![(vec![], vec![a1]), (vec![], vec![neg(&a2)])]),
                    }
                }
            }
        }
        NotAllL | NotAllR | NotExL | NotExR => {
            let universal = matches!(rule, NotAllL | NotAllR);
            let (x, body) = match negated(&p) {
                Some(q @ Formula::ForAll(..)) if universal => quantified(q).expect("checked"),
                Some(q @ Formula::Exists(..)) if !universal => quantified(q).expect("checked"),
                _ => {
                    return Err(shape_error(
                        rule,
                        if universal {
                            "~forall x. A"
                        } else {
                            "~exists x. A"
                        },
                        &p,
                    ))
                }
            };
            let (x, body) = (x.to_owned(), body.clone());
            if let NotAllR | NotExL = rule {
                let inst_body = neg(&body.substitute(&x, &term_at(inst, 1)?));
                if rule == NotExL {
                    left(p, vec![(vec![inst_body], vec![])])
                } else {
                    right(p, vec![(vec![], vec![inst_body])])
                }
            } else {
                let y = variable_at(inst, 1)?;
                let inst_body = neg(&body.substitute(&x, &Term::var(&y)));
                let mut s = if rule == NotAllL {
                    left(p, vec![(vec![inst_body], vec![])])
                } else {
                    right(p, vec![(vec![], vec![inst_body])])
                };
                s.eigen = Some((y, x, body));
                s
            }
        }
        // the witness is the negated formula A; the principal formula is ~A
        NotL => left(neg(&p), vec![(vec![], vec![p])]),
        NotR => right(neg(&p), vec![(vec![p], vec![])]),
        _ => unreachable!("{rule} has no single-principal schema"),
    };
    Ok(s)
}

fn norm(a: &Formula) -> Formula {
    a.alpha_normal()
}

fn with(side: &Side, extra: &[Formula]) -> Side {
    let mut s = side.clone();
    s.extend(extra.iter().map(norm));
    s
}

/// Contexts obtained by removing any subset of `principals` from `side`:
/// each principal formula may or may not also occur in the context.
fn contexts(side: &Side, principals: &[Formula]) -> Vec<Side> {
    let mut out = vec![side.clone()];
    for p in principals {
        let mut more = Vec::new();
        for c in &out {
            let mut d = c.clone();
            if d.remove(p) {
                more.push(d);
            }
        }
        out.extend(more);
    }
    out
}

/// Premises in any order: schema premises are matched against all
/// permutations of the given ones (there are at most two).
fn permutations(premises: &[Sequent]) -> Vec<Vec<&Sequent>> {
    match premises {
        [a, b] => vec![vec![a, b], vec![b, a]],
        _ => vec![premises.iter().collect()],
    }
}

fn check_schema(s: Schema, premises: &[Sequent], conclusion: &Sequent) -> Result<(), String> {
    let p = norm(&s.principal);
    let (home, other) = match s.side {
        Principal::Left => (&conclusion.left, &conclusion.right),
        Principal::Right => (&conclusion.right, &conclusion.left),
    };
    if !home.contains(&p) {
        let where_ = if matches!(s.side, Principal::Left) {
            "left"
        } else {
            "right"
        };
        return Err(format!(
            "principal formula `{}` is not on the {where_} of the conclusion",
            s.principal
        ));
    }
    if premises.len() != s.premises.len() {
        return Err(format!(
            "expected {} premise(s), got {}",
            s.premises.len(),
            premises.len()
        ));
    }
    let mut eigen_failure = None;
    for ctx in contexts(home, std::slice::from_ref(&p)) {
        let (gamma, delta) = match s.side {
            Principal::Left => (&ctx, other),
            Principal::Right => (other, &ctx),
        };
        let fits = permutations(premises).into_iter().any(|perm| {
            perm.iter().zip(&s.premises).all(|(prem, (add_l, add_r))| {
                prem.left == with(gamma, add_l) && prem.right == with(delta, add_r)
            })
        });
        if !fits {
            continue;
        }
        if let Some((y, x, body)) = &s.eigen {
            let context = Sequent {
                left: gamma.clone(),
                right: delta.clone(),
            };
            if context.free_vars().contains(y) {
                eigen_failure = Some(format!("eigenvariable `{y}` occurs free in the context"));
                continue;
            }
            if x != y && body.has_free_var(y) {
                eigen_failure = Some(format!(
                    "eigenvariable `{y}` occurs free in the quantified formula"
                ));
                continue;
            }
        }
        return Ok(());
    }
    Err(eigen_failure.unwrap_or_else(|| "premises do not match the rule schema".to_owned()))
}

fn check_cut(a: &Formula, premises: &[Sequent], conclusion: &Sequent) -> Result<(), String> {
    let a = norm(a);
    if premises.len() != 2 {
        return Err(format!("expected 2 premises, got {}", premises.len()));
    }
    for perm in permutations(premises) {
        let (p1, p2) = (perm[0], perm[1]);
        if !p1.right.contains(&a) || !p2.left.contains(&a) {
            continue;
        }
        for delta in contexts(&p1.right, std::slice::from_ref(&a)) {
            for gamma2 in contexts(&p2.left, std::slice::from_ref(&a)) {
                let left: Side = p1.left.union(&gamma2).cloned().collect();
                let right: Side = delta.union(&p2.right).cloned().collect();
                if left == conclusion.left && right == conclusion.right {
                    return Ok(());
                }
            }
        }
    }
    Err(format!(
        "premises are not a cut on `{a}` yielding the conclusion"
    ))
}

fn check_replacement(
    inst: &RuleInstance,
    premises: &[Sequent],
    conclusion: &Sequent,
) -> Result<(), String> {
    let x = variable_at(inst, 0)?;
    let a = formula_at(inst, 1)?;
    let (t1, t2) = (term_at(inst, 2)?, term_at(inst, 3)?);
    if !a.is_literal() {
        return Err(format!("eq-Repl only rewrites literals, `{a}` is not one"));
    }
    let eq = norm(&Formula::eq(t1.clone(), t2.clone()));
    let after = norm(&a.substitute(&x, &t2));
    let before = norm(&a.substitute(&x, &t1));
    for needed in [&eq, &after] {
        if !conclusion.left.contains(needed) {
            return Err(format!("`{needed}` is not on the left of the conclusion"));
        }
    }
    let [premise] = premises else {
        return Err(format!("expected 1 premise, got {}", premises.len()));
    };
    let fits = contexts(&conclusion.left, &[eq, after])
        .into_iter()
        .any(|gamma| {
            premise.left == with(&gamma, std::slice::from_ref(&before))
                && premise.right == conclusion.right
        });
    if fits {
        Ok(())
    } else {
        Err("premise is not the conclusion with the rewritten literal".to_owned())
    }
}

fn check_axiom(
    inst: &RuleInstance,
    premises: &[Sequent],
    conclusion: &Sequent,
) -> Result<(), String> {
    if !premises.is_empty() {
        return Err(format!("{} takes no premises", inst.rule));
    }
    match inst.rule {
        Id => {
            let a = formula_at(inst, 0)?;
            if !a.is_literal() {
                return Err(format!("Id applies to literals only, `{a}` is not one"));
            }
            let a = norm(a);
            if conclusion.left.contains(&a) && conclusion.right.contains(&a) {
                Ok(())
            } else {
                Err(format!("`{a}` is not on both sides of the conclusion"))
            }
        }
        FalsumL => conclusion
            .left
            .contains(&Formula::Falsum)
            .then_some(())
            .ok_or_else(|| "`false` is not on the left of the conclusion".to_owned()),
        _ => conclusion
            .right
            .contains(&Formula::not(Formula::Falsum))
            .then_some(())
            .ok_or_else(|| "`~false` is not on the right of the conclusion".to_owned()),
    }
}

/// Checks that `conclusion` follows from `premises` by `inst` in `system`.
/// Sequents are compared as sets, up to renaming of bound variables.
pub fn check_rule(
    system: RuleSystem,
    inst: &RuleInstance,
    premises: &[Sequent],
    conclusion: &Sequent,
) -> Result<(), String> {
    if !system.admits(inst.rule) {
        return Err(format!(
            "{} is not a rule of the {system:?} system",
            inst.rule
        ));
    }
    let expected = inst.rule.witness_kinds().len();
    if inst.witnesses.len() != expected {
        return Err(format!(
            "{} takes {expected} witness(es), got {}",
            inst.rule,
            inst.witnesses.len()
        ));
    }
    let premises: Vec<Sequent> = premises.iter().map(Sequent::normalized).collect();
    let conclusion = conclusion.normalized();
    match inst.rule {
        Id | FalsumL | NotFalsumR => check_axiom(inst, &premises, &conclusion),
        Cut => check_cut(formula_at(inst, 0)?, &premises, &conclusion),
        EqRepl => check_replacement(inst, &premises, &conclusion),
        EqRefl => {
            let t = term_at(inst, 0)?;
            let [premise] = premises.as_slice() else {
                return Err(format!("expected 1 premise, got {}", premises.len()));
            };
            let refl = Formula::eq(t.clone(), t);
            if premise.left == with(&conclusion.left, &[refl]) && premise.right == conclusion.right
            {
                Ok(())
            } else {
                Err("premise is not the conclusion with the reflexivity atom added".to_owned())
            }
        }
        _ => check_schema(schema(inst)?, &premises, &conclusion),
    }
}
