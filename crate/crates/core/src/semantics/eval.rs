use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};

use super::structure::{Element, Structure};
use super::truth::{tv_impl, tv_not, TruthValue};
use super::SemanticsError;
use crate::syntax::{Formula, Term};

/// A total map from variables to domain elements: explicitly bound variables
/// plus a default for everything else.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<String, Element>,
    default: Element,
}

impl Assignment {
    pub fn new(default: Element) -> Self {
        Assignment {
            values: BTreeMap::new(),
            default,
        }
    }

    pub fn get(&self, x: &str) -> Element {
        self.values.get(x).copied().unwrap_or(self.default)
    }

    /// `α(x → d)`
    pub fn with(&self, x: &str, d: Element) -> Assignment {
        let mut next = self.clone();
        next.values.insert(x.to_owned(), d);
        next
    }

    pub fn bindings(&self) -> &BTreeMap<String, Element> {
        &self.values
    }
}

/// All assignments over `vars` on a domain of `size` elements, in odometer
/// order (the last variable varies fastest).
pub fn assignments(size: usize, vars: &[String]) -> impl Iterator<Item = Assignment> + '_ {
    let total = if size == 0 {
        0
    } else {
        size.checked_pow(vars.len() as u32).unwrap_or(usize::MAX)
    };
    (0..total).map(move |mut code| {
        let mut a = Assignment::new(0);
        for x in vars.iter().rev() {
            a.values.insert(x.clone(), code % size);
            code /= size;
        }
        a
    })
}

/// Variable lookups walk a stack of quantifier bindings before falling back
/// to the outer assignment, so quantifiers never clone the assignment.
struct Env<'a> {
    outer: &'a Assignment,
    stack: Vec<(&'a str, Element)>,
}

impl<'a> Env<'a> {
    fn lookup(&self, x: &str) -> Element {
        self.stack
            .iter()
            .rev()
            .find(|(y, _)| *y == x)
            .map_or_else(|| self.outer.get(x), |&(_, d)| d)
    }
}

fn term_value(s: &Structure, env: &Env<'_>, t: &Term) -> Result<Element, SemanticsError> {
    match t {
        Term::Var(x) => Ok(env.lookup(x)),
        Term::Const(c) => s
            .constant(c)
            .ok_or_else(|| SemanticsError::Undeclared(c.clone())),
        Term::App(f, args) => {
            let vals = args
                .iter()
                .map(|a| term_value(s, env, a))
                .collect::<Result<Vec<_>, _>>()?;
            s.function(f, &vals)
                .ok_or_else(|| SemanticsError::Undeclared(f.clone()))
        }
    }
}

fn value<'a>(
    s: &Structure,
    env: &mut Env<'a>,
    a: &'a Formula,
) -> Result<TruthValue, SemanticsError> {
    Ok(match a {
        Formula::Prop(p) => s
            .proposition(p)
            .ok_or_else(|| SemanticsError::Undeclared(p.clone()))?,
        Formula::Atom(p, args) => {
            let vals = args
                .iter()
                .map(|t| term_value(s, env, t))
                .collect::<Result<Vec<_>, _>>()?;
            s.predicate(p, &vals)
                .ok_or_else(|| SemanticsError::Undeclared(p.clone()))?
        }
        Formula::Eq(t1, t2) => s.equality(term_value(s, env, t1)?, term_value(s, env, t2)?),
        Formula::Falsum => TruthValue::F,
        Formula::Not(b) => tv_not(value(s, env, b)?),
        Formula::And(b, c) => {
            let v = value(s, env, b)?;
            if v == TruthValue::F {
                return Ok(v);
            }
            v.meet(value(s, env, c)?)
        }
        Formula::Or(b, c) => {
            let v = value(s, env, b)?;
            if v == TruthValue::T {
                return Ok(v);
            }
            v.join(value(s, env, c)?)
        }
        Formula::Implies(b, c) => {
            let v = value(s, env, b)?;
            if !v.is_designated() {
                return Ok(TruthValue::T);
            }
            tv_impl(v, value(s, env, c)?)
        }
        Formula::ForAll(x, b) | Formula::Exists(x, b) => {
            let universal = matches!(a, Formula::ForAll(..));
            let (stop, mut acc) = if universal {
                (TruthValue::F, TruthValue::T)
            } else {
                (TruthValue::T, TruthValue::F)
            };
            for d in s.domain() {
                env.stack.push((x.as_str(), d));
                let v = value(s, env, b);
                env.stack.pop();
                let v = v?;
                acc = if universal { acc.meet(v) } else { acc.join(v) };
                if acc == stop {
                    break;
                }
            }
            acc
        }
    })
}

pub fn eval_term(s: &Structure, alpha: &Assignment, t: &Term) -> Result<Element, SemanticsError> {
    let env = Env {
        outer: alpha,
        stack: Vec::new(),
    };
    term_value(s, &env, t)
}

pub fn eval_formula(
    s: &Structure,
    alpha: &Assignment,
    a: &Formula,
) -> Result<TruthValue, SemanticsError> {
    let mut env = Env {
        outer: alpha,
        stack: Vec::new(),
    };
    value(s, &mut env, a)
}

fn free_vars_of<'f>(formulas: impl IntoIterator<Item = &'f Formula>) -> Vec<String> {
    let mut vars = BTreeSet::new();
    for f in formulas {
        vars.extend(f.free_vars());
    }
    vars.into_iter().collect()
}

/// `S` is a model of `Γ` iff every member of `Γ` is designated under every
/// assignment of its free variables.
pub fn is_model(s: &Structure, gamma: &[Formula]) -> Result<bool, SemanticsError> {
    for a in gamma {
        let vars = free_vars_of([a]);
        for alpha in assignments(s.size(), &vars) {
            if !eval_formula(s, &alpha, a)?.is_designated() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A structure (by position in the family) and assignment under which every
/// member of `Γ` is designated and no member of `Δ` is.
pub fn countermodel_over<I, S>(
    family: I,
    gamma: &[Formula],
    delta: &[Formula],
) -> Result<Option<(usize, Assignment)>, SemanticsError>
where
    I: IntoIterator<Item = S>,
    S: Borrow<Structure>,
{
    let vars = free_vars_of(gamma.iter().chain(delta));
    for (i, s) in family.into_iter().enumerate() {
        let s = s.borrow();
        'assignments: for alpha in assignments(s.size(), &vars) {
            for g in gamma {
                if !eval_formula(s, &alpha, g)?.is_designated() {
                    continue 'assignments;
                }
            }
            for d in delta {
                if eval_formula(s, &alpha, d)?.is_designated() {
                    continue 'assignments;
                }
            }
            return Ok(Some((i, alpha)));
        }
    }
    Ok(None)
}

/// `Γ ⊨ Δ` relative to a finite family of structures.
pub fn entails_over<I, S>(
    family: I,
    gamma: &[Formula],
    delta: &[Formula],
) -> Result<bool, SemanticsError>
where
    I: IntoIterator<Item = S>,
    S: Borrow<Structure>,
{
    Ok(countermodel_over(family, gamma, delta)?.is_none())
}
