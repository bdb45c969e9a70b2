//! Capture-avoiding substitution and comparison up to renaming of bound variables.

use std::collections::{BTreeSet, HashMap};

use super::ast::{Formula, Term};

/// Picks `base` followed by the smallest positive integer such that the
/// result is not in `avoid`.
pub fn fresh_variable(base: &str, avoid: &BTreeSet<String>) -> String {
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
    let stem = if stem.is_empty() { base } else { stem };
    (1..)
        .map(|k| format!("{stem}{k}"))
        .find(|name| !avoid.contains(name))
        .expect("infinitely many candidates")
}

impl Formula {
    /// `[x := t] self`: replaces the free occurrences of `x` by `t`, renaming
    /// bound variables that would capture a variable of `t`.
    pub fn substitute(&self, x: &str, t: &Term) -> Formula {
        if !self.has_free_var(x) {
            return self.clone();
        }
        let t_vars = t.free_vars();
        self.subst_inner(x, t, &t_vars)
    }

    fn subst_inner(&self, x: &str, t: &Term, t_vars: &BTreeSet<String>) -> Formula {
        match self {
            Formula::Prop(_) | Formula::Falsum => self.clone(),
            Formula::Atom(p, args) => {
                Formula::Atom(p.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
            Formula::Eq(t1, t2) => Formula::Eq(t1.substitute(x, t), t2.substitute(x, t)),
            Formula::Not(a) => Formula::not(a.subst_inner(x, t, t_vars)),
            Formula::And(a, b) => {
                Formula::and(a.subst_inner(x, t, t_vars), b.subst_inner(x, t, t_vars))
            }
            Formula::Or(a, b) => {
                Formula::or(a.subst_inner(x, t, t_vars), b.subst_inner(x, t, t_vars))
            }
            Formula::Implies(a, b) => {
                Formula::implies(a.subst_inner(x, t, t_vars), b.subst_inner(x, t, t_vars))
            }
            Formula::ForAll(y, a) | Formula::Exists(y, a) => {
                let rebuild = |v: &str, body: Formula| match self {
                    Formula::ForAll(..) => Formula::forall(v, body),
                    _ => Formula::exists(v, body),
                };
                if y == x || !a.has_free_var(x) {
                    return self.clone();
                }
                if t_vars.contains(y) {
                    let mut avoid = a.all_vars();
                    avoid.extend(t_vars.iter().cloned());
                    avoid.insert(x.to_owned());
                    let z = fresh_variable(y, &avoid);
                    let renamed = a.rename_free(y, &z);
                    rebuild(&z, renamed.subst_inner(x, t, t_vars))
                } else {
                    rebuild(y, a.subst_inner(x, t, t_vars))
                }
            }
        }
    }

    /// Renames free occurrences of `from` to `to`, where `to` is known not to
    /// occur in `self`.
    fn rename_free(&self, from: &str, to: &str) -> Formula {
        match self {
            Formula::Prop(_) | Formula::Falsum => self.clone(),
            Formula::Atom(p, args) => Formula::Atom(
                p.clone(),
                args.iter().map(|a| a.rename_var(from, to)).collect(),
            ),
            Formula::Eq(t1, t2) => Formula::Eq(t1.rename_var(from, to), t2.rename_var(from, to)),
            Formula::Not(a) => Formula::not(a.rename_free(from, to)),
            Formula::And(a, b) => Formula::and(a.rename_free(from, to), b.rename_free(from, to)),
            Formula::Or(a, b) => Formula::or(a.rename_free(from, to), b.rename_free(from, to)),
            Formula::Implies(a, b) => {
                Formula::implies(a.rename_free(from, to), b.rename_free(from, to))
            }
            Formula::ForAll(y, _) | Formula::Exists(y, _) if y == from => self.clone(),
            Formula::ForAll(y, a) => Formula::forall(y, a.rename_free(from, to)),
            Formula::Exists(y, a) => Formula::exists(y, a.rename_free(from, to)),
        }
    }

    /// Renames every bound variable to a reserved name (`%0`, `%1`, ... by
    /// binding depth). Two formulas are equal up to bound-variable renaming
    /// iff their normal forms are structurally equal.
    pub fn alpha_normal(&self) -> Formula {
        self.normalize(&mut HashMap::new(), 0)
    }

    fn normalize(&self, env: &mut HashMap<String, Vec<String>>, depth: usize) -> Formula {
        fn term(t: &Term, env: &HashMap<String, Vec<String>>) -> Term {
            match t {
                Term::Var(x) => match env.get(x).and_then(|stack| stack.last()) {
                    Some(name) => Term::Var(name.clone()),
                    None => t.clone(),
                },
                Term::Const(_) => t.clone(),
                Term::App(f, args) => {
                    Term::App(f.clone(), args.iter().map(|a| term(a, env)).collect())
                }
            }
        }
        match self {
            Formula::Prop(_) | Formula::Falsum => self.clone(),
            Formula::Atom(p, args) => {
                Formula::Atom(p.clone(), args.iter().map(|a| term(a, env)).collect())
            }
            Formula::Eq(t1, t2) => Formula::Eq(term(t1, env), term(t2, env)),
            Formula::Not(a) => Formula::not(a.normalize(env, depth)),
            Formula::And(a, b) => Formula::and(a.normalize(env, depth), b.normalize(env, depth)),
            Formula::Or(a, b) => Formula::or(a.normalize(env, depth), b.normalize(env, depth)),
            Formula::Implies(a, b) => {
                Formula::implies(a.normalize(env, depth), b.normalize(env, depth))
            }
            Formula::ForAll(x, a) | Formula::Exists(x, a) => {
                let name = format!("%{depth}");
                env.entry(x.clone()).or_default().push(name.clone());
                let body = a.normalize(env, depth + 1);
                env.get_mut(x).expect("pushed above").pop();
                match self {
                    Formula::ForAll(..) => Formula::forall(&name, body),
                    _ => Formula::exists(&name, body),
                }
            }
        }
    }

    /// Structural equality up to renaming of bound variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        self.alpha_normal() == other.alpha_normal()
    }
}
