use std::collections::BTreeSet;
use std::fmt;

use super::signature::{Signature, SymbolKind};
use super::SyntaxError;

/// A term: a variable, a constant, or a function application.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Const(String),
    App(String, Vec<Term>),
}

/// A formula of the core language. Abbreviations never appear here; they are
/// expanded when built (see [`super::Abbreviation`]).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Prop(String),
    Atom(String, Vec<Term>),
    Eq(Term, Term),
    Falsum,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(name.to_owned())
    }

    pub fn constant(name: &str) -> Self {
        Term::Const(name.to_owned())
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Const(_) => true,
            Term::App(_, args) => args.iter().all(Term::is_closed),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Const(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn has_var(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => y == x,
            Term::Const(_) => false,
            Term::App(_, args) => args.iter().any(|a| a.has_var(x)),
        }
    }

    /// `[x := t] self`.
    pub fn substitute(&self, x: &str, t: &Term) -> Term {
        match self {
            Term::Var(y) if y == x => t.clone(),
            Term::Var(_) | Term::Const(_) => self.clone(),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
        }
    }

    pub(crate) fn rename_var(&self, from: &str, to: &str) -> Term {
        self.substitute(from, &Term::Var(to.to_owned()))
    }

    /// Checks that every symbol is declared in `sig` with the right arity.
    pub fn check(&self, sig: &Signature) -> Result<(), SyntaxError> {
        match self {
            Term::Var(_) => Ok(()),
            Term::Const(c) => match sig.kind_of(c) {
                Some(SymbolKind::Constant) => Ok(()),
                _ => Err(SyntaxError::Undeclared(c.clone())),
            },
            Term::App(f, args) => {
                match sig.kind_of(f) {
                    Some(SymbolKind::Function(n)) if n == args.len() => {}
                    Some(SymbolKind::Function(n)) => {
                        return Err(SyntaxError::Arity {
                            symbol: f.clone(),
                            expected: n,
                            found: args.len(),
                        })
                    }
                    _ => return Err(SyntaxError::Undeclared(f.clone())),
                }
                args.iter().try_for_each(|a| a.check(sig))
            }
        }
    }
}

impl Formula {
    pub fn atom(pred: &str, args: Vec<Term>) -> Self {
        Formula::Atom(pred.to_owned(), args)
    }

    pub fn prop(name: &str) -> Self {
        Formula::Prop(name.to_owned())
    }

    pub fn eq(t1: Term, t2: Term) -> Self {
        Formula::Eq(t1, t2)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Self {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(x: &str, a: Formula) -> Self {
        Formula::ForAll(x.to_owned(), Box::new(a))
    }

    pub fn exists(x: &str, a: Formula) -> Self {
        Formula::Exists(x.to_owned(), Box::new(a))
    }

    /// Nested universal quantification, outermost variable first.
    pub fn forall_many<S: AsRef<str>>(xs: &[S], a: Formula) -> Self {
        xs.iter()
            .rev()
            .fold(a, |acc, x| Formula::forall(x.as_ref(), acc))
    }

    pub fn exists_many<S: AsRef<str>>(xs: &[S], a: Formula) -> Self {
        xs.iter()
            .rev()
            .fold(a, |acc, x| Formula::exists(x.as_ref(), acc))
    }

    /// Left-nested conjunction; `None` for an empty list.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Option<Self> {
        items.into_iter().reduce(Formula::and)
    }

    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Option<Self> {
        items.into_iter().reduce(Formula::or)
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Prop(_) | Formula::Atom(..) | Formula::Eq(..))
    }

    /// Atomic formulas and negations of atomic formulas.
    pub fn is_literal(&self) -> bool {
        match self {
            Formula::Not(inner) => inner.is_atomic(),
            other => other.is_atomic(),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut term = |t: &Term, bound: &Vec<String>| {
            let mut vs = BTreeSet::new();
            t.collect_vars(&mut vs);
            out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
        };
        match self {
            Formula::Prop(_) | Formula::Falsum => {}
            Formula::Atom(_, args) => args.iter().for_each(|t| term(t, bound)),
            Formula::Eq(t1, t2) => {
                term(t1, bound);
                term(t2, bound);
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::ForAll(x, a) | Formula::Exists(x, a) => {
                bound.push(x.clone());
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every variable occurring anywhere, bound or free.
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_all(&mut out);
        out
    }

    fn collect_all(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Prop(_) | Formula::Falsum => {}
            Formula::Atom(_, args) => args.iter().for_each(|t| t.collect_vars(out)),
            Formula::Eq(t1, t2) => {
                t1.collect_vars(out);
                t2.collect_vars(out);
            }
            Formula::Not(a) => a.collect_all(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_all(out);
                b.collect_all(out);
            }
            Formula::ForAll(x, a) | Formula::Exists(x, a) => {
                out.insert(x.clone());
                a.collect_all(out);
            }
        }
    }

    pub fn has_free_var(&self, x: &str) -> bool {
        match self {
            Formula::Prop(_) | Formula::Falsum => false,
            Formula::Atom(_, args) => args.iter().any(|t| t.has_var(x)),
            Formula::Eq(t1, t2) => t1.has_var(x) || t2.has_var(x),
            Formula::Not(a) => a.has_free_var(x),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.has_free_var(x) || b.has_free_var(x)
            }
            Formula::ForAll(y, a) | Formula::Exists(y, a) => y != x && a.has_free_var(x),
        }
    }

    /// Maximum nesting depth of quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Prop(_) | Formula::Atom(..) | Formula::Eq(..) | Formula::Falsum => 0,
            Formula::Not(a) => a.quantifier_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.quantifier_depth().max(b.quantifier_depth())
            }
            Formula::ForAll(_, a) | Formula::Exists(_, a) => 1 + a.quantifier_depth(),
        }
    }

    /// Checks that every symbol is declared in `sig` with the right arity.
    pub fn check(&self, sig: &Signature) -> Result<(), SyntaxError> {
        match self {
            Formula::Prop(p) => match sig.kind_of(p) {
                Some(SymbolKind::Proposition) => Ok(()),
                _ => Err(SyntaxError::Undeclared(p.clone())),
            },
            Formula::Atom(p, args) => {
                match sig.kind_of(p) {
                    Some(SymbolKind::Predicate(n)) if n == args.len() => {}
                    Some(SymbolKind::Predicate(n)) => {
                        return Err(SyntaxError::Arity {
                            symbol: p.clone(),
                            expected: n,
                            found: args.len(),
                        })
                    }
                    _ => return Err(SyntaxError::Undeclared(p.clone())),
                }
                args.iter().try_for_each(|t| t.check(sig))
            }
            Formula::Eq(t1, t2) => {
                t1.check(sig)?;
                t2.check(sig)
            }
            Formula::Falsum => Ok(()),
            Formula::Not(a) | Formula::ForAll(_, a) | Formula::Exists(_, a) => a.check(sig),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.check(sig)?;
                b.check(sig)
            }
        }
    }
}

/// Binding strength used by the printer; quantifiers bind loosest.
fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::ForAll(..) | Formula::Exists(..) => 0,
        Formula::Implies(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Not(_) => 4,
        _ => 5,
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) | Term::Const(x) => write!(f, "{x}"),
            Term::App(g, args) => {
                write!(f, "{g}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

struct Operand<'a>(&'a Formula, bool);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Prop(p) => write!(f, "{p}"),
            Formula::Atom(p, args) => {
                write!(f, "{p}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            Formula::Eq(t1, t2) => write!(f, "{t1} = {t2}"),
            Formula::Falsum => write!(f, "false"),
            Formula::Not(a) => write!(f, "~{}", Operand(a, precedence(a) < 4)),
            Formula::And(a, b) => write!(
                f,
                "{} & {}",
                Operand(a, precedence(a) < 3),
                Operand(b, precedence(b) <= 3)
            ),
            Formula::Or(a, b) => write!(
                f,
                "{} | {}",
                Operand(a, precedence(a) < 2),
                Operand(b, precedence(b) <= 2)
            ),
            Formula::Implies(a, b) => write!(
                f,
                "{} -> {}",
                Operand(a, precedence(a) <= 1),
                Operand(b, precedence(b) < 1)
            ),
            Formula::ForAll(x, a) => write!(f, "forall {x}. {a}"),
            Formula::Exists(x, a) => write!(f, "exists {x}. {a}"),
        }
    }
}
