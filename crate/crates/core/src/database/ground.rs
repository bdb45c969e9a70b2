//! Grounding over the fixed domain of a relational language into SAT.
//!
//! In the four-valued mode every ground atom gets two variables: whether its
//! value is designated and whether its negation is designated (`t` = 10,
//! `f` = 01, `b` = 11, `n` = 00). Determinacy rules out `n`, which is one
//! binary clause per atom. Connectives translate by polarity: the negation of
//! a conjunction is designated iff the negation of some conjunct is, and so
//! on, mirroring the bit-level matrix in the semantics module. The classical
//! mode uses one variable per atom and only ever produces `t` or `f` atoms.
//!
//! Gates are introduced with Tseitin definitions, folded when an input is
//! constant, and shared when the same gate is requested twice.

use std::collections::{BTreeMap, HashMap};

use varisat::{ExtendFormula, Lit, Solver};

use crate::semantics::{Element, BOTTOM};
use crate::syntax::{Formula, Term};

use super::{DatabaseError, Fact, RelationalLanguage};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    FourValued,
    Classical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Bit {
    Const(bool),
    Lit(Lit),
}

impl std::ops::Not for Bit {
    type Output = Bit;

    fn not(self) -> Bit {
        match self {
            Bit::Const(b) => Bit::Const(!b),
            Bit::Lit(l) => Bit::Lit(!l),
        }
    }
}

/// The two bits of a ground atom.
#[derive(Clone, Copy, Debug)]
pub(crate) struct AtomBits {
    pub designated: Lit,
    pub negation_designated: Lit,
}

pub(crate) struct Grounder<'l> {
    lang: &'l RelationalLanguage,
    mode: Mode,
    solver: Solver<'static>,
    atoms: BTreeMap<(String, Vec<Element>), AtomBits>,
    gates: HashMap<Vec<Lit>, Lit>,
    /// Set once a constant-false requirement makes the problem unsatisfiable.
    contradiction: bool,
}

impl<'l> Grounder<'l> {
    pub fn new(lang: &'l RelationalLanguage, mode: Mode) -> Self {
        Grounder {
            lang,
            mode,
            solver: Solver::new(),
            atoms: BTreeMap::new(),
            gates: HashMap::new(),
            contradiction: false,
        }
    }

    pub fn atom(&mut self, predicate: &str, tuple: &[Element]) -> AtomBits {
        let key = (predicate.to_owned(), tuple.to_vec());
        if let Some(&bits) = self.atoms.get(&key) {
            return bits;
        }
        let bits = match self.mode {
            Mode::FourValued => {
                let p = self.solver.new_lit();
                let n = self.solver.new_lit();
                self.solver.add_clause(&[p, n]);
                AtomBits {
                    designated: p,
                    negation_designated: n,
                }
            }
            Mode::Classical => {
                let v = self.solver.new_lit();
                AtomBits {
                    designated: v,
                    negation_designated: !v,
                }
            }
        };
        self.atoms.insert(key, bits);
        bits
    }

    /// The ground atoms introduced so far.
    pub fn atoms(&self) -> impl Iterator<Item = (Fact, AtomBits)> + '_ {
        self.atoms
            .iter()
            .map(|((p, t), &bits)| (Fact::from_elements(self.lang, p, t), bits))
    }

    fn and(&mut self, inputs: Vec<Bit>) -> Bit {
        let mut lits = Vec::with_capacity(inputs.len());
        for b in inputs {
            match b {
                Bit::Const(false) => return Bit::Const(false),
                Bit::Const(true) => {}
                Bit::Lit(l) => lits.push(l),
            }
        }
        lits.sort_unstable();
        lits.dedup();
        if lits.windows(2).any(|w| w[0] == !w[1]) {
            return Bit::Const(false);
        }
        match lits.len() {
            0 => return Bit::Const(true),
            1 => return Bit::Lit(lits[0]),
            _ => {}
        }
        if let Some(&g) = self.gates.get(&lits) {
            return Bit::Lit(g);
        }
        let g = self.solver.new_lit();
        for &l in &lits {
            self.solver.add_clause(&[!g, l]);
        }
        let mut long: Vec<Lit> = lits.iter().map(|&l| !l).collect();
        long.push(g);
        self.solver.add_clause(&long);
        self.gates.insert(lits, g);
        Bit::Lit(g)
    }

    fn or(&mut self, inputs: Vec<Bit>) -> Bit {
        !self.and(inputs.into_iter().map(|b| !b).collect())
    }

    fn term(&self, t: &Term, env: &[(&str, Element)]) -> Result<Element, DatabaseError> {
        match t {
            Term::Var(x) => env
                .iter()
                .rev()
                .find(|(y, _)| y == x)
                .map(|&(_, d)| d)
                .ok_or_else(|| DatabaseError::InvalidFormula(format!("unbound variable `{x}`"))),
            Term::Const(c) => self
                .lang
                .element_of(c)
                .ok_or_else(|| DatabaseError::InvalidFormula(format!("undeclared constant `{c}`"))),
            Term::App(f, _) => Err(DatabaseError::InvalidFormula(format!(
                "function symbol `{f}` in a relational formula"
            ))),
        }
    }

    /// The bit stating that `f` (polarity `true`) or `¬f` (polarity `false`)
    /// is designated under `env`.
    pub fn encode<'f>(
        &mut self,
        f: &'f Formula,
        env: &mut Vec<(&'f str, Element)>,
        polarity: bool,
    ) -> Result<Bit, DatabaseError> {
        Ok(match f {
            Formula::Falsum => Bit::Const(!polarity),
            Formula::Prop(p) => {
                return Err(DatabaseError::InvalidFormula(format!(
                    "proposition symbol `{p}` in a relational formula"
                )))
            }
            Formula::Eq(t1, t2) => {
                let (d1, d2) = (self.term(t1, env)?, self.term(t2, env)?);
                // t on the non-⊥ diagonal, f off it, n wherever ⊥ occurs
                if d1 == BOTTOM || d2 == BOTTOM {
                    Bit::Const(false)
                } else {
                    Bit::Const((d1 == d2) == polarity)
                }
            }
            Formula::Atom(p, args) => {
                let tuple = args
                    .iter()
                    .map(|t| self.term(t, env))
                    .collect::<Result<Vec<_>, _>>()?;
                let bits = self.atom(p, &tuple);
                Bit::Lit(if polarity {
                    bits.designated
                } else {
                    bits.negation_designated
                })
            }
            Formula::Not(a) => self.encode(a, env, !polarity)?,
            Formula::And(a, b) | Formula::Or(a, b) => {
                let x = self.encode(a, env, polarity)?;
                let y = self.encode(b, env, polarity)?;
                if matches!(f, Formula::And(..)) == polarity {
                    self.and(vec![x, y])
                } else {
                    self.or(vec![x, y])
                }
            }
            Formula::Implies(a, b) => {
                let antecedent = self.encode(a, env, true)?;
                let consequent = self.encode(b, env, polarity)?;
                if polarity {
                    self.or(vec![!antecedent, consequent])
                } else {
                    self.and(vec![antecedent, consequent])
                }
            }
            Formula::ForAll(x, a) | Formula::Exists(x, a) => {
                let mut parts = Vec::with_capacity(self.lang.domain_size());
                for d in 0..self.lang.domain_size() {
                    env.push((x.as_str(), d));
                    let part = self.encode(a, env, polarity);
                    env.pop();
                    parts.push(part?);
                }
                if matches!(f, Formula::ForAll(..)) == polarity {
                    self.and(parts)
                } else {
                    self.or(parts)
                }
            }
        })
    }

    /// Encodes `f` under the bindings of `alpha`.
    pub fn designated(
        &mut self,
        f: &Formula,
        alpha: &BTreeMap<String, Element>,
        polarity: bool,
    ) -> Result<Bit, DatabaseError> {
        let mut env: Vec<(&str, Element)> = alpha.iter().map(|(x, &d)| (x.as_str(), d)).collect();
        self.encode(f, &mut env, polarity)
    }

    pub fn require(&mut self, bit: Bit) {
        match bit {
            Bit::Const(true) => {}
            Bit::Const(false) => self.contradiction = true,
            Bit::Lit(l) => self.solver.add_clause(&[l]),
        }
    }

    pub fn add_clause(&mut self, lits: &[Lit]) {
        if lits.is_empty() {
            self.contradiction = true;
        } else {
            self.solver.add_clause(lits);
        }
    }

    pub fn solve(&mut self) -> bool {
        self.solve_assuming(&[])
    }

    pub fn solve_assuming(&mut self, assumptions: &[Lit]) -> bool {
        if self.contradiction {
            return false;
        }
        // assumptions stay in force until the next call replaces them;
        // resetting them here would discard the model just found
        self.solver.assume(assumptions);
        self.solver.solve().expect("in-memory solving cannot fail")
    }

    /// The value of `lit` in the last model found.
    pub fn model_values(&self) -> ModelValues {
        let model = self.solver.model().unwrap_or_default();
        let mut values = Vec::new();
        for l in model {
            let i = l.var().index();
            if values.len() <= i {
                values.resize(i + 1, false);
            }
            values[i] = l.is_positive();
        }
        ModelValues(values)
    }
}

pub(crate) struct ModelValues(Vec<bool>);

impl ModelValues {
    pub fn holds(&self, lit: Lit) -> bool {
        let v = self.0.get(lit.var().index()).copied().unwrap_or(false);
        v == lit.is_positive()
    }
}
