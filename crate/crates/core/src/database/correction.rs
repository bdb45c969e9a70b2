//! Minimal correction sets of a fact base against integrity constraints.
//!
//! Each ground atom is a classical variable; the constraints are hard, and
//! "the atom is in the world iff it is in Λ" is a soft literal per atom. A
//! world satisfying the constraints is a fact base consistent with them, and
//! the atoms on which it must disagree with Λ, when inclusion-minimal, are a
//! minimal correction set. Each set found is blocked by requiring that at
//! least one of its atoms agree with Λ again, so later sets are never
//! supersets of earlier ones.

use varisat::Lit;

use crate::semantics::assignments;
use crate::syntax::Formula;

use super::ground::{Grounder, Mode};
use super::{DatabaseError, Fact, FactBase, RelationalLanguage};

pub(crate) struct CorrectionSets<'l> {
    grounder: Grounder<'l>,
    softs: Vec<(Fact, Lit)>,
    exhausted: bool,
}

impl<'l> CorrectionSets<'l> {
    pub fn new(
        lang: &'l RelationalLanguage,
        basis: &FactBase,
        constraints: &[Formula],
    ) -> Result<Self, DatabaseError> {
        let mut grounder = Grounder::new(lang, Mode::Classical);
        for xi in constraints {
            lang.check_formula(xi)?;
            let vars: Vec<String> = xi.free_vars().into_iter().collect();
            for alpha in assignments(lang.domain_size(), &vars) {
                let bit = grounder.designated(xi, alpha.bindings(), true)?;
                grounder.require(bit);
            }
        }
        let softs = grounder
            .atoms()
            .map(|(fact, bits)| {
                let lit = if basis.contains(&fact) {
                    bits.designated
                } else {
                    !bits.designated
                };
                (fact, lit)
            })
            .collect();
        Ok(CorrectionSets {
            grounder,
            softs,
            exhausted: false,
        })
    }

    fn satisfied(&self) -> Vec<bool> {
        let model = self.grounder.model_values();
        self.softs.iter().map(|&(_, l)| model.holds(l)).collect()
    }

    /// The next minimal correction set, as the atoms whose membership must
    /// flip; `None` once every set has been produced.
    pub fn next_set(&mut self) -> Option<Vec<Fact>> {
        if self.exhausted || !self.grounder.solve() {
            self.exhausted = true;
            return None;
        }
        let mut keep = self.satisfied();
        for i in 0..self.softs.len() {
            if keep[i] {
                continue;
            }
            let mut assumptions: Vec<Lit> = self
                .softs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&(_, l), _)| l)
                .collect();
            assumptions.push(self.softs[i].1);
            if self.grounder.solve_assuming(&assumptions) {
                keep = self.satisfied();
            }
        }
        let (flips, block): (Vec<Fact>, Vec<Lit>) = self
            .softs
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| !k)
            .map(|((f, l), _)| (f.clone(), *l))
            .unzip();
        if block.is_empty() {
            self.exhausted = true;
        } else {
            self.grounder.add_clause(&block);
        }
        Some(flips)
    }
}
