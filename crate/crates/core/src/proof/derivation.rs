use std::collections::BTreeSet;

use super::check::check_rule;
use super::rules::{RuleInstance, RuleSystem};
use super::sequent::Sequent;
use super::ProofError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Hypothesis,
    /// Premises are 1-based indices of earlier steps.
    Rule {
        instance: RuleInstance,
        premises: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub sequent: Sequent,
    pub justification: Justification,
}

/// A list of sequents, each a hypothesis or obtained from earlier ones.
/// Steps are numbered from 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Derivation {
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn hypothesis(&mut self, sequent: Sequent) -> usize {
        self.steps.push(Step {
            sequent,
            justification: Justification::Hypothesis,
        });
        self.steps.len()
    }

    pub fn step(&mut self, instance: RuleInstance, premises: &[usize], sequent: Sequent) -> usize {
        self.steps.push(Step {
            sequent,
            justification: Justification::Rule {
                instance,
                premises: premises.to_vec(),
            },
        });
        self.steps.len()
    }

    pub fn conclusion(&self) -> Option<&Sequent> {
        self.steps.last().map(|s| &s.sequent)
    }

    /// The sequents the derivation uses as hypotheses.
    pub fn hypotheses(&self) -> Vec<&Sequent> {
        self.steps
            .iter()
            .filter(|s| s.justification == Justification::Hypothesis)
            .map(|s| &s.sequent)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Checks that `derivation` is a derivation in `system` from `hypotheses`:
/// every hypothesis step is one of them and every other step follows from
/// strictly earlier steps by its rule.
pub fn check_derivation(
    system: RuleSystem,
    derivation: &Derivation,
    hypotheses: &[Sequent],
) -> Result<(), ProofError> {
    if derivation.is_empty() {
        return Err(ProofError::Empty);
    }
    let allowed: BTreeSet<Sequent> = hypotheses.iter().map(Sequent::normalized).collect();
    for (i, step) in derivation.steps.iter().enumerate() {
        let index = i + 1;
        let fail = |reason: String| ProofError::InvalidStep {
            step: index,
            reason,
        };
        match &step.justification {
            Justification::Hypothesis => {
                if !allowed.contains(&step.sequent.normalized()) {
                    return Err(fail(format!(
                        "`{}` is not an allowed hypothesis",
                        step.sequent
                    )));
                }
            }
            Justification::Rule { instance, premises } => {
                let mut used = Vec::with_capacity(premises.len());
                for &p in premises {
                    if p == 0 || p >= index {
                        return Err(fail(format!(
                            "premise {p} does not refer to an earlier step"
                        )));
                    }
                    used.push(derivation.steps[p - 1].sequent.clone());
                }
                check_rule(system, instance, &used, &step.sequent).map_err(fail)?;
            }
        }
    }
    Ok(())
}

/// `Γ ⊢ Δ` is derivable if `proof` is a hypothesis-free derivation whose
/// final sequent `Γ' ⊢ Δ'` has `Γ' ⊆ Γ` and `Δ' ⊆ Δ`.
pub fn derives(system: RuleSystem, target: &Sequent, proof: &Derivation) -> Result<(), ProofError> {
    check_derivation(system, proof, &[])?;
    let last = proof.conclusion().expect("checked non-empty").normalized();
    let target = target.normalized();
    if last.left.is_subset(&target.left) && last.right.is_subset(&target.right) {
        Ok(())
    } else {
        Err(ProofError::WrongConclusion {
            proved: last,
            wanted: target,
        })
    }
}
