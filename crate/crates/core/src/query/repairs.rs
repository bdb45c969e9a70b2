use std::collections::BTreeSet;

use crate::database::correction::CorrectionSets;
use crate::database::{consistent_with, Database, DatabaseError, Fact, FactBase};

use super::ground_atoms;

/// `Λ' ≤_Λ Λ''`: the changes `Λ'` makes to `Λ` are among those `Λ''` makes.
pub fn leq_lambda(lambda: &FactBase, lambda1: &FactBase, lambda2: &FactBase) -> bool {
    let d1 = lambda.symmetric_difference(lambda1);
    let d2 = lambda.symmetric_difference(lambda2);
    d1.is_subset(&d2)
}

/// The repairs of a database's basis, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepairSet {
    repairs: Vec<FactBase>,
}

impl RepairSet {
    pub fn iter(&self) -> impl Iterator<Item = &FactBase> {
        self.repairs.iter()
    }

    pub fn len(&self) -> usize {
        self.repairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.repairs.is_empty()
    }

    pub fn as_slice(&self) -> &[FactBase] {
        &self.repairs
    }
}

impl FromIterator<FactBase> for RepairSet {
    fn from_iter<I: IntoIterator<Item = FactBase>>(iter: I) -> Self {
        let mut repairs: Vec<FactBase> = iter.into_iter().collect();
        repairs.sort();
        repairs.dedup();
        RepairSet { repairs }
    }
}

/// The `≤_Λ`-minimal fact bases consistent with the constraints, found by
/// enumerating minimal correction sets.
pub fn repairs(db: &Database) -> Result<RepairSet, DatabaseError> {
    let mut sets = CorrectionSets::new(db.language(), db.basis(), db.constraints())?;
    let mut out = Vec::new();
    while let Some(flips) = sets.next_set() {
        out.push(db.basis().toggled(&flips));
    }
    Ok(out.into_iter().collect())
}

/// The same repairs by breadth-first search over the size of the change set:
/// every change set of size `k` that does not contain an already recorded
/// minimal change set is tried before any of size `k + 1`. Refuses when the
/// language has more than `max_universe` ground atoms.
pub fn repairs_exhaustive(db: &Database, max_universe: usize) -> Result<RepairSet, DatabaseError> {
    let universe = ground_atoms(db.language());
    if universe.len() > max_universe {
        return Err(DatabaseError::ResourceLimit {
            what: "candidate atoms".into(),
            needed: universe.len() as u128,
            limit: max_universe as u64,
        });
    }
    let mut minimal: Vec<BTreeSet<&Fact>> = Vec::new();
    let mut out = Vec::new();
    for k in 0..=universe.len() {
        let mut chosen: Vec<usize> = (0..k).collect();
        loop {
            let diff: BTreeSet<&Fact> = chosen.iter().map(|&i| &universe[i]).collect();
            if !minimal.iter().any(|m| m.is_subset(&diff)) {
                let candidate = db.basis().toggled(diff.iter().copied());
                if consistent_with(db.language(), &candidate, db.constraints())? {
                    minimal.push(diff);
                    out.push(candidate);
                }
            }
            if !next_combination(&mut chosen, universe.len()) {
                break;
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Advances `c` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
