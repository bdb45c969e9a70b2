use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::Formula;

/// `Γ ⊢ Δ` with `Γ` and `Δ` finite sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    pub left: BTreeSet<Formula>,
    pub right: BTreeSet<Formula>,
}

impl Sequent {
    pub fn new(
        left: impl IntoIterator<Item = Formula>,
        right: impl IntoIterator<Item = Formula>,
    ) -> Self {
        Sequent {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
        }
    }

    /// The same sequent with every formula's bound variables renamed
    /// canonically, so that sequents equal up to renaming compare equal.
    pub fn normalized(&self) -> Sequent {
        Sequent {
            left: self.left.iter().map(Formula::alpha_normal).collect(),
            right: self.right.iter().map(Formula::alpha_normal).collect(),
        }
    }

    /// Free variables of every formula in the sequent.
    pub fn free_vars(&self) -> BTreeSet<String> {
        self.left
            .iter()
            .chain(&self.right)
            .flat_map(Formula::free_vars)
            .collect()
    }
}

fn side(f: &mut fmt::Formatter<'_>, formulas: &BTreeSet<Formula>) -> fmt::Result {
    for (i, a) in formulas.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        // a quantifier would swallow the comma after it
        if matches!(a, Formula::ForAll(..) | Formula::Exists(..)) && i + 1 < formulas.len() {
            write!(f, "({a})")?;
        } else {
            write!(f, "{a}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        side(f, &self.left)?;
        f.write_str(if self.left.is_empty() { "|-" } else { " |-" })?;
        if !self.right.is_empty() {
            f.write_str(" ")?;
        }
        side(f, &self.right)
    }
}
