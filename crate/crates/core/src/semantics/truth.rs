use std::fmt;
use std::str::FromStr;

/// One of Belnap's four values.
///
/// Internally a value is a pair of bits: whether the value is designated
/// (`t` or `b`) and whether its negation is designated (`f` or `b`). The truth
/// order, negation, meets and joins are then plain bit operations.
///
/// The derived `Ord` is an arbitrary total order for use in sorted
/// containers; the lattice order is [`TruthValue::leq`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    F,
    N,
    B,
    T,
}

pub const ALL_VALUES: [TruthValue; 4] =
    [TruthValue::T, TruthValue::F, TruthValue::B, TruthValue::N];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantifier {
    ForAll,
    Exists,
}

impl TruthValue {
    pub const fn from_bits(designated: bool, negation_designated: bool) -> Self {
        match (designated, negation_designated) {
            (true, false) => TruthValue::T,
            (false, true) => TruthValue::F,
            (true, true) => TruthValue::B,
            (false, false) => TruthValue::N,
        }
    }

    /// `(designated, negation designated)`
    pub const fn bits(self) -> (bool, bool) {
        match self {
            TruthValue::T => (true, false),
            TruthValue::F => (false, true),
            TruthValue::B => (true, true),
            TruthValue::N => (false, false),
        }
    }

    pub const fn is_designated(self) -> bool {
        matches!(self, TruthValue::T | TruthValue::B)
    }

    /// `self ≤ other` in the truth lattice: f is least, t greatest, b and n
    /// incomparable.
    pub fn leq(self, other: TruthValue) -> bool {
        let (p1, n1) = self.bits();
        let (p2, n2) = other.bits();
        (!p1 || p2) && (n1 || !n2)
    }

    pub fn meet(self, other: TruthValue) -> TruthValue {
        let (p1, n1) = self.bits();
        let (p2, n2) = other.bits();
        TruthValue::from_bits(p1 && p2, n1 || n2)
    }

    pub fn join(self, other: TruthValue) -> TruthValue {
        let (p1, n1) = self.bits();
        let (p2, n2) = other.bits();
        TruthValue::from_bits(p1 || p2, n1 && n2)
    }
}

pub fn tv_not(a: TruthValue) -> TruthValue {
    let (p, n) = a.bits();
    TruthValue::from_bits(n, p)
}

pub fn tv_and(a1: TruthValue, a2: TruthValue) -> TruthValue {
    a1.meet(a2)
}

pub fn tv_or(a1: TruthValue, a2: TruthValue) -> TruthValue {
    a1.join(a2)
}

/// Classical implication: `t` unless the antecedent is designated, in which
/// case the consequent's value.
pub fn tv_impl(a1: TruthValue, a2: TruthValue) -> TruthValue {
    if a1.is_designated() {
        a2
    } else {
        TruthValue::T
    }
}

/// Infimum (`ForAll`) or supremum (`Exists`) of a non-empty collection;
/// `None` for an empty one.
pub fn tv_quant<I>(kind: Quantifier, values: I) -> Option<TruthValue>
where
    I: IntoIterator<Item = TruthValue>,
{
    let fold = match kind {
        Quantifier::ForAll => TruthValue::meet,
        Quantifier::Exists => TruthValue::join,
    };
    values.into_iter().reduce(fold)
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue::T => "t",
            TruthValue::F => "f",
            TruthValue::B => "b",
            TruthValue::N => "n",
        })
    }
}

impl FromStr for TruthValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "t" => Ok(TruthValue::T),
            "f" => Ok(TruthValue::F),
            "b" => Ok(TruthValue::B),
            "n" => Ok(TruthValue::N),
            other => Err(format!(
                "`{other}` is not a truth value (expected t, f, b or n)"
            )),
        }
    }
}
