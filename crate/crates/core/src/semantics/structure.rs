use std::collections::BTreeMap;

use super::truth::TruthValue;
use super::SemanticsError;
use crate::syntax::Signature;

/// Domain elements are indices `0..size`.
pub type Element = usize;

/// In a bottom-flavor structure the indeterminate element is always index 0.
pub const BOTTOM: Element = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Plain,
    Bottom,
}

/// A finite structure over a signature.
///
/// Tables are stored densely: a predicate of arity `k` over a domain of size
/// `s` owns `s^k` values, indexed by the tuple read as a base-`s` number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    flavor: Flavor,
    signature: Signature,
    size: usize,
    constants: BTreeMap<String, Element>,
    functions: BTreeMap<String, Vec<Element>>,
    propositions: BTreeMap<String, TruthValue>,
    predicates: BTreeMap<String, Vec<TruthValue>>,
    equality: Vec<TruthValue>,
}

fn standard_equality(flavor: Flavor, d1: Element, d2: Element) -> TruthValue {
    if flavor == Flavor::Bottom && (d1 == BOTTOM || d2 == BOTTOM) {
        TruthValue::N
    } else if d1 == d2 {
        TruthValue::T
    } else {
        TruthValue::F
    }
}

impl Structure {
    /// A structure with default interpretations: every constant and function
    /// value is the first ordinary element, every atom is `f`, equality is
    /// `t` on the diagonal and `f` elsewhere (`n` wherever ⊥ is involved).
    pub fn new(flavor: Flavor, signature: Signature, size: usize) -> Result<Self, SemanticsError> {
        let ordinary = match flavor {
            Flavor::Plain => 0,
            Flavor::Bottom => 1,
        };
        if size <= ordinary {
            return Err(SemanticsError::InvalidStructure(match flavor {
                Flavor::Plain => "the domain must be non-empty".to_owned(),
                Flavor::Bottom => {
                    "a bottom-flavor domain needs ⊥ and at least one other element".to_owned()
                }
            }));
        }
        let table_len = |arity: usize| {
            size.checked_pow(arity as u32)
                .filter(|&n| n <= 1 << 28)
                .ok_or_else(|| SemanticsError::InvalidStructure("table too large".to_owned()))
        };
        let constants = signature
            .constants()
            .iter()
            .map(|c| (c.clone(), ordinary))
            .collect();
        let mut functions = BTreeMap::new();
        for (f, &arity) in signature.functions() {
            functions.insert(f.clone(), vec![ordinary; table_len(arity)?]);
        }
        let mut predicates = BTreeMap::new();
        for (p, &arity) in signature.predicates() {
            predicates.insert(p.clone(), vec![TruthValue::F; table_len(arity)?]);
        }
        let propositions = signature
            .propositions()
            .iter()
            .map(|p| (p.clone(), TruthValue::F))
            .collect();
        let mut equality = Vec::with_capacity(size * size);
        for d1 in 0..size {
            for d2 in 0..size {
                equality.push(standard_equality(flavor, d1, d2));
            }
        }
        Ok(Structure {
            flavor,
            signature,
            size,
            constants,
            functions,
            propositions,
            predicates,
            equality,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn domain(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    fn check_element(&self, d: Element) -> Result<(), SemanticsError> {
        if d < self.size {
            Ok(())
        } else {
            Err(SemanticsError::InvalidStructure(format!(
                "element {d} is outside a domain of size {}",
                self.size
            )))
        }
    }

    pub(crate) fn tuple_index(&self, tuple: &[Element]) -> usize {
        tuple.iter().fold(0, |acc, &d| acc * self.size + d)
    }

    fn checked_index(&self, arity: usize, tuple: &[Element]) -> Result<usize, SemanticsError> {
        if tuple.len() != arity {
            return Err(SemanticsError::InvalidStructure(format!(
                "expected a tuple of length {arity}, found {}",
                tuple.len()
            )));
        }
        for &d in tuple {
            self.check_element(d)?;
        }
        Ok(self.tuple_index(tuple))
    }

    pub fn set_constant(&mut self, name: &str, d: Element) -> Result<(), SemanticsError> {
        self.check_element(d)?;
        match self.constants.get_mut(name) {
            Some(slot) => {
                *slot = d;
                Ok(())
            }
            None => Err(SemanticsError::Undeclared(name.to_owned())),
        }
    }

    pub fn set_proposition(&mut self, name: &str, v: TruthValue) -> Result<(), SemanticsError> {
        match self.propositions.get_mut(name) {
            Some(slot) => {
                *slot = v;
                Ok(())
            }
            None => Err(SemanticsError::Undeclared(name.to_owned())),
        }
    }

    pub fn set_predicate(
        &mut self,
        name: &str,
        tuple: &[Element],
        v: TruthValue,
    ) -> Result<(), SemanticsError> {
        let arity = self
            .signature
            .predicate_arity(name)
            .ok_or_else(|| SemanticsError::Undeclared(name.to_owned()))?;
        let i = self.checked_index(arity, tuple)?;
        self.predicates.get_mut(name).expect("declared")[i] = v;
        Ok(())
    }

    pub fn set_function(
        &mut self,
        name: &str,
        tuple: &[Element],
        d: Element,
    ) -> Result<(), SemanticsError> {
        let arity = self
            .signature
            .function_arity(name)
            .ok_or_else(|| SemanticsError::Undeclared(name.to_owned()))?;
        let i = self.checked_index(arity, tuple)?;
        self.check_element(d)?;
        self.functions.get_mut(name).expect("declared")[i] = d;
        Ok(())
    }

    /// Overrides one equality entry, rejecting values that break the
    /// flavor's equality conditions.
    pub fn set_equality(
        &mut self,
        d1: Element,
        d2: Element,
        v: TruthValue,
    ) -> Result<(), SemanticsError> {
        self.check_element(d1)?;
        self.check_element(d2)?;
        let involves_bottom = self.flavor == Flavor::Bottom && (d1 == BOTTOM || d2 == BOTTOM);
        let ok = if involves_bottom {
            v == TruthValue::N
        } else if self.flavor == Flavor::Bottom {
            // designated exactly on the diagonal, and never n away from ⊥
            v.is_designated() == (d1 == d2) && v != TruthValue::N
        } else {
            v.is_designated() == (d1 == d2)
        };
        if !ok {
            return Err(SemanticsError::InvalidStructure(format!(
                "equality of {d1} and {d2} cannot be {v} in a {:?} structure",
                self.flavor
            )));
        }
        let i = d1 * self.size + d2;
        self.equality[i] = v;
        Ok(())
    }

    pub fn constant(&self, name: &str) -> Option<Element> {
        self.constants.get(name).copied()
    }

    pub fn proposition(&self, name: &str) -> Option<TruthValue> {
        self.propositions.get(name).copied()
    }

    pub fn predicate(&self, name: &str, tuple: &[Element]) -> Option<TruthValue> {
        let table = self.predicates.get(name)?;
        let arity = self.signature.predicate_arity(name)?;
        if tuple.len() != arity || tuple.iter().any(|&d| d >= self.size) {
            return None;
        }
        Some(table[self.tuple_index(tuple)])
    }

    pub fn predicate_table(&self, name: &str) -> Option<&[TruthValue]> {
        self.predicates.get(name).map(Vec::as_slice)
    }

    pub(crate) fn predicate_table_mut(&mut self, name: &str) -> Option<&mut [TruthValue]> {
        self.predicates.get_mut(name).map(Vec::as_mut_slice)
    }

    pub fn function(&self, name: &str, tuple: &[Element]) -> Option<Element> {
        let table = self.functions.get(name)?;
        let arity = self.signature.function_arity(name)?;
        if tuple.len() != arity || tuple.iter().any(|&d| d >= self.size) {
            return None;
        }
        Some(table[self.tuple_index(tuple)])
    }

    pub fn equality(&self, d1: Element, d2: Element) -> TruthValue {
        self.equality[d1 * self.size + d2]
    }

    /// Decodes a table index back into its tuple.
    pub fn tuple_of_index(&self, arity: usize, mut index: usize) -> Vec<Element> {
        let mut tuple = vec![0; arity];
        for slot in tuple.iter_mut().rev() {
            *slot = index % self.size;
            index /= self.size;
        }
        tuple
    }
}

/// Every structure over a proposition-only signature on a one-element plain
/// domain: one per valuation of the proposition symbols, `4^k` in total.
pub fn propositional_structures(signature: &Signature) -> Result<Vec<Structure>, SemanticsError> {
    if !signature.predicates().is_empty() || !signature.functions().is_empty() {
        return Err(SemanticsError::InvalidStructure(
            "propositional families need a signature without predicates or functions".to_owned(),
        ));
    }
    let props: Vec<&String> = signature.propositions().iter().collect();
    let base = Structure::new(Flavor::Plain, signature.clone(), 1)?;
    let mut out = Vec::with_capacity(1 << (2 * props.len()));
    for code in 0..(1usize << (2 * props.len())) {
        let mut s = base.clone();
        for (i, p) in props.iter().enumerate() {
            let v = super::truth::ALL_VALUES[(code >> (2 * i)) & 3];
            s.set_proposition(p, v)?;
        }
        out.push(s);
    }
    Ok(out)
}
