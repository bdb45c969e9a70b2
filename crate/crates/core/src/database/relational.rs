//! Relational structures: the finitely many models of the relational
//! structure axioms, their canonical subfamilies, and the ∇ collapse.

use std::ops::Deref;

use crate::semantics::{Element, Flavor, Structure, TruthValue, BOTTOM};

use super::{DatabaseError, FactBase, RelationalLanguage};

/// A bottom-flavor structure satisfying the conditions on relational
/// structures: `nil` denotes ⊥, every other element is denoted by exactly one
/// non-nil constant, equality is never `b`, predicates are never `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationalStructure(Structure);

impl Deref for RelationalStructure {
    type Target = Structure;

    fn deref(&self) -> &Structure {
        &self.0
    }
}

/// The relational structure with every atom `f`.
pub fn base_structure(lang: &RelationalLanguage) -> RelationalStructure {
    let mut s = Structure::new(Flavor::Bottom, lang.signature().clone(), lang.domain_size())
        .expect("a relational language has a non-nil constant");
    for (d, c) in lang.constants().iter().enumerate() {
        s.set_constant(c, d).expect("declared constant");
    }
    RelationalStructure(s)
}

impl RelationalStructure {
    pub fn from_structure(lang: &RelationalLanguage, s: Structure) -> Result<Self, DatabaseError> {
        let bad = |why: String| Err(DatabaseError::InvalidStructure(why));
        if s.flavor() != Flavor::Bottom {
            return bad("relational structures have the bottom flavor".into());
        }
        if s.signature() != lang.signature() {
            return bad("structure and language have different signatures".into());
        }
        if s.constant(crate::syntax::NIL) != Some(BOTTOM) {
            return bad("nil must denote ⊥".into());
        }
        let mut named = vec![false; s.size()];
        named[BOTTOM] = true;
        for c in lang.non_nil_constants() {
            let d = s.constant(c).expect("declared");
            if named[d] {
                return bad(format!("`{c}` denotes ⊥ or an element named twice"));
            }
            named[d] = true;
        }
        if named.contains(&false) {
            return bad("every element must be named by a constant".into());
        }
        for d in 1..s.size() {
            if s.equality(d, d) != TruthValue::T {
                return bad(format!("equality of element {d} with itself must be t"));
            }
        }
        for (p, _) in lang.predicates() {
            if s.predicate_table(p)
                .expect("declared")
                .contains(&TruthValue::N)
            {
                return bad(format!("predicate `{p}` takes the value n"));
            }
        }
        Ok(RelationalStructure(s))
    }

    pub fn structure(&self) -> &Structure {
        &self.0
    }

    pub fn into_structure(self) -> Structure {
        self.0
    }

    pub fn value_of(
        &self,
        lang: &RelationalLanguage,
        fact: &super::Fact,
    ) -> Result<TruthValue, DatabaseError> {
        let tuple = fact.elements(lang)?;
        self.0
            .predicate(&fact.predicate, &tuple)
            .ok_or_else(|| DatabaseError::InvalidFact(fact.to_string()))
    }

    /// The designated tuples, read back as a fact base.
    pub fn designated_facts(&self, lang: &RelationalLanguage) -> FactBase {
        let mut out = FactBase::new();
        for (p, n) in lang.predicates() {
            for (i, v) in self
                .0
                .predicate_table(p)
                .expect("declared")
                .iter()
                .enumerate()
            {
                if v.is_designated() {
                    let tuple = self.0.tuple_of_index(n, i);
                    out.insert(super::Fact::from_elements(lang, p, &tuple));
                }
            }
        }
        out
    }
}

/// Number of relational structures over the language: `3^(ground atoms)`,
/// saturating.
pub fn rsa_model_count(lang: &RelationalLanguage) -> u128 {
    let atoms = lang.ground_atom_count();
    u32::try_from(atoms).map_or(u128::MAX, |k| 3u128.saturating_pow(k))
}

fn check_ceiling(what: &str, needed: u128, limit: u64) -> Result<(), DatabaseError> {
    if needed > limit as u128 {
        return Err(DatabaseError::ResourceLimit {
            what: what.to_owned(),
            needed,
            limit,
        });
    }
    Ok(())
}

/// Every relational structure over the language, one per choice of a value
/// in `{t, f, b}` for each ground atom. Refuses when there are more than
/// `ceiling` of them.
pub fn enumerate_rsa_models(
    lang: &RelationalLanguage,
    ceiling: u64,
) -> Result<impl Iterator<Item = RelationalStructure>, DatabaseError> {
    check_ceiling("relational structures", rsa_model_count(lang), ceiling)?;
    let base = base_structure(lang);
    let slots: Vec<(String, usize)> = lang
        .predicates()
        .flat_map(|(p, n)| {
            let len = lang.domain_size().pow(n as u32);
            (0..len).map(move |i| (p.to_owned(), i))
        })
        .collect();
    let mut counter: Option<Vec<u8>> = Some(vec![0; slots.len()]);
    const VALUES: [TruthValue; 3] = [TruthValue::F, TruthValue::T, TruthValue::B];
    Ok(std::iter::from_fn(move || {
        let digits = counter.as_mut()?;
        let mut s = base.0.clone();
        for ((p, i), &digit) in slots.iter().zip(digits.iter()) {
            s.predicate_table_mut(p).expect("declared")[*i] = VALUES[digit as usize];
        }
        // advance the odometer
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                counter = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < 3 {
                break;
            }
            digits[pos] = 0;
        }
        Some(RelationalStructure(s))
    }))
}

/// The model of `RT(R, Λ)` with every listed fact `t` and everything else `f`.
pub fn classical_model(
    lang: &RelationalLanguage,
    basis: &FactBase,
) -> Result<RelationalStructure, DatabaseError> {
    let mut s = base_structure(lang).0;
    for fact in basis {
        let tuple = fact.elements(lang)?;
        s.set_predicate(&fact.predicate, &tuple, TruthValue::T)
            .map_err(|e| DatabaseError::InvalidFact(format!("{fact}: {e}")))?;
    }
    Ok(RelationalStructure(s))
}

/// The models of `RT(R, Λ)`: listed facts take `t` or `b`, every other atom
/// is `f`. There are `2^|Λ|` of them; the `k`-th values the `i`-th listed
/// fact `b` iff bit `i` of `k` is set.
pub fn canonical_models(
    lang: &RelationalLanguage,
    basis: &FactBase,
    ceiling: u64,
) -> Result<impl Iterator<Item = RelationalStructure>, DatabaseError> {
    let needed = u32::try_from(basis.len()).map_or(u128::MAX, |k| 2u128.saturating_pow(k));
    check_ceiling("canonical models", needed, ceiling)?;
    let classical = classical_model(lang, basis)?;
    let slots: Vec<(String, Vec<Element>)> = basis
        .iter()
        .map(|f| Ok((f.predicate.clone(), f.elements(lang)?)))
        .collect::<Result<_, DatabaseError>>()?;
    Ok((0..needed as u64).map(move |mask| {
        let mut s = classical.0.clone();
        for (i, (p, tuple)) in slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.set_predicate(p, tuple, TruthValue::B)
                    .expect("checked above");
            }
        }
        RelationalStructure(s)
    }))
}

/// `∇A`: every `b` predicate value becomes `t`; equality is untouched.
pub fn nabla(s: &RelationalStructure) -> RelationalStructure {
    let mut out = s.0.clone();
    let preds: Vec<String> = out.signature().predicates().keys().cloned().collect();
    for p in preds {
        for v in out.predicate_table_mut(&p).expect("declared") {
            if *v == TruthValue::B {
                *v = TruthValue::T;
            }
        }
    }
    RelationalStructure(out)
}

/// Whether the bijection induced by the constants (each constant's
/// denotation in `s1` to its denotation in `s2`) is an isomorphism. Structures
/// with an element no constant names are never related this way.
pub fn models_isomorphic(s1: &Structure, s2: &Structure) -> Result<bool, DatabaseError> {
    if s1.signature() != s2.signature() {
        return Err(DatabaseError::InvalidStructure(
            "structures over different signatures".into(),
        ));
    }
    if s1.size() != s2.size() || s1.flavor() != s2.flavor() {
        return Ok(false);
    }
    let mut map: Vec<Option<Element>> = vec![None; s1.size()];
    let mut hit = vec![false; s2.size()];
    for c in s1.signature().constants() {
        let (d1, d2) = (
            s1.constant(c).expect("declared"),
            s2.constant(c).expect("declared"),
        );
        match map[d1] {
            Some(prev) if prev != d2 => return Ok(false),
            Some(_) => {}
            None => {
                if hit[d2] {
                    return Ok(false);
                }
                map[d1] = Some(d2);
                hit[d2] = true;
            }
        }
    }
    let Some(map) = map.into_iter().collect::<Option<Vec<Element>>>() else {
        return Ok(false);
    };
    for d1 in s1.domain() {
        for d2 in s1.domain() {
            if s1.equality(d1, d2) != s2.equality(map[d1], map[d2]) {
                return Ok(false);
            }
        }
    }
    for p in s1.signature().propositions() {
        if s1.proposition(p) != s2.proposition(p) {
            return Ok(false);
        }
    }
    for (p, &n) in s1.signature().predicates() {
        let table = s1.predicate_table(p).expect("declared");
        for (i, v) in table.iter().enumerate() {
            let image: Vec<Element> = s1
                .tuple_of_index(n, i)
                .into_iter()
                .map(|d| map[d])
                .collect();
            if s2.predicate(p, &image) != Some(*v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
