use super::*;
use crate::semantics::{is_model, Flavor, Structure, TruthValue, ALL_VALUES};
use crate::syntax::{parse_formula, Signature};

fn lang(consts: &[&str], preds: &[(&str, usize)]) -> RelationalLanguage {
    let mut sig = Signature::with_nil();
    for c in consts {
        sig.add_constant(c).unwrap();
    }
    for (p, n) in preds {
        sig.add_predicate(p, *n).unwrap();
    }
    RelationalLanguage::new(sig).unwrap()
}

fn basis(facts: &[(&str, &[&str])]) -> FactBase {
    facts.iter().map(|(p, args)| Fact::new(p, args)).collect()
}

/// Every bottom-flavor structure of the given size over a signature with one
/// unary predicate, varying constants, the equality diagonal and the
/// predicate.
fn bottom_family(l: &RelationalLanguage, size: usize) -> Vec<Structure> {
    let consts = l.constants();
    let mut out = Vec::new();
    let const_choices = size.pow(consts.len() as u32);
    for code in 0..const_choices {
        for diag in 0..(1usize << (size - 1)) {
            for preds in 0..(1usize << (2 * size)) {
                let mut s = Structure::new(Flavor::Bottom, l.signature().clone(), size).unwrap();
                let mut c = code;
                for name in consts {
                    s.set_constant(name, c % size).unwrap();
                    c /= size;
                }
                for d in 1..size {
                    let v = if diag >> (d - 1) & 1 == 1 {
                        TruthValue::B
                    } else {
                        TruthValue::T
                    };
                    s.set_equality(d, d, v).unwrap();
                }
                for d in 0..size {
                    s.set_predicate("P", &[d], ALL_VALUES[(preds >> (2 * d)) & 3])
                        .unwrap();
                }
                out.push(s);
            }
        }
    }
    out
}

#[test]
fn rsa_models_are_exactly_relational_structures() {
    for (consts, sizes) in [(&["a"][..], 2..=3), (&["a", "b"][..], 3..=3)] {
        let l = lang(consts, &[("P", 1)]);
        let axioms = rsa(&l);
        let mut models = 0;
        for size in sizes {
            for s in bottom_family(&l, size) {
                let model = is_model(&s, &axioms).unwrap();
                let relational = RelationalStructure::from_structure(&l, s).is_ok();
                assert_eq!(model, relational);
                models += model as usize;
            }
        }
        // each relational structure appears once per naming of its elements
        let perms: usize = (1..=consts.len()).product();
        assert_eq!(models, perms * rsa_model_count(&l) as usize);
    }
}

#[test]
fn enumeration_counts_and_nil() {
    let l = lang(&["a"], &[("P", 1)]);
    let all: Vec<_> = enumerate_rsa_models(&l, 1000).unwrap().collect();
    assert_eq!(all.len(), 9);
    for s in &all {
        assert!(is_model(s, &rsa(&l)).unwrap());
        assert_eq!(s.constant("nil"), Some(crate::semantics::BOTTOM));
    }
    assert!(enumerate_rsa_models(&l, 8).is_err());
}

#[test]
fn models_of_theory_are_the_canonical_ones() {
    let l = lang(&["a", "b"], &[("P", 1)]);
    for b in [
        basis(&[]),
        basis(&[("P", &["a"])]),
        basis(&[("P", &["a"]), ("P", &["nil"])]),
    ] {
        let theory = relational_theory(&l, &b);
        let filtered: Vec<Structure> = enumerate_rsa_models(&l, 1000)
            .unwrap()
            .filter(|s| is_model(s, &theory).unwrap())
            .map(RelationalStructure::into_structure)
            .collect();
        let canonical: Vec<Structure> = canonical_models(&l, &b, 1000)
            .unwrap()
            .map(RelationalStructure::into_structure)
            .collect();
        assert_eq!(filtered.len(), 1 << b.len());
        for s in &canonical {
            assert!(filtered.contains(s));
        }
        // any two models collapse to the same structure
        for s in &filtered {
            let first = RelationalStructure::from_structure(&l, filtered[0].clone()).unwrap();
            let this = RelationalStructure::from_structure(&l, s.clone()).unwrap();
            assert!(models_isomorphic(&nabla(&first), &nabla(&this)).unwrap());
        }
    }
}

#[test]
fn every_relational_structure_models_its_designated_facts() {
    let l = lang(&["a"], &[("P", 1), ("Q", 1)]);
    for s in enumerate_rsa_models(&l, 1000).unwrap() {
        let b = s.designated_facts(&l);
        assert!(is_model(&s, &relational_theory(&l, &b)).unwrap());
    }
}

#[test]
fn nabla_collapses_glutted_atoms() {
    let l = lang(&["a"], &[("P", 1)]);
    let b = basis(&[("P", &["a"])]);
    let models: Vec<_> = canonical_models(&l, &b, 10).unwrap().collect();
    let glut = &models[1];
    assert_eq!(
        glut.value_of(&l, &Fact::new("P", &["a"])).unwrap(),
        TruthValue::B
    );
    let collapsed = nabla(glut);
    assert_eq!(
        collapsed.value_of(&l, &Fact::new("P", &["a"])).unwrap(),
        TruthValue::T
    );
    assert_eq!(nabla(&collapsed), collapsed);
    assert_eq!(nabla(&models[0]), models[0]);
    assert!(models_isomorphic(glut, glut).unwrap());
    assert!(!models_isomorphic(&models[0], glut).unwrap());
    let other = classical_model(&l, &basis(&[("P", &["nil"])])).unwrap();
    assert!(!models_isomorphic(&models[0], &other).unwrap());
}

#[test]
fn theory_entailment_examples() {
    let l = lang(&["a", "b"], &[("P", 1)]);
    let sig = l.signature();
    let b = basis(&[("P", &["a"])]);
    let f = |t: &str| parse_formula(t, sig).unwrap();
    for (text, expected) in [
        ("P(a)", true),
        ("~P(b)", true),
        ("~P(a)", false),
        ("exists x. P(x)", true),
        ("forall x. P(x) -> x == a", true),
        ("nil = nil", false),
        ("~(nil = nil)", false),
        ("~def(nil)", true),
    ] {
        let a = f(text);
        assert_eq!(theory_entails(&l, &b, &a).unwrap(), expected, "{text}");
        assert_eq!(
            theory_entails_canonical(&l, &b, &a, 100).unwrap(),
            expected,
            "{text}"
        );
        assert_eq!(
            theory_entails_generic(&l, &b, &a, 1000).unwrap(),
            expected,
            "{text}"
        );
    }
}

#[test]
fn entails_rsa_examples() {
    let l = lang(&["a"], &[("P", 1), ("Q", 1)]);
    let sig = l.signature();
    let axioms = rsa(&l);
    assert!(entails_rsa(&l, &axioms, &domain_closure(&l)).unwrap());
    let nil_eq = parse_formula("nil = nil", sig).unwrap();
    assert!(!entails_rsa(&l, &axioms, &nil_eq).unwrap());
    assert!(!entails_rsa_enumerative(&l, &axioms, &nil_eq, 1000).unwrap());
    let mut gamma = axioms.clone();
    gamma.push(parse_formula("P(a)", sig).unwrap());
    let goal = parse_formula("P(a) | Q(a)", sig).unwrap();
    assert!(entails_rsa(&l, &gamma, &goal).unwrap());
    assert!(entails_rsa_enumerative(&l, &gamma, &goal, 1000).unwrap());
    // paraconsistency survives the axioms
    gamma.push(parse_formula("~P(a)", sig).unwrap());
    let q = parse_formula("Q(a)", sig).unwrap();
    assert!(!entails_rsa(&l, &gamma, &q).unwrap());
    assert!(matches!(
        entails_rsa(&l, &gamma[1..], &q),
        Err(DatabaseError::MissingAxiom(_))
    ));
}

#[test]
fn consistency_of_small_databases() {
    let l = lang(&["a", "b"], &[("P", 1)]);
    let sig = l.signature();
    let b = basis(&[("P", &["a"]), ("P", &["b"])]);
    assert!(consistent_with(&l, &b, &[]).unwrap());
    let at_most_one = parse_formula("forall x,y. P(x) & P(y) -> x = y", sig).unwrap();
    assert!(!consistent_with(&l, &b, std::slice::from_ref(&at_most_one)).unwrap());
    let db = Database::new(l.clone(), b, vec![at_most_one]).unwrap();
    let report = is_consistent_db(&db).unwrap();
    assert!(!report.consistent);
    assert_eq!(report.violated, vec![0]);
    assert!(report.witness.is_some());
    assert!(!report.theory_satisfiable);
    let empty = Database::new(l, FactBase::new(), vec![]).unwrap();
    assert!(is_consistent_db(&empty).unwrap().consistent);
}

fn data(name: &str) -> String {
    let path = format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn worked_example_is_inconsistent_without_exploding() {
    for file in [
        "functional_dependency.db",
        "functional_dependency_strong.db",
    ] {
        let parsed = parse_database_file(&data(file)).unwrap();
        let db = &parsed.database;
        assert_eq!(db.basis().len(), 4);
        assert!(!db.is_consistent().unwrap());
        let l = db.language();
        let fresh = parse_formula("P(c,c,c)", l.signature()).unwrap();
        assert!(!theory_entails(l, db.basis(), &fresh).unwrap());
    }
}

#[test]
fn file_errors() {
    assert!(matches!(
        parse_database_file("const a\npred P/1\nfact P(b)"),
        Err(DatabaseError::Parse { line: 3, .. })
    ));
    assert!(matches!(
        parse_database_file("const a\nfrobnicate"),
        Err(DatabaseError::Parse { line: 2, .. })
    ));
    assert!(matches!(
        parse_database_file("pred P/1"),
        Err(DatabaseError::InvalidLanguage(_))
    ));
    assert!(matches!(
        parse_database_file("const a\npred P/1\nfact Q(a)"),
        Err(DatabaseError::Syntax { line: 3, .. })
    ));
    assert!(matches!(
        parse_database_file("const a\npred P/1\nquery q(x) :- P(y)"),
        Err(DatabaseError::InvalidQuery(_))
    ));
    let ok =
        parse_database_file("const a # trailing\n\npred P/1 Q/2\nquery all() :- true").unwrap();
    assert_eq!(ok.query("all").unwrap().arity(), 0);
}
