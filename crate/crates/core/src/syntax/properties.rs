use super::{parse_formula, Formula, Signature, Term};
use proptest::prelude::*;

fn signature() -> Signature {
    let mut sig = Signature::new();
    sig.add_constant("a").unwrap();
    sig.add_constant("b").unwrap();
    sig.add_function("f", 1).unwrap();
    sig.add_predicate("P", 1).unwrap();
    sig.add_predicate("R", 2).unwrap();
    sig.add_proposition("p").unwrap();
    sig
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["x", "y", "z"]).prop_map(Term::var),
        prop::sample::select(vec!["a", "b"]).prop_map(Term::constant),
    ];
    leaf.prop_recursive(2, 4, 1, |inner| {
        inner.prop_map(|t| Term::App("f".into(), vec![t]))
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::prop("p")),
        Just(Formula::Falsum),
        term().prop_map(|t| Formula::atom("P", vec![t])),
        (term(), term()).prop_map(|(s, t)| Formula::atom("R", vec![s, t])),
        (term(), term()).prop_map(|(s, t)| Formula::eq(s, t)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let var = prop::sample::select(vec!["x", "y", "z"]);
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (var.clone(), inner.clone()).prop_map(|(x, a)| Formula::forall(x, a)),
            (var, inner).prop_map(|(x, a)| Formula::exists(x, a)),
        ]
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_the_identity(a in formula()) {
        let printed = a.to_string();
        let reparsed = parse_formula(&printed, &signature());
        prop_assert_eq!(reparsed, Ok(a), "printed as {}", printed);
    }

    #[test]
    fn substitution_removes_the_variable(a in formula(), t in term()) {
        prop_assume!(!t.has_var("x"));
        let b = a.substitute("x", &t);
        prop_assert!(!b.has_free_var("x"));
        // no variable of t gets captured: t's variables stay free wherever x was
        for v in t.free_vars() {
            if a.has_free_var("x") {
                prop_assert!(b.has_free_var(&v));
            }
        }
    }

    #[test]
    fn substituting_an_absent_variable_changes_nothing(a in formula(), t in term()) {
        prop_assume!(!a.has_free_var("w"));
        prop_assert_eq!(a.substitute("w", &t), a);
    }

    #[test]
    fn renaming_normal_form_is_idempotent_and_keeps_free_variables(a in formula()) {
        let n = a.alpha_normal();
        prop_assert_eq!(n.alpha_normal(), n.clone());
        prop_assert_eq!(n.free_vars(), a.free_vars());
        prop_assert!(a.alpha_eq(&n));
    }
}
