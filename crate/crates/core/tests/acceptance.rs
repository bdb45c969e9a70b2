//! One line per acceptance criterion. Runs without the libtest harness so
//! that every criterion reports, even after an earlier one fails.

use std::collections::BTreeSet;
use std::fs;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use belnap_core::database::{
    canonical_models, consistent_with, entails_rsa_enumerative, enumerate_rsa_models,
    models_isomorphic, nabla, parse_database_file, relational_theory, rsa, theory_entails,
    theory_entails_generic, Database, Fact, FactBase, RelationalLanguage, RelationalStructure,
    SemiAtomicFact, DEFAULT_MAX_STRUCTURES,
};
use belnap_core::proof::{
    check_derivation, parse_proof_file, Justification, ProofError, RuleName, RuleSystem,
};
use belnap_core::query::{
    answers, candidate_tuples, consistent_answers, derivable_semi_atomic_facts, ground_atoms,
    repairs, strongly_consistent_answers, AnswerTuple, Query,
};
use belnap_core::semantics::{
    entails_over, eval_formula, is_model, propositional_structures, Assignment, Flavor, Structure,
    TruthValue,
};
use belnap_core::syntax::{parse_formula, Formula, Signature, Term};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

/// Constants and predicate declarations of a generated language.
type Shape = (&'static [&'static str], &'static [(&'static str, usize)]);

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn tuples(items: &[&str]) -> Vec<AnswerTuple> {
    items.iter().map(|c| vec![c.to_string()]).collect()
}

fn worked_example(file: &str, expected: [&[&str]; 3]) -> Verdict {
    let parsed = parse_database_file(&fs::read_to_string(data(file)).map_err(err)?).map_err(err)?;
    let db = &parsed.database;
    let q = parsed.query("q").ok_or("query q missing")?;
    let plain = answers(db, q).map_err(err)?;
    let consistent = consistent_answers(db, q).map_err(err)?;
    let strong = strongly_consistent_answers(db, q).map_err(err)?.tuples;
    let got = [plain, consistent, strong];
    for (name, (g, e)) in ["plain", "consistent", "strong"]
        .iter()
        .zip(got.iter().zip(expected))
    {
        ensure(*g == tuples(e), || {
            format!("{name} answers {g:?}, expected {e:?}")
        })?;
    }
    Ok(format!(
        "plain {:?}, consistent {:?}, strong {:?}",
        expected[0], expected[1], expected[2]
    ))
}

fn criterion_1() -> Verdict {
    worked_example("functional_dependency.db", [&["a"], &[], &[]])
}

fn criterion_2() -> Verdict {
    worked_example("functional_dependency_strong.db", [&["a"], &["a"], &[]])
}

fn two_props() -> Signature {
    let mut sig = Signature::new();
    sig.add_proposition("p").unwrap();
    sig.add_proposition("q").unwrap();
    sig
}

fn criterion_3() -> Verdict {
    use TruthValue::{B, F, N, T};
    const ORDER: [TruthValue; 4] = [T, F, B, N];
    // rows: first argument, columns: second, both in the order t f b n
    let not = [F, T, B, N];
    let and = [[T, F, B, N], [F, F, F, F], [B, F, B, F], [N, F, F, N]];
    let or = [[T, T, T, T], [T, F, B, N], [T, B, B, T], [T, N, T, N]];
    let imp = [[T, F, B, N], [T, T, T, T], [T, F, B, N], [T, T, T, T]];
    let des = [T, F, T, F];
    let cons = [T, T, F, T];
    let det = [T, T, T, F];

    let sig = two_props();
    let value = |text: &str, p: TruthValue, q: TruthValue| -> Result<TruthValue, String> {
        let mut s = Structure::new(Flavor::Plain, sig.clone(), 1).map_err(err)?;
        s.set_proposition("p", p).map_err(err)?;
        s.set_proposition("q", q).map_err(err)?;
        let a = parse_formula(text, &sig).map_err(err)?;
        eval_formula(&s, &Assignment::new(0), &a).map_err(err)
    };
    let mut checked = 0;
    let mut check = |text: &str, p, q, expected: TruthValue| -> Result<(), String> {
        checked += 1;
        let got = value(text, p, q)?;
        ensure(got == expected, || {
            format!("`{text}` with p={p}, q={q}: got {got}, expected {expected}")
        })
    };
    for (i, &p) in ORDER.iter().enumerate() {
        check("~p", p, T, not[i])?;
        check("des(p)", p, T, des[i])?;
        check("cons(p)", p, T, cons[i])?;
        check("det(p)", p, T, det[i])?;
        for (j, &q) in ORDER.iter().enumerate() {
            check("p & q", p, q, and[i][j])?;
            check("p | q", p, q, or[i][j])?;
            check("p -> q", p, q, imp[i][j])?;
        }
    }
    Ok(format!("{checked} table entries match"))
}

fn criterion_4() -> Verdict {
    let sig = two_props();
    let family = propositional_structures(&sig).map_err(err)?;
    ensure(family.len() == 16, || {
        format!("family has {} structures", family.len())
    })?;
    let f = |t: &str| parse_formula(t, &sig).unwrap();
    let explosion = entails_over(&family, &[f("p"), f("~p")], &[f("q")]).map_err(err)?;
    let excluded_middle = entails_over(&family, &[], &[f("p | ~p")]).map_err(err)?;
    ensure(!explosion, || "{p, ~p} entails q".into())?;
    ensure(!excluded_middle, || "p | ~p is valid".into())?;
    Ok("{p, ~p} does not entail q; p | ~p is not valid (16 structures)".into())
}

fn criterion_5() -> Verdict {
    let sig = Signature::new();
    let mut family = Vec::new();
    for size in 2..=3usize {
        for diag in 0..(1usize << (size - 1)) {
            let mut s = Structure::new(Flavor::Bottom, sig.clone(), size).map_err(err)?;
            for d in 1..size {
                let v = if diag >> (d - 1) & 1 == 1 {
                    TruthValue::B
                } else {
                    TruthValue::T
                };
                s.set_equality(d, d, v).map_err(err)?;
            }
            family.push(s);
        }
    }
    let f = |t: &str| parse_formula(t, &sig).unwrap();
    let defined = f("x = x & y = y");
    let decided = f("x = y | ~(x = y)");
    let forward = entails_over(
        &family,
        std::slice::from_ref(&defined),
        std::slice::from_ref(&decided),
    )
    .map_err(err)?;
    let backward = entails_over(
        &family,
        std::slice::from_ref(&decided),
        std::slice::from_ref(&defined),
    )
    .map_err(err)?;
    ensure(forward && backward, || {
        format!("forward {forward}, backward {backward}")
    })?;
    Ok(format!(
        "both directions hold over {} structures",
        family.len()
    ))
}

fn language(consts: &[&str], preds: &[(&str, usize)]) -> RelationalLanguage {
    let mut sig = Signature::with_nil();
    for c in consts {
        sig.add_constant(c).unwrap();
    }
    for (p, n) in preds {
        sig.add_predicate(p, *n).unwrap();
    }
    RelationalLanguage::new(sig).unwrap()
}

/// All subsets of `items` with at most `k` elements.
fn small_subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for item in items {
        let extended: Vec<Vec<T>> = out
            .iter()
            .filter(|s| s.len() < k)
            .map(|s| {
                let mut s = s.clone();
                s.push(item.clone());
                s
            })
            .collect();
        out.extend(extended);
    }
    out
}

fn criterion_6() -> Verdict {
    let mut instances = 0;
    let mut pairs = 0;
    for consts in [&["a"][..], &["a", "b"][..]] {
        for arity in 1..=2 {
            let lang = language(consts, &[("P", arity)]);
            let atoms = ground_atoms(&lang);
            for facts in small_subsets(&atoms, 3) {
                let basis: FactBase = facts.into_iter().collect();
                let theory = relational_theory(&lang, &basis);
                let models: Vec<RelationalStructure> =
                    canonical_models(&lang, &basis, DEFAULT_MAX_STRUCTURES)
                        .map_err(err)?
                        .collect();
                ensure(models.len() == 1 << basis.len(), || {
                    format!("{basis}: {} models", models.len())
                })?;
                for m in &models {
                    ensure(is_model(m, &theory).map_err(err)?, || {
                        format!("{basis}: canonical model is not a model")
                    })?;
                }
                // on small languages, confirm no other relational structure models the theory
                if atoms.len() <= 4 {
                    let all = enumerate_rsa_models(&lang, DEFAULT_MAX_STRUCTURES).map_err(err)?;
                    let mut count = 0;
                    for s in all {
                        count += is_model(&s, &theory).map_err(err)? as usize;
                    }
                    ensure(count == models.len(), || {
                        format!("{basis}: {count} models by enumeration")
                    })?;
                }
                let collapsed: Vec<_> = models.iter().map(nabla).collect();
                for m1 in &collapsed {
                    for m2 in &collapsed {
                        pairs += 1;
                        ensure(models_isomorphic(m1, m2).map_err(err)?, || {
                            format!("{basis}: two models collapse to different structures")
                        })?;
                    }
                }
                instances += 1;
            }
        }
    }
    Ok(format!("{instances} instances, {pairs} model pairs"))
}

/// Random formulas over a relational language, with bound variables drawn
/// from `scope` and quantifier depth at most `quantifiers`.
struct FormulaGen<'a> {
    lang: &'a RelationalLanguage,
    rng: ChaCha8Rng,
}

impl FormulaGen<'_> {
    fn term(&mut self, scope: &[String]) -> Term {
        let consts = self.lang.constants();
        let k = self.rng.gen_range(0..consts.len() + scope.len());
        if k < scope.len() {
            Term::var(&scope[k])
        } else {
            Term::constant(&consts[k - scope.len()])
        }
    }

    fn atomic(&mut self, scope: &[String]) -> Formula {
        let preds: Vec<(String, usize)> = self
            .lang
            .predicates()
            .map(|(p, n)| (p.to_owned(), n))
            .collect();
        if self.rng.gen_bool(0.25) {
            return Formula::eq(self.term(scope), self.term(scope));
        }
        let (p, n) = preds.choose(&mut self.rng).expect("one predicate").clone();
        let args = (0..n).map(|_| self.term(scope)).collect();
        Formula::atom(&p, args)
    }

    fn formula(&mut self, scope: &mut Vec<String>, quantifiers: usize, size: usize) -> Formula {
        if size == 0 {
            return self.atomic(scope);
        }
        let choice = self.rng.gen_range(0..if quantifiers > 0 { 7 } else { 5 });
        let sub = size - 1;
        match choice {
            0 => self.atomic(scope),
            1 => Formula::not(self.formula(scope, quantifiers, sub)),
            2 => Formula::and(
                self.formula(scope, quantifiers, sub),
                self.formula(scope, quantifiers, sub),
            ),
            3 => Formula::or(
                self.formula(scope, quantifiers, sub),
                self.formula(scope, quantifiers, sub),
            ),
            4 => Formula::implies(
                self.formula(scope, quantifiers, sub),
                self.formula(scope, quantifiers, sub),
            ),
            _ => {
                let x = format!("x{}", scope.len() + 1);
                scope.push(x.clone());
                let body = self.formula(scope, quantifiers - 1, sub);
                scope.pop();
                if choice == 5 {
                    Formula::forall(&x, body)
                } else {
                    Formula::exists(&x, body)
                }
            }
        }
    }
}

fn random_instance(rng: &mut ChaCha8Rng, shapes: &[Shape]) -> (RelationalLanguage, FactBase) {
    let (consts, preds) = shapes.choose(rng).expect("non-empty");
    let lang = language(consts, preds);
    let atoms = ground_atoms(&lang);
    let k = rng.gen_range(0..=3.min(atoms.len()));
    let basis = atoms.choose_multiple(rng, k).cloned().collect();
    (lang, basis)
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let shapes: &[Shape] = &[
        (&["a"], &[("P", 1)]),
        (&["a", "b"], &[("P", 1)]),
        (&["a"], &[("P", 2)]),
        (&["a", "b"], &[("P", 2)]),
    ];
    let (mut total, mut entailed) = (0, 0);
    while total < 240 {
        let (lang, basis) = random_instance(&mut rng, shapes);
        let mut gen = FormulaGen {
            lang: &lang,
            rng: ChaCha8Rng::seed_from_u64(rng.gen()),
        };
        let mut a = gen.formula(&mut Vec::new(), 2, 3);
        // lean some formulas towards the facts so both outcomes occur
        if let Some(fact) = basis.iter().next().filter(|_| total % 3 == 0) {
            a = Formula::or(fact.to_formula(), a);
        }
        let fast = theory_entails(&lang, &basis, &a).map_err(err)?;
        let slow =
            theory_entails_generic(&lang, &basis, &a, DEFAULT_MAX_STRUCTURES).map_err(err)?;
        ensure(fast == slow, || {
            format!("{basis} and `{a}`: solver says {fast}, enumeration says {slow}")
        })?;
        total += 1;
        entailed += fast as usize;
    }
    ensure(entailed > 0 && entailed < total, || {
        format!("degenerate corpus: {entailed}/{total} entailed")
    })?;
    Ok(format!("{total} pairs agree ({entailed} entailed)"))
}

fn literal_holds(lit: &SemiAtomicFact, classical: &FactBase) -> bool {
    classical.contains(&lit.fact) == lit.positive
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let shapes: &[Shape] = &[
        (&["a"], &[("P", 1)]),
        (&["a", "b"], &[("P", 1)]),
        (&["a"], &[("P", 2)]),
        (&["a", "b"], &[("P", 1), ("Q", 1)]),
    ];
    let (mut queries, mut answered, mut inconsistent) = (0, 0, 0);
    while queries < 60 {
        let (lang, basis) = random_instance(&mut rng, shapes);
        let mut gen = FormulaGen {
            lang: &lang,
            rng: ChaCha8Rng::seed_from_u64(rng.gen()),
        };
        let constraint = gen.formula(&mut Vec::new(), 1, 2);
        let head: Vec<String> = if gen.rng.gen_bool(0.5) {
            vec!["x".into()]
        } else {
            vec![]
        };
        let body = gen.formula(&mut head.clone(), 1, 2);
        let db = Database::new(lang.clone(), basis.clone(), vec![constraint]).map_err(err)?;
        let q = Query::new("q", head, body).map_err(err)?;

        let shortcut = consistent_answers(&db, &q).map_err(err)?;
        let plain = answers(&db, &q).map_err(err)?;
        ensure(shortcut.iter().all(|t| plain.contains(t)), || {
            format!(
                "{basis} / {}: consistent {shortcut:?} not within plain {plain:?}",
                q.body()
            )
        })?;

        // brute force: a set of derivable literals qualifies when some
        // classical fact base satisfying the constraints agrees with it
        let pool = derivable_semi_atomic_facts(&lang, &basis);
        let atoms = ground_atoms(&lang);
        let mut satisfying = Vec::new();
        for mask in 0u32..1 << atoms.len() {
            let classical: FactBase = atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, f)| f.clone())
                .collect();
            if consistent_with(&lang, &classical, db.constraints()).map_err(err)? {
                satisfying.push(classical);
            }
        }
        let qualifying: Vec<Vec<SemiAtomicFact>> = (0u32..1 << pool.len())
            .map(|mask| {
                pool.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, l)| l.clone())
                    .collect()
            })
            .filter(|phi: &Vec<SemiAtomicFact>| {
                satisfying
                    .iter()
                    .any(|c| phi.iter().all(|l| literal_holds(l, c)))
            })
            .collect();
        let mut oracle = Vec::new();
        for tuple in candidate_tuples(&lang, q.arity()) {
            let instance = q.instance(&tuple);
            for phi in &qualifying {
                let mut gamma = rsa(&lang);
                gamma.extend(phi.iter().map(SemiAtomicFact::to_formula));
                if entails_rsa_enumerative(&lang, &gamma, &instance, DEFAULT_MAX_STRUCTURES)
                    .map_err(err)?
                {
                    oracle.push(tuple);
                    break;
                }
            }
        }
        ensure(oracle == shortcut, || {
            format!(
                "{basis} / {} / {}: oracle {oracle:?}, shortcut {shortcut:?}",
                db.constraints()[0],
                q.body()
            )
        })?;
        queries += 1;
        answered += !shortcut.is_empty() as usize;
        inconsistent += !db.is_consistent().map_err(err)? as usize;
    }
    ensure(answered > 0 && inconsistent > 0, || {
        format!("degenerate corpus: {answered} answered, {inconsistent} inconsistent")
    })?;
    Ok(format!(
        "{queries} queries agree ({answered} with answers, {inconsistent} inconsistent databases)"
    ))
}

fn proof_files(dir: &str) -> Result<Vec<(String, String)>, String> {
    let mut paths: Vec<PathBuf> = fs::read_dir(data("proofs").join(dir))
        .map_err(err)?
        .map(|e| e.map(|e| e.path()).map_err(err))
        .collect::<Result<_, _>>()?;
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            Ok((
                format!("{dir}/{}", p.file_name().unwrap().to_string_lossy()),
                fs::read_to_string(&p).map_err(err)?,
            ))
        })
        .collect()
}

fn criterion_9() -> Verdict {
    let mut used = BTreeSet::new();
    let mut valid = 0;
    let mut rejected = 0;
    for dir in ["bd", "pbd", "focl", "lp", "k3"] {
        let system: RuleSystem = dir.parse()?;
        for (name, text) in proof_files(dir)? {
            let file = parse_proof_file(&text).map_err(|e| format!("{name}: {e}"))?;
            let d = &file.derivation;
            check_derivation(system, d, &[]).map_err(|e| format!("{name}: {e}"))?;
            valid += 1;
            for step in &d.steps {
                if let Justification::Rule { instance, .. } = &step.justification {
                    if system == RuleSystem::Focl
                        || !matches!(instance.rule, RuleName::NotL | RuleName::NotR)
                    {
                        used.insert(instance.rule);
                    }
                }
            }
            // soundness on the full propositional family
            if system == RuleSystem::Bd
                && file.signature.predicates().is_empty()
                && file.signature.constants().is_empty()
            {
                let family = propositional_structures(&file.signature).map_err(err)?;
                for step in &d.steps {
                    let gamma: Vec<Formula> = step.sequent.left.iter().cloned().collect();
                    let delta: Vec<Formula> = step.sequent.right.iter().cloned().collect();
                    ensure(entails_over(&family, &gamma, &delta).map_err(err)?, || {
                        format!("{name}: `{}` is not valid", step.sequent)
                    })?;
                }
            }
            // corruption: point each premise at a different earlier step
            for (i, step) in d.steps.iter().enumerate() {
                let Justification::Rule { instance, premises } = &step.justification else {
                    continue;
                };
                for (slot, &p) in premises.iter().enumerate() {
                    let Some(other) =
                        (1..=i).find(|&o| d.steps[o - 1].sequent != d.steps[p - 1].sequent)
                    else {
                        continue;
                    };
                    let mut corrupted = d.clone();
                    let mut moved = premises.clone();
                    moved[slot] = other;
                    corrupted.steps[i].justification = Justification::Rule {
                        instance: instance.clone(),
                        premises: moved,
                    };
                    match check_derivation(system, &corrupted, &[]) {
                        Err(ProofError::InvalidStep { step, .. }) if step == i + 1 => rejected += 1,
                        outcome => {
                            return Err(format!(
                                "{name}: premise {p}->{other} at step {}: {outcome:?}",
                                i + 1
                            ))
                        }
                    }
                }
            }
        }
    }
    let missing: Vec<_> = RuleName::all().filter(|r| !used.contains(r)).collect();
    ensure(missing.is_empty(), || {
        format!("rules never exercised: {missing:?}")
    })?;
    ensure(valid >= 15, || format!("only {valid} valid derivations"))?;
    for (name, text) in proof_files("invalid")? {
        let header = text.lines().next().unwrap_or_default();
        let step: usize = header
            .strip_prefix("# fails at step ")
            .and_then(|s| s.split_whitespace().next())
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("{name}: missing failing-step header"))?;
        let system = if header.contains("pbd") {
            RuleSystem::Pbd
        } else {
            RuleSystem::Bd
        };
        let d = parse_proof_file(&text)
            .map_err(|e| format!("{name}: {e}"))?
            .derivation;
        let outcome = check_derivation(system, &d, &[]);
        ensure(
            outcome.as_ref().err().and_then(ProofError::step) == Some(step),
            || format!("{name}: expected rejection at step {step}, got {outcome:?}"),
        )?;
        rejected += 1;
    }
    Ok(format!("{valid} derivations accepted covering all {} rules, {rejected} corruptions rejected at the right step", RuleName::all().count()))
}

fn criterion_10() -> Verdict {
    let parsed =
        parse_database_file(&fs::read_to_string(data("functional_dependency.db")).map_err(err)?)
            .map_err(err)?;
    let db = &parsed.database;
    let lang = db.language();
    let fact = |text: &str| -> Fact {
        let (p, rest) = text.split_once('(').unwrap();
        let args: Vec<&str> = rest.trim_end_matches(')').split(',').collect();
        Fact::new(p, &args)
    };
    let keep = fact("P(b,c,d)");
    let expected: Vec<FactBase> = ["P(a,b,nil)", "P(a,nil,c)", "P(a,nil,d)"]
        .iter()
        .map(|f| [keep.clone(), fact(f)].into_iter().collect())
        .collect();

    // subset scan: a base is a minimal repair when it satisfies the
    // constraints and no base strictly closer to the original does
    let minimal = |candidate: &FactBase| -> Result<bool, String> {
        if !consistent_with(lang, candidate, db.constraints()).map_err(err)? {
            return Ok(false);
        }
        let diff: Vec<Fact> = db
            .basis()
            .symmetric_difference(candidate)
            .into_iter()
            .collect();
        for mask in 0u32..(1 << diff.len()) - 1 {
            let closer = db.basis().toggled(
                diff.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, f)| f),
            );
            if consistent_with(lang, &closer, db.constraints()).map_err(err)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let found = repairs(db).map_err(err)?;
    for r in found.iter() {
        ensure(minimal(r)?, || {
            format!("reported repair {r} is not minimal")
        })?;
    }
    let mut problems = Vec::new();
    for e in &expected {
        if !found.iter().any(|r| r == e) {
            let why = if consistent_with(lang, e, db.constraints()).map_err(err)? {
                "consistent but not minimal"
            } else {
                "violates the constraint"
            };
            problems.push(format!("{e} missing ({why})"));
        }
    }
    let found_list: Vec<String> = found.iter().map(|r| r.to_string()).collect();
    ensure(problems.is_empty() && found.len() == expected.len(), || {
        format!(
            "repairs are [{}]; {}",
            found_list.join(", "),
            problems.join("; ")
        )
    })?;
    Ok(format!("repairs are [{}]", found_list.join(", ")))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Verdict);
    let criteria: [Criterion; 10] = [
        (
            "functional dependency example with plain equality",
            criterion_1,
        ),
        (
            "functional dependency example with strong equality",
            criterion_2,
        ),
        ("connective and Des/Cons/Det truth tables", criterion_3),
        (
            "paraconsistency and paracompleteness witnesses",
            criterion_4,
        ),
        (
            "bottom-equality laws on small bottom structures",
            criterion_5,
        ),
        (
            "models of a relational theory collapse isomorphically",
            criterion_6,
        ),
        (
            "solver entailment agrees with structure enumeration",
            criterion_7,
        ),
        (
            "consistent answers agree with the subset oracle",
            criterion_8,
        ),
        (
            "proof checker corpus, corruptions and soundness",
            criterion_9,
        ),
        ("repairs of the functional dependency example", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = panic::catch_unwind(run).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
