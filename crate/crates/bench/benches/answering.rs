use belnap_bench::{chain, key_conflicts};
use belnap_core::database::{theory_entails, theory_entails_canonical, DEFAULT_MAX_STRUCTURES};
use belnap_core::query::{answers, consistent_answers, repairs, strongly_consistent_answers};
use belnap_core::syntax::parse_formula;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn answer_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("answer_modes");
    group.sample_size(10);
    for keys in [1, 2, 3] {
        let w = key_conflicts(keys, 2);
        let q = w.query("has_value").unwrap();
        group.bench_with_input(BenchmarkId::new("plain", keys), &w, |b, w| {
            b.iter(|| answers(&w.database, q).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("consistent", keys), &w, |b, w| {
            b.iter(|| consistent_answers(&w.database, q).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("strong", keys), &w, |b, w| {
            b.iter(|| strongly_consistent_answers(&w.database, q).unwrap())
        });
    }
    group.finish();
}

fn repair_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("repairs");
    group.sample_size(10);
    for values in [2, 3, 4] {
        let w = key_conflicts(2, values);
        group.bench_with_input(BenchmarkId::from_parameter(values), &w, |b, w| {
            b.iter(|| repairs(&w.database).unwrap())
        });
    }
    group.finish();
}

/// The solver-based entailment check against evaluation in every canonical
/// model, on chains whose fact count doubles the canonical model count.
fn entailment(c: &mut Criterion) {
    let mut group = c.benchmark_group("entailment");
    group.sample_size(10);
    for length in [2, 4, 6] {
        let w = chain(length);
        let lang = w.database.language();
        let a = parse_formula("exists x,y,z. E(x,y) & E(y,z)", lang.signature()).unwrap();
        group.bench_with_input(BenchmarkId::new("sat", length), &w, |b, w| {
            b.iter(|| theory_entails(lang, w.database.basis(), &a).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("canonical", length), &w, |b, w| {
            b.iter(|| {
                theory_entails_canonical(lang, w.database.basis(), &a, DEFAULT_MAX_STRUCTURES)
                    .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, answer_modes, repair_enumeration, entailment);
criterion_main!(benches);
