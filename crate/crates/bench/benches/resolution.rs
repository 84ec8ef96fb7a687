use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use pkoszul::ext::{classify, ext_generation_degrees};
use pkoszul::{algebra_from_presentation, resolve_trivial};
use pkoszul_bench::{algebra, cases};

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner");
    for (name, pres, _, d) in cases() {
        g.bench_function(name, |b| b.iter(|| algebra_from_presentation(black_box(&pres), d).unwrap()));
    }
    g.finish();
}

fn resolve(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolve");
    for (name, pres, n, d) in cases() {
        let alg = algebra(&pres, d);
        g.bench_function(name, |b| b.iter(|| resolve_trivial(black_box(&alg), n, d).unwrap()));
    }
    g.finish();
}

fn classify_and_generation(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    for (name, pres, n, d) in cases() {
        let alg = algebra(&pres, d);
        let r = resolve_trivial(&alg, n, d).unwrap();
        g.bench_function(format!("{name}/betti"), |b| b.iter(|| classify(black_box(&r.betti_table()))));
        let top = r.certified_to().unwrap_or(0).min(5);
        g.bench_function(format!("{name}/generation"), |b| b.iter(|| ext_generation_degrees(black_box(&r), top).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, groebner, resolve, classify_and_generation);
criterion_main!(benches);
