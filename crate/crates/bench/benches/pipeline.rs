use criterion::{criterion_group, criterion_main, Criterion};
use polartree::analysis::{analyze, analyze_pair, Options};
use polartree::corpus::{QUARTIC_PAIR, FOUR_QUARTICS, MEROMORPHIC};
use polartree::oracle::{verify_curve, verify_pair};

fn bench_analyze(c: &mut Criterion) {
    let opts = Options::default();
    let mut g = c.benchmark_group("analyze");
    for (name, f) in [("cusp", "y^2-x^3"), ("quartic-pair", QUARTIC_PAIR), ("four-quartics", FOUR_QUARTICS), ("meromorphic", MEROMORPHIC)] {
        g.bench_function(name, |b| b.iter(|| analyze(f, &opts).unwrap()));
    }
    g.finish();
}

fn bench_verify(c: &mut Criterion) {
    let opts = Options::default();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for (name, f) in [("cusp", "y^2-x^3"), ("quartic-pair", QUARTIC_PAIR), ("meromorphic", MEROMORPHIC)] {
        g.bench_function(name, |b| {
            b.iter(|| {
                let mut an = analyze(f, &opts).unwrap();
                verify_curve(&mut an, false).unwrap()
            })
        });
    }
    g.bench_function("jacobian-quartic-y", |b| {
        b.iter(|| {
            let mut pa = analyze_pair("(y^2-x^3)^2-x^5*y", "y", &opts).unwrap();
            verify_pair(&mut pa, false).unwrap()
        })
    });
    g.finish();
}

criterion_group!(benches, bench_analyze, bench_verify);
criterion_main!(benches);
