use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use curvlab::audit::{invariant_suite, AuditConfig, SuiteOptions};
use curvlab::homology::tor_lengths;
use curvlab::{resolve, ModuleRep, QuotientAlgebra};

fn r3() -> Arc<QuotientAlgebra> {
    Arc::new(QuotientAlgebra::build(101, &["a", "b", "c"], &["a^2", "b*c", "c^2", "b^2 - a*c"]).unwrap())
}

fn groebner(c: &mut Criterion) {
    c.bench_function("build R3", |b| {
        b.iter(|| QuotientAlgebra::build(101, &["a", "b", "c"], black_box(&["a^2", "b*c", "c^2", "b^2 - a*c"])).unwrap())
    });
}

fn resolution(c: &mut Criterion) {
    let a = r3();
    let k = ModuleRep::residue_field(a.clone()).unwrap();
    let mut g = c.benchmark_group("resolve k over R3");
    g.sample_size(10);
    for depth in [8, 10, 12] {
        g.bench_function(format!("depth {depth}"), |b| b.iter(|| resolve(black_box(&k), depth).unwrap()));
    }
    g.finish();
    let ungraded = k.ungraded();
    c.bench_function("resolve k over R3 ungraded depth 8", |b| {
        b.iter(|| resolve(black_box(&ungraded), 8).unwrap())
    });
}

fn homology(c: &mut Criterion) {
    let a = r3();
    let m = ModuleRep::cyclic_from_strs(a.clone(), &["b", "c"]).unwrap();
    let k = ModuleRep::residue_field(a).unwrap();
    c.bench_function("Tor(A/(b,c), k) depth 8", |b| b.iter(|| tor_lengths(black_box(&m), &k, 8).unwrap()));
}

fn suite(c: &mut Criterion) {
    let a = r3();
    let mut g = c.benchmark_group("invariant suite");
    g.sample_size(10);
    g.bench_function("R3, 10 cases", |b| {
        b.iter(|| invariant_suite(&a, SuiteOptions { count: 10, graded: false }, &AuditConfig::default()).unwrap())
    });
    g.finish();
}

criterion_group!(benches, groebner, resolution, homology, suite);
criterion_main!(benches);
