//! Timings for the hot paths: full axiom checks, braid operators and the
//! double-dual construction, all on exact rational arithmetic.

use criterion::{criterion_group, criterion_main, Criterion};

use hopfbrace::bicrossed::drinfeld_double_dual;
use hopfbrace::brace::{braid_operator, check_brace, check_braid_equation, cop_brace};
use hopfbrace::hopf::check_hopf;
use hopfbrace::{zoo, FieldSpec};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn bench_check_hopf(c: &mut Criterion) {
    let h = zoo::hopf("dual-s3", q()).unwrap();
    c.bench_function("check_hopf dual-s3", |b| {
        b.iter(|| assert!(check_hopf(std::hint::black_box(&h)).passed()))
    });
}

fn bench_check_brace(c: &mut Criterion) {
    let h = zoo::hopf("dual-s3", q()).unwrap();
    let brace = cop_brace(&h).unwrap();
    c.bench_function("check_brace dual-s3-cop", |b| {
        b.iter(|| assert!(check_brace(std::hint::black_box(&brace)).passed()))
    });
}

fn bench_braid(c: &mut Criterion) {
    let h = zoo::hopf("dual-s3", q()).unwrap();
    let brace = cop_brace(&h).unwrap();
    c.bench_function("braid_operator dual-s3-cop", |b| {
        b.iter(|| braid_operator(std::hint::black_box(&brace)).unwrap())
    });
    let op = braid_operator(&brace).unwrap();
    c.bench_function("check_braid_equation dual-s3-cop", |b| {
        b.iter(|| assert!(check_braid_equation(std::hint::black_box(&op)).passed()))
    });
}

fn bench_double_dual(c: &mut Criterion) {
    let z3 = zoo::hopf("z3", q()).unwrap();
    let mut group = c.benchmark_group("construct");
    group.sample_size(10);
    group.bench_function("drinfeld_double_dual z3", |b| {
        b.iter(|| drinfeld_double_dual(std::hint::black_box(&z3)).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_check_hopf,
    bench_check_brace,
    bench_braid,
    bench_double_dual
);
criterion_main!(benches);
