use axb_bench::{matrix, words};
use axb_core::ktheory::{
    iterate_bn, shift_embedding_check, smith_normal_form, IndAbGroup, PrimeSchedule,
};
use axb_core::oracle::word_agrees_with_oracle;
use axb_core::suites::kms_suite;
use axb_core::{Algebra, Mode};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;

fn normal_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for len in [4, 12, 48] {
        let ws = words(256, len, Mode::Z, 1);
        let alg = Algebra::new(Mode::Z);
        group.bench_with_input(BenchmarkId::from_parameter(len), &ws, |b, ws| {
            b.iter(|| {
                ws.iter()
                    .map(|w| alg.normal_form(w).unwrap().term_count())
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let ws = words(64, 12, Mode::Z, 2);
    let alg = Algebra::new(Mode::Z);
    let nfs: Vec<_> = ws.iter().map(|w| alg.word_monomial(w).unwrap()).collect();
    c.bench_function("oracle/64 words on [-1000, 1000]", |b| {
        b.iter(|| {
            ws.iter()
                .zip(&nfs)
                .all(|(w, nf)| word_agrees_with_oracle(w, nf.as_ref(), 1000).is_ok())
        })
    });
}

fn kms(c: &mut Criterion) {
    c.bench_function("kms/n, m, |u| <= 8", |b| {
        b.iter(|| kms_suite(8, 8, 500, black_box(3)))
    });
}

fn smith(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    for n in [4, 8, 16] {
        let m = matrix(n, 50, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| smith_normal_form(m).rank)
        });
    }
    group.finish();
}

fn colimits(c: &mut Criterion) {
    c.bench_function("colimit/bunce-deddens divisibility by 2..=100", |b| {
        b.iter(|| {
            let g = IndAbGroup::bunce_deddens(PrimeSchedule::RoundRobin, 326).unwrap();
            let one = vec![BigInt::from(1)];
            let orbit = g.orbit(0, &one, 325).unwrap();
            (2..=100u32)
                .filter(|&d| {
                    g.divisibility_in_orbit(0, &orbit, &BigInt::from(d))
                        .is_some()
                })
                .count()
        })
    });
    c.bench_function("pv/iterate_bn n = 8", |b| {
        b.iter(|| iterate_bn(8, Mode::Z, 8).unwrap().len())
    });
    c.bench_function("shift/k = 64", |b| {
        b.iter(|| shift_embedding_check(black_box(64)).passed())
    });
}

criterion_group!(benches, normal_form, oracle, kms, smith, colimits);
criterion_main!(benches);
