use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use lrm_core::scheme12::{build_graph, construct_2n_code, longest_cycle, validate_gray};
use lrm_core::scheme13::count_by_scan;
use lrm_core::{demodulate, realize, ChargeConfig, LrmParams, SearchBudget};

fn bench_longest_cycle(c: &mut Criterion) {
    let graph = build_graph(6, 2).unwrap();
    c.bench_function("longest_cycle_n6_w2", |b| {
        b.iter(|| {
            longest_cycle(black_box(&graph), SearchBudget::default())
                .unwrap()
                .length
        })
    });
}

fn bench_count_scan(c: &mut Criterion) {
    c.bench_function("count_by_scan_n8", |b| {
        b.iter(|| {
            count_by_scan(black_box(8), SearchBudget::default(), 1)
                .unwrap()
                .legal
        })
    });
}

fn bench_roundtrip(c: &mut Criterion) {
    let n = 32;
    let params = LrmParams::new(1, 3, n).unwrap();
    let config = ChargeConfig::new(&params, (0..n as i64).collect()).unwrap();
    let word = demodulate(&params, &config).unwrap();
    c.bench_function("realize_demodulate_n32_t3", |b| {
        b.iter(|| {
            let config = realize(black_box(&params), black_box(&word)).unwrap();
            demodulate(&params, &config).unwrap()
        })
    });
}

fn bench_construct(c: &mut Criterion) {
    c.bench_function("construct_validate_n64", |b| {
        b.iter(|| {
            let code = construct_2n_code(black_box(64)).unwrap();
            validate_gray(&code, Some(2)).pass()
        })
    });
}

criterion_group!(
    benches,
    bench_longest_cycle,
    bench_count_scan,
    bench_roundtrip,
    bench_construct
);
criterion_main!(benches);
