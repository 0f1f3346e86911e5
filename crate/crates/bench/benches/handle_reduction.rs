use std::hint::black_box;

use braid_bench::{trivial_words, uniform_words};
use braid_core::{handle_reduce, DEFAULT_STEP_BUDGET};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

fn reduce_uniform(c: &mut Criterion) {
    let mut group = c.benchmark_group("handle_reduce/uniform");
    for (n, len) in [(3, 50), (6, 100), (6, 200)] {
        let words = uniform_words(n, len, 100, 1);
        group.throughput(Throughput::Elements(words.len() as u64));
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("n{n}_len{len}")),
            &words,
            |b, ws| {
                b.iter(|| {
                    for w in ws {
                        black_box(handle_reduce(w, DEFAULT_STEP_BUDGET).unwrap());
                    }
                })
            },
        );
    }
    group.finish();
}

fn reduce_trivial(c: &mut Criterion) {
    let words = trivial_words(5, 40, 50, 2);
    c.bench_function("handle_reduce/trivial_n5_len80", |b| {
        b.iter(|| {
            for w in &words {
                black_box(handle_reduce(w, DEFAULT_STEP_BUDGET).unwrap());
            }
        })
    });
}

criterion_group!(benches, reduce_uniform, reduce_trivial);
criterion_main!(benches);
