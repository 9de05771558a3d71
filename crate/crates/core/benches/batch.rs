//! Sequential against rayon-parallel batch execution.
//!
//! `cargo bench` compares both modes; built with `--no-default-features`
//! the parallel mode runs sequentially and the two lines should coincide.

use adelic::batch::{self, Execution};
use adelic::domains::{FunctionField, QuadraticField, Rationals};
use adelic::sample::{self, Sample};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn valuation_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("valuation_table");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let q = Rationals;
    let qp = q.places_below(200);
    let qx: Vec<_> = (0..2000).map(|_| q.random_elem(&mut rng, 40)).collect();
    let k = QuadraticField::new(-5).unwrap();
    let kp = k.places_below(60);
    let kx: Vec<_> = (0..1000).map(|_| k.random_elem(&mut rng, 20)).collect();
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new("Q", name), &mode, |b, &m| {
            b.iter(|| batch::valuation_table(m, &q, &qp, &qx).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("Q(sqrt -5)", name), &mode, |b, &m| {
            b.iter(|| batch::valuation_table(m, &k, &kp, &kx).unwrap())
        });
    }
    g.finish();
}

fn idele_images(c: &mut Criterion) {
    let mut g = c.benchmark_group("ideals_of_ideles");
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let k = QuadraticField::new(-23).unwrap();
    let places = k.places_below(40);
    let xs: Vec<_> = (0..500).map(|_| sample::random_finite_idele(&k, &places, &mut rng, 12, true)).collect();
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new("Q(sqrt -23)", name), &mode, |b, &m| b.iter(|| batch::ideals_of_ideles(m, &xs)));
    }
    g.finish();
}

fn product_formula(c: &mut Criterion) {
    let mut g = c.benchmark_group("product_formula_sums");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = FunctionField::with_order(9).unwrap();
    let xs: Vec<_> = (0..300).map(|_| f.random_nonzero_elem(&mut rng, 12)).collect();
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new("F_9(t)", name), &mode, |b, &m| b.iter(|| batch::product_formula_sums(m, &f, &xs)));
    }
    g.finish();
}

criterion_group!(benches, valuation_tables, idele_images, product_formula);
criterion_main!(benches);
