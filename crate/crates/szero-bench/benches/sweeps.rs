//! Benchmarks for the hot paths: engine sweeps, Ext tables, relation
//! matrices and word evaluation.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use szero_core::algebra::{SimplifyOptions, WeightVector};
use szero_core::bott::ext_v;
use szero_core::ktheory::{check_relation, eval_f_diagram, RelId};
use szero_core::partitions::{enumerate_p, DiagramBox};
use szero_core::sod::{verify_collection, CollectionSpec};

fn bench_engine_sweeps(c: &mut Criterion) {
    let opts = SimplifyOptions::default();
    c.bench_function("verify_f_side_gr_3_6", |b| {
        let spec = CollectionSpec::f_side(WeightVector::new([3, 3]));
        b.iter(|| black_box(verify_collection(&spec, &opts, false)))
    });
    c.bench_function("verify_flag_1_1_2", |b| {
        let spec = CollectionSpec::f_side(WeightVector::new([1, 1, 2]));
        b.iter(|| black_box(verify_collection(&spec, &opts, false)))
    });
    c.bench_function("verify_e_side_gr_2_5", |b| {
        let spec = CollectionSpec::e_side(WeightVector::new([2, 3])).unwrap();
        b.iter(|| black_box(verify_collection(&spec, &opts, false)))
    });
}

fn bench_oracle(c: &mut Criterion) {
    c.bench_function("ext_table_gr_2_4", |b| {
        let bx = enumerate_p(DiagramBox::new(2, 2));
        b.iter(|| {
            for x in &bx {
                for y in &bx {
                    black_box(ext_v(x, y, 2, 4).unwrap());
                }
            }
        })
    });
    c.bench_function("relations_u09_n4", |b| {
        b.iter(|| black_box(check_relation(RelId::U09Boundary, 4)))
    });
    c.bench_function("eval_f_word_3_3_1", |b| {
        let lam = szero_core::partitions::YoungDiagram::new([3, 3, 1]).unwrap();
        b.iter(|| black_box(eval_f_diagram(&lam, 3, 6)))
    });
}

criterion_group!(benches, bench_engine_sweeps, bench_oracle);
criterion_main!(benches);
