use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ptwreath::{
    bundled_rp, bundled_rt, closure, congruence_from_pairs, extra_relation, free_quotient_size,
    kernel_generating_pair, parse_relation_file, phi, wreath_presentation, BlockMap,
    RelationLabel, DEFAULT_LIMIT,
};
use ptwreath_bench::five_set;

fn bench_multiply(c: &mut Criterion) {
    let elements = closure(&five_set(2, 3)).unwrap().elements().to_vec();
    let step = elements.len() / 512;
    let pairs: Vec<_> = elements
        .iter()
        .step_by(step)
        .zip(elements.iter().rev().step_by(step))
        .take(512)
        .collect();
    c.bench_function("multiply wreath(2,3) x512", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(x.multiply(y).unwrap());
            }
        })
    });
}

fn bench_closure(c: &mut Criterion) {
    let five = five_set(2, 2);
    c.bench_function("closure wreath(2,2) 324", |b| {
        b.iter(|| black_box(closure(&five).unwrap().size()))
    });
    let blocks: Vec<BlockMap> = five_set(2, 3).iter().map(phi).collect();
    c.bench_function("closure blocks(2,3) 15625", |b| {
        b.iter(|| black_box(closure(&blocks).unwrap().size()))
    });
}

fn bench_congruence(c: &mut Criterion) {
    let em = closure(&five_set(2, 2)).unwrap();
    let (x, y) = kernel_generating_pair(2, 2).unwrap();
    let pair = (em.index_of(&x).unwrap(), em.index_of(&y).unwrap());
    c.bench_function("pair congruence wreath(2,2)", |b| {
        b.iter(|| black_box(congruence_from_pairs(&em, &[pair]).unwrap().class_count()))
    });
}

fn bench_coset_enumeration(c: &mut Criterion) {
    let rp = parse_relation_file(bundled_rp(2).unwrap(), RelationLabel::RP).unwrap();
    let rt = parse_relation_file(bundled_rt(2).unwrap(), RelationLabel::RT).unwrap();
    let full = wreath_presentation(&rp, &rt, 2).unwrap();
    let collapsed = full.clone().with(extra_relation(2)).unwrap();
    c.bench_function("coset enumeration wreath(2,2) 324", |b| {
        b.iter(|| black_box(free_quotient_size(&full, DEFAULT_LIMIT).unwrap()))
    });
    c.bench_function("coset enumeration blocks(2,2) 289", |b| {
        b.iter(|| black_box(free_quotient_size(&collapsed, DEFAULT_LIMIT).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_multiply,
    bench_closure,
    bench_congruence,
    bench_coset_enumeration
);
criterion_main!(benches);
