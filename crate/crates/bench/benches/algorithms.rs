use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ctrldep::{
    dod_formula, dod_new, ntscd_from_vp, ntscd_new, ntscd_ranganath_fixed, random_cfg,
    strong_closure, vp_sets, worst_case_dod_cfg, ClosureSpec, FormulaVariant, NodeId,
};

fn ntscd(c: &mut Criterion) {
    let mut group = c.benchmark_group("ntscd");
    for edges in [250, 500, 750, 1000] {
        let g = random_cfg(500, edges, 0).unwrap();
        group.bench_with_input(BenchmarkId::new("new", edges), &g, |b, g| {
            b.iter(|| ntscd_new(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("vp", edges), &g, |b, g| {
            b.iter(|| ntscd_from_vp(g, &vp_sets(black_box(g))))
        });
        group.bench_with_input(BenchmarkId::new("worklist-fixed", edges), &g, |b, g| {
            b.iter(|| ntscd_ranganath_fixed(black_box(g)))
        });
    }
    group.finish();
}

fn dod(c: &mut Criterion) {
    let mut group = c.benchmark_group("dod");
    group.sample_size(20);
    for edges in [50, 500, 1000] {
        let g = random_cfg(500, edges, 0).unwrap();
        group.bench_with_input(BenchmarkId::new("new", edges), &g, |b, g| {
            b.iter(|| dod_new(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("formula-fixed", edges), &g, |b, g| {
            b.iter(|| dod_formula(black_box(g), FormulaVariant::Fixed))
        });
    }
    for nodes in [32, 64, 128] {
        let g = worst_case_dod_cfg(nodes).unwrap();
        group.bench_with_input(BenchmarkId::new("new-worst-case", nodes), &g, |b, g| {
            b.iter(|| dod_new(black_box(g)))
        });
    }
    group.finish();
}

fn closure(c: &mut Criterion) {
    let g = random_cfg(500, 750, 3).unwrap();
    let start = NodeId::new(0);
    let spec = ClosureSpec {
        criterion: g.set_of([start]),
        start,
        allow_unreachable: true,
    };
    c.bench_function("strong-closure/500", |b| {
        b.iter(|| strong_closure(black_box(&g), &spec))
    });
}

criterion_group!(benches, ntscd, dod, closure);
criterion_main!(benches);
