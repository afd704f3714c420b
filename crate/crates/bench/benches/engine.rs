use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use singeq_bench::{gf, low_rank};
use singeq_core::catalog::{dual_numbers, local_xy, remark14};
use singeq_core::homology::{bar_complex, hochschild, minimal_resolution, HHMethod};
use singeq_core::Module;

fn elimination(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    for n in [64, 128, 256] {
        let m = low_rank(gf(5), n, n / 2, 1);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| m.rank())
        });
    }
    g.finish();
    let m = low_rank(gf(5), 128, 64, 2);
    c.bench_function("kernel_basis/128", |b| b.iter(|| m.kernel_basis()));
}

fn bar_hochschild(c: &mut Criterion) {
    let mut g = c.benchmark_group("bar");
    g.sample_size(10);
    let k = dual_numbers(gf(5));
    g.bench_function("dual_numbers/6", |b| {
        b.iter(|| bar_complex(&k, 6).unwrap().homology_dims())
    });
    let a = remark14(gf(5));
    g.bench_function("remark14/3", |b| {
        b.iter(|| bar_complex(&a, 3).unwrap().homology_dims())
    });
    g.finish();
    let mut g = c.benchmark_group("minimal");
    g.sample_size(10);
    g.bench_function("remark14/6", |b| {
        b.iter(|| hochschild(&a, 6, HHMethod::Minimal).unwrap())
    });
    g.finish();
}

fn resolution(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolution");
    g.sample_size(10);
    let a = local_xy(gf(5));
    let s = Module::simple(&a, 0);
    g.bench_function("local_simple/5", |b| b.iter(|| minimal_resolution(&s, 5)));
    let r = remark14(gf(5));
    let s2 = Module::simple(&r, 1);
    g.bench_function("remark14_simple/20", |b| {
        b.iter(|| minimal_resolution(&s2, 20))
    });
    g.finish();
}

criterion_group!(benches, elimination, bar_hochschild, resolution);
criterion_main!(benches);
