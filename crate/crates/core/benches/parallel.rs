use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use periodica::builtin::builtin;
use periodica::counting::{classify_small_alpha, table_small_values, Catalog};
use periodica::oracle::{brute_psi, burnside_orbit_count, DEFAULT_BUDGET};
use periodica::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn brute(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_psi");
    for name in ["D4", "Z3xZ3", "Z12"] {
        let g = builtin(name).unwrap();
        let h = g.trivial_subgroup();
        let q = if g.order() > 9 { 3 } else { 5 };
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &exec, |b, &exec| {
                b.iter(|| brute_psi(&g, &h, black_box(q), DEFAULT_BUDGET, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn burnside(c: &mut Criterion) {
    let mut group = c.benchmark_group("burnside");
    let g = builtin("S4").unwrap();
    for (mode, exec) in MODES {
        group.bench_function(mode, |b| b.iter(|| burnside_orbit_count(&g, black_box(5), exec)));
    }
    group.finish();
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scans");
    let catalog = Catalog::small();
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new("table", mode), |b| {
            b.iter(|| table_small_values(black_box(12), exec).unwrap())
        });
        group.bench_function(BenchmarkId::new("classify", mode), |b| {
            b.iter(|| classify_small_alpha(black_box(10), &catalog, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, brute, burnside, scans);
criterion_main!(benches);
