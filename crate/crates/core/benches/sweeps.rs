use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cominuscule::catalog::SpaceFamily;
use cominuscule::partitions::{agreement_sweep, FormulaFamily};
use cominuscule::twists::{nonvanishing_scan, table_audit};
use cominuscule::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn agreement(c: &mut Criterion) {
    let mut g = c.benchmark_group("agreement_sweep_A_n12");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| agreement_sweep(FormulaFamily::A, 12, exec).unwrap())
        });
    }
    g.finish();
}

fn nonvanishing(c: &mut Criterion) {
    let mut g = c.benchmark_group("nonvanishing_scan_rank5");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| nonvanishing_scan(5, exec).unwrap())
        });
    }
    g.finish();
}

fn e7_audit(c: &mut Criterion) {
    let mut g = c.benchmark_group("table_audit_E7");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| table_audit(SpaceFamily::Freudenthal, None, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, agreement, nonvanishing, e7_audit);
criterion_main!(benches);
