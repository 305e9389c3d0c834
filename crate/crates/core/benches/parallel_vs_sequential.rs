use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fox_coloring::coloring::{
    brute_force_colorings, brute_force_count, enumerate_colorings_with, EnumerationOptions,
};
use fox_coloring::diagram::{build_diagram, catalog};
use fox_coloring::orbits::{build_group, orbit_partition_with, GroupKind};
use fox_coloring::Execution;
use std::hint::black_box;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn brute_force(c: &mut Criterion) {
    let d = build_diagram(catalog("6_1").unwrap());
    let mut g = c.benchmark_group("brute_force_6_1_mod_9");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("list", name), |b| {
            b.iter(|| brute_force_colorings(black_box(&d), 9, exec).unwrap())
        });
        g.bench_function(BenchmarkId::new("count", name), |b| {
            b.iter(|| brute_force_count(black_box(&d), 12, exec).unwrap())
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let d = build_diagram(catalog("9_40").unwrap());
    let mut g = c.benchmark_group("enumerate_9_40_mod_45");
    for (name, exec) in MODES {
        let opts = EnumerationOptions {
            exec,
            ..Default::default()
        };
        g.bench_function(name, |b| {
            b.iter(|| enumerate_colorings_with(black_box(&d), 45, &opts).unwrap())
        });
    }
    g.finish();
}

fn orbits(c: &mut Criterion) {
    let d = build_diagram(catalog("9_40").unwrap());
    let opts = EnumerationOptions {
        nontrivial_only: true,
        ..Default::default()
    };
    let colorings = enumerate_colorings_with(&d, 45, &opts).unwrap();
    let group = build_group(GroupKind::Aut, 45).unwrap();
    let mut g = c.benchmark_group("aut_orbits_9_40_mod_45");
    g.sample_size(20);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| orbit_partition_with(black_box(&colorings), &group, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, brute_force, enumeration, orbits);
criterion_main!(benches);
