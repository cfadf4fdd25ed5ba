use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use smfkit::chars::plethysm_with;
use smfkit::smf::{smf_check_saturated_with, verify_catalog, Caps, GroupSpec, RepSpec};
use smfkit::{Exec, Partition, RootSystem, VirtualCharacter};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn irreducible(system: &str, weight: &str) -> VirtualCharacter {
    let s = RootSystem::parse(system).unwrap();
    VirtualCharacter::irreducible(&s, &s.parse_weight(weight).unwrap()).unwrap()
}

fn tensor(c: &mut Criterion) {
    let a = irreducible("A3", "[2,1,0]");
    let b = irreducible("A3", "[0,1,2]");
    let mut group = c.benchmark_group("tensor");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |bch| bch.iter(|| black_box(a.tensor_with(&b, exec).unwrap())));
    }
    group.finish();
}

fn plethysm(c: &mut Criterion) {
    let chi = irreducible("A2", "[2,0]");
    let lambda = Partition::new([3, 2, 1]).unwrap();
    let mut group = c.benchmark_group("plethysm");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |bch| bch.iter(|| black_box(plethysm_with(&lambda, &chi, exec))));
    }
    group.finish();
}

fn smf_check(c: &mut Criterion) {
    let s = RootSystem::parse("A1xA1xA1").unwrap();
    let g = GroupSpec::new(2, s.clone());
    let v = RepSpec::parse(&s, "[2]x[1]x[0];[0]x[1]x[2]").unwrap();
    let mut group = c.benchmark_group("smf_check_saturated");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |bch| {
            bch.iter(|| black_box(smf_check_saturated_with(&g, &v, Caps::default(), exec).unwrap()))
        });
    }
    group.finish();
}

fn catalog(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_catalog");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |bch| {
            bch.iter(|| black_box(verify_catalog("table2", false, Caps::default(), exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, tensor, plethysm, smf_check, catalog);
criterion_main!(benches);
