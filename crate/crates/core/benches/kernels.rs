//! Parallel kernels run on the global rayon pool versus a one-thread pool.

use criterion::{criterion_group, criterion_main, Criterion};
use rayon::ThreadPoolBuilder;
use wcilab_core::coxsat::saturate_cl_one;
use wcilab_core::parse::parse_poly_list;
use wcilab_core::torelli::{build_jacobi, torelli_test};
use wcilab_core::wps::{
    enumerate_candidates, CandidateBounds, ClassFilter, WciData, WeightedSpace,
};
use wcilab_core::{GbConfig, Ideal};

fn compare<F: Fn() + Sync>(c: &mut Criterion, name: &str, f: F) {
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let mut g = c.benchmark_group(name);
    g.sample_size(10);
    g.bench_function("parallel", |b| b.iter(&f));
    g.bench_function("sequential", |b| b.iter(|| single.install(&f)));
    g.finish();
}

fn saturation(c: &mut Criterion) {
    let sp = WeightedSpace::new(&[1, 1, 3, 6]).unwrap();
    let i = Ideal::new(sp.ring(), parse_poly_list("x0^3, x1^3", sp.ring()).unwrap()).unwrap();
    let cfg = GbConfig::default();
    compare(c, "saturate_cl_one_p1136", || {
        saturate_cl_one(&i, &sp, 8, &cfg).unwrap();
    });
}

fn torelli(c: &mut Criterion) {
    let sp = WeightedSpace::new(&[1, 1, 1, 1]).unwrap();
    let f = parse_poly_list("x0^6 + x1^6 + x2^6 + x3^6", sp.ring()).unwrap();
    let j = build_jacobi(&WciData::new(sp, f).unwrap(), &GbConfig::default()).unwrap();
    compare(c, "torelli_sextic", || {
        torelli_test(&j).unwrap();
    });
}

fn enumeration(c: &mut Criterion) {
    let b = CandidateBounds {
        max_weight: 5,
        max_codim: 2,
        dim: 3,
        max_degree_sum: 24,
        class: ClassFilter::Any,
        max_results: 10_000_000,
    };
    compare(c, "enumerate_candidates", || {
        enumerate_candidates(&b).unwrap();
    });
}

criterion_group!(benches, saturation, torelli, enumeration);
criterion_main!(benches);
