use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pants_core::hyperbolic::Oracle;
use pants_core::lab;
use pants_core::{enumerate_classes, parse_class, CurveClass, Engine, EnumFilter, Orientation};

fn c(s: &str) -> CurveClass {
    parse_class(s, Orientation::Unoriented).unwrap()
}

fn engine(cr: &mut Criterion) {
    let e = Engine::default();
    let mut g = cr.benchmark_group("engine_si");
    for n in [4, 16, 64] {
        let w = c(&format!("a^{n}Cb"));
        g.bench_with_input(BenchmarkId::from_parameter(w.len()), &w, |b, w| {
            b.iter(|| e.self_intersection(black_box(w)))
        });
    }
    g.finish();

    let classes = enumerate_classes(6, &EnumFilter::primitive()).unwrap();
    let probes = lab::classes_with_si(2, None).unwrap();
    cr.bench_function("engine_vectors_len6_k2", |b| {
        b.iter(|| {
            classes
                .iter()
                .map(|x| e.intersection_vector(x, &probes).iter().sum::<usize>())
                .sum::<usize>()
        })
    });
}

fn oracle(cr: &mut Criterion) {
    let o = Oracle::default();
    let mut g = cr.benchmark_group("oracle_si");
    g.sample_size(10);
    for w in ["aaB", "aCb", "aaaCb", "a^5CC"] {
        let w = c(w);
        g.bench_with_input(BenchmarkId::from_parameter(w.len()), &w, |b, w| {
            b.iter(|| o.self_intersection(black_box(w)).unwrap())
        });
    }
    g.finish();
}

fn census(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("census");
    g.sample_size(10);
    for k in [2, 3] {
        g.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| lab::classes_with_si(k, None).unwrap().len())
        });
    }
    g.finish();
}

criterion_group!(benches, engine, oracle, census);
criterion_main!(benches);
