use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use surfcount_bench::{diagram, torus_link, FIGURE_EIGHT};
use surfcount_core::bounds::{general_count_for, sphere_count_general};
use surfcount_core::chunk::build_chunks;
use surfcount_core::dehn::{dehn_filling_bound, FillingQuery, SlopeLength};
use surfcount_core::farey::farey_path;
use surfcount_core::oracle::{enumerate_combinations, EnumerationOptions};
use surfcount_core::Slope;

fn parse_and_chunk(c: &mut Criterion) {
    let mut group = c.benchmark_group("chunk");
    for n in [3, 15, 63] {
        let pd = torus_link(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &pd, |b, pd| {
            b.iter(|| build_chunks(&diagram(black_box(pd))).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let d = diagram(FIGURE_EIGHT);
    let chunks = build_chunks(&d).unwrap();
    let side = &chunks.sides[0];
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for k in [4, 6, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| enumerate_combinations(side, &d, &EnumerationOptions::new(k)).unwrap())
        });
    }
    group.finish();
}

fn bounds(c: &mut Criterion) {
    let mut group = c.benchmark_group("bounds");
    for chi in [-1i64, -4, -8] {
        group.bench_with_input(BenchmarkId::new("sphere", chi), &chi, |b, &chi| {
            b.iter(|| sphere_count_general(black_box(10), chi).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("general", chi), &chi, |b, &chi| {
            b.iter(|| general_count_for(black_box(10), chi, 2, 2).unwrap())
        });
    }
    group.finish();
}

fn farey(c: &mut Criterion) {
    let targets: Vec<Slope> = (1..200)
        .flat_map(|q| (0..2 * q).map(move |p| (p, q)))
        .filter_map(|(p, q)| Slope::new(p, q).ok())
        .filter(|s| farey_path(*s).is_ok())
        .take(2000)
        .collect();
    c.bench_function("farey/paths", |b| {
        b.iter(|| {
            for t in &targets {
                black_box(farey_path(*t).unwrap());
            }
        })
    });
}

fn dehn(c: &mut Criterion) {
    let fq = FillingQuery {
        n: 3,
        genus: 2,
        x: 1,
        slope: Slope::new(1, 1).unwrap(),
        length: SlopeLength::PiMultiple { num: 4, den: 1 },
    };
    c.bench_function("dehn/n3_g2", |b| {
        b.iter(|| dehn_filling_bound(black_box(&fq)).unwrap())
    });
}

criterion_group!(benches, parse_and_chunk, enumeration, bounds, farey, dehn);
criterion_main!(benches);
