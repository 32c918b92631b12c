use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use dehn_core::constructions::filling_family;
use dehn_core::pi1::mcg_equal_rel_boundary;
use dehn_core::verify::verify_batch;
use dehn_core::{
    homology_action, Config, CurveId, EngineChoice, Strategy, SurfaceSig, Twist, TwistWord,
};

fn strategies() -> [(&'static str, Config); 2] {
    [
        ("sequential", Config::sequential()),
        (
            "parallel",
            Config {
                strategy: Strategy::Parallel,
                ..Config::default()
            },
        ),
    ]
}

fn hyperelliptic_pi1(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain power equals boundary twist");
    for g in [2u32, 3] {
        let sig = SurfaceSig::bounded(g);
        let lhs = TwistWord::chain(sig).pow(4 * g as usize + 2);
        let delta = TwistWord::positive(sig, &[CurveId::Delta]).unwrap();
        for (name, config) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, g), &g, |b, _| {
                b.iter(|| mcg_equal_rel_boundary(black_box(&lhs), &delta, config).unwrap())
            });
        }
    }
    group.finish();
}

fn family(c: &mut Criterion) {
    let mut group = c.benchmark_group("filling family");
    group.sample_size(20);
    for n in [2u32, 3] {
        for (name, config) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| filling_family(black_box(n), &config).unwrap())
            });
        }
    }
    group.finish();
}

fn homology_chain_powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology of chain powers");
    for g in [4u32, 10] {
        let w = TwistWord::chain(SurfaceSig::closed(g)).pow(4 * g as usize + 2);
        group.bench_with_input(BenchmarkId::from_parameter(g), &w, |b, w| {
            b.iter(|| homology_action(black_box(w)).unwrap())
        });
    }
    group.finish();
}

fn relation_batch(c: &mut Criterion) {
    let sig = SurfaceSig::bounded(2);
    let block = TwistWord::positive(sig, &[CurveId::A(1), CurveId::B(1), CurveId::A(2)])
        .unwrap()
        .pow(4);
    let de = TwistWord::positive(sig, &[CurveId::D(2), CurveId::E(2)]).unwrap();
    let pairs: Vec<(TwistWord, TwistWord)> = (0..32)
        .map(|k| {
            let pre = TwistWord::new(sig, vec![Twist::pos(CurveId::B(1)); k % 5]).unwrap();
            (pre.concat(&block).unwrap(), pre.concat(&de).unwrap())
        })
        .collect();
    let mut group = c.benchmark_group("batch of 32 chain relations");
    for (name, config) in strategies() {
        group.bench_function(name, |b| {
            b.iter(|| verify_batch(black_box(&pairs), EngineChoice::Pi1, &config))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    hyperelliptic_pi1,
    family,
    homology_chain_powers,
    relation_batch
);
criterion_main!(benches);
