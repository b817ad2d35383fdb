use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hopf_partial::coactions::classify_coaction_with;
use hopf_partial::exactlin::Field;
use hopf_partial::examples::{partial_s3, regular_coaction, regular_coaction_of};
use hopf_partial::frobenius::{build_frobenius_system_with, frobenius_pair};
use hopf_partial::galois::galois_verdict_with;
use hopf_partial::par::{self, Execution};
use hopf_partial::presentations::sweedler4;
use hopf_partial::random::random_coaction;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn classify_batch(c: &mut Criterion) {
    let f = Field::Rational;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let maps: Vec<_> = (0..128)
        .map(|_| random_coaction(&mut rng, f).unwrap())
        .collect();
    let mut group = c.benchmark_group("classify-128-random");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                par::map(exec, &maps, |m| {
                    classify_coaction_with(m, Execution::Sequential)
                        .unwrap()
                        .flags
                })
            })
        });
    }
    group.finish();
}

fn galois(c: &mut Criterion) {
    let f = Field::Rational;
    let cases = [
        ("regular-z3", regular_coaction(f, 3).unwrap()),
        ("regular-h4", regular_coaction_of(sweedler4(f).unwrap())),
    ];
    let mut group = c.benchmark_group("galois-verdict");
    group.sample_size(10);
    for (case, map) in &cases {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, case), map, |b, m| {
                b.iter(|| galois_verdict_with(black_box(m), exec).unwrap().galois)
            });
        }
    }
    group.finish();
}

fn frobenius(c: &mut Criterion) {
    let f = Field::Rational;
    let a = partial_s3(f).unwrap();
    let fd = frobenius_pair(&a.hopf).unwrap();
    let mut group = c.benchmark_group("frobenius-system-s3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                build_frobenius_system_with(black_box(&a), &fd, exec)
                    .unwrap()
                    .e
                    .len()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, classify_batch, galois, frobenius);
criterion_main!(benches);
