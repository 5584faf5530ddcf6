use bqg_core::counterexample as ce;
use bqg_core::fpgroup;
use bqg_core::gamma::{self, PresentationFamily};
use bqg_core::homotopy::{self, HomotopyConfig};
use bqg_core::scalar::Field;
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_pi1(c: &mut Criterion) {
    let alg = ce::algebra(Field::rationals());
    let cfg = HomotopyConfig::default();
    let ideal = ce::ideal_i4(&alg);
    c.bench_function("pi1 classify (I4)", |b| {
        b.iter(|| {
            let rel = homotopy::relation_of_ideal(&alg, &ideal, "I4", &cfg).unwrap();
            let pres = homotopy::pi1_presentation(&alg, &rel, homotopy::canonical_basepoint());
            fpgroup::classify(&pres)
        })
    });
}

fn bench_gamma(c: &mut Criterion) {
    let alg = ce::algebra(Field::rationals());
    let cfg = HomotopyConfig::default();
    let ideals = ce::ideals(&alg);
    let taus = gamma::default_tau_samples(alg.field());
    c.bench_function("build gamma (five classes)", |b| {
        b.iter(|| {
            let fam = PresentationFamily::build(&alg, &ideals, &cfg).unwrap();
            gamma::build_gamma(&alg, fam, &taus, &cfg).unwrap()
        })
    });
}

fn bench_orbit(c: &mut Criterion) {
    let alg = ce::algebra(Field::rationals());
    let seed = ce::ideal_i(&alg);
    let taus = vec![alg.field().one(), alg.field().from_integer(-1)];
    c.bench_function("orbit search (depth 2)", |b| {
        b.iter(|| gamma::orbit_search(&alg, &seed, &taus, 2, 10_000))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_pi1, bench_gamma, bench_orbit
}
criterion_main!(benches);
