use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use orecodec_core::codes::{find_equivalence, weight_profile, DEFAULT_ENUM_LIMIT};
use orecodec_core::plt::eigenvectors;
use orecodec_core::{Felt, FieldCtx, OrePoly, Plt, PolycyclicCode, Side};

fn ctx(field: &str, spec: &str) -> FieldCtx {
    FieldCtx::parse(field, spec).unwrap()
}

/// Dense polynomial of the given length with coefficients cycling through
/// the nonzero elements.
fn dense(c: &FieldCtx, len: usize) -> OrePoly {
    let q = c.order() as u64;
    let ix: Vec<u64> = (0..len as u64).map(|i| 1 + (i * 7) % (q - 1)).collect();
    OrePoly::from_indices(c, &ix).unwrap()
}

fn skew_mul(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("skew_mul");
    for (field, spec) in [("gf(4)", "sigma=1,beta=1"), ("gf(256)", "sigma=3,beta=5")] {
        let c = ctx(field, spec);
        for len in [8, 32, 128] {
            let (a, b) = (dense(&c, len), dense(&c, len));
            group.bench_with_input(BenchmarkId::new(field, len), &len, |bn, _| {
                bn.iter(|| black_box(&a) * black_box(&b))
            });
        }
    }
    group.finish();
}

fn division(cr: &mut Criterion) {
    let c = ctx("gf(256)", "sigma=3,beta=5");
    let a = dense(&c, 128);
    let b = dense(&c, 32).monic();
    cr.bench_function("right_divmod gf(256) 127/31", |bn| bn.iter(|| black_box(&a).right_divmod(&b).unwrap()));
    cr.bench_function("left_divmod gf(256) 127/31", |bn| bn.iter(|| black_box(&a).left_divmod(&b).unwrap()));
}

fn weights(cr: &mut Criterion) {
    // x^8 + 1 = (x + 1)^8 over GF(4) with the Frobenius; (x + 1)^3 generates a
    // [8, 5] code of 1024 words
    let c = ctx("gf(4)", "sigma=1");
    let f = OrePoly::from_indices(&c, &[1, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
    let g = OrePoly::from_indices(&c, &[1, 1, 1, 1]).unwrap();
    let code = PolycyclicCode::from_generator(&f, &g, Side::Right).unwrap();
    cr.bench_function("weight_profile gf(4) [8,5]", |bn| {
        bn.iter(|| weight_profile(black_box(code.code()), DEFAULT_ENUM_LIMIT).unwrap())
    });
}

fn eigen(cr: &mut Criterion) {
    let c = ctx("gf(16)", "sigma=1,beta=3");
    let f = dense(&c, 6).monic();
    let t = Plt::companion(&f).unwrap();
    let a = Felt::from_index_unchecked(5);
    cr.bench_function("eigenvectors gf(16) n=5", |bn| bn.iter(|| eigenvectors(black_box(&t), a)));
}

fn equivalence(cr: &mut Criterion) {
    let c = ctx("gf(9)", "sigma=1,beta=2");
    let f1 = OrePoly::from_indices(&c, &[1, 0, 0, 1]).unwrap();
    let f2 = OrePoly::from_indices(&c, &[2, 0, 0, 1]).unwrap();
    cr.bench_function("find_equivalence gf(9) n=3", |bn| {
        bn.iter(|| find_equivalence(black_box(&f1), black_box(&f2), false).unwrap())
    });
}

criterion_group!(benches, skew_mul, division, weights, eigen, equivalence);
criterion_main!(benches);
