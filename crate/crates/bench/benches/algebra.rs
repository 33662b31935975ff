use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use z2steenrod::profiles::{named_profile, Family};
use z2steenrod::{DualSteenrod, Element, Window};

fn arithmetic(c: &mut Criterion) {
    let alg = DualSteenrod::default();
    let x = alg.parse_element("t0*t1*x1^3 + s*t2*x2").unwrap();
    let y = alg.parse_element("t0*t2 + a*x1^5").unwrap();
    c.bench_function("multiply", |b| {
        b.iter(|| alg.multiply(black_box(&x), black_box(&y)))
    });

    let mut g = c.benchmark_group("tau_power");
    for m in [2u32, 4, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| alg.tau_power(0, m).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("coproduct_tau");
    for n in [2usize, 4, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| alg.coproduct(&Element::tau(n)))
        });
    }
    g.finish();

    c.bench_function("antipode_t4", |b| {
        b.iter(|| alg.antipode(&Element::tau(4)).unwrap())
    });
}

fn profiles(c: &mut Criterion) {
    let alg = DualSteenrod::default();
    let a2 = named_profile(Family::A, 2);
    let e2 = named_profile(Family::E, 2);
    let (k1, k2) = z2steenrod::verification::example_profiles();
    let w = Window::up_to_dim(12);

    c.bench_function("ideal_spans_differ_example_dim8", |b| {
        b.iter(|| {
            alg.ideal_spans_differ(&k1, &k2, &Window::up_to_dim(8))
                .unwrap()
        })
    });
    c.bench_function("minimize_example", |b| {
        b.iter(|| alg.minimize(black_box(&k2)).unwrap())
    });
    c.bench_function("hopf_direct_A2_dim12", |b| {
        b.iter(|| alg.hopf_ideal_direct(&a2, &w).unwrap())
    });
    c.bench_function("quotient_basis_defect_A2_dim12", |b| {
        b.iter(|| alg.quotient_basis_defect(&a2, &w).unwrap())
    });
    c.bench_function("cofree_A2_over_E2_dim16", |b| {
        let gens: Vec<_> = (0..4)
            .flat_map(|i| (0..2).map(move |j| z2steenrod::GenMonomial::xi(1, i).times_xi(2, j)))
            .collect();
        b.iter(|| {
            alg.comodule_iso_check(&a2, &e2, &gens, &Window::up_to_dim(16))
                .unwrap()
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = arithmetic, profiles
}
criterion_main!(benches);
