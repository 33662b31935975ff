use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use z2steenrod::profiles::extnat::{Fin, Inf};
use z2steenrod::profiles::{named_profile, named_profile_with, Convention, Family};
use z2steenrod::verification::{example_profiles, random_free_pair, FamilyOptions};
use z2steenrod::{DualSteenrod, Element, Error, Profile, RODegree, Window};

fn p(s: &str) -> Profile {
    s.parse().unwrap()
}

/// Counts of `Π τᵢ^εᵢ ξⱼ^nⱼ` with `εᵢ ≤ min(k(i),1)` and `nⱼ < 2^h(j)`, by
/// multiplying one-variable series.
fn product_formula(q: &Profile, w: &Window) -> BTreeMap<RODegree, u64> {
    let mut series: BTreeMap<RODegree, u64> = BTreeMap::from([(RODegree::ZERO, 1)]);
    let dim_hi = w.dim_hi;
    let mut factor = |steps: Vec<RODegree>| {
        let mut out = BTreeMap::new();
        for (d, n) in &series {
            for s in &steps {
                let e = RODegree::new(d.c + s.c, d.d + s.d);
                if e.dim() <= dim_hi {
                    *out.entry(e).or_insert(0) += n;
                }
            }
        }
        series = out;
    };
    for i in 0..8usize {
        let deg = RODegree::new(1 << i, (1 << i) - 1);
        if q.k(i) != Fin(0) && deg.dim() <= dim_hi {
            factor(vec![RODegree::ZERO, deg]);
        }
    }
    for j in 1..8usize {
        let one = (1i64 << j) - 1;
        let top = match q.h(j) {
            Fin(e) => (1i64 << e) - 1,
            Inf => dim_hi,
        };
        let steps = (0..=top)
            .take_while(|n| 2 * n * one <= dim_hi)
            .map(|n| RODegree::new(n * one, n * one))
            .collect();
        factor(steps);
    }
    series.retain(|d, _| w.contains(*d));
    series
}

#[test]
fn quotient_series_is_a_product() {
    let alg = DualSteenrod::default();
    let w = Window::up_to_dim(14);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut profiles: Vec<Profile> = (0..25).map(|_| random_free_pair(&mut rng)).collect();
    profiles
        .extend((0..=2).flat_map(|n| [named_profile(Family::E, n), named_profile(Family::A, n)]));
    for q in profiles {
        let got = alg.series_of_quotient(&q, &w).unwrap();
        let want = product_formula(&q, &w);
        let got: BTreeMap<RODegree, u64> = got.counts.into_iter().filter(|(_, n)| *n > 0).collect();
        assert_eq!(got, want, "{q}");
    }
}

#[test]
fn named_family_sizes() {
    let alg = DualSteenrod::default();
    let w = Window::up_to_dim(80);
    let size = |q: Profile| alg.quotient_basis(&q, &w).unwrap().len();
    for n in 0..=2u32 {
        assert_eq!(size(named_profile(Family::E, n)), 1 << (n + 1));
    }
    assert_eq!(size(named_profile(Family::A, 1)), 8);
    assert_eq!(size(named_profile(Family::A, 2)), 64);
    assert_eq!(
        size(named_profile_with(Family::E, 1, Convention::Literal)),
        2
    );
    assert_eq!(named_profile(Family::ATilde, 3), p("h=[2,1|0] k=[|0]"));
}

#[test]
fn worked_example() {
    let alg = DualSteenrod::default();
    let (k1, k2) = example_profiles();
    assert_eq!(k1, p("h=[0|inf] k=[1,0|inf]"));
    let m = alg.minimize(&k2).unwrap();
    assert_eq!(m.profile, k1);
    assert!(m.is_confirmed());
    assert!(alg.is_minimal(&k1).unwrap());
    assert!(!alg.is_minimal(&k2).unwrap());
    assert_eq!(
        alg.ideal_spans_differ(&k1, &k2, &Window::up_to_dim(8))
            .unwrap(),
        None
    );
    // τ₀² ∈ I(h,k₂) although k₂(0) = ∞
    let t0sq = alg.parse_element("t0^2").unwrap();
    assert!(alg.member_window(&k2, &t0sq).unwrap());
}

#[test]
fn membership_methods_agree_on_free_pairs() {
    let alg = DualSteenrod::default();
    let q = named_profile(Family::A, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let gens = alg.ideal_generators(&q, &Window::up_to_dim(10)).unwrap();
    for _ in 0..40 {
        let x = alg.random_homogeneous(&mut rng, 10);
        assert_eq!(
            alg.member_free(&q, &x).unwrap(),
            alg.member_window(&q, &x).unwrap(),
            "{x}"
        );
        for g in &gens {
            let y = alg.multiply(&x, &g.element);
            assert!(alg.member_free(&q, &y).unwrap() && alg.member_window(&q, &y).unwrap());
        }
    }
    assert!(matches!(
        alg.member_free(&p("h=[|0] k=[|inf]"), &Element::tau(0)),
        Ok(false)
    ));
    assert!(matches!(
        alg.member_free(&p("h=[2|0] k=[2,1|0]"), &Element::tau(0)),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn hopf_tests_agree_on_a_small_family() {
    let alg = DualSteenrod::default();
    let r = alg
        .hopf_condition_family(&FamilyOptions {
            h_len: 1,
            k_len: 2,
            window: 16,
        })
        .unwrap();
    assert_eq!(r.distinct, 256);
    assert!(r.minimal > 100);
    assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
}

#[test]
fn named_quotients_are_hopf() {
    let alg = DualSteenrod::default();
    for n in 0..=2 {
        for fam in [Family::E, Family::A, Family::ATilde] {
            let q = named_profile(fam, n + 1);
            assert!(q.is_hopf_ideal_numeric(), "{q}");
            assert!(
                alg.is_hopf_ideal_direct(&q, &Window::up_to_dim(14))
                    .unwrap(),
                "{q}"
            );
        }
    }
    let bad = p("h=[2|0] k=[|0]");
    assert!(!bad.is_hopf_ideal_numeric());
    assert!(!alg
        .is_hopf_ideal_direct(&bad, &Window::up_to_dim(14))
        .unwrap());
}
