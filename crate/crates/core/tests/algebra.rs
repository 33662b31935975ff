use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use z2steenrod::steenrod::RawTerm;
use z2steenrod::{CoeffMonomial, DualSteenrod, Element, Error};

fn alg() -> DualSteenrod {
    DualSteenrod::default()
}

fn sample(alg: &DualSteenrod, seed: u64, max_dim: i64) -> Element {
    alg.random_homogeneous(&mut ChaCha8Rng::seed_from_u64(seed), max_dim)
}

#[test]
fn defining_relation() {
    let alg = alg();
    let x = alg.parse_element("t0^2").unwrap();
    assert_eq!(x, alg.parse_element("a*t1 + s*x1 + a*t0*x1").unwrap());
    assert_eq!(x, alg.multiply(&Element::tau(0), &Element::tau(0)));
    // τ₁² = aτ₂ + (σ⁻¹ + aτ₀)ξ₂
    assert_eq!(
        alg.parse_element("t1^2").unwrap().to_string(),
        "a*t2 + s*x2 + a*t0*x2"
    );
}

#[test]
fn tau_powers_match_repeated_squaring() {
    let alg = alg();
    for i in 0..=6usize {
        let mut x = Element::tau(i);
        for m in 0..=(8 - i) as u32 {
            assert_eq!(alg.tau_power(i, m).unwrap(), x, "t{i}^(2^{m})");
            x = alg.multiply(&x, &x);
        }
    }
}

#[test]
fn raw_reduction_agrees_with_multiplication() {
    let alg = alg();
    let raw = RawTerm {
        coeff: CoeffMonomial::S,
        taus: vec![(0, 3), (1, 2)],
        xis: vec![(1, 2)],
    };
    let mut want = Element::coeff(CoeffMonomial::S);
    for g in [
        Element::tau(0),
        Element::tau(0),
        Element::tau(0),
        Element::tau(1),
        Element::tau(1),
        Element::xi(1),
        Element::xi(1),
    ] {
        want = alg.multiply(&want, &g);
    }
    assert_eq!(alg.reduce(&[raw]).unwrap(), want);
}

#[test]
fn parse_errors() {
    let alg = alg();
    assert!(matches!(
        alg.parse_element("t0^^"),
        Err(Error::Syntax { column: 4, .. })
    ));
    assert!(matches!(
        alg.parse_element("t0 + "),
        Err(Error::Syntax { .. })
    ));
    assert!(matches!(
        alg.parse_element("t99"),
        Err(Error::BoundExceeded { .. })
    ));
    assert!(alg.parse_element("t0*q").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let alg = alg();
        let (x, y, z) = (sample(&alg, s1, 8), sample(&alg, s2, 8), sample(&alg, s3, 8));
        prop_assert_eq!(alg.multiply(&x, &y), alg.multiply(&y, &x));
        prop_assert_eq!(alg.multiply(&alg.multiply(&x, &y), &z), alg.multiply(&x, &alg.multiply(&y, &z)));
        prop_assert_eq!(alg.multiply(&x, &(&y + &z)), &alg.multiply(&x, &y) + &alg.multiply(&x, &z));
        prop_assert!(alg.multiply(&x, &y).is_homogeneous());
    }

    #[test]
    fn print_parse_round_trip(s in any::<u64>()) {
        let alg = alg();
        let x = sample(&alg, s, 12);
        prop_assert_eq!(alg.parse_element(&x.to_string()).unwrap(), x);
    }
}
