#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rwps::family::random_table;
use rwps::{number_field, rat, FamilySpec, FieldElement, QPoly, Rational};

/// Rationals with numerator and denominator bounded by `height`.
pub fn arb_rational(height: i64) -> impl Strategy<Value = Rational> {
    (-height..=height, 1..=height).prop_map(|(p, q)| rat(p, q))
}

pub fn arb_field_element(k: usize, height: i64) -> impl Strategy<Value = FieldElement> {
    let field = number_field(k).unwrap();
    let d = field.degree();
    prop::collection::vec(arb_rational(height), d)
        .prop_map(move |coords| FieldElement::from_coords(&field, coords))
}

/// A `k` and three elements of ℚ(cos(π/k)).
pub fn arb_field_triple(
    max_k: usize,
    height: i64,
) -> impl Strategy<Value = (usize, FieldElement, FieldElement, FieldElement)> {
    (1..=max_k).prop_flat_map(move |k| {
        (
            Just(k),
            arb_field_element(k, height),
            arb_field_element(k, height),
            arb_field_element(k, height),
        )
    })
}

pub fn arb_qpoly(max_degree: usize, height: i64) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(arb_rational(height), 0..=max_degree + 1)
        .prop_map(|coeffs| QPoly::from_terms(coeffs.into_iter().enumerate()))
}

/// The families every suite runs over.
pub fn reference_families() -> Vec<(String, FamilySpec)> {
    vec![
        ("chebyshev_t".into(), FamilySpec::chebyshev_t()),
        (
            "ultraspherical(-1/4)".into(),
            FamilySpec::ultraspherical(rat(-1, 4)).unwrap(),
        ),
        (
            "ultraspherical(1/2)".into(),
            FamilySpec::ultraspherical(rat(1, 2)).unwrap(),
        ),
        (
            "ultraspherical(1)".into(),
            FamilySpec::ultraspherical(rat(1, 1)).unwrap(),
        ),
        ("random table".into(), fixed_random_table(64)),
    ]
}

/// A table family that is the same on every run.
pub fn fixed_random_table(len: usize) -> FamilySpec {
    random_table(&mut ChaCha8Rng::seed_from_u64(2024), len)
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&i| num_integer::gcd(i, n) == 1).count()
}

/// Families for the equivalence sweep: sieved parents, sieved parents with
/// one coefficient moved off `½`, and unconstrained tables.
pub fn equivalence_families(count: usize, seed: u64) -> Vec<FamilySpec> {
    use rand::seq::IndexedRandom;
    use rand::Rng;
    use rwps::family::random_coefficient;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let sieve_k = *[2usize, 3, 4, 6, 12].choose(&mut rng).unwrap();
            let parent = random_table(&mut rng, 32);
            match i % 3 {
                0 => parent.sieve(sieve_k),
                1 => {
                    let n = rng.random_range(1..=24usize);
                    let mut c = random_coefficient(&mut rng, 16);
                    if c == rat(1, 2) {
                        c = rat(1, 3);
                    }
                    parent.sieve(sieve_k).with_override(n, c).unwrap()
                }
                _ => random_table(&mut rng, 32),
            }
        })
        .collect()
}

/// A coefficient `p/q ∈ (0,1)` with `q ≤ max_den`.
pub fn arb_coefficient(max_den: i64) -> impl Strategy<Value = Rational> {
    (2..=max_den).prop_flat_map(|q| (1..q).prop_map(move |p| rat(p, q)))
}

pub fn arb_table(len: usize) -> impl Strategy<Value = FamilySpec> {
    prop::collection::vec(arb_coefficient(16), len).prop_map(|c| FamilySpec::table(c).unwrap())
}
