//! Random ordinals and expressions.

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;
use transfinite::expr::OrdinalExpr;
use transfinite::ordinal::Ordinal;

/// Normal form from arbitrary (exponent, coefficient) pairs: sorted,
/// duplicates merged by keeping the first.
pub fn normalize(mut terms: Vec<(Ordinal, u64)>) -> Ordinal {
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    terms.dedup_by(|a, b| a.0 == b.0);
    Ordinal::from_terms(terms.into_iter().map(|(e, c)| (e, BigUint::from(c)))).expect("normal form")
}

/// Random ordinal with exponent nesting up to `depth` and coefficients in
/// `1..=max_coeff`.
pub fn random_ordinal<R: Rng>(rng: &mut R, depth: u32, max_coeff: u64) -> Ordinal {
    if depth == 0 {
        return Ordinal::from(rng.gen_range(0..=max_coeff));
    }
    let n = rng.gen_range(0..=3);
    let terms = (0..n)
        .map(|_| {
            let d = rng.gen_range(0..depth);
            (random_ordinal(rng, d, max_coeff), rng.gen_range(1..=max_coeff))
        })
        .collect();
    normalize(terms)
}

pub fn ordinal_strategy(depth: u32, max_coeff: u64) -> BoxedStrategy<Ordinal> {
    let leaf = (0..=max_coeff).prop_map(Ordinal::from).boxed();
    if depth == 0 {
        return leaf;
    }
    let inner = ordinal_strategy(depth - 1, max_coeff);
    prop_oneof![
        1 => leaf,
        3 => prop::collection::vec((inner, 1..=max_coeff), 0..=3).prop_map(normalize),
    ]
    .boxed()
}

/// Expression trees of the given depth. Exponents are kept shallow so that
/// evaluation stays cheap.
pub fn expr_strategy(depth: u32) -> BoxedStrategy<OrdinalExpr> {
    let leaf = prop_oneof![
        (0u32..=5).prop_map(|n| OrdinalExpr::Nat(n.into())),
        Just(OrdinalExpr::Omega),
    ]
    .boxed();
    if depth == 0 {
        return leaf;
    }
    let sub = expr_strategy(depth - 1);
    let small = expr_strategy(depth.min(2) - 1);
    prop_oneof![
        1 => leaf,
        2 => (sub.clone(), sub.clone()).prop_map(|(a, b)| OrdinalExpr::Add(Box::new(a), Box::new(b))),
        2 => (sub.clone(), sub.clone()).prop_map(|(a, b)| OrdinalExpr::Mul(Box::new(a), Box::new(b))),
        1 => (sub, small).prop_map(|(a, b)| OrdinalExpr::Pow(Box::new(a), Box::new(b))),
    ]
    .boxed()
}
