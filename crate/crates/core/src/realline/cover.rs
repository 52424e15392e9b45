use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RealLineError;

/// Interval `[center − halfwidth, center + halfwidth]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInterval {
    pub center: BigRational,
    pub halfwidth: BigRational,
}

/// Intervals of half-width `ε/2^(n+2)` around the `n`-th distinct rational
/// of `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    pub epsilon: BigRational,
    pub intervals: Vec<CoverInterval>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverMeasure {
    /// `Σ ε/2^(k+1)` over the covered rationals, i.e. `ε(1 − 2^−(n+1))`.
    pub nominal_total: BigRational,
    /// Exact length of the union of the intervals clipped to `[0, 1]`.
    pub union_measure: BigRational,
}

/// Distinct rationals in `[0, 1]`, walking the diagonals `p + q = s` in
/// pairing order and skipping zero denominators, values above 1, and
/// fractions not in lowest terms: `0, 1, 1/2, 1/3, 2/3, 1/4, …`.
pub fn unit_rationals() -> impl Iterator<Item = (u64, u64)> {
    (0u64..)
        .flat_map(|s| (0..=s).map(move |q| (s - q, q)))
        .filter(|&(p, q)| q > 0 && p <= q && p.gcd(&q) == 1)
}

impl CoverSpec {
    /// Covers `Q_0, …, Q_n`.
    pub fn new(epsilon: BigRational, n: usize) -> Result<Self, RealLineError> {
        if !epsilon.is_positive() {
            return Err(RealLineError::NonPositiveEpsilon);
        }
        let mut halfwidth = &epsilon / BigInt::from(4u32);
        let intervals = unit_rationals()
            .take(n + 1)
            .map(|(p, q)| {
                let iv = CoverInterval {
                    center: BigRational::new(p.into(), q.into()),
                    halfwidth: halfwidth.clone(),
                };
                halfwidth = &halfwidth / BigInt::from(2u32);
                iv
            })
            .collect();
        Ok(CoverSpec { epsilon, intervals })
    }
}

/// Nominal and actual covered length for the first `n + 1` rationals.
///
/// All endpoints are brought over one common denominator so that sorting
/// and merging work on integers.
pub fn cover_measure(epsilon: &BigRational, n: usize) -> Result<CoverMeasure, RealLineError> {
    if !epsilon.is_positive() {
        return Err(RealLineError::NonPositiveEpsilon);
    }
    let centers: Vec<(u64, u64)> = unit_rationals().take(n + 1).collect();
    let lcm_q = centers
        .iter()
        .fold(BigUint::one(), |acc, &(_, q)| acc.lcm(&BigUint::from(q)));
    let eps_num = epsilon.numer().clone();
    let eps_den = epsilon.denom().clone();
    // D = lcm(q)·den(ε)·2^(n+2); every endpoint is an integer multiple of 1/D.
    let lcm_q = BigInt::from(lcm_q);
    let scale = &lcm_q * &eps_den;
    let denom: BigInt = &scale << (n + 2);

    let mut intervals: Vec<(BigInt, BigInt)> = Vec::with_capacity(centers.len());
    for (k, &(p, q)) in centers.iter().enumerate() {
        let center = (&denom / BigInt::from(q)) * BigInt::from(p);
        // ε/2^(k+2) · D = ε_num · lcm_q · 2^(n−k)
        let half = (&eps_num * &lcm_q) << (n - k);
        let lo = (&center - &half).max(BigInt::zero());
        let hi = (&center + &half).min(denom.clone());
        intervals.push((lo, hi));
    }
    intervals.sort();

    let mut covered = BigInt::zero();
    let mut current: Option<(BigInt, BigInt)> = None;
    for (lo, hi) in intervals {
        current = match current {
            Some((cl, ch)) if lo <= ch => Some((cl, ch.max(hi))),
            Some((cl, ch)) => {
                covered += ch - cl;
                Some((lo, hi))
            }
            None => Some((lo, hi)),
        };
    }
    if let Some((cl, ch)) = current {
        covered += ch - cl;
    }

    let tail = BigRational::new(BigInt::one(), BigInt::one() << (n + 1));
    Ok(CoverMeasure {
        nominal_total: epsilon * (BigRational::one() - tail),
        union_measure: BigRational::new(covered, denom),
    })
}
