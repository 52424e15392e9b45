use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RealLineError;

/// Float input supports at most this many partial quotients.
pub const MAX_FLOAT_DEPTH: usize = 15;

/// `[a₀; a₁, a₂, …]` with `aᵢ ≥ 1` for `i ≥ 1`.
///
/// Expansions returned by [`cf_of_rational`] are canonical: the last
/// quotient is at least 2 unless there is only one. Prefixes of infinite
/// expansions (such as `[1; 1, 1, 1]` for φ) need not be canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    quotients: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<BigInt>) -> Result<Self, RealLineError> {
        if quotients.is_empty() {
            return Err(RealLineError::EmptyContinuedFraction);
        }
        if let Some((i, a)) = quotients
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, a)| !a.is_positive())
        {
            return Err(RealLineError::NonPositiveQuotient { index: i, value: a.clone() });
        }
        Ok(ContinuedFraction { quotients })
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Folds a trailing 1 into its predecessor: `[…, a, 1] = […, a + 1]`.
    pub fn canonical(&self) -> ContinuedFraction {
        let mut q = self.quotients.clone();
        if q.len() >= 2 && q.last().is_some_and(|a| a.is_one()) {
            q.pop();
            *q.last_mut().unwrap() += 1;
        }
        ContinuedFraction { quotients: q }
    }

    pub fn is_canonical(&self) -> bool {
        self.quotients.len() == 1 || self.quotients.last().is_some_and(|a| *a >= BigInt::from(2))
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        for (i, a) in self.quotients.iter().enumerate().skip(1) {
            f.write_str(if i == 1 { "; " } else { ", " })?;
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Accepts `[a0; a1, a2, …]` or `[a0]`, whitespace optional.
impl FromStr for ContinuedFraction {
    type Err = RealLineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RealLineError::Parse(format!("expected [a0; a1, ...], got {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (head, tail) = match inner.split_once(';') {
            Some((h, t)) => (h, Some(t)),
            None => (inner, None),
        };
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
        let mut quotients = vec![parse(head)?];
        if let Some(tail) = tail {
            for part in tail.split(',') {
                quotients.push(parse(part)?);
            }
        }
        ContinuedFraction::new(quotients)
    }
}

/// Euclid's algorithm on `p/q` with floored quotients.
pub fn cf_of_rational(p: &BigInt, q: &BigInt) -> Result<ContinuedFraction, RealLineError> {
    if !q.is_positive() {
        return Err(RealLineError::NonPositiveDenominator);
    }
    let mut quotients = Vec::new();
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (quot, rem) = a.div_mod_floor(&b);
        quotients.push(quot);
        a = b;
        b = rem;
    }
    Ok(ContinuedFraction { quotients })
}

/// Exact value by the backward recurrence `x = aᵢ + 1/x`.
pub fn cf_eval(cf: &ContinuedFraction) -> BigRational {
    let mut iter = cf.quotients.iter().rev();
    let mut value = BigRational::from_integer(iter.next().expect("non-empty").clone());
    for a in iter {
        value = BigRational::from_integer(a.clone()) + value.recip();
    }
    value
}

/// First `k` convergents `pᵢ/qᵢ` from `pᵢ = aᵢpᵢ₋₁ + pᵢ₋₂`, `qᵢ = aᵢqᵢ₋₁ + qᵢ₋₂`.
pub fn cf_convergents(cf: &ContinuedFraction, k: usize) -> Vec<BigRational> {
    let (mut p_prev, mut p) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q) = (BigInt::one(), BigInt::zero());
    cf.quotients
        .iter()
        .take(k)
        .map(|a| {
            let p_next = a * &p + &p_prev;
            let q_next = a * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            BigRational::new(p.clone(), q.clone())
        })
        .collect()
}

/// First `k` partial quotients of a float by iterated floor and reciprocal.
///
/// Stops early when the remainder is exactly zero (the float is rational
/// with a short expansion). Fails when `k` exceeds [`MAX_FLOAT_DEPTH`] or
/// when the convergent denominators grow past what double precision can
/// resolve.
pub fn cf_approx_irrational(value: f64, k: usize) -> Result<ContinuedFraction, RealLineError> {
    if !value.is_finite() {
        return Err(RealLineError::InvalidParams(format!("{value} is not finite")));
    }
    if k > MAX_FLOAT_DEPTH {
        return Err(RealLineError::PrecisionExhausted { requested: k, reliable: MAX_FLOAT_DEPTH });
    }
    let mut quotients = Vec::with_capacity(k);
    let mut x = value;
    // Convergent denominators q_{i-2}, q_{i-1}.
    let (mut q_older, mut q_old) = (1f64, 0f64);
    while quotients.len() < k {
        // Past this, rounding in x exceeds the spacing between candidate quotients.
        if q_old * q_old > 1e13 {
            return Err(RealLineError::PrecisionExhausted {
                requested: k,
                reliable: quotients.len(),
            });
        }
        let a = x.floor();
        quotients.push(BigInt::from(a as i64));
        let q_new = a * q_old + q_older;
        q_older = q_old;
        q_old = q_new;
        let frac = x - a;
        if frac == 0.0 {
            break;
        }
        x = frac.recip();
    }
    if quotients.is_empty() {
        return Err(RealLineError::InvalidParams("at least one quotient is needed".into()));
    }
    ContinuedFraction::new(quotients)
}
