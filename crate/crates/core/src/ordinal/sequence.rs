use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ExtOrdinal, Ordinal, OrdinalClass, OrdinalError, Term};

impl Ordinal {
    /// `ω↑↑n`: 1, ω, ω^ω, ω^ω^ω, …
    pub fn omega_tower(n: u64) -> Ordinal {
        let mut acc = Ordinal::one();
        for _ in 0..n {
            acc = Ordinal::omega_pow(acc);
        }
        acc
    }
}

/// The `n`-th element of the canonical fundamental sequence of a limit.
///
/// With `a = rest + ω^e·c`:
/// `a[n] = rest + ω^e·(c−1) + ω^d·n` when `e = d + 1`, and
/// `a[n] = rest + ω^e·(c−1) + ω^(e[n])` when `e` is a limit.
/// For ε₀ the sequence is `ω↑↑n`.
pub fn fundamental_sequence(a: &ExtOrdinal, n: u64) -> Result<Ordinal, OrdinalError> {
    match a {
        ExtOrdinal::Epsilon0 => Ok(Ordinal::omega_tower(n)),
        ExtOrdinal::Ordinal(a) => limit_element(a, n),
    }
}

fn limit_element(a: &Ordinal, n: u64) -> Result<Ordinal, OrdinalError> {
    if a.classify() != OrdinalClass::Limit {
        return Err(OrdinalError::NotALimit(a.to_string()));
    }
    let mut terms = a.terms.clone();
    let last = terms.pop().expect("limit ordinals are non-zero");
    let reduced = &last.coefficient - BigUint::one();
    if !reduced.is_zero() {
        terms.push(Term {
            exponent: last.exponent.clone(),
            coefficient: reduced,
        });
    }
    let prefix = Ordinal { terms };
    let tail = match last.exponent.classify() {
        OrdinalClass::Successor => {
            let (limit, k) = last.exponent.split_finite_tail();
            let pred = limit.add(&Ordinal::from(k - BigUint::one()));
            Ordinal::monomial(pred, n)
        }
        OrdinalClass::Limit => Ordinal::omega_pow(limit_element(&last.exponent, n)?),
        OrdinalClass::Zero => unreachable!("limit ordinals end in a positive exponent"),
    };
    Ok(prefix.add(&tail))
}
