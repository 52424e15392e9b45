//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a finite sum `ω^e₁·c₁ + … + ω^eₖ·cₖ` with strictly
//! decreasing exponents `e₁ > … > eₖ` (themselves ordinals) and positive
//! arbitrary-precision coefficients. The empty sum is zero and a natural
//! number `n` is the single term `ω^0·n`.
//!
//! ε₀ itself has no such normal form. It is modelled separately by
//! [`ExtOrdinal::Epsilon0`], which may be compared and asked for its
//! fundamental sequence but never enters arithmetic.

mod arith;
mod sequence;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use sequence::fundamental_sequence;

/// One `ω^exponent · coefficient` summand of a normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: BigUint,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> &BigUint {
        &self.coefficient
    }
}

/// An ordinal strictly below ε₀, stored in Cantor normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// An [`Ordinal`] or the distinguished ε₀ marker.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtOrdinal {
    Ordinal(Ordinal),
    Epsilon0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrdinalClass {
    Zero,
    Successor,
    Limit,
}

/// Cardinality of a representable ordinal. Everything below ε₀ is countable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CardinalClass {
    Finite(BigUint),
    Aleph0,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrdinalError {
    #[error("zero coefficient in a normal-form term")]
    ZeroCoefficient,
    #[error("exponents must strictly decrease")]
    NotDecreasing,
    #[error("{0} is not a limit ordinal")]
    NotALimit(String),
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from(1u32)
    }

    /// ω
    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `ω^exponent`
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient: BigUint::one(),
            }],
        }
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn monomial(exponent: Ordinal, coefficient: impl Into<BigUint>) -> Self {
        let coefficient = coefficient.into();
        if coefficient.is_zero() {
            return Self::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs that are already
    /// in Cantor normal form.
    pub fn from_terms<I>(terms: I) -> Result<Self, OrdinalError>
    where
        I: IntoIterator<Item = (Ordinal, BigUint)>,
    {
        let mut out: Vec<Term> = Vec::new();
        for (exponent, coefficient) in terms {
            if coefficient.is_zero() {
                return Err(OrdinalError::ZeroCoefficient);
            }
            if let Some(prev) = out.last() {
                if prev.exponent <= exponent {
                    return Err(OrdinalError::NotDecreasing);
                }
            }
            out.push(Term {
                exponent,
                coefficient,
            });
        }
        Ok(Ordinal { terms: out })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for ordinals below ω.
    pub fn is_finite(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [t] => t.exponent.is_zero(),
            _ => false,
        }
    }

    /// The natural-number value of a finite ordinal.
    pub fn as_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    pub fn classify(&self) -> OrdinalClass {
        match self.terms.last() {
            None => OrdinalClass::Zero,
            Some(t) if t.exponent.is_zero() => OrdinalClass::Successor,
            Some(_) => OrdinalClass::Limit,
        }
    }

    pub fn cardinality(&self) -> CardinalClass {
        match self.as_natural() {
            Some(n) => CardinalClass::Finite(n),
            None => CardinalClass::Aleph0,
        }
    }

    /// Nesting depth of the exponent tree; naturals have depth 1, zero has 0.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    /// `self + 1`
    pub fn succ(&self) -> Self {
        self.add(&Self::one())
    }

    fn single_term_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coefficient.is_one()
    }
}

impl From<u32> for Ordinal {
    fn from(n: u32) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }
}

impl ExtOrdinal {
    pub fn classify(&self) -> OrdinalClass {
        match self {
            ExtOrdinal::Ordinal(a) => a.classify(),
            ExtOrdinal::Epsilon0 => OrdinalClass::Limit,
        }
    }

    pub fn cardinality(&self) -> CardinalClass {
        match self {
            ExtOrdinal::Ordinal(a) => a.cardinality(),
            ExtOrdinal::Epsilon0 => CardinalClass::Aleph0,
        }
    }
}

impl From<Ordinal> for ExtOrdinal {
    fn from(a: Ordinal) -> Self {
        ExtOrdinal::Ordinal(a)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtOrdinal::Ordinal(a), ExtOrdinal::Ordinal(b)) => a.cmp(b),
            (ExtOrdinal::Ordinal(_), ExtOrdinal::Epsilon0) => Ordering::Less,
            (ExtOrdinal::Epsilon0, ExtOrdinal::Ordinal(_)) => Ordering::Greater,
            (ExtOrdinal::Epsilon0, ExtOrdinal::Epsilon0) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints `w^E*C` terms joined by `" + "`, dropping `^1` and `*1`.
/// Compound exponents are parenthesised so the output parses back.
impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            if t.exponent != Ordinal::one() {
                if t.exponent.is_finite() || t.exponent.single_term_unit() {
                    write!(f, "^{}", t.exponent)?;
                } else {
                    write!(f, "^({})", t.exponent)?;
                }
            }
            if !t.coefficient.is_one() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ExtOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOrdinal::Ordinal(a) => a.fmt(f),
            ExtOrdinal::Epsilon0 => f.write_str("e0"),
        }
    }
}

impl fmt::Display for OrdinalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrdinalClass::Zero => "zero",
            OrdinalClass::Successor => "successor",
            OrdinalClass::Limit => "limit",
        })
    }
}

impl fmt::Display for CardinalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalClass::Finite(n) => write!(f, "{n}"),
            CardinalClass::Aleph0 => f.write_str("aleph0"),
        }
    }
}
