use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Ordinal, Term};

impl Ordinal {
    /// Ordinal sum. Terms of `self` below the leading exponent of `rhs` are
    /// absorbed; a term with an equal exponent merges coefficients.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= head.exponent)
            .cloned()
            .collect();
        let mut rest = rhs.terms.iter();
        match terms.last_mut() {
            Some(last) if last.exponent == head.exponent => {
                last.coefficient += &head.coefficient;
                rest.next();
            }
            _ => {}
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// Ordinal product, built term by term from left distributivity:
    /// `a·(ω^f·d) = ω^(e₁+f)·d` for `f > 0` and `a·d` scales only the
    /// leading coefficient.
    pub fn mul(&self, rhs: &Ordinal) -> Ordinal {
        if self.is_zero() || rhs.is_zero() {
            return Ordinal::zero();
        }
        let lead = &self.terms[0];
        let mut acc = Ordinal::zero();
        for t in &rhs.terms {
            let piece = if t.exponent.is_zero() {
                self.mul_natural(&t.coefficient)
            } else {
                Ordinal::monomial(lead.exponent.add(&t.exponent), t.coefficient.clone())
            };
            acc = acc.add(&piece);
        }
        acc
    }

    fn mul_natural(&self, k: &BigUint) -> Ordinal {
        if k.is_zero() || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = self.terms.clone();
        terms[0].coefficient *= k;
        Ordinal { terms }
    }

    /// Ordinal exponentiation with `0^0 = 1`.
    ///
    /// The exponent is split as `limit + n` with `n` finite; then
    /// `a^b = a^limit · a^n`. For a finite base `k ≥ 2`,
    /// `k^(ω·γ) = ω^γ`; for an infinite base with leading exponent `e`,
    /// `a^limit = ω^(e·limit)`.
    pub fn pow(&self, rhs: &Ordinal) -> Ordinal {
        if rhs.is_zero() {
            return Ordinal::one();
        }
        if self.is_zero() {
            return Ordinal::zero();
        }
        if *self == Ordinal::one() {
            return Ordinal::one();
        }
        let (limit, finite) = rhs.split_finite_tail();
        let limit_part = if limit.is_zero() {
            Ordinal::one()
        } else if self.is_finite() {
            Ordinal::omega_pow(limit.div_omega())
        } else {
            Ordinal::omega_pow(self.terms[0].exponent.mul(&limit))
        };
        limit_part.mul(&self.pow_natural(&finite))
    }

    fn pow_natural(&self, n: &BigUint) -> Ordinal {
        if let Some(k) = self.as_natural() {
            return Ordinal::from(num_traits::pow::Pow::pow(k, n));
        }
        let mut result = Ordinal::one();
        let mut base = self.clone();
        let bits = n.bits();
        for i in 0..bits {
            if n.bit(i) {
                result = result.mul(&base);
            }
            if i + 1 < bits {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Splits `self` into its limit part and trailing natural number.
    pub(crate) fn split_finite_tail(&self) -> (Ordinal, BigUint) {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => {
                let mut terms = self.terms.clone();
                let t = terms.pop().unwrap();
                (Ordinal { terms }, t.coefficient)
            }
            _ => (self.clone(), BigUint::zero()),
        }
    }

    /// For a limit `λ = ω·γ`, returns `γ`: each `ω^e` becomes `ω^(e−1)` when
    /// `e` is finite and stays `ω^e` otherwise (since `1 + e = e`).
    fn div_omega(&self) -> Ordinal {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let exponent = match t.exponent.as_natural() {
                    Some(k) => Ordinal::from(k - BigUint::one()),
                    None => t.exponent.clone(),
                };
                Term {
                    exponent,
                    coefficient: t.coefficient.clone(),
                }
            })
            .collect();
        Ordinal { terms }
    }
}

impl std::ops::Add for &Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl std::ops::Mul for &Ordinal {
    type Output = Ordinal;
    fn mul(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::mul(self, rhs)
    }
}
