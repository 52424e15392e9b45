//! Hyperoperations `a[n]b` with a digit guard.
//!
//! `a[1]b = a + b`, `a[2]b = a·b`, `a[3]b = a^b`, and for `n ≥ 4`
//! `a[n]b = a[n−1](a[n](b−1))`, folded from the right. For `n ≥ 3` this is
//! `a` followed by `n − 2` Knuth up-arrows and then `b`.
//!
//! Values are tracked as a [`Magnitude`]: exact while the decimal expansion
//! fits under the guard, then as `log10 x`, then as `log10 log10 x`, and
//! finally as "beyond" once even the double logarithm leaves `f64` range.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Default cap on the number of decimal digits of an exact result.
pub const DEFAULT_GUARD_DIGITS: u64 = 10_000_000;

/// Above this operator index every non-degenerate call is out of reach.
const MAX_OP_INDEX: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HyperError {
    #[error("operator index must be at least 1")]
    InvalidOp,
    #[error("digit guard must be positive")]
    InvalidGuard,
    #[error("digit count of {0} is too large to represent")]
    NotEstimable(HyperCall),
    #[error("Graham levels start at 1")]
    InvalidLevel,
}

/// `base[op]height`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperCall {
    pub base: BigUint,
    pub op: u64,
    pub height: BigUint,
}

impl HyperCall {
    pub fn new(base: impl Into<BigUint>, op: u64, height: impl Into<BigUint>) -> Self {
        HyperCall {
            base: base.into(),
            op,
            height: height.into(),
        }
    }
}

impl fmt::Display for HyperCall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]{}", self.base, self.op, self.height)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum HyperResult {
    Exact(BigUint),
    /// `log10` of the number of decimal digits.
    DigitEstimate { log10_digits: f64 },
    Symbolic(HyperCall),
}

/// Guard on the decimal length of exact results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigitGuard(u64);

impl DigitGuard {
    pub fn new(digits: u64) -> Result<Self, HyperError> {
        if digits == 0 {
            return Err(HyperError::InvalidGuard);
        }
        Ok(DigitGuard(digits))
    }

    pub fn digits(self) -> u64 {
        self.0
    }
}

impl Default for DigitGuard {
    fn default() -> Self {
        DigitGuard(DEFAULT_GUARD_DIGITS)
    }
}

/// Size of a non-negative integer at the coarsest resolution still available.
#[derive(Debug, Clone, PartialEq)]
pub enum Magnitude {
    Exact(BigUint),
    /// `log10 x`
    Log(f64),
    /// `log10 log10 x`
    LogLog(f64),
    Beyond,
}

/// Evaluates `a[n]b`, returning the exact value when it has at most
/// `guard` decimal digits.
pub fn hyper(
    a: &BigUint,
    n: u64,
    b: &BigUint,
    guard: DigitGuard,
) -> Result<HyperResult, HyperError> {
    let mag = magnitude(a, n, b, guard)?;
    Ok(match mag {
        Magnitude::Exact(v) => {
            if decimal_digits(&v) <= guard.0 {
                HyperResult::Exact(v)
            } else {
                HyperResult::DigitEstimate {
                    log10_digits: (decimal_digits(&v) as f64).log10(),
                }
            }
        }
        Magnitude::Log(l) => HyperResult::DigitEstimate {
            log10_digits: (l.floor() + 1.0).log10(),
        },
        Magnitude::LogLog(ll) => HyperResult::DigitEstimate { log10_digits: ll },
        Magnitude::Beyond => HyperResult::Symbolic(HyperCall::new(a.clone(), n, b.clone())),
    })
}

/// Number of decimal digits of `a[n]b`, exact whenever the value itself is
/// evaluable under the default guard.
pub fn digit_estimate(a: &BigUint, n: u64, b: &BigUint) -> Result<f64, HyperError> {
    let not_estimable = || HyperError::NotEstimable(HyperCall::new(a.clone(), n, b.clone()));
    match magnitude(a, n, b, DigitGuard::default())? {
        Magnitude::Exact(v) => Ok(decimal_digits(&v) as f64),
        Magnitude::Log(l) => Ok(l.floor() + 1.0),
        Magnitude::LogLog(ll) => {
            let digits = 10f64.powf(ll);
            if digits.is_finite() {
                Ok(digits)
            } else {
                Err(not_estimable())
            }
        }
        Magnitude::Beyond => Err(not_estimable()),
    }
}

/// Magnitude of `a[n]b` under the given guard.
pub fn magnitude(
    a: &BigUint,
    n: u64,
    b: &BigUint,
    guard: DigitGuard,
) -> Result<Magnitude, HyperError> {
    if n == 0 {
        return Err(HyperError::InvalidOp);
    }
    Ok(eval(a, n, b, guard))
}

fn eval(a: &BigUint, n: u64, b: &BigUint, guard: DigitGuard) -> Magnitude {
    match n {
        1 => return Magnitude::Exact(a + b),
        2 => return Magnitude::Exact(a * b),
        _ => {}
    }
    if b.is_zero() {
        return Magnitude::Exact(BigUint::one());
    }
    if b.is_one() {
        return Magnitude::Exact(a.clone());
    }
    if a.is_zero() {
        // 0^0 = 1, so above exponentiation the value only tracks parity.
        let v = if n > 3 && !b.bit(0) { 1u32 } else { 0 };
        return Magnitude::Exact(BigUint::from(v));
    }
    if a.is_one() {
        return Magnitude::Exact(BigUint::one());
    }
    let two = BigUint::from(2u32);
    if *a == two && *b == two {
        return Magnitude::Exact(BigUint::from(4u32));
    }
    if n == 3 {
        return pow_magnitude(a, &Magnitude::Exact(b.clone()), guard);
    }
    if n > MAX_OP_INDEX {
        return Magnitude::Beyond;
    }

    let mut value = Magnitude::Exact(a.clone());
    let mut count = BigUint::one();
    while &count < b {
        value = match (&value, n - 1) {
            (_, 3) => pow_magnitude(a, &value, guard),
            (Magnitude::Exact(h), m) => eval(a, m, h, guard),
            _ => Magnitude::Beyond,
        };
        if value == Magnitude::Beyond {
            break;
        }
        count += 1u32;
    }
    value
}

/// `base^exp` for `base ≥ 2`.
fn pow_magnitude(base: &BigUint, exp: &Magnitude, guard: DigitGuard) -> Magnitude {
    let log_base = log10_big(base);
    let loglog_base = log_base.log10();
    match exp {
        Magnitude::Exact(e) => {
            let log_value = e.to_f64().unwrap_or(f64::INFINITY) * log_base;
            // One digit of slack for rounding; the exact count decides.
            if log_value < guard.0 as f64 + 1.0 {
                if let Some(e32) = e.to_u32() {
                    let v = base.pow(e32);
                    if decimal_digits(&v) <= guard.0 {
                        return Magnitude::Exact(v);
                    }
                    return Magnitude::Log(log10_big(&v));
                }
            }
            if log_value.is_finite() {
                Magnitude::Log(log_value)
            } else {
                Magnitude::LogLog(log10_big(e) + loglog_base)
            }
        }
        Magnitude::Log(l) => {
            let log_value = 10f64.powf(*l) * log_base;
            if log_value.is_finite() {
                Magnitude::Log(log_value)
            } else {
                Magnitude::LogLog(l + loglog_base)
            }
        }
        Magnitude::LogLog(ll) => {
            let inner = 10f64.powf(*ll);
            if inner.is_finite() {
                Magnitude::LogLog(inner + loglog_base)
            } else {
                Magnitude::Beyond
            }
        }
        Magnitude::Beyond => Magnitude::Beyond,
    }
}

/// `log10 x` for `x ≥ 1`, accurate to `f64` precision at any size.
pub fn log10_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).log10();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.log10() + shift as f64 * std::f64::consts::LOG10_2
}

/// Exact number of decimal digits (1 for zero).
pub fn decimal_digits(x: &BigUint) -> u64 {
    if x.bits() <= 64 {
        return x.to_string().len() as u64;
    }
    // 2^(bits−1) ≤ x < 2^bits pins the count to within one.
    let lower = ((x.bits() - 1) as f64 * std::f64::consts::LOG10_2).floor() as u64;
    let mut digits = lower.saturating_sub(1).max(1);
    let ten = BigUint::from(10u32);
    let mut threshold = ten.pow(digits as u32);
    while *x >= threshold {
        threshold *= &ten;
        digits += 1;
    }
    digits
}

/// Graham's sequence: `g_1 = 3[6]3` and `g_k = 3[g_(k−1)+2]3`.
/// Held symbolically; never evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrahamTerm {
    level: u64,
}

impl GrahamTerm {
    pub fn level(self) -> u64 {
        self.level
    }

    /// Bracket form, e.g. `3[6]3` or `3[g_63+2]3`.
    pub fn symbolic(self) -> String {
        if self.level == 1 {
            "3[6]3".to_string()
        } else {
            format!("3[g_{}+2]3", self.level - 1)
        }
    }

    pub fn describe(self) -> String {
        if self.level == 1 {
            "g_1 = 3[6]3 = 3^^^^3: 3, followed by 4 up-arrows, followed by 3".to_string()
        } else {
            let prev = self.level - 1;
            format!(
                "g_{} = 3[g_{prev}+2]3: 3, followed by g_{prev} up-arrows, followed by 3",
                self.level
            )
        }
    }
}

pub fn graham(level: u64) -> Result<GrahamTerm, HyperError> {
    if level == 0 {
        return Err(HyperError::InvalidLevel);
    }
    Ok(GrahamTerm { level })
}
