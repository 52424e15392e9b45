use std::collections::HashMap;
use std::fmt;
use std::num::NonZeroU64;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `integer_part.preperiod(period)(period)…`
///
/// Terminating expansions carry the period `"0"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatingDecimal {
    pub integer_part: u64,
    pub preperiod: String,
    pub period: String,
}

/// Long division of `p/q`, stopping at the first repeated remainder. The
/// first repeat closes the shortest cycle, so both the preperiod and the
/// period come out minimal.
pub fn decimal_expansion(p: u64, q: NonZeroU64) -> RepeatingDecimal {
    let q = u128::from(q.get());
    let p = u128::from(p);
    let integer_part = (p / q) as u64;
    let mut r = p % q;
    let mut digits = String::new();
    let mut seen: HashMap<u128, usize> = HashMap::new();
    while r != 0 {
        if let Some(&start) = seen.get(&r) {
            let period = digits.split_off(start);
            return RepeatingDecimal {
                integer_part,
                preperiod: digits,
                period,
            };
        }
        seen.insert(r, digits.len());
        r *= 10;
        digits.push(char::from(b'0' + (r / q) as u8));
        r %= q;
    }
    RepeatingDecimal {
        integer_part,
        preperiod: digits,
        period: "0".to_string(),
    }
}

impl RepeatingDecimal {
    pub fn is_terminating(&self) -> bool {
        self.period == "0"
    }

    /// Sums the geometric series back into an exact fraction.
    pub fn to_rational(&self) -> BigRational {
        let ten = BigInt::from(10u32);
        let digits_value = |s: &str| -> BigInt {
            if s.is_empty() {
                BigInt::zero()
            } else {
                s.parse().expect("digit string")
            }
        };
        let pre_scale = num_traits::pow(ten.clone(), self.preperiod.len());
        let mut value = BigRational::from_integer(BigInt::from(self.integer_part))
            + BigRational::new(digits_value(&self.preperiod), pre_scale.clone());
        if !self.is_terminating() {
            let cycle = num_traits::pow(ten, self.period.len()) - BigInt::one();
            value += BigRational::new(digits_value(&self.period), pre_scale * cycle);
        }
        value
    }
}

impl fmt::Display for RepeatingDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.integer_part)?;
        if self.is_terminating() {
            if !self.preperiod.is_empty() {
                write!(f, ".{}", self.preperiod)?;
            }
            return Ok(());
        }
        write!(f, ".{}({})", self.preperiod, self.period)
    }
}
