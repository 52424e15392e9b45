//! Constructions on the real line, all in exact rational arithmetic:
//! repeating decimals, Liouville- and Champernowne-style digit strings,
//! continued fractions, and covers of the rationals by intervals of
//! vanishing total length.

mod cf;
mod constants;
mod cover;
mod decimal;

use num_bigint::BigInt;

pub use cf::{
    cf_approx_irrational, cf_convergents, cf_eval, cf_of_rational, ContinuedFraction,
    MAX_FLOAT_DEPTH,
};
pub use constants::{champernowne_digits, liouville_digits};
pub use cover::{cover_measure, unit_rationals, CoverInterval, CoverMeasure, CoverSpec};
pub use decimal::{decimal_expansion, RepeatingDecimal};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealLineError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("a continued fraction needs at least one quotient")]
    EmptyContinuedFraction,
    #[error("quotient {index} is {value}; quotients after the first must be positive")]
    NonPositiveQuotient { index: usize, value: BigInt },
    #[error("denominator must be positive")]
    NonPositiveDenominator,
    #[error("{requested} quotients requested but only {reliable} are reliable in double precision")]
    PrecisionExhausted { requested: usize, reliable: usize },
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("{0}")]
    Parse(String),
}
