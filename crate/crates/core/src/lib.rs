//! Exact and numerical companions to a tour of the infinite: ordinal
//! arithmetic below ε₀, hyperoperations, infinite power towers,
//! countability bijections and diagonal arguments, and a few constructions
//! on the real line (repeating decimals, continued fractions, ε-covers).

pub mod ordinal;
pub mod hyper;
pub mod tower;
pub mod bijection;
pub mod realline;
pub mod expr;
pub mod cli;
