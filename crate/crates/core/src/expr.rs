//! Ordinal expressions.
//!
//! ```text
//! expr  := term { '+' term }
//! term  := power { '*' power }
//! power := atom [ '^' power ]
//! atom  := 'w' | 'e0' | NAT | '(' expr ')'
//! NAT   := [0-9]+
//! ```
//!
//! Whitespace is ignored everywhere. `^` is right-associative.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::ordinal::{ExtOrdinal, Ordinal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrdinalExpr {
    Nat(BigUint),
    Omega,
    Epsilon0,
    Add(Box<OrdinalExpr>, Box<OrdinalExpr>),
    Mul(Box<OrdinalExpr>, Box<OrdinalExpr>),
    Pow(Box<OrdinalExpr>, Box<OrdinalExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character position.
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: expected ", self.position)?;
        match self.expected.as_slice() {
            [one] => f.write_str(one)?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        match self.found {
            Some(c) => write!(f, ", found '{c}'"),
            None => f.write_str(", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("e0 may only stand alone, not inside arithmetic")]
    Epsilon0InArithmetic,
    #[error("result too large to represent: {0}")]
    TooLarge(String),
}

const ATOM: [&str; 4] = ["'w'", "'e0'", "number", "'('"];

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// 1-based position of the next significant character.
    fn position(&self) -> usize {
        match self.chars.get(self.pos) {
            Some(&(i, _)) => i + 1,
            None => self.chars.last().map_or(1, |&(i, _)| i + 2),
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            position: self.position(),
            expected: expected.to_vec(),
            found: self.peek(),
        }
    }

    fn expr(&mut self) -> Result<OrdinalExpr, ParseError> {
        let mut lhs = self.term()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            lhs = OrdinalExpr::Add(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<OrdinalExpr, ParseError> {
        let mut lhs = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            lhs = OrdinalExpr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<OrdinalExpr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let exponent = self.power()?;
            return Ok(OrdinalExpr::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<OrdinalExpr, ParseError> {
        match self.peek() {
            Some('w') => {
                self.pos += 1;
                Ok(OrdinalExpr::Omega)
            }
            Some('e') => {
                self.pos += 1;
                if self.peek() != Some('0') {
                    return Err(self.error(&["'0'"]));
                }
                self.pos += 1;
                Ok(OrdinalExpr::Epsilon0)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error(&["'+'", "'*'", "'^'", "')'"]));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                // Digits must be contiguous in the source, so read them unfiltered.
                let start = self.chars[self.pos].0;
                let mut digits = String::new();
                while let Some(&(i, c)) = self.chars.get(self.pos) {
                    if !c.is_ascii_digit() || i != start + digits.len() {
                        break;
                    }
                    digits.push(c);
                    self.pos += 1;
                }
                Ok(OrdinalExpr::Nat(digits.parse().expect("ascii digits")))
            }
            _ => Err(self.error(&ATOM)),
        }
    }
}

pub fn parse_ordinal(src: &str) -> Result<OrdinalExpr, ParseError> {
    let mut p = Parser {
        chars: src
            .char_indices()
            .enumerate()
            .map(|(n, (_, c))| (n, c))
            .filter(|&(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos < p.chars.len() {
        return Err(p.error(&["'+'", "'*'", "'^'", "end of input"]));
    }
    Ok(e)
}

/// Above this many bits a finite power is refused rather than computed.
const MAX_NATURAL_BITS: u64 = 1 << 20;
/// Bound on `n · (terms − 1)` when raising an infinite base to a natural `n`.
const MAX_REPEAT: u64 = 4096;

pub fn eval_ordinal(e: &OrdinalExpr) -> Result<Ordinal, EvalError> {
    Ok(match e {
        OrdinalExpr::Nat(n) => Ordinal::from(n.clone()),
        OrdinalExpr::Omega => Ordinal::omega(),
        OrdinalExpr::Epsilon0 => return Err(EvalError::Epsilon0InArithmetic),
        OrdinalExpr::Add(a, b) => eval_ordinal(a)?.add(&eval_ordinal(b)?),
        OrdinalExpr::Mul(a, b) => eval_ordinal(a)?.mul(&eval_ordinal(b)?),
        OrdinalExpr::Pow(a, b) => {
            let (base, exponent) = (eval_ordinal(a)?, eval_ordinal(b)?);
            check_power(&base, &exponent)?;
            base.pow(&exponent)
        }
    })
}

fn check_power(base: &Ordinal, exponent: &Ordinal) -> Result<(), EvalError> {
    let Some(n) = exponent.terms().last().filter(|t| t.exponent().is_zero()).map(|t| t.coefficient())
    else {
        return Ok(());
    };
    let too_large = match base.as_natural() {
        Some(k) if k.bits() <= 1 => false,
        Some(k) => (k.bits() as f64) * n.to_f64().unwrap_or(f64::INFINITY)
            > MAX_NATURAL_BITS as f64,
        // A single term stays a single term; otherwise the term count
        // grows roughly linearly in n.
        None => {
            let spread = BigUint::from(base.terms().len() - 1);
            n * spread > BigUint::from(MAX_REPEAT)
        }
    };
    if too_large {
        return Err(EvalError::TooLarge(format!("({base})^{exponent}")));
    }
    Ok(())
}

/// Like [`eval_ordinal`], but a bare `e0` evaluates to the ε₀ token.
pub fn eval_extended(e: &OrdinalExpr) -> Result<ExtOrdinal, EvalError> {
    match e {
        OrdinalExpr::Epsilon0 => Ok(ExtOrdinal::Epsilon0),
        _ => eval_ordinal(e).map(ExtOrdinal::Ordinal),
    }
}

fn prec(e: &OrdinalExpr) -> u8 {
    match e {
        OrdinalExpr::Add(..) => 1,
        OrdinalExpr::Mul(..) => 2,
        OrdinalExpr::Pow(..) => 3,
        _ => 4,
    }
}

/// Prints with the fewest parentheses that reparse to the same tree.
impl fmt::Display for OrdinalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &OrdinalExpr, min: u8| {
            if prec(e) < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            OrdinalExpr::Nat(n) => write!(f, "{n}"),
            OrdinalExpr::Omega => f.write_str("w"),
            OrdinalExpr::Epsilon0 => f.write_str("e0"),
            OrdinalExpr::Add(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(" + ")?;
                wrap(f, b, 2)
            }
            OrdinalExpr::Mul(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("*")?;
                wrap(f, b, 3)
            }
            OrdinalExpr::Pow(a, b) => {
                wrap(f, a, 4)?;
                f.write_str("^")?;
                wrap(f, b, 3)
            }
        }
    }
}
