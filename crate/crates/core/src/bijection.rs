//! Countability constructions: Cantor pairing, the ℤ ↔ ℕ and ℚ ↔ ℕ
//! hotel assignments, digit interleaving, the tan bijection `(0,1) → ℝ`,
//! diagonalization over digit matrices and subset tables, and finite power
//! sets.
//!
//! Real-number prefixes are raw digit strings. Dual decimal expansions
//! (`0.0999… = 0.1000…`) are not identified, so a diagonal built from
//! strings is fresh as a string; the classical argument additionally avoids
//! producing 0s and 9s to rule out that ambiguity.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BijectionError {
    #[error("x must lie strictly between 0 and 1, got {0}")]
    Domain(f64),
    #[error("row {row} has {len} digits but needs at least {needed}")]
    MalformedMatrix { row: usize, len: usize, needed: usize },
    #[error("row {row} has {len} entries but needs at least {needed}")]
    MalformedTable { row: usize, len: usize, needed: usize },
    #[error("invalid character {ch:?} on line {line}")]
    InvalidChar { line: usize, ch: char },
    #[error("row {row} holds {digit}, which is not a decimal digit")]
    InvalidDigit { row: usize, digit: u8 },
    #[error("digit strings have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("{0} elements exceed the power-set guard of {1}")]
    TooLarge(usize, usize),
}

/// `n(p, q) = (p+q)(p+q+1)/2 + q`
pub fn cantor_pair(p: &BigUint, q: &BigUint) -> BigUint {
    let s = p + q;
    ((&s * (&s + 1u32)) >> 1) + q
}

/// Inverse of [`cantor_pair`], using an exact integer square root for
/// `w = ⌊(√(8n+1) − 1)/2⌋`.
pub fn cantor_unpair(n: &BigUint) -> (BigUint, BigUint) {
    let root = (n * 8u32 + 1u32).sqrt();
    let w = (root - 1u32) >> 1;
    let triangle = (&w * &w + &w) >> 1;
    let q = n - triangle;
    let p = w - &q;
    (p, q)
}

/// Hotel room for an integer guest: `0 → 0`, `k > 0 → 2k − 1`, `k < 0 → −2k`.
pub fn int_to_nat(k: &BigInt) -> BigUint {
    let mag = k.magnitude();
    match k.sign() {
        Sign::NoSign => BigUint::zero(),
        Sign::Plus => (mag << 1) - 1u32,
        Sign::Minus => mag << 1,
    }
}

/// Inverse of [`int_to_nat`].
pub fn nat_to_int(n: &BigUint) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    let half = BigInt::from((n + 1u32) >> 1);
    if n.bit(0) {
        half
    } else {
        -BigInt::from(n >> 1)
    }
}

/// The first `count` pairs `(p, q)` read as `p/q` along the diagonals
/// `p + q = 0, 1, 2, …`, keeping duplicates and zero denominators:
/// `0/0, 1/0, 0/1, 2/0, 1/1, 0/2, …`.
pub fn enumerate_rationals(count: usize) -> Vec<(u64, u64)> {
    let mut out = Vec::with_capacity(count);
    let mut sum = 0u64;
    'outer: loop {
        for q in 0..=sum {
            if out.len() == count {
                break 'outer;
            }
            out.push((sum - q, q));
        }
        sum += 1;
    }
    out
}

/// The first `count` integers in hotel order: `0, +1, −1, +2, −2, …`.
pub fn enumerate_integers(count: usize) -> Vec<i64> {
    (0..count as i64)
        .map(|n| if n % 2 == 1 { (n + 1) / 2 } else { -(n / 2) })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Newcomers {
    One,
    Omega,
}

/// Who moves where when newcomers arrive at a full hotel, observed on the
/// first `window` guests of each party.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HotelMapping {
    pub newcomers: Newcomers,
    /// `(guest, new room)` for the existing guests.
    pub old: Vec<(u64, u64)>,
    /// `(guest, room)` for the arrivals.
    pub new: Vec<(u64, u64)>,
}

impl HotelMapping {
    /// Every room in `0..len` is used exactly once.
    pub fn is_bijective_on_window(&self) -> bool {
        let total = self.old.len() + self.new.len();
        let mut seen = vec![false; total];
        for &(_, room) in self.old.iter().chain(&self.new) {
            match seen.get_mut(room as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return false,
            }
        }
        true
    }
}

pub fn hotel_shift(window: u64, newcomers: Newcomers) -> HotelMapping {
    match newcomers {
        Newcomers::One => HotelMapping {
            newcomers,
            old: (0..window).map(|g| (g, g + 1)).collect(),
            new: if window == 0 { Vec::new() } else { vec![(0, 0)] },
        },
        Newcomers::Omega => HotelMapping {
            newcomers,
            old: (0..window).map(|g| (g, 2 * g)).collect(),
            new: (0..window).map(|g| (g, 2 * g + 1)).collect(),
        },
    }
}

/// `y(x) = tan[(π/2)(2x − 1)]`, an increasing bijection `(0, 1) → ℝ`.
pub fn tan_bijection(x: f64) -> Result<f64, BijectionError> {
    if !(x > 0.0 && x < 1.0) {
        return Err(BijectionError::Domain(x));
    }
    Ok((std::f64::consts::FRAC_PI_2 * (2.0 * x - 1.0)).tan())
}

/// Prefixes of decimal expansions `0.d₁d₂d₃…`, one per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitMatrix {
    rows: Vec<Vec<u8>>,
}

impl DigitMatrix {
    /// Row `k` must have at least `k + 1` digits.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, BijectionError> {
        for (k, row) in rows.iter().enumerate() {
            if row.len() <= k {
                return Err(BijectionError::MalformedMatrix {
                    row: k,
                    len: row.len(),
                    needed: k + 1,
                });
            }
            if let Some(&d) = row.iter().find(|&&d| d > 9) {
                return Err(BijectionError::InvalidDigit { row: k, digit: d });
            }
        }
        Ok(DigitMatrix { rows })
    }

    /// One row of ASCII digits per line; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, BijectionError> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or(BijectionError::InvalidChar { line: i + 1, ch })
                })
                .collect::<Result<Vec<u8>, _>>()?;
            rows.push(row);
        }
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }
}

/// Digit `k` of the result is `d_kk + 1`, wrapping 9 to 0.
pub fn diagonalize_digits(m: &DigitMatrix) -> String {
    m.rows
        .iter()
        .enumerate()
        .map(|(k, row)| char::from(b'0' + (row[k] + 1) % 10))
        .collect()
}

/// Membership rows `S₀, S₁, …`; entry `j` of row `n` says whether `j ∈ Sₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetTable {
    rows: Vec<Vec<bool>>,
}

impl SubsetTable {
    pub fn new(rows: Vec<Vec<bool>>) -> Result<Self, BijectionError> {
        for (k, row) in rows.iter().enumerate() {
            if row.len() <= k {
                return Err(BijectionError::MalformedTable {
                    row: k,
                    len: row.len(),
                    needed: k + 1,
                });
            }
        }
        Ok(SubsetTable { rows })
    }

    /// Lines of `Y`/`N` characters.
    pub fn parse(text: &str) -> Result<Self, BijectionError> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .chars()
                .map(|ch| match ch {
                    'Y' => Ok(true),
                    'N' => Ok(false),
                    _ => Err(BijectionError::InvalidChar { line: i + 1, ch }),
                })
                .collect::<Result<Vec<bool>, _>>()?;
            rows.push(row);
        }
        Self::new(rows)
    }

    /// Row `n` lists the binary digits of `n`, least significant first.
    pub fn binary_counting(size: usize) -> Self {
        let rows = (0..size)
            .map(|n| {
                (0..size)
                    .map(|j| j < usize::BITS as usize && (n >> j) & 1 == 1)
                    .collect()
            })
            .collect();
        SubsetTable { rows }
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }
}

/// Entry `k` of the result is the negation of row `k` at column `k`.
pub fn diagonalize_subsets(t: &SubsetTable) -> Vec<bool> {
    t.rows.iter().enumerate().map(|(k, row)| !row[k]).collect()
}

/// Renders a membership vector as `Y`/`N`.
pub fn yes_no(v: &[bool]) -> String {
    v.iter().map(|&b| if b { 'Y' } else { 'N' }).collect()
}

fn check_digits(s: &str) -> Result<(), BijectionError> {
    match s.chars().find(|c| !c.is_ascii_digit()) {
        Some(ch) => Err(BijectionError::InvalidChar { line: 1, ch }),
        None => Ok(()),
    }
}

/// `a₁b₁a₂b₂…` from `a₁a₂…` and `b₁b₂…`.
pub fn interleave(x: &str, y: &str) -> Result<String, BijectionError> {
    check_digits(x)?;
    check_digits(y)?;
    if x.len() != y.len() {
        return Err(BijectionError::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.chars().zip(y.chars()).flat_map(|(a, b)| [a, b]).collect())
}

/// Splits `a₁b₁a₂b₂…` back into `(a₁a₂…, b₁b₂…)`.
pub fn deinterleave(r: &str) -> Result<(String, String), BijectionError> {
    check_digits(r)?;
    if r.len() % 2 == 1 {
        return Err(BijectionError::LengthMismatch(r.len().div_ceil(2), r.len() / 2));
    }
    let x = r.chars().step_by(2).collect();
    let y = r.chars().skip(1).step_by(2).collect();
    Ok((x, y))
}

/// Default cap on power-set input size (2^20 subsets).
pub const POWER_SET_GUARD: usize = 20;

/// All `2^n` subsets in binary-counting order: subset `m` holds element `j`
/// exactly when bit `j` of `m` is set.
pub fn power_set<T: Clone>(elements: &[T], guard: usize) -> Result<Vec<Vec<T>>, BijectionError> {
    let n = elements.len();
    if n > guard || n >= usize::BITS as usize {
        return Err(BijectionError::TooLarge(n, guard));
    }
    Ok((0..1usize << n)
        .map(|mask| {
            elements
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect())
}
