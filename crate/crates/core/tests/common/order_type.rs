//! Well-orders as explicit shapes, and a reader that recovers their order
//! type from order-theoretic facts alone.
//!
//! A shape is either empty, a single point, or a finite list of blocks
//! followed by ω copies of a tail block. Sums concatenate and products
//! substitute, so nothing here relies on normal-form arithmetic.
//!
//! The reader handles order types below ω^ω. For `S` of type `ω·β + c`:
//! the last `c` elements are exactly those with finitely many successors,
//! and `β` is the type of the elements that have no immediate predecessor.

use num_bigint::BigUint;
use transfinite::ordinal::Ordinal;

#[derive(Clone, Debug)]
pub enum Shape {
    Empty,
    Point,
    /// `heads[0] + heads[1] + … + tail + tail + …` (ω copies of `tail`).
    Node { heads: Vec<Shape>, tail: Box<Shape> },
}

impl Shape {
    pub fn sum(a: Shape, b: Shape) -> Shape {
        Shape::Node { heads: vec![a, b], tail: Box::new(Shape::Empty) }
    }

    /// `b` copies of `a`: every point of `b` is replaced by a copy of `a`.
    pub fn product(a: &Shape, b: &Shape) -> Shape {
        match b {
            Shape::Empty => Shape::Empty,
            Shape::Point => a.clone(),
            Shape::Node { heads, tail } => Shape::Node {
                heads: heads.iter().map(|h| Shape::product(a, h)).collect(),
                tail: Box::new(Shape::product(a, tail)),
            },
        }
    }

    /// `ω^k`
    pub fn omega_power(k: usize) -> Shape {
        (0..k).fold(Shape::Point, |s, _| Shape::Node { heads: Vec::new(), tail: Box::new(s) })
    }

    /// Shape for `Σ ω^i · coeffs[i]`, highest power first.
    pub fn from_coefficients(coeffs: &[u64]) -> Shape {
        let mut heads = Vec::new();
        for (k, &c) in coeffs.iter().enumerate().rev() {
            for _ in 0..c {
                heads.push(Shape::omega_power(k));
            }
        }
        Shape::Node { heads, tail: Box::new(Shape::Empty) }
    }

    fn is_empty(&self) -> bool {
        match self {
            Shape::Empty => true,
            Shape::Point => false,
            Shape::Node { heads, tail } => heads.iter().all(Shape::is_empty) && tail.is_empty(),
        }
    }

    /// `None` when infinite.
    fn size(&self) -> Option<u64> {
        match self {
            Shape::Empty => Some(0),
            Shape::Point => Some(1),
            Shape::Node { heads, tail } => {
                if !tail.is_empty() {
                    return None;
                }
                heads.iter().map(Shape::size).sum()
            }
        }
    }

    fn has_max(&self) -> bool {
        match self {
            Shape::Empty => false,
            Shape::Point => true,
            Shape::Node { heads, tail } => {
                tail.is_empty()
                    && heads.iter().rev().find(|h| !h.is_empty()).is_some_and(Shape::has_max)
            }
        }
    }

    /// Number of elements with finitely many elements above them.
    fn finite_top(&self) -> u64 {
        match self {
            Shape::Empty => 0,
            Shape::Point => 1,
            Shape::Node { heads, tail } => {
                if !tail.is_empty() {
                    return 0;
                }
                let mut count = 0;
                for h in heads.iter().rev() {
                    match h.size() {
                        Some(n) => count += n,
                        None => return count + h.finite_top(),
                    }
                }
                count
            }
        }
    }

    /// Removes the last `c` elements, all of which have finite upper sets.
    fn drop_top(&self, mut c: u64) -> Shape {
        if c == 0 {
            return self.clone();
        }
        match self {
            Shape::Empty | Shape::Point => Shape::Empty,
            Shape::Node { heads, .. } => {
                let mut heads = heads.clone();
                while c > 0 {
                    let last = heads.pop().expect("enough elements");
                    match last.size() {
                        Some(n) if n <= c => c -= n,
                        _ => {
                            heads.push(last.drop_top(c));
                            c = 0;
                        }
                    }
                }
                Shape::Node { heads, tail: Box::new(Shape::Empty) }
            }
        }
    }

    /// Sub-order of elements without an immediate predecessor, given
    /// whether the part before `self` has a largest element.
    fn limits(&self, pred_has_max: bool) -> Shape {
        match self {
            Shape::Empty => Shape::Empty,
            Shape::Point => {
                if pred_has_max {
                    Shape::Empty
                } else {
                    Shape::Point
                }
            }
            Shape::Node { heads, tail } => {
                let mut phm = pred_has_max;
                let mut out = Vec::with_capacity(heads.len() + 1);
                for h in heads {
                    out.push(h.limits(phm));
                    if !h.is_empty() {
                        phm = h.has_max();
                    }
                }
                if tail.is_empty() {
                    return Shape::Node { heads: out, tail: Box::new(Shape::Empty) };
                }
                out.push(tail.limits(phm));
                Shape::Node { heads: out, tail: Box::new(tail.limits(tail.has_max())) }
            }
        }
    }

    /// Coefficients `[c_0, c_1, …]` of the order type `Σ ω^i · c_i`.
    pub fn order_type(&self) -> Vec<u64> {
        let c = self.finite_top();
        let rest = self.drop_top(c);
        if rest.is_empty() {
            return if c == 0 { Vec::new() } else { vec![c] };
        }
        let mut coeffs = vec![c];
        coeffs.extend(rest.limits(false).order_type());
        coeffs
    }
}

/// Library ordinal from the coefficient list, built term by term.
pub fn ordinal_from_coefficients(coeffs: &[u64]) -> Ordinal {
    let terms = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c > 0)
        .map(|(k, &c)| (Ordinal::from(k as u64), BigUint::from(c)));
    Ordinal::from_terms(terms).expect("valid normal form")
}

/// Coefficient list of a library ordinal below ω^ω, or `None` otherwise.
pub fn coefficients_of(a: &Ordinal) -> Option<Vec<u64>> {
    let mut coeffs = Vec::new();
    for t in a.terms() {
        let k: usize = t.exponent().as_natural()?.try_into().ok()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, 0);
        }
        coeffs[k] = t.coefficient().try_into().ok()?;
    }
    Some(coeffs)
}

/// Lexicographic comparison from the highest power down.
pub fn compare_coefficients(a: &[u64], b: &[u64]) -> std::cmp::Ordering {
    let n = a.len().max(b.len());
    let at = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
    (0..n).rev().map(|i| at(a, i).cmp(&at(b, i))).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
}

/// Strips trailing zero coefficients.
pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}
