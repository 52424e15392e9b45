//! The infinite power tower `y = x^x^x^…`.
//!
//! The tower is the limit of `y₁ = x`, `yₙ₊₁ = x^yₙ`. It converges exactly
//! for `e^(−e) < x < e^(1/e)`; above that interval the iterates run off to
//! infinity, below it they settle into a 2-cycle. Any limit satisfies
//! `y = x^y`, which for `1 < x < e^(1/e)` has a second, repelling root.

use std::f64::consts::E;

/// `e^(−e) ≈ 0.065988`
pub fn domain_lower() -> f64 {
    (-E).exp()
}

/// `e^(1/e) ≈ 1.44467`
pub fn domain_upper() -> f64 {
    E.recip().exp()
}

/// Iterates beyond this are treated as escaping to infinity.
pub const DIVERGENCE_CEILING: f64 = 1e100;

/// Iterations before a 2-cycle may be declared.
pub const OSCILLATION_WARMUP: usize = 200;

const ROOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TowerError {
    #[error("x must be positive, got {0}")]
    Domain(f64),
    #[error("tolerance must be positive and at least 2 iterations are needed")]
    BadSettings,
    #[error("x = {0} lies outside the convergence interval (e^-e, e^(1/e)]")]
    OutOfDomain(f64),
    #[error("intermediate value {value} at step {step} left the convergence interval")]
    LeftDomain { step: usize, value: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TowerKind {
    Converged(f64),
    /// Escaped above [`DIVERGENCE_CEILING`] or never settled within the cap.
    Diverged,
    /// Even and odd iterates settle on distinct limits.
    Oscillating { lo: f64, hi: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TowerOutcome {
    pub kind: TowerKind,
    pub iterates: Vec<f64>,
    pub fixed_points: Option<FixedPoints>,
}

impl TowerOutcome {
    pub fn is_converged(&self) -> bool {
        matches!(self.kind, TowerKind::Converged(_))
    }
}

/// Roots of `y = x^y`: the attracting one and, for `1 < x ≤ e^(1/e)`, the
/// repelling one above `e`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoints {
    pub stable: f64,
    pub unstable: Option<f64>,
}

/// Runs `yₙ₊₁ = x^yₙ` from `y₁ = x`.
pub fn iterate_tower(x: f64, max_iter: usize, tol: f64) -> Result<TowerOutcome, TowerError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(TowerError::Domain(x));
    }
    if tol.is_nan() || tol <= 0.0 || max_iter < 2 {
        return Err(TowerError::BadSettings);
    }
    let mut ys = Vec::with_capacity(max_iter.min(4096));
    ys.push(x);
    let mut kind = TowerKind::Diverged;
    while ys.len() < max_iter {
        let prev = *ys.last().unwrap();
        let next = x.powf(prev);
        ys.push(next);
        if !next.is_finite() || next > DIVERGENCE_CEILING {
            kind = TowerKind::Diverged;
            break;
        }
        if (next - prev).abs() < tol {
            kind = TowerKind::Converged(next);
            break;
        }
        if ys.len() > OSCILLATION_WARMUP {
            if let Some((lo, hi)) = two_cycle(&ys, tol) {
                kind = TowerKind::Oscillating { lo, hi };
                break;
            }
        }
    }
    let fixed_points = fixed_points(x).ok();
    Ok(TowerOutcome {
        kind,
        iterates: ys,
        fixed_points,
    })
}

/// Detects a settled 2-cycle at the end of `ys`.
///
/// Each parity must have stopped moving (`|yₙ − yₙ₋₂| < tol`), the two
/// parities must sit more than `10·tol` apart, and the Aitken-extrapolated
/// limits of the two parities must still be apart. The last check separates
/// a true cycle from slow alternating convergence, where the gap between
/// parities shrinks geometrically.
fn two_cycle(ys: &[f64], tol: f64) -> Option<(f64, f64)> {
    let n = ys.len();
    if n < 6 {
        return None;
    }
    let y = |k: usize| ys[n - 1 - k];
    if (y(0) - y(2)).abs() >= tol || (y(1) - y(3)).abs() >= tol {
        return None;
    }
    let gap = (y(0) - y(1)).abs();
    if gap <= 10.0 * tol {
        return None;
    }
    let even = aitken(y(4), y(2), y(0));
    let odd = aitken(y(5), y(3), y(1));
    if (even - odd).abs() < 0.5 * gap {
        return None;
    }
    Some((y(0).min(y(1)), y(0).max(y(1))))
}

fn aitken(a: f64, b: f64, c: f64) -> f64 {
    let denom = (c - b) - (b - a);
    if denom == 0.0 {
        return c;
    }
    c - (c - b) * (c - b) / denom
}

/// `f(y) = y·ln x − ln y`, zero exactly at the roots of `y = x^y`.
fn residual(ln_x: f64, y: f64) -> f64 {
    y * ln_x - y.ln()
}

fn bisect(ln_x: f64, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = residual(ln_x, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= ROOT_TOL * mid.abs().max(1.0) * 1e-3 {
            break;
        }
        let f_mid = residual(ln_x, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Newton on `f(y) = y·ln x − ln y`, kept inside the bracket `[lo, hi]`.
fn polish(ln_x: f64, y: f64, lo: f64, hi: f64) -> f64 {
    let mut y = y;
    for _ in 0..8 {
        let f = residual(ln_x, y);
        let df = ln_x - y.recip();
        if df == 0.0 {
            break;
        }
        let next = y - f / df;
        if !(next > lo && next < hi) || (next - y).abs() <= ROOT_TOL * y {
            if next > lo && next < hi {
                y = next;
            }
            break;
        }
        y = next;
    }
    y
}

/// Both real roots of `y = x^y` for `e^(−e) < x ≤ e^(1/e)`.
pub fn fixed_points(x: f64) -> Result<FixedPoints, TowerError> {
    let lower = domain_lower();
    let upper = domain_upper();
    if x.is_nan() || x <= lower || x > upper {
        return Err(TowerError::OutOfDomain(x));
    }
    let ln_x = x.ln();
    if x == 1.0 {
        return Ok(FixedPoints {
            stable: 1.0,
            unstable: None,
        });
    }
    if x < 1.0 {
        // f is strictly decreasing, positive near 0 and negative at 1.
        let lo = f64::MIN_POSITIVE;
        let y = polish(ln_x, bisect(ln_x, lo, 1.0), lo, 1.0);
        return Ok(FixedPoints {
            stable: y,
            unstable: None,
        });
    }
    // f is convex with its minimum at 1/ln x ≥ e; f(1) > 0 and f(e) ≤ 0.
    let f_e = residual(ln_x, E);
    if f_e >= 0.0 {
        return Ok(FixedPoints {
            stable: E,
            unstable: Some(E),
        });
    }
    let stable = polish(ln_x, bisect(ln_x, 1.0, E), 1.0, E);
    let mut hi = 2.0 * E;
    while residual(ln_x, hi) <= 0.0 {
        hi *= 2.0;
    }
    let unstable = polish(ln_x, bisect(ln_x, E, hi), E, hi);
    Ok(FixedPoints {
        stable,
        unstable: Some(unstable),
    })
}

/// `x = y^(1/y)`, the inverse of the fixed-point relation.
pub fn inverse_map(y: f64) -> Result<f64, TowerError> {
    if !y.is_finite() || y <= 0.0 {
        return Err(TowerError::Domain(y));
    }
    Ok(y.powf(y.recip()))
}

/// Applies the tower map repeatedly: `x → y(x) → y(y(x)) → …`, returning
/// `depth` values.
pub fn tower_chain(x0: f64, depth: usize) -> Result<Vec<f64>, TowerError> {
    let mut out = Vec::with_capacity(depth);
    let mut current = x0;
    for step in 0..depth {
        let next = match fixed_points(current) {
            Ok(fp) => fp.stable,
            Err(_) => {
                return Err(TowerError::LeftDomain {
                    step,
                    value: current,
                })
            }
        };
        out.push(next);
        current = next;
    }
    Ok(out)
}

/// One row of the `y(x)` plot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub x: f64,
    pub y_stable: Option<f64>,
    pub y_unstable: Option<f64>,
    pub converged: bool,
}

pub const FIGURE_CSV_HEADER: &str = "x,y_stable,y_unstable,converged";

/// Default iteration settings used to flag convergence in figure rows.
pub const FIGURE_MAX_ITER: usize = 100_000;
pub const FIGURE_TOL: f64 = 1e-10;

/// Fixed-point branches and convergence flag for each grid point, sorted by
/// `x`. Points outside the interval are flagged rather than rejected.
pub fn figure1_data(x_grid: &[f64]) -> Vec<FigureRow> {
    let mut rows: Vec<FigureRow> = x_grid
        .iter()
        .map(|&x| {
            let fp = fixed_points(x).ok();
            let converged = iterate_tower(x, FIGURE_MAX_ITER, FIGURE_TOL)
                .map(|o| o.is_converged())
                .unwrap_or(false);
            FigureRow {
                x,
                y_stable: fp.map(|f| f.stable),
                y_unstable: fp.and_then(|f| f.unstable),
                converged,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.x.total_cmp(&b.x));
    rows
}

/// Renders rows as CSV with [`FIGURE_CSV_HEADER`]; missing branches are empty cells.
pub fn figure1_csv(rows: &[FigureRow]) -> String {
    let cell = |v: Option<f64>| v.map(|v| format!("{v:.9}")).unwrap_or_default();
    let mut out = String::from(FIGURE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.x,
            cell(r.y_stable),
            cell(r.y_unstable),
            r.converged
        ));
    }
    out
}
