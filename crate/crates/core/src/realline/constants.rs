use num_bigint::BigUint;
use num_traits::Zero;

use super::RealLineError;

/// First `n_digits` decimal digits of `x(a, b, c) = Σ_{n ≥ a} b / c^(n!)`.
///
/// Terms are summed exactly until the first one below `10^-(n_digits+1)`;
/// the remaining tail is under twice that term, and more terms are taken
/// only if the tail could still carry into the last requested digit. With
/// `a = b = 1, c = 10` this is Liouville's constant, with ones at positions
/// 1, 2, 6, 24, ….
pub fn liouville_digits(a: u64, b: u64, c: u64, n_digits: usize) -> Result<String, RealLineError> {
    if a == 0 || b == 0 || c < 2 || b >= c {
        return Err(RealLineError::InvalidParams(format!(
            "need a >= 1, b >= 1, c >= 2 and b < c; got a={a}, b={b}, c={c}"
        )));
    }
    let scale = num_traits::pow(BigUint::from(10u32), n_digits);
    let c_big = BigUint::from(c);
    let b_big = BigUint::from(b);
    // The partial sum is numer / c^exp.
    let mut numer = BigUint::zero();
    let mut exp = 0usize;
    let mut factorial = 1usize;
    for n in 1usize.. {
        factorial = factorial
            .checked_mul(n)
            .ok_or_else(|| RealLineError::InvalidParams("digit budget too large".into()))?;
        if (n as u64) < a {
            continue;
        }
        let next = factorial;
        let huge = next as f64 * (c as f64).log10() > n_digits as f64 + 20.0;
        // A lower bound on c^next that stays small when c^next is astronomically large.
        let term_denom = if huge {
            num_traits::pow(BigUint::from(10u32), n_digits + 20)
        } else {
            num_traits::pow(c_big.clone(), next)
        };
        if huge || term_denom > &scale * 10u32 {
            // Tail < 2·b/c^next; stop once it cannot change floor(sum·10^N).
            let denom = num_traits::pow(c_big.clone(), exp);
            let low = &numer * &scale / &denom;
            let high_numer = &numer * &scale * &term_denom + &b_big * 2u32 * &scale * &denom;
            let high = high_numer / (&denom * &term_denom);
            if low == high {
                return Ok(format!("{low:0>n_digits$}"));
            }
            if huge {
                return Err(RealLineError::InvalidParams(
                    "cannot resolve the requested digits".into(),
                ));
            }
        }
        numer = numer * num_traits::pow(c_big.clone(), next - exp) + &b_big;
        exp = next;
    }
    unreachable!("the factorial loop only exits by returning")
}

/// Digits of `0.start (start+1) (start+2) …`, truncated to `n_digits`.
pub fn champernowne_digits(start: u64, n_digits: usize) -> String {
    let mut out = String::with_capacity(n_digits + 20);
    let mut k = start;
    while out.len() < n_digits {
        out.push_str(&k.to_string());
        k += 1;
    }
    out.truncate(n_digits);
    out
}
