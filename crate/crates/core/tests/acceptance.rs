//! One check per acceptance criterion. Each prints a PASS or FAIL line; the
//! run exits non-zero on any FAIL outside `KNOWN_UNATTAINABLE`. Runs without
//! the libtest harness so the lines are never captured.

mod common;

use std::fmt::Write as _;
use std::num::NonZeroU64;
use std::time::{Duration, Instant};

use common::gen::random_ordinal;
use common::order_type::{coefficients_of, compare_coefficients, ordinal_from_coefficients, trim, Shape};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use transfinite::bijection::{cantor_pair, cantor_unpair, diagonalize_digits, diagonalize_subsets, DigitMatrix, SubsetTable};
use transfinite::cli::{dispatch, EXIT_OK};
use transfinite::hyper::{digit_estimate, hyper, DigitGuard, HyperResult};
use transfinite::ordinal::{fundamental_sequence, CardinalClass, ExtOrdinal, Ordinal};
use transfinite::realline::{cf_convergents, cf_eval, cf_of_rational, cover_measure, decimal_expansion, ContinuedFraction};
use transfinite::tower::{domain_lower, domain_upper, fixed_points, iterate_tower, FIGURE_MAX_ITER, FIGURE_TOL};

/// Criteria whose literal statement is false; they print FAIL with a
/// counterexample and are checked in corrected form instead.
const KNOWN_UNATTAINABLE: &[u32] = &[6];

type Outcome = Result<String, String>;

fn cli(args: &[&str]) -> String {
    let r = dispatch(std::iter::once("transfinite").chain(args.iter().copied()));
    assert_eq!(r.exit_code, EXIT_OK, "{args:?}: {}", r.stderr);
    r.stdout
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn criterion_1() -> Outcome {
    let (text, elapsed) = timed(|| cli(&["tower", "1.2", "--chain", "3"]));
    let got: Vec<f64> = text.split_whitespace().map(|v| v.parse().unwrap()).collect();
    let want = [1.257734, 1.368696, 1.710757];
    check(got.len() == 3, || format!("expected 3 values, got {text:?}"))?;
    for (g, w) in got.iter().zip(want) {
        check((g - w).abs() < 1e-5, || format!("{g} vs {w}"))?;
    }
    check(elapsed < Duration::from_millis(100), || format!("took {elapsed:?}"))?;
    Ok(format!("chain {} in {elapsed:?}", text.trim()))
}

fn criterion_2() -> Outcome {
    let fp = fixed_points(1.2).map_err(|e| e.to_string())?;
    let unstable = fp.unstable.ok_or("no unstable branch")?;
    check((fp.stable - 1.257734).abs() < 1e-5, || format!("stable {}", fp.stable))?;
    check((unstable - 14.767453).abs() < 1e-5, || format!("unstable {unstable}"))?;
    for y in [fp.stable, unstable] {
        let r = (y - 1.2f64.powf(y)).abs();
        check(r < 1e-10, || format!("residual {r:e} at {y}"))?;
    }
    Ok(format!("({:.9}, {:.9})", fp.stable, unstable))
}

fn criterion_3() -> Outcome {
    let (lo, hi) = (0.065988, 1.44467);
    let tol = 1e-3;
    let xs: Vec<f64> = (0..500).map(|i| 0.01 + 1.99 * i as f64 / 499.0).collect();
    let (classes, elapsed) = timed(|| {
        xs.iter()
            .map(|&x| iterate_tower(x, FIGURE_MAX_ITER, FIGURE_TOL).map(|o| o.is_converged()))
            .collect::<Result<Vec<bool>, _>>()
    });
    let classes = classes.map_err(|e| e.to_string())?;
    let mut skipped = 0;
    for (&x, &conv) in xs.iter().zip(&classes) {
        if (x - lo).abs() < tol || (x - hi).abs() < tol {
            skipped += 1;
            continue;
        }
        check(conv == (x > lo && x < hi), || format!("x = {x} classified converged = {conv}"))?;
    }
    check((domain_lower() - lo).abs() < tol && (domain_upper() - hi).abs() < tol, || {
        format!("analytic interval ({}, {})", domain_lower(), domain_upper())
    })?;
    check(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("500 points, {skipped} inside boundary band, {elapsed:?}"))
}

fn criterion_4() -> Outcome {
    let four = BigUint::from(4u32);
    for (n, want) in [(1, 8u32), (2, 16), (3, 256)] {
        let got = hyper(&four, n, &four, DigitGuard::default()).map_err(|e| e.to_string())?;
        check(got == HyperResult::Exact(want.into()), || format!("4[{n}]4 = {got:?}"))?;
    }
    let digits = digit_estimate(&four, 4, &four).map_err(|e| e.to_string())?;
    let stated = 1.34e154;
    check(digits / stated < 2.0 && stated / digits < 2.0, || format!("{digits:e} digits"))?;
    Ok(format!("8, 16, 256; 4[4]4 has ~{digits:.4e} digits"))
}

fn criterion_5() -> Outcome {
    let table: [(u64, u64); 15] =
        [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3), (4, 0), (3, 1), (2, 2), (1, 3), (0, 4)];
    for (room, &(p, q)) in table.iter().enumerate() {
        let got = cantor_unpair(&BigUint::from(room));
        check(got == (p.into(), q.into()), || format!("room {room}: {got:?}"))?;
    }
    let ((), elapsed) = timed(|| {
        for n in 0..1_000_000u64 {
            let n = BigUint::from(n);
            let (p, q) = cantor_unpair(&n);
            assert_eq!(cantor_pair(&p, &q), n);
        }
    });
    check(elapsed < Duration::from_secs(5), || format!("round trip took {elapsed:?}"))?;
    Ok(format!("rooms 0-14 match; 10^6 round trips in {elapsed:?}"))
}

fn criterion_6() -> Outcome {
    let w = Ordinal::omega();
    let w2 = w.pow(&Ordinal::from(2u64));
    let ww = w.pow(&w);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut literal_misses = Vec::new();
    for _ in 0..10_000 {
        let a = random_ordinal(&mut rng, 3, 6);
        check((w.add(&a) == a) == (a >= w2), || format!("w + a = a disagrees with a >= w^2 at {a}"))?;
        check(w.pow(&a) > a, || format!("w^a <= a at {a}"))?;
        let fixed = w.mul(&a) == a;
        let all_infinite = a.terms().iter().all(|t| !t.exponent().is_finite());
        check(fixed == all_infinite, || format!("corrected w*a = a form fails at {a}"))?;
        if fixed != (a >= ww) {
            literal_misses.push(a);
        }
    }

    let mut all = Vec::new();
    for c2 in 0..=5 {
        for c1 in 0..=5 {
            for c0 in 0..=5 {
                all.push(vec![c0, c1, c2]);
            }
        }
    }
    let shapes: Vec<Shape> = all.iter().map(|c| Shape::from_coefficients(c)).collect();
    let ords: Vec<Ordinal> = all.iter().map(|c| ordinal_from_coefficients(c)).collect();
    for i in 0..all.len() {
        check(shapes[i].order_type() == trim(all[i].clone()), || format!("oracle misreads {}", ords[i]))?;
        for j in 0..all.len() {
            let sum = Shape::sum(shapes[i].clone(), shapes[j].clone()).order_type();
            check(coefficients_of(&ords[i].add(&ords[j])) == Some(sum), || format!("{} + {}", ords[i], ords[j]))?;
            let prod = Shape::product(&shapes[i], &shapes[j]).order_type();
            check(coefficients_of(&ords[i].mul(&ords[j])) == Some(prod), || format!("{} * {}", ords[i], ords[j]))?;
            check(ords[i].cmp(&ords[j]) == compare_coefficients(&all[i], &all[j]), || {
                format!("cmp {} {}", ords[i], ords[j])
            })?;
        }
    }

    let above = ww.add(&Ordinal::one());
    if literal_misses.is_empty() && w.mul(&above) == above {
        return Ok("all clauses hold".into());
    }
    let mut msg = String::new();
    write!(
        msg,
        "w*a = a <=> a >= w^w is false: {} of 10^4 samples disagree (first: {}); also a = {} gives w*a = {}. \
         Verified instead: w*a = a <=> every exponent is infinite, w^w least nonzero fixed point. \
         w + a = a <=> a >= w^2, w^a > a and the order-type oracle (46656 pairs) all pass",
        literal_misses.len(),
        literal_misses.first().map(|a| a.to_string()).unwrap_or_else(|| "-".into()),
        above,
        w.mul(&above),
    )
    .unwrap();
    Err(msg)
}

fn criterion_7() -> Outcome {
    let w = Ordinal::omega();
    let mut tower = Ordinal::one();
    for n in 0..=4u64 {
        let k = Ordinal::from(n);
        let got = fundamental_sequence(&ExtOrdinal::Ordinal(w.clone()), n).map_err(|e| e.to_string())?;
        check(got == k, || format!("fs(w, {n}) = {got}"))?;
        let w2 = w.mul(&Ordinal::from(2u64));
        let got = fundamental_sequence(&ExtOrdinal::Ordinal(w2), n).map_err(|e| e.to_string())?;
        check(got == w.add(&k), || format!("fs(w*2, {n}) = {got}"))?;
        let got = fundamental_sequence(&ExtOrdinal::Epsilon0, n).map_err(|e| e.to_string())?;
        check(got == tower, || format!("fs(e0, {n}) = {got}, want {tower}"))?;
        tower = Ordinal::omega_pow(tower);
    }
    Ok(format!("n = 0..4; fs(e0, 4) = {}", fundamental_sequence(&ExtOrdinal::Epsilon0, 4).unwrap()))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut largest = 0;
    for i in 0..1000 {
        let n = if i == 0 { 500 } else { rng.gen_range(1..=500) };
        largest = largest.max(n);
        let rows: Vec<Vec<u8>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..10)).collect()).collect();
        let m = DigitMatrix::new(rows.clone()).map_err(|e| e.to_string())?;
        let d = diagonalize_digits(&m);
        for (k, row) in rows.iter().enumerate() {
            check(d.as_bytes()[k] - b'0' != row[k], || format!("matrix {i} row {k} matches the diagonal"))?;
        }
    }
    for size in [1, 3, 8, 16, 64] {
        let t: SubsetTable = SubsetTable::binary_counting(size);
        check(diagonalize_subsets(&t).iter().all(|&b| b), || format!("binary table of size {size}"))?;
    }
    Ok(format!("1000 matrices up to {largest}x{largest}; binary complement all Y"))
}

fn criterion_9() -> Outcome {
    let period = |p, q| decimal_expansion(p, NonZeroU64::new(q).unwrap()).period;
    check(period(1, 13) == "076923", || format!("1/13 period {}", period(1, 13)))?;
    check(period(8, 9) == "8", || format!("8/9 period {}", period(8, 9)))?;

    for p in 0..=1000i64 {
        for q in 1..=1000i64 {
            let cf = cf_of_rational(&BigInt::from(p), &BigInt::from(q)).map_err(|e| e.to_string())?;
            check(cf_eval(&cf) == BigRational::new(p.into(), q.into()), || format!("{p}/{q} -> {cf}"))?;
        }
    }

    let ones = ContinuedFraction::new(vec![BigInt::from(1); 11]).map_err(|e| e.to_string())?;
    let conv = cf_convergents(&ones, 11);
    let (mut a, mut b) = (1i64, 1i64);
    for (k, c) in conv.iter().enumerate() {
        check(*c == BigRational::new(b.into(), a.into()), || format!("depth {k}: {c}"))?;
        (a, b) = (b, a + b);
    }

    // Intervals only accumulate as n grows, so n = 10^4 bounds every smaller n.
    for eps in [BigRational::new(1.into(), 10.into()), BigRational::new(1.into(), 100.into())] {
        for n in [0, 1, 10, 100, 1000, 10_000] {
            let m = cover_measure(&eps, n).map_err(|e| e.to_string())?;
            check(m.union_measure <= eps && m.union_measure <= m.nominal_total, || format!("eps {eps}, n {n}"))?;
        }
    }
    Ok("periods exact; 10^6 round trips; Fibonacci through depth 10; cover <= eps".into())
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..1000 {
        let a = random_ordinal(&mut rng, 3, 6);
        let card = a.cardinality();
        let expect = match a.as_natural() {
            Some(n) => CardinalClass::Finite(n),
            None => CardinalClass::Aleph0,
        };
        check(card == expect, || format!("{a} classified as {card:?}"))?;
    }
    check(cli(&["ord", "card", "e0"]).trim() == "aleph0", || "e0 not countable".into())?;
    check(cli(&["ord", "card", "w^w^w*7 + 3"]).trim() == "aleph0", || "w^w^w*7 + 3 not countable".into())?;
    Ok("every ordinal handled is finite or aleph0; uncountable sets, large cardinals and CH are out of scope".into())
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (id, run) in criteria {
        match run() {
            Ok(detail) => {
                println!("PASS criterion {id}: {detail}");
                if KNOWN_UNATTAINABLE.contains(&id) {
                    unexpected.push(format!("criterion {id} passed but is listed as unattainable"));
                }
            }
            Err(detail) => {
                println!("FAIL criterion {id}: {detail}");
                if !KNOWN_UNATTAINABLE.contains(&id) {
                    unexpected.push(format!("criterion {id}: {detail}"));
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance results: {unexpected:#?}");
        std::process::exit(1);
    }
}
