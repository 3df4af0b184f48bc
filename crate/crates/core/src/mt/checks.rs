//! Identities satisfied by `α`.

use crate::check::{abbreviate, CheckOutcome};
use crate::error::Result;
use crate::exactpoly::Rational;
use crate::random::{random_ints, CheckRng};
use crate::shiftcalc::{
    delta, inv_delta, inv_small_delta, shift, small_delta, ConstantVector, Poly,
};

use super::alpha::{alpha_eval, alpha_poly};
use super::triangle::{enumerate_mt, MtFilter};

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn sign(odd: bool) -> Rational {
    if odd {
        int(-1)
    } else {
        int(1)
    }
}

fn eval_at(p: &Poly, k: &[i64]) -> Rational {
    let pt: Vec<Rational> = k.iter().map(|&v| int(v)).collect();
    p.eval(&pt).expect("point matches the variable count")
}

fn compare_values(label: String, lhs: Rational, rhs: Rational) -> CheckOutcome {
    if lhs == rhs {
        CheckOutcome::pass(lhs.to_string(), rhs.to_string())
    } else {
        CheckOutcome::fail(lhs.to_string(), rhs.to_string(), label)
    }
}

fn compare_polys(label: String, lhs: &Poly, rhs: &Poly) -> CheckOutcome {
    if lhs == rhs {
        CheckOutcome::pass("equal", "equal")
    } else {
        CheckOutcome::fail(
            abbreviate(&lhs.render(), 200),
            abbreviate(&rhs.render(), 200),
            format!("{label}: difference {}", abbreviate(&(lhs - rhs).render(), 300)),
        )
    }
}

/// A random strictly increasing integer row of length `n`.
pub fn random_bottom(rng: &mut CheckRng, n: usize, lo: i64, max_gap: i64) -> Vec<i64> {
    let gaps = random_ints(rng, n, 1, max_gap);
    let mut cur = lo;
    gaps.iter()
        .enumerate()
        .map(|(i, &g)| {
            if i > 0 {
                cur += g;
            }
            cur
        })
        .collect()
}

/// `α` agrees with the triangle count on random strictly increasing rows.
pub fn check_alpha_counts(rng: &mut CheckRng, n: usize, samples: usize) -> Result<CheckOutcome> {
    let mut parts = Vec::new();
    for _ in 0..samples {
        let lo = random_ints(rng, 1, -5, 5)[0];
        let k = random_bottom(rng, n, lo, 3);
        let count = int(enumerate_mt(&k, &MtFilter::default())? as i64);
        parts.push(compare_values(format!("bottom {k:?}"), alpha_eval(n, &k)?, count));
    }
    Ok(CheckOutcome::all("α vs count", parts))
}

/// `α(n; k_1..k_n) = (−1)^{n−1} α(n; k_2..k_n, k_1 − n)` and invariance under
/// a common shift, on random integer tuples.
pub fn check_cyclic_and_shift(rng: &mut CheckRng, n: usize, samples: usize) -> Result<CheckOutcome> {
    let mut parts = Vec::new();
    for _ in 0..samples {
        let k = random_ints(rng, n, -6, 6);
        let c = random_ints(rng, 1, -6, 6)[0];
        let mut rotated: Vec<i64> = k[1..].to_vec();
        rotated.push(k[0] - n as i64);
        let shifted: Vec<i64> = k.iter().map(|v| v + c).collect();
        let base = alpha_eval(n, &k)?;
        let cyc = &sign((n - 1) % 2 == 1) * &alpha_eval(n, &rotated)?;
        parts.push(compare_values(format!("cyclic at {k:?}"), base.clone(), cyc));
        parts.push(compare_values(format!("shift {c} at {k:?}"), base, alpha_eval(n, &shifted)?));
    }
    Ok(CheckOutcome::all("cyclic and shift", parts))
}

/// `(−1)^i Δ^i_{k_1} α` at `k_1` counts triangles with bottom
/// `(k_1 − 1, k_2, …)` and exactly `i + 1` left-diagonal entries equal to
/// `k_1 − 1`; the mirror statement for `δ^i_{k_n}` and the right diagonal.
pub fn check_delta_statistics(rng: &mut CheckRng, n: usize, i: u32, samples: usize) -> Result<CheckOutcome> {
    let a = alpha_poly(n);
    let left = delta(&a, 0, i).scale(&sign(i % 2 == 1));
    let right = small_delta(&a, n - 1, i);
    let mut parts = Vec::new();
    for _ in 0..samples {
        let lo = random_ints(rng, 1, -4, 4)[0];
        let k = random_bottom(rng, n, lo, 3);
        // k_1 ≤ k_2 < … : allow k_1 = k_2
        let mut kl = k.clone();
        if n > 1 && random_ints(rng, 1, 0, 1)[0] == 1 {
            kl[0] = kl[1];
        }
        let mut bottom = kl.clone();
        bottom[0] -= 1;
        let count = enumerate_mt(&bottom, &MtFilter::left_eq(i as usize + 1))?;
        parts.push(compare_values(
            format!("left diagonal at {kl:?}, i={i}"),
            eval_at(&left, &kl),
            int(count as i64),
        ));
        let mut kr = k.clone();
        if n > 1 && random_ints(rng, 1, 0, 1)[0] == 1 {
            kr[n - 1] = kr[n - 2];
        }
        let mut bottom = kr.clone();
        bottom[n - 1] += 1;
        let filter = MtFilter {
            right_diag_eq_last: Some(i as usize + 1),
            ..Default::default()
        };
        let count = enumerate_mt(&bottom, &filter)?;
        parts.push(compare_values(
            format!("right diagonal at {kr:?}, i={i}"),
            eval_at(&right, &kr),
            int(count as i64),
        ));
    }
    Ok(CheckOutcome::all("difference statistics", parts))
}

/// `^{𝐱}Δ^i` for any sign of `i`, constants ignored when `i ≥ 0`.
fn gen_delta(p: &Poly, var: usize, i: i32, xs: &ConstantVector) -> Poly {
    if i >= 0 {
        delta(p, var, i as u32)
    } else {
        inv_delta(p, var, xs).expect("constants match")
    }
}

fn gen_small_delta(p: &Poly, var: usize, i: i32, ys: &ConstantVector) -> Poly {
    if i >= 0 {
        small_delta(p, var, i as u32)
    } else {
        inv_small_delta(p, var, ys).expect("constants match")
    }
}

/// `α(n; d, 2d, …, nd)` with one slot left free: slot 0 when `free_first`,
/// otherwise the last one.
fn alpha_multiples(n: usize, d: i64, free_first: bool) -> Poly {
    let a = alpha_poly(n);
    let mut fixed = Vec::new();
    for m in 0..n {
        let keep = if free_first { m == 0 } else { m == n - 1 };
        if !keep {
            fixed.push((m, int((m as i64 + 1) * d)));
        }
    }
    a.specialize(&fixed).expect("slots in range")
}

/// Parts (1) and (2) of the reflection identity: the left-diagonal operator
/// at `k_1 = d + 1` equals the right-diagonal operator at `k_n = nd − 1`,
/// with `y_j = (n+1)d − x_j` for negative orders.
pub fn check_reflection(rng: &mut CheckRng, n: usize, d: i64, i: i32) -> CheckOutcome {
    let xs_raw = if i < 0 { random_ints(rng, (-i) as usize, -8, 8) } else { Vec::new() };
    let ys_raw: Vec<i64> = xs_raw.iter().map(|x| (n as i64 + 1) * d - x).collect();
    let left_poly = alpha_multiples(n, d, true);
    let right_poly = alpha_multiples(n, d, false);
    let xs = ConstantVector::from_ints(n, &xs_raw);
    let ys = ConstantVector::from_ints(n, &ys_raw);
    let lhs = gen_delta(&left_poly, 0, i, &xs).scale(&sign(i.rem_euclid(2) == 1));
    let rhs = gen_small_delta(&right_poly, n - 1, i, &ys);
    let mut at_l = vec![0i64; n];
    at_l[0] = d + 1;
    let mut at_r = vec![0i64; n];
    at_r[n - 1] = n as i64 * d - 1;
    compare_values(
        format!("n={n}, d={d}, i={i}, x={xs_raw:?}"),
        eval_at(&lhs, &at_l),
        eval_at(&rhs, &at_r),
    )
}

/// Parts (3) and (4): `^{𝐱}Δ^i_{k_1} α(n; k) = (−1)^{n−1} E^{i−n}_{k_1}
/// ^{𝐲}δ^i_{k_1} α(n; k_2, …, k_n, k_1)` with `y_j = x_j + j − n + 2`, as a
/// polynomial identity in `k`.
pub fn check_cyclic_operator(rng: &mut CheckRng, n: usize, i: i32) -> CheckOutcome {
    let xs_raw = if i < 0 { random_ints(rng, (-i) as usize, -8, 8) } else { Vec::new() };
    let ys_raw: Vec<i64> = xs_raw
        .iter()
        .enumerate()
        .map(|(r, x)| {
            let j = i as i64 + r as i64;
            x + j - n as i64 + 2
        })
        .collect();
    let a = alpha_poly(n);
    let xs = ConstantVector::from_ints(n, &xs_raw);
    let ys = ConstantVector::from_ints(n, &ys_raw);
    let lhs = gen_delta(&a, 0, i, &xs);
    // α(n; k_2, …, k_n, k_1): argument slot m holds k_{m+2}, the last holds k_1
    let map: Vec<usize> = (0..n).map(|m| (m + 1) % n).collect();
    let rotated = a.rename_vars(n, &map).expect("permutation of slots");
    let rhs = shift(&gen_small_delta(&rotated, 0, i, &ys), 0, (i - n as i32) as i64);
    let rhs = rhs.scale(&sign((n - 1) % 2 == 1));
    compare_polys(format!("n={n}, i={i}, x={xs_raw:?}"), &lhs, &rhs)
}

/// Both sides of the prolonged-diagonal identities for `^{𝐱}Δ^i_{k_j} α(n; k)`
/// (`second = false`) or `^{𝐱}δ^i_{k_j} α(n; k)` (`second = true`), with
/// `i < 0` and `1 ≤ j ≤ n`. Slots `0..n` hold `k_1..k_n`, slot `n + r` holds
/// the symbolic constant `x_{i+r}`.
pub fn prolonged_diagonal_sides(n: usize, i: i32, j: usize, second: bool) -> (Poly, Poly) {
    assert!(i < 0 && (1..=n).contains(&j));
    let len = (-i) as usize;
    let wide = n + len;
    let xslot = |idx: i32| n + (idx - i) as usize;
    let consts = ConstantVector::from_vars(wide, &(n..wide).collect::<Vec<_>>());
    let a = alpha_poly(n).rename_vars(wide, &(0..n).collect::<Vec<_>>()).expect("slots");
    let big = alpha_poly(n + len);
    let k = |idx: usize| idx - 1;
    let (lhs, map, sign_odd) = if !second {
        let lhs = inv_delta(&a, k(j), &consts).expect("constants");
        let map: Vec<usize> = (0..n + len)
            .map(|m| {
                if m < j {
                    m
                } else if m < j + len {
                    xslot(i + (m - j) as i32)
                } else {
                    m - len
                }
            })
            .collect();
        (lhs, map, (i.unsigned_abs() as usize * j) % 2 == 1)
    } else {
        let lhs = inv_small_delta(&a, k(j), &consts).expect("constants");
        let map: Vec<usize> = (0..n + len)
            .map(|m| {
                if m + 1 < j {
                    m
                } else if m + 1 < j + len {
                    xslot(-1 - (m + 1 - j) as i32)
                } else {
                    m - len
                }
            })
            .collect();
        let pairs = len * (len - 1) / 2;
        (lhs, map, ((j - 1) * len + pairs) % 2 == 1)
    };
    let mut rhs = big.rename_vars(wide, &map).expect("slots");
    for idx in 1..j {
        rhs = delta(&rhs, k(idx), len as u32);
    }
    for idx in j + 1..=n {
        rhs = small_delta(&rhs, k(idx), len as u32);
    }
    for r in 0..len {
        let idx = i + r as i32;
        if !second {
            rhs = small_delta(&rhs, xslot(idx), r as u32);
        } else {
            // x_{-s} carries order len − s
            rhs = delta(&rhs, xslot(idx), (len as i32 + idx) as u32);
        }
    }
    if sign_odd {
        rhs = -rhs;
    }
    (lhs, rhs)
}

/// Evaluates both prolonged-diagonal sides at random `k` and `𝐱`.
pub fn check_prolonged_diagonal(
    rng: &mut CheckRng,
    n: usize,
    i: i32,
    j: usize,
    second: bool,
    samples: usize,
) -> CheckOutcome {
    let (lhs, rhs) = prolonged_diagonal_sides(n, i, j, second);
    let wide = lhs.nvars();
    let mut parts = Vec::new();
    for _ in 0..samples {
        let pt = random_ints(rng, wide, -6, 6);
        parts.push(compare_values(
            format!("n={n}, i={i}, j={j}, point {pt:?}"),
            eval_at(&lhs, &pt),
            eval_at(&rhs, &pt),
        ));
    }
    CheckOutcome::all("prolonged diagonal", parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::rng;

    #[test]
    fn alpha_identities_small() {
        let mut r = rng(7);
        for n in 1..=4 {
            assert!(check_alpha_counts(&mut r, n, 5).unwrap().passed());
            assert!(check_cyclic_and_shift(&mut r, n, 5).unwrap().passed());
        }
        for i in 0..3 {
            assert!(check_delta_statistics(&mut r, 3, i, 4).unwrap().passed());
        }
    }

    #[test]
    fn reflection_and_cyclic_operator() {
        let mut r = rng(11);
        for n in 1..=3 {
            for d in 1..=2 {
                for i in -2..=2 {
                    let c = check_reflection(&mut r, n, d, i);
                    assert!(c.passed(), "{c:?}");
                }
            }
            for i in -2..=2 {
                let c = check_cyclic_operator(&mut r, n, i);
                assert!(c.passed(), "{c:?}");
            }
        }
    }

    #[test]
    fn prolonged_diagonal_small() {
        let mut r = rng(3);
        for n in 1..=3 {
            for i in [-1, -2] {
                for j in 1..=n {
                    for second in [false, true] {
                        let c = check_prolonged_diagonal(&mut r, n, i, j, second, 4);
                        assert!(c.passed(), "n={n} i={i} j={j} second={second}: {c:?}");
                    }
                }
            }
        }
    }
}
