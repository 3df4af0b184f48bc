use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exactpoly::{Rational, XLaurent, XPoly};
use crate::linalg::{binom, det};
use crate::shiftcalc::{ext_sum, substitute, Poly};

use super::triangle::count_mt;

/// The summation operator: `A` lives in the slots `l` (one fewer than the
/// bounds `k`), and the result no longer mentions those slots.
pub fn sum_op(a: &Poly, l: &[usize], k: &[Poly]) -> Poly {
    assert_eq!(l.len() + 1, k.len(), "summation operator needs one more bound than variables");
    let m = l.len();
    if m == 0 {
        return a.clone();
    }
    let n = a.nvars();
    let last = l[m - 1];
    let lower = &k[m - 1] + &Poly::one(n);
    let first = sum_op(&ext_sum(a, last, &lower, &k[m]), &l[..m - 1], &k[..m]);
    let fixed = substitute(a, last, &k[m - 1]).expect("ordinary polynomial");
    let mut bounds = k[..m - 1].to_vec();
    bounds.push(&k[m - 1] - &Poly::one(n));
    let second = sum_op(&fixed, &l[..m - 1], &bounds);
    &first + &second
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `α(n; k_1, …, k_n)` as a polynomial in `n` variables, built by the
/// summation-operator recursion and cached per `n`.
pub fn alpha_poly(n: usize) -> Arc<Poly> {
    assert!(n >= 1, "α needs at least one variable");
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = if n == 1 {
        Poly::one(1)
    } else {
        let inner = alpha_poly(n - 1);
        let wide = 2 * n - 1;
        let lslots: Vec<usize> = (n..wide).collect();
        let lifted = inner.rename_vars(wide, &lslots).expect("slots in range");
        let bounds: Vec<Poly> = (0..n).map(|i| Poly::var(wide, i)).collect();
        let summed = sum_op(&lifted, &lslots, &bounds);
        let back: Vec<usize> = (0..wide).map(|i| if i < n { i } else { 0 }).collect();
        summed.rename_vars(n, &back).expect("slots in range")
    };
    let p = Arc::new(p);
    cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Value of `α` at any integer tuple.
pub fn alpha_eval(n: usize, k: &[i64]) -> Result<Rational> {
    if k.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: k.len(),
        });
    }
    let point: Vec<Rational> = k.iter().map(|&v| Rational::from_integer(v)).collect();
    alpha_poly(n).eval(&point)
}

/// Newton interpolation through `values[j] = p(start + j)`, as a polynomial
/// in one variable.
pub fn interpolate_univariate(start: i64, values: &[Rational]) -> Poly {
    let mut diffs = values.to_vec();
    let mut out = Poly::zero(1);
    for k in 0..values.len() {
        if !diffs[0].is_zero() {
            out = &out + &falling_binomial(1, 0, start, k).scale(&diffs[0]);
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// `binom(x_var − b, j)` as a polynomial.
fn falling_binomial(nvars: usize, var: usize, b: i64, j: usize) -> Poly {
    let x = Poly::var(nvars, var);
    let mut acc = Poly::one(nvars);
    for r in 0..j as i64 {
        let factor = &x - &Poly::constant(nvars, Rational::from_integer(b + r));
        acc = &acc * &factor.scale(&Rational::new(1, r + 1));
    }
    acc
}

/// `α(n; k_1, tail)` as a polynomial in `k_1` alone, interpolated from `n`
/// consecutive values. When the tail is strictly increasing the values are
/// triangle counts at `k_1 < tail[0]`, so no multivariate `α` is built.
pub fn alpha_poly_first(n: usize, tail: &[i64]) -> Result<Poly> {
    if tail.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n.saturating_sub(1),
            got: tail.len(),
        });
    }
    if n == 1 {
        return Ok(Poly::one(1));
    }
    let increasing = tail.windows(2).all(|w| w[0] < w[1]);
    let start = if increasing { tail[0] - n as i64 } else { 0 };
    let values: Vec<Rational> = (start..start + n as i64)
        .map(|k1| {
            let mut k = vec![k1];
            k.extend_from_slice(tail);
            if increasing {
                Ok(Rational::from_bigint(count_mt(&k)?.into()))
            } else {
                alpha_eval(n, &k)
            }
        })
        .collect::<Result<_>>()?;
    Ok(interpolate_univariate(start, &values))
}

/// Tensor-product Newton interpolation of degree `≤ deg` in every variable
/// from values on the grid `base_v + j`, `0 ≤ j ≤ deg`.
pub fn tensor_interpolate(base: &[i64], deg: usize, f: impl Fn(&[i64]) -> Rational) -> Poly {
    newton_expand(base, deg, &newton_table(base, deg, &f))
}

fn newton_table(base: &[i64], deg: usize, f: &impl Fn(&[i64]) -> Rational) -> Vec<Rational> {
    let nvars = base.len();
    let side = deg + 1;
    let total = side.pow(nvars as u32);
    let mut table: Vec<Rational> = (0..total)
        .map(|flat| {
            let mut r = flat;
            let mut pt = vec![0i64; nvars];
            for v in (0..nvars).rev() {
                pt[v] = base[v] + (r % side) as i64;
                r /= side;
            }
            f(&pt)
        })
        .collect();
    for v in 0..nvars {
        let stride = side.pow((nvars - 1 - v) as u32);
        // level by level: after pass `lvl`, entries with j ≥ lvl hold Δ^lvl
        for lvl in 1..side {
            for flat in (0..total).rev() {
                let j = (flat / stride) % side;
                if j >= lvl {
                    let prev = table[flat - stride].clone();
                    table[flat] = &table[flat] - &prev;
                }
            }
        }
    }
    table
}

fn newton_expand(base: &[i64], deg: usize, coeffs: &[Rational]) -> Poly {
    let nvars = base.len();
    let side = deg + 1;
    let basis: Vec<Vec<Poly>> = (0..nvars)
        .map(|v| (0..side).map(|j| falling_binomial(nvars, v, base[v], j)).collect())
        .collect();
    let mut acc = Poly::zero(nvars);
    for (flat, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut r = flat;
        let mut term = Poly::constant(nvars, c.clone());
        for v in (0..nvars).rev() {
            let j = r % side;
            r /= side;
            if j > 0 {
                term = &term * &basis[v][j];
            }
        }
        acc = &acc + &term;
    }
    acc
}

/// `α(n; ·)` reconstructed from monotone-triangle counts on a grid of
/// strictly increasing bottom rows, independent of the summation operator.
pub fn alpha_interpolated(n: usize) -> Result<Poly> {
    let spacing = n as i64;
    let base: Vec<i64> = (0..n as i64).map(|i| i * spacing).collect();
    let counts = |pt: &[i64]| -> Rational {
        let c = count_mt(pt).expect("grid rows are strictly increasing");
        Rational::from_bigint(c.into())
    };
    Ok(newton_expand(&base, n - 1, &newton_table(&base, n - 1, &counts)))
}

/// `α_m(n; k)` as a polynomial in `X`: the operator
/// `∏_{p<q} (id + E_{k_p} E_{k_q} + (X−2) E_{k_p})` applied to
/// `det(binom(k_i, j − 1 + m·[j = n]))`.
pub fn alpha_m_eval(n: usize, m: usize, k: &[i64]) -> Result<XPoly> {
    if k.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: k.len(),
        });
    }
    let mut op = XLaurent::one(n);
    let x_minus_two = XPoly::from_i64s(&[-2, 1]);
    for p in 0..n {
        for q in p + 1..n {
            let mut both = vec![0i32; n];
            both[p] = 1;
            both[q] = 1;
            let mut single = vec![0i32; n];
            single[p] = 1;
            let factor = &(&XLaurent::one(n) + &XLaurent::term(&both, XPoly::one()))
                + &XLaurent::term(&single, x_minus_two.clone());
            op = &op * &factor;
        }
    }
    let mut acc = XPoly::zero();
    for (mono, c) in op.terms() {
        let shifted: Vec<i64> = k.iter().zip(mono.exps()).map(|(&a, &e)| a + e as i64).collect();
        let matrix: Vec<Vec<Rational>> = shifted
            .iter()
            .map(|&ki| {
                (0..n)
                    .map(|j| {
                        let col = j + if j == n - 1 { m } else { 0 };
                        binom(ki, col as i64)
                    })
                    .collect()
            })
            .collect();
        let d = det(&matrix);
        if !d.is_zero() {
            acc = &acc + &c.scale(&d);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha_eval(3, &[1, 2, 3]).unwrap(), q(7));
        assert_eq!(alpha_eval(2, &[2, 4]).unwrap(), q(3));
        assert_eq!(alpha_eval(2, &[0, 2]).unwrap(), q(3));
        assert_eq!(alpha_eval(1, &[9]).unwrap(), q(1));
        assert!(alpha_eval(2, &[1]).is_err());
    }

    #[test]
    fn symbolic_matches_interpolation() {
        for n in 1..=4 {
            assert_eq!(*alpha_poly(n), alpha_interpolated(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn first_variable_interpolation() {
        let p = alpha_poly_first(2, &[4]).unwrap();
        let five_minus_k = &Poly::constant(1, q(5)) - &Poly::var(1, 0);
        assert_eq!(p, five_minus_k);
        assert_eq!(alpha_poly_first(1, &[]).unwrap(), Poly::one(1));
        // a non-increasing tail goes through the symbolic route
        let rev = alpha_poly_first(3, &[6, 4]).unwrap();
        for k1 in -2..=3 {
            assert_eq!(rev.eval(&[q(k1)]).unwrap(), alpha_eval(3, &[k1, 6, 4]).unwrap());
        }
        let counted = alpha_poly_first(4, &[2, 5, 7]).unwrap();
        let a4 = alpha_poly(4);
        let symbolic = a4
            .specialize(&[(1, q(2)), (2, q(5)), (3, q(7))])
            .unwrap()
            .rename_vars(1, &[0, 0, 0, 0])
            .unwrap();
        assert_eq!(counted, symbolic);
        let p3 = alpha_poly_first(3, &[4, 6]).unwrap();
        for k1 in 2..=4 {
            assert_eq!(p3.eval(&[q(k1)]).unwrap(), alpha_eval(3, &[k1, 4, 6]).unwrap());
        }
    }

    #[test]
    fn weighted_alpha() {
        assert_eq!(alpha_m_eval(1, 2, &[4]).unwrap(), XPoly::constant(q(6)));
        let one = q(1);
        assert_eq!(alpha_m_eval(2, 0, &[0, 2]).unwrap().eval(&one), q(3));
        assert_eq!(alpha_m_eval(3, 0, &[1, 2, 3]).unwrap().eval(&one), q(7));
    }
}
