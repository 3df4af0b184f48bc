//! Identity checks for the operator calculus.

use super::*;
use crate::check::{abbreviate, CheckOutcome};
use crate::random::{random_ints, random_poly, CheckRng};

fn compare_polys(label: &str, lhs: &Poly, rhs: &Poly) -> CheckOutcome {
    if lhs == rhs {
        CheckOutcome::pass(label, label)
    } else {
        CheckOutcome::fail(
            abbreviate(&lhs.render(), 200),
            abbreviate(&rhs.render(), 200),
            format!("{label}: difference {}", abbreviate(&(lhs - rhs).render(), 300)),
        )
    }
}

/// Checks that `(id + E_{k_{i+1}} E_{k_i}^{-1} S) V a` vanishes for every
/// adjacent pair of variables.
pub fn verify_shift_antisymmetry(a: &Poly) -> CheckOutcome {
    for i in 0..a.nvars().saturating_sub(1) {
        let r = shift_antisymmetry_residual(a, i);
        if !r.is_zero() {
            return CheckOutcome::fail(
                "0",
                abbreviate(&r.render(), 300),
                format!("pair (k{}, k{}): {}", i + 1, i + 2, abbreviate(&r.render(), 300)),
            );
        }
    }
    CheckOutcome::pass("0", "0")
}

/// Both sides of the diagonal identity for `a(y_1..y_s, k_2..k_t)`, each
/// restricted to `y_1 = … = y_s = k_2 = … = k_t`, as polynomials in one
/// variable.
pub fn diagonal_identity_sides(s: usize, t: usize, a: &Poly) -> Result<(Poly, Poly)> {
    if s < 1 || s > t {
        return Err(Error::Precondition(format!("need 1 <= s <= t, got s={s}, t={t}")));
    }
    let n = s + t - 1;
    if a.nvars() != n {
        return Err(Error::VarCountMismatch {
            left: n,
            right: a.nvars(),
        });
    }
    // variable pool: y_1..y_s in slots 0..s, k_2..k_t in slots s..n
    let y = |i: usize| i - 1;
    let k = |i: usize| s + i - 2;
    let diag = |shifts: &[i64]| -> Vec<Poly> {
        shifts
            .iter()
            .map(|&c| &Poly::var(1, 0) + &Poly::constant(1, Rational::from_integer(c)))
            .collect()
    };

    let mut lhs = a.clone();
    let mut lshift = vec![0i64; n];
    for i in 1..=s {
        lhs = small_delta(&lhs, y(i), (i - 1) as u32);
        lshift[y(i)] = (2 * s + 3 - 2 * i) as i64;
    }
    for i in 2..=t {
        lhs = small_delta(&lhs, k(i), s as u32);
        lshift[k(i)] = 2 * i as i64;
    }
    let lhs = compose(&lhs, &diag(&lshift), 1)?;

    // a(k_2, …, k_t, y_1, …, y_s)
    let map: Vec<usize> = (0..n)
        .map(|m| if m < t - 1 { k(m + 2) } else { y(m - (t - 1) + 1) })
        .collect();
    let mut rhs = a.rename_vars(n, &map)?;
    let mut rshift = vec![0i64; n];
    let mut sign_flips = 0usize;
    for i in 2..=t {
        rhs = delta(&rhs, k(i), s as u32);
        sign_flips += s;
        rshift[k(i)] = 2 * i as i64;
    }
    for i in 1..=s {
        rhs = delta(&rhs, y(i), (s - i) as u32);
        sign_flips += s - i;
        rshift[y(i)] = (2 * t + 3 - 2 * i) as i64;
    }
    let mut rhs = compose(&rhs, &diag(&rshift), 1)?;
    if sign_flips % 2 == 1 {
        rhs = -rhs;
    }
    Ok((lhs, rhs))
}

/// The diagonal identity for a polynomial `a` with the shift-antisymmetry
/// property in `s + t − 1` variables.
pub fn verify_conjecture_62(s: usize, t: usize, a: &Poly) -> Result<CheckOutcome> {
    let pre = verify_shift_antisymmetry(a);
    if !pre.passed() {
        return Err(Error::Precondition(format!(
            "input lacks the shift-antisymmetry property: {}",
            pre.witness.unwrap_or_default()
        )));
    }
    let (lhs, rhs) = diagonal_identity_sides(s, t, a)?;
    Ok(compare_polys("diagonal sides agree", &lhs, &rhs))
}

/// A random antisymmetric seed: the antisymmetrization of a random polynomial.
pub fn random_antisymmetric(rng: &mut CheckRng, nvars: usize, max_deg: i32, nterms: usize) -> Poly {
    loop {
        let p = random_poly(rng, nvars, max_deg, nterms);
        let b = crate::symmetrize::asym(&p);
        if !b.is_zero() {
            return b;
        }
    }
}

/// One randomized instance of every clause of the right-inverse identities:
/// `p` is random in `(x, y)`, `z` a random integer, and a symbolic `z` slot
/// is used where a shift acts on the constant.
pub fn check_right_inverse_identities(rng: &mut CheckRng) -> CheckOutcome {
    // slots: x = 0, y = 1, symbolic z = 2
    let n = 3;
    let (x, y, zs) = (0, 1, 2);
    let p = random_poly(rng, 2, 4, 6).rename_vars(n, &[0, 1]).expect("slots");
    let zval = random_ints(rng, 1, -6, 6)[0];
    let z = Poly::constant(n, Rational::from_integer(zval));
    let zsym = Poly::var(n, zs);
    let at = |q: &Poly, v: i64| {
        substitute(q, x, &Poly::constant(n, Rational::from_integer(v))).expect("polynomial")
    };

    let inv_d = inv_delta_once(&p, x, &z);
    let inv_sd = inv_small_delta_once(&p, x, &z);
    let parts = vec![
        compare_polys("Δ ∘ right inverse", &delta(&inv_d, x, 1), &p),
        compare_polys(
            "right inverse ∘ Δ",
            &inv_delta_once(&delta(&p, x, 1), x, &z),
            &(&p - &at(&p, zval + 1)),
        ),
        compare_polys("δ ∘ right inverse", &small_delta(&inv_sd, x, 1), &p),
        compare_polys(
            "right inverse ∘ δ",
            &inv_small_delta_once(&small_delta(&p, x, 1), x, &z),
            &(&p - &at(&p, zval - 1)),
        ),
        compare_polys("Δ = E δ", &delta(&p, x, 1), &shift(&small_delta(&p, x, 1), x, 1)),
        compare_polys(
            "Δ inverse = E_x^{-1} E_z δ inverse",
            &inv_delta_once(&p, x, &zsym),
            &shift(&shift(&inv_small_delta_once(&p, x, &zsym), x, -1), zs, 1),
        ),
        compare_polys(
            "Δ_y commutes",
            &delta(&inv_d, y, 1),
            &inv_delta_once(&delta(&p, y, 1), x, &z),
        ),
        compare_polys(
            "δ_y commutes",
            &small_delta(&inv_d, y, 1),
            &inv_delta_once(&small_delta(&p, y, 1), x, &z),
        ),
    ];
    CheckOutcome::all("right-inverse clauses", parts)
}

/// `^{𝐳}Δ_x^i = E_x^i E_{z_i}^{i+2} ⋯ E_{z_{-1}}^{1} ^{𝐳}δ_x^i` with symbolic
/// constants, for a random `p(x)` and order `i < 0`.
pub fn check_delta_to_small_delta(rng: &mut CheckRng, order: i32) -> CheckOutcome {
    assert!(order < 0);
    let m = (-order) as usize;
    let n = 1 + m;
    let p = random_poly(rng, 1, 4, 4).rename_vars(n, &[0]).expect("slots");
    let slots: Vec<usize> = (1..=m).collect();
    let consts = ConstantVector::from_vars(n, &slots);
    let lhs = inv_delta(&p, 0, &consts).expect("constants");
    let mut rhs = inv_small_delta(&p, 0, &consts).expect("constants");
    rhs = shift(&rhs, 0, order as i64);
    // slot 1 + r holds z_{i+r}
    for r in 0..m {
        let j = order + r as i32;
        rhs = shift(&rhs, 1 + r, (j + 2) as i64);
    }
    compare_polys(&format!("order {order}"), &lhs, &rhs)
}
