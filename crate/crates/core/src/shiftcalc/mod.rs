//! Shift and difference operators on ordinary multivariate polynomials,
//! extended sums and the right inverses of the difference operators.
//!
//! Polynomials are treated as functions on integer tuples; every operator
//! acts on the polynomial representation, so results stay exact.

mod checks;

use std::sync::OnceLock;

pub use checks::*;

use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, Monomial, Rational};

/// Ordinary polynomial (all exponents non-negative) over the rationals.
pub type Poly = LaurentPoly<Rational>;

/// Constants `(x_i, x_{i+1}, …, x_{-1})` of a right inverse of order `i < 0`.
///
/// Entries are polynomials so that constants may be left symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantVector {
    values: Vec<Poly>,
}

impl ConstantVector {
    pub fn new(values: Vec<Poly>) -> Self {
        ConstantVector { values }
    }

    pub fn from_ints(nvars: usize, values: &[i64]) -> Self {
        ConstantVector {
            values: values
                .iter()
                .map(|&v| Poly::constant(nvars, Rational::from_integer(v)))
                .collect(),
        }
    }

    /// `(f(i), f(i+1), …, f(-1))` for order `i < 0`.
    pub fn from_sequence(nvars: usize, order: i32, f: impl Fn(i64) -> i64) -> Self {
        let vals: Vec<i64> = (order as i64..0).map(f).collect();
        Self::from_ints(nvars, &vals)
    }

    /// Symbolic constants living in the given variable slots.
    pub fn from_vars(nvars: usize, slots: &[usize]) -> Self {
        ConstantVector {
            values: slots.iter().map(|&s| Poly::var(nvars, s)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Poly] {
        &self.values
    }

    /// Order `i = -len`.
    pub fn order(&self) -> i32 {
        -(self.values.len() as i32)
    }

    /// The tail `(x_{i+1}, …, x_{-1})`.
    pub fn tail(&self) -> ConstantVector {
        ConstantVector {
            values: self.values[1..].to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorSpec {
    /// `E_x^power`.
    Shift { var: usize, power: i64 },
    /// `Δ_x^power`, `power ≥ 0`.
    Delta { var: usize, power: i32 },
    /// `δ_x^power`, `power ≥ 0`.
    SmallDelta { var: usize, power: i32 },
    /// Right inverse `^{𝐳}Δ_x^i` with `i = -constants.len()`.
    InvDelta { var: usize, constants: ConstantVector },
    /// Right inverse `^{𝐳}δ_x^i`.
    InvSmallDelta { var: usize, constants: ConstantVector },
    /// `V_{x,y} = E_x^{-1} + E_y − E_x^{-1} E_y`.
    V { x: usize, y: usize },
    /// `W_{x,y} = id − E_y + E_x E_y`.
    W { x: usize, y: usize },
    /// `W_{x,y}^{-1} = Σ_i (−1)^i E_y^i Δ_x^i`.
    WInv { x: usize, y: usize },
    /// `S_{x,y} f(x,y) = f(y,x)`.
    Swap { x: usize, y: usize },
}

fn check_var(p: &Poly, v: usize) -> Result<()> {
    if v >= p.nvars() {
        return Err(Error::IndexOutOfRange {
            index: v,
            nvars: p.nvars(),
        });
    }
    Ok(())
}

fn check_pair(p: &Poly, x: usize, y: usize) -> Result<()> {
    check_var(p, x)?;
    check_var(p, y)?;
    if x == y {
        return Err(Error::EqualVariables(x + 1));
    }
    Ok(())
}

/// Applies any operator of the calculus.
pub fn apply(p: &Poly, op: &OperatorSpec) -> Result<Poly> {
    match op {
        OperatorSpec::Shift { var, power } => {
            check_var(p, *var)?;
            Ok(shift(p, *var, *power))
        }
        OperatorSpec::Delta { var, power } => {
            check_var(p, *var)?;
            if *power < 0 {
                return Err(Error::NegativePower(*power));
            }
            Ok(delta(p, *var, *power as u32))
        }
        OperatorSpec::SmallDelta { var, power } => {
            check_var(p, *var)?;
            if *power < 0 {
                return Err(Error::NegativePower(*power));
            }
            Ok(small_delta(p, *var, *power as u32))
        }
        OperatorSpec::InvDelta { var, constants } => {
            check_var(p, *var)?;
            inv_delta(p, *var, constants)
        }
        OperatorSpec::InvSmallDelta { var, constants } => {
            check_var(p, *var)?;
            inv_small_delta(p, *var, constants)
        }
        OperatorSpec::V { x, y } => {
            check_pair(p, *x, *y)?;
            Ok(v_op(p, *x, *y))
        }
        OperatorSpec::W { x, y } => {
            check_pair(p, *x, *y)?;
            Ok(w_op(p, *x, *y))
        }
        OperatorSpec::WInv { x, y } => {
            check_pair(p, *x, *y)?;
            Ok(w_inv(p, *x, *y))
        }
        OperatorSpec::Swap { x, y } => {
            check_pair(p, *x, *y)?;
            Ok(swap(p, *x, *y))
        }
    }
}

fn binomial_u(n: i32, k: i32) -> Rational {
    let mut acc = Rational::ONE;
    for j in 0..k {
        acc = &(&acc * &Rational::from_integer((n - j) as i64)) / &Rational::from_integer((j + 1) as i64);
    }
    acc
}

/// `E_x^c p`, i.e. `p(x + c)`, expanding each power binomially.
pub fn shift(p: &Poly, var: usize, c: i64) -> Poly {
    if c == 0 || p.is_zero() {
        return p.clone();
    }
    let n = p.nvars();
    let cr = Rational::from_integer(c);
    let mut acc = crate::exactpoly::Accumulator::with_capacity(n, p.len() * 2);
    for (m, coef) in p.terms() {
        let e = m.exps()[var];
        debug_assert!(e >= 0, "shift of a negative power");
        for j in 0..=e {
            let mut m2 = m.clone();
            m2.0[var] = j;
            let factor = &binomial_u(e, j) * &cr.pow(e - j);
            acc.add_owned(m2, coef * &factor);
        }
    }
    acc.finish()
}

/// `Δ_x^k p`.
pub fn delta(p: &Poly, var: usize, k: u32) -> Poly {
    let mut acc = p.clone();
    for _ in 0..k {
        if acc.is_zero() {
            break;
        }
        acc = &shift(&acc, var, 1) - &acc;
    }
    acc
}

/// `δ_x^k p`.
pub fn small_delta(p: &Poly, var: usize, k: u32) -> Poly {
    let mut acc = p.clone();
    for _ in 0..k {
        if acc.is_zero() {
            break;
        }
        acc = &acc - &shift(&acc, var, -1);
    }
    acc
}

/// Substitutes the polynomial `value` for variable `var`.
pub fn substitute(p: &Poly, var: usize, value: &Poly) -> Result<Poly> {
    let n = p.nvars();
    let levels = p.collect_in(var);
    let mut acc = Poly::zero(n);
    let mut power = Poly::one(n);
    let mut current = 0i32;
    for (e, coeff) in levels {
        if e < 0 {
            return Err(Error::NotPolynomial(var + 1));
        }
        while current < e {
            power = &power * value;
            current += 1;
        }
        acc = &acc + &(&coeff * &power);
    }
    Ok(acc)
}

/// Coefficients of `binom(x + 1, k + 1)` as a polynomial in `x`, ascending.
fn shifted_binomial_coeffs(k: usize) -> Vec<Rational> {
    // (x+1) x (x-1) ... (x-k+1) / (k+1)!
    let mut coeffs = vec![Rational::ONE];
    for r in 0..=k {
        let root = Rational::from_integer(1 - r as i64);
        let mut next = vec![Rational::ZERO; coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] += &(c * &root);
        }
        coeffs = next;
    }
    let fact: Rational = (1..=(k as i64 + 1)).map(Rational::from_integer).product();
    coeffs.iter().map(|c| c / &fact).collect()
}

fn shifted_binomial_poly(n: usize, var: usize, k: usize) -> Poly {
    static CACHE: OnceLock<std::sync::Mutex<Vec<Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(Vec::new()));
    let coeffs = {
        let mut guard = cache.lock().expect("binomial cache");
        while guard.len() <= k {
            let next = shifted_binomial_coeffs(guard.len());
            guard.push(next);
        }
        guard[k].clone()
    };
    let terms = coeffs.into_iter().enumerate().map(|(j, c)| {
        let mut m = Monomial::zero(n);
        m.0[var] = j as i32;
        (m, c)
    });
    Poly::from_terms(n, terms)
}

/// Newton coefficients `a_k = (Δ^k p)(0)`, so `p = Σ_k a_k binom(x, k)`.
/// Returned coefficients do not involve `var`.
pub fn binomial_basis(p: &Poly, var: usize) -> Vec<Poly> {
    let n = p.nvars();
    let zero = Poly::zero(n);
    let mut out = Vec::new();
    let mut d = p.clone();
    while !d.is_zero() {
        out.push(substitute(&d, var, &zero).expect("ordinary polynomial"));
        d = delta(&d, var, 1);
    }
    out
}

/// Discrete antiderivative `Q` with `Q(x) − Q(x−1) = p(x)` and `Q(−1) = 0`.
pub fn antiderivative(p: &Poly, var: usize) -> Poly {
    let n = p.nvars();
    let mut q = Poly::zero(n);
    for (k, a) in binomial_basis(p, var).into_iter().enumerate() {
        if !a.is_zero() {
            q = &q + &(&a * &shifted_binomial_poly(n, var, k));
        }
    }
    q
}

/// Extended sum `Σ_{x=a}^{b} p(x) = Q(b) − Q(a−1)`; the bounds are arbitrary
/// polynomials (they may mention `var` itself).
pub fn ext_sum(p: &Poly, var: usize, a: &Poly, b: &Poly) -> Poly {
    let n = p.nvars();
    let q = antiderivative(p, var);
    let a_minus_one = a - &Poly::one(n);
    let upper = substitute(&q, var, b).expect("ordinary polynomial");
    let lower = substitute(&q, var, &a_minus_one).expect("ordinary polynomial");
    &upper - &lower
}

/// `^zΔ_x^{-1} p = −Σ_{x'=x}^{z} p(x')`.
pub fn inv_delta_once(p: &Poly, var: usize, z: &Poly) -> Poly {
    let x = Poly::var(p.nvars(), var);
    -ext_sum(p, var, &x, z)
}

/// `^zδ_x^{-1} p = Σ_{x'=z}^{x} p(x')`.
pub fn inv_small_delta_once(p: &Poly, var: usize, z: &Poly) -> Poly {
    let x = Poly::var(p.nvars(), var);
    ext_sum(p, var, z, &x)
}

fn check_constants(p: &Poly, c: &ConstantVector) -> Result<()> {
    for v in c.values() {
        if v.nvars() != p.nvars() {
            return Err(Error::VarCountMismatch {
                left: p.nvars(),
                right: v.nvars(),
            });
        }
    }
    Ok(())
}

/// `^{𝐳}Δ_x^i = ^{z_i}Δ^{-1} ^{z_{i+1}}Δ^{-1} ⋯ ^{z_{-1}}Δ^{-1}` (rightmost first).
pub fn inv_delta(p: &Poly, var: usize, constants: &ConstantVector) -> Result<Poly> {
    check_constants(p, constants)?;
    let mut acc = p.clone();
    for z in constants.values().iter().rev() {
        acc = inv_delta_once(&acc, var, z);
    }
    Ok(acc)
}

/// `^{𝐳}δ_x^i`, composed like [`inv_delta`].
pub fn inv_small_delta(p: &Poly, var: usize, constants: &ConstantVector) -> Result<Poly> {
    check_constants(p, constants)?;
    let mut acc = p.clone();
    for z in constants.values().iter().rev() {
        acc = inv_small_delta_once(&acc, var, z);
    }
    Ok(acc)
}

/// `Δ_x^i` for `i ≥ 0`, or the right inverse with the given constants for `i < 0`.
pub fn delta_general(p: &Poly, var: usize, i: i32, constants: &ConstantVector) -> Result<Poly> {
    if i >= 0 {
        Ok(delta(p, var, i as u32))
    } else {
        if constants.len() != (-i) as usize {
            return Err(Error::LengthMismatch {
                expected: (-i) as usize,
                got: constants.len(),
            });
        }
        inv_delta(p, var, constants)
    }
}

/// `δ_x^i` for `i ≥ 0`, or its right inverse for `i < 0`.
pub fn small_delta_general(
    p: &Poly,
    var: usize,
    i: i32,
    constants: &ConstantVector,
) -> Result<Poly> {
    if i >= 0 {
        Ok(small_delta(p, var, i as u32))
    } else {
        if constants.len() != (-i) as usize {
            return Err(Error::LengthMismatch {
                expected: (-i) as usize,
                got: constants.len(),
            });
        }
        inv_small_delta(p, var, constants)
    }
}

pub fn v_op(p: &Poly, x: usize, y: usize) -> Poly {
    let ex = shift(p, x, -1);
    let ey = shift(p, y, 1);
    let exy = shift(&ex, y, 1);
    &(&ex + &ey) - &exy
}

pub fn w_op(p: &Poly, x: usize, y: usize) -> Poly {
    let ey = shift(p, y, 1);
    let exy = shift(&ey, x, 1);
    &(p - &ey) + &exy
}

/// Inverse of `W_{x,y}`; the series stops once `Δ_x^i p` vanishes.
pub fn w_inv(p: &Poly, x: usize, y: usize) -> Poly {
    let mut acc = Poly::zero(p.nvars());
    let mut term = p.clone();
    let mut sign = true;
    while !term.is_zero() {
        acc = if sign { &acc + &term } else { &acc - &term };
        term = shift(&delta(&term, x, 1), y, 1);
        sign = !sign;
    }
    acc
}

pub fn swap(p: &Poly, x: usize, y: usize) -> Poly {
    let mut map: Vec<usize> = (0..p.nvars()).collect();
    map.swap(x, y);
    p.rename_vars(p.nvars(), &map).expect("valid slots")
}

/// Moves polynomial arguments: the result is `p(args[0], …, args[m-1])` where
/// `p` has `m` variables and each argument is a polynomial in `nvars`
/// variables.
pub fn compose(p: &Poly, args: &[Poly], nvars: usize) -> Result<Poly> {
    if args.len() != p.nvars() {
        return Err(Error::LengthMismatch {
            expected: p.nvars(),
            got: args.len(),
        });
    }
    let mut acc = Poly::zero(nvars);
    let mut cache: Vec<Vec<Poly>> = args.iter().map(|a| vec![Poly::one(a.nvars()), a.clone()]).collect();
    for (m, c) in p.terms() {
        let mut term = Poly::constant(nvars, c.clone());
        for (v, &e) in m.exps().iter().enumerate() {
            if e < 0 {
                return Err(Error::NotPolynomial(v + 1));
            }
            let powers = &mut cache[v];
            while powers.len() <= e as usize {
                let next = &powers[powers.len() - 1] * &args[v];
                powers.push(next);
            }
            if e > 0 {
                term = &term * &powers[e as usize];
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// True if swapping each adjacent pair of variables negates `b`.
pub fn is_antisymmetric(b: &Poly) -> Option<(usize, usize)> {
    let n = b.nvars();
    for i in 0..n.saturating_sub(1) {
        if swap(b, i, i + 1) != -b {
            return Some((i + 1, i + 2));
        }
    }
    None
}

/// `a = ∏_{p<q} W_{z_q,z_p} b` for an antisymmetric seed `b`.
pub fn antisym_seed_to_a(b: &Poly) -> Result<Poly> {
    if let Some((i, j)) = is_antisymmetric(b) {
        return Err(Error::NotAntisymmetric(i, j));
    }
    let n = b.nvars();
    let mut acc = b.clone();
    for q in 1..n {
        for p in 0..q {
            acc = w_op(&acc, q, p);
        }
    }
    Ok(acc)
}

/// `(id + E_{k_{i+1}} E_{k_i}^{-1} S_{k_i,k_{i+1}}) V_{k_i,k_{i+1}} a` for slots `i, i+1`.
pub fn shift_antisymmetry_residual(a: &Poly, i: usize) -> Poly {
    let v = v_op(a, i, i + 1);
    let s = swap(&v, i, i + 1);
    let moved = shift(&shift(&s, i + 1, 1), i, -1);
    &v + &moved
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn c(n: usize, v: i64) -> Poly {
        Poly::constant(n, Rational::from_integer(v))
    }

    #[test]
    fn extended_sum_regimes() {
        let p = x(1, 0);
        assert_eq!(ext_sum(&p, 0, &c(1, 1), &c(1, 3)), c(1, 6));
        assert_eq!(ext_sum(&p, 0, &c(1, 4), &c(1, 3)), c(1, 0));
        assert_eq!(ext_sum(&p, 0, &c(1, 5), &c(1, 3)), c(1, -4));
    }

    #[test]
    fn difference_operators() {
        let p = &x(1, 0) * &x(1, 0);
        assert_eq!(delta(&p, 0, 1), &(&x(1, 0) * &c(1, 2)) + &c(1, 1));
        assert_eq!(small_delta(&p, 0, 1), &(&x(1, 0) * &c(1, 2)) - &c(1, 1));
        assert_eq!(shift(&x(1, 0), 0, -1), &x(1, 0) - &c(1, 1));
        assert!(matches!(
            apply(&p, &OperatorSpec::Delta { var: 0, power: -1 }),
            Err(Error::NegativePower(-1))
        ));
    }

    #[test]
    fn right_inverse_of_one() {
        // ^zΔ^{-1} 1 = x − z − 1, with z symbolic in slot 1
        let one = Poly::one(2);
        let got = inv_delta_once(&one, 0, &x(2, 1));
        assert_eq!(got, &(&x(2, 0) - &x(2, 1)) - &c(2, 1));
    }

    #[test]
    fn w_and_swap() {
        assert_eq!(w_op(&Poly::one(2), 0, 1), Poly::one(2));
        let p = &(&x(2, 0) * &x(2, 0)) * &x(2, 1);
        assert_eq!(w_inv(&w_op(&p, 0, 1), 0, 1), p);
        assert_eq!(w_op(&w_inv(&p, 0, 1), 0, 1), p);
        assert_eq!(swap(&p, 0, 1), &(&x(2, 1) * &x(2, 1)) * &x(2, 0));
        assert!(apply(&p, &OperatorSpec::W { x: 1, y: 1 }).is_err());
    }

    #[test]
    fn shift_antisymmetry_of_small_cases() {
        let alpha2 = &(&x(2, 1) - &x(2, 0)) + &c(2, 1);
        assert!(shift_antisymmetry_residual(&alpha2, 0).is_zero());
        assert!(!shift_antisymmetry_residual(&x(2, 0), 0).is_zero());
        let b = &x(2, 1) - &x(2, 0);
        let a = antisym_seed_to_a(&b).unwrap();
        assert_eq!(a, w_op(&b, 1, 0));
        assert!(shift_antisymmetry_residual(&a, 0).is_zero());
        assert!(antisym_seed_to_a(&x(2, 0)).is_err());
        assert!(antisym_seed_to_a(&Poly::zero(2)).unwrap().is_zero());
    }
}
