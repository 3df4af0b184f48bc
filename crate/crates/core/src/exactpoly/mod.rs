//! Exact arithmetic: rationals, polynomials in `X`, and sparse Laurent
//! polynomials with a pluggable coefficient ring.

mod coeff;
mod laurent;
mod rational;
mod xpoly;

use std::collections::BTreeMap;

pub use coeff::Coeff;
pub use laurent::{LaurentPoly, LaurentPolynomial, Monomial};
pub(crate) use laurent::Accumulator;
pub use rational::{ParseRationalError, Rational};
pub use xpoly::XPoly;

use crate::error::{Error, Result};

/// Laurent polynomial with coefficients in `Q[X]`.
pub type XLaurent = LaurentPoly<XPoly>;

/// `∏_{1≤i<j≤n} (z_j − z_i)` in `n` variables.
pub fn vandermonde<C: Coeff>(n: usize) -> LaurentPoly<C> {
    let mut acc = LaurentPoly::one(n);
    for j in 1..n {
        for i in 0..j {
            acc = &acc * &difference(n, i, j);
        }
    }
    acc
}

/// `z_j − z_i`.
pub fn difference<C: Coeff>(n: usize, i: usize, j: usize) -> LaurentPoly<C> {
    &LaurentPoly::var(n, j) - &LaurentPoly::var(n, i)
}

/// Exact quotient `num / (z_j − z_i)`, by synthetic division in `z_j`.
pub fn div_difference<C: Coeff>(
    num: &LaurentPoly<C>,
    i: usize,
    j: usize,
) -> Result<LaurentPoly<C>> {
    let n = num.nvars();
    for v in [i, j] {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, nvars: n });
        }
    }
    if i == j {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero(n));
    }
    let levels: BTreeMap<i32, LaurentPoly<C>> = num.collect_in(j);
    let lo = *levels.keys().next().unwrap();
    let hi = *levels.keys().next_back().unwrap();
    let zi = Monomial::unit(n, i);
    let one = C::one();
    // num_e = q_{e-1} - z_i q_e, solved from the top level downwards
    let mut q: Vec<(i32, LaurentPoly<C>)> = Vec::new();
    let mut carry = LaurentPoly::zero(n);
    for e in (lo + 1..=hi).rev() {
        let level = levels.get(&e).cloned().unwrap_or_else(|| LaurentPoly::zero(n));
        let qe = &level + &carry.mul_term(&zi, &one);
        carry = qe.clone();
        if !qe.is_zero() {
            q.push((e - 1, qe));
        }
    }
    let bottom = levels.get(&lo).cloned().unwrap();
    let rem = &bottom + &carry.mul_term(&zi, &one);
    if !rem.is_zero() {
        let (m, c) = rem.terms().last().unwrap();
        let mut m = m.clone();
        m.0[j] = lo;
        return Err(Error::NotDivisible {
            witness: LaurentPoly::monomial(n, m, c.clone()).render(),
        });
    }
    let mut terms = Vec::new();
    for (e, level) in q {
        for (mut m, c) in level.into_terms() {
            m.0[j] = e;
            terms.push((m, c));
        }
    }
    Ok(LaurentPoly::from_terms(n, terms))
}

/// Exact quotient by the Vandermonde product, dividing by `z_j − z_i` for
/// `j` descending and `i` descending within each `j`.
pub fn div_vandermonde<C: Coeff>(num: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    let n = num.nvars();
    let mut acc = num.clone();
    for j in (1..n).rev() {
        for i in (0..j).rev() {
            acc = div_difference(&acc, i, j)?;
        }
    }
    Ok(acc)
}

/// General exact division `num / den`.
///
/// Uses leading-term division in lexicographic order. Every variable's degree
/// range of a quotient is pinned by the ranges of `num` and `den`, so a
/// quotient term outside that box proves non-divisibility.
pub fn exact_div<C: Coeff>(num: &LaurentPoly<C>, den: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    if num.nvars() != den.nvars() {
        return Err(Error::VarCountMismatch {
            left: num.nvars(),
            right: den.nvars(),
        });
    }
    let n = num.nvars();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero(n));
    }
    let mut bounds = Vec::with_capacity(n);
    for k in 0..n {
        let (nlo, nhi) = num.degree_range(k).unwrap();
        let (dlo, dhi) = den.degree_range(k).unwrap();
        bounds.push((nlo - dlo, nhi - dhi));
    }
    let not_divisible = |rem: &BTreeMap<Monomial, C>| {
        let (m, c) = rem.iter().next_back().unwrap();
        Error::NotDivisible {
            witness: LaurentPoly::monomial(n, m.clone(), c.clone()).render(),
        }
    };
    if bounds.iter().any(|(lo, hi)| lo > hi) {
        let rem: BTreeMap<Monomial, C> = num.terms().iter().cloned().collect();
        return Err(not_divisible(&rem));
    }
    let (lead_m, lead_c) = den.leading_term().unwrap().clone();
    let mut rem: BTreeMap<Monomial, C> = num.terms().iter().cloned().collect();
    let mut quotient = Vec::new();
    while let Some((m, c)) = rem.iter().next_back() {
        let qm = m.div(&lead_m);
        let in_box = qm
            .0
            .iter()
            .zip(&bounds)
            .all(|(&e, &(lo, hi))| lo <= e && e <= hi);
        let qc = match c.exact_div(&lead_c) {
            Some(qc) if in_box => qc,
            _ => return Err(not_divisible(&rem)),
        };
        for (dm, dc) in den.terms() {
            let key = dm.mul(&qm);
            let sub = dc.mul_ref(&qc);
            let entry = rem.entry(key).or_insert_with(C::zero);
            *entry = entry.sub_ref(&sub);
            if entry.is_zero() {
                let key = dm.mul(&qm);
                rem.remove(&key);
            }
        }
        quotient.push((qm, qc));
    }
    Ok(LaurentPoly::from_terms(n, quotient))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPolynomial;

    fn z(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn vandermonde_sizes() {
        assert_eq!(vandermonde::<Rational>(1), P::one(1));
        assert_eq!(vandermonde::<Rational>(2), &z(2, 1) - &z(2, 0));
        assert_eq!(vandermonde::<Rational>(3).len(), 6);
    }

    #[test]
    fn difference_quotient() {
        let num = &(&z(2, 1) * &z(2, 1)) - &(&z(2, 0) * &z(2, 0));
        assert_eq!(div_difference(&num, 0, 1).unwrap(), &z(2, 0) + &z(2, 1));
        assert!(div_difference(&P::zero(2), 0, 1).unwrap().is_zero());
        let bad = &z(2, 0) * &z(2, 1);
        assert!(matches!(div_difference(&bad, 0, 1), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn general_division() {
        let a = &(&z(3, 0) + &z(3, 2).invert_all()) - &P::constant(3, Rational::from_integer(2));
        let b = &z(3, 1) - &(&z(3, 0) * &z(3, 2));
        let prod = &a * &b;
        assert_eq!(exact_div(&prod, &b).unwrap(), a);
        assert!(exact_div(&(&prod + &P::one(3)), &b).is_err());
        assert_eq!(exact_div(&a, &P::zero(3)), Err(Error::DivisionByZero));
    }
}
