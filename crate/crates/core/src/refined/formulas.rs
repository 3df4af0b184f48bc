use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::Rational;
use crate::linalg::binom;
use crate::mt::{alpha_poly_first, enumerate_mt, MtFilter};
use crate::shiftcalc::{delta, inv_delta, ConstantVector, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    Bstar,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::Bstar => "Bstar",
            Family::C => "C",
            Family::D => "D",
        })
    }
}

/// A table of one refined family for fixed `n` (and `d` for `C`/`D`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedFamily {
    pub family: Family,
    pub n: usize,
    pub d: Option<i64>,
    pub values: BTreeMap<i64, Rational>,
}

impl RefinedFamily {
    pub fn get(&self, i: i64) -> Result<&Rational> {
        self.values.get(&i).ok_or_else(|| Error::OutOfRange {
            what: "family index",
            detail: format!("{}_{{{},{}}} not tabulated", self.family, self.n, i),
        })
    }
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// `∏_{j=0}^{n-1} (3j+1)!/(n+j)!`, the number of `n × n` ASMs.
pub fn asm_count_formula(n: usize) -> Rational {
    let n = n as i64;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for j in 0..n {
        num *= factorial(3 * j + 1);
        den *= factorial(n + j);
    }
    &Rational::from_bigint(num) / &Rational::from_bigint(den)
}

fn vsasm_product(n: i64) -> Rational {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for j in 1..n {
        num *= BigInt::from(3 * j - 1) * factorial(2 * j - 1) * factorial(6 * j - 3);
        den *= factorial(4 * j - 2) * factorial(4 * j - 1);
    }
    &Rational::from_bigint(num) / &Rational::from_bigint(den)
}

fn b_ratio(n: i64, i: i64) -> Rational {
    let top = &binom(2 * n + i - 2, 2 * n - 1) * &binom(4 * n - i - 1, 2 * n - 1);
    &top / &binom(4 * n - 2, 2 * n - 1)
}

/// The product formula for `B_{n,i}`, evaluated for any integer `i`.
pub fn b_formula(n: usize, i: i64) -> Rational {
    let n = n as i64;
    &b_ratio(n, i) * &vsasm_product(n)
}

/// The alternating-sum formula for `B*_{n,i}`, `1 ≤ i ≤ 2n+1`.
pub fn bstar_formula(n: usize, i: i64) -> Result<Rational> {
    let nn = n as i64;
    if i < 1 || i > 2 * nn + 1 {
        return Err(Error::OutOfRange {
            what: "B* index",
            detail: format!("{i} not in 1..={}", 2 * nn + 1),
        });
    }
    let mut sum = q(0);
    for r in 1..i {
        let term = b_ratio(nn, r);
        if (i + r - 1) % 2 == 0 {
            sum = &sum + &term;
        } else {
            sum = &sum - &term;
        }
    }
    Ok(&sum * &vsasm_product(nn))
}

/// `A_{n,i}` by counting triangles with bottom `(1, …, n)` and top entry `i`.
pub fn a_brute(n: usize, i: i64) -> Result<Rational> {
    let bottom: Vec<i64> = (1..=n as i64).collect();
    Ok(Rational::from_bigint(enumerate_mt(&bottom, &MtFilter::top(i))?.into()))
}

/// `B_{n,i}` by counting triangles with bottom `(2, 4, …, 2n)` and exactly
/// `n + 1 − i` left-diagonal entries equal to 2.
pub fn b_brute(n: usize, i: i64) -> Result<Rational> {
    let bottom: Vec<i64> = (1..=n as i64).map(|j| 2 * j).collect();
    let eq = n as i64 + 1 - i;
    if eq < 1 {
        return Ok(q(0));
    }
    Ok(Rational::from_bigint(enumerate_mt(&bottom, &MtFilter::left_eq(eq as usize))?.into()))
}

pub fn family_a_brute(n: usize) -> Result<RefinedFamily> {
    let values = (1..=n as i64)
        .map(|i| Ok((i, a_brute(n, i)?)))
        .collect::<Result<_>>()?;
    Ok(RefinedFamily {
        family: Family::A,
        n,
        d: None,
        values,
    })
}

/// `A_{n,i} = C^{(1)}_{n,i-1}` for `1 ≤ i ≤ n`.
pub fn family_a_from_c(n: usize) -> Result<RefinedFamily> {
    let c = cd_numbers(n, 1, CdKind::C)?;
    let values = (1..=n as i64).map(|i| (i, c.values[&(i - 1)].clone())).collect();
    Ok(RefinedFamily {
        family: Family::A,
        n,
        d: None,
        values,
    })
}

pub fn family_b_formula(n: usize, range: std::ops::RangeInclusive<i64>) -> RefinedFamily {
    RefinedFamily {
        family: Family::B,
        n,
        d: None,
        values: range.map(|i| (i, b_formula(n, i))).collect(),
    }
}

pub fn family_b_brute(n: usize) -> Result<RefinedFamily> {
    let values = (1..=n as i64)
        .map(|i| Ok((i, b_brute(n, i)?)))
        .collect::<Result<_>>()?;
    Ok(RefinedFamily {
        family: Family::B,
        n,
        d: None,
        values,
    })
}

/// `B_{n,n−i} = C^{(2)}_{n,i}` for `−n ≤ i ≤ n−1`, so indices `1..=2n`.
pub fn family_b_from_c(n: usize) -> Result<RefinedFamily> {
    let c = cd_numbers(n, 2, CdKind::C)?;
    let nn = n as i64;
    let values = c.values.iter().map(|(&i, v)| (nn - i, v.clone())).collect();
    Ok(RefinedFamily {
        family: Family::B,
        n,
        d: None,
        values,
    })
}

pub fn family_bstar(n: usize) -> RefinedFamily {
    RefinedFamily {
        family: Family::Bstar,
        n,
        d: None,
        values: (1..=2 * n as i64 + 1)
            .map(|i| (i, bstar_formula(n, i).expect("index in range")))
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CdKind {
    /// Constants `x_j = −2j + 1`.
    C,
    /// Constants `z_j = (n+2)(d+1) + j − 5`.
    D,
}

/// The constants of the right inverse of order `i < 0` for the chosen kind.
pub fn cd_constants(kind: CdKind, n: usize, d: i64, i: i32) -> ConstantVector {
    let n = n as i64;
    match kind {
        CdKind::C => ConstantVector::from_sequence(1, i, |j| -2 * j + 1),
        CdKind::D => ConstantVector::from_sequence(1, i, move |j| (n + 2) * (d + 1) + j - 5),
    }
}

/// `(−1)^i ^{𝐜}Δ^i p` for any sign of `i` (`p` univariate), unevaluated.
pub fn signed_delta(p: &Poly, i: i32, constants: &ConstantVector) -> Poly {
    let raw = if i >= 0 {
        delta(p, 0, i as u32)
    } else {
        inv_delta(p, 0, constants).expect("univariate constants")
    };
    if i.rem_euclid(2) == 1 {
        -raw
    } else {
        raw
    }
}

/// `α(n; k_1, 2d, 3d, …, nd)` as a polynomial in `k_1`.
pub fn alpha_multiples_first(n: usize, d: i64) -> Result<Poly> {
    let tail: Vec<i64> = (2..=n as i64).map(|j| j * d).collect();
    alpha_poly_first(n, &tail)
}

/// `C^{(d)}_{n,i}` or `D^{(d)}_{n,i}` for `−n ≤ i ≤ n−1`.
pub fn cd_numbers(n: usize, d: i64, kind: CdKind) -> Result<RefinedFamily> {
    let p = alpha_multiples_first(n, d)?;
    let at = [q(d + 1)];
    let mut values = BTreeMap::new();
    for i in -(n as i32)..n as i32 {
        let consts = cd_constants(kind, n, d, i.min(-1));
        let v = signed_delta(&p, i, &consts).eval(&at)?;
        values.insert(i as i64, v);
    }
    Ok(RefinedFamily {
        family: match kind {
            CdKind::C => Family::C,
            CdKind::D => Family::D,
        },
        n,
        d: Some(d),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_formulas() {
        assert_eq!(b_formula(2, 1), q(1));
        assert_eq!(b_formula(2, 2), q(2));
        assert_eq!(b_formula(1, 1), q(1));
        let b3: Vec<Rational> = (1..=3).map(|i| b_formula(3, i)).collect();
        assert_eq!(b3, vec![q(3), q(9), q(14)]);
        assert_eq!(bstar_formula(2, 1).unwrap(), q(0));
        assert_eq!(bstar_formula(2, 2).unwrap(), q(1));
        assert_eq!(bstar_formula(2, 3).unwrap(), q(1));
        assert!(bstar_formula(2, 6).is_err());
        let asm: Vec<Rational> = (1..=5).map(asm_count_formula).collect();
        assert_eq!(asm, vec![q(1), q(2), q(7), q(42), q(429)]);
    }

    #[test]
    fn brute_force_families() {
        assert_eq!(b_brute(2, 1).unwrap(), q(1));
        assert_eq!(b_brute(2, 2).unwrap(), q(2));
        let a3 = family_a_brute(3).unwrap();
        assert_eq!(a3.values.values().cloned().collect::<Vec<_>>(), vec![q(2), q(3), q(2)]);
        assert_eq!(family_a_from_c(3).unwrap(), a3);
    }

    #[test]
    fn c_numbers() {
        for n in 1..=4 {
            let c2 = cd_numbers(n, 2, CdKind::C).unwrap();
            for i in 0..n as i64 {
                assert_eq!(c2.values[&i], b_formula(n, n as i64 - i), "n={n} i={i}");
            }
        }
        let c = cd_numbers(2, 2, CdKind::C).unwrap();
        assert_eq!(c.values[&-1], c.values[&0]);
        assert!(c.get(5).is_err());
    }
}
