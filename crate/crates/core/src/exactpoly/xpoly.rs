//! Dense univariate polynomials in the statistic variable `X`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;

/// A polynomial `c_0 + c_1 X + ... + c_d X^d` with exact rational coefficients.
///
/// Canonical form has no trailing zero coefficients; the zero polynomial is the
/// empty coefficient list and has degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<Rational>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::constant(Rational::ONE)
    }

    /// The variable `X`.
    pub fn x() -> Self {
        XPoly::from_coeffs(vec![Rational::ZERO, Rational::ONE])
    }

    pub fn constant(c: Rational) -> Self {
        XPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        XPoly::from_coeffs(cs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `X^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or(Rational::ZERO)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::ZERO),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or(Rational::ZERO)
    }

    pub fn scale(&self, c: &Rational) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::ZERO, |acc, c| &(&acc * x) + c)
    }

    /// Exact polynomial division; `None` if `rhs` is zero or does not divide.
    pub fn div_exact(&self, rhs: &XPoly) -> Option<XPoly> {
        let dr = rhs.degree()?;
        if self.is_zero() {
            return Some(XPoly::zero());
        }
        let dn = self.degree().unwrap();
        if dn < dr {
            return None;
        }
        let lead = rhs.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::ZERO; dn - dr + 1];
        for k in (0..=dn - dr).rev() {
            let c = &rem[k + dr] / &lead;
            if !c.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * b);
                }
            }
            quot[k] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(XPoly::from_coeffs(quot))
        } else {
            None
        }
    }
}

impl<'a> Add<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        XPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![Rational::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for XPoly {
    type Output = XPoly;
    fn add(self, rhs: XPoly) -> XPoly {
        &self + &rhs
    }
}

impl Sub for XPoly {
    type Output = XPoly;
    fn sub(self, rhs: XPoly) -> XPoly {
        &self - &rhs
    }
}

impl Mul for XPoly {
    type Output = XPoly;
    fn mul(self, rhs: XPoly) -> XPoly {
        &self * &rhs
    }
}

impl From<Rational> for XPoly {
    fn from(c: Rational) -> Self {
        XPoly::constant(c)
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_zero_has_no_degree() {
        let p = XPoly::from_i64s(&[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(XPoly::from_i64s(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn product_and_division() {
        let a = XPoly::from_i64s(&[-1, 1]); // X - 1
        let b = XPoly::from_i64s(&[1, 1]); // X + 1
        let p = &a * &b;
        assert_eq!(p, XPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(p.div_exact(&a), Some(b));
        assert_eq!(XPoly::from_i64s(&[1, 0, 1]).div_exact(&a), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(XPoly::from_i64s(&[1, -1, 2]).to_string(), "2*X^2 - X + 1");
        assert_eq!(XPoly::from_i64s(&[0, -1]).to_string(), "-X");
        assert_eq!(XPoly::x().eval(&Rational::from_integer(3)), Rational::from_integer(3));
    }
}
