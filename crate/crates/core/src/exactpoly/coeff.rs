use std::fmt::{Debug, Display};
use std::hash::Hash;

use super::rational::Rational;
use super::xpoly::XPoly;

/// Coefficient ring for sparse polynomials.
pub trait Coeff: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// `self / rhs` when the quotient exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    /// Splits off a leading minus sign for rendering: `(negative, body)`,
    /// where `body` is empty for a unit and parenthesized when compound.
    fn render_parts(&self) -> (bool, String);

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn render_parts(&self) -> (bool, String) {
        let abs = self.abs();
        let body = if abs.is_one() { String::new() } else { abs.to_string() };
        (self.is_negative(), body)
    }
}

impl Coeff for XPoly {
    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        XPoly::is_one(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        XPoly::constant(r)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
    fn render_parts(&self) -> (bool, String) {
        match self.as_constant() {
            Some(c) => c.render_parts(),
            None => {
                // a lone monomial needs no parentheses
                if self.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
                    let lead = self.leading();
                    let neg = lead.is_negative();
                    let body = if neg { (-self).to_string() } else { self.to_string() };
                    (neg, body)
                } else {
                    (false, format!("({self})"))
                }
            }
        }
    }
}
