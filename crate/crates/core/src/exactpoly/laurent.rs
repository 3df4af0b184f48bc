//! Sparse multivariate Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::coeff::Coeff;
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::symmetrize::Permutation;

/// Exponent vector of a monomial; ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub SmallVec<[i32; 8]>);

impl Monomial {
    pub fn zero(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_slice(e: &[i32]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut m = Monomial::zero(nvars);
        m.0[var] = 1;
        m
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Hash-based accumulator used inside arithmetic kernels.
pub(crate) struct Accumulator<C: Coeff> {
    nvars: usize,
    map: FxHashMap<Monomial, C>,
}

impl<C: Coeff> Accumulator<C> {
    pub(crate) fn new(nvars: usize) -> Self {
        Accumulator {
            nvars,
            map: FxHashMap::default(),
        }
    }

    pub(crate) fn with_capacity(nvars: usize, cap: usize) -> Self {
        let mut map = FxHashMap::default();
        map.reserve(cap);
        Accumulator { nvars, map }
    }

    pub(crate) fn add(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&m) {
            Some(v) => v.add_assign_ref(c),
            None => {
                self.map.insert(m, c.clone());
            }
        }
    }

    pub(crate) fn add_owned(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&m) {
            Some(v) => v.add_assign_ref(&c),
            None => {
                self.map.insert(m, c);
            }
        }
    }

    pub(crate) fn finish(self) -> LaurentPoly<C> {
        let mut terms: Vec<(Monomial, C)> =
            self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }
}

/// A sparse Laurent polynomial in `nvars` variables `z1, ..., zn`.
///
/// Terms are kept sorted by exponent vector (lexicographic, ascending) with no
/// zero coefficients, so structural equality is mathematical equality.
/// Variable indices in the API are 0-based; rendering uses `z1..zn`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C: Coeff = Rational> {
    nvars: usize,
    terms: Vec<(Monomial, C)>,
}

/// Laurent polynomial over the rationals.
pub type LaurentPolynomial = LaurentPoly<Rational>;

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, Monomial::zero(nvars), c)
    }

    /// The variable `z_{var+1}`.
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable {var} out of range");
        Self::monomial(nvars, Monomial::unit(nvars, var), C::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: C) -> Self {
        assert_eq!(m.len(), nvars, "exponent vector length");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        LaurentPoly { nvars, terms }
    }

    /// `c * z^e` with `e` given as a slice.
    pub fn term(e: &[i32], c: C) -> Self {
        Self::monomial(e.len(), Monomial::from_slice(e), c)
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc = Accumulator::new(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "exponent vector length");
            acc.add_owned(m, c);
        }
        acc.finish()
    }

    /// Builds from terms already sorted, deduplicated and nonzero.
    pub(crate) fn from_sorted_unchecked(nvars: usize, terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn coeff_of(&self, e: &[i32]) -> C {
        self.coeff(&Monomial::from_slice(e))
    }

    /// The constant polynomial value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.0.iter().all(|&e| e == 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.last()
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Greater
            } else if j == b.len() {
                std::cmp::Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { b[j].1.neg_ref() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        a[i].1.sub_ref(&b[j].1)
                    } else {
                        a[i].1.add_ref(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if let Some(c) = other.single_monomial() {
            return Ok(self.mul_term(&c.0, &c.1));
        }
        if let Some(c) = self.single_monomial() {
            return Ok(other.mul_term(&c.0, &c.1));
        }
        let mut acc = Accumulator::with_capacity(self.nvars, self.len() * other.len() / 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.add_owned(ma.mul(mb), ca.mul_ref(cb));
            }
        }
        Ok(acc.finish())
    }

    fn single_monomial(&self) -> Option<&(Monomial, C)> {
        match self.terms.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Multiplication by `c * z^m`; keeps term order.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.mul(m), v.mul_ref(c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::zero(self.nvars), c)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Product of a sequence of polynomials in the given variable count.
    pub fn product<'a, I>(nvars: usize, factors: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        C: 'a,
    {
        factors
            .into_iter()
            .fold(Self::one(nvars), |acc, f| &acc * f)
    }

    /// Replaces `z_i` by `1/z_i` for every `i` in `which`.
    pub fn invert_vars(&self, which: &[usize]) -> Result<Self> {
        for &i in which {
            if i >= self.nvars {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    nvars: self.nvars,
                });
            }
        }
        let mut flip = vec![false; self.nvars];
        for &i in which {
            flip[i] = true;
        }
        Ok(self.map_monomials(|m| {
            Monomial(
                m.0.iter()
                    .zip(&flip)
                    .map(|(&e, &f)| if f { -e } else { e })
                    .collect(),
            )
        }))
    }

    /// Replaces every variable by its reciprocal.
    pub fn invert_all(&self) -> Self {
        self.map_monomials(|m| Monomial(m.0.iter().map(|e| -e).collect()))
    }

    /// `p(z_{σ(1)}, ..., z_{σ(n)})`: the variable in slot `i` becomes `z_{σ(i)}`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.nvars {
            return Err(Error::NotAPermutation(self.nvars));
        }
        let images = sigma.images();
        Ok(self.map_monomials(|m| {
            let mut out = SmallVec::from_elem(0, m.len());
            for (i, &e) in m.0.iter().enumerate() {
                out[images[i]] = e;
            }
            Monomial(out)
        }))
    }

    /// Applies an injective-or-merging monomial map and re-canonicalizes.
    pub fn map_monomials<F>(&self, f: F) -> Self
    where
        F: Fn(&Monomial) -> Monomial,
    {
        let nv = self.terms.first().map(|(m, _)| f(m).len()).unwrap_or(self.nvars);
        let mut acc = Accumulator::with_capacity(nv, self.len());
        for (m, c) in &self.terms {
            acc.add(f(m), c);
        }
        acc.finish()
    }

    /// Moves variable slot `i` to slot `map[i]` of a polynomial in `new_nvars`
    /// variables. Slots mapped to the same target are identified (exponents add).
    pub fn rename_vars(&self, new_nvars: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= new_nvars) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                nvars: new_nvars,
            });
        }
        let mut acc = Accumulator::with_capacity(new_nvars, self.len());
        for (m, c) in &self.terms {
            let mut e = Monomial::zero(new_nvars);
            for (i, &x) in m.0.iter().enumerate() {
                e.0[map[i]] += x;
            }
            acc.add(e, c);
        }
        Ok(acc.finish())
    }

    /// Substitutes `z_var = value` for each pair, keeping the variable count
    /// (the specialized slots end up with exponent zero).
    pub fn specialize(&self, values: &[(usize, Rational)]) -> Result<Self> {
        for (v, x) in values {
            if *v >= self.nvars {
                return Err(Error::IndexOutOfRange {
                    index: *v,
                    nvars: self.nvars,
                });
            }
            if x.is_zero() && self.terms.iter().any(|(m, _)| m.0[*v] < 0) {
                return Err(Error::ZeroToNegativePower(*v));
            }
        }
        let mut acc = Accumulator::with_capacity(self.nvars, self.len());
        for (m, c) in &self.terms {
            let mut m = m.clone();
            let mut factor = Rational::ONE;
            for (v, x) in values {
                factor = &factor * &x.pow(m.0[*v]);
                m.0[*v] = 0;
            }
            acc.add_owned(m, c.mul_ref(&C::from_rational(factor)));
        }
        Ok(acc.finish())
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        for (v, x) in point.iter().enumerate() {
            if x.is_zero() && self.terms.iter().any(|(m, _)| m.0[v] < 0) {
                return Err(Error::ZeroToNegativePower(v));
            }
        }
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut value = Rational::ONE;
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e != 0 {
                    value = &value * &x.pow(e);
                }
            }
            total.add_assign_ref(&c.mul_ref(&C::from_rational(value)));
        }
        Ok(total)
    }

    /// Minimum and maximum exponent of `var`, or `None` for zero.
    pub fn degree_range(&self, var: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.iter().map(|(m, _)| m.0[var]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Groups terms by the exponent of `var`; the returned polynomials have
    /// that slot zeroed.
    pub fn collect_in(&self, var: usize) -> BTreeMap<i32, LaurentPoly<C>> {
        let mut groups: BTreeMap<i32, Vec<(Monomial, C)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2.0[var];
            m2.0[var] = 0;
            groups.entry(e).or_default().push((m2, c.clone()));
        }
        groups
            .into_iter()
            .map(|(e, ts)| (e, LaurentPoly::from_terms(self.nvars, ts)))
            .collect()
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.0.iter().all(|&e| e >= 0))
    }

    pub fn add_assign(&mut self, other: &Self) {
        *self = &*self + other;
    }
}

impl<C: Coeff> LaurentPoly<C> {
    /// Renders with variable names `z1..zn`.
    pub fn render(&self) -> String {
        self.render_with(|i| format!("z{}", i + 1))
    }

    /// Canonical text rendering: terms in descending lexicographic order,
    /// explicit ` + ` / ` - ` separators and `name^exp` factors joined by `*`.
    pub fn render_with<F: Fn(usize) -> String>(&self, name: F) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = c.render_parts();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        name(i)
                    } else {
                        format!("{}^{}", name(i), e)
                    }
                })
                .collect();
            match (body.is_empty(), factors.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&factors.join("*")),
                (false, true) => out.push_str(&body),
                (false, false) => {
                    out.push_str(&body);
                    out.push('*');
                    out.push_str(&factors.join("*"));
                }
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.nvars, self.render())
    }
}

// Operator impls panic on a variable-count mismatch; use the `checked_*`
// methods where the counts come from user input.

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly::neg(self)
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> Self {
        LaurentPoly::neg(&self)
    }
}
