//! Symmetrized generating functions for monotone triangles with the `X`
//! statistic counting the local pattern `a_{i+1,j} < a_{i,j} < a_{i+1,j+1}`,
//! their one-variable-removal recursions, and the `T(x, y)` family.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::check::{abbreviate, CheckOutcome};
use crate::error::{Error, Result};
use crate::exactpoly::{div_vandermonde, Coeff, LaurentPoly, Rational, XLaurent, XPoly};
use crate::linalg::binom;
use crate::mt::{alpha_m_eval, check_bottom, pattern_genfun};
use crate::symmetrize::{asym, check_inversion_invariance, InversionMode};

/// `Q(z_1..z_n) = Sym(∏ z_i^{k_i} ∏_{i<j} (1 + z_i z_j + (X−2) z_i)/(z_j − z_i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGenFun {
    pub n: usize,
    pub k: Vec<i64>,
    pub q: XLaurent,
}

impl PatternGenFun {
    /// `Q(1, …, 1, z)` as a map from the exponent of `z` to its coefficient.
    pub fn last_variable_series(&self) -> BTreeMap<i64, XPoly> {
        last_variable_series(&self.q)
    }

    /// `Q` at `X = 1`.
    pub fn at_x_one(&self) -> LaurentPoly {
        at_x(&self.q, &Rational::ONE)
    }
}

fn at_x(q: &XLaurent, x: &Rational) -> LaurentPoly {
    q.map_coeffs(|c| c.eval(x))
}

fn last_variable_series<C: Coeff>(q: &LaurentPoly<C>) -> BTreeMap<i64, C> {
    let n = q.nvars();
    let mut out: BTreeMap<i64, C> = BTreeMap::new();
    for (m, c) in q.terms() {
        let e = m.exps()[n - 1] as i64;
        let slot = out.entry(e).or_insert_with(C::zero);
        *slot = slot.add_ref(c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `1 + z_i z_j + (X − 2) z_i`.
fn pattern_pair(n: usize, i: usize, j: usize) -> XLaurent {
    let mut e = vec![0i32; n];
    e[i] = 1;
    let zi = XLaurent::term(&e, XPoly::from_i64s(&[-2, 1]));
    e[j] = 1;
    let zizj = XLaurent::term(&e, XPoly::one());
    &(&XLaurent::one(n) + &zizj) + &zi
}

fn monomial<C: Coeff>(e: &[i32]) -> LaurentPoly<C> {
    LaurentPoly::term(e, C::one())
}

fn to_i32(k: i64) -> Result<i32> {
    i32::try_from(k).map_err(|_| Error::OutOfRange {
        what: "exponent",
        detail: format!("{k} does not fit an exponent"),
    })
}

/// Builds `Q` by one antisymmetrization and one exact Vandermonde division.
pub fn build_q(n: usize, k: &[i64]) -> Result<PatternGenFun> {
    if k.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: k.len(),
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: "need at least one variable".into(),
        });
    }
    let exps = k.iter().map(|&x| to_i32(x)).collect::<Result<Vec<_>>>()?;
    let mut num: XLaurent = monomial(&exps);
    for j in 1..n {
        for i in 0..j {
            num = &num * &pattern_pair(n, i, j);
        }
    }
    let q = div_vandermonde(&asym(&num))?;
    Ok(PatternGenFun { n, k: k.to_vec(), q })
}

/// `α_m(n; k) = Σ_s q_s(X) binom(s, m)` where `Q(1, …, 1, z) = Σ_s q_s z^s`.
pub fn alpha_m_from_q(q: &PatternGenFun, m: usize) -> XPoly {
    let mut acc = XPoly::zero();
    for (s, c) in q.last_variable_series() {
        acc = &acc + &c.scale(&binom(s, m as i64));
    }
    acc
}

/// Compares `Σ_s q_s(X) binom(s, m)` with the operator formula for `α_m`.
pub fn check_prop_91(n: usize, k: &[i64], m: usize) -> Result<CheckOutcome> {
    let q = build_q(n, k)?;
    let via_q = alpha_m_from_q(&q, m);
    let direct = alpha_m_eval(n, m, k)?;
    Ok(CheckOutcome::compare(&direct, &via_q))
}

/// The `z^top` coefficient of `Q(1, …, 1, z)` against the pattern-counting
/// generating function of monotone triangles with that bottom row and top.
pub fn check_cor_92(bottom: &[i64], top: i64) -> Result<CheckOutcome> {
    check_bottom(bottom)?;
    let expected = pattern_genfun(bottom, top)?;
    let q = build_q(bottom.len(), bottom)?;
    let actual = q.last_variable_series().remove(&top).unwrap_or_else(XPoly::zero);
    Ok(CheckOutcome::compare(&expected, &actual))
}

/// Every top of a bottom row at once; coefficients of `z` outside the range
/// of the bottom row must vanish.
pub fn check_cor_92_all_tops(bottom: &[i64]) -> Result<CheckOutcome> {
    check_bottom(bottom)?;
    let series = build_q(bottom.len(), bottom)?.last_variable_series();
    let (lo, hi) = (bottom[0], bottom[bottom.len() - 1]);
    let mut parts = Vec::new();
    for top in lo..=hi {
        let expected = pattern_genfun(bottom, top)?;
        let actual = series.get(&top).cloned().unwrap_or_else(XPoly::zero);
        parts.push(CheckOutcome::compare(&expected, &actual).with_witness(format!("top {top}")));
    }
    if let Some((&s, c)) = series.iter().find(|(&s, _)| s < lo || s > hi) {
        parts.push(CheckOutcome::fail("0", c.to_string(), format!("z^{s} outside the bottom row range")));
    }
    Ok(CheckOutcome::all(&format!("tops {lo}..{hi}"), parts))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GenFunKind {
    Asm,
    Vsasm,
}

impl GenFunKind {
    /// Exponent of `z_i` (0-based `i`) in the defining product.
    fn exponent(self, i: usize) -> i64 {
        match self {
            GenFunKind::Asm => i as i64,
            GenFunKind::Vsasm => 2 * i as i64,
        }
    }

    pub fn bottom(self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.exponent(i)).collect()
    }
}

impl fmt::Display for GenFunKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenFunKind::Asm => "ASM",
            GenFunKind::Vsasm => "VSASM",
        })
    }
}

/// The generating function through the one-variable-removal recursion
/// `G_n = Σ_j z_j^{e_n} ∏_{i≠j} (1 + z_i(X−2) + z_i z_j)/(z_j − z_i) · G_{n−1}(ẑ_j)`,
/// with every step multiplied through by the Vandermonde and divided back
/// exactly.
pub fn recursive_genfun(kind: GenFunKind, n: usize) -> Result<XLaurent> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: "need at least one variable".into(),
        });
    }
    // numerator of G_r over the r-variable Vandermonde
    let mut num = XLaurent::one(1);
    for r in 2..=n {
        let top = to_i32(kind.exponent(r - 1))?;
        let mut acc = XLaurent::zero(r);
        for j in 0..r {
            let others: Vec<usize> = (0..r).filter(|&i| i != j).collect();
            let mut e = vec![0i32; r];
            e[j] = top;
            let mut term: XLaurent = monomial(&e);
            for &i in &others {
                // 1 + z_i (X − 2) + z_i z_j
                term = &term * &pattern_pair(r, i, j);
            }
            term = &term * &num.rename_vars(r, &others)?;
            acc = if (r - 1 - j) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        num = acc;
    }
    div_vandermonde(&num)
}

/// Builds the generating function both directly and recursively; errors if
/// they differ.
pub fn build_recursive_genfun(kind: GenFunKind, n: usize) -> Result<XLaurent> {
    let direct = build_q(n, &kind.bottom(n))?.q;
    let recursive = recursive_genfun(kind, n)?;
    if direct != recursive {
        return Err(Error::Precondition(format!(
            "{kind} recursion disagrees with the direct symmetrization at n={n}: difference {}",
            abbreviate(&(&direct - &recursive).render(), 300)
        )));
    }
    Ok(recursive)
}

/// Value at `X = 1` and `z_1 = … = z_n = 1`.
pub fn all_ones(q: &XLaurent) -> Rational {
    let point = vec![Rational::ONE; q.nvars()];
    q.eval(&point).expect("point has the right length").eval(&Rational::ONE)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TFamilyParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl TFamilyParams {
    pub fn new(a: impl Into<Rational>, b: impl Into<Rational>, c: impl Into<Rational>, d: impl Into<Rational>) -> Self {
        TFamilyParams {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    /// With `b = c = d = 0` the kernel vanishes identically; its limit after
    /// dividing by `c` is `a(x^{-1} + y)/(1 − x y^{-1})`, which is used instead.
    pub fn is_degenerate(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl fmt::Display for TFamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} c={} d={}", self.a, self.b, self.c, self.d)
    }
}

/// Numerator over `z_j − z_i` of `T(z_i, z_j)`, using
/// `1 − x y^{-1} = y^{-1}(y − x)`:
/// `y [a(x^{-1} + y) + c][b(x + y^{-1}) + c] + (ab x^{-1} y + d)(y − x)`.
fn t_pair_numerator(p: &TFamilyParams, n: usize, i: usize, j: usize) -> LaurentPoly {
    let e = |xi: i32, yj: i32| {
        let mut v = vec![0i32; n];
        v[i] = xi;
        v[j] = yj;
        v
    };
    let t = |xi: i32, yj: i32, c: &Rational| LaurentPoly::term(&e(xi, yj), c.clone());
    let y = t(0, 1, &Rational::ONE);
    let first = &(&t(-1, 0, &p.a) + &t(0, 1, &p.a)) + &LaurentPoly::constant(n, p.c.clone());
    if p.is_degenerate() {
        return &y * &(&t(-1, 0, &p.a) + &t(0, 1, &p.a));
    }
    let second = &(&t(1, 0, &p.b) + &t(0, -1, &p.b)) + &LaurentPoly::constant(n, p.c.clone());
    let ab = &p.a * &p.b;
    let tail = &t(-1, 1, &ab) + &LaurentPoly::constant(n, p.d.clone());
    let diff = &y - &t(1, 0, &Rational::ONE);
    &(&y * &(&first * &second)) + &(&tail * &diff)
}

/// `Sym ∏_{i<j} T(z_i, z_j)` in `n` variables.
pub fn t_family_sym(p: &TFamilyParams, n: usize) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: format!("need n >= 2, got {n}"),
        });
    }
    let mut num = LaurentPoly::one(n);
    for j in 1..n {
        for i in 0..j {
            num = &num * &t_pair_numerator(p, n, i, j);
        }
    }
    div_vandermonde(&asym(&num))
}

/// `∏_{i<j} (1 + z_i z_j)(z_i + z_j) ∏ z_i^{−n+1}`.
pub fn t_family_closed_form(n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::term(&vec![-(n as i32) + 1; n], Rational::ONE);
    for j in 1..n {
        for i in 0..j {
            let mut e = vec![0i32; n];
            e[i] = 1;
            e[j] = 1;
            let pair = &LaurentPoly::one(n) + &LaurentPoly::term(&e, Rational::ONE);
            let sum = &LaurentPoly::var(n, i) + &LaurentPoly::var(n, j);
            acc = &(&acc * &pair) * &sum;
        }
    }
    acc
}

/// Symmetrizes the `T` product and reports: Laurent-polynomiality, invariance
/// under each single inversion (an experimental claim, so a miss is a
/// finding), constancy when `a = 0`, and the explicit closed form in the
/// degenerate case.
pub fn t_family_check(p: &TFamilyParams, n: usize) -> Result<CheckOutcome> {
    let sym = match t_family_sym(p, n) {
        Ok(s) => s,
        Err(Error::NotDivisible { witness }) => {
            return Ok(CheckOutcome::finding("Laurent polynomial", format!("division failed at {witness}")));
        }
        Err(e) => return Err(e),
    };
    let mut parts = vec![check_inversion_invariance(&sym, InversionMode::EachVariable).as_finding()];
    if p.a.is_zero() {
        parts.push(if sym.as_constant().is_some() {
            CheckOutcome::pass("constant", "constant")
        } else {
            CheckOutcome::fail("constant", abbreviate(&sym.render(), 200), format!("{p}, n={n}: depends on z"))
        });
    }
    if p.is_degenerate() && !p.a.is_zero() {
        let pairs = (n * (n - 1) / 2) as u32;
        let expected = t_family_closed_form(n).scale(&p.a.pow(pairs as i32));
        parts.push(if sym == expected {
            CheckOutcome::pass("closed form", "closed form")
        } else {
            CheckOutcome::fail(
                abbreviate(&expected.render(), 200),
                abbreviate(&sym.render(), 200),
                format!("{p}, n={n}: difference {}", abbreviate(&(&sym - &expected).render(), 300)),
            )
        });
    }
    Ok(CheckOutcome::all(&format!("{p} n={n}"), parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mt::enumerate_mt;
    use crate::mt::MtFilter;
    use crate::symmetrize::build_r;

    fn xp(cs: &[i64]) -> XPoly {
        XPoly::from_i64s(cs)
    }

    #[test]
    fn small_q() {
        let q = build_q(1, &[5]).unwrap();
        assert_eq!(q.q, XLaurent::term(&[5], XPoly::one()));
        let q = build_q(2, &[0, 2]).unwrap();
        let series = q.last_variable_series();
        assert_eq!(series, BTreeMap::from([(0, xp(&[1])), (1, xp(&[0, 1])), (2, xp(&[1]))]));
        assert!(build_q(2, &[0]).is_err());
    }

    #[test]
    fn all_ones_matches_monotone_triangle_counts() {
        for bottom in [vec![0, 2, 4], vec![1, 2, 3], vec![0, 1, 5]] {
            let q = build_q(3, &bottom).unwrap();
            let total = enumerate_mt(&bottom, &MtFilter::default()).unwrap();
            assert_eq!(all_ones(&q.q), Rational::from_integer(total as i64), "{bottom:?}");
        }
    }

    #[test]
    fn prop_91_instances() {
        assert!(check_prop_91(1, &[4], 2).unwrap().passed());
        assert_eq!(alpha_m_from_q(&build_q(1, &[4]).unwrap(), 2), xp(&[6]));
        let q = build_q(2, &[0, 2]).unwrap();
        assert_eq!(alpha_m_from_q(&q, 0).eval(&Rational::ONE), Rational::from_integer(3));
        for m in 0..=2 {
            assert!(check_prop_91(3, &[1, 2, 3], m).unwrap().passed(), "m={m}");
        }
        assert!(check_prop_91(2, &[-1, 3], 1).unwrap().passed());
    }

    #[test]
    fn cor_92_instances() {
        assert!(check_cor_92(&[0, 2], 1).unwrap().passed());
        assert!(check_cor_92_all_tops(&[0, 2, 4]).unwrap().passed());
        let series = build_q(3, &[0, 2, 4]).unwrap().last_variable_series();
        for t in 0..=4 {
            assert_eq!(series[&t].eval(&Rational::ONE), series[&(4 - t)].eval(&Rational::ONE));
        }
        let series = build_q(3, &[1, 2, 3]).unwrap().last_variable_series();
        let total = series.values().fold(Rational::ZERO, |acc, c| &acc + &c.eval(&Rational::ONE));
        assert_eq!(total, Rational::from_integer(7));
    }

    #[test]
    fn s_zero_function_is_shifted_q() {
        for n in 1..=4 {
            let q = build_q(n, &GenFunKind::Vsasm.bottom(n)).unwrap().at_x_one();
            let shift = LaurentPoly::term(&vec![-(n as i32) + 1; n], Rational::ONE);
            assert_eq!(build_r(0, n + 1).unwrap(), &shift * &q, "n={n}");
        }
    }

    #[test]
    fn recursion_and_totals() {
        let asm = [1, 2, 7, 42];
        let vsasm = [1, 3, 26, 646];
        for n in 1..=4 {
            let a = build_recursive_genfun(GenFunKind::Asm, n).unwrap();
            assert_eq!(all_ones(&a), Rational::from_integer(asm[n - 1]));
            let v = build_recursive_genfun(GenFunKind::Vsasm, n).unwrap();
            assert_eq!(all_ones(&v), Rational::from_integer(vsasm[n - 1]));
        }
    }

    #[test]
    fn t_family_cases() {
        let special = TFamilyParams::new(1, 0, 0, 0);
        assert!(t_family_check(&special, 3).unwrap().passed());
        assert_eq!(t_family_sym(&special, 2).unwrap(), t_family_closed_form(2));
        let scaled = TFamilyParams::new(2, 0, 0, 0);
        assert!(t_family_check(&scaled, 3).unwrap().passed());
        let a0 = TFamilyParams::new(0, 1, 1, 1);
        assert!(t_family_sym(&a0, 3).unwrap().as_constant().is_some());
        assert!(t_family_check(&a0, 3).unwrap().passed());
        let mixed = TFamilyParams::new(1, 1, 1, 0);
        assert!(t_family_check(&mixed, 3).unwrap().passed());
        assert!(t_family_sym(&mixed, 1).is_err());
    }
}
