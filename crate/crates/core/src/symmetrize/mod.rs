//! Symmetrization over the full symmetric group, the `P`/`R` family of
//! rational functions, inversion-invariance checks and the γ-basis expansion.

mod orbits;
mod permutation;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use orbits::{symmetric_quotient, symmetric_quotient_orbits, SymmetricPoly};
pub use permutation::Permutation;

use crate::check::{abbreviate, CheckOutcome};
use crate::error::{Error, Result};
use crate::exactpoly::{div_vandermonde, Accumulator, Coeff, LaurentPoly, Monomial, Rational};

/// A rational function `numerator / ∏_{i<j}(z_j − z_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverVandermonde<C: Coeff = Rational> {
    pub numerator: LaurentPoly<C>,
}

impl<C: Coeff> OverVandermonde<C> {
    pub fn new(numerator: LaurentPoly<C>) -> Self {
        OverVandermonde { numerator }
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }
}

/// Reduces `num` modulo the kernel of the antisymmetrizer: every monomial
/// with a repeated exponent is dropped and the rest are sorted ascending,
/// picking up the sign of the sorting permutation.
pub fn alternant_representatives<C: Coeff>(num: &LaurentPoly<C>) -> LaurentPoly<C> {
    let n = num.nvars();
    let mut acc = Accumulator::with_capacity(n, num.len());
    for (m, c) in num.terms() {
        let e = m.exps();
        let mut inversions = 0usize;
        let mut repeated = false;
        for i in 0..n {
            for j in i + 1..n {
                if e[i] > e[j] {
                    inversions += 1;
                } else if e[i] == e[j] {
                    repeated = true;
                }
            }
        }
        if repeated {
            continue;
        }
        let mut sorted = m.clone();
        sorted.0.sort_unstable();
        if inversions.is_multiple_of(2) {
            acc.add(sorted, c);
        } else {
            acc.add_owned(sorted, c.neg_ref());
        }
    }
    acc.finish()
}

/// The unnormalized antisymmetrizer `Σ_σ sgn(σ) p(z_{σ(1)}, …, z_{σ(n)})`.
///
/// Each strictly increasing representative `λ` expands into the alternant
/// `Σ_σ sgn(σ) z^{σλ}`; distinct representatives have disjoint orbits, so no
/// coefficient is ever combined. Permutations are split into contiguous
/// lexicographic blocks that run in parallel and are concatenated in order.
pub fn asym<C: Coeff>(num: &LaurentPoly<C>) -> LaurentPoly<C> {
    let n = num.nvars();
    let reps = alternant_representatives(num);
    if reps.is_zero() {
        return LaurentPoly::zero(n);
    }
    let perms: Vec<(Vec<usize>, bool)> = Permutation::all(n)
        .into_iter()
        .map(|p| {
            let neg = p.sign() < 0;
            (p.images().to_vec(), neg)
        })
        .collect();
    let block = perms.len().div_ceil(rayon::current_num_threads() * 4).max(1);
    let chunks: Vec<Vec<(Monomial, C)>> = perms
        .par_chunks(block)
        .map(|chunk| {
            let mut out = Vec::with_capacity(chunk.len() * reps.len());
            for (images, neg) in chunk {
                for (lambda, c) in reps.terms() {
                    let mut e = Monomial::zero(n);
                    for (i, &x) in lambda.exps().iter().enumerate() {
                        e.0[images[i]] = x;
                    }
                    out.push((e, if *neg { c.neg_ref() } else { c.clone() }));
                }
            }
            out
        })
        .collect();
    let mut terms: Vec<(Monomial, C)> = chunks.into_iter().flatten().collect();
    terms.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    LaurentPoly::from_sorted_unchecked(n, terms)
}

/// Direct sum over all `n!` permuted copies; kept as an independent oracle.
pub fn asym_naive<C: Coeff>(num: &LaurentPoly<C>) -> LaurentPoly<C> {
    let n = num.nvars();
    let mut acc = LaurentPoly::zero(n);
    for p in Permutation::all(n) {
        let term = num.permute(&p).expect("permutation size");
        acc = if p.sign() > 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The unnormalized symmetrizer `Σ_σ p(z_{σ(1)}, …, z_{σ(n)})` of a polynomial.
pub fn sym<C: Coeff>(p: &LaurentPoly<C>) -> LaurentPoly<C> {
    let n = p.nvars();
    let mut acc = Accumulator::with_capacity(n, p.len());
    for sigma in Permutation::all(n) {
        for (m, c) in p.permute(&sigma).expect("permutation size").terms() {
            acc.add(m.clone(), c);
        }
    }
    acc.finish()
}

/// Sym of `numerator / Vandermonde`: one antisymmetrization, one exact division.
pub fn sym_over_vandermonde<C: Coeff>(f: &OverVandermonde<C>) -> Result<LaurentPoly<C>> {
    div_vandermonde(&asym(&f.numerator))
}

/// `(1 − z_i^{-1})^k` in `n` variables.
pub(crate) fn one_minus_inverse<C: Coeff>(n: usize, i: usize, k: u32) -> LaurentPoly<C> {
    let mut e = vec![0; n];
    e[i] = -1;
    let f = &LaurentPoly::one(n) - &LaurentPoly::term(&e, C::one());
    f.pow(k)
}

pub(crate) fn monomial_in<C: Coeff>(n: usize, i: usize, exp: i32) -> LaurentPoly<C> {
    let mut e = vec![0; n];
    e[i] = exp;
    LaurentPoly::term(&e, C::one())
}

/// `1 − z_p + z_p z_q`.
pub(crate) fn pair_factor<C: Coeff>(n: usize, p: usize, q: usize) -> LaurentPoly<C> {
    let mut pq = vec![0; n];
    pq[p] = 1;
    pq[q] = 1;
    &(&LaurentPoly::one(n) - &LaurentPoly::var(n, p)) + &LaurentPoly::term(&pq, C::one())
}

/// Numerator of `P_{s,t}` over the Vandermonde in `s + t − 1` variables:
///
/// `∏_{i≤s} z_i^{2s−2i−t+1}(1−z_i^{-1})^{i−1} · ∏_{s<i<s+t} z_i^{2i−2s−t}(1−z_i^{-1})^s
///  · ∏_{p<q}(1 − z_p + z_p z_q)`.
pub fn build_p(s: usize, t: usize) -> Result<OverVandermonde> {
    let n = (s + t).checked_sub(1).filter(|&n| n >= 1).ok_or(Error::OutOfRange {
        what: "s + t - 1",
        detail: format!("s={s}, t={t}; need at least one variable"),
    })?;
    let (si, ti) = (s as i32, t as i32);
    let mut num = LaurentPoly::one(n);
    for i in 1..=s {
        let ii = i as i32;
        num = &num * &monomial_in(n, i - 1, 2 * si - 2 * ii - ti + 1);
        num = &num * &one_minus_inverse(n, i - 1, (i - 1) as u32);
    }
    for i in s + 1..=n {
        let ii = i as i32;
        num = &num * &monomial_in(n, i - 1, 2 * ii - 2 * si - ti);
        num = &num * &one_minus_inverse(n, i - 1, s as u32);
    }
    for q in 1..n {
        for p in 0..q {
            num = &num * &pair_factor(n, p, q);
        }
    }
    Ok(OverVandermonde::new(num))
}

/// `R_{s,t} = Sym P_{s,t}`.
pub fn build_r(s: usize, t: usize) -> Result<LaurentPoly> {
    sym_over_vandermonde(&build_p(s, t)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InversionMode {
    /// `z_i → z_i^{-1}` for each `i` separately.
    EachVariable,
    /// All variables inverted simultaneously.
    AllVariables,
}

/// Compares `R` with its image under variable inversion.
pub fn check_inversion_invariance<C: Coeff>(r: &LaurentPoly<C>, mode: InversionMode) -> CheckOutcome {
    let n = r.nvars();
    let images: Vec<(String, LaurentPoly<C>)> = match mode {
        InversionMode::EachVariable => (0..n)
            .map(|i| (format!("z{}", i + 1), r.invert_vars(&[i]).expect("index in range")))
            .collect(),
        InversionMode::AllVariables => vec![("all".to_string(), r.invert_all())],
    };
    for (label, image) in images {
        if &image != r {
            let diff = r - &image;
            return CheckOutcome::fail(
                "invariant",
                format!("changes under inversion of {label}"),
                abbreviate(&diff.render(), 400),
            );
        }
    }
    CheckOutcome::pass("invariant", "invariant")
}

/// Coefficients of `R = Σ c_i ∏_j γ(z_j)^{i_j}` with `γ(z) = z − 2 + z^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaExpansion {
    pub nvars: usize,
    pub coeffs: BTreeMap<Vec<u32>, Rational>,
}

impl GammaExpansion {
    /// True when every coefficient is a non-negative integer.
    pub fn nonnegative_integral(&self) -> bool {
        self.coeffs
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// First coefficient that is negative or fractional.
    pub fn first_offender(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.coeffs
            .iter()
            .find(|(_, c)| !c.is_integer() || c.is_negative())
    }

    /// Re-expands the basis combination.
    pub fn recombine(&self) -> LaurentPoly {
        let n = self.nvars;
        let mut cache: BTreeMap<(usize, u32), LaurentPoly> = BTreeMap::new();
        let mut acc = LaurentPoly::zero(n);
        for (idx, c) in &self.coeffs {
            let mut term = LaurentPoly::constant(n, c.clone());
            for (v, &k) in idx.iter().enumerate() {
                if k > 0 {
                    let g = cache
                        .entry((v, k))
                        .or_insert_with(|| gamma(n, v).pow(k))
                        .clone();
                    term = &term * &g;
                }
            }
            acc = &acc + &term;
        }
        acc
    }
}

/// `γ(z_v) = z_v − 2 + z_v^{-1}`.
pub fn gamma(n: usize, v: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::var(n, v);
    acc = &acc - &LaurentPoly::constant(n, Rational::from_integer(2));
    &acc + &monomial_in(n, v, -1)
}

/// Expands an inversion-invariant Laurent polynomial in the γ basis by
/// top-degree elimination, one variable at a time in ascending order.
pub fn gamma_expand(r: &LaurentPoly) -> Result<GammaExpansion> {
    let n = r.nvars();
    let mut partial: Vec<(Vec<u32>, LaurentPoly)> = vec![(Vec::new(), r.clone())];
    for v in 0..n {
        let mut next = Vec::new();
        for (idx, p) in partial {
            for (k, c) in expand_one_variable(&p, v)? {
                let mut idx = idx.clone();
                idx.push(k);
                next.push((idx, c));
            }
        }
        partial = next;
    }
    let coeffs = partial
        .into_iter()
        .map(|(idx, p)| (idx, p.as_constant().expect("all variables eliminated")))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(GammaExpansion { nvars: n, coeffs })
}

fn expand_one_variable(p: &LaurentPoly, v: usize) -> Result<Vec<(u32, LaurentPoly)>> {
    let n = p.nvars();
    let mut rest = p.clone();
    let mut out = Vec::new();
    let g = gamma(n, v);
    while let Some((lo, hi)) = rest.degree_range(v) {
        if lo != -hi || hi < 0 {
            let witness = rest
                .terms()
                .iter()
                .find(|(m, _)| m.exps()[v] == hi)
                .map(|(m, c)| LaurentPoly::monomial(n, m.clone(), c.clone()).render())
                .unwrap_or_default();
            return Err(Error::NotInversionInvariant { var: v + 1, witness });
        }
        let top = rest.collect_in(v).remove(&hi).expect("top level");
        rest = &rest - &(&top * &g.pow(hi as u32));
        out.push((hi as u32, top));
    }
    out.reverse();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly;

    fn z(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn symmetric_quotient_matches_division() {
        let mut r = crate::random::rng(5);
        for n in 1..=4 {
            for _ in 0..5 {
                let num = crate::random::random_laurent(&mut r, n, -2, 3, 6);
                let q = sym_over_vandermonde(&OverVandermonde::new(num.clone())).unwrap();
                assert_eq!(symmetric_quotient(&num).unwrap(), q);
            }
        }
        for (s, t) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
            let p = build_p(s, t).unwrap();
            assert_eq!(symmetric_quotient(&p.numerator).unwrap(), build_r(s, t).unwrap());
        }
        let a = P::term(&[1, 3], Rational::ONE);
        assert_eq!(symmetric_quotient(&a).unwrap(), &(&z(2, 0) * &z(2, 1)) * &(&z(2, 0) + &z(2, 1)));
        assert!(symmetric_quotient(&P::term(&[0, 0, 3], Rational::ONE)).unwrap().is_zero());
    }

    #[test]
    fn asym_small_cases() {
        assert_eq!(asym(&z(2, 1)), &z(2, 1) - &z(2, 0));
        assert!(asym(&(&z(2, 0) * &z(2, 1))).is_zero());
        let f = P::term(&[0, 1, 2], Rational::ONE);
        assert_eq!(asym(&f), crate::exactpoly::vandermonde(3));
    }

    #[test]
    fn sym_over_vandermonde_small_cases() {
        assert_eq!(sym_over_vandermonde(&OverVandermonde::new(z(2, 1))).unwrap(), P::one(2));
        assert_eq!(
            sym_over_vandermonde(&OverVandermonde::new(z(2, 0))).unwrap(),
            P::constant(2, Rational::from_integer(-1))
        );
    }

    #[test]
    fn gamma_expansion_examples() {
        let p = &z(1, 0) + &z(1, 0).invert_all();
        let g = gamma_expand(&p).unwrap();
        assert_eq!(g.coeffs.get(&vec![1]), Some(&Rational::ONE));
        assert_eq!(g.coeffs.get(&vec![0]), Some(&Rational::from_integer(2)));
        assert!(gamma_expand(&z(1, 0)).is_err());
        assert_eq!(gamma_expand(&P::one(2)).unwrap().coeffs.len(), 1);
    }

    #[test]
    fn inversion_check_witness() {
        let out = check_inversion_invariance(&z(1, 0), InversionMode::EachVariable);
        assert!(out.failed());
        assert_eq!(out.witness.as_deref(), Some("z1 - z1^-1"));
    }
}
