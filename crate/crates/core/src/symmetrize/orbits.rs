//! Symmetric Laurent polynomials stored one orbit at a time.
//!
//! A symmetric polynomial in `n` variables with `N` terms has roughly `N / n!`
//! orbits, which keeps quotients such as `R_{0,8}` (over 23 million terms)
//! within reach of checks that never expand them.

use std::collections::{BTreeMap, BTreeSet};

use rustc_hash::FxHashMap;

use super::{alternant_representatives, GammaExpansion, InversionMode, Permutation};
use crate::check::CheckOutcome;
use crate::error::{Error, Result};
use crate::exactpoly::{Accumulator, Coeff, LaurentPoly, Monomial, Rational};

/// A symmetric Laurent polynomial keyed by weakly increasing exponent vectors;
/// the coefficient of `z^e` is the coefficient of `sort(e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPoly<C: Coeff = Rational> {
    nvars: usize,
    orbits: BTreeMap<Vec<i32>, C>,
}

impl<C: Coeff> SymmetricPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        SymmetricPoly {
            nvars,
            orbits: BTreeMap::new(),
        }
    }

    /// Fails when `p` is not symmetric.
    pub fn from_poly(p: &LaurentPoly<C>) -> Result<Self> {
        let n = p.nvars();
        let mut orbits = BTreeMap::new();
        for (m, c) in p.terms() {
            let mut e = m.exps().to_vec();
            e.sort_unstable();
            if p.coeff_of(&e) != *c {
                return Err(Error::Precondition(format!(
                    "not symmetric: {} vs {}",
                    LaurentPoly::monomial(n, m.clone(), c.clone()).render(),
                    LaurentPoly::monomial(n, Monomial::from_slice(&e), p.coeff_of(&e)).render()
                )));
            }
            orbits.insert(e, c.clone());
        }
        Ok(SymmetricPoly { nvars: n, orbits })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn orbits(&self) -> &BTreeMap<Vec<i32>, C> {
        &self.orbits
    }

    pub fn is_zero(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn coeff_of(&self, e: &[i32]) -> C {
        let mut key = e.to_vec();
        key.sort_unstable();
        self.orbits.get(&key).cloned().unwrap_or_else(C::zero)
    }

    /// Number of monomials in the expanded polynomial.
    pub fn term_count(&self) -> u128 {
        self.orbits.keys().map(|mu| orbit_size(mu)).sum()
    }

    /// Calls `f` on every term of the expansion, orbit by orbit.
    pub fn for_each_term(&self, mut f: impl FnMut(&[i32], &C)) {
        for (mu, c) in &self.orbits {
            let mut e = mu.clone();
            loop {
                f(&e, c);
                if !next_multiset_permutation(&mut e) {
                    break;
                }
            }
        }
    }

    pub fn expand(&self) -> LaurentPoly<C> {
        let mut terms = Vec::with_capacity(self.term_count().min(1 << 24) as usize);
        self.for_each_term(|e, c| terms.push((Monomial::from_slice(e), c.clone())));
        LaurentPoly::from_terms(self.nvars, terms)
    }

    /// Alternant representatives of `self · z^δ`, computed term by term.
    pub fn times_delta_representatives(&self) -> LaurentPoly<C> {
        let n = self.nvars;
        let mut acc = Accumulator::with_capacity(n, self.orbits.len());
        let mut kappa = vec![0i32; n];
        self.for_each_term(|e, c| {
            for i in 0..n {
                kappa[i] = e[i] + i as i32;
            }
            let mut inversions = 0usize;
            for i in 0..n {
                for j in i + 1..n {
                    if kappa[i] == kappa[j] {
                        return;
                    }
                    if kappa[i] > kappa[j] {
                        inversions += 1;
                    }
                }
            }
            let mut sorted = Monomial::from_slice(&kappa);
            sorted.0.sort_unstable();
            if inversions.is_multiple_of(2) {
                acc.add(sorted, c);
            } else {
                acc.add_owned(sorted, c.neg_ref());
            }
        });
        acc.finish()
    }

    /// Invariance under `z_i → z_i^{-1}`. For a symmetric polynomial the
    /// single-variable case does not depend on `i`, so one exponent slot is
    /// flipped per distinct value of each orbit.
    pub fn check_inversion_invariance(&self, mode: InversionMode) -> CheckOutcome {
        let n = self.nvars;
        for (mu, c) in &self.orbits {
            let images: Vec<Vec<i32>> = match mode {
                InversionMode::EachVariable => {
                    let values: BTreeSet<i32> = mu.iter().copied().filter(|&v| v != 0).collect();
                    values
                        .into_iter()
                        .map(|v| {
                            let mut img = mu.clone();
                            let pos = img.iter().position(|&x| x == v).unwrap();
                            img[pos] = -v;
                            img.sort_unstable();
                            img
                        })
                        .collect()
                }
                InversionMode::AllVariables => {
                    let mut img: Vec<i32> = mu.iter().map(|&x| -x).collect();
                    img.sort_unstable();
                    vec![img]
                }
            };
            for img in images {
                let other = self.orbits.get(&img).cloned().unwrap_or_else(C::zero);
                if other != *c {
                    let label = match mode {
                        InversionMode::EachVariable => "z1",
                        InversionMode::AllVariables => "all",
                    };
                    return CheckOutcome::fail(
                        "invariant",
                        format!("changes under inversion of {label}"),
                        format!(
                            "coefficient of {} is {}, of {} is {}",
                            LaurentPoly::monomial(n, Monomial::from_slice(mu), C::one()).render(),
                            c,
                            LaurentPoly::monomial(n, Monomial::from_slice(&img), C::one()).render(),
                            other
                        ),
                    );
                }
            }
        }
        CheckOutcome::pass("invariant", "invariant")
    }
}

impl SymmetricPoly<Rational> {
    /// γ-basis expansion read off the non-negative orthant: the coefficient of
    /// `z^j`, `j ≥ 0`, in `γ(z)^k` is `(−1)^{k−j} binom(2k, k+j)`, a unitriangular
    /// system solved one axis at a time.
    pub fn gamma_expand(&self) -> Result<GammaExpansion> {
        let check = self.check_inversion_invariance(InversionMode::EachVariable);
        if check.failed() {
            return Err(Error::NotInversionInvariant {
                var: 1,
                witness: check.witness.unwrap_or_default(),
            });
        }
        let mut grid = self.orthant();
        let table = GammaTable::new(grid.keys().flatten().copied().max().unwrap_or(0));
        for axis in 0..self.nvars {
            grid = transform_axis(grid, axis, |line| {
                // values[j] = Σ_{k≥j} A(k,j) g_k, solved top down
                let mut g: BTreeMap<i32, Rational> = BTreeMap::new();
                let top = *line.keys().next_back().unwrap();
                for j in (0..=top).rev() {
                    let mut v = line.get(&j).cloned().unwrap_or(Rational::ZERO);
                    for (&k, gk) in g.range(j + 1..) {
                        v -= &(&table.get(k, j) * gk);
                    }
                    if !v.is_zero() {
                        g.insert(j, v);
                    }
                }
                g
            });
        }
        let coeffs = grid
            .into_iter()
            .map(|(idx, c)| (idx.into_iter().map(|k| k as u32).collect(), c))
            .collect();
        Ok(GammaExpansion {
            nvars: self.nvars,
            coeffs,
        })
    }

    /// Recomputes the non-negative orthant of `Σ c_i ∏ γ(z_j)^{i_j}` by the
    /// forward transform and compares it with this polynomial's orthant.
    pub fn matches_gamma(&self, g: &GammaExpansion) -> bool {
        if g.nvars != self.nvars {
            return false;
        }
        let mut grid: FxHashMap<Vec<i32>, Rational> = g
            .coeffs
            .iter()
            .map(|(idx, c)| (idx.iter().map(|&k| k as i32).collect(), c.clone()))
            .collect();
        let table = GammaTable::new(grid.keys().flatten().copied().max().unwrap_or(0));
        for axis in 0..self.nvars {
            grid = transform_axis(grid, axis, |line| {
                let mut out: BTreeMap<i32, Rational> = BTreeMap::new();
                for (&k, gk) in line {
                    for j in 0..=k {
                        *out.entry(j).or_insert(Rational::ZERO) += &(&table.get(k, j) * gk);
                    }
                }
                out.retain(|_, v| !v.is_zero());
                out
            });
        }
        grid == self.orthant()
    }

    fn orthant(&self) -> FxHashMap<Vec<i32>, Rational> {
        let mut out = FxHashMap::default();
        for (mu, c) in self.orbits.range(vec![0; self.nvars]..) {
            let mut e = mu.clone();
            loop {
                out.insert(e.clone(), c.clone());
                if !next_multiset_permutation(&mut e) {
                    break;
                }
            }
        }
        out
    }
}

/// `A(k, j) = (−1)^{k−j} binom(2k, k+j)`.
struct GammaTable {
    rows: Vec<Vec<Rational>>,
}

impl GammaTable {
    fn new(max: i32) -> Self {
        let rows = (0..=max)
            .map(|k| {
                (0..=k)
                    .map(|j| {
                        let mut b = Rational::ONE;
                        for r in 0..(k - j) {
                            b = &(&b * &Rational::from_integer((2 * k - r) as i64))
                                / &Rational::from_integer((r + 1) as i64);
                        }
                        if (k - j) % 2 == 1 {
                            -b
                        } else {
                            b
                        }
                    })
                    .collect()
            })
            .collect();
        GammaTable { rows }
    }

    fn get(&self, k: i32, j: i32) -> Rational {
        self.rows[k as usize][j as usize].clone()
    }
}

/// Applies a one-dimensional map along `axis` to every line of the grid.
fn transform_axis(
    grid: FxHashMap<Vec<i32>, Rational>,
    axis: usize,
    f: impl Fn(&BTreeMap<i32, Rational>) -> BTreeMap<i32, Rational>,
) -> FxHashMap<Vec<i32>, Rational> {
    let mut lines: FxHashMap<Vec<i32>, BTreeMap<i32, Rational>> = FxHashMap::default();
    for (mut e, c) in grid {
        let j = std::mem::replace(&mut e[axis], 0);
        lines.entry(e).or_default().insert(j, c);
    }
    let mut out = FxHashMap::default();
    for (key, line) in lines {
        for (j, v) in f(&line) {
            let mut e = key.clone();
            e[axis] = j;
            out.insert(e, v);
        }
    }
    out
}

fn orbit_size(mu: &[i32]) -> u128 {
    let mut size: u128 = (1..=mu.len() as u128).product();
    let mut run = 1u128;
    for i in 1..=mu.len() {
        if i < mu.len() && mu[i] == mu[i - 1] {
            run += 1;
        } else {
            size /= (1..=run).product::<u128>();
            run = 1;
        }
    }
    size
}

/// [`symmetric_quotient_orbits`], expanded.
pub fn symmetric_quotient<C: Coeff>(num: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    Ok(symmetric_quotient_orbits(num)?.expand())
}

/// The symmetric Laurent polynomial `ASym(num) / Vandermonde`, computed from
/// the alternant representatives of `num` without expanding the alternant.
///
/// With `R = Σ_μ r_μ z^μ` symmetric and `κ` strictly increasing, the
/// coefficient of `z^κ` in `R · a_δ` is `Σ_σ sgn(σ) r_{sort(κ − σδ)}`. Every
/// `σ ≠ id` lands on a vector with a larger sum of squares, so the `r_μ`
/// are solved in decreasing order of that sum. The result is checked by
/// multiplying back.
pub fn symmetric_quotient_orbits<C: Coeff>(num: &LaurentPoly<C>) -> Result<SymmetricPoly<C>> {
    let n = num.nvars();
    let reps = alternant_representatives(num);
    if reps.is_zero() {
        return Ok(SymmetricPoly::zero(n));
    }
    let not_divisible = || Error::NotDivisible {
        witness: LaurentPoly::monomial(n, reps.terms()[0].0.clone(), reps.terms()[0].1.clone()).render(),
    };
    let lo = reps.terms().iter().map(|(m, _)| m.exps()[0]).min().unwrap();
    let hi = reps.terms().iter().map(|(m, _)| m.exps()[n - 1]).max().unwrap() - (n as i32 - 1);
    if lo > hi {
        return Err(not_divisible());
    }
    let sums: BTreeSet<i64> = reps
        .terms()
        .iter()
        .map(|(m, _)| m.total_degree() - (n * (n - 1) / 2) as i64)
        .collect();
    let mut candidates = Vec::new();
    weakly_increasing(n, lo, hi, &sums, &mut Vec::new(), &mut candidates);
    candidates.sort_by_key(|v: &Vec<i32>| std::cmp::Reverse(v.iter().map(|&x| (x as i64) * (x as i64)).sum::<i64>()));

    let shifts: Vec<(Vec<i32>, bool)> = Permutation::all(n)
        .into_iter()
        .filter(|p| p.images().iter().enumerate().any(|(i, &x)| i != x))
        .map(|p| {
            let d = p.images().iter().enumerate().map(|(i, &x)| i as i32 - x as i32).collect();
            (d, p.sign() < 0)
        })
        .collect();
    let mut solved: FxHashMap<Vec<i32>, C> = FxHashMap::default();
    for mu in candidates {
        let kappa: Vec<i32> = mu.iter().enumerate().map(|(i, &x)| x + i as i32).collect();
        let mut c = reps.coeff_of(&kappa);
        let mut nu = vec![0i32; n];
        for (d, neg) in &shifts {
            let mut inside = true;
            for i in 0..n {
                nu[i] = mu[i] + d[i];
                inside &= lo <= nu[i] && nu[i] <= hi;
            }
            if !inside {
                continue;
            }
            nu.sort_unstable();
            if let Some(v) = solved.get(&nu) {
                c = if *neg { c.add_ref(v) } else { c.sub_ref(v) };
            }
        }
        if !c.is_zero() {
            solved.insert(mu, c);
        }
    }

    let quotient = SymmetricPoly {
        nvars: n,
        orbits: solved.into_iter().collect(),
    };
    if quotient.times_delta_representatives() != reps {
        return Err(not_divisible());
    }
    Ok(quotient)
}

fn weakly_increasing(
    n: usize,
    lo: i32,
    hi: i32,
    sums: &BTreeSet<i64>,
    prefix: &mut Vec<i32>,
    out: &mut Vec<Vec<i32>>,
) {
    let sum: i64 = prefix.iter().map(|&x| x as i64).sum();
    let left = (n - prefix.len()) as i64;
    let start = prefix.last().copied().unwrap_or(lo);
    // reachable sums lie in [sum + left·start, sum + left·hi]
    if sums.range(sum + left * start as i64..=sum + left * hi as i64).next().is_none() {
        return;
    }
    if left == 0 {
        out.push(prefix.clone());
        return;
    }
    for x in start..=hi {
        prefix.push(x);
        weakly_increasing(n, lo, hi, sums, prefix, out);
        prefix.pop();
    }
}

/// Steps `v` to its next arrangement in lexicographic order.
fn next_multiset_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetrize::{build_r, check_inversion_invariance, gamma_expand};

    #[test]
    fn orbit_checks_agree_with_expanded_checks() {
        for (s, t) in [(1, 1), (1, 2), (2, 2), (0, 3), (2, 3), (3, 2), (2, 1), (1, 4)] {
            let r = build_r(s, t).unwrap();
            let orb = SymmetricPoly::from_poly(&r).unwrap();
            assert_eq!(orb.expand(), r);
            assert_eq!(orb.term_count(), r.len() as u128);
            for mode in [InversionMode::EachVariable, InversionMode::AllVariables] {
                assert_eq!(
                    orb.check_inversion_invariance(mode).passed(),
                    check_inversion_invariance(&r, mode).passed(),
                    "({s},{t}) {mode:?}"
                );
            }
            match gamma_expand(&r) {
                Ok(g) => {
                    let g2 = orb.gamma_expand().unwrap();
                    assert_eq!(g2, g);
                    assert!(orb.matches_gamma(&g));
                    assert_eq!(g.recombine(), r);
                }
                Err(_) => assert!(orb.gamma_expand().is_err()),
            }
        }
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[0, 0, 0]), 1);
        assert_eq!(orbit_size(&[0, 1, 1]), 3);
        assert_eq!(orbit_size(&[-1, 0, 1, 1]), 12);
        let p = &LaurentPoly::<Rational>::var(2, 0) + &LaurentPoly::one(2);
        assert!(SymmetricPoly::from_poly(&p).is_err());
    }

    #[test]
    fn mismatched_gamma_is_rejected() {
        let r = build_r(2, 2).unwrap();
        let orb = SymmetricPoly::from_poly(&r).unwrap();
        let mut g = orb.gamma_expand().unwrap();
        let first = g.coeffs.keys().next().unwrap().clone();
        *g.coeffs.get_mut(&first).unwrap() += &Rational::ONE;
        assert!(!orb.matches_gamma(&g));
    }
}
