//! Seeded generators for randomized checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactpoly::{Coeff, LaurentPoly, Monomial, Rational};

pub type CheckRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CheckRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives a per-check seed from a base seed and a label, so that checks are
/// reproducible independently of execution order.
pub fn derive_seed(base: u64, label: &str) -> u64 {
    // FNV-1a over the label, folded with the base
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ base.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Random polynomial with non-negative exponents `≤ max_deg` per variable and
/// small nonzero integer coefficients.
pub fn random_poly(rng: &mut CheckRng, nvars: usize, max_deg: i32, nterms: usize) -> LaurentPoly {
    random_laurent(rng, nvars, 0, max_deg, nterms)
}

/// Random Laurent polynomial with exponents in `lo..=hi`.
pub fn random_laurent(
    rng: &mut CheckRng,
    nvars: usize,
    lo: i32,
    hi: i32,
    nterms: usize,
) -> LaurentPoly {
    let terms = (0..nterms).map(|_| {
        let e: Monomial = Monomial((0..nvars).map(|_| rng.gen_range(lo..=hi)).collect());
        let mut c = rng.gen_range(-5i64..=5);
        if c == 0 {
            c = 1;
        }
        (e, Rational::from_integer(c))
    });
    LaurentPoly::from_terms(nvars, terms)
}

/// Random Laurent polynomial over an arbitrary coefficient ring.
pub fn random_laurent_in<C: Coeff>(
    rng: &mut CheckRng,
    nvars: usize,
    lo: i32,
    hi: i32,
    nterms: usize,
) -> LaurentPoly<C> {
    random_laurent(rng, nvars, lo, hi, nterms).map_coeffs(|c| C::from_rational(c.clone()))
}

pub fn random_ints(rng: &mut CheckRng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(lo..=hi)).collect()
}
