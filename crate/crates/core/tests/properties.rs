//! Algebraic invariants checked on generated inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use asmcalc::exactpoly::{div_vandermonde, exact_div, LaurentPoly, Rational};
use asmcalc::mt::{count_mt, enumerate_mt, MtFilter};
use asmcalc::random::{random_laurent, random_poly, rng};
use asmcalc::shiftcalc::{antisym_seed_to_a, ext_sum, random_antisymmetric, verify_shift_antisymmetry, w_inv, w_op, Poly};
use asmcalc::symmetrize::{
    asym, asym_naive, gamma, gamma_expand, symmetric_quotient, symmetric_quotient_orbits, sym, Permutation,
    SymmetricPoly,
};

type P = LaurentPoly;

fn laurent(seed: u64, n: usize) -> P {
    random_laurent(&mut rng(seed), n, -2, 2, 5)
}

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn perm(seed: u64, n: usize) -> Permutation {
    let all = Permutation::all(n);
    all[(seed % all.len() as u64) as usize].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_arithmetic_matches_big_rationals(
        a in -1_000_000i64..1_000_000, b in 1i64..1000,
        c in -1_000_000i64..1_000_000, d in 1i64..1000,
        e in 0i32..6,
    ) {
        let (x, y) = (Rational::new(a, b), Rational::new(c, d));
        let (bx, by) = (big(a, b), big(c, d));
        prop_assert_eq!((&x + &y).to_big(), &bx + &by);
        prop_assert_eq!((&x - &y).to_big(), &bx - &by);
        prop_assert_eq!((&x * &y).to_big(), &bx * &by);
        if c != 0 {
            prop_assert_eq!((&x / &y).to_big(), &bx / &by);
        }
        // repeated squaring leaves the small representation
        let mut p = x.clone();
        let mut bp = bx.clone();
        for _ in 0..e {
            p = &p * &p;
            bp = &bp * &bp;
        }
        prop_assert_eq!(p.to_big(), bp);
    }

    #[test]
    fn ring_axioms(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(), n in 1usize..4) {
        let (a, b, c) = (laurent(s1, n), laurent(s2, n), laurent(s3, n));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &P::one(n), a);
    }

    #[test]
    fn exact_division_round_trip(s1 in any::<u64>(), s2 in any::<u64>(), n in 1usize..4) {
        let (a, b) = (laurent(s1, n), laurent(s2, n));
        prop_assume!(!b.is_zero());
        prop_assert_eq!(exact_div(&(&a * &b), &b).unwrap(), a);
    }

    #[test]
    fn inversion_is_an_involution(s in any::<u64>(), n in 1usize..5, v in 0usize..4) {
        let a = laurent(s, n);
        prop_assert_eq!(a.invert_all().invert_all(), a.clone());
        let v = v % n;
        prop_assert_eq!(a.invert_vars(&[v]).unwrap().invert_vars(&[v]).unwrap(), a);
    }

    #[test]
    fn permutations_compose(s in any::<u64>(), p1 in any::<u64>(), p2 in any::<u64>(), n in 1usize..5) {
        let a = laurent(s, n);
        let (sigma, tau) = (perm(p1, n), perm(p2, n));
        let twice = a.permute(&sigma).unwrap().permute(&tau).unwrap();
        prop_assert_eq!(twice, a.permute(&tau.compose(&sigma)).unwrap());
        prop_assert_eq!(a.permute(&sigma).unwrap().permute(&sigma.inverse()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        s1 in any::<u64>(), s2 in any::<u64>(),
        pt in prop::collection::vec((1i64..6, 1i64..4), 3),
    ) {
        let (a, b) = (laurent(s1, 3), laurent(s2, 3));
        let point: Vec<Rational> = pt.iter().map(|&(x, y)| Rational::new(x, y)).collect();
        let (ea, eb) = (a.eval(&point).unwrap(), b.eval(&point).unwrap());
        prop_assert_eq!((&a * &b).eval(&point).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&point).unwrap(), &ea + &eb);
    }

    #[test]
    fn antisymmetrizer_is_antisymmetric(s in any::<u64>(), n in 2usize..5, i in 0usize..3) {
        let a = laurent(s, n);
        let b = asym(&a);
        prop_assert_eq!(b.clone(), asym_naive(&a));
        let i = i % (n - 1);
        let swapped = b.permute(&Permutation::transposition(n, i, i + 1)).unwrap();
        prop_assert_eq!(swapped, -&b);
        let sa = sym(&a);
        prop_assert_eq!(sa.permute(&Permutation::transposition(n, i, i + 1)).unwrap(), sa);
    }

    #[test]
    fn symmetric_quotient_agrees_with_division(s in any::<u64>(), n in 1usize..5) {
        let a = laurent(s, n);
        let by_division = div_vandermonde(&asym(&a)).unwrap();
        prop_assert_eq!(symmetric_quotient(&a).unwrap(), by_division.clone());
        let orbits = symmetric_quotient_orbits(&a).unwrap();
        prop_assert_eq!(orbits.term_count(), by_division.len() as u128);
        prop_assert_eq!(SymmetricPoly::from_poly(&by_division).unwrap(), orbits);
    }

    #[test]
    fn gamma_expansion_round_trip(
        coeffs in prop::collection::vec(((0u32..4, 0u32..4), -5i64..6), 1..6),
    ) {
        let n = 2;
        let mut r = P::zero(n);
        for ((k0, k1), c) in &coeffs {
            let term = &(&gamma(n, 0).pow(*k0) * &gamma(n, 1).pow(*k1)) * &P::constant(n, Rational::from_integer(*c));
            r = &r + &term;
        }
        let g = gamma_expand(&r).unwrap();
        prop_assert_eq!(g.recombine(), r.clone());
        // symmetrized, the orbit route must give the same expansion
        let sr = sym(&r);
        let orb = SymmetricPoly::from_poly(&sr).unwrap();
        let g2 = orb.gamma_expand().unwrap();
        prop_assert_eq!(&g2, &gamma_expand(&sr).unwrap());
        prop_assert!(orb.matches_gamma(&g2));
    }

    #[test]
    fn extended_sums_glue(s in any::<u64>(), a in -6i64..6, b in -6i64..6, c in -6i64..6) {
        let p = random_poly(&mut rng(s), 2, 3, 4);
        let k = |v: i64| Poly::constant(2, Rational::from_integer(v));
        let left = &ext_sum(&p, 0, &k(a), &k(b)) + &ext_sum(&p, 0, &k(b + 1), &k(c));
        prop_assert_eq!(left, ext_sum(&p, 0, &k(a), &k(c)));
        // ordinary range: direct summation
        if a <= c {
            let mut direct = Poly::zero(2);
            for x in a..=c {
                direct = &direct + &asmcalc::shiftcalc::substitute(&p, 0, &k(x)).unwrap();
            }
            prop_assert_eq!(ext_sum(&p, 0, &k(a), &k(c)), direct);
        }
    }

    #[test]
    fn w_inverse_is_two_sided(s in any::<u64>()) {
        let p = random_poly(&mut rng(s), 2, 4, 5);
        prop_assert_eq!(w_inv(&w_op(&p, 0, 1), 0, 1), p.clone());
        prop_assert_eq!(w_op(&w_inv(&p, 0, 1), 0, 1), p);
    }

    #[test]
    fn constructed_inputs_are_shift_antisymmetric(s in any::<u64>(), n in 2usize..4) {
        let b = random_antisymmetric(&mut rng(s), n, n as i32 + 1, 3);
        let a = antisym_seed_to_a(&b).unwrap();
        prop_assert!(verify_shift_antisymmetry(&a).passed());
    }

    #[test]
    fn triangle_counts_agree(gaps in prop::collection::vec(1i64..4, 1..5), start in -3i64..3) {
        let mut bottom = vec![start];
        for g in gaps {
            bottom.push(bottom.last().unwrap() + g);
        }
        prop_assert_eq!(count_mt(&bottom).unwrap(), enumerate_mt(&bottom, &MtFilter::default()).unwrap());
    }
}
