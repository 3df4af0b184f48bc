//! End-to-end acceptance run. Every criterion prints one `pass`/`fail` line;
//! the test fails if any criterion fails. All comparisons are exact.

use std::io::Write;

use asmcalc::exactpoly::Rational;
use asmcalc::genfun::{
    all_ones, build_recursive_genfun, check_cor_92_all_tops, check_prop_91, t_family_check, GenFunKind,
    TFamilyParams,
};
use asmcalc::mt::{
    alpha_poly, check_cyclic_operator, check_prolonged_diagonal, check_reflection, count_mt, enumerate_mt, MtFilter,
};
use asmcalc::opwords::{
    check_all_word_pairs, check_commutations, check_last_letter_invariant, check_sym_recursion, check_word_pair,
    r_orbits_by_letters, Word,
};
use asmcalc::random::{derive_seed, rng};
use asmcalc::refined::{
    b_brute, b_formula, dpp_determinant, les_rank, verify_c_les, verify_cd_equal, verify_cross_identities,
    verify_cross_identities_brute, verify_dpp, verify_les, verify_symmetry_c, verify_symmetry_generic, hypergeometric_identity,
    LesSystem, ValueSource,
};
use asmcalc::shiftcalc::{
    antisym_seed_to_a, check_delta_to_small_delta, check_right_inverse_identities, random_antisymmetric,
    verify_conjecture_62, verify_shift_antisymmetry,
};
use asmcalc::suite::{example_word_pair, run_suite, Suite, SuiteConfig};
use asmcalc::symmetrize::{build_r, check_inversion_invariance, InversionMode};
use asmcalc::{CheckOutcome, Status};

type Outcome = Result<String, String>;

const BASE_SEED: u64 = 20240611;

/// Writes straight to the stdout handle so the line survives output capture.
fn report(criterion: usize, outcome: &Outcome) {
    let line = match outcome {
        Ok(detail) => format!("criterion {criterion}: pass ({detail})"),
        Err(detail) => format!("criterion {criterion}: fail ({detail})"),
    };
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
}

fn expect_pass(label: &str, c: asmcalc::Result<CheckOutcome>) -> Result<(), String> {
    match c {
        Ok(c) if c.status == Status::Pass => Ok(()),
        Ok(c) => Err(format!(
            "{label}: {} (expected {}, got {}, witness {})",
            c.status,
            c.expected,
            c.actual,
            c.witness.unwrap_or_default()
        )),
        Err(e) => Err(format!("{label}: error {e}")),
    }
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// `∏_{j<n} (3j+1)! / (n+j)!`, computed independently of the library.
fn asm_oracle(n: u32) -> u128 {
    let fact = |k: u32| (1..=k as u128).product::<u128>();
    let mut num = 1u128;
    let mut den = 1u128;
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1);
    num
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn criterion_1() -> Outcome {
    let mut cases = 0;
    let mut gamma_notes = Vec::new();
    for nv in 1..=7usize {
        for s in 0..=nv {
            let t = nv + 1 - s;
            if s > t {
                continue;
            }
            let label = format!("R({s},{t})");
            let r = r_orbits_by_letters(s, t).map_err(|e| format!("{label}: {e}"))?;
            expect_pass(&label, Ok(r.check_inversion_invariance(InversionMode::EachVariable)))?;
            if nv <= 5 {
                // second route: the direct construction and the expanded check
                let direct = build_r(s, t).map_err(|e| format!("{label}: {e}"))?;
                if direct != r.expand() {
                    return Err(format!("{label}: letter-by-letter and direct constructions differ"));
                }
                expect_pass(&label, Ok(check_inversion_invariance(&direct, InversionMode::EachVariable)))?;
            }
            let g = r.gamma_expand().map_err(|e| format!("{label}: γ expansion failed: {e}"))?;
            if !r.matches_gamma(&g) {
                return Err(format!("{label}: γ expansion does not reproduce R"));
            }
            if !g.nonnegative_integral() {
                gamma_notes.push(format!("{label} has a negative or fractional γ coefficient"));
            }
            cases += 1;
        }
    }
    let gamma = if gamma_notes.is_empty() {
        "all γ coefficients non-negative integers".to_string()
    } else {
        gamma_notes.join("; ")
    };
    Ok(format!("{cases} cases up to 7 variables invariant; {gamma}"))
}

fn criterion_2() -> Outcome {
    let seven = enumerate_mt(&[1, 2, 3], &MtFilter::default()).map_err(|e| e.to_string())?;
    if seven != 7 {
        return Err(format!("bottom (1,2,3): {seven} triangles, expected 7"));
    }
    let published = [1u128, 2, 7, 42, 429];
    for n in 1..=5usize {
        let bottom: Vec<i64> = (1..=n as i64).collect();
        let got = enumerate_mt(&bottom, &MtFilter::default()).map_err(|e| e.to_string())?;
        if got != published[n - 1] || got != asm_oracle(n as u32) {
            return Err(format!("bottom 1..{n}: {got} triangles"));
        }
    }
    let vsasm_published = [(5usize, 45885i64), (6, 9304650)];
    for n in 1..=6usize {
        let bottom: Vec<i64> = (1..=n as i64).map(|i| 2 * i).collect();
        let got = count_mt(&bottom).map_err(|e| e.to_string())?;
        let sum: Rational = (1..=n as i64).map(|i| b_formula(n, i)).sum();
        if q(got as i64) != sum {
            return Err(format!("bottom (2,..,{}): count {got}, formula sum {sum}", 2 * n));
        }
        if let Some((_, v)) = vsasm_published.iter().find(|(m, _)| *m == n) {
            if got as i64 != *v {
                return Err(format!("bottom (2,..,{}): count {got}, published {v}", 2 * n));
            }
        }
    }
    Ok("7; 1,2,7,42,429; VSASM counts match the formula sums up to n=6".into())
}

fn criterion_3() -> Outcome {
    for n in 1..=5usize {
        for i in 1..=n as i64 {
            let brute = b_brute(n, i).map_err(|e| e.to_string())?;
            if brute != b_formula(n, i) {
                return Err(format!("B({n},{i}): counted {brute}, formula {}", b_formula(n, i)));
            }
        }
    }
    for n in 2..=8 {
        expect_pass(&format!("formula identities n={n}"), verify_cross_identities(n))?;
    }
    for n in 2..=5 {
        expect_pass(&format!("counted identities n={n}"), verify_cross_identities_brute(n))?;
    }
    Ok("formula side n<=8, counted side n<=5, all residuals zero".into())
}

fn criterion_4() -> Outcome {
    for n in 1..=5 {
        expect_pass(&format!("ASM system n={n}"), verify_les(LesSystem::Asm, n, ValueSource::BruteForce))?;
    }
    for n in 1..=10 {
        expect_pass(&format!("VSASM system n={n}"), verify_les(LesSystem::Vsasm, n, ValueSource::Formula))?;
        expect_pass(
            &format!("alternative VSASM system n={n}"),
            verify_les(LesSystem::VsasmAlternative, n, ValueSource::Formula),
        )?;
    }
    for n in 1..=5 {
        for d in 1..=3 {
            expect_pass(&format!("C system n={n} d={d}"), verify_c_les(n, d))?;
        }
    }
    for n in 1..=6 {
        let r = les_rank(LesSystem::Vsasm, n).map_err(|e| e.to_string())?;
        if r.solution_dim != 1 {
            return Err(format!("n={n}: solution space of dimension {}", r.solution_dim));
        }
    }
    for m in 3..=7 {
        expect_pass(&format!("determinants m={m}"), Ok(verify_dpp(m)))?;
    }
    for size in 1..=7u32 {
        let det = dpp_determinant(size as usize);
        if det != q(asm_oracle(size + 1) as i64) {
            return Err(format!("plane-partition determinant of size {size} is {det}"));
        }
    }
    Ok("all residuals zero; dimension 1 for n<=6; determinants match".into())
}

fn criterion_5() -> Outcome {
    const SEEDS: u64 = 50;
    let mut instances = 0;
    for k in 0..SEEDS {
        let mut r = rng(derive_seed(BASE_SEED, &format!("right-inverse|{k}")));
        expect_pass("right-inverse clauses", Ok(check_right_inverse_identities(&mut r)))?;
        for order in [-1, -2] {
            let mut r = rng(derive_seed(BASE_SEED, &format!("forward-backward|{order}|{k}")));
            expect_pass(&format!("forward to backward i={order}"), Ok(check_delta_to_small_delta(&mut r, order)))?;
        }
        instances += 3;
    }
    for n in 1..=4usize {
        for i in -2..=2i32 {
            for k in 0..SEEDS {
                let d = 1 + (k % 3) as i64;
                let mut r = rng(derive_seed(BASE_SEED, &format!("reflection|{n}|{i}|{k}")));
                expect_pass(&format!("reflection n={n} i={i} d={d}"), Ok(check_reflection(&mut r, n, d, i)))?;
                let mut r = rng(derive_seed(BASE_SEED, &format!("cyclic|{n}|{i}|{k}")));
                expect_pass(&format!("cyclic n={n} i={i}"), Ok(check_cyclic_operator(&mut r, n, i)))?;
                instances += 2;
            }
        }
        for i in [-2, -1] {
            for j in 1..=n {
                for second in [false, true] {
                    let mut r = rng(derive_seed(BASE_SEED, &format!("prolonged|{n}|{i}|{j}|{second}")));
                    expect_pass(
                        &format!("prolonged diagonal n={n} i={i} j={j} second={second}"),
                        Ok(check_prolonged_diagonal(&mut r, n, i, j, second, SEEDS as usize)),
                    )?;
                    instances += SEEDS as usize;
                }
            }
        }
    }
    Ok(format!("{instances} randomized instances"))
}

fn criterion_6() -> Outcome {
    for n in 1..=5 {
        expect_pass(&format!("C symmetry n={n}"), verify_symmetry_c(n, 2))?;
    }
    for k in 0..25 {
        let mut r = rng(derive_seed(BASE_SEED, &format!("symmetry|{k}")));
        expect_pass("symmetry of a random polynomial", Ok(verify_symmetry_generic(&mut r, 6)))?;
    }
    let mut identities = 0;
    for i in 0..=20 {
        for d1 in 4..=i + 4 {
            expect_pass(&format!("hypergeometric identity i={i} d1={d1}"), hypergeometric_identity(i, d1))?;
            identities += 1;
        }
    }
    for n in 1..=5 {
        expect_pass(&format!("C = D n={n}"), verify_cd_equal(n))?;
    }
    Ok(format!("symmetry n<=5 and 25 polynomials; {identities} identity instances; C = D n<=5"))
}

fn criterion_7() -> Outcome {
    let mut instances = 0;
    for (s, t) in [(1usize, 1usize), (1, 2), (2, 2), (1, 3), (2, 3)] {
        let n = s + t - 1;
        expect_pass(&format!("alpha ({s},{t})"), verify_conjecture_62(s, t, &alpha_poly(n)))?;
        for k in 0..10 {
            let mut r = rng(derive_seed(BASE_SEED, &format!("constructed|{s}|{t}|{k}")));
            let b = random_antisymmetric(&mut r, n, n as i32 + 1, 3);
            let a = antisym_seed_to_a(&b).map_err(|e| e.to_string())?;
            expect_pass("constructed input", Ok(verify_shift_antisymmetry(&a)))?;
            expect_pass(&format!("constructed ({s},{t}) sample {k}"), verify_conjecture_62(s, t, &a))?;
            instances += 1;
        }
    }
    Ok(format!("5 cases with α and {instances} constructed inputs"))
}

fn criterion_8() -> Outcome {
    let pairs = check_all_word_pairs(5);
    if pairs.is_empty() {
        return Err("no word pairs checked".into());
    }
    for (a, b, c) in &pairs {
        expect_pass(&format!("{a} / {b}"), Ok(c.clone()))?;
    }
    let (a, b) = example_word_pair();
    let expected: (Word, Word) = (
        "PT,PS,QT,PT,QS,QT".parse().unwrap(),
        "PT,PS,PT,QT,QT,QS".parse().unwrap(),
    );
    if (a.clone(), b.clone()) != expected {
        return Err("worked-example pair has changed".into());
    }
    expect_pass("worked-example pair", check_word_pair(&a, &b))?;
    for k in 0..20 {
        for (s, t) in [(1i64, 2i64), (2, 2), (2, 3), (3, 3)] {
            let mut r = rng(derive_seed(BASE_SEED, &format!("commutation|{s}|{t}|{k}")));
            expect_pass(&format!("commutation ({s},{t})"), check_commutations(&mut r, s, t, 1, 1))?;
            expect_pass(&format!("commutation ({s},{t})"), check_commutations(&mut r, s, t, 2, 1))?;
            let mut r = rng(derive_seed(BASE_SEED, &format!("expansion|{s}|{t}|{k}")));
            expect_pass(&format!("expansion ({s},{t})"), check_sym_recursion(&mut r, s, t, 1))?;
        }
    }
    expect_pass("last letter", Ok(check_last_letter_invariant(5)))?;
    Ok(format!("{} word pairs, worked example, 20 seeds, last-letter invariant", pairs.len()))
}

fn criterion_9() -> Outcome {
    let ks: [&[i64]; 6] = [&[4], &[0, 2], &[1, 3], &[-1, 2], &[1, 2, 3], &[0, 2, 4]];
    for k in ks {
        for m in 0..=3 {
            expect_pass(&format!("alpha_m k={k:?} m={m}"), check_prop_91(k.len(), k, m))?;
        }
    }
    for b in [&[0i64, 2][..], &[0, 2, 4], &[1, 2, 3]] {
        expect_pass(&format!("top coefficients {b:?}"), check_cor_92_all_tops(b))?;
    }
    let asm = [1i64, 2, 7, 42, 429];
    let vsasm = [1i64, 3, 26, 646, 45885];
    for n in 1..=5usize {
        let g = build_recursive_genfun(GenFunKind::Asm, n).map_err(|e| e.to_string())?;
        if all_ones(&g) != q(asm[n - 1]) {
            return Err(format!("ASM generating function n={n} sums to {}", all_ones(&g)));
        }
        let g = build_recursive_genfun(GenFunKind::Vsasm, n).map_err(|e| e.to_string())?;
        if all_ones(&g) != q(vsasm[n - 1]) {
            return Err(format!("VSASM generating function n={n} sums to {}", all_ones(&g)));
        }
    }
    for n in 2..=4 {
        expect_pass(&format!("closed form n={n}"), t_family_check(&TFamilyParams::new(1, 0, 0, 0), n))?;
    }
    for k in 0..10 {
        use rand::Rng;
        let mut r = rng(derive_seed(BASE_SEED, &format!("a-zero|{k}")));
        let mut draw = || Rational::new(r.gen_range(-5..=5), r.gen_range(1..=3));
        let params = TFamilyParams::new(0, draw(), draw(), draw());
        expect_pass(&format!("a = 0 with {params}"), t_family_check(&params, 3))?;
    }
    Ok("alpha_m, top coefficients, 1,2,7,42,429 and 1,3,26,646,45885, T family".into())
}

fn criterion_10() -> Outcome {
    let cfg = SuiteConfig::default();
    for suite in Suite::NAMED {
        let one = run_suite(suite, &cfg, 1).map_err(|e| e.to_string())?.without_timings();
        let many = run_suite(suite, &cfg, 4).map_err(|e| e.to_string())?.without_timings();
        if one.to_json() != many.to_json() || one.to_csv() != many.to_csv() {
            return Err(format!("{}: reports differ between 1 and 4 workers", suite.name()));
        }
        if one.has_failures() {
            return Err(format!("{}: suite reports a failure", suite.name()));
        }
    }
    Ok(format!("{} suites byte-identical with 1 and 4 workers", Suite::NAMED.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = Vec::new();
    for (k, run) in criteria.iter().enumerate() {
        let outcome = run();
        report(k + 1, &outcome);
        if outcome.is_err() {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
