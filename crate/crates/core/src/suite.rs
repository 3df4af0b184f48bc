//! Named verification suites: each expands into independent jobs that run on
//! a worker pool and merge into a sorted report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::check::CheckOutcome;
use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, Rational};
use crate::genfun::{
    all_ones, build_q, build_recursive_genfun, check_cor_92_all_tops, check_prop_91, t_family_check,
    GenFunKind, TFamilyParams,
};
use crate::mt::{
    alpha_poly, check_alpha_counts, check_cyclic_and_shift, check_cyclic_operator, check_delta_statistics,
    check_prolonged_diagonal, check_reflection, count_mt, enumerate_mt, MtFilter,
};
use crate::opwords::{
    check_all_word_pairs, r_orbits_by_letters, check_commutations, check_last_letter_invariant, check_sym_recursion,
    check_word_pair, Word,
};
use crate::random::{derive_seed, rng, CheckRng};
use crate::refined::{
    asm_count_formula, b_formula, hypergeometric_identity, les_rank, verify_c_les, verify_cd_equal, verify_cd_les,
    verify_cross_identities, verify_cross_identities_brute, verify_dpp, verify_les, verify_symmetry_c,
    verify_symmetry_generic, Family, LesSystem, ValueSource,
};
use crate::report::{ReportEntry, VerificationReport};
use crate::shiftcalc::{antisym_seed_to_a, check_delta_to_small_delta, check_right_inverse_identities, random_antisymmetric, verify_conjecture_62};
use crate::symmetrize::{build_r, gamma_expand, InversionMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Conjecture1,
    Conjecture62,
    Les,
    Cd,
    SymmetryC,
    Words,
    Genfun,
    Identities,
    Mt,
    Operators,
    All,
}

impl Suite {
    pub const NAMED: [Suite; 10] = [
        Suite::Conjecture1,
        Suite::Conjecture62,
        Suite::Les,
        Suite::Cd,
        Suite::SymmetryC,
        Suite::Words,
        Suite::Genfun,
        Suite::Identities,
        Suite::Mt,
        Suite::Operators,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Conjecture1 => "conjecture-1",
            Suite::Conjecture62 => "conjecture-6.2",
            Suite::Les => "les",
            Suite::Cd => "cd",
            Suite::SymmetryC => "symmetry-c",
            Suite::Words => "words",
            Suite::Genfun => "genfun",
            Suite::Identities => "identities",
            Suite::Mt => "mt",
            Suite::Operators => "operators",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::NAMED
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Bounds shared by the suites; `None` selects each suite's default range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest number of variables for the inversion sweep.
    pub max_vars: Option<usize>,
    /// Largest `n` for size-indexed checks.
    pub n: Option<usize>,
    /// Random instances per randomized check.
    pub samples: Option<usize>,
    /// Longest word for the word sweeps.
    pub max_len: Option<usize>,
    /// Restricts the linear-system suite to one family.
    pub family: Option<Family>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            max_vars: None,
            n: None,
            samples: None,
            max_len: None,
            family: None,
        }
    }
}

impl SuiteConfig {
    fn validate(&self) -> Result<()> {
        let bad = |what: &'static str, detail: String| Err(Error::OutOfRange { what, detail });
        if let Some(v) = self.max_vars {
            if !(1..=7).contains(&v) {
                return bad("max-vars", format!("{v} is outside 1..=7"));
            }
        }
        if let Some(n) = self.n {
            if !(1..=12).contains(&n) {
                return bad("n", format!("{n} is outside 1..=12"));
            }
        }
        if let Some(l) = self.max_len {
            if l > 7 {
                return bad("max-len", format!("{l} is larger than 7"));
            }
        }
        if self.samples == Some(0) {
            return bad("samples", "need at least one sample".into());
        }
        Ok(())
    }

    fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }

    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

type Outcomes = Vec<(&'static str, Result<CheckOutcome>)>;
type Runner = Box<dyn Fn(&mut CheckRng) -> Outcomes + Send + Sync>;

/// One unit of work; a job may emit several entries that share its
/// parameters.
pub struct Job {
    params: BTreeMap<String, String>,
    label: String,
    randomized: bool,
    run: Runner,
}

impl Job {
    fn new(label: &str, params: &[(&str, String)], run: impl Fn(&mut CheckRng) -> Outcomes + Send + Sync + 'static) -> Self {
        Job {
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            label: label.to_string(),
            randomized: false,
            run: Box::new(run),
        }
    }

    fn single(
        id: &'static str,
        params: &[(&str, String)],
        run: impl Fn(&mut CheckRng) -> Result<CheckOutcome> + Send + Sync + 'static,
    ) -> Self {
        Job::new(id, params, move |r| vec![(id, run(r))])
    }

    fn randomized(mut self) -> Self {
        self.randomized = true;
        self
    }

    fn execute(&self, base_seed: u64) -> Vec<ReportEntry> {
        let mut params = self.params.clone();
        let key = format!(
            "{}|{}",
            self.label,
            params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
        );
        let seed = derive_seed(base_seed, &key);
        if self.randomized {
            params.insert("seed".into(), seed.to_string());
        }
        let mut r = rng(seed);
        let start = Instant::now();
        let outcomes = (self.run)(&mut r);
        let elapsed = start.elapsed().as_millis() as u64;
        outcomes
            .into_iter()
            .map(|(id, res)| {
                let outcome = res.unwrap_or_else(|e| CheckOutcome::fail("no error", "error", e.to_string()));
                ReportEntry::new(id, params.clone(), outcome, elapsed)
            })
            .collect()
    }
}

fn p<T: ToString>(k: &str, v: T) -> (&str, String) {
    (k, v.to_string())
}

fn list(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn int(v: impl Into<i64>) -> Rational {
    Rational::from_integer(v.into())
}

fn conjecture_1_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let max_vars = cfg.max_vars.unwrap_or(6);
    let mut jobs = Vec::new();
    for nv in 1..=max_vars {
        for s in 0..=nv {
            let t = nv + 1 - s;
            // R_{s,t} for s > t grows quickly; explored up to six variables
            if s > t && nv > 6 {
                continue;
            }
            jobs.push(Job::new("conjecture-1", &[p("s", s), p("t", t)], move |_| r_checks(s, t)));
        }
    }
    jobs
}

/// Inversion invariance and the γ expansion of `R_{s,t}`. For `s > t`
/// invariance is not expected, so every outcome there is a finding.
fn r_checks(s: usize, t: usize) -> Outcomes {
    let r = match r_orbits_by_letters(s, t) {
        Ok(r) => r,
        Err(e) => return vec![("conjecture-1.inversion", Err(e))],
    };
    let mut out = Vec::new();
    let small = s + t <= 6;
    let expanded = small.then(|| r.expand());
    if let Some(er) = &expanded {
        let agree = build_r(s, t).map(|direct| {
            if &direct == er {
                CheckOutcome::pass("equal", "equal")
            } else {
                CheckOutcome::fail("equal", "different", "direct and letter-by-letter constructions differ")
            }
        });
        out.push(("conjecture-1.construction", agree));
    }
    let each = r.check_inversion_invariance(InversionMode::EachVariable);
    let all = r.check_inversion_invariance(InversionMode::AllVariables);
    if s > t {
        out.push(("conjecture-1.inversion", Ok(each.as_finding())));
        out.push(("conjecture-1.inversion-all", Ok(all.as_finding())));
        return out;
    }
    out.push(("conjecture-1.inversion", Ok(each)));
    out.push(("conjecture-1.inversion-all", Ok(all)));
    let gamma = r.gamma_expand().map(|g| {
        if !r.matches_gamma(&g) {
            return CheckOutcome::fail("recombines to R", "differs", "γ expansion does not recombine");
        }
        if let Some(er) = &expanded {
            match gamma_expand(er) {
                Ok(g2) if g2 == g => {}
                _ => {
                    return CheckOutcome::fail(
                        "orbit and elimination expansions agree",
                        "differ",
                        "γ expansions by orthant transform and by elimination differ",
                    )
                }
            }
        }
        let actual = match g.first_offender() {
            None => format!("{} coefficients, all non-negative integers", g.coeffs.len()),
            Some((idx, c)) => format!("{} coefficients, offender {c} at {idx:?}", g.coeffs.len()),
        };
        CheckOutcome::finding("non-negative integer coefficients", actual)
    });
    out.push(("conjecture-1.gamma", gamma));
    out
}

const DIAGONAL_CASES: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)];

fn conjecture_62_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let samples = cfg.samples_or(10);
    let mut jobs = Vec::new();
    for (s, t) in DIAGONAL_CASES {
        jobs.push(Job::single("conjecture-6.2.alpha", &[p("s", s), p("t", t)], move |_| {
            verify_conjecture_62(s, t, &alpha_poly(s + t - 1))
        }));
        for k in 0..samples {
            jobs.push(
                Job::single("conjecture-6.2.constructed", &[p("s", s), p("t", t), p("sample", k)], move |r| {
                    let n = s + t - 1;
                    let b = random_antisymmetric(r, n, n as i32 + 1, 3);
                    verify_conjecture_62(s, t, &antisym_seed_to_a(&b)?)
                })
                .randomized(),
            );
        }
    }
    jobs
}

fn les_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let want = |f: Family| cfg.family.is_none() || cfg.family == Some(f);
    let mut jobs = Vec::new();
    if want(Family::A) {
        for n in 1..=cfg.n_or(5).min(6) {
            jobs.push(Job::single("les.asm.counted", &[p("n", n)], move |_| {
                verify_les(LesSystem::Asm, n, ValueSource::BruteForce)
            }));
        }
        for n in 1..=cfg.n_or(8) {
            jobs.push(Job::single("les.asm.from-c", &[p("n", n)], move |_| {
                verify_les(LesSystem::Asm, n, ValueSource::CdNumbers)
            }));
        }
    }
    if want(Family::B) {
        for n in 1..=cfg.n_or(10) {
            jobs.push(Job::single("les.vsasm", &[p("n", n)], move |_| {
                verify_les(LesSystem::Vsasm, n, ValueSource::Formula)
            }));
            jobs.push(Job::single("les.vsasm-alternative", &[p("n", n)], move |_| {
                verify_les(LesSystem::VsasmAlternative, n, ValueSource::Formula)
            }));
        }
        for n in 1..=cfg.n_or(6) {
            jobs.push(Job::single("les.rank", &[p("n", n)], move |_| {
                let r = les_rank(LesSystem::Vsasm, n)?;
                Ok(CheckOutcome::compare(&1usize, &r.solution_dim))
            }));
            jobs.push(Job::single("les.rank-alternative", &[p("n", n)], move |_| {
                let r = les_rank(LesSystem::VsasmAlternative, n)?;
                Ok(CheckOutcome::finding("corank 1", format!("corank {}", r.solution_dim)))
            }));
        }
        for m in 3..=cfg.n_or(7).max(3) {
            jobs.push(Job::single("les.dpp", &[p("m", m)], move |_| Ok(verify_dpp(m))));
        }
    }
    if want(Family::C) {
        for n in 1..=cfg.n_or(5) {
            for d in 1..=3 {
                jobs.push(Job::single("les.c", &[p("n", n), p("d", d)], move |_| verify_c_les(n, d)));
            }
        }
    }
    jobs
}

fn cd_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 1..=cfg.n_or(5) {
        for d in 1..=3 {
            jobs.push(Job::single("cd.les", &[p("n", n), p("d", d)], move |_| verify_cd_les(n, d)));
        }
        jobs.push(Job::single("cd.equal", &[p("n", n)], move |_| verify_cd_equal(n)));
    }
    jobs
}

fn symmetry_c_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 1..=cfg.n_or(5) {
        for d in 1..=3 {
            jobs.push(Job::single("symmetry-c.numbers", &[p("n", n), p("d", d)], move |_| verify_symmetry_c(n, d)));
        }
    }
    for k in 0..cfg.samples_or(25) {
        jobs.push(
            Job::single("symmetry-c.random", &[p("sample", k)], move |r| Ok(verify_symmetry_generic(r, 6))).randomized(),
        );
    }
    for i in 0..=20i64 {
        jobs.push(Job::single("symmetry-c.hypergeometric", &[p("i", i)], move |_| {
            let parts = (4..=i + 4).map(|d1| hypergeometric_identity(i, d1)).collect::<Result<Vec<_>>>()?;
            Ok(CheckOutcome::all(&format!("d1 in 4..={}", i + 4), parts))
        }));
    }
    jobs
}

/// The pair of words labelling the two lattice paths of the worked example.
pub fn example_word_pair() -> (Word, Word) {
    (
        "PT,PS,QT,PT,QS,QT".parse().expect("valid word"),
        "PT,PS,PT,QT,QT,QS".parse().expect("valid word"),
    )
}

fn words_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let max_len = cfg.max_len.unwrap_or(5);
    let samples = cfg.samples_or(20);
    let mut jobs = vec![
        Job::single("words.pairs", &[p("max_len", max_len)], move |_| {
            let all = check_all_word_pairs(max_len);
            Ok(CheckOutcome::all(
                &format!("{} pairs", all.len()),
                all.into_iter().map(|(a, b, c)| {
                    let w = format!("{a} / {b}");
                    if c.passed() {
                        c
                    } else {
                        c.with_witness(w)
                    }
                }),
            ))
        }),
        Job::single("words.example-pair", &[], |_| {
            let (a, b) = example_word_pair();
            check_word_pair(&a, &b)
        }),
        Job::single("words.last-letter", &[p("max_len", max_len)], move |_| {
            Ok(check_last_letter_invariant(max_len))
        }),
    ];
    for k in 0..samples {
        for (s, t) in [(1, 2), (2, 2), (2, 3), (3, 3)] {
            jobs.push(
                Job::single("words.commutation", &[p("s", s), p("t", t), p("sample", k)], move |r| {
                    let mut parts = vec![check_commutations(r, s, t, 1, 1)?];
                    if t >= 2 {
                        parts.push(check_commutations(r, s, t, 2, 1)?);
                    }
                    Ok(CheckOutcome::all("both clauses", parts))
                })
                .randomized(),
            );
        }
        for (s, t) in [(1, 2), (2, 2), (2, 3), (3, 3)] {
            jobs.push(
                Job::single("words.expansion", &[p("s", s), p("t", t), p("sample", k)], move |r| {
                    check_sym_recursion(r, s, t, 1)
                })
                .randomized(),
            );
        }
    }
    jobs
}

fn genfun_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let samples = cfg.samples_or(10);
    let max_n = cfg.n_or(5);
    let mut jobs = Vec::new();
    let ks: [&[i64]; 6] = [&[4], &[0, 2], &[1, 3], &[-1, 2], &[1, 2, 3], &[0, 2, 4]];
    for k in ks {
        let k = k.to_vec();
        for m in 0..=3usize {
            let kk = k.clone();
            jobs.push(Job::single("genfun.alpha-m", &[p("k", list(&k)), p("m", m)], move |_| {
                check_prop_91(kk.len(), &kk, m)
            }));
        }
    }
    let bottoms: [&[i64]; 3] = [&[0, 2], &[0, 2, 4], &[1, 2, 3]];
    for b in bottoms {
        let b = b.to_vec();
        jobs.push(Job::single("genfun.top-coefficients", &[p("bottom", list(&b))], move |_| {
            check_cor_92_all_tops(&b)
        }));
    }
    for n in 1..=max_n {
        jobs.push(Job::single("genfun.asm", &[p("n", n)], move |_| {
            let g = build_recursive_genfun(GenFunKind::Asm, n)?;
            Ok(CheckOutcome::compare(&asm_count_formula(n), &all_ones(&g)))
        }));
        jobs.push(Job::single("genfun.vsasm", &[p("n", n)], move |_| {
            let g = build_recursive_genfun(GenFunKind::Vsasm, n)?;
            let count = count_mt(&GenFunKind::Vsasm.bottom(n))?;
            Ok(CheckOutcome::compare(&int(count as i64), &all_ones(&g)))
        }));
    }
    for n in 1..=max_n.min(4) {
        jobs.push(Job::single("genfun.palindromic", &[p("n", n)], move |_| {
            let q = build_q(n, &GenFunKind::Vsasm.bottom(n))?;
            let series = q.last_variable_series();
            let top = 2 * n as i64 - 2;
            let parts = series.iter().map(|(s, c)| {
                let mirror = series.get(&(top - s)).map(|m| m.eval(&Rational::ONE)).unwrap_or(Rational::ZERO);
                CheckOutcome::compare(&c.eval(&Rational::ONE), &mirror).with_witness(format!("z^{s}"))
            });
            Ok(CheckOutcome::all("coefficients", parts.collect::<Vec<_>>()))
        }));
        jobs.push(Job::single("genfun.s-zero", &[p("n", n)], move |_| {
            let q = build_q(n, &GenFunKind::Vsasm.bottom(n))?.at_x_one();
            let shift = LaurentPoly::term(&vec![1 - n as i32; n], Rational::ONE);
            let expected = &shift * &q;
            let r = build_r(0, n + 1)?;
            Ok(if r == expected {
                CheckOutcome::pass("equal", "equal")
            } else {
                CheckOutcome::fail("equal", "different", "Sym of the s = 0 function is not the shifted Q")
            })
        }));
    }
    for n in 2..=max_n.min(4) {
        jobs.push(Job::single("genfun.t-family.closed-form", &[p("n", n)], move |_| {
            t_family_check(&TFamilyParams::new(1, 0, 0, 0), n)
        }));
        jobs.push(Job::single("genfun.t-family.mixed", &[p("n", n)], move |_| {
            t_family_check(&TFamilyParams::new(1, 1, 1, 0), n)
        }));
    }
    for k in 0..samples {
        jobs.push(
            Job::single("genfun.t-family.a-zero", &[p("sample", k)], move |r| {
                use rand::Rng;
                let mut q = || Rational::new(r.gen_range(-5..=5), r.gen_range(1..=3));
                let params = TFamilyParams::new(0, q(), q(), q());
                t_family_check(&params, 3).map(|c| c.with_witness(params.to_string()))
            })
            .randomized(),
        );
    }
    jobs
}

fn identities_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 2..=cfg.n_or(8) {
        jobs.push(Job::single("identities.formulas", &[p("n", n)], move |_| verify_cross_identities(n)));
    }
    for n in 2..=cfg.n_or(5).min(6) {
        jobs.push(Job::single("identities.counted", &[p("n", n)], move |_| verify_cross_identities_brute(n)));
    }
    jobs
}

fn mt_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs = vec![Job::single("mt.example", &[p("bottom", "1,2,3")], |_| {
        Ok(CheckOutcome::compare(&7u128, &enumerate_mt(&[1, 2, 3], &MtFilter::default())?))
    })];
    for n in 1..=cfg.n_or(5) {
        jobs.push(Job::single("mt.asm", &[p("n", n)], move |_| {
            let bottom: Vec<i64> = (1..=n as i64).collect();
            let count = enumerate_mt(&bottom, &MtFilter::default())?;
            Ok(CheckOutcome::compare(&asm_count_formula(n), &int(count as i64)))
        }));
    }
    for n in 1..=cfg.n_or(6) {
        jobs.push(Job::single("mt.vsasm", &[p("n", n)], move |_| {
            let bottom: Vec<i64> = (1..=n as i64).map(|i| 2 * i).collect();
            let count = count_mt(&bottom)?;
            let sum: Rational = (1..=n as i64).map(|i| b_formula(n, i)).sum();
            Ok(CheckOutcome::compare(&sum, &int(count as i64)))
        }));
    }
    for n in 1..=cfg.n_or(4).min(5) {
        jobs.push(
            Job::new("mt.alpha", &[p("n", n)], move |r| {
                let mut out = vec![
                    ("mt.alpha.counts", check_alpha_counts(r, n, 5)),
                    ("mt.alpha.cyclic", check_cyclic_and_shift(r, n, 5)),
                ];
                out.push(("mt.alpha.diagonals", check_delta_statistics(r, n, 1, 3)));
                out
            })
            .randomized(),
        );
    }
    jobs
}

fn operators_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let samples = cfg.samples_or(50);
    let max_n = cfg.n_or(4);
    let mut jobs = vec![
        Job::single("operators.right-inverse", &[], move |r| {
            Ok(CheckOutcome::all("instances", (0..samples).map(|_| check_right_inverse_identities(r)).collect::<Vec<_>>()))
        })
        .randomized(),
    ];
    for order in [-1, -2] {
        jobs.push(
            Job::single("operators.forward-to-backward", &[p("i", order)], move |r| {
                Ok(CheckOutcome::all("instances", (0..samples).map(|_| check_delta_to_small_delta(r, order)).collect::<Vec<_>>()))
            })
            .randomized(),
        );
    }
    for n in 1..=max_n {
        for i in -2..=2i32 {
            jobs.push(
                Job::single("operators.reflection", &[p("n", n), p("i", i)], move |r| {
                    let parts: Vec<_> = (0..samples).map(|k| check_reflection(r, n, 1 + (k % 3) as i64, i)).collect();
                    Ok(CheckOutcome::all("instances", parts))
                })
                .randomized(),
            );
            jobs.push(
                Job::single("operators.cyclic", &[p("n", n), p("i", i)], move |r| {
                    let parts: Vec<_> = (0..samples).map(|_| check_cyclic_operator(r, n, i)).collect();
                    Ok(CheckOutcome::all("instances", parts))
                })
                .randomized(),
            );
        }
        for i in [-2, -1] {
            for j in 1..=n {
                for second in [false, true] {
                    jobs.push(
                        Job::single(
                            "operators.prolonged-diagonal",
                            &[p("n", n), p("i", i), p("j", j), p("display", if second { 2 } else { 1 })],
                            move |r| Ok(check_prolonged_diagonal(r, n, i, j, second, samples)),
                        )
                        .randomized(),
                    );
                }
            }
        }
    }
    jobs
}

pub fn jobs_for(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Job>> {
    cfg.validate()?;
    Ok(match suite {
        Suite::Conjecture1 => conjecture_1_jobs(cfg),
        Suite::Conjecture62 => conjecture_62_jobs(cfg),
        Suite::Les => les_jobs(cfg),
        Suite::Cd => cd_jobs(cfg),
        Suite::SymmetryC => symmetry_c_jobs(cfg),
        Suite::Words => words_jobs(cfg),
        Suite::Genfun => genfun_jobs(cfg),
        Suite::Identities => identities_jobs(cfg),
        Suite::Mt => mt_jobs(cfg),
        Suite::Operators => operators_jobs(cfg),
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::NAMED {
                all.extend(jobs_for(s, cfg)?);
            }
            all
        }
    })
}

/// Runs every job of `suite` on `threads` workers. Entries are sorted and
/// seeds depend only on each job's identity, so the report does not depend
/// on the worker count apart from timings.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig, threads: usize) -> Result<VerificationReport> {
    let jobs = jobs_for(suite, cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    let seed = cfg.seed;
    let entries: Vec<ReportEntry> = pool.install(|| jobs.par_iter().flat_map_iter(|j| j.execute(seed)).collect());
    Ok(VerificationReport::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::NAMED {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn invalid_bounds_rejected() {
        let cfg = SuiteConfig {
            max_vars: Some(9),
            ..SuiteConfig::default()
        };
        assert!(run_suite(Suite::Conjecture1, &cfg, 1).is_err());
    }

    #[test]
    fn small_conjecture_sweep() {
        let cfg = SuiteConfig {
            max_vars: Some(3),
            ..SuiteConfig::default()
        };
        let report = run_suite(Suite::Conjecture1, &cfg, 2).unwrap();
        assert!(!report.has_failures());
        let inversions: Vec<_> = report
            .entries
            .iter()
            .filter(|e| e.check_id == "conjecture-1.inversion")
            .collect();
        assert_eq!(inversions.len(), 2 + 3 + 4);
    }
}
