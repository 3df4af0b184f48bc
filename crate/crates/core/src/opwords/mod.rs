//! Words over the letters `PS`, `PT`, `QS`, `QT`, the rational functions they
//! build by adjoining one variable per letter, and the identities between
//! their symmetrizations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::check::{abbreviate, CheckOutcome};
use crate::error::{Error, Result};
use crate::exactpoly::LaurentPoly;
use crate::random::{random_laurent, CheckRng};
use crate::symmetrize::{
    alternant_representatives, asym, sym_over_vandermonde, symmetric_quotient_orbits, OverVandermonde, SymmetricPoly,
};

type Poly = LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    PS,
    PT,
    QS,
    QT,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::PS, Letter::PT, Letter::QS, Letter::QT];

    pub fn is_s(self) -> bool {
        matches!(self, Letter::PS | Letter::QS)
    }

    pub fn is_p(self) -> bool {
        matches!(self, Letter::PS | Letter::PT)
    }

    fn kind(self) -> FactorKind {
        if self.is_s() {
            FactorKind::S
        } else {
            FactorKind::T
        }
    }

    /// Whether the new variable is the first (`PS`, `QT`) or the last slot.
    fn new_var_first(self) -> bool {
        matches!(self, Letter::PS | Letter::QT)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::PS => "PS",
            Letter::PT => "PT",
            Letter::QS => "QS",
            Letter::QT => "QT",
        })
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "PS" => Ok(Letter::PS),
            "PT" => Ok(Letter::PT),
            "QS" => Ok(Letter::QS),
            "QT" => Ok(Letter::QT),
            other => Err(Error::Parse(format!("unknown letter {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_s(&self) -> usize {
        self.0.iter().filter(|l| l.is_s()).count()
    }

    pub fn count_t(&self) -> usize {
        self.0.len() - self.count_s()
    }

    pub fn endpoint(&self) -> (usize, usize) {
        (self.count_s(), self.count_t())
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The shortest prefix with more `S` than `T` letters, if any.
    pub fn failing_prefix(&self) -> Option<Word> {
        let (mut s, mut t) = (0, 0);
        for (k, l) in self.0.iter().enumerate() {
            if l.is_s() {
                s += 1;
            } else {
                t += 1;
            }
            if s > t {
                return Some(Word(self.0[..=k].to_vec()));
            }
        }
        None
    }

    pub fn is_prefix_dyck(&self) -> bool {
        self.failing_prefix().is_none()
    }

    /// All words of the given length, in lexicographic letter order.
    pub fn all(len: usize) -> Vec<Word> {
        let mut out = vec![Word::default()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    Letter::ALL.iter().map(move |&l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All prefix-Dyck words of length at most `max_len`.
    pub fn valid_up_to(max_len: usize) -> Vec<Word> {
        (0..=max_len)
            .flat_map(Word::all)
            .filter(|w| w.is_prefix_dyck())
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Word::default());
        }
        s.split(',').map(Letter::from_str).collect::<Result<Vec<_>>>().map(Word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    S,
    T,
}

/// Numerator of `S_{s,t}` or `T_{s,t}` with distinguished variable `i` among
/// `m`, possibly with every argument inverted (the `Q` operators).
///
/// Returns the numerator and whether the denominator is
/// `∏_{j≠i}(z_j − z_i)` (`true`) or `∏_{j≠i}(z_i − z_j)` (`false`).
pub fn factor_numerator(kind: FactorKind, inverted: bool, s: i64, t: i64, m: usize, i: usize) -> (Poly, bool) {
    let z = |e: &[(usize, i32)]| {
        let mut v = vec![0i32; m];
        for &(k, x) in e {
            v[k] += x;
        }
        Poly::term(&v, 1.into())
    };
    let one = Poly::one(m);
    let mut num;
    match (kind, inverted) {
        (FactorKind::S, false) => {
            num = z(&[(i, (2 * s - t - 1) as i32)]);
            for j in (0..m).filter(|&j| j != i) {
                let pair = &(&one - &z(&[(i, 1)])) + &z(&[(i, 1), (j, 1)]);
                num = &(&num * &pair) * &(&one - &z(&[(j, -1)]));
            }
        }
        (FactorKind::T, false) => {
            num = &(&one - &z(&[(i, -1)])).pow(s as u32) * &z(&[(i, (t - 2) as i32)]);
            for j in (0..m).filter(|&j| j != i) {
                let pair = &(&one - &z(&[(j, 1)])) + &z(&[(i, 1), (j, 1)]);
                num = &(&num * &pair) * &z(&[(j, -1)]);
            }
        }
        (FactorKind::S, true) => {
            num = z(&[(i, -(2 * s - t - 1) as i32)]);
            for j in (0..m).filter(|&j| j != i) {
                let pair = &(&one - &z(&[(i, -1)])) + &z(&[(i, -1), (j, -1)]);
                num = &(&(&num * &pair) * &(&one - &z(&[(j, 1)]))) * &z(&[(i, 1), (j, 1)]);
            }
        }
        (FactorKind::T, true) => {
            num = &(&one - &z(&[(i, 1)])).pow(s as u32) * &z(&[(i, -(t - 2) as i32)]);
            for j in (0..m).filter(|&j| j != i) {
                let pair = &(&one - &z(&[(j, -1)])) + &z(&[(i, -1), (j, -1)]);
                num = &(&num * &pair) * &z(&[(i, 1), (j, 2)]);
            }
        }
    }
    let towards_i = matches!((kind, inverted), (FactorKind::S, false) | (FactorKind::T, true));
    (num, towards_i)
}

/// `L_{s,t}[f]` for `f` given as a numerator over the Vandermonde in
/// `s + t − 2` variables.
pub fn apply_letter(letter: Letter, s: i64, t: i64, f: &OverVandermonde) -> Result<OverVandermonde> {
    let old = f.nvars();
    if old as i64 != s + t - 2 {
        return Err(Error::Precondition(format!(
            "{letter}_{{{s},{t}}} acts on functions of {} variables, got {old}",
            s + t - 2
        )));
    }
    let m = old + 1;
    let (i, map): (usize, Vec<usize>) = if letter.new_var_first() {
        (0, (1..m).collect())
    } else {
        (m - 1, (0..m - 1).collect())
    };
    let (factor, _) = factor_numerator(letter.kind(), !letter.is_p(), s, t, m, i);
    let lifted = f.numerator.rename_vars(m, &map)?;
    Ok(OverVandermonde::new(&factor * &lifted))
}

/// `F_w` as a numerator over the Vandermonde in `|w| + 1` variables.
pub fn build_f(w: &Word) -> OverVandermonde {
    let mut f = OverVandermonde::new(Poly::one(1));
    let (mut s, mut t) = (1i64, 1i64);
    for &l in w.letters() {
        if l.is_s() {
            s += 1;
        } else {
            t += 1;
        }
        f = apply_letter(l, s, t, &f).expect("variable count follows the word");
    }
    f
}

/// `Sym F_w`; a division failure means `Sym F_w` is not a Laurent polynomial.
pub fn sym_of_word(w: &Word) -> Result<Poly> {
    sym_over_vandermonde(&build_f(w))
}

/// Canonical form of `ASym(F_w · Vandermonde)`: equal for two words exactly
/// when their symmetrizations agree, since dividing by the Vandermonde is
/// injective.
///
/// Built letter by letter without expanding `F_w`. Each factor is symmetric
/// in the variables it does not distinguish, so multiplying by it maps the
/// kernel of the smaller antisymmetrizer into the kernel of the larger one,
/// and the running numerator may be replaced by its alternant
/// representatives after every step.
pub fn word_signature(w: &Word) -> Poly {
    let mut sig = Poly::one(1);
    let (mut s, mut t) = (1i64, 1i64);
    for &l in w.letters() {
        if l.is_s() {
            s += 1;
        } else {
            t += 1;
        }
        let next = apply_letter(l, s, t, &OverVandermonde::new(sig)).expect("variable count follows the word");
        sig = alternant_representatives(&next.numerator);
    }
    sig
}

/// The word `PT^{t−1} PS^{s−1}`, whose function is `P_{s,t}`.
pub fn p_word(s: usize, t: usize) -> Word {
    let mut letters = vec![Letter::PT; t.saturating_sub(1)];
    letters.extend(std::iter::repeat_n(Letter::PS, s.saturating_sub(1)));
    Word(letters)
}

/// `R_{s,t} = Sym P_{s,t}` from the incremental signature of `P_{s,t}`;
/// avoids expanding the full numerator, which is what limits the direct
/// construction in seven or more variables. For `s = 0` the chain starts at
/// `P_{0,2} = 1` and adds one `PT` step per unit of `t`.
pub fn build_r_by_letters(s: usize, t: usize) -> Result<Poly> {
    Ok(r_orbits_by_letters(s, t)?.expand())
}

/// [`build_r_by_letters`] kept in orbit form.
pub fn r_orbits_by_letters(s: usize, t: usize) -> Result<SymmetricPoly> {
    if s + t < 2 {
        return Err(Error::OutOfRange {
            what: "s + t - 1",
            detail: format!("s={s}, t={t}; need at least one variable"),
        });
    }
    if s > 0 {
        return symmetric_quotient_orbits(&word_signature(&p_word(s, t)));
    }
    let mut sig = Poly::one(1);
    for tt in 3..=t as i64 {
        let next = apply_letter(Letter::PT, 0, tt, &OverVandermonde::new(sig))?;
        sig = alternant_representatives(&next.numerator);
    }
    symmetric_quotient_orbits(&sig)
}

fn check_pair_preconditions(w1: &Word, w2: &Word) -> Result<()> {
    for w in [w1, w2] {
        if let Some(prefix) = w.failing_prefix() {
            return Err(Error::InvalidWord {
                prefix: prefix.to_string(),
            });
        }
    }
    if w1.endpoint() != w2.endpoint() {
        return Err(Error::Precondition(format!(
            "endpoints differ: {:?} vs {:?}",
            w1.endpoint(),
            w2.endpoint()
        )));
    }
    Ok(())
}

/// `Sym F_{w1} = Sym F_{w2}` for prefix-Dyck words with a common endpoint.
pub fn check_word_pair(w1: &Word, w2: &Word) -> Result<CheckOutcome> {
    check_pair_preconditions(w1, w2)?;
    Ok(compare_signatures(w1, &word_signature(w1), w2, &word_signature(w2)))
}

fn compare_signatures(w1: &Word, a: &Poly, w2: &Word, b: &Poly) -> CheckOutcome {
    if a == b {
        let msg = format!("Sym F equal ({} alternant terms)", a.len());
        CheckOutcome::pass(msg.clone(), msg)
    } else {
        CheckOutcome::fail(
            abbreviate(&a.render(), 200),
            abbreviate(&b.render(), 200),
            format!("[{w1}] vs [{w2}]: difference {}", abbreviate(&(a - b).render(), 300)),
        )
    }
}

/// Every pair of valid words of length `≤ max_len` with a common endpoint.
/// Each word's signature is computed once; a pair is reported per word
/// against the first word of its endpoint class, which covers all pairs by
/// transitivity.
pub fn check_all_word_pairs(max_len: usize) -> Vec<(Word, Word, CheckOutcome)> {
    let mut classes: BTreeMap<(usize, usize), Vec<(Word, Poly)>> = BTreeMap::new();
    for w in Word::valid_up_to(max_len) {
        let sig = word_signature(&w);
        classes.entry(w.endpoint()).or_default().push((w, sig));
    }
    let mut out = Vec::new();
    for members in classes.values() {
        let (w0, s0) = &members[0];
        for (w, s) in &members[1..] {
            out.push((w0.clone(), w.clone(), compare_signatures(w0, s0, w, s)));
        }
    }
    out
}

/// `Sym F_w` depends only on the endpoint and the last letter, for every
/// valid word of length `≤ max_len`.
pub fn check_last_letter_invariant(max_len: usize) -> CheckOutcome {
    let mut seen: BTreeMap<((usize, usize), Option<Letter>), (Word, Poly)> = BTreeMap::new();
    let mut parts = Vec::new();
    for w in Word::valid_up_to(max_len) {
        let sig = word_signature(&w);
        let key = (w.endpoint(), w.last());
        match seen.get(&key) {
            None => {
                seen.insert(key, (w, sig));
            }
            Some((w0, s0)) => parts.push(compare_signatures(w0, s0, &w, &sig)),
        }
    }
    CheckOutcome::all("last-letter classes", parts)
}

/// A random numerator in `nvars` variables standing for a generic function.
fn random_function(rng: &mut CheckRng, nvars: usize) -> OverVandermonde {
    OverVandermonde::new(random_laurent(rng, nvars, -2, 2, 4))
}

fn compare_numerators(label: &str, a: &OverVandermonde, b: &OverVandermonde) -> CheckOutcome {
    if a == b {
        CheckOutcome::pass(label, label)
    } else {
        CheckOutcome::fail(
            abbreviate(&a.numerator.render(), 200),
            abbreviate(&b.numerator.render(), 200),
            format!("{label}: difference {}", abbreviate(&(&a.numerator - &b.numerator).render(), 300)),
        )
    }
}

/// The commutation rules on random functions:
/// clause 1 `PS_{s,t}∘PT_{s−1,t} = PT_{s,t}∘PS_{s,t−1}` and the `Q` analogue,
/// clause 2 `PT_{s,t}∘QT_{s,t−1} = QT_{s,t}∘PT_{s,t−1}` (`t ≥ 2`).
///
/// The input function has `s + t − 3` variables; when that is negative the
/// clause has no instance and passes vacuously.
pub fn check_commutations(rng: &mut CheckRng, s: i64, t: i64, clause: u8, samples: usize) -> Result<CheckOutcome> {
    if s < 1 || t < 1 || !(clause == 1 || clause == 2) || (clause == 2 && t < 2) {
        return Err(Error::Precondition(format!("no clause {clause} for s={s}, t={t}")));
    }
    if s + t < 3 {
        return Ok(CheckOutcome::pass("vacuous", "vacuous"));
    }
    let nvars = (s + t - 3) as usize;
    let mut parts = Vec::new();
    for _ in 0..samples {
        let f = random_function(rng, nvars);
        if clause == 1 {
            let lhs = apply_letter(Letter::PS, s, t, &apply_letter(Letter::PT, s - 1, t, &f)?)?;
            let rhs = apply_letter(Letter::PT, s, t, &apply_letter(Letter::PS, s, t - 1, &f)?)?;
            parts.push(compare_numerators("PS PT = PT PS", &lhs, &rhs));
            let lhs = apply_letter(Letter::QS, s, t, &apply_letter(Letter::QT, s - 1, t, &f)?)?;
            let rhs = apply_letter(Letter::QT, s, t, &apply_letter(Letter::QS, s, t - 1, &f)?)?;
            parts.push(compare_numerators("QS QT = QT QS", &lhs, &rhs));
        } else {
            let lhs = apply_letter(Letter::PT, s, t, &apply_letter(Letter::QT, s, t - 1, &f)?)?;
            let rhs = apply_letter(Letter::QT, s, t, &apply_letter(Letter::PT, s, t - 1, &f)?)?;
            parts.push(compare_numerators("PT QT = QT PT", &lhs, &rhs));
        }
    }
    Ok(CheckOutcome::all(&format!("clause {clause} s={s} t={t}"), parts))
}

/// `Sym L_{s,t}[f] = Σ_i L-factor(z_i; others) · Sym f(others)` for all four
/// letters, after multiplying both sides by the Vandermonde.
pub fn check_sym_recursion_for(s: i64, t: i64, f: &OverVandermonde) -> Result<CheckOutcome> {
    let old = f.nvars();
    let m = old + 1;
    let inner = asym(&f.numerator);
    let mut parts = Vec::new();
    for letter in Letter::ALL {
        let lhs = asym(&apply_letter(letter, s, t, f)?.numerator);
        let mut rhs = Poly::zero(m);
        for i in 0..m {
            let (factor, towards_i) = factor_numerator(letter.kind(), !letter.is_p(), s, t, m, i);
            let others: Vec<usize> = (0..m).filter(|&j| j != i).collect();
            let flips = if towards_i { i } else { m - 1 - i };
            let term = &factor * &inner.rename_vars(m, &others)?;
            rhs = if flips % 2 == 0 { &rhs + &term } else { &rhs - &term };
        }
        parts.push(if lhs == rhs {
            CheckOutcome::pass(letter.to_string(), letter.to_string())
        } else {
            CheckOutcome::fail(
                abbreviate(&lhs.render(), 200),
                abbreviate(&rhs.render(), 200),
                format!("{letter}_{{{s},{t}}}: difference {}", abbreviate(&(&lhs - &rhs).render(), 300)),
            )
        });
    }
    Ok(CheckOutcome::all(&format!("symmetrized expansion s={s} t={t}"), parts))
}

/// The expansion identities on `samples` random functions.
pub fn check_sym_recursion(rng: &mut CheckRng, s: i64, t: i64, samples: usize) -> Result<CheckOutcome> {
    if s + t - 2 < 1 {
        return Err(Error::Precondition(format!("need s + t - 2 >= 1, got s={s}, t={t}")));
    }
    let nvars = (s + t - 2) as usize;
    let mut parts = Vec::new();
    for _ in 0..samples {
        parts.push(check_sym_recursion_for(s, t, &random_function(rng, nvars))?);
    }
    Ok(CheckOutcome::all(&format!("s={s} t={t}"), parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Rational;
    use crate::random::rng;
    use crate::symmetrize::{build_p, build_r, Permutation};

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_validity() {
        let w = word("PT,PS,QT,PT,QS,QT");
        assert_eq!(w.len(), 6);
        assert_eq!(w.endpoint(), (2, 4));
        assert_eq!(w.to_string(), "PT,PS,QT,PT,QS,QT");
        assert!(w.is_prefix_dyck());
        assert_eq!(word("PT,PS,QS").failing_prefix(), Some(word("PT,PS,QS")));
        assert_eq!(word("QS,PT").failing_prefix(), Some(word("QS")));
        assert!("PX".parse::<Word>().is_err());
        assert_eq!(word(""), Word::default());
        let counts: Vec<usize> = (0..=5).map(|l| Word::valid_up_to(l).len()).collect();
        assert_eq!(counts, vec![1, 3, 11, 35, 131, 451]);
    }

    #[test]
    fn pure_words_match_p_and_q() {
        assert_eq!(build_f(&Word::default()).numerator, Poly::one(1));
        assert_eq!(build_f(&word("PT")), build_p(1, 2).unwrap());
        for w in ["PT,PS", "PT,PT,PS", "PT,PS,PT", "PT,PT,PS,PS"] {
            let w = word(w);
            let (s, t) = w.endpoint();
            assert_eq!(build_f(&w), build_p(s + 1, t + 1).unwrap(), "{w}");
            // the Q word with the same shape builds P(z_m^-1, …, z_1^-1)
            let q = Word(w.0.iter().map(|l| if l.is_s() { Letter::QS } else { Letter::QT }).collect());
            let p = build_p(s + 1, t + 1).unwrap().numerator;
            let m = p.nvars();
            let rev = Permutation::new((0..m).rev().collect()).unwrap();
            let shift = Poly::term(&vec![(m - 1) as i32; m], Rational::ONE);
            let expected = &p.permute(&rev).unwrap().invert_all() * &shift;
            assert_eq!(build_f(&q).numerator, expected, "{q}");
        }
    }

    #[test]
    fn symmetrized_words() {
        assert_eq!(sym_of_word(&Word::default()).unwrap(), Poly::one(1));
        assert_eq!(sym_of_word(&word("PT,PS")).unwrap(), build_r(2, 2).unwrap());
        let q = sym_of_word(&word("QT,QS")).unwrap();
        assert_eq!(q, build_r(2, 2).unwrap().invert_all());
        assert!(check_word_pair(&word("PT,PS"), &word("QT,QS")).unwrap().passed());
        assert!(matches!(
            check_word_pair(&word("PS"), &word("PT")),
            Err(Error::InvalidWord { .. })
        ));
        assert!(check_word_pair(&word("PT"), &word("PT,PT")).is_err());
    }

    #[test]
    fn r_by_letters_matches_direct_construction() {
        for (s, t) in [(0, 2), (0, 3), (0, 5), (1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (2, 3), (3, 2), (3, 3)] {
            assert_eq!(build_r_by_letters(s, t).unwrap(), build_r(s, t).unwrap(), "({s},{t})");
        }
    }

    #[test]
    fn incremental_signature_matches_expanded_numerator() {
        for w in Word::all(4) {
            assert_eq!(word_signature(&w), alternant_representatives(&build_f(&w).numerator), "{w}");
        }
    }

    #[test]
    fn signature_agrees_with_full_symmetrization() {
        let words = Word::valid_up_to(3);
        for a in &words {
            for b in &words {
                if a.endpoint() == b.endpoint() {
                    let full = sym_of_word(a).unwrap() == sym_of_word(b).unwrap();
                    let sig = word_signature(a) == word_signature(b);
                    assert_eq!(full, sig, "{a} / {b}");
                }
            }
        }
    }

    #[test]
    fn commutations_and_expansions() {
        let mut r = rng(17);
        assert!(check_commutations(&mut r, 1, 1, 1, 3).unwrap().passed());
        assert!(check_commutations(&mut r, 1, 2, 2, 3).unwrap().passed());
        assert!(check_commutations(&mut r, 2, 2, 1, 3).unwrap().passed());
        assert!(check_commutations(&mut r, 2, 3, 2, 3).unwrap().passed());
        assert!(check_commutations(&mut r, 1, 1, 2, 3).is_err());
        let one = OverVandermonde::new(Poly::one(1));
        assert!(check_sym_recursion_for(1, 2, &one).unwrap().passed());
        let z1 = OverVandermonde::new(Poly::var(1, 0));
        assert!(check_sym_recursion_for(1, 2, &z1).unwrap().passed());
        assert!(check_sym_recursion(&mut r, 2, 2, 3).unwrap().passed());
    }
}
