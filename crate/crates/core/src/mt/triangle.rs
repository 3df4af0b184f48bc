use std::collections::BTreeMap;
use std::rc::Rc;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::exactpoly::{Rational, XPoly};

/// A monotone triangle, stored top row first: `rows[i]` has `i + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<i64>>,
}

/// Statistics of a monotone triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MtStatistics {
    /// Entries of the left-most NE-diagonal equal to the bottom-left entry.
    pub left_diag_eq_first: usize,
    /// Entries of the right-most SE-diagonal equal to the bottom-right entry.
    pub right_diag_eq_last: usize,
    pub top_entry: i64,
    /// Occurrences of `a_{i+1,j} < a_{i,j} < a_{i+1,j+1}`.
    pub pattern_count: usize,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::Precondition(format!("row {} has length {}", i + 1, row.len())));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(format!("row {} not strictly increasing", i + 1)));
            }
            if i > 0 {
                let above = &rows[i - 1];
                for (j, &a) in above.iter().enumerate() {
                    if !(row[j] <= a && a <= row[j + 1]) {
                        return Err(Error::Precondition(format!(
                            "entry ({}, {}) breaks the diagonal order",
                            i,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn bottom(&self) -> &[i64] {
        self.rows.last().map(|r| r.as_slice()).unwrap_or(&[])
    }

    pub fn statistics(&self) -> MtStatistics {
        let n = self.rows.len();
        let first = self.rows[n - 1][0];
        let last = self.rows[n - 1][n - 1];
        let left = self.rows.iter().filter(|r| r[0] == first).count();
        let right = self.rows.iter().filter(|r| r[r.len() - 1] == last).count();
        let mut patterns = 0;
        for i in 0..n - 1 {
            for (j, &a) in self.rows[i].iter().enumerate() {
                let below = &self.rows[i + 1];
                if below[j] < a && a < below[j + 1] {
                    patterns += 1;
                }
            }
        }
        MtStatistics {
            left_diag_eq_first: left,
            right_diag_eq_last: right,
            top_entry: self.rows[0][0],
            pattern_count: patterns,
        }
    }
}

/// Optional constraints on the statistics; `None` fields are unconstrained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MtFilter {
    pub left_diag_eq_first: Option<usize>,
    pub right_diag_eq_last: Option<usize>,
    pub top_entry: Option<i64>,
}

impl MtFilter {
    pub fn left_eq(d: usize) -> Self {
        MtFilter {
            left_diag_eq_first: Some(d),
            ..Default::default()
        }
    }

    pub fn top(t: i64) -> Self {
        MtFilter {
            top_entry: Some(t),
            ..Default::default()
        }
    }

    pub fn matches(&self, s: &MtStatistics) -> bool {
        self.left_diag_eq_first.is_none_or(|d| d == s.left_diag_eq_first)
            && self.right_diag_eq_last.is_none_or(|d| d == s.right_diag_eq_last)
            && self.top_entry.is_none_or(|t| t == s.top_entry)
    }
}

/// Which statistics the counting DP keeps apart.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tracked {
    pub left: bool,
    pub right: bool,
    pub top: bool,
}

impl Tracked {
    pub const ALL: Tracked = Tracked {
        left: true,
        right: true,
        top: true,
    };

    fn for_filter(f: &MtFilter) -> Self {
        Tracked {
            left: f.left_diag_eq_first.is_some(),
            right: f.right_diag_eq_last.is_some(),
            top: f.top_entry.is_some(),
        }
    }
}

/// Histogram key: untracked statistics are stored as zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StatKey {
    pub left: usize,
    pub right: usize,
    pub top: i64,
}

pub fn check_bottom(bottom: &[i64]) -> Result<()> {
    if bottom.is_empty() || bottom.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing(bottom.to_vec()));
    }
    Ok(())
}

/// Calls `f` with every row that can sit directly above `row`.
fn for_each_row_above(row: &[i64], f: &mut impl FnMut(&[i64])) {
    fn go(row: &[i64], j: usize, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if j + 1 == row.len() {
            f(cur);
            return;
        }
        let lo = match cur.last() {
            Some(&prev) => row[j].max(prev + 1),
            None => row[j],
        };
        for v in lo..=row[j + 1] {
            cur.push(v);
            go(row, j + 1, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(row.len());
    go(row, 0, &mut cur, f);
}

type Hist = Vec<(StatKey, u128)>;

struct Counter {
    track: Tracked,
    memo: FxHashMap<Vec<i64>, Rc<Hist>>,
}

impl Counter {
    fn hist(&mut self, row: &[i64]) -> Rc<Hist> {
        if let Some(h) = self.memo.get(row) {
            return h.clone();
        }
        let h = if row.len() == 1 {
            vec![(
                StatKey {
                    left: self.track.left as usize,
                    right: self.track.right as usize,
                    top: if self.track.top { row[0] } else { 0 },
                },
                1u128,
            )]
        } else {
            let mut acc: BTreeMap<StatKey, u128> = BTreeMap::new();
            let mut above_rows = Vec::new();
            for_each_row_above(row, &mut |r| above_rows.push(r.to_vec()));
            let last = row[row.len() - 1];
            for r in above_rows {
                let sub = self.hist(&r);
                let keep_left = r[0] == row[0];
                let keep_right = r[r.len() - 1] == last;
                for (k, c) in sub.iter() {
                    let key = StatKey {
                        left: if !self.track.left {
                            0
                        } else if keep_left {
                            k.left + 1
                        } else {
                            1
                        },
                        right: if !self.track.right {
                            0
                        } else if keep_right {
                            k.right + 1
                        } else {
                            1
                        },
                        top: k.top,
                    };
                    *acc.entry(key).or_insert(0) += c;
                }
            }
            acc.into_iter().collect()
        };
        let h = Rc::new(h);
        self.memo.insert(row.to_vec(), h.clone());
        h
    }
}

/// Histogram of the tracked statistics over all monotone triangles with the
/// given bottom row, by memoized dynamic programming over consecutive rows.
pub fn mt_histogram(bottom: &[i64], track: Tracked) -> Result<BTreeMap<StatKey, u128>> {
    check_bottom(bottom)?;
    let mut counter = Counter {
        track,
        memo: FxHashMap::default(),
    };
    Ok(counter.hist(bottom).iter().cloned().collect())
}

/// Number of monotone triangles with the given bottom row whose statistics
/// match `filter`.
pub fn enumerate_mt(bottom: &[i64], filter: &MtFilter) -> Result<u128> {
    let hist = mt_histogram(bottom, Tracked::for_filter(filter))?;
    Ok(hist
        .into_iter()
        .filter(|(k, _)| {
            filter.left_diag_eq_first.is_none_or(|d| d == k.left)
                && filter.right_diag_eq_last.is_none_or(|d| d == k.right)
                && filter.top_entry.is_none_or(|t| t == k.top)
        })
        .map(|(_, c)| c)
        .sum())
}

/// Total number of monotone triangles with the given bottom row.
pub fn count_mt(bottom: &[i64]) -> Result<u128> {
    enumerate_mt(bottom, &MtFilter::default())
}

/// Visits every monotone triangle with the given bottom row.
pub fn for_each_mt(bottom: &[i64], mut f: impl FnMut(&MonotoneTriangle)) -> Result<()> {
    check_bottom(bottom)?;
    fn go(stack: &mut Vec<Vec<i64>>, f: &mut impl FnMut(&MonotoneTriangle)) {
        let row = stack.last().unwrap().clone();
        if row.len() == 1 {
            let rows: Vec<Vec<i64>> = stack.iter().rev().cloned().collect();
            f(&MonotoneTriangle { rows });
            return;
        }
        let mut above = Vec::new();
        for_each_row_above(&row, &mut |r| above.push(r.to_vec()));
        for r in above {
            stack.push(r);
            go(stack, f);
            stack.pop();
        }
    }
    let mut stack = vec![bottom.to_vec()];
    go(&mut stack, &mut f);
    Ok(())
}

/// All triangles with the given bottom row, materialized.
pub fn list_mt(bottom: &[i64]) -> Result<Vec<MonotoneTriangle>> {
    let mut out = Vec::new();
    for_each_mt(bottom, |t| out.push(t.clone()))?;
    Ok(out)
}

/// `Σ X^{pattern count}` over triangles with the given bottom row and top
/// entry, by explicit enumeration.
pub fn pattern_genfun(bottom: &[i64], top: i64) -> Result<XPoly> {
    check_bottom(bottom)?;
    let (lo, hi) = (bottom[0], bottom[bottom.len() - 1]);
    if top < lo || top > hi {
        return Err(Error::OutOfRange {
            what: "top entry",
            detail: format!("{top} not in {lo}..={hi}"),
        });
    }
    let mut counts: Vec<i64> = Vec::new();
    for_each_mt(bottom, |t| {
        let s = t.statistics();
        if s.top_entry == top {
            if counts.len() <= s.pattern_count {
                counts.resize(s.pattern_count + 1, 0);
            }
            counts[s.pattern_count] += 1;
        }
    })?;
    Ok(XPoly::from_coeffs(counts.into_iter().map(Rational::from_integer).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_mt(&[1, 2, 3]).unwrap(), 7);
        assert_eq!(count_mt(&[1, 2, 3, 4]).unwrap(), 42);
        assert_eq!(enumerate_mt(&[2, 4], &MtFilter::left_eq(2)).unwrap(), 1);
        assert_eq!(enumerate_mt(&[2, 4], &MtFilter::left_eq(1)).unwrap(), 2);
        assert!(count_mt(&[2, 2]).is_err());
    }

    #[test]
    fn listing_matches_dp() {
        let all = list_mt(&[0, 2, 5]).unwrap();
        assert_eq!(all.len() as u128, count_mt(&[0, 2, 5]).unwrap());
        for t in &all {
            assert!(MonotoneTriangle::new(t.rows().to_vec()).is_ok());
        }
        let hist = mt_histogram(&[0, 2, 5], Tracked::ALL).unwrap();
        for (key, c) in hist {
            let brute = all
                .iter()
                .filter(|t| {
                    let s = t.statistics();
                    s.left_diag_eq_first == key.left
                        && s.right_diag_eq_last == key.right
                        && s.top_entry == key.top
                })
                .count() as u128;
            assert_eq!(brute, c);
        }
    }

    #[test]
    fn pattern_examples() {
        // 0 < 1 < 2 is one occurrence of the pattern
        assert_eq!(pattern_genfun(&[0, 2], 1).unwrap(), XPoly::x());
        assert_eq!(pattern_genfun(&[0, 2], 0).unwrap(), XPoly::one());
        assert!(pattern_genfun(&[0, 2], 3).is_err());
        let total: Rational = (1..=3)
            .map(|t| pattern_genfun(&[1, 2, 3], t).unwrap().eval(&Rational::ONE))
            .sum();
        assert_eq!(total, Rational::from_integer(7));
    }
}
