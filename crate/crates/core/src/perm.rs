//! Permutations in one-line notation, pattern containment and the simsun
//! predicates.
//!
//! Positions and values are 1-based at every public entry point. A
//! permutation of length `n` is stored as the word `σ₁ … σₙ` over `{1..n}`.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation `σ₁ … σₙ` of `{1..n}`.
///
/// Ordering is lexicographic on the word, which is the enumeration order used
/// throughout the crate.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

/// A double descent found in some restriction of a word, used as the
/// diagnostic when a word fails to be simsun.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubleDescentWitness {
    /// Smallest `k` whose restriction to `{1..k}` has a double descent.
    pub k: usize,
    /// The decreasing triple, as values.
    pub triple: [usize; 3],
}

impl fmt::Display for DoubleDescentWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.triple;
        write!(f, "restriction to 1..{} has double descent {a},{b},{c}", self.k)
    }
}

/// Counts reported by [`Permutation::statistics`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Statistics {
    pub excedances: usize,
    pub fixed_points: usize,
    pub inversions: usize,
    pub descent_count: usize,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking that it is a
    /// bijection on `{1..n}`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..{n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation(word))
    }

    /// Wraps a word already known to be a permutation.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The permutation `n (n-1) … 1`.
    pub fn reversal(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// Relabels a word of distinct integers to a permutation of the same
    /// relative order.
    pub fn standardize(word: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..word.len()).collect();
        order.sort_by_key(|&i| word[i]);
        let mut out = vec![0; word.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = rank + 1;
        }
        Permutation(out)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// The subword of values `≤ k`, in order of appearance.
    pub fn restrict(&self, k: usize) -> Result<Vec<usize>> {
        if k > self.len() {
            return Err(Error::OutOfRange {
                what: "k",
                value: k,
                range: format!("0..={}", self.len()),
            });
        }
        Ok(restrict_word(&self.0, k))
    }

    /// Positions `i` (1-based) with `σᵢ > σᵢ₊₁`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_simsun(&self) -> bool {
        simsun_witness(&self.0).is_none()
    }

    /// The first restriction (by `k`) that contains a double descent, if any.
    pub fn simsun_witness(&self) -> Option<DoubleDescentWitness> {
        simsun_witness(&self.0)
    }

    pub fn is_double_simsun(&self) -> bool {
        self.is_simsun() && self.inverse().is_simsun()
    }

    pub fn contains_pattern(&self, pattern: &Pattern) -> bool {
        let mut found = false;
        for_each_occurrence(&self.0, pattern.as_slice(), |_| {
            found = true;
            ControlFlow::Break(())
        });
        found
    }

    pub fn avoids(&self, pattern: &Pattern) -> bool {
        !self.contains_pattern(pattern)
    }

    pub fn avoids_all(&self, patterns: &[Pattern]) -> bool {
        patterns.iter().all(|p| self.avoids(p))
    }

    /// All occurrences of `pattern`, as strictly increasing 1-based index
    /// tuples in lexicographic order.
    pub fn pattern_occurrences(&self, pattern: &Pattern) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for_each_occurrence(&self.0, pattern.as_slice(), |idx| {
            out.push(idx.iter().map(|i| i + 1).collect());
            ControlFlow::Continue(())
        });
        out
    }

    /// True when every occurrence of 4132 sits, on the same four positions,
    /// inside some occurrence of 51342. Vacuously true without 4132.
    pub fn every_4132_in_51342(&self) -> bool {
        self.uncovered_4132().is_none()
    }

    /// The first 4132 occurrence (1-based positions) not contained in any
    /// 51342 occurrence.
    pub fn uncovered_4132(&self) -> Option<[usize; 4]> {
        let w = &self.0;
        let p4132 = [4, 1, 3, 2];
        let p51342 = [5, 1, 3, 4, 2];
        let mut witness = None;
        for_each_occurrence(w, &p4132, |idx| {
            let covered = (0..w.len()).filter(|e| !idx.contains(e)).any(|e| {
                let mut five = [idx[0], idx[1], idx[2], idx[3], e];
                five.sort_unstable();
                order_isomorphic(five.iter().map(|&i| w[i]), &p51342)
            });
            if covered {
                ControlFlow::Continue(())
            } else {
                witness = Some([idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1]);
                ControlFlow::Break(())
            }
        });
        witness
    }

    pub fn statistics(&self) -> Statistics {
        let w = &self.0;
        let mut inversions = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inversions += 1;
                }
            }
        }
        Statistics {
            excedances: w.iter().enumerate().filter(|&(i, &v)| v > i + 1).count(),
            fixed_points: w.iter().enumerate().filter(|&(i, &v)| v == i + 1).count(),
            inversions,
            descent_count: w.windows(2).filter(|p| p[0] > p[1]).count(),
        }
    }
}

/// Subword of the values `≤ k` in order of appearance.
pub fn restrict_word(word: &[usize], k: usize) -> Vec<usize> {
    word.iter().copied().filter(|&v| v <= k).collect()
}

/// True when some three consecutive letters strictly decrease.
pub fn has_double_descent(word: &[usize]) -> bool {
    word.windows(3).any(|t| t[0] > t[1] && t[1] > t[2])
}

/// Simsun test for any word of distinct positive integers: every restriction
/// to the values up to a threshold is free of double descents.
pub fn is_simsun_word(word: &[usize]) -> bool {
    simsun_witness(word).is_none()
}

fn simsun_witness(word: &[usize]) -> Option<DoubleDescentWitness> {
    let mut thresholds = word.to_vec();
    thresholds.sort_unstable();
    // Restrictions to fewer than three values cannot hold a triple.
    for &k in thresholds.iter().skip(2) {
        let sub = restrict_word(word, k);
        if let Some(t) = sub.windows(3).find(|t| t[0] > t[1] && t[1] > t[2]) {
            return Some(DoubleDescentWitness {
                k,
                triple: [t[0], t[1], t[2]],
            });
        }
    }
    None
}

/// True when some occurrence of `pattern` in `word` uses the last letter.
/// Lets a prefix search test only the occurrences a new letter creates.
pub(crate) fn has_occurrence_ending_last(word: &[usize], pattern: &[usize]) -> bool {
    let (Some(&x), Some(&px)) = (word.last(), pattern.last()) else {
        return pattern.is_empty();
    };
    let head = &word[..word.len() - 1];
    let phead = &pattern[..pattern.len() - 1];
    let mut found = false;
    for_each_occurrence(head, phead, |idx| {
        if idx.iter().zip(phead).all(|(&i, &q)| (head[i] < x) == (q < px)) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Checks that `values` has the relative order of `pattern`.
pub(crate) fn order_isomorphic(values: impl Iterator<Item = usize>, pattern: &[usize]) -> bool {
    let values: Vec<usize> = values.collect();
    if values.len() != pattern.len() {
        return false;
    }
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if (values[i] < values[j]) != (pattern[i] < pattern[j]) {
                return false;
            }
        }
    }
    true
}

/// Visits occurrences of `pattern` in `word` (0-based index tuples) in
/// lexicographic order until the visitor breaks.
fn for_each_occurrence<F>(word: &[usize], pattern: &[usize], mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn go<F: FnMut(&[usize]) -> ControlFlow<()>>(
        word: &[usize],
        pattern: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let j = chosen.len();
        if j == pattern.len() {
            return visit(chosen);
        }
        let remaining = pattern.len() - j;
        for i in start..=word.len().saturating_sub(remaining) {
            if i >= word.len() {
                break;
            }
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(m, &c)| (word[c] < word[i]) == (pattern[m] < pattern[j]));
            if ok {
                chosen.push(i);
                let flow = go(word, pattern, i + 1, chosen, visit);
                chosen.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
    if pattern.len() > word.len() {
        return;
    }
    let _ = go(word, pattern, 0, &mut Vec::with_capacity(pattern.len()), &mut visit);
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts space-separated values (`"5 1 3 2 4"`) or, for `n ≤ 9`, the
    /// compact digit form (`"51324"`). The empty string is the empty
    /// permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::default());
        }
        let word: Vec<usize> = if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::Parse(format!(
                    "compact form {s:?} only allowed for n <= 9"
                )));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

/// A permutation used as a pattern `ω`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(perm: Permutation) -> Self {
        Pattern(perm)
    }

    pub fn as_slice(&self) -> &[usize] {
        self.0.as_slice()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The six patterns of length three in lexicographic order.
    pub fn all_of_length_three() -> Vec<Pattern> {
        ["123", "132", "213", "231", "312", "321"]
            .iter()
            .map(|s| s.parse().expect("static pattern"))
            .collect()
    }
}

impl From<Permutation> for Pattern {
    fn from(p: Permutation) -> Self {
        Pattern(p)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Pattern(s.parse()?))
    }
}

/// Patterns print in compact form when every letter is a single digit.
impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in self.as_slice() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}
