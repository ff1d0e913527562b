//! Exhaustive generation of permutation classes, joint statistic tables and
//! the double simsun counting search.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{has_occurrence_ending_last, is_simsun_word, Pattern, Permutation};

/// The base class before pattern restrictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    All,
    Simsun,
    /// `σ` and `σ⁻¹` both simsun.
    DoubleSimsun,
}

impl Class {
    pub fn as_str(self) -> &'static str {
        match self {
            Class::All => "all",
            Class::Simsun => "simsun",
            Class::DoubleSimsun => "double-simsun",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Class::All),
            "simsun" => Ok(Class::Simsun),
            "double-simsun" => Ok(Class::DoubleSimsun),
            _ => Err(Error::UnknownName(format!("class {s:?}"))),
        }
    }
}

/// A class of permutations of length `n`: the base class, minus anything
/// containing one of `avoid`.
///
/// The patterns constrain `σ` only. With `avoid_inverse` they constrain
/// `σ⁻¹` as well; for the double simsun class the inverse is otherwise only
/// required to be simsun.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub n: usize,
    pub class: Class,
    pub avoid: Vec<Pattern>,
    pub avoid_inverse: bool,
}

impl ClassSpec {
    pub fn new(n: usize, class: Class) -> Self {
        ClassSpec {
            n,
            class,
            avoid: Vec::new(),
            avoid_inverse: false,
        }
    }

    /// Adds patterns given in compact form, e.g. `["132", "213"]`.
    pub fn avoiding(mut self, patterns: &[&str]) -> Result<Self> {
        for p in patterns {
            self.avoid.push(p.parse()?);
        }
        Ok(self)
    }

    /// Membership by direct evaluation of every condition.
    pub fn contains(&self, sigma: &Permutation) -> bool {
        if sigma.len() != self.n || !sigma.avoids_all(&self.avoid) {
            return false;
        }
        let inverse_ok = !self.avoid_inverse || sigma.inverse().avoids_all(&self.avoid);
        inverse_ok
            && match self.class {
                Class::All => true,
                Class::Simsun => sigma.is_simsun(),
                Class::DoubleSimsun => sigma.is_double_simsun(),
            }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.class, self.n)?;
        if !self.avoid.is_empty() {
            write!(f, " avoiding {}", self.avoid.iter().join(","))?;
            if self.avoid_inverse {
                f.write_str(" (and in the inverse)")?;
            }
        }
        Ok(())
    }
}

/// Every permutation of length `n`, lexicographically.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n)
        .permutations(n)
        .map(Permutation::from_word_unchecked)
}

/// The class by filtering all of `S_n`. Slow; kept as the reference for the
/// pruned search.
pub fn naive_class(spec: &ClassSpec) -> Vec<Permutation> {
    all_permutations(spec.n).filter(|s| spec.contains(s)).collect()
}

struct Search<'a> {
    spec: &'a ClassSpec,
    prefix: Vec<usize>,
    pos: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(spec: &'a ClassSpec) -> Self {
        Search {
            spec,
            prefix: Vec::with_capacity(spec.n),
            pos: vec![0; spec.n + 1],
            used: vec![false; spec.n + 1],
        }
    }

    /// Whether the prefix, just extended by its last letter, can still be
    /// completed to a member.
    fn viable(&self) -> bool {
        let n = self.spec.n;
        let (&x, head) = self.prefix.split_last().expect("nonempty prefix");
        if self.spec.class != Class::All {
            // A double descent ending at x in some restriction.
            for k in x..=n {
                let mut smaller = head.iter().rev().filter(|&&v| v <= k);
                if let (Some(&a), Some(&b)) = (smaller.next(), smaller.next()) {
                    if b > a && a > x {
                        return false;
                    }
                }
            }
        }
        if self.spec.class == Class::DoubleSimsun {
            // The inverse of the standardized prefix gains a double descent
            // only at x followed by the next two larger letters placed so far.
            let mut larger = (x + 1..=n).filter(|&v| self.used[v]);
            if let (Some(b), Some(c)) = (larger.next(), larger.next()) {
                if self.pos[b] > self.pos[c] {
                    return false;
                }
            }
        }
        self.spec
            .avoid
            .iter()
            .all(|p| !has_occurrence_ending_last(&self.prefix, p.as_slice()))
    }

    fn complete_ok(&self) -> bool {
        !self.spec.avoid_inverse || {
            let inv = Permutation::from_word_unchecked(self.prefix.clone()).inverse();
            inv.avoids_all(&self.spec.avoid)
        }
    }

    fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.prefix.len() == self.spec.n {
            return if self.complete_ok() {
                visit(&self.prefix)
            } else {
                ControlFlow::Continue(())
            };
        }
        for v in 1..=self.spec.n {
            if self.used[v] {
                continue;
            }
            self.push(v);
            let flow = if self.viable() {
                self.run(visit)
            } else {
                ControlFlow::Continue(())
            };
            self.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn push(&mut self, v: usize) {
        self.prefix.push(v);
        self.used[v] = true;
        self.pos[v] = self.prefix.len();
    }

    fn pop(&mut self) {
        let v = self.prefix.pop().expect("nonempty prefix");
        self.used[v] = false;
    }
}

/// Streams the class in lexicographic order until `visit` breaks.
pub fn visit_class<F>(spec: &ClassSpec, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let _ = Search::new(spec).run(&mut visit);
}

/// Streams the members that start with `first`.
fn visit_class_from<F>(spec: &ClassSpec, first: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut search = Search::new(spec);
    search.push(first);
    if search.viable() {
        let _ = search.run(&mut visit);
    }
}

/// The class in lexicographic order, found by a prefix search that abandons
/// a prefix as soon as a condition fails.
pub fn enumerate_class(spec: &ClassSpec) -> Vec<Permutation> {
    let mut out = Vec::new();
    visit_class(spec, |w| {
        out.push(Permutation::from_word_unchecked(w.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// [`enumerate_class`] split by first letter across `workers` threads. The
/// output is identical for every worker count.
pub fn enumerate_class_parallel(spec: &ClassSpec, workers: usize) -> Vec<Permutation> {
    if spec.n == 0 {
        return enumerate_class(spec);
    }
    let parts: Vec<Vec<Permutation>> = with_pool(workers, || {
        (1..=spec.n)
            .into_par_iter()
            .map(|first| {
                let mut part = Vec::new();
                visit_class_from(spec, first, |w| {
                    part.push(Permutation::from_word_unchecked(w.to_vec()));
                    ControlFlow::Continue(())
                });
                part
            })
            .collect()
    });
    parts.into_iter().flatten().collect()
}

pub fn count_class(spec: &ClassSpec) -> u64 {
    let mut count = 0;
    visit_class(spec, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Runs `f` on a pool of `workers` threads; 0 means one per core.
pub fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Statistics that can key a histogram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stat {
    Excedances,
    FixedPoints,
    Inversions,
    Descents,
}

impl Stat {
    pub fn as_str(self) -> &'static str {
        match self {
            Stat::Excedances => "excedances",
            Stat::FixedPoints => "fixed-points",
            Stat::Inversions => "inversions",
            Stat::Descents => "descents",
        }
    }

    pub fn of(self, sigma: &Permutation) -> usize {
        let s = sigma.statistics();
        match self {
            Stat::Excedances => s.excedances,
            Stat::FixedPoints => s.fixed_points,
            Stat::Inversions => s.inversions,
            Stat::Descents => s.descent_count,
        }
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Stat::Excedances, Stat::FixedPoints, Stat::Inversions, Stat::Descents]
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or_else(|| Error::UnknownName(format!("statistic {s:?}")))
    }
}

/// Joint distribution of `stats` over a list of permutations.
pub fn histogram<'a>(
    perms: impl IntoIterator<Item = &'a Permutation>,
    stats: &[Stat],
) -> BTreeMap<Vec<usize>, u64> {
    let mut table = BTreeMap::new();
    for sigma in perms {
        let key = stats.iter().map(|s| s.of(sigma)).collect();
        *table.entry(key).or_insert(0) += 1;
    }
    table
}

/// Joint distribution of `stats` over a class.
pub fn statistic_histogram(spec: &ClassSpec, stats: &[Stat]) -> BTreeMap<Vec<usize>, u64> {
    histogram(&enumerate_class(spec), stats)
}

/// Depth up to which the double simsun search runs before splitting work.
const SPLIT_DEPTH: usize = 6;

/// `|DRS_n|` for `n = 1..=n_max`: permutations that are simsun with a simsun
/// inverse, counted by inserting the values `1, 2, …` one at a time.
///
/// After inserting `k` the word is the restriction of the final permutation
/// to `{1..k}`. It must have no double descent, and its inverse (the
/// standardized first `k` letters of the final inverse) must be simsun, so
/// each level of the search is exactly the double simsun words of that
/// length. Subtrees below a fixed depth are shared across `workers` threads
/// and their counts summed, so the result does not depend on scheduling.
pub fn double_simsun_sequence(n_max: usize, workers: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n_max + 1];
    let split = n_max.min(SPLIT_DEPTH);
    let mut frontier = vec![Vec::new()];
    for count in &mut counts[1..=split] {
        frontier = frontier.iter().flat_map(|w| children(w)).collect();
        *count = frontier.len() as u64;
    }
    if n_max > split {
        let partials: Vec<Vec<u64>> = with_pool(workers, || {
            frontier
                .par_iter()
                .map(|w| {
                    let mut local = vec![0u64; n_max + 1];
                    count_below(w, n_max, &mut local);
                    local
                })
                .collect()
        });
        for local in partials {
            for (c, l) in counts.iter_mut().zip(local) {
                *c += l;
            }
        }
    }
    counts.split_off(1)
}

/// The viable words obtained by inserting `len + 1` into `w`.
fn children(w: &[usize]) -> Vec<Vec<usize>> {
    let k = w.len();
    (0..=k)
        .filter(|&g| !(g + 1 < k && w[g] > w[g + 1]))
        .map(|g| {
            let mut next = Vec::with_capacity(k + 1);
            next.extend_from_slice(&w[..g]);
            next.push(k + 1);
            next.extend_from_slice(&w[g..]);
            next
        })
        .filter(|next| is_simsun_word(&inverse_word(next)))
        .collect()
}

fn count_below(w: &[usize], n_max: usize, counts: &mut [u64]) {
    if w.len() == n_max {
        return;
    }
    for child in children(w) {
        counts[child.len()] += 1;
        count_below(&child, n_max, counts);
    }
}

fn inverse_word(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// `|DRS_n|` by filtering all of `S_n`.
pub fn naive_double_simsun_count(n: usize) -> u64 {
    all_permutations(n).filter(|s| s.is_double_simsun()).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(v: &[Permutation]) -> Vec<String> {
        v.iter()
            .map(|p| p.as_slice().iter().map(|d| d.to_string()).collect())
            .collect()
    }

    fn spec(n: usize, class: Class, avoid: &[&str]) -> ClassSpec {
        ClassSpec::new(n, class).avoiding(avoid).unwrap()
    }

    #[test]
    fn small_listings() {
        let rs4 = enumerate_class(&spec(4, Class::Simsun, &["123"]));
        let mut got = words(&rs4);
        got.sort();
        let mut want = vec!["3412", "4231", "4132", "3142", "2413", "2143"];
        want.sort();
        assert_eq!(got, want);

        let drs5 = enumerate_class(&spec(5, Class::DoubleSimsun, &["123"]));
        assert_eq!(words(&drs5), vec!["35142", "45231", "53412"]);
        let drs6 = enumerate_class(&spec(6, Class::DoubleSimsun, &["123"]));
        // 654231 opens with a double descent. Inserting 6 before the
        // leading ascent of 45231 gives 645231 instead.
        assert_eq!(words(&drs6), vec!["563412", "645231"]);
        assert!(!"654231".parse::<Permutation>().unwrap().is_simsun());

        let drs3 = enumerate_class(&spec(3, Class::DoubleSimsun, &["312"]));
        assert!(drs3.contains(&"231".parse().unwrap()));
    }

    #[test]
    fn empty_and_trivial() {
        assert_eq!(enumerate_class(&ClassSpec::new(0, Class::All)), vec![Permutation::identity(0)]);
        assert_eq!(enumerate_class(&ClassSpec::new(1, Class::DoubleSimsun)).len(), 1);
        assert_eq!(count_class(&ClassSpec::new(6, Class::All)), 720);
    }

    #[test]
    fn pruned_matches_naive_for_every_class() {
        let patterns = ["123", "132", "213", "231", "312", "321"];
        for n in 0..=7 {
            for class in [Class::All, Class::Simsun, Class::DoubleSimsun] {
                let mut specs = vec![ClassSpec::new(n, class)];
                for p in patterns {
                    specs.push(spec(n, class, &[p]));
                    let mut both = spec(n, class, &[p]);
                    both.avoid_inverse = true;
                    specs.push(both);
                }
                specs.push(spec(n, class, &["132", "213"]));
                for s in specs {
                    assert_eq!(enumerate_class(&s), naive_class(&s), "{s}");
                }
            }
        }
    }

    #[test]
    fn parallel_matches_serial() {
        for workers in [1, 3, 8] {
            let s = spec(7, Class::Simsun, &["231"]);
            assert_eq!(enumerate_class_parallel(&s, workers), enumerate_class(&s));
        }
    }

    #[test]
    fn stream_is_strictly_increasing() {
        let all = enumerate_class(&ClassSpec::new(6, Class::Simsun));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn double_simsun_counts() {
        assert_eq!(double_simsun_sequence(8, 2), vec![1, 2, 5, 15, 52, 204, 892, 4297]);
        for n in 0..=8 {
            let naive = naive_double_simsun_count(n);
            if n > 0 {
                assert_eq!(double_simsun_sequence(n, 1)[n - 1], naive);
            }
            assert_eq!(count_class(&ClassSpec::new(n, Class::DoubleSimsun)), naive);
        }
        assert_eq!(double_simsun_sequence(1, 1), vec![1]);
        assert!(double_simsun_sequence(0, 1).is_empty());
    }

    #[test]
    fn double_simsun_independent_of_workers() {
        let one = double_simsun_sequence(10, 1);
        assert_eq!(double_simsun_sequence(10, 4), one);
        assert_eq!(double_simsun_sequence(10, 8), one);
    }

    #[test]
    fn histograms() {
        let id = [Permutation::identity(5)];
        let h = histogram(&id, &[Stat::Excedances, Stat::FixedPoints]);
        assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![(vec![0, 5], 1)]);
        let h = statistic_histogram(&ClassSpec::new(3, Class::All), &[Stat::Descents]);
        assert_eq!(h[&vec![0]], 1);
        assert_eq!(h[&vec![1]], 4);
        assert_eq!(h[&vec![2]], 1);
        assert!("height".parse::<Stat>().is_err());
    }
}
