//! Compositions of `n` and the block-rotation constructions built on them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Pattern, Permutation};

/// An ordered list of positive parts. `n` is the sum of the parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// `s₀ = 0, s₁, …, s_j = n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut s = 0;
        out.push(0);
        for &t in &self.0 {
            s += t;
            out.push(s);
        }
        out
    }

    /// Blocks `s_{i-1}+1 ..= s_i` of the word `1 2 … n`.
    fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let sums = self.partial_sums();
        (1..sums.len())
            .map(move |i| (sums[i - 1] + 1, sums[i]))
            .collect::<Vec<_>>()
            .into_iter()
    }

    /// All `2^(n-1)` compositions of `n` (one, the empty one, for `n = 0`),
    /// in lexicographic order of parts.
    pub fn all(n: usize) -> Vec<Composition> {
        fn go(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if left == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for part in 1..=left {
                cur.push(part);
                go(left - part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out
    }

    /// Parts other than the first and last are at least 2.
    pub fn has_interior_parts_at_least_two(&self) -> bool {
        let k = self.0.len();
        k <= 2 || self.0[1..k - 1].iter().all(|&t| t >= 2)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated parts, e.g. `3,2,1,3`. The empty string is the empty
    /// composition of 0.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Each block of `1 2 … n` has its first letter moved to the end.
/// `(3,2,1,3) ↦ 2 3 1 5 4 6 8 9 7`.
pub fn rho(c: &Composition) -> Permutation {
    let mut word = Vec::with_capacity(c.n());
    for (first, last) in c.blocks() {
        word.extend(first + 1..=last);
        word.push(first);
    }
    Permutation::from_word_unchecked(word)
}

/// Each block of `1 2 … n` has its last letter moved to the front.
/// This is the inverse permutation of [`rho`].
pub fn varrho(c: &Composition) -> Permutation {
    let mut word = Vec::with_capacity(c.n());
    for (first, last) in c.blocks() {
        word.push(last);
        word.extend(first..last);
    }
    Permutation::from_word_unchecked(word)
}

/// Recovers the composition of a 312-avoiding simsun permutation.
pub fn rho_inverse(sigma: &Permutation) -> Result<Composition> {
    if let Some(w) = sigma.simsun_witness() {
        return Err(Error::NotSimsun(w));
    }
    let p312: Pattern = "312".parse().expect("static pattern");
    if sigma.contains_pattern(&p312) {
        return Err(Error::Domain(format!("{sigma} contains 312")));
    }
    Ok(rho_inverse_unchecked(sigma))
}

/// [`rho_inverse`] without the membership scans.
///
/// A cut goes right after the letter `k` whenever `k` is last in the
/// restriction to `{1..k}`; the piece lengths form the composition.
pub fn rho_inverse_unchecked(sigma: &Permutation) -> Composition {
    let n = sigma.len();
    let inv = sigma.inverse();
    let mut cut_after = vec![false; n];
    let mut latest = 0;
    for k in 1..=n {
        let at = inv.at(k);
        if at > latest {
            cut_after[at - 1] = true;
            latest = at;
        }
    }
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, &cut) in cut_after.iter().enumerate() {
        if cut {
            parts.push(i + 1 - start);
            start = i + 1;
        }
    }
    if start < n {
        parts.push(n - start);
    }
    Composition(parts)
}

/// Cuts `n (n-1) … 1` into blocks of the given sizes and reverses each
/// block. Parts other than the first and last must be at least 2.
/// `(1,3,2,3) ↦ 9 6 7 8 4 5 1 2 3`.
pub fn zeta(c: &Composition) -> Result<Permutation> {
    if !c.has_interior_parts_at_least_two() {
        return Err(Error::InvalidComposition(format!(
            "interior parts of {c} must be at least 2"
        )));
    }
    let n = c.n();
    let mut word = Vec::with_capacity(n);
    let sums = c.partial_sums();
    for i in 1..sums.len() {
        // Block i of the decreasing word holds n - s_{i-1} down to n - s_i + 1.
        word.extend(n - sums[i] + 1..=n - sums[i - 1]);
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// The compositions of `n` accepted by [`zeta`].
pub fn zeta_compositions(n: usize) -> Vec<Composition> {
    Composition::all(n)
        .into_iter()
        .filter(Composition::has_interior_parts_at_least_two)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&c("3,2,1,3")).to_string(), "2 3 1 5 4 6 8 9 7");
        assert_eq!(rho(&c("1,1,1,1,1")), Permutation::identity(5));
        assert_eq!(rho(&c("5")).to_string(), "2 3 4 5 1");
        assert!(rho(&c("")).is_empty());
    }

    #[test]
    fn rho_inverse_examples() {
        assert_eq!(rho_inverse(&"231546897".parse().unwrap()).unwrap(), c("3,2,1,3"));
        assert_eq!(rho_inverse(&Permutation::identity(4)).unwrap(), c("1,1,1,1"));
        assert!(rho_inverse(&"312".parse().unwrap()).is_err());
        assert!(matches!(rho_inverse(&"321".parse().unwrap()), Err(Error::NotSimsun(_))));
    }

    #[test]
    fn varrho_examples() {
        assert_eq!(varrho(&c("3,2,1,3")).to_string(), "3 1 2 5 4 6 9 7 8");
        assert_eq!(varrho(&c("1,1,1")), Permutation::identity(3));
        assert_eq!(varrho(&c("4")).to_string(), "4 1 2 3");
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(&c("1,3,2,3")).unwrap().to_string(), "9 6 7 8 4 5 1 2 3");
        assert_eq!(zeta(&c("6")).unwrap(), Permutation::identity(6));
        assert!(zeta(&c("")).unwrap().is_empty());
        assert!(zeta(&c("2,1,2")).is_err());
        let mut image: Vec<String> = zeta_compositions(3)
            .iter()
            .map(|k| zeta(k).unwrap().to_string())
            .collect();
        image.sort();
        assert_eq!(image, vec!["1 2 3", "2 3 1", "3 1 2"]);
    }

    #[test]
    fn composition_counts() {
        assert_eq!(Composition::all(0).len(), 1);
        for n in 1..=12 {
            assert_eq!(Composition::all(n).len(), 1 << (n - 1));
        }
        assert_eq!(Composition::all(4)[0], c("1,1,1,1"));
        assert!("1,0".parse::<Composition>().is_err());
        assert!("1,,2".parse::<Composition>().is_err());
        assert_eq!(c("3,2,1,3").to_string(), "3,2,1,3");
    }
}
