//! Exact reference sequences used as expected values by the verifier.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The named reference sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceName {
    /// Alternating permutations `σ₁ > σ₂ < σ₃ > …`, `E₀ = E₁ = E₂ = 1`.
    Euler,
    Motzkin,
    Catalan,
    /// Motzkin paths without two consecutive down steps.
    Secondary,
    /// `F₀ = 0, F₁ = F₂ = 1`.
    Fibonacci,
    /// `2^(n-1)`, defined for `n ≥ 1`.
    Pow2,
}

impl SequenceName {
    pub const ALL: [SequenceName; 6] = [
        SequenceName::Euler,
        SequenceName::Motzkin,
        SequenceName::Catalan,
        SequenceName::Secondary,
        SequenceName::Fibonacci,
        SequenceName::Pow2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::Euler => "euler",
            SequenceName::Motzkin => "motzkin",
            SequenceName::Catalan => "catalan",
            SequenceName::Secondary => "secondary",
            SequenceName::Fibonacci => "fibonacci",
            SequenceName::Pow2 => "pow2",
        }
    }

    /// Smallest index at which the sequence is defined.
    pub fn offset(self) -> usize {
        match self {
            SequenceName::Pow2 => 1,
            _ => 0,
        }
    }

    /// Terms for `offset ..= n_max`.
    pub fn terms(self, n_max: usize) -> Vec<BigUint> {
        let all = match self {
            SequenceName::Euler => euler_terms(n_max),
            SequenceName::Motzkin => motzkin_terms(n_max),
            SequenceName::Catalan => catalan_terms(n_max),
            SequenceName::Secondary => secondary_terms(n_max),
            SequenceName::Fibonacci => fibonacci_terms(n_max),
            SequenceName::Pow2 => (0..=n_max)
                .map(|n| if n == 0 { BigUint::zero() } else { BigUint::one() << (n - 1) })
                .collect(),
        };
        all.into_iter().skip(self.offset()).collect()
    }

    /// The term at index `n`.
    pub fn value(self, n: usize) -> Result<BigUint> {
        if n < self.offset() {
            return Err(Error::OutOfRange {
                what: "n",
                value: n,
                range: format!("{}.. for {}", self.offset(), self.as_str()),
            });
        }
        Ok(self.terms(n).pop().expect("n is in range"))
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| Error::UnknownName(format!("sequence {s:?}")))
    }
}

/// `E₀ … E_{n_max}` via the boustrophedon (Seidel) triangle.
pub fn euler_terms(n_max: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for _ in 1..=n_max {
        // Each new row is the running sum of the previous row read backwards.
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::zero());
        for v in row.iter().rev() {
            let s = next.last().expect("nonempty") + v;
            next.push(s);
        }
        out.push(next.last().expect("nonempty").clone());
        row = next;
    }
    out
}

/// `M_n = M_{n-1} + Σ_{k=0}^{n-2} M_k M_{n-2-k}`.
pub fn motzkin_terms(n_max: usize) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let v = if n == 0 {
            BigUint::one()
        } else {
            let mut v = m[n - 1].clone();
            for k in 0..n.saturating_sub(1) {
                v += &m[k] * &m[n - 2 - k];
            }
            v
        };
        m.push(v);
    }
    m
}

/// `C_n = Σ_{k=0}^{n-1} C_k C_{n-1-k}`.
pub fn catalan_terms(n_max: usize) -> Vec<BigUint> {
    let mut c: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let v = if n == 0 {
            BigUint::one()
        } else {
            (0..n).map(|k| &c[k] * &c[n - 1 - k]).sum()
        };
        c.push(v);
    }
    c
}

/// DD-free Motzkin paths of length `n`. With `a(0) = a(1) = 1` and
/// `a(m) = a(m-1) + Σ_{k=1}^{m-2} a(k-1) a(m-k-1)`, the count for length
/// `n` is `a(n + 1)`.
pub fn secondary_terms(n_max: usize) -> Vec<BigUint> {
    let len = n_max + 2;
    let mut a: Vec<BigUint> = Vec::with_capacity(len);
    for m in 0..len {
        let v = if m < 2 {
            BigUint::one()
        } else {
            let mut v = a[m - 1].clone();
            for k in 1..m - 1 {
                v += &a[k - 1] * &a[m - k - 1];
            }
            v
        };
        a.push(v);
    }
    a.into_iter().skip(1).collect()
}

pub fn fibonacci_terms(n_max: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::zero(), BigUint::one()];
    while f.len() <= n_max {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f.truncate(n_max + 1);
    f
}

/// `n choose k`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| u64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn euler_values() {
        assert_eq!(
            small(&euler_terms(10)),
            vec![1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]
        );
    }

    #[test]
    fn euler_matches_convolution() {
        // 2 E_{n+1} = Σ C(n,k) E_k E_{n-k} for n ≥ 1.
        let e = euler_terms(30);
        for n in 1..30 {
            let rhs: BigUint = (0..=n).map(|k| binomial(n, k) * &e[k] * &e[n - k]).sum();
            assert_eq!(&e[n + 1] * 2u32, rhs, "n = {n}");
        }
    }

    #[test]
    fn motzkin_values() {
        assert_eq!(
            small(&motzkin_terms(10)),
            vec![1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]
        );
    }

    #[test]
    fn catalan_recurrence_matches_binomial() {
        let c = catalan_terms(20);
        for (n, v) in c.iter().enumerate() {
            assert_eq!(*v, binomial(2 * n, n) / (n + 1), "n = {n}");
        }
        assert_eq!(small(&c[..6]), vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn secondary_values() {
        assert_eq!(
            small(&secondary_terms(9)),
            vec![1, 1, 2, 4, 8, 17, 37, 82, 185, 423]
        );
    }

    #[test]
    fn secondary_counts_dd_free_paths() {
        let s = secondary_terms(12);
        for (n, v) in s.iter().enumerate() {
            let count = crate::motzkin::enumerate_motzkin(n)
                .iter()
                .filter(|p| p.is_dd_free())
                .count();
            assert_eq!(*v, BigUint::from(count), "n = {n}");
        }
    }

    #[test]
    fn fibonacci_and_pow2() {
        assert_eq!(small(&fibonacci_terms(8)), vec![0, 1, 1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(small(&SequenceName::Pow2.terms(5)), vec![1, 2, 4, 8, 16]);
        assert!(SequenceName::Pow2.value(0).is_err());
        assert_eq!(SequenceName::Fibonacci.value(1).unwrap(), BigUint::one());
        assert_eq!(SequenceName::Catalan.value(0).unwrap(), BigUint::one());
        assert_eq!(SequenceName::Euler.value(4).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn names() {
        for name in SequenceName::ALL {
            assert_eq!(name.as_str().parse::<SequenceName>().unwrap(), name);
        }
        assert!(matches!("lucas".parse::<SequenceName>(), Err(Error::UnknownName(_))));
    }

    #[test]
    fn exact_beyond_u64() {
        let e = euler_terms(40);
        assert!(u64::try_from(&e[40]).is_err());
        assert_eq!(SequenceName::Euler.terms(40).len(), 41);
    }
}
