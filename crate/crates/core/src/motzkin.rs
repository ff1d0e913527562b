//! Motzkin paths over the steps `U = (1,1)`, `L = (1,0)`, `D = (1,-1)` and the
//! subfamilies used by the bijections: DD-free paths, `R_n`, `Q_n`, `W_n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One step of a lattice path. Steps order as `D < L < U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    D,
    L,
    U,
}

impl Step {
    fn delta(self) -> isize {
        match self {
            Step::U => 1,
            Step::L => 0,
            Step::D => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::L => 'L',
            Step::D => 'D',
        }
    }
}

/// A path from `(0,0)` to `(n,0)` that never goes below the axis.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath(Vec<Step>);

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: isize = 0;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(Error::InvalidPath(format!("goes below the axis at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath(format!("ends at height {h}")));
        }
        Ok(MotzkinPath(steps))
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(MotzkinPath::new(steps.clone()).is_ok());
        MotzkinPath(steps)
    }

    pub fn level(n: usize) -> Self {
        MotzkinPath(vec![Step::L; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Heights `h₀ = 0, h₁, …, hₙ = 0` after each prefix.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut h = 0isize;
        out.push(0);
        for s in &self.0 {
            h += s.delta();
            out.push(h as usize);
        }
        out
    }

    pub fn height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Area between the path and the axis: the trapezoid sum
    /// `Σ (hᵢ₋₁ + hᵢ) / 2`, which for a closed path is `Σ hᵢ` over the
    /// interior points.
    pub fn area(&self) -> usize {
        let h = self.heights();
        let twice: usize = h.windows(2).map(|w| w[0] + w[1]).sum();
        twice / 2
    }

    /// No two consecutive down steps.
    pub fn is_dd_free(&self) -> bool {
        !self.0.windows(2).any(|w| w == [Step::D, Step::D])
    }

    /// Height exactly one and no level step on the axis.
    pub fn in_r(&self) -> bool {
        let mut h = 0;
        let mut max = 0;
        for &s in &self.0 {
            if s == Step::L && h == 0 {
                return false;
            }
            h = (h as isize + s.delta()) as usize;
            max = max.max(h);
        }
        max == 1
    }

    /// Member of `Q_n`: zero or more blocks `U L* D` followed by a run of
    /// level steps on the axis.
    pub fn in_q(&self) -> bool {
        let s = &self.0;
        let mut i = 0;
        while i < s.len() && s[i] == Step::U {
            i += 1;
            while i < s.len() && s[i] == Step::L {
                i += 1;
            }
            if i == s.len() || s[i] != Step::D {
                return false;
            }
            i += 1;
        }
        s[i..].iter().all(|&x| x == Step::L)
    }

    /// Strips the first and last step of the last block of a path in
    /// `R_{n+2}`, giving a path in `Q_n`.
    pub fn q_from_r(&self) -> Result<MotzkinPath> {
        if !self.in_r() {
            return Err(Error::Domain(format!("{self} is not in R_n")));
        }
        // The last block starts at the last up step from the axis; in R_n
        // that is simply the last U.
        let start = self
            .0
            .iter()
            .rposition(|&s| s == Step::U)
            .expect("height one path has an up step");
        let mut steps = self.0[..start].to_vec();
        steps.extend_from_slice(&self.0[start + 1..self.len() - 1]);
        Ok(MotzkinPath::from_steps_unchecked(steps))
    }

    /// Splits into blocks: minimal nonempty factors from the axis back to the
    /// axis, a level step on the axis being a block on its own.
    pub fn blocks(&self) -> Vec<&[Step]> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut h = 0isize;
        for (i, s) in self.0.iter().enumerate() {
            h += s.delta();
            if h == 0 {
                out.push(&self.0[start..=i]);
                start = i + 1;
            }
        }
        out
    }

    /// Number of maximal runs of consecutive `U` and `L` steps.
    pub fn weak_ascents(&self) -> usize {
        let mut count = 0;
        let mut in_run = false;
        for &s in &self.0 {
            let ascending = s != Step::D;
            if ascending && !in_run {
                count += 1;
            }
            in_run = ascending;
        }
        count
    }

    /// Exactly one weak ascent.
    pub fn in_w(&self) -> bool {
        self.weak_ascents() == 1
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath[{self}]")
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::U),
                'L' => Ok(Step::L),
                'D' => Ok(Step::D),
                other => Err(Error::Parse(format!("bad step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

/// Every Motzkin path of length `n`, in lexicographic order with `D < L < U`.
pub fn enumerate_motzkin(n: usize) -> Vec<MotzkinPath> {
    fn go(n: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
        let left = n - cur.len();
        if left == 0 {
            out.push(MotzkinPath(cur.clone()));
            return;
        }
        for s in [Step::D, Step::L, Step::U] {
            let next = match s {
                Step::D if h == 0 => continue,
                Step::D => h - 1,
                Step::L => h,
                Step::U => h + 1,
            };
            if next > left - 1 {
                continue;
            }
            cur.push(s);
            go(n, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}
