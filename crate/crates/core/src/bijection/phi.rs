//! The bijection between increasing 1-2 trees on `{0..n}` and simsun
//! permutations of length `n`.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::IncreasingTree;

/// Reads a simsun permutation off a canonical increasing 1-2 tree.
///
/// Starting at the root: a lone child `x` contributes the letter `x` and the
/// walk continues from `x`; with two children `u > v`, the inorder word of
/// `τ(u)` is written, `τ(u)` is removed, and the root is left with the lone
/// child `v`. A tree with `k + 1` leaves yields a word with `k` descents.
pub fn phi(tree: &IncreasingTree) -> Permutation {
    let mut word = Vec::with_capacity(tree.n());
    let mut root = 0;
    loop {
        let s = tree.slots(root);
        match (s.left, s.right) {
            (None, None) => break,
            (None, Some(x)) => {
                word.push(x);
                root = x;
            }
            (Some(u), Some(v)) => {
                word.extend(tree.inorder(u));
                word.push(v);
                root = v;
            }
            (Some(_), None) => unreachable!("canonical trees keep a lone child on the right"),
        }
    }
    Permutation::from_word_unchecked(word)
}

/// Rebuilds the tree of a simsun permutation. Non-simsun input is rejected
/// with the first double descent found.
pub fn phi_inverse(sigma: &Permutation) -> Result<IncreasingTree> {
    if let Some(w) = sigma.simsun_witness() {
        return Err(Error::NotSimsun(w));
    }
    phi_inverse_unchecked(sigma)
}

/// [`phi_inverse`] without the simsun scan, for trusted input.
pub fn phi_inverse_unchecked(sigma: &Permutation) -> Result<IncreasingTree> {
    let mut stages = build_stages(sigma, false)?;
    Ok(stages.pop().unwrap_or_else(IncreasingTree::root_only))
}

/// The trees `T₁, …, Tₙ` built while inverting `σ`; `Tⱼ` is the tree of the
/// restriction of `σ` to `{1..j}`.
pub fn phi_inverse_stages(sigma: &Permutation) -> Result<Vec<IncreasingTree>> {
    if let Some(w) = sigma.simsun_witness() {
        return Err(Error::NotSimsun(w));
    }
    build_stages(sigma, true)
}

fn build_stages(sigma: &Permutation, keep_all: bool) -> Result<Vec<IncreasingTree>> {
    let word = sigma.as_slice();
    let n = word.len();
    let mut pos = vec![0; n + 1];
    for (i, &v) in word.iter().enumerate() {
        pos[v] = i;
    }
    let mut stages = Vec::new();
    let mut tree = IncreasingTree::root_only();
    for j in 1..=n {
        let target = if j == 1 {
            0
        } else {
            // Neighbours of j in the restriction to {1..j-1}.
            let before = word[..pos[j]].iter().rev().find(|&&v| v < j).copied();
            let after = word[pos[j] + 1..].iter().find(|&&v| v < j).copied();
            match (before, after) {
                // j follows every smaller letter.
                (Some(_), None) => tree.last_vertex(),
                // j precedes every smaller letter.
                (None, Some(first)) => {
                    if tree.slots(0).degree() == 1 {
                        0
                    } else {
                        first
                    }
                }
                (Some(a), Some(b)) if a > b => a,
                (Some(a), Some(b)) => {
                    if tree.rightmost_path().contains(&b) {
                        a
                    } else {
                        b
                    }
                }
                (None, None) => unreachable!("j >= 2 has a smaller letter"),
            }
        };
        tree.attach(target).map_err(|_| {
            Error::Domain(format!("{sigma} is not simsun: vertex {target} is full at step {j}"))
        })?;
        if keep_all {
            stages.push(tree.clone());
        }
    }
    if !keep_all && n > 0 {
        stages.push(tree);
    }
    Ok(stages)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::enumerate_increasing_trees;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(s: &str) -> IncreasingTree {
        s.parse().unwrap()
    }

    #[test]
    fn nine_vertex_tree() {
        let tree = t("0(3(,4(8,6)),1(5(9,7),2))");
        assert_eq!(phi(&tree).to_string(), "3 8 4 6 1 9 5 7 2");
        assert_eq!(phi_inverse(&p("384619572")).unwrap(), tree);
    }

    #[test]
    fn trivial_cases() {
        assert!(phi(&IncreasingTree::root_only()).is_empty());
        assert_eq!(phi(&IncreasingTree::path(6)), Permutation::identity(6));
        assert_eq!(phi_inverse(&Permutation::identity(6)).unwrap(), IncreasingTree::path(6));
        assert_eq!(phi_inverse(&Permutation::identity(0)).unwrap(), IncreasingTree::root_only());
    }

    #[test]
    fn worked_inversion() {
        let stages = phi_inverse_stages(&p("53418672")).unwrap();
        let text: Vec<String> = stages.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            text,
            vec![
                "0(,1)",
                "0(,1(,2))",
                "0(3,1(,2))",
                "0(3(,4),1(,2))",
                "0(3(5,4),1(,2))",
                "0(3(5,4),1(6,2))",
                "0(3(5,4),1(6(,7),2))",
                "0(3(5,4),1(6(8,7),2))",
            ]
        );
        let sigma = p("53418672");
        for (j, stage) in stages.iter().enumerate() {
            assert_eq!(phi(stage).as_slice(), sigma.restrict(j + 1).unwrap());
        }
    }

    #[test]
    fn rejects_non_simsun() {
        match phi_inverse(&p("24351")) {
            Err(Error::NotSimsun(w)) => {
                assert_eq!(w.k, 4);
                assert_eq!(w.triple, [4, 3, 1]);
            }
            other => panic!("expected NotSimsun, got {other:?}"),
        }
    }

    #[test]
    fn descents_track_leaves_and_round_trip() {
        for n in 0..=8 {
            for tree in enumerate_increasing_trees(n) {
                let sigma = phi(&tree);
                assert!(sigma.is_simsun());
                assert_eq!(sigma.descents().len() + 1, tree.leaves().len());
                assert_eq!(phi_inverse(&sigma).unwrap(), tree);
                assert_eq!(phi_inverse_unchecked(&sigma).unwrap(), tree);
            }
        }
    }
}
