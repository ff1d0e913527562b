//! Subtree switching between the trees of 231-avoiding simsun permutations
//! and trees labeled in right-to-left preorder.

use crate::bijection::phi;
use crate::error::{Error, Result};
use crate::perm::Pattern;
use crate::tree::{IncreasingTree, Slots};

fn pattern_231() -> Pattern {
    "231".parse().expect("static pattern")
}

/// Maps a tree of a 231-avoiding simsun permutation to a tree whose labels
/// increase in right-to-left preorder.
pub fn psi(tree: &IncreasingTree) -> Result<IncreasingTree> {
    let sigma = phi(tree);
    if sigma.contains_pattern(&pattern_231()) {
        return Err(Error::Domain(format!(
            "tree {tree} encodes {sigma}, which contains 231"
        )));
    }
    psi_unchecked(tree)
}

/// [`psi`] without the 231 scan.
///
/// Repeatedly takes the first consecutive pair `(v, z)` of right-to-left
/// preorder with `z ≥ v + 2`, and moves the children of `v` (its left child
/// and `z`) under the leaf `z - 1`. Each pass rescans from the root.
pub fn psi_unchecked(tree: &IncreasingTree) -> Result<IncreasingTree> {
    let mut t = tree.clone();
    let bound = (t.n() + 1) * (t.n() + 1);
    for _ in 0..=bound {
        let order = t.rtl_preorder();
        let Some((v, z)) = order
            .windows(2)
            .map(|w| (w[0], w[1]))
            .find(|&(v, z)| z >= v + 2)
        else {
            return Ok(t);
        };
        let s = t.slots(v);
        if s.right != Some(z) {
            return Err(Error::Domain(format!("{z} is not the right child of {v} in {t}")));
        }
        let x = z - 1;
        if !t.is_leaf(x) {
            return Err(Error::Domain(format!("{x} is not a leaf in {t}")));
        }
        t.set_slots(
            x,
            Slots {
                left: s.left,
                right: Some(z),
            },
        );
        t.set_slots(v, Slots::default());
    }
    Err(Error::Domain(format!("switching did not settle for {tree}")))
}

/// Inverse of [`psi`]; the input must be increasing in right-to-left
/// preorder.
pub fn psi_inverse(tree: &IncreasingTree) -> Result<IncreasingTree> {
    if !tree.is_rtl_increasing() {
        return Err(Error::Domain(format!(
            "{tree} is not increasing in right-to-left preorder"
        )));
    }
    psi_inverse_unchecked(tree)
}

/// [`psi_inverse`] without the preorder check.
///
/// Repeatedly takes the first left child `x` (depth-first, left to right)
/// that is not a leaf, and moves its children under the greatest leaf of
/// the subtree of its sibling. Stops once every left child is a leaf.
pub fn psi_inverse_unchecked(tree: &IncreasingTree) -> Result<IncreasingTree> {
    let mut t = tree.clone();
    let bound = (t.n() + 1) * (t.n() + 1);
    for _ in 0..=bound {
        let Some(x) = t
            .preorder()
            .into_iter()
            .find(|&x| t.is_left_child(x) && !t.is_leaf(x))
        else {
            return Ok(t);
        };
        let parent = t.parent(x).expect("left child has a parent");
        let sibling = t.slots(parent).right.expect("left child has a sibling");
        let leaf = t
            .subtree(sibling)
            .into_iter()
            .filter(|&u| t.is_leaf(u))
            .max()
            .expect("every subtree has a leaf");
        let moved = t.slots(x);
        if moved.right.is_some_and(|z| z < leaf) {
            return Err(Error::Domain(format!(
                "moving the children of {x} under {leaf} breaks increase in {t}"
            )));
        }
        t.set_slots(leaf, moved);
        t.set_slots(x, Slots::default());
    }
    Err(Error::Domain(format!("switching did not settle for {tree}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::phi_inverse;
    use crate::perm::Permutation;

    fn t(s: &str) -> IncreasingTree {
        s.parse().unwrap()
    }

    #[test]
    fn switching_example() {
        let sigma: Permutation = "51324867".parse().unwrap();
        let a = phi_inverse(&sigma).unwrap();
        assert_eq!(a.to_string(), "0(5,1(3,2(,4(8,6(,7)))))");
        let c = psi(&a).unwrap();
        assert_eq!(c.to_string(), "0(5(8,6(,7)),1(3(,4),2))");
        assert!(c.is_rtl_increasing());
        assert_eq!(psi_inverse(&c).unwrap(), a);
    }

    #[test]
    fn middle_tree() {
        let a = t("0(5,1(3,2(,4(8,6(,7)))))");
        let b = t("0(5,1(3(,4(8,6(,7))),2))");
        let c = t("0(5(8,6(,7)),1(3(,4),2))");
        assert_eq!(psi_unchecked(&b).unwrap(), c);
        assert_eq!(psi_inverse_unchecked(&b).unwrap(), a);
    }

    #[test]
    fn fixed_points() {
        let rtl = t("0(3,1(,2))");
        assert!(rtl.is_rtl_increasing());
        assert_eq!(psi(&rtl).unwrap(), rtl);
        let leafy = t("0(2,1(,3))");
        assert_eq!(psi_inverse_unchecked(&leafy).unwrap(), leafy);
    }

    #[test]
    fn rejects_outside_domain() {
        // 2 3 1 contains 231.
        let tree = phi_inverse(&"231".parse().unwrap()).unwrap();
        assert!(psi(&tree).is_err());
        assert!(psi_inverse(&t("0(2,1(,3))")).is_err());
    }
}
