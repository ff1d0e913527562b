//! Ordered 1-2 trees with `n + 1` vertices and Motzkin paths of length `n`.

use crate::error::{Error, Result};
use crate::motzkin::{MotzkinPath, Step};
use crate::tree::{OrderedTree, Slots};

/// A lone child writes `L` and continues below it; a root with left child
/// `u` and right child `v` writes `U χ(τ(v)) D χ(τ(u))`.
pub fn chi(tree: &OrderedTree) -> MotzkinPath {
    enum Task {
        Visit(usize),
        Emit(Step),
    }
    let arena = tree.arena();
    let mut steps = Vec::with_capacity(tree.n());
    let mut stack = vec![Task::Visit(0)];
    while let Some(task) = stack.pop() {
        match task {
            Task::Emit(s) => steps.push(s),
            Task::Visit(v) => match (arena[v].left, arena[v].right) {
                (None, None) => {}
                (Some(u), Some(w)) => {
                    stack.push(Task::Visit(u));
                    stack.push(Task::Emit(Step::D));
                    stack.push(Task::Visit(w));
                    stack.push(Task::Emit(Step::U));
                }
                (Some(x), None) | (None, Some(x)) => {
                    stack.push(Task::Visit(x));
                    stack.push(Task::Emit(Step::L));
                }
            },
        }
    }
    MotzkinPath::from_steps_unchecked(steps)
}

/// Inverse of [`chi`]. A path `U π₁ D π₂`, split at the first down step
/// back to the axis, becomes a root whose right subtree is `χ⁻¹(π₁)` and
/// whose left subtree is `χ⁻¹(π₂)`.
pub fn chi_inverse(path: &MotzkinPath) -> Result<OrderedTree> {
    let steps = path.steps();
    let mut matching = vec![usize::MAX; steps.len()];
    let mut open = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::U => open.push(i),
            Step::D => {
                let u = open
                    .pop()
                    .ok_or_else(|| Error::InvalidPath(format!("unmatched D at {}", i + 1)))?;
                matching[u] = i;
            }
            Step::L => {}
        }
    }
    if !open.is_empty() {
        return Err(Error::InvalidPath("unmatched U".into()));
    }

    let mut arena = vec![Slots::default()];
    let mut work = vec![(0usize, 0usize, steps.len())];
    while let Some((v, start, end)) = work.pop() {
        if start == end {
            continue;
        }
        match steps[start] {
            Step::L => {
                let c = arena.len();
                arena.push(Slots::default());
                arena[v].right = Some(c);
                work.push((c, start + 1, end));
            }
            Step::U => {
                let back = matching[start];
                let right = arena.len();
                let left = right + 1;
                arena.push(Slots::default());
                arena.push(Slots::default());
                arena[v] = Slots {
                    left: Some(left),
                    right: Some(right),
                };
                work.push((right, start + 1, back));
                work.push((left, back + 1, end));
            }
            Step::D => unreachable!("segments start at the axis"),
        }
    }
    Ok(OrderedTree::from_arena(&arena, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motzkin::enumerate_motzkin;
    use crate::tree::enumerate_ordered_trees;

    #[test]
    fn ordered_tree_example() {
        let x: OrderedTree = "*(*(*,*(,*)),*(*(,*),*))".parse().unwrap();
        assert_eq!(x.rtl_preorder_label().to_string(), "0(5(8,6(,7)),1(3(,4),2))");
        assert_eq!(chi(&x).to_string(), "UUDLDULD");
        assert_eq!(chi_inverse(&"UUDLDULD".parse().unwrap()).unwrap(), x);
    }

    #[test]
    fn trivial_cases() {
        assert!(chi(&OrderedTree::single_vertex()).is_empty());
        assert_eq!(chi(&OrderedTree::chain(5)), MotzkinPath::level(5));
        assert_eq!(chi_inverse(&MotzkinPath::default()).unwrap(), OrderedTree::single_vertex());
        assert_eq!(chi_inverse(&MotzkinPath::level(4)).unwrap(), OrderedTree::chain(4));
    }

    #[test]
    fn round_trips() {
        for n in 0..=10 {
            for x in enumerate_ordered_trees(n) {
                let path = chi(&x);
                assert_eq!(path.len(), n);
                assert_eq!(chi_inverse(&path).unwrap(), x);
            }
            for path in enumerate_motzkin(n) {
                assert_eq!(chi(&chi_inverse(&path).unwrap()), path);
            }
        }
    }
}
