//! Increasing 1-2 trees on `{0..n}` and unlabeled ordered 1-2 trees.
//!
//! Both kinds are stored as arenas of [`Slots`]. For an [`IncreasingTree`] the
//! arena index is the vertex label. For an [`OrderedTree`] the arena index is
//! the vertex's rank in right-to-left preorder, so two shapes are equal
//! exactly when their arenas are equal.
//!
//! Text format: `label`, followed by `(left,right)` when the vertex has a
//! child, an absent child written as the empty string. Ordered trees use `*`
//! for every label, e.g. `*(,*(*,*))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The left and right child slots of one vertex.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slots {
    pub left: Option<usize>,
    pub right: Option<usize>,
}

impl Slots {
    pub fn degree(&self) -> usize {
        self.left.is_some() as usize + self.right.is_some() as usize
    }

    pub fn is_leaf(&self) -> bool {
        self.degree() == 0
    }
}

/// Right-to-left preorder: root, then right subtree, then left subtree.
pub(crate) fn rtl_preorder(slots: &[Slots], root: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(slots.len());
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        out.push(v);
        let s = slots[v];
        stack.extend(s.left);
        stack.extend(s.right);
    }
    out
}

/// Left-to-right preorder (the depth-first-search order).
pub(crate) fn preorder(slots: &[Slots], root: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(slots.len());
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        out.push(v);
        let s = slots[v];
        stack.extend(s.right);
        stack.extend(s.left);
    }
    out
}

/// Inorder: left subtree, root, right subtree.
pub(crate) fn inorder(slots: &[Slots], root: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut cur = Some(root);
    loop {
        while let Some(v) = cur {
            stack.push(v);
            cur = slots[v].left;
        }
        match stack.pop() {
            Some(v) => {
                out.push(v);
                cur = slots[v].right;
            }
            None => break,
        }
    }
    out
}

fn write_tree(
    f: &mut fmt::Formatter<'_>,
    slots: &[Slots],
    root: usize,
    label: impl Fn(usize) -> String,
) -> fmt::Result {
    enum Item {
        Vertex(usize),
        Text(&'static str),
    }
    let mut stack = vec![Item::Vertex(root)];
    while let Some(item) = stack.pop() {
        match item {
            Item::Text(t) => f.write_str(t)?,
            Item::Vertex(v) => {
                f.write_str(&label(v))?;
                let s = slots[v];
                if !s.is_leaf() {
                    stack.push(Item::Text(")"));
                    stack.extend(s.right.map(Item::Vertex));
                    stack.push(Item::Text(","));
                    stack.extend(s.left.map(Item::Vertex));
                    stack.push(Item::Text("("));
                }
            }
        }
    }
    Ok(())
}

/// Which child slot a vertex occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct RawNode {
    label: Option<usize>,
    slots: Slots,
}

/// A tree as written, before any check: labels may be arbitrary (or `*`)
/// and children may sit in either slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    nodes: Vec<RawNode>,
}

impl LabeledTree {
    /// A single vertex; `None` is the anonymous `*` label.
    pub fn new(root: Option<usize>) -> Self {
        LabeledTree {
            nodes: vec![RawNode {
                label: root,
                slots: Slots::default(),
            }],
        }
    }

    /// Adds a child under the node with arena index `parent` and returns the
    /// new node's index. The root has index 0.
    pub fn add_child(&mut self, parent: usize, label: Option<usize>, side: Side) -> Result<usize> {
        let idx = self.nodes.len();
        let slot = match side {
            Side::Left => &mut self.nodes[parent].slots.left,
            Side::Right => &mut self.nodes[parent].slots.right,
        };
        if slot.is_some() {
            return Err(Error::InvalidTree(format!("{side:?} slot already used")));
        }
        *slot = Some(idx);
        self.nodes.push(RawNode {
            label,
            slots: Slots::default(),
        });
        Ok(idx)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn slots(&self) -> Vec<Slots> {
        self.nodes.iter().map(|n| n.slots).collect()
    }
}

impl FromStr for LabeledTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let mut i = 0;
        let read_label = |i: &mut usize| -> Result<Option<Option<usize>>> {
            if *i < bytes.len() && bytes[*i] == b'*' {
                *i += 1;
                return Ok(Some(None));
            }
            let start = *i;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
            if start == *i {
                return Ok(None);
            }
            let text = std::str::from_utf8(&bytes[start..*i]).expect("ascii digits");
            let v = text
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("label {text:?} too large")))?;
            Ok(Some(Some(v)))
        };
        let err = |i: usize, what: &str| Error::Parse(format!("tree text: {what} at byte {i}"));

        let mut tree: Option<LabeledTree> = None;
        // Open parent vertices and the slot currently being filled.
        let mut open: Vec<(usize, Side)> = Vec::new();
        let mut expect_vertex = true;
        loop {
            if expect_vertex {
                expect_vertex = false;
                match read_label(&mut i)? {
                    Some(label) => {
                        let idx = match (&mut tree, open.last()) {
                            (None, _) => {
                                tree = Some(LabeledTree::new(label));
                                0
                            }
                            (Some(t), Some(&(parent, side))) => t.add_child(parent, label, side)?,
                            (Some(_), None) => return Err(err(i, "second root")),
                        };
                        if i < bytes.len() && bytes[i] == b'(' {
                            i += 1;
                            open.push((idx, Side::Left));
                            expect_vertex = true;
                        }
                    }
                    None if open.is_empty() => return Err(err(i, "expected a label")),
                    None => {}
                }
                continue;
            }
            match open.last_mut() {
                None if i == bytes.len() => break,
                None => return Err(err(i, "trailing input")),
                Some((_, side @ Side::Left)) if bytes.get(i) == Some(&b',') => {
                    i += 1;
                    *side = Side::Right;
                    expect_vertex = true;
                }
                Some((parent, Side::Right)) if bytes.get(i) == Some(&b')') => {
                    let parent = *parent;
                    i += 1;
                    open.pop();
                    let t = tree.as_ref().expect("parent exists");
                    if t.nodes[parent].slots.is_leaf() {
                        return Err(err(i, "empty child list"));
                    }
                }
                Some(_) => return Err(err(i, "unexpected character")),
            }
        }
        tree.ok_or_else(|| err(0, "empty input"))
    }
}

/// Rearranges the slots of a labeled tree into canonical form: the larger of
/// two children on the left, an only child on the right.
///
/// Fails when the labels are not exactly `{0..n}` with root `0`, or some
/// edge is not increasing.
pub fn canonicalize(raw: &LabeledTree) -> Result<IncreasingTree> {
    let n1 = raw.nodes.len();
    let mut index_of = vec![None; n1];
    for (idx, node) in raw.nodes.iter().enumerate() {
        let label = node
            .label
            .ok_or_else(|| Error::InvalidTree("increasing trees need numeric labels".into()))?;
        if label >= n1 {
            return Err(Error::InvalidTree(format!(
                "label {label} outside 0..={}",
                n1 - 1
            )));
        }
        if index_of[label].replace(idx).is_some() {
            return Err(Error::InvalidTree(format!("label {label} repeated")));
        }
    }
    let label = |idx: usize| raw.nodes[idx].label.expect("checked above");
    if label(0) != 0 {
        return Err(Error::InvalidTree("root must be labeled 0".into()));
    }
    let mut slots = vec![Slots::default(); n1];
    for (idx, node) in raw.nodes.iter().enumerate() {
        let me = label(idx);
        let mut kids: Vec<usize> = [node.slots.left, node.slots.right]
            .into_iter()
            .flatten()
            .map(label)
            .collect();
        if let Some(&bad) = kids.iter().find(|&&k| k <= me) {
            return Err(Error::InvalidTree(format!("edge {me}-{bad} is not increasing")));
        }
        kids.sort_unstable();
        slots[me] = match kids.as_slice() {
            [] => Slots::default(),
            [only] => Slots {
                left: None,
                right: Some(*only),
            },
            [small, large] => Slots {
                left: Some(*large),
                right: Some(*small),
            },
            _ => unreachable!("two slots at most"),
        };
    }
    Ok(IncreasingTree::from_slots(slots))
}

/// An increasing 1-2 tree on `{0..n}` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncreasingTree {
    slots: Vec<Slots>,
    parent: Vec<Option<usize>>,
}

impl IncreasingTree {
    /// The tree with only the root `0`.
    pub fn root_only() -> Self {
        IncreasingTree {
            slots: vec![Slots::default()],
            parent: vec![None],
        }
    }

    /// The path `0 → 1 → … → n`.
    pub fn path(n: usize) -> Self {
        let mut t = IncreasingTree::root_only();
        for v in 1..=n {
            t.attach(v - 1).expect("path vertex has a free slot");
        }
        t
    }

    pub(crate) fn from_slots(slots: Vec<Slots>) -> Self {
        let mut parent = vec![None; slots.len()];
        for (v, s) in slots.iter().enumerate() {
            for c in [s.left, s.right].into_iter().flatten() {
                parent[c] = Some(v);
            }
        }
        IncreasingTree { slots, parent }
    }

    /// Largest label `n`; the tree has `n + 1` vertices.
    pub fn n(&self) -> usize {
        self.slots.len() - 1
    }

    pub fn slots(&self, v: usize) -> Slots {
        self.slots[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.slots[v].is_leaf()
    }

    /// True when `v` is the left child of a two-child vertex.
    pub fn is_left_child(&self, v: usize) -> bool {
        self.parent[v].is_some_and(|p| self.slots[p].left == Some(v))
    }

    /// Childless vertices in increasing order.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.slots.len()).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Inorder word of the subtree `τ(v)`.
    pub fn inorder(&self, v: usize) -> Vec<usize> {
        inorder(&self.slots, v)
    }

    pub fn preorder(&self) -> Vec<usize> {
        preorder(&self.slots, 0)
    }

    pub fn rtl_preorder(&self) -> Vec<usize> {
        rtl_preorder(&self.slots, 0)
    }

    /// Vertices of `τ(v)`.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        preorder(&self.slots, v)
    }

    /// Path from the root to the last vertex in depth-first-search order.
    pub fn rightmost_path(&self) -> Vec<usize> {
        let mut path = vec![0];
        let mut v = 0;
        while let Some(next) = self.slots[v].right.or(self.slots[v].left) {
            path.push(next);
            v = next;
        }
        path
    }

    /// The last vertex in depth-first-search order.
    pub fn last_vertex(&self) -> usize {
        *self.rightmost_path().last().expect("path holds the root")
    }

    /// True when right-to-left preorder reads `0, 1, …, n`.
    pub fn is_rtl_increasing(&self) -> bool {
        self.rtl_preorder().into_iter().enumerate().all(|(i, v)| i == v)
    }

    /// Forgets the labels.
    pub fn shape(&self) -> OrderedTree {
        OrderedTree::from_arena(&self.slots, 0)
    }

    /// Adds vertex `n + 1` as a child of `parent`. The new vertex is the
    /// largest label, so canonical form puts it right when the parent had no
    /// child and left otherwise.
    pub(crate) fn attach(&mut self, parent: usize) -> Result<usize> {
        let v = self.slots.len();
        let s = &mut self.slots[parent];
        if s.right.is_none() {
            debug_assert!(s.left.is_none());
            s.right = Some(v);
        } else if s.left.is_none() {
            s.left = Some(v);
        } else {
            return Err(Error::InvalidTree(format!(
                "vertex {parent} already has two children"
            )));
        }
        self.slots.push(Slots::default());
        self.parent.push(Some(parent));
        Ok(v)
    }

    /// Replaces the children of `v`, keeping parent links in sync.
    pub(crate) fn set_slots(&mut self, v: usize, slots: Slots) {
        for c in [slots.left, slots.right].into_iter().flatten() {
            self.parent[c] = Some(v);
        }
        self.slots[v] = slots;
    }

    /// Checks labels increase along edges and slots are in canonical form.
    pub fn is_canonical(&self) -> bool {
        self.slots.iter().enumerate().all(|(v, s)| match (s.left, s.right) {
            (None, None) => true,
            (None, Some(r)) => r > v,
            (Some(_), None) => false,
            (Some(l), Some(r)) => l > r && r > v,
        })
    }
}

impl fmt::Display for IncreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tree(f, &self.slots, 0, |v| v.to_string())
    }
}

impl fmt::Debug for IncreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncreasingTree[{self}]")
    }
}

/// Strict parse: the text must already be in canonical form.
impl FromStr for IncreasingTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw: LabeledTree = s.parse()?;
        let tree = canonicalize(&raw)?;
        let as_written = raw.slots();
        let relabeled: Vec<Slots> = {
            let label = |i: usize| raw.nodes[i].label.expect("checked by canonicalize");
            let mut out = vec![Slots::default(); as_written.len()];
            for (i, s) in as_written.iter().enumerate() {
                out[label(i)] = Slots {
                    left: s.left.map(label),
                    right: s.right.map(label),
                };
            }
            out
        };
        if relabeled != tree.slots {
            return Err(Error::InvalidTree(format!(
                "{s:?} is not in canonical form (expected {tree})"
            )));
        }
        Ok(tree)
    }
}

/// An unlabeled ordered 1-2 tree. A lone child has no side; it is kept in
/// the right slot.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTree {
    slots: Vec<Slots>,
}

impl OrderedTree {
    pub fn single_vertex() -> Self {
        OrderedTree {
            slots: vec![Slots::default()],
        }
    }

    /// Copies the shape of `τ(root)` out of an arena, renumbering vertices
    /// in right-to-left preorder and moving lone children to the right slot.
    pub(crate) fn from_arena(arena: &[Slots], root: usize) -> Self {
        let order = rtl_preorder(arena, root);
        let mut rank = vec![usize::MAX; arena.len()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let slots = order
            .iter()
            .map(|&v| {
                let s = arena[v];
                match (s.left, s.right) {
                    (Some(l), Some(r)) => Slots {
                        left: Some(rank[l]),
                        right: Some(rank[r]),
                    },
                    (Some(c), None) | (None, Some(c)) => Slots {
                        left: None,
                        right: Some(rank[c]),
                    },
                    (None, None) => Slots::default(),
                }
            })
            .collect();
        OrderedTree { slots }
    }

    /// Number of edges; the tree has `n + 1` vertices.
    pub fn n(&self) -> usize {
        self.slots.len() - 1
    }

    /// Children of vertex `v`, where vertices are numbered in right-to-left
    /// preorder.
    pub fn slots(&self, v: usize) -> Slots {
        self.slots[v]
    }

    pub(crate) fn arena(&self) -> &[Slots] {
        &self.slots
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.slots.len()).filter(|&v| self.slots[v].is_leaf()).collect()
    }

    /// Vertex positions in inorder.
    pub fn inorder(&self) -> Vec<usize> {
        inorder(&self.slots, 0)
    }

    /// Root followed by left children until a vertex has no left child.
    pub fn leftmost_path(&self) -> Vec<usize> {
        let mut path = vec![0];
        let mut v = 0;
        while let Some(l) = self.slots[v].left {
            path.push(l);
            v = l;
        }
        path
    }

    /// Labels the vertices `0..n` in right-to-left preorder.
    pub fn rtl_preorder_label(&self) -> IncreasingTree {
        // Vertices are already numbered in that order.
        IncreasingTree::from_slots(self.slots.clone())
    }

    /// Root with a single chain of `n` edges.
    pub fn chain(n: usize) -> Self {
        let slots = (0..=n)
            .map(|v| Slots {
                left: None,
                right: (v < n).then_some(v + 1),
            })
            .collect();
        OrderedTree { slots }
    }

    fn unary(child: &OrderedTree) -> Self {
        let mut slots = Vec::with_capacity(child.slots.len() + 1);
        slots.push(Slots {
            left: None,
            right: Some(1),
        });
        slots.extend(child.slots.iter().map(|s| shift(*s, 1)));
        OrderedTree { slots }
    }

    fn binary(left: &OrderedTree, right: &OrderedTree) -> Self {
        let left_root = 1 + right.slots.len();
        let mut slots = Vec::with_capacity(left_root + left.slots.len());
        slots.push(Slots {
            left: Some(left_root),
            right: Some(1),
        });
        slots.extend(right.slots.iter().map(|s| shift(*s, 1)));
        slots.extend(left.slots.iter().map(|s| shift(*s, left_root)));
        OrderedTree { slots }
    }
}

fn shift(s: Slots, by: usize) -> Slots {
    Slots {
        left: s.left.map(|v| v + by),
        right: s.right.map(|v| v + by),
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tree(f, &self.slots, 0, |_| "*".to_string())
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedTree[{self}]")
    }
}

/// Accepts `*` or numeric labels; labels are discarded.
impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw: LabeledTree = s.parse()?;
        Ok(OrderedTree::from_arena(&raw.slots(), 0))
    }
}

/// Every canonical increasing 1-2 tree on `{0..n}`.
///
/// Built by attaching vertex `k` to each vertex of each tree on `{0..k-1}`
/// that still has a free slot, parents taken in increasing order.
pub fn enumerate_increasing_trees(n: usize) -> Vec<IncreasingTree> {
    let mut level = vec![IncreasingTree::root_only()];
    for _ in 1..=n {
        let mut next = Vec::new();
        for t in &level {
            for p in 0..t.slots.len() {
                if t.slots[p].degree() < 2 {
                    let mut grown = t.clone();
                    grown.attach(p).expect("free slot");
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

/// Every ordered 1-2 tree with `n + 1` vertices.
///
/// Order: the single-child tree first, then two-child roots with the right
/// subtree size ascending; smaller sizes are generated recursively in the
/// same order.
pub fn enumerate_ordered_trees(n: usize) -> Vec<OrderedTree> {
    let mut by_size: Vec<Vec<OrderedTree>> = vec![vec![OrderedTree::single_vertex()]];
    for m in 1..=n {
        let mut trees: Vec<OrderedTree> = by_size[m - 1].iter().map(OrderedTree::unary).collect();
        for right_size in 0..m.saturating_sub(1) {
            let left_size = m - 2 - right_size;
            for r in &by_size[right_size] {
                for l in &by_size[left_size] {
                    trees.push(OrderedTree::binary(l, r));
                }
            }
        }
        by_size.push(trees);
    }
    by_size.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn t(s: &str) -> IncreasingTree {
        s.parse().unwrap()
    }

    #[test]
    fn serialization_round_trip() {
        for s in ["0", "0(,1(3,2))", "0(3(,4(8,6)),1(5(9,7),2))", "0(3(5,4),1(6(8,7),2))"] {
            assert_eq!(t(s).to_string(), s);
        }
        let x: OrderedTree = "*(*(*,),*)".parse().unwrap();
        assert_eq!(x.to_string(), "*(*(,*),*)");
    }

    #[test]
    fn parse_rejects_malformed_text() {
        for bad in ["", "0(", "0()", "0(,)", "0(1,2", "0(1,2)x", "(1,2)", "0(1,2,3)", "0 1"] {
            assert!(bad.parse::<LabeledTree>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn strict_parse_rejects_non_canonical() {
        assert!("0(1,)".parse::<IncreasingTree>().is_err());
        assert!("0(1,2)".parse::<IncreasingTree>().is_err());
        assert!("0(,2)".parse::<IncreasingTree>().is_err());
        assert!("1(,0)".parse::<IncreasingTree>().is_err());
        assert!("0(,1(,1))".parse::<IncreasingTree>().is_err());
    }

    #[test]
    fn canonicalize_moves_slots() {
        let raw: LabeledTree = "0(1(2(3,),),)".parse().unwrap();
        assert_eq!(canonicalize(&raw).unwrap().to_string(), "0(,1(,2(,3)))");
        let raw: LabeledTree = "0(1(,2),3)".parse().unwrap();
        let c = canonicalize(&raw).unwrap();
        assert_eq!(c.to_string(), "0(3,1(,2))");
        assert_eq!(c.slots(0).left, Some(3));
        let again = canonicalize(&c.to_string().parse().unwrap()).unwrap();
        assert_eq!(again, c);
        assert!(canonicalize(&"0(2(,1),)".parse().unwrap()).is_err());
        assert!(canonicalize(&"*(,*)".parse().unwrap()).is_err());
    }

    #[test]
    fn inorder_examples() {
        let nine = t("0(3(,4(8,6)),1(5(9,7),2))");
        assert_eq!(nine.inorder(3), vec![3, 8, 4, 6]);
        assert_eq!(IncreasingTree::root_only().inorder(0), vec![0]);
        assert_eq!(IncreasingTree::path(2).inorder(0), vec![0, 1, 2]);
    }

    #[test]
    fn leaves_examples() {
        assert_eq!(IncreasingTree::root_only().leaves(), vec![0]);
        assert_eq!(IncreasingTree::path(6).leaves(), vec![6]);
        assert_eq!(t("0(3(,4(8,6)),1(5(9,7),2))").leaves(), vec![2, 6, 7, 8, 9]);
    }

    #[test]
    fn rightmost_path_examples() {
        assert_eq!(IncreasingTree::path(3).rightmost_path(), vec![0, 1, 2, 3]);
        assert_eq!(IncreasingTree::root_only().rightmost_path(), vec![0]);
        // Sixth stage while inverting 5 3 4 1 8 6 7 2.
        let t6 = t("0(3(5,4),1(6,2))");
        let path = t6.rightmost_path();
        assert_eq!(path, vec![0, 1, 2]);
        assert!(!path.contains(&6));
    }

    #[test]
    fn leftmost_path_examples() {
        let x: OrderedTree = "*(,*(*,*))".parse().unwrap();
        assert_eq!(x.leftmost_path(), vec![0]);
        let left_chain: OrderedTree = "*(*(*(*,*),*),*)".parse().unwrap();
        assert_eq!(left_chain.leftmost_path().len(), 4);
    }

    #[test]
    fn rtl_labeling() {
        assert_eq!(OrderedTree::single_vertex().rtl_preorder_label(), IncreasingTree::root_only());
        assert_eq!(OrderedTree::chain(4).rtl_preorder_label(), IncreasingTree::path(4));
        let x: OrderedTree = "*(*(,*),*(*,*))".parse().unwrap();
        let labeled = x.rtl_preorder_label();
        assert_eq!(labeled.to_string(), "0(4(,5),1(3,2))");
        assert!(labeled.is_canonical());
        assert!(labeled.is_rtl_increasing());
    }

    #[test]
    fn small_tree_examples() {
        let all = enumerate_increasing_trees(3);
        assert_eq!(all.len(), 5);
        let rtl: HashSet<String> = all
            .iter()
            .filter(|t| t.is_rtl_increasing())
            .map(|t| t.to_string())
            .collect();
        let expected: HashSet<String> = ["0(,1(,2(,3)))", "0(3,1(,2))", "0(2(,3),1)", "0(,1(3,2))"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(rtl, expected);
        let not: Vec<_> = all.iter().filter(|t| !t.is_rtl_increasing()).collect();
        assert_eq!(not.len(), 1);
        assert_eq!(not[0].to_string(), "0(2,1(,3))");
        let from_shapes: HashSet<String> = enumerate_ordered_trees(3)
            .iter()
            .map(|x| x.rtl_preorder_label().to_string())
            .collect();
        assert_eq!(from_shapes, expected);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_increasing_trees(0).len(), 1);
        assert_eq!(enumerate_increasing_trees(8).len(), 7936);
        assert_eq!(enumerate_ordered_trees(0).len(), 1);
        assert_eq!(enumerate_ordered_trees(3).len(), 4);
        assert_eq!(enumerate_ordered_trees(10).len(), 2188);
    }

    #[test]
    fn generated_trees_are_canonical_and_distinct() {
        for n in 0..=7 {
            let all = enumerate_increasing_trees(n);
            assert!(all.iter().all(IncreasingTree::is_canonical));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            let shapes = enumerate_ordered_trees(n);
            let distinct: HashSet<_> = shapes.iter().collect();
            assert_eq!(distinct.len(), shapes.len());
        }
    }

    #[test]
    fn labeling_then_erasure_is_identity() {
        for n in 0..=10 {
            for x in enumerate_ordered_trees(n) {
                assert_eq!(x.rtl_preorder_label().shape(), x);
            }
        }
    }

    #[test]
    fn rtl_increasing_trees_are_labeled_shapes() {
        for n in 0..=8 {
            let mut a: Vec<IncreasingTree> = enumerate_increasing_trees(n)
                .into_iter()
                .filter(IncreasingTree::is_rtl_increasing)
                .collect();
            let mut b: Vec<IncreasingTree> = enumerate_ordered_trees(n)
                .iter()
                .map(OrderedTree::rtl_preorder_label)
                .collect();
            a.sort_by_key(|t| t.to_string());
            b.sort_by_key(|t| t.to_string());
            assert_eq!(a, b, "n = {n}");
        }
    }
}
