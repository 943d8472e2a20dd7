//! `(k+1)`-ary trees and their bijection with `k`-Dyck paths.
//!
//! A nonempty `k`-Dyck path decomposes uniquely as
//! `U w_1 D w_2 D ... w_k D w_{k+1}`; the tree has a root whose `i`-th
//! child is the tree of `w_i`. Size is the number of internal nodes.

use super::{decompose_first, Family, LatticePath, Step};
use crate::error::{Error, Result};

/// One slot of a `(k+1)`-ary tree: empty, or an internal node carrying
/// exactly `k+1` child slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeNode {
    Empty,
    Node(Vec<TreeNode>),
}

impl TreeNode {
    fn size(&self) -> usize {
        match self {
            TreeNode::Empty => 0,
            TreeNode::Node(children) => 1 + children.iter().map(TreeNode::size).sum::<usize>(),
        }
    }

    fn check_arity(&self, arity: usize) -> bool {
        match self {
            TreeNode::Empty => true,
            TreeNode::Node(children) => {
                children.len() == arity && children.iter().all(|c| c.check_arity(arity))
            }
        }
    }
}

/// A rooted tree in which every internal node has exactly `arity` children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KAryTree {
    arity: usize,
    root: TreeNode,
}

impl KAryTree {
    pub fn new(arity: usize, root: TreeNode) -> Result<Self> {
        if arity < 2 {
            return Err(Error::OutOfDomain("tree arity must be at least 2".into()));
        }
        if !root.check_arity(arity) {
            return Err(Error::OutOfDomain(
                "a node does not have exactly arity children".into(),
            ));
        }
        Ok(KAryTree { arity, root })
    }

    pub fn empty(arity: usize) -> Result<Self> {
        Self::new(arity, TreeNode::Empty)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn root(&self) -> &TreeNode {
        &self.root
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        self.root.size()
    }
}

/// Map a `k`-Dyck path to its `(k+1)`-ary tree.
pub fn dyck_to_tree(path: &LatticePath) -> Result<KAryTree> {
    if path.family() != Family::Dyck {
        return Err(Error::WrongFamily {
            expected: "dyck",
            got: path.family().name(),
        });
    }
    let k = path.k();
    KAryTree::new(k as usize + 1, word_to_node(path.steps(), k))
}

fn word_to_node(word: &[Step], k: u32) -> TreeNode {
    if word.is_empty() {
        return TreeNode::Empty;
    }
    let comps = decompose_first(word, k);
    TreeNode::Node(comps.iter().map(|w| word_to_node(w, k)).collect())
}

/// Inverse of [`dyck_to_tree`].
pub fn tree_to_dyck(tree: &KAryTree) -> Result<LatticePath> {
    let k = (tree.arity() - 1) as u32;
    let mut word = Vec::new();
    node_to_word(tree.root(), k, &mut word);
    LatticePath::new(Family::Dyck, k, word)
}

fn node_to_word(node: &TreeNode, k: u32, out: &mut Vec<Step>) {
    let TreeNode::Node(children) = node else {
        return;
    };
    out.push(Step::Up);
    for (i, child) in children.iter().enumerate() {
        node_to_word(child, k, out);
        if i < k as usize {
            out.push(Step::Down);
        }
    }
}

/// One plus the number of internal edges that are the right-most edge of
/// their parent node. Takes values in `1..=size`; the size-0 tree is
/// rejected.
pub fn tree_statistic_nt(tree: &KAryTree) -> Result<u64> {
    if tree.size() == 0 {
        return Err(Error::OutOfDomain(
            "the tree statistic needs at least one node".into(),
        ));
    }
    Ok(1 + rightmost_internal_edges(tree.root()))
}

fn rightmost_internal_edges(node: &TreeNode) -> u64 {
    let TreeNode::Node(children) = node else {
        return 0;
    };
    let mut count = children.iter().map(rightmost_internal_edges).sum();
    if matches!(children.last(), Some(TreeNode::Node(_))) {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enum_paths;

    fn parse(k: u32, w: &str) -> LatticePath {
        LatticePath::parse(Family::Dyck, k, w).unwrap()
    }

    #[test]
    fn figure_tree_decomposition() {
        // UD UD^2UD^2 D UD^2 decomposes as U () D (UD^2UD^2) D (UD^2)
        let t = dyck_to_tree(&parse(2, "UDUDDUDDDUDD")).unwrap();
        assert_eq!(t.size(), 4);
        let TreeNode::Node(children) = t.root() else {
            panic!("nonempty")
        };
        assert_eq!(children[0].size(), 0);
        assert_eq!(children[1].size(), 2);
        assert_eq!(children[2].size(), 1);
        // therefore the path is not prime (third component nonempty)
        assert!(!crate::paths::is_prime(&parse(2, "UDUDDUDDDUDD")).unwrap());
    }

    #[test]
    fn lowest_path_is_a_comb() {
        // (UD^k)^n unfolds into a comb along the (k+1)-th child
        let k = 2;
        let t = dyck_to_tree(&parse(k, "UDDUDDUDD")).unwrap();
        let mut node = t.root();
        let mut depth = 0;
        while let TreeNode::Node(children) = node {
            for child in &children[..k as usize] {
                assert_eq!(child, &TreeNode::Empty);
            }
            node = &children[k as usize];
            depth += 1;
        }
        assert_eq!(depth, 3);
    }

    #[test]
    fn statistic_examples() {
        // size-1 tree has no internal edges
        let t = dyck_to_tree(&parse(2, "UDD")).unwrap();
        assert_eq!(tree_statistic_nt(&t).unwrap(), 1);
        // (UD^2)^2: second factor hangs off the right-most child
        let t = dyck_to_tree(&parse(2, "UDDUDD")).unwrap();
        assert_eq!(tree_statistic_nt(&t).unwrap(), 2);
        // the empty tree is rejected
        let t = dyck_to_tree(&parse(2, "")).unwrap();
        assert!(tree_statistic_nt(&t).is_err());
    }

    #[test]
    fn statistic_range() {
        for (n, k) in [(4usize, 1u32), (4, 2), (3, 3)] {
            for p in enum_paths(Family::Dyck, n, k).unwrap() {
                if p.is_empty() {
                    continue;
                }
                let nt = tree_statistic_nt(&dyck_to_tree(&p).unwrap()).unwrap();
                assert!((1..=n as u64).contains(&nt), "{}", p.word_string());
            }
        }
    }

    #[test]
    fn round_trip_identity() {
        for k in 1..=3u32 {
            for n in 0..=5usize {
                for p in enum_paths(Family::Dyck, n, k).unwrap() {
                    let t = dyck_to_tree(&p).unwrap();
                    assert_eq!(t.size(), n);
                    assert_eq!(tree_to_dyck(&t).unwrap(), p);
                }
            }
        }
    }
}
