//! Plane (rooted, ordered) trees.
//!
//! Nodes live in an arena numbered in left-to-right preorder, root = 0, so
//! two trees are equal exactly when their shapes are equal.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type NodeId = usize;

pub const ROOT: NodeId = 0;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    /// Children of each node, left to right.
    children: Vec<Vec<NodeId>>,
    parent: Vec<Option<NodeId>>,
    depth: Vec<usize>,
}

impl PlaneTree {
    /// The tree with only a root.
    pub fn root_only() -> Self {
        Self {
            children: vec![Vec::new()],
            parent: vec![None],
            depth: vec![0],
        }
    }

    /// Build from an arbitrary arena (`children[u]` left to right) rooted at
    /// `root`. Nodes are renumbered in preorder; nodes unreachable from `root`
    /// are dropped.
    pub fn from_children(children: &[Vec<usize>], root: usize) -> Self {
        let mut tree = Self {
            children: Vec::with_capacity(children.len()),
            parent: Vec::with_capacity(children.len()),
            depth: Vec::with_capacity(children.len()),
        };
        // (old id, new parent id)
        let mut stack = vec![(root, None::<NodeId>)];
        while let Some((old, parent)) = stack.pop() {
            let id = tree.children.len();
            tree.children.push(Vec::new());
            tree.parent.push(parent);
            tree.depth.push(parent.map_or(0, |p| tree.depth[p] + 1));
            if let Some(p) = parent {
                tree.children[p].push(id);
            }
            for &child in children[old].iter().rev() {
                stack.push((child, Some(id)));
            }
        }
        tree
    }

    /// Number of non-root nodes.
    pub fn size(&self) -> usize {
        self.children.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, u: NodeId) -> &[NodeId] {
        &self.children[u]
    }

    pub fn parent(&self, u: NodeId) -> Option<NodeId> {
        self.parent[u]
    }

    pub fn depth(&self, u: NodeId) -> usize {
        self.depth[u]
    }

    pub fn arity(&self, u: NodeId) -> usize {
        self.children[u].len()
    }

    /// Position of `u` among its siblings counted from the right, 1-based.
    /// `None` for the root.
    pub fn right_index(&self, u: NodeId) -> Option<usize> {
        let p = self.parent[u]?;
        let siblings = &self.children[p];
        let pos = siblings
            .iter()
            .position(|&v| v == u)
            .expect("child of its parent");
        Some(siblings.len() - pos)
    }

    pub fn max_arity(&self) -> usize {
        self.children.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// `level_counts()[l]` is the number of nodes at depth `l`; entry 0 is the
    /// root.
    pub fn level_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_depth() + 1];
        for &d in &self.depth {
            counts[d] += 1;
        }
        counts
    }

    /// All nodes by increasing depth, then right to left within a depth.
    /// Starts with the root.
    pub fn breadth_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.node_count());
        order.push(ROOT);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            order.extend(self.children[u].iter().rev());
        }
        order
    }

    /// Non-root nodes in the order the clockwise contour walk first reaches
    /// them (children visited right to left).
    pub fn clockwise_preorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.size());
        let mut stack: Vec<NodeId> = self.children[ROOT].clone();
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend(self.children[u].iter().copied());
        }
        order
    }

    /// The mirror image: every child list reversed.
    pub fn mirrored(&self) -> Self {
        let children: Vec<Vec<usize>> = self
            .children
            .iter()
            .map(|c| c.iter().rev().copied().collect())
            .collect();
        Self::from_children(&children, ROOT)
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Preorder numbering makes the node list a left-to-right DFS.
        let mut open: Vec<NodeId> = Vec::new();
        for u in 0..self.node_count() {
            while let Some(&top) = open.last() {
                if Some(top) == self.parent[u] {
                    break;
                }
                open.pop();
                f.write_str(")")?;
            }
            f.write_str("(")?;
            open.push(u);
        }
        for _ in open {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut children: Vec<Vec<usize>> = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        let mut closed_root = false;
        for (position, c) in s.chars().enumerate() {
            if closed_root {
                return Err(Error::TreeTrailing { position });
            }
            match c {
                '(' => {
                    let id = children.len();
                    children.push(Vec::new());
                    if let Some(&p) = open.last() {
                        children[p].push(id);
                    }
                    open.push(id);
                }
                ')' => {
                    open.pop().ok_or(Error::TreeUnbalanced { position })?;
                    closed_root = open.is_empty();
                }
                found => return Err(Error::TreeChar { position, found }),
            }
        }
        if !closed_root {
            return Err(Error::TreeUnbalanced {
                position: s.chars().count(),
            });
        }
        Ok(Self::from_children(&children, ROOT))
    }
}
