//! Bijections between plane trees and unit interval posets, and between plane
//! trees and Dyck paths.
//!
//! Two node orders matter here and are easy to confuse:
//!
//! * the *clockwise* contour walk visits children right to left, and drives
//!   [`xi_steep`] / [`lambda_steep`];
//! * the *breadth* order lists nodes by increasing depth and, within a depth,
//!   right to left. It drives [`xi_bounce`] / [`lambda_bounce`], and it is
//!   also the increasing order of the node values from [`node_values`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dyck::{DyckPath, Step};
use crate::poset::{poset_from_starting_set, StartingSet, UnitIntervalPoset};
use crate::rational::{one, ExactRational};
use crate::tree::{NodeId, PlaneTree, ROOT};

/// Node `v_i` hangs below `v_j` for the largest `j` with `j < i` in the order,
/// or below the root when `i` is minimal. Siblings are placed left to right
/// by decreasing index.
pub fn lambda_poset(poset: &UnitIntervalPoset) -> PlaneTree {
    let n = poset.size();
    // Arena node i + 1 is element i.
    let mut children = vec![Vec::new(); n + 1];
    for i in (0..n).rev() {
        let parent = (0..i)
            .rev()
            .find(|&j| poset.lt(j, i))
            .map_or(ROOT, |j| j + 1);
        children[parent].push(i + 1);
    }
    PlaneTree::from_children(&children, ROOT)
}

/// The value `x_u = d(u) + sum_i c(u_i) (m+2)^(-i)` of every node, indexed by
/// [`NodeId`], where `u_1, ..., u_d(u) = u` is the path below the root, `c` is
/// the right-to-left sibling index and `m` the maximal arity. The root gets 0.
pub fn node_values(tree: &PlaneTree) -> Vec<ExactRational> {
    let base = BigInt::from(tree.max_arity() + 2);
    let mut scale = vec![BigInt::one()];
    for d in 1..=tree.max_depth() {
        let next = &scale[d - 1] * &base;
        scale.push(next);
    }
    // Fractional digits of each node read as an integer in base m + 2.
    let mut digits = vec![BigInt::zero(); tree.node_count()];
    let mut values = vec![ExactRational::zero(); tree.node_count()];
    // Preorder ids: parents precede children.
    for u in 1..tree.node_count() {
        let parent = tree.parent(u).expect("non-root node");
        let c = tree.right_index(u).expect("non-root node");
        digits[u] = &digits[parent] * &base + BigInt::from(c);
        let d = tree.depth(u);
        let numer = BigInt::from(d) * &scale[d] + &digits[u];
        values[u] = ExactRational::new(numer, scale[d].clone());
    }
    values
}

pub fn starting_set_of_tree(tree: &PlaneTree) -> StartingSet {
    let values = node_values(tree);
    StartingSet::from_unsorted(values[1..].to_vec()).expect("node values are pairwise distinct")
}

pub fn xi_poset(tree: &PlaneTree) -> UnitIntervalPoset {
    poset_from_starting_set(&starting_set_of_tree(tree))
}

/// For every non-root node `u`, its parent is the node whose value is the
/// largest one below `x_u - 1`, and `u` hangs off the root exactly when no
/// value lies below `x_u - 1`.
pub fn check_parent_condition(tree: &PlaneTree) -> bool {
    check_parent_condition_with(tree, &node_values(tree))
}

pub(crate) fn check_parent_condition_with(tree: &PlaneTree, values: &[ExactRational]) -> bool {
    let mut sorted: Vec<(&ExactRational, NodeId)> = values.iter().zip(0..).skip(1).collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0].0 == w[1].0) {
        return false;
    }
    (1..tree.node_count()).all(|u| {
        let limit = &values[u] - one();
        let below = sorted.partition_point(|(x, _)| **x < limit);
        let found = below.checked_sub(1).map(|k| sorted[k].1);
        match tree.parent(u) {
            Some(ROOT) => found.is_none(),
            parent => found == parent,
        }
    })
}

/// `1 < x_u - x_p < 1 + (m+2)^(1-l)` for every non-root node `u` with parent
/// `p` at depth `l` (the root counts with value 0 at depth 0).
pub fn check_parent_gap_bound(tree: &PlaneTree) -> bool {
    check_parent_gap_bound_with(tree, &node_values(tree))
}

pub(crate) fn check_parent_gap_bound_with(tree: &PlaneTree, values: &[ExactRational]) -> bool {
    let base = BigInt::from(tree.max_arity() + 2);
    (1..tree.node_count()).all(|u| {
        let p = tree.parent(u).expect("non-root node");
        let l = tree.depth(p);
        // (m+2)^(1-l), with l >= 0.
        let slack = if l == 0 {
            ExactRational::from_integer(base.clone())
        } else {
            ExactRational::new(BigInt::one(), num_traits::pow(base.clone(), l - 1))
        };
        let gap = &values[u] - &values[p];
        gap > one() && gap < one() + slack
    })
}

/// Clockwise contour walk from the top of the root: `N` the first time an
/// edge is passed, `E` the second time.
pub fn xi_steep(tree: &PlaneTree) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * tree.size());
    // (node, number of its children still to visit); children are taken from
    // the right end.
    let mut stack = vec![(ROOT, tree.arity(ROOT))];
    while let Some(top) = stack.last_mut() {
        let (u, remaining) = *top;
        if remaining == 0 {
            stack.pop();
            if u != ROOT {
                steps.push(Step::East);
            }
            continue;
        }
        top.1 -= 1;
        let child = tree.children(u)[remaining - 1];
        steps.push(Step::North);
        stack.push((child, tree.arity(child)));
    }
    DyckPath::new_unchecked(steps)
}

/// Inverse of [`xi_steep`]. Each north step opens a child to the left of the
/// children already opened at the current node.
pub fn lambda_steep(path: &DyckPath) -> PlaneTree {
    // Children are collected right to left and flipped at the end.
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut stack = vec![ROOT];
    for step in path.steps() {
        match step {
            Step::North => {
                let id = children.len();
                children.push(Vec::new());
                let parent = *stack.last().expect("path stays above the diagonal");
                children[parent].push(id);
                stack.push(id);
            }
            Step::East => {
                stack.pop();
            }
        }
    }
    for list in &mut children {
        list.reverse();
    }
    PlaneTree::from_children(&children, ROOT)
}

/// Position of breadth-order index `k` within its depth: `k = s_l - r` with
/// `s_l = alpha_1 + ... + alpha_l` and `0 <= r < alpha_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BreadthOrderIndex {
    pub depth: usize,
    pub rank: usize,
}

impl BreadthOrderIndex {
    /// `level_counts[l]` is `alpha_l` (entry 0, the root, is ignored).
    /// `None` unless `1 <= k <= s_max`.
    pub fn decompose(k: usize, level_counts: &[usize]) -> Option<Self> {
        let mut cumulative = 0;
        for (depth, &alpha) in level_counts.iter().enumerate().skip(1) {
            cumulative += alpha;
            if k >= 1 && k <= cumulative {
                return Some(Self {
                    depth,
                    rank: cumulative - k,
                });
            }
        }
        None
    }
}

/// North steps on `x = 0` count the root's children; on `x = k` with
/// `k = s_l - r` they count the children of the `(r+1)`-st node of depth `l`
/// from the left. Equivalently, the `k`-th run is the arity of the `k`-th node
/// in breadth order (increasing depth, right to left).
pub fn xi_bounce(tree: &PlaneTree) -> DyckPath {
    let n = tree.size();
    let mut by_depth: Vec<Vec<NodeId>> = vec![Vec::new(); tree.max_depth() + 1];
    // Preorder meets the nodes of one depth from left to right.
    for u in 0..tree.node_count() {
        by_depth[tree.depth(u)].push(u);
    }
    let counts: Vec<usize> = by_depth.iter().map(Vec::len).collect();
    let mut runs = Vec::with_capacity(n);
    if n > 0 {
        runs.push(tree.arity(ROOT));
    }
    for k in 1..n {
        let index = BreadthOrderIndex::decompose(k, &counts).expect("1 <= k < n");
        runs.push(tree.arity(by_depth[index.depth][index.rank]));
    }
    DyckPath::from_north_runs(&runs).expect("arities in breadth order form a Dyck path")
}

/// Inverse of [`xi_bounce`]: the north runs are the arities of the nodes in
/// breadth order, so nodes are created level by level, each node's children
/// numbered right to left.
pub fn lambda_bounce(path: &DyckPath) -> PlaneTree {
    let runs = path.north_runs();
    let total = path.size() + 1;
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut next = 1;
    for (k, &run) in runs.iter().enumerate() {
        assert!(k < next, "run {k} belongs to a node that was never created");
        // next .. next + run, right to left.
        children[k] = (next..next + run).rev().collect();
        next += run;
    }
    assert_eq!(next, total, "run lengths do not sum to the path size");
    PlaneTree::from_children(&children, ROOT)
}
