use crate::dyck::{DyckPath, Step};
use crate::poset::UnitIntervalPoset;
use crate::tree::PlaneTree;
use crate::tree_maps::{lambda_steep, xi_poset};

/// All Dyck paths of size `n` in lexicographic order of their `N`/`E` words
/// (`E < N`), generated one at a time.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    n: usize,
    current: Option<Vec<Step>>,
}

impl DyckPaths {
    pub fn new(n: usize) -> Self {
        let mut first = Vec::with_capacity(2 * n);
        complete_smallest(&mut first, n);
        Self {
            n,
            current: Some(first),
        }
    }
}

/// Extend a valid prefix with the lexicographically smallest completion:
/// east whenever the path is above the diagonal, north otherwise.
fn complete_smallest(steps: &mut Vec<Step>, n: usize) {
    let north = steps.iter().filter(|&&s| s == Step::North).count();
    let mut height = 2 * north - steps.len();
    let mut remaining_north = n - north;
    while steps.len() < 2 * n {
        if height > 0 {
            steps.push(Step::East);
            height -= 1;
        } else {
            steps.push(Step::North);
            height += 1;
            remaining_north -= 1;
        }
    }
    debug_assert_eq!(remaining_north, 0);
}

/// Successor in lexicographic order: raise the rightmost `E` that can become
/// an `N`, then complete as small as possible.
fn advance(steps: &mut Vec<Step>, n: usize) -> bool {
    let mut north_before: Vec<usize> = Vec::with_capacity(steps.len());
    let mut count = 0;
    for s in steps.iter() {
        north_before.push(count);
        if *s == Step::North {
            count += 1;
        }
    }
    let Some(i) = (0..steps.len())
        .rev()
        .find(|&i| steps[i] == Step::East && north_before[i] < n)
    else {
        return false;
    };
    steps.truncate(i);
    steps.push(Step::North);
    complete_smallest(steps, n);
    true
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.current.as_mut()?;
        let out = DyckPath::new_unchecked(steps.clone());
        if !advance(steps, self.n) {
            self.current = None;
        }
        Some(out)
    }
}

pub fn enumerate_dyck(n: usize) -> DyckPaths {
    DyckPaths::new(n)
}

pub fn enumerate_trees(n: usize) -> impl Iterator<Item = PlaneTree> {
    enumerate_dyck(n).map(|d| lambda_steep(&d))
}

pub fn enumerate_posets(n: usize) -> impl Iterator<Item = UnitIntervalPoset> {
    enumerate_trees(n).map(|t| xi_poset(&t))
}
