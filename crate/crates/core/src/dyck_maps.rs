//! The two Dyck-path encodings of unit interval posets and the zeta map.

use crate::dyck::{area_vector, DyckPath, Step};
use crate::error::{Error, Result};
use crate::poset::{
    canonicalize_unchecked, poset_from_starting_set, Relation, StartingSet, UnitIntervalPoset,
};
use crate::rational::{one, ExactRational};
use crate::tree_maps::{lambda_bounce, lambda_poset, lambda_steep, xi_bounce, xi_poset, xi_steep};

/// Order-theoretic form of the merge construction: before the `k`-th east
/// step (the point `x_k + 1`) come exactly the starting points not above
/// element `k`, i.e. `n - |up(k)|` of them.
pub fn phi(poset: &UnitIntervalPoset) -> DyckPath {
    let n = poset.size();
    let mut steps = Vec::with_capacity(2 * n);
    let mut north = 0;
    for up in poset.up_sizes() {
        while north < n - up {
            steps.push(Step::North);
            north += 1;
        }
        steps.push(Step::East);
    }
    DyckPath::new_unchecked(steps)
}

/// Inverse of [`phi`], through the trees: `xi_poset . lambda_bounce`.
pub fn phi_inverse(path: &DyckPath) -> UnitIntervalPoset {
    xi_poset(&lambda_bounce(path))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    /// A starting point `x`.
    Start,
    /// A shifted point `x + 1`.
    Shifted,
}

/// The sorted union of `S` and `S + 1`, each point tagged with where it came
/// from. Requires the two sets to be disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedSequence {
    points: Vec<(ExactRational, Origin)>,
}

impl MergedSequence {
    pub fn new(set: &StartingSet) -> Result<Self> {
        let xs = set.points();
        let shifted: Vec<ExactRational> = xs.iter().map(|x| x + one()).collect();
        let mut points = Vec::with_capacity(2 * xs.len());
        let (mut i, mut j) = (0, 0);
        while i < xs.len() || j < shifted.len() {
            if i < xs.len() && j < shifted.len() && xs[i] == shifted[j] {
                return Err(Error::ShiftCollision { i: j + 1, j: i + 1 });
            }
            if j == shifted.len() || (i < xs.len() && xs[i] < shifted[j]) {
                points.push((xs[i].clone(), Origin::Start));
                i += 1;
            } else {
                points.push((shifted[j].clone(), Origin::Shifted));
                j += 1;
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[(ExactRational, Origin)] {
        &self.points
    }

    /// `N` for each starting point, `E` for each shifted point.
    pub fn to_path(&self) -> DyckPath {
        let steps = self
            .points
            .iter()
            .map(|(_, origin)| match origin {
                Origin::Start => Step::North,
                Origin::Shifted => Step::East,
            })
            .collect();
        DyckPath::new_unchecked(steps)
    }
}

/// The merge construction applied to an explicit realization `set` of
/// `poset`.
pub fn phi_via_merge(poset: &UnitIntervalPoset, set: &StartingSet) -> Result<DyckPath> {
    if &poset_from_starting_set(set) != poset {
        return Err(Error::StartingSetMismatch);
    }
    Ok(MergedSequence::new(set)?.to_path())
}

/// The raw relation on row indices of the area vector `(a_1, ..., a_n)`:
/// `i < j` iff `a_i + 2 <= a_j`, or `a_i + 1 = a_j` and `i < j`.
pub fn psi_relation(path: &DyckPath) -> Relation {
    let area = area_vector(path);
    let a = area.entries();
    Relation::from_fn(a.len(), |i, j| {
        a[i] + 2 <= a[j] || (a[i] + 1 == a[j] && i < j)
    })
}

/// [`psi_relation`] brought to canonical labeling.
pub fn psi(path: &DyckPath) -> UnitIntervalPoset {
    canonicalize_unchecked(&psi_relation(path))
}

/// `xi_steep . lambda_poset`.
pub fn psi_inverse(poset: &UnitIntervalPoset) -> DyckPath {
    xi_steep(&lambda_poset(poset))
}

/// `xi_bounce . lambda_steep`.
pub fn zeta(path: &DyckPath) -> DyckPath {
    xi_bounce(&lambda_steep(path))
}

/// Direction in which each pass reads the area vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scan {
    LeftToRight,
    RightToLeft,
}

/// A variant of the classical diagonal-scan description of zeta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZetaConvention {
    pub scan: Scan,
    /// Apply [`DyckPath::reversed`] to the result.
    pub reverse: bool,
}

impl ZetaConvention {
    pub const ALL: [ZetaConvention; 4] = [
        ZetaConvention {
            scan: Scan::LeftToRight,
            reverse: false,
        },
        ZetaConvention {
            scan: Scan::LeftToRight,
            reverse: true,
        },
        ZetaConvention {
            scan: Scan::RightToLeft,
            reverse: false,
        },
        ZetaConvention {
            scan: Scan::RightToLeft,
            reverse: true,
        },
    ];

    /// The convention that agrees with [`zeta`]: passes `k = 0, 1, ...`
    /// scan the area vector left to right, writing `N` for each `a_i = k` and
    /// `E` for each `a_i = k - 1`. Confirmed by [`calibrate_zeta_convention`].
    pub const FROZEN: ZetaConvention = ZetaConvention {
        scan: Scan::LeftToRight,
        reverse: false,
    };
}

/// The diagonal-scan construction under `convention`. `None` when the word
/// produced is not a Dyck path.
pub fn zeta_classical(path: &DyckPath, convention: ZetaConvention) -> Option<DyckPath> {
    let area = area_vector(path);
    let a = area.entries();
    let top = a.iter().copied().max();
    let mut steps = Vec::with_capacity(2 * a.len());
    if let Some(top) = top {
        for k in 0..=top + 1 {
            let mut pass = |x: usize| {
                if x == k {
                    steps.push(Step::North);
                } else if x + 1 == k {
                    steps.push(Step::East);
                }
            };
            match convention.scan {
                Scan::LeftToRight => a.iter().copied().for_each(&mut pass),
                Scan::RightToLeft => a.iter().rev().copied().for_each(&mut pass),
            }
        }
    }
    let result = DyckPath::new(steps).ok()?;
    Some(if convention.reverse {
        result.reversed()
    } else {
        result
    })
}

/// The independent zeta oracle under [`ZetaConvention::FROZEN`].
pub fn zeta_classical_oracle(path: &DyckPath) -> DyckPath {
    zeta_classical(path, ZetaConvention::FROZEN)
        .expect("left-to-right scan always yields a Dyck path")
}

/// The first convention in [`ZetaConvention::ALL`] agreeing with [`zeta`] on
/// every path in `paths`.
pub fn calibrate_zeta_convention<'a>(
    paths: impl IntoIterator<Item = &'a DyckPath> + Clone,
) -> Option<ZetaConvention> {
    ZetaConvention::ALL.into_iter().find(|&conv| {
        paths
            .clone()
            .into_iter()
            .all(|p| zeta_classical(p, conv).as_ref() == Some(&zeta(p)))
    })
}
