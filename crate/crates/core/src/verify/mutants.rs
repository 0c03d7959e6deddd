//! Deliberately wrong conventions, one per law, used to show that each sweep
//! can fail.

use num_bigint::BigInt;

use super::{Law, Maps};
use crate::dyck::{area_vector, DyckPath};
use crate::dyck_maps::{zeta_classical, Scan, ZetaConvention};
use crate::poset::{Relation, UnitIntervalPoset};
use crate::rational::ExactRational;
use crate::tree::{PlaneTree, ROOT};
use crate::tree_maps::{lambda_poset, lambda_steep, node_values, xi_bounce};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutant {
    /// Contour inversion that reads children left to right.
    CounterclockwiseSteep,
    /// Siblings ordered by increasing index.
    IncreasingSiblings,
    /// Breadth order left to right within a depth.
    LeftToRightBounce,
    /// Classical zeta composed with path reversal.
    ReversedZetaOracle,
    /// Area-vector rule without the `a_i + 2 <= a_j` clause.
    PsiWithoutGapRule,
    /// Node values that only remember depth and rank within the depth.
    BreadthRankValues,
    /// Node values without the integer depth part.
    FractionOnlyValues,
}

impl Mutant {
    pub const ALL: [Mutant; 7] = [
        Mutant::CounterclockwiseSteep,
        Mutant::IncreasingSiblings,
        Mutant::LeftToRightBounce,
        Mutant::ReversedZetaOracle,
        Mutant::PsiWithoutGapRule,
        Mutant::BreadthRankValues,
        Mutant::FractionOnlyValues,
    ];

    /// The laws this mutant is expected to break.
    pub fn targets(self) -> &'static [Law] {
        match self {
            Mutant::CounterclockwiseSteep => &[Law::Main, Law::PsiSteep],
            Mutant::IncreasingSiblings => &[Law::PosetRoundtrip],
            Mutant::LeftToRightBounce => &[Law::PhiBounce, Law::Main],
            Mutant::ReversedZetaOracle => &[Law::ZetaOracle],
            Mutant::PsiWithoutGapRule => &[Law::PsiValid],
            Mutant::BreadthRankValues => &[Law::Count],
            Mutant::FractionOnlyValues => &[Law::ParentLemma],
        }
    }

    pub fn maps(self) -> Maps {
        let mut maps = Maps::standard();
        match self {
            Mutant::CounterclockwiseSteep => maps.lambda_steep = counterclockwise_steep,
            Mutant::IncreasingSiblings => maps.lambda_poset = increasing_siblings,
            Mutant::LeftToRightBounce => maps.xi_bounce = left_to_right_bounce,
            Mutant::ReversedZetaOracle => maps.zeta_oracle = reversed_zeta_oracle,
            Mutant::PsiWithoutGapRule => maps.psi_relation = psi_without_gap_rule,
            Mutant::BreadthRankValues => maps.node_values = breadth_rank_values,
            Mutant::FractionOnlyValues => maps.node_values = fraction_only_values,
        }
        maps
    }
}

/// The mutant that must be caught for `law`.
pub fn mutant_for(law: Law) -> Mutant {
    match law {
        Law::Main | Law::PsiSteep => Mutant::CounterclockwiseSteep,
        Law::PosetRoundtrip => Mutant::IncreasingSiblings,
        Law::PhiBounce => Mutant::LeftToRightBounce,
        Law::ZetaOracle => Mutant::ReversedZetaOracle,
        Law::PsiValid => Mutant::PsiWithoutGapRule,
        Law::Count => Mutant::BreadthRankValues,
        Law::ParentLemma => Mutant::FractionOnlyValues,
    }
}

fn counterclockwise_steep(path: &DyckPath) -> PlaneTree {
    lambda_steep(path).mirrored()
}

fn increasing_siblings(poset: &UnitIntervalPoset) -> PlaneTree {
    lambda_poset(poset).mirrored()
}

fn left_to_right_bounce(tree: &PlaneTree) -> DyckPath {
    xi_bounce(&tree.mirrored())
}

fn reversed_zeta_oracle(path: &DyckPath) -> DyckPath {
    let convention = ZetaConvention {
        scan: Scan::LeftToRight,
        reverse: true,
    };
    zeta_classical(path, convention).expect("reversal keeps Dyck paths")
}

fn psi_without_gap_rule(path: &DyckPath) -> Relation {
    let area = area_vector(path);
    let a = area.entries();
    Relation::from_fn(a.len(), |i, j| a[i] + 1 == a[j] && i < j)
}

fn breadth_rank_values(tree: &PlaneTree) -> Vec<ExactRational> {
    let order = tree.breadth_order();
    let denom = BigInt::from(tree.node_count() + 1);
    let mut values = vec![ExactRational::from_integer(BigInt::from(0)); tree.node_count()];
    let mut rank = 0;
    let mut last_depth = 0;
    for &u in order.iter().filter(|&&u| u != ROOT) {
        let d = tree.depth(u);
        if d != last_depth {
            rank = 0;
            last_depth = d;
        }
        rank += 1;
        values[u] =
            ExactRational::new(BigInt::from(d) * &denom + BigInt::from(rank), denom.clone());
    }
    values
}

fn fraction_only_values(tree: &PlaneTree) -> Vec<ExactRational> {
    node_values(tree)
        .into_iter()
        .enumerate()
        .map(|(u, x)| x - ExactRational::from_integer(BigInt::from(tree.depth(u))))
        .collect()
}
