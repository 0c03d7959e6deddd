//! Bijections between unit interval posets, plane trees and Dyck paths, and
//! an exhaustive verifier for the identity `phi . psi = zeta`.
//!
//! The objects:
//!
//! * [`DyckPath`]: `N`/`E` words staying weakly above the diagonal;
//! * [`PlaneTree`]: rooted ordered trees, written as balanced parentheses with
//!   the root included;
//! * [`UnitIntervalPoset`]: (3+1)- and (2+2)-free strict orders in canonical
//!   labeling;
//! * [`StartingSet`]: exact rational left endpoints realizing a poset.
//!
//! The maps:
//!
//! | map | from | to |
//! |-----|------|----|
//! | [`lambda_poset`] / [`xi_poset`] | poset / tree | tree / poset |
//! | [`xi_steep`] / [`lambda_steep`] | tree / path | path / tree |
//! | [`xi_bounce`] / [`lambda_bounce`] | tree / path | path / tree |
//! | [`phi`] / [`phi_inverse`] | poset / path | path / poset |
//! | [`psi`] / [`psi_inverse`] | path / poset | poset / path |
//! | [`zeta`] | path | path |
//!
//! `xi_bounce` is a breadth-first variant of the Łukasiewicz encoding of
//! plane trees: node arities are read level by level instead of depth first.

pub mod dyck;
pub mod dyck_maps;
pub mod error;
pub mod poset;
pub mod rational;
pub mod tree;
pub mod tree_maps;
pub mod verify;

pub use dyck::{area_vector, dyck_from_area, AreaVector, DyckPath, Step};
pub use dyck_maps::{
    calibrate_zeta_convention, phi, phi_inverse, phi_via_merge, psi, psi_inverse, psi_relation,
    zeta, zeta_classical, zeta_classical_oracle, MergedSequence, Origin, Scan, ZetaConvention,
};
pub use error::{Error, Result};
pub use poset::{
    canonical_form, is_three_plus_one_free, is_two_plus_two_free, is_unit_interval,
    poset_from_starting_set, posets_isomorphic, PosetJson, Relation, StartingSet,
    UnitIntervalPoset,
};
pub use rational::{catalan, ExactRational};
pub use tree::{NodeId, PlaneTree, ROOT};
pub use tree_maps::{
    check_parent_condition, check_parent_gap_bound, lambda_bounce, lambda_poset, lambda_steep,
    node_values, starting_set_of_tree, xi_bounce, xi_poset, xi_steep, BreadthOrderIndex,
};
pub use verify::{
    enumerate_dyck, enumerate_posets, enumerate_trees, verify_all, verify_law, Law, LawReport,
};
