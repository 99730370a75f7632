//! Exact enumeration of labeled lone-child-avoiding rooted trees.
//!
//! Trees on `[n]` rooted at 1 in which no vertex has exactly one child are
//! counted three ways: by an alternating-sum closed form ([`counting`]), by
//! brute force over all trees, and as the fixed points of a sign-reversing
//! involution on weighted G-configurations ([`involution`]). The crate also
//! ships the machinery to check all three against each other exhaustively.

pub mod cli;
pub mod counting;
pub mod enumerate;
pub mod gconfig;
pub mod involution;
pub mod tree;

pub use counting::{formula_count, formula_term, rooted_count, sequence, SequenceTable};
pub use enumerate::{all_gconfigs, all_trees, gconfig_count_by_k, Guard};
pub use gconfig::{ArcStructure, GConfiguration, Violation, Weight};
pub use involution::{apply, classify, verify_involution, CaseTag, InvolutionOutcome};
pub use tree::{LabeledRootedTree, PlantedTree, Vertex};
