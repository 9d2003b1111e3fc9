//! Exact combinatorics and optimal decision trees for generalized egg-drop
//! experiments.
//!
//! Given `k` eggs and a budget of `d` drops, how tall a building can you
//! handle while guaranteeing to find the exact floor above which eggs break?
//! This crate answers that question for three egg-supply rules — standard
//! (broken eggs are gone), replacement (a success restores the supply) and
//! bonus (a success adds an egg) — plus a generalized constant-loss /
//! constant-gain rule:
//!
//! * [`combinatorics`] evaluates the closed-form maximum heights exactly,
//!   over arbitrary-precision integers, together with the binomial,
//!   k-bonacci and ballot-style counts they are built from.
//! * [`tree`] constructs the optimal strategy as a full binary decision
//!   tree, executes it against a threshold, and checks its invariants.
//! * [`nonredundancy`] analyses arbitrary strategy trees via solution
//!   ranges, prunes unreachable branches, and normalizes any solving
//!   strategy into a non-redundant one of no greater height.
//! * [`oracle`] recomputes everything by brute force so the closed forms
//!   and the builder can be verified independently.
//! * [`io`], [`table`], [`walkthrough`] and [`selftest`] back the
//!   `dropcalc` command-line tool.
//!
//! ```
//! use eggdrop::{build_strategy_tree, execute_strategy, min_drops, Variant};
//!
//! assert_eq!(min_drops(Variant::Standard, 2, 36), 8);
//! let tree = build_strategy_tree(Variant::Standard, 2, 10);
//! let run = execute_strategy(&tree, 7).unwrap();
//! assert_eq!((run.solution, run.drops), (7, 4));
//! ```

pub mod combinatorics;
pub mod io;
pub mod nonredundancy;
pub mod oracle;
pub mod selftest;
pub mod table;
pub mod tree;
pub mod variant;
pub mod walkthrough;

pub use combinatorics::{max_height, min_drops, Count};
pub use nonredundancy::{is_nonredundant, make_nonredundant, prune_inaccessible, RawNode, RawTree};
pub use oracle::{dp_max_height, exhaustive_verify, Limits};
pub use tree::{build_strategy_tree, execute_strategy, validate, DecisionTree, Node};
pub use variant::Variant;
