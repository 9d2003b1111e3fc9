//! Structural properties of built trees, checked across whole parameter
//! grids rather than single examples.

use std::collections::BTreeMap;

use proptest::prelude::*;

use eggdrop::combinatorics::{
    binomial, bonus_dead_leaves, bonus_live_leaves, kbonacci_partial_sum, max_height, min_drops,
    Count,
};
use eggdrop::io::{export_json, import_json};
use eggdrop::oracle::{dp_max_height, Limits};
use eggdrop::tree::{
    build_strategy_tree, execute_strategy, label_inorder, validate, Node, Shape, Violation,
};
use eggdrop::variant::Variant;

const NAMED: [Variant; 3] = [Variant::Standard, Variant::Replacement, Variant::Bonus];

fn desk(h: &Count) -> u64 {
    u64::try_from(h).expect("desk-scale height")
}

/// Every building height between 1 and the ten-drop maximum is solved by
/// the builder, with every threshold recovered within the optimal budget.
#[test]
fn every_height_up_to_the_ten_drop_maximum_is_solved() {
    for variant in NAMED {
        for eggs in 1..=3u32 {
            let ceiling = desk(&max_height(variant, eggs, 10));
            for floors in 1..=ceiling {
                let tree = build_strategy_tree(variant, eggs, floors);
                let budget = min_drops(variant, eggs, floors);
                assert_eq!(tree.depth, budget);
                for threshold in 0..=floors {
                    let run = execute_strategy(&tree, threshold).unwrap_or_else(|e| {
                        panic!("{variant} eggs={eggs} floors={floors}: {e}")
                    });
                    assert_eq!(run.solution, threshold);
                    assert!(
                        run.drops <= budget,
                        "{variant} eggs={eggs} floors={floors} threshold={threshold}"
                    );
                }
            }
        }
    }
}

/// Maximal trees carry exactly the counted number of nodes, and their leaf
/// censuses match the closed forms variant by variant.
#[test]
fn maximal_trees_match_the_counting_formulas() {
    for variant in NAMED {
        for eggs in 1..=4u32 {
            for drops in 1..=10u32 {
                let height = max_height(variant, eggs, drops);
                let floors = desk(&height);
                if floors == 0 {
                    continue;
                }
                let tree = build_strategy_tree(variant, eggs, floors);
                assert_eq!(tree.depth, drops);
                assert!(
                    validate(&tree).is_empty(),
                    "{variant} eggs={eggs} drops={drops}"
                );
                assert_eq!(tree.inner_count(), floors);
                assert_eq!(tree.leaf_count(), floors + 1);

                match variant {
                    Variant::Bonus if drops >= eggs => {
                        let leaves = tree.leaves();
                        let dead = leaves.iter().filter(|l| l.eggs == 0).count() as u64;
                        let live = leaves.len() as u64 - dead;
                        assert_eq!(dead, desk(&bonus_dead_leaves(eggs, drops).unwrap()));
                        assert_eq!(live, desk(&bonus_live_leaves(eggs, drops).unwrap()));
                    }
                    Variant::Replacement => {
                        // leaf count equals the k-bonacci partial sum
                        let expected =
                            kbonacci_partial_sum(eggs, drops as u64 + eggs as u64 - 1);
                        assert_eq!(Count::from(tree.leaf_count()), expected);
                    }
                    _ => {}
                }
            }
        }
    }
}

/// In a maximal standard tree each leaf corresponds to a binary word of
/// length `drops`: exactly `C(drops, i)` leaves sit on paths with `i`
/// breaks for `i` below the egg count, and `C(drops, eggs)` paths end by
/// exhausting the supply.
#[test]
fn standard_leaves_group_by_break_count_like_binomials() {
    fn breaks_per_leaf(node: &Node, breaks: u32, tally: &mut BTreeMap<u32, u64>) {
        match node {
            Node::Leaf { .. } => *tally.entry(breaks).or_default() += 1,
            Node::Inner { left, right, .. } => {
                breaks_per_leaf(left, breaks + 1, tally);
                breaks_per_leaf(right, breaks, tally);
            }
        }
    }
    for eggs in 1..=4u32 {
        for drops in eggs..=10u32 {
            let floors = desk(&max_height(Variant::Standard, eggs, drops));
            let tree = build_strategy_tree(Variant::Standard, eggs, floors);
            let mut tally = BTreeMap::new();
            breaks_per_leaf(&tree.root, 0, &mut tally);
            for (breaks, count) in &tally {
                assert!(*breaks <= eggs, "a path broke more eggs than it had");
                assert_eq!(
                    Count::from(*count),
                    binomial(drops as u64, *breaks as i64),
                    "eggs={eggs} drops={drops} breaks={breaks}"
                );
            }
            assert_eq!(tally.len() as u32, eggs + 1);
        }
    }
}

/// Standard eggs never beat the replenishing rules, and for small supplies
/// the bonus rule dominates replacement too. Checked against the dynamic
/// program, not the closed forms.
///
/// The full chain standard <= replacement <= bonus holds only for up to
/// four eggs: restoring a large supply outweighs gaining one egg once
/// enough eggs have been broken, and replacement pulls ahead from five
/// eggs and ten drops on. The reversal is pinned below.
#[test]
fn variant_heights_are_monotone() {
    let limits = Limits::default();
    for eggs in 2..=6u32 {
        for drops in 1..=20u32 {
            let standard = dp_max_height(Variant::Standard, eggs, drops, &limits).unwrap();
            let replacement = dp_max_height(Variant::Replacement, eggs, drops, &limits).unwrap();
            let bonus = dp_max_height(Variant::Bonus, eggs, drops, &limits).unwrap();
            assert!(
                standard <= replacement && standard <= bonus,
                "eggs={eggs} drops={drops}: {standard} / {replacement} / {bonus}"
            );
            if eggs <= 4 {
                assert!(
                    replacement <= bonus,
                    "eggs={eggs} drops={drops}: {replacement} > {bonus}"
                );
            }
        }
    }
    let heavier = dp_max_height(Variant::Replacement, 5, 10, &limits).unwrap();
    let lighter = dp_max_height(Variant::Bonus, 5, 10, &limits).unwrap();
    assert_eq!((heavier, lighter), (Count::from(943u32), Count::from(937u32)));
}

fn shape_strategy() -> impl Strategy<Value = Shape> {
    let leaf = Just(Shape::leaf());
    leaf.prop_recursive(6, 96, 2, |inner| {
        (1u32..4, inner.clone(), inner)
            .prop_map(|(eggs, left, right)| Shape::inner(eggs, left, right))
    })
}

fn structural_violation(v: &Violation) -> bool {
    // egg annotations of arbitrary shapes are allowed to disobey the
    // variant rules; everything else must hold for any labeled shape
    !matches!(
        v,
        Violation::RootEggs { .. }
            | Violation::InnerWithoutEgg { .. }
            | Violation::LeftChildEggs { .. }
            | Violation::RightChildEggs { .. }
    )
}

proptest! {
    /// Labeling any full binary shape inorder yields a search tree: the
    /// interleaved table reads off in order, successor laws hold, and every
    /// threshold is recovered by execution.
    #[test]
    fn any_labeled_shape_is_a_search_tree(shape in shape_strategy()) {
        let tree = label_inorder(&shape, Variant::Bonus, 3);
        let structural: Vec<_> = validate(&tree)
            .into_iter()
            .filter(structural_violation)
            .collect();
        prop_assert!(structural.is_empty(), "{:?}", structural[0]);
        for threshold in 0..=tree.floors {
            let run = execute_strategy(&tree, threshold).unwrap();
            prop_assert_eq!(run.solution, threshold);
        }
    }

    /// Serializing any labeled tree and reading it back is the identity.
    #[test]
    fn json_round_trip(shape in shape_strategy()) {
        let tree = label_inorder(&shape, Variant::Standard, 2);
        let back = import_json(&export_json(&tree)).unwrap();
        prop_assert_eq!(back, tree);
    }
}
