//! Solution-range analysis and normalization of arbitrary strategy trees.
//!
//! A raw tree is a possibly redundant strategy: inner nodes may perform
//! experiments whose outcome is already determined, and after pruning a node
//! may be left with a single child. Normalization turns any raw tree that
//! solves its problem into a full, non-redundant decision tree of no greater
//! height that still recovers every threshold.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::tree::{path_label, DecisionTree, Node, Step};
use crate::variant::Variant;

/// A node of a raw strategy tree. Children are optional: a pruned or
/// hand-written tree may omit the side no threshold can reach.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RawNode {
    Inner {
        floor: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        left: Option<Box<RawNode>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        right: Option<Box<RawNode>>,
    },
    Leaf {
        solution: u64,
    },
}

impl RawNode {
    pub fn inner(floor: u64, left: Option<RawNode>, right: Option<RawNode>) -> Self {
        RawNode::Inner {
            floor,
            left: left.map(Box::new),
            right: right.map(Box::new),
        }
    }

    pub fn leaf(solution: u64) -> Self {
        RawNode::Leaf { solution }
    }
}

impl Drop for RawNode {
    fn drop(&mut self) {
        let mut stack: Vec<Box<RawNode>> = Vec::new();
        let detach = |node: &mut RawNode, stack: &mut Vec<Box<RawNode>>| {
            if let RawNode::Inner { left, right, .. } = node {
                stack.extend(left.take());
                stack.extend(right.take());
            }
        };
        detach(self, &mut stack);
        while let Some(mut node) = stack.pop() {
            detach(&mut node, &mut stack);
        }
    }
}

/// A raw strategy tree together with the problem it claims to solve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTree {
    pub variant: Variant,
    #[serde(rename = "eggs")]
    pub initial_eggs: u32,
    pub floors: u64,
    pub root: RawNode,
}

impl From<&DecisionTree> for RawTree {
    fn from(tree: &DecisionTree) -> Self {
        fn convert(node: &Node) -> RawNode {
            match node {
                Node::Leaf { solution } => RawNode::leaf(*solution),
                Node::Inner {
                    floor, left, right, ..
                } => RawNode::inner(*floor, Some(convert(left)), Some(convert(right))),
            }
        }
        RawTree {
            variant: tree.variant,
            initial_eggs: tree.initial_eggs,
            floors: tree.floors,
            root: convert(&tree.root),
        }
    }
}

/// Closed interval of solutions still possible at a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRange {
    pub low: u64,
    pub high: u64,
}

impl fmt::Display for SolutionRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.low, self.high)
    }
}

/// Solution ranges of every accessible node, keyed by path from the root.
///
/// Computed top-down: the root covers `[0, floors]`; an experiment at `x`
/// narrows the left child to `[low, min(high, x-1)]` and the right child to
/// `[max(low, x), high]`. Nodes whose interval comes out empty are
/// inaccessible and are omitted along with their descendants.
pub fn solution_ranges(tree: &RawTree) -> BTreeMap<Vec<Step>, SolutionRange> {
    let mut ranges = BTreeMap::new();
    let mut stack: Vec<(&RawNode, Vec<Step>, u64, u64)> =
        vec![(&tree.root, Vec::new(), 0, tree.floors)];
    while let Some((node, path, low, high)) = stack.pop() {
        ranges.insert(path.clone(), SolutionRange { low, high });
        if let RawNode::Inner { floor, left, right } = node {
            if let Some(left) = left {
                if *floor > low {
                    let mut child = path.clone();
                    child.push(Step::Left);
                    stack.push((left, child, low, high.min(*floor - 1)));
                }
            }
            if let Some(right) = right {
                if *floor <= high {
                    let mut child = path;
                    child.push(Step::Right);
                    stack.push((right, child, low.max(*floor), high));
                }
            }
        }
    }
    ranges
}

/// Solution ranges computed the other way around: prune the tree, then take
/// the smallest and largest leaf labels below each surviving node.
///
/// On a tree that solves its problem this agrees with [`solution_ranges`]
/// on every node.
pub fn solution_ranges_from_leaves(tree: &RawTree) -> BTreeMap<Vec<Step>, SolutionRange> {
    fn walk(
        node: &RawNode,
        path: &mut Vec<Step>,
        ranges: &mut BTreeMap<Vec<Step>, SolutionRange>,
    ) -> Option<SolutionRange> {
        let range = match node {
            RawNode::Leaf { solution } => SolutionRange {
                low: *solution,
                high: *solution,
            },
            RawNode::Inner { left, right, .. } => {
                let mut merged: Option<SolutionRange> = None;
                for (child, step) in [(left, Step::Left), (right, Step::Right)] {
                    if let Some(child) = child {
                        path.push(step);
                        let child_range = walk(child, path, ranges);
                        path.pop();
                        merged = match (merged, child_range) {
                            (None, r) => r,
                            (r, None) => r,
                            (Some(a), Some(b)) => Some(SolutionRange {
                                low: a.low.min(b.low),
                                high: a.high.max(b.high),
                            }),
                        };
                    }
                }
                merged?
            }
        };
        ranges.insert(path.clone(), range);
        Some(range)
    }
    let pruned = prune_inaccessible(tree);
    let mut ranges = BTreeMap::new();
    walk(&pruned.root, &mut Vec::new(), &mut ranges);
    ranges
}

/// Remove every node that no threshold can reach. The result may contain
/// inner nodes with a single child; those are exactly the redundant
/// experiments.
pub fn prune_inaccessible(tree: &RawTree) -> RawTree {
    fn prune(node: &RawNode, low: u64, high: u64) -> RawNode {
        match node {
            RawNode::Leaf { solution } => RawNode::leaf(*solution),
            RawNode::Inner { floor, left, right } => {
                let kept_left = left.as_ref().and_then(|child| {
                    (*floor > low).then(|| prune(child, low, high.min(*floor - 1)))
                });
                let kept_right = right
                    .as_ref()
                    .and_then(|child| (*floor <= high).then(|| prune(child, low.max(*floor), high)));
                RawNode::inner(*floor, kept_left, kept_right)
            }
        }
    }
    RawTree {
        variant: tree.variant,
        initial_eggs: tree.initial_eggs,
        floors: tree.floors,
        root: prune(&tree.root, 0, tree.floors),
    }
}

/// Whether no accessible experiment has a guaranteed outcome: every
/// accessible inner node with range `[low, high]` and label `x` satisfies
/// `low < x <= high`.
pub fn is_nonredundant(tree: &RawTree) -> bool {
    count_redundant_inner(tree) == 0
}

/// Number of accessible inner nodes whose experiment is guaranteed to
/// succeed or to fail.
pub fn count_redundant_inner(tree: &RawTree) -> u64 {
    let mut redundant = 0;
    let mut stack: Vec<(&RawNode, u64, u64)> = vec![(&tree.root, 0, tree.floors)];
    while let Some((node, low, high)) = stack.pop() {
        if let RawNode::Inner { floor, left, right } = node {
            if !(low < *floor && *floor <= high) {
                redundant += 1;
            }
            if let Some(left) = left {
                if *floor > low {
                    stack.push((left, low, high.min(*floor - 1)));
                }
            }
            if let Some(right) = right {
                if *floor <= high {
                    stack.push((right, low.max(*floor), high));
                }
            }
        }
    }
    redundant
}

/// Why a raw tree was rejected as not solving its problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    /// Following the experiments for `threshold` ended at a leaf with a
    /// different label.
    WrongLeaf { threshold: u64, reached: u64 },
    /// Following the experiments for `threshold` ran into a missing child.
    DeadEnd { threshold: u64, path: String },
}

impl fmt::Display for NormalizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizeError::WrongLeaf { threshold, reached } => {
                write!(f, "threshold {threshold} reaches a leaf labeled {reached}")
            }
            NormalizeError::DeadEnd { threshold, path } => {
                write!(f, "threshold {threshold} falls off the tree at {path}")
            }
        }
    }
}

impl std::error::Error for NormalizeError {}

fn walk_all<F: FnMut(u64, u64)>(tree: &RawTree, mut at_leaf: F) -> Result<u32, NormalizeError> {
    let mut worst = 0u32;
    for threshold in 0..=tree.floors {
        let mut node = &tree.root;
        let mut path = Vec::new();
        loop {
            match node {
                RawNode::Leaf { solution } => {
                    at_leaf(threshold, *solution);
                    worst = worst.max(path.len() as u32);
                    break;
                }
                RawNode::Inner { floor, left, right } => {
                    let (step, child) = if threshold >= *floor {
                        (Step::Right, right)
                    } else {
                        (Step::Left, left)
                    };
                    path.push(step);
                    match child {
                        Some(child) => node = child,
                        None => {
                            return Err(NormalizeError::DeadEnd {
                                threshold,
                                path: path_label(&path),
                            })
                        }
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Worst-case number of experiments over all thresholds, ignoring whether
/// the reached leaves carry the right labels. Fails only if some threshold
/// walks into a missing child.
pub fn worst_case_drops(tree: &RawTree) -> Result<u32, NormalizeError> {
    walk_all(tree, |_, _| {})
}

/// Check that every threshold walks to a leaf labeled with itself, and
/// return the worst-case number of experiments performed.
pub fn check_solves(tree: &RawTree) -> Result<u32, NormalizeError> {
    let mut mismatch = None;
    let worst = walk_all(tree, |threshold, solution| {
        if solution != threshold && mismatch.is_none() {
            mismatch = Some(NormalizeError::WrongLeaf {
                threshold,
                reached: solution,
            });
        }
    })?;
    match mismatch {
        Some(error) => Err(error),
        None => Ok(worst),
    }
}

/// Whether every threshold can actually be executed within the egg budget:
/// along each threshold's path, the walker holds at least one egg whenever
/// it performs a drop.
pub fn egg_feasible(tree: &RawTree) -> bool {
    for threshold in 0..=tree.floors {
        let mut node = &tree.root;
        let mut eggs = tree.initial_eggs;
        loop {
            match node {
                RawNode::Leaf { .. } => break,
                RawNode::Inner { floor, left, right } => {
                    if eggs == 0 {
                        return false;
                    }
                    let (next_eggs, child) = if threshold >= *floor {
                        (
                            tree.variant.right_child_eggs(eggs, tree.initial_eggs),
                            right,
                        )
                    } else {
                        (tree.variant.left_child_eggs(eggs), left)
                    };
                    match child {
                        Some(child) => {
                            node = child;
                            eggs = next_eggs;
                        }
                        None => break,
                    }
                }
            }
        }
    }
    true
}

// Arena node used while normalizing; unlinked subtrees simply stay behind.
enum WorkNode {
    Inner {
        floor: u64,
        left: Option<usize>,
        right: Option<usize>,
    },
    Leaf {
        solution: u64,
    },
}

fn flatten(root: &RawNode) -> Vec<WorkNode> {
    let mut slots = vec![WorkNode::Leaf { solution: 0 }];
    let mut stack: Vec<(&RawNode, usize)> = vec![(root, 0)];
    while let Some((node, index)) = stack.pop() {
        match node {
            RawNode::Leaf { solution } => {
                slots[index] = WorkNode::Leaf {
                    solution: *solution,
                }
            }
            RawNode::Inner { floor, left, right } => {
                let allocate = |slots: &mut Vec<WorkNode>| {
                    slots.push(WorkNode::Leaf { solution: 0 });
                    slots.len() - 1
                };
                let left_index = left.as_ref().map(|_| allocate(&mut slots));
                let right_index = right.as_ref().map(|_| allocate(&mut slots));
                slots[index] = WorkNode::Inner {
                    floor: *floor,
                    left: left_index,
                    right: right_index,
                };
                if let (Some(child), Some(slot)) = (right.as_ref(), right_index) {
                    stack.push((child, slot));
                }
                if let (Some(child), Some(slot)) = (left.as_ref(), left_index) {
                    stack.push((child, slot));
                }
            }
        }
    }
    slots
}

/// Normalize a raw tree that solves its problem into a full, non-redundant
/// decision tree of no greater height.
///
/// Nodes are processed breadth first with their solution ranges kept
/// current. A node whose range has collapsed to a point becomes a leaf; an
/// experiment guaranteed to fail is moved down to the top of its range with
/// a fresh right leaf; an experiment guaranteed to succeed is moved up past
/// the bottom of its range with a fresh left leaf. Egg annotations on the
/// output follow the variant rules from the root; their feasibility is a
/// separate concern checked by [`crate::tree::validate`].
///
/// The result is exhaustively checked to recover every threshold; an input
/// that does not solve its problem comes back as an error. Mislabeled
/// leaves on unreachable branches are tolerated, since the repairs replace
/// them anyway.
pub fn make_nonredundant(tree: &RawTree) -> Result<DecisionTree, NormalizeError> {
    worst_case_drops(tree)?;
    let mut slots = flatten(&tree.root);
    let mut queue: VecDeque<(usize, u64, u64)> = VecDeque::from([(0, 0, tree.floors)]);
    while let Some((index, low, high)) = queue.pop_front() {
        let (floor, left, right) = match &slots[index] {
            // A leaf that covers more than one threshold cannot be repaired;
            // the final solve check below reports it.
            WorkNode::Leaf { .. } => continue,
            WorkNode::Inner { floor, left, right } => (*floor, *left, *right),
        };
        if low == high {
            // The solution is already known; the whole subtree collapses.
            slots[index] = WorkNode::Leaf { solution: low };
        } else if floor > high {
            // Guaranteed failure: drop from the top of the range instead,
            // so success would pin the solution to `high`.
            slots.push(WorkNode::Leaf { solution: high });
            let leaf = slots.len() - 1;
            let kept = left.expect("a walkable tree carries every threshold somewhere");
            slots[index] = WorkNode::Inner {
                floor: high,
                left: Some(kept),
                right: Some(leaf),
            };
            queue.push_back((kept, low, high - 1));
            queue.push_back((leaf, high, high));
        } else if floor <= low {
            // Guaranteed success: drop from just above the bottom of the
            // range instead, so failure would pin the solution to `low`.
            slots.push(WorkNode::Leaf { solution: low });
            let leaf = slots.len() - 1;
            let kept = right.expect("a walkable tree carries every threshold somewhere");
            slots[index] = WorkNode::Inner {
                floor: low + 1,
                left: Some(leaf),
                right: Some(kept),
            };
            queue.push_back((leaf, low, low));
            queue.push_back((kept, low + 1, high));
        } else {
            let left = left.expect("a walkable tree carries every threshold somewhere");
            let right = right.expect("a walkable tree carries every threshold somewhere");
            queue.push_back((left, low, floor - 1));
            queue.push_back((right, floor, high));
        }
    }

    // Annotate eggs top-down over the surviving nodes.
    let mut eggs: Vec<u32> = vec![0; slots.len()];
    let mut reachable: Vec<bool> = vec![false; slots.len()];
    let mut depth: Vec<u32> = vec![0; slots.len()];
    let mut height = 0;
    let mut stack = vec![0usize];
    eggs[0] = tree.initial_eggs;
    reachable[0] = true;
    while let Some(index) = stack.pop() {
        height = height.max(depth[index]);
        if let WorkNode::Inner { left, right, .. } = &slots[index] {
            let left = left.expect("normalized inner nodes are full");
            let right = right.expect("normalized inner nodes are full");
            eggs[left] = tree.variant.left_child_eggs(eggs[index]);
            eggs[right] = tree
                .variant
                .right_child_eggs(eggs[index], tree.initial_eggs);
            depth[left] = depth[index] + 1;
            depth[right] = depth[index] + 1;
            reachable[left] = true;
            reachable[right] = true;
            stack.push(left);
            stack.push(right);
        }
    }

    // Children always sit at larger indices, so a reverse sweep builds
    // bottom-up without recursion.
    let mut built: Vec<Option<Node>> = (0..slots.len()).map(|_| None).collect();
    for index in (0..slots.len()).rev() {
        if !reachable[index] {
            continue;
        }
        let node = match &slots[index] {
            WorkNode::Leaf { solution } => Node::Leaf {
                solution: *solution,
            },
            WorkNode::Inner { floor, left, right } => Node::Inner {
                floor: *floor,
                eggs: eggs[index],
                left: Box::new(
                    built[left.expect("normalized inner nodes are full")]
                        .take()
                        .expect("children built first"),
                ),
                right: Box::new(
                    built[right.expect("normalized inner nodes are full")]
                        .take()
                        .expect("children built first"),
                ),
            },
        };
        built[index] = Some(node);
    }
    let output = DecisionTree {
        variant: tree.variant,
        initial_eggs: tree.initial_eggs,
        floors: tree.floors,
        depth: height,
        root: built[0].take().expect("root survives normalization"),
    };
    // The repairs turn any solving strategy into a non-redundant one, so a
    // threshold lost here means the input never solved its problem.
    for threshold in 0..=output.floors {
        if let Err(error) = crate::tree::execute_strategy(&output, threshold) {
            return Err(match error {
                crate::tree::ExecuteError::SolutionMismatch { reached, .. } => {
                    NormalizeError::WrongLeaf { threshold, reached }
                }
                crate::tree::ExecuteError::ThresholdOutOfRange { .. } => {
                    unreachable!("thresholds are drawn from the tree's own range")
                }
            });
        }
    }
    Ok(output)
}

/// Grow a seeded redundant-but-solving tree for tests and demos.
///
/// Starts from the optimal tree for the parameters and splices in
/// `mutations` experiments with guaranteed outcomes, each carrying an
/// absent, leaf, or small junk subtree on its dead side. Splices that would
/// make some threshold impossible to execute within the egg budget are
/// discarded, so the result stays a genuine (if wasteful) strategy.
pub fn random_redundant_tree<R: Rng>(
    rng: &mut R,
    variant: Variant,
    eggs: u32,
    floors: u64,
    mutations: u32,
) -> RawTree {
    let mut tree = RawTree::from(&crate::tree::build_strategy_tree(variant, eggs, floors));
    let mut applied = 0;
    let mut attempts = 0;
    while applied < mutations && attempts < mutations * 8 {
        attempts += 1;
        let positions: Vec<(Vec<Step>, SolutionRange)> = solution_ranges(&tree)
            .into_iter()
            .collect();
        let (path, range) = positions[rng.gen_range(0..positions.len())].clone();
        let try_failure = rng.gen_bool(0.5);
        let floor = if try_failure && range.high < floors {
            rng.gen_range(range.high + 1..=floors)
        } else if !try_failure && range.low >= 1 {
            rng.gen_range(1..=range.low)
        } else {
            continue;
        };
        let junk = match rng.gen_range(0..3) {
            0 => None,
            1 => Some(RawNode::leaf(rng.gen_range(0..=floors))),
            _ => Some(RawNode::inner(
                rng.gen_range(1..=floors),
                Some(RawNode::leaf(rng.gen_range(0..=floors))),
                Some(RawNode::leaf(rng.gen_range(0..=floors))),
            )),
        };
        let mut candidate = tree.clone();
        let slot = subtree_mut(&mut candidate.root, &path);
        let original = std::mem::replace(slot, RawNode::leaf(0));
        *slot = if try_failure {
            RawNode::inner(floor, Some(original), junk)
        } else {
            RawNode::inner(floor, junk, Some(original))
        };
        if check_solves(&candidate).is_ok() && egg_feasible(&candidate) {
            tree = candidate;
            applied += 1;
        }
    }
    tree
}

fn subtree_mut<'a>(root: &'a mut RawNode, path: &[Step]) -> &'a mut RawNode {
    let mut current = root;
    for step in path {
        current = match current {
            RawNode::Inner { left, right, .. } => match step {
                Step::Left => left.as_mut().expect("path follows existing nodes"),
                Step::Right => right.as_mut().expect("path follows existing nodes"),
            },
            RawNode::Leaf { .. } => unreachable!("paths never descend through leaves"),
        };
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{build_strategy_tree, validate};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn reference_tree() -> RawTree {
        RawTree::from(&build_strategy_tree(Variant::Standard, 2, 10))
    }

    #[test]
    fn ranges_of_the_drawn_tree() {
        let ranges = solution_ranges(&reference_tree());
        assert_eq!(ranges[&vec![]], SolutionRange { low: 0, high: 10 });
        assert_eq!(
            ranges[&vec![Step::Right, Step::Right]],
            SolutionRange { low: 7, high: 10 }
        );
    }

    #[test]
    fn range_of_a_single_leaf() {
        let tree = RawTree {
            variant: Variant::Standard,
            initial_eggs: 1,
            floors: 0,
            root: RawNode::leaf(0),
        };
        let ranges = solution_ranges(&tree);
        assert_eq!(ranges[&vec![]], SolutionRange { low: 0, high: 0 });
        assert_eq!(solution_ranges_from_leaves(&tree), ranges);
    }

    #[test]
    fn both_range_computations_agree_on_solving_trees() {
        let raw = reference_tree();
        assert_eq!(solution_ranges(&raw), solution_ranges_from_leaves(&raw));
    }

    #[test]
    fn pruning_removes_a_repeated_experiment_branch() {
        // a second drop at 5 inside the right subtree can never fail
        let raw = RawTree {
            variant: Variant::Standard,
            initial_eggs: 2,
            floors: 10,
            root: RawNode::inner(
                5,
                Some(RawNode::leaf(0)),
                Some(RawNode::inner(
                    5,
                    Some(RawNode::leaf(1)),
                    Some(RawNode::leaf(2)),
                )),
            ),
        };
        let pruned = prune_inaccessible(&raw);
        let RawNode::Inner { right, .. } = &pruned.root else {
            panic!()
        };
        let RawNode::Inner { left, right, .. } = right.as_deref().unwrap() else {
            panic!()
        };
        assert!(left.is_none(), "the repeat's failure branch is unreachable");
        assert!(right.is_some());
    }

    #[test]
    fn pruning_keeps_valid_trees_intact() {
        let raw = reference_tree();
        assert_eq!(prune_inaccessible(&raw), raw);
    }

    #[test]
    fn pruning_one_floor_repeat() {
        // with one floor, nothing below a drop at 1 can fail again
        let raw = RawTree {
            variant: Variant::Standard,
            initial_eggs: 2,
            floors: 1,
            root: RawNode::inner(
                1,
                Some(RawNode::inner(
                    1,
                    Some(RawNode::leaf(0)),
                    Some(RawNode::leaf(0)),
                )),
                Some(RawNode::leaf(1)),
            ),
        };
        let pruned = prune_inaccessible(&raw);
        let RawNode::Inner { left, .. } = &pruned.root else {
            panic!()
        };
        let RawNode::Inner { left, right, .. } = left.as_deref().unwrap() else {
            panic!()
        };
        assert!(right.is_none(), "no threshold below 1 survives a drop at 1");
        assert!(left.is_some());
    }

    #[test]
    fn redundancy_detection() {
        assert!(is_nonredundant(&reference_tree()));

        // dropping above the roof is guaranteed to fail
        let too_high = RawTree {
            variant: Variant::Standard,
            initial_eggs: 2,
            floors: 10,
            root: RawNode::inner(11, Some(RawNode::leaf(0)), Some(RawNode::leaf(10))),
        };
        assert!(!is_nonredundant(&too_high));

        // repeating the root experiment after a success is guaranteed to succeed
        let repeat = RawTree {
            floors: 10,
            root: RawNode::inner(
                4,
                Some(RawNode::leaf(0)),
                Some(RawNode::inner(
                    4,
                    Some(RawNode::leaf(1)),
                    Some(RawNode::leaf(2)),
                )),
            ),
            ..too_high.clone()
        };
        assert!(!is_nonredundant(&repeat));
        assert_eq!(count_redundant_inner(&repeat), 1);
    }

    #[test]
    fn normalizing_a_clean_tree_changes_nothing() {
        let tree = build_strategy_tree(Variant::Replacement, 2, 11);
        let normalized = make_nonredundant(&RawTree::from(&tree)).unwrap();
        assert_eq!(normalized, tree);
    }

    #[test]
    fn guaranteed_success_repair_matches_hand_trace() {
        // root (1) with a repeated (1) on the right; the repeat is relabeled
        // to 2 and gains a left leaf [1]
        let raw = RawTree {
            variant: Variant::Standard,
            initial_eggs: 2,
            floors: 2,
            root: RawNode::inner(
                1,
                Some(RawNode::leaf(0)),
                Some(RawNode::inner(
                    1,
                    Some(RawNode::leaf(1)),
                    Some(RawNode::leaf(2)),
                )),
            ),
        };
        let normalized = make_nonredundant(&raw).unwrap();
        let expected = Node::inner(
            1,
            2,
            Node::leaf(0),
            Node::inner(2, 2, Node::leaf(1), Node::leaf(2)),
        );
        assert_eq!(normalized.root, expected);
        assert_eq!(normalized.depth, 2);
        assert!(validate(&normalized).is_empty());
    }

    #[test]
    fn zero_floor_problem_normalizes_to_a_single_leaf() {
        let raw = RawTree {
            variant: Variant::Standard,
            initial_eggs: 1,
            floors: 0,
            root: RawNode::leaf(0),
        };
        let normalized = make_nonredundant(&raw).unwrap();
        assert_eq!(normalized.root, Node::leaf(0));
        assert_eq!(normalized.depth, 0);
        assert!(validate(&normalized).is_empty());
    }

    #[test]
    fn out_of_range_root_labels_are_repaired() {
        // the roof is floor 2, so dropping from 15 is a guaranteed failure
        let too_high = RawTree {
            variant: Variant::Standard,
            initial_eggs: 2,
            floors: 2,
            root: RawNode::inner(
                15,
                Some(RawNode::inner(
                    1,
                    Some(RawNode::leaf(0)),
                    Some(RawNode::inner(
                        2,
                        Some(RawNode::leaf(1)),
                        Some(RawNode::leaf(2)),
                    )),
                )),
                None,
            ),
        };
        let normalized = make_nonredundant(&too_high).unwrap();
        assert!(validate(&normalized).is_empty());
        assert!(is_nonredundant(&RawTree::from(&normalized)));
        assert!(normalized.depth <= 3);

        // a label of 0 succeeds for every threshold
        let too_low = RawTree {
            variant: Variant::Standard,
            initial_eggs: 2,
            floors: 1,
            root: RawNode::inner(
                0,
                None,
                Some(RawNode::inner(
                    1,
                    Some(RawNode::leaf(0)),
                    Some(RawNode::leaf(1)),
                )),
            ),
        };
        let normalized = make_nonredundant(&too_low).unwrap();
        assert!(validate(&normalized).is_empty());
        assert_eq!(normalized.depth, 1);
    }

    #[test]
    fn rejects_trees_that_do_not_solve() {
        let raw = RawTree {
            variant: Variant::Standard,
            initial_eggs: 2,
            floors: 2,
            root: RawNode::inner(1, Some(RawNode::leaf(0)), Some(RawNode::leaf(1))),
        };
        assert!(matches!(
            make_nonredundant(&raw),
            Err(NormalizeError::WrongLeaf { threshold: 2, .. })
        ));

        let hole = RawTree {
            variant: Variant::Standard,
            initial_eggs: 2,
            floors: 2,
            root: RawNode::inner(1, None, Some(RawNode::leaf(1))),
        };
        assert!(matches!(
            make_nonredundant(&hole),
            Err(NormalizeError::DeadEnd { threshold: 0, .. })
        ));
    }

    #[test]
    fn seeded_batch_normalizes_cleanly() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for case in 0..30 {
            let variant = [Variant::Standard, Variant::Replacement, Variant::Bonus]
                [rng.gen_range(0..3)];
            let eggs = rng.gen_range(1..=3);
            let floors = rng.gen_range(1..=20);
            let raw = random_redundant_tree(&mut rng, variant, eggs, floors, 6);
            let input_worst = check_solves(&raw).unwrap();
            let normalized = make_nonredundant(&raw).unwrap();
            assert!(
                validate(&normalized).is_empty(),
                "case {case}: {variant} eggs={eggs} floors={floors}"
            );
            assert!(is_nonredundant(&RawTree::from(&normalized)));
            assert!(normalized.depth <= input_worst, "case {case} grew taller");
            let again = make_nonredundant(&RawTree::from(&normalized)).unwrap();
            assert_eq!(again, normalized, "case {case} is idempotent");
        }
    }
}
