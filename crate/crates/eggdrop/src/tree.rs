//! Strategy trees: full binary decision trees whose inner nodes name the
//! floor to drop from and whose leaves name the discovered threshold.
//!
//! Failure of a drop branches left, success branches right. Inner nodes are
//! labeled 1 through N and leaves 0 through N, both in inorder, which makes
//! the tree a search tree over the interleaved experiment/solution table
//! `[0] (1) [1] (2) ... (N) [N]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::min_drops;
use crate::variant::Variant;

/// One step along a root-to-leaf path. Left is a break, right a survival.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Left,
    Right,
}

/// Renders a path like `root` or `RLL` for diagnostics.
pub fn path_label(path: &[Step]) -> String {
    if path.is_empty() {
        return "root".to_string();
    }
    path.iter()
        .map(|s| match s {
            Step::Left => 'L',
            Step::Right => 'R',
        })
        .collect()
}

/// A node of a strategy tree. Inner nodes always have both children.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Node {
    Inner {
        floor: u64,
        eggs: u32,
        left: Box<Node>,
        right: Box<Node>,
    },
    Leaf {
        solution: u64,
    },
}

impl Node {
    pub fn inner(floor: u64, eggs: u32, left: Node, right: Node) -> Self {
        Node::Inner {
            floor,
            eggs,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn leaf(solution: u64) -> Self {
        Node::Leaf { solution }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf { .. })
    }
}

/// A complete strategy: the tree plus the parameters it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionTree {
    pub variant: Variant,
    #[serde(rename = "eggs")]
    pub initial_eggs: u32,
    pub floors: u64,
    pub depth: u32,
    pub root: Node,
}

/// A leaf together with where it sits and what is left in hand there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafInfo {
    pub solution: u64,
    pub depth: u32,
    pub eggs: u32,
}

impl DecisionTree {
    pub fn inner_count(&self) -> u64 {
        let mut count = 0;
        let mut stack = vec![&self.root];
        while let Some(node) = stack.pop() {
            if let Node::Inner { left, right, .. } = node {
                count += 1;
                stack.push(left);
                stack.push(right);
            }
        }
        count
    }

    pub fn leaf_count(&self) -> u64 {
        self.leaves().len() as u64
    }

    /// Longest root-to-leaf path, in edges.
    pub fn height(&self) -> u32 {
        let mut height = 0;
        let mut stack = vec![(&self.root, 0u32)];
        while let Some((node, depth)) = stack.pop() {
            match node {
                Node::Leaf { .. } => height = height.max(depth),
                Node::Inner { left, right, .. } => {
                    stack.push((left, depth + 1));
                    stack.push((right, depth + 1));
                }
            }
        }
        height
    }

    /// Every leaf with its depth and remaining egg count, derived from the
    /// parent annotations and the variant's child rules.
    pub fn leaves(&self) -> Vec<LeafInfo> {
        let mut leaves = Vec::new();
        let mut stack = vec![(&self.root, 0u32, self.initial_eggs)];
        while let Some((node, depth, eggs)) = stack.pop() {
            match node {
                Node::Leaf { solution } => leaves.push(LeafInfo {
                    solution: *solution,
                    depth,
                    eggs,
                }),
                Node::Inner {
                    eggs: held,
                    left,
                    right,
                    ..
                } => {
                    stack.push((
                        left,
                        depth + 1,
                        self.variant.left_child_eggs(*held),
                    ));
                    stack.push((
                        right,
                        depth + 1,
                        self.variant.right_child_eggs(*held, self.initial_eggs),
                    ));
                }
            }
        }
        leaves
    }
}

// Unlink children before a node is freed so that dropping a tall tree does
// not recurse once per level.
impl Drop for Node {
    fn drop(&mut self) {
        let mut stack: Vec<Node> = Vec::new();
        let detach = |node: &mut Node, stack: &mut Vec<Node>| {
            if let Node::Inner { left, right, .. } = node {
                stack.push(std::mem::replace(left, Node::Leaf { solution: 0 }));
                stack.push(std::mem::replace(right, Node::Leaf { solution: 0 }));
            }
        };
        detach(self, &mut stack);
        while let Some(mut node) = stack.pop() {
            detach(&mut node, &mut stack);
        }
    }
}

/// An unlabeled full binary tree shape with egg annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Inner {
        eggs: u32,
        left: Box<Shape>,
        right: Box<Shape>,
    },
    Leaf,
}

impl Shape {
    pub fn inner(eggs: u32, left: Shape, right: Shape) -> Self {
        Shape::Inner {
            eggs,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn leaf() -> Self {
        Shape::Leaf
    }
}

// Flat representation used while growing and labeling; children always have
// larger indices than their parent.
struct ShapeSlot {
    eggs: u32,
    children: Option<(usize, usize)>,
}

fn shape_to_slots(shape: &Shape) -> Vec<ShapeSlot> {
    let mut slots = Vec::new();
    slots.push(ShapeSlot {
        eggs: 0,
        children: None,
    });
    let mut stack: Vec<(&Shape, usize)> = vec![(shape, 0)];
    while let Some((node, index)) = stack.pop() {
        match node {
            Shape::Leaf => {}
            Shape::Inner { eggs, left, right } => {
                let left_index = slots.len();
                slots.push(ShapeSlot {
                    eggs: 0,
                    children: None,
                });
                let right_index = slots.len();
                slots.push(ShapeSlot {
                    eggs: 0,
                    children: None,
                });
                slots[index].eggs = *eggs;
                slots[index].children = Some((left_index, right_index));
                stack.push((right, right_index));
                stack.push((left, left_index));
            }
        }
    }
    slots
}

/// Assign inorder labels over the slots: inner nodes get 1..=n in symmetric
/// order, leaves get 0..=n. Returns the labeled root and the inner count.
fn label_slots(slots: &[ShapeSlot]) -> (Node, u64) {
    enum Visit {
        Descend(usize),
        Emit(usize),
    }
    let mut labels: Vec<u64> = vec![0; slots.len()];
    let mut next_inner: u64 = 1;
    let mut next_leaf: u64 = 0;
    let mut stack = vec![Visit::Descend(0)];
    while let Some(visit) = stack.pop() {
        match visit {
            Visit::Descend(index) => match slots[index].children {
                Some((left, right)) => {
                    stack.push(Visit::Descend(right));
                    stack.push(Visit::Emit(index));
                    stack.push(Visit::Descend(left));
                }
                None => {
                    labels[index] = next_leaf;
                    next_leaf += 1;
                }
            },
            Visit::Emit(index) => {
                labels[index] = next_inner;
                next_inner += 1;
            }
        }
    }
    // Children sit after their parent, so a reverse sweep builds bottom-up.
    let mut built: Vec<Option<Node>> = (0..slots.len()).map(|_| None).collect();
    for index in (0..slots.len()).rev() {
        let node = match slots[index].children {
            None => Node::Leaf {
                solution: labels[index],
            },
            Some((left, right)) => Node::Inner {
                floor: labels[index],
                eggs: slots[index].eggs,
                left: Box::new(built[left].take().expect("children built first")),
                right: Box::new(built[right].take().expect("children built first")),
            },
        };
        built[index] = Some(node);
    }
    (built[0].take().expect("root built last"), next_inner - 1)
}

fn slot_height(slots: &[ShapeSlot]) -> u32 {
    let mut height = 0;
    let mut stack = vec![(0usize, 0u32)];
    while let Some((index, depth)) = stack.pop() {
        match slots[index].children {
            None => height = height.max(depth),
            Some((left, right)) => {
                stack.push((left, depth + 1));
                stack.push((right, depth + 1));
            }
        }
    }
    height
}

/// Label a shape inorder and package it as a decision tree.
///
/// The shape's egg annotations are copied verbatim; whether they obey the
/// variant's child rules is [`validate`]'s business, not the labeler's.
pub fn label_inorder(shape: &Shape, variant: Variant, initial_eggs: u32) -> DecisionTree {
    let slots = shape_to_slots(shape);
    let depth = slot_height(&slots);
    let (root, floors) = label_slots(&slots);
    DecisionTree {
        variant,
        initial_eggs,
        floors,
        depth,
        root,
    }
}

/// Build the optimal strategy tree for a building with `floors` floors.
///
/// The depth is always `min_drops(variant, eggs, floors)`. The shape grows
/// breadth first: walking each level left to right, a frontier position
/// becomes an inner node while inner nodes are still needed, it holds at
/// least one egg, and it sits above the depth limit; every other position
/// becomes a leaf. Labels are then assigned inorder.
pub fn build_strategy_tree(variant: Variant, eggs: u32, floors: u64) -> DecisionTree {
    assert!(eggs >= 1, "strategies need at least one egg");
    assert!(floors >= 1, "strategies need at least one floor");
    let depth = min_drops(variant, eggs, floors);
    let mut slots = vec![ShapeSlot {
        eggs,
        children: None,
    }];
    let mut queue = std::collections::VecDeque::from([(0usize, 0u32)]);
    let mut admitted: u64 = 0;
    while let Some((index, level)) = queue.pop_front() {
        let held = slots[index].eggs;
        if admitted < floors && level < depth && held >= 1 {
            admitted += 1;
            let left_index = slots.len();
            slots.push(ShapeSlot {
                eggs: variant.left_child_eggs(held),
                children: None,
            });
            let right_index = slots.len();
            slots.push(ShapeSlot {
                eggs: variant.right_child_eggs(held, eggs),
                children: None,
            });
            slots[index].children = Some((left_index, right_index));
            queue.push_back((left_index, level + 1));
            queue.push_back((right_index, level + 1));
        }
    }
    assert_eq!(
        admitted, floors,
        "a depth chosen by min_drops always has room for every floor"
    );
    let (root, labeled) = label_slots(&slots);
    debug_assert_eq!(labeled, floors);
    DecisionTree {
        variant,
        initial_eggs: eggs,
        floors,
        depth,
        root,
    }
}

/// Result of running a strategy against one threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Execution {
    pub solution: u64,
    pub drops: u32,
}

/// A strategy execution that did not end at the right leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExecuteError {
    ThresholdOutOfRange { threshold: u64, floors: u64 },
    /// The walk reached a leaf whose label differs from the threshold; the
    /// tree is malformed.
    SolutionMismatch {
        threshold: u64,
        reached: u64,
        drops: u32,
    },
}

impl fmt::Display for ExecuteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExecuteError::ThresholdOutOfRange { threshold, floors } => {
                write!(f, "threshold {threshold} is outside 0..={floors}")
            }
            ExecuteError::SolutionMismatch {
                threshold,
                reached,
                drops,
            } => write!(
                f,
                "threshold {threshold} reached leaf {reached} after {drops} drops"
            ),
        }
    }
}

impl std::error::Error for ExecuteError {}

/// Walk the tree for the given threshold: at a node labeled `x` the egg
/// survives (go right) exactly when `threshold >= x`. Returns the reached
/// solution and the number of drops performed.
pub fn execute_strategy(tree: &DecisionTree, threshold: u64) -> Result<Execution, ExecuteError> {
    if threshold > tree.floors {
        return Err(ExecuteError::ThresholdOutOfRange {
            threshold,
            floors: tree.floors,
        });
    }
    let mut node = &tree.root;
    let mut drops = 0;
    loop {
        match node {
            Node::Inner {
                floor, left, right, ..
            } => {
                drops += 1;
                node = if threshold >= *floor { right } else { left };
            }
            Node::Leaf { solution } => {
                if *solution == threshold {
                    return Ok(Execution {
                        solution: *solution,
                        drops,
                    });
                }
                return Err(ExecuteError::SolutionMismatch {
                    threshold,
                    reached: *solution,
                    drops,
                });
            }
        }
    }
}

/// A broken tree invariant found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    RootEggs {
        found: u32,
        expected: u32,
    },
    /// An inner node holds no egg, so it could never perform its drop.
    InnerWithoutEgg {
        path: String,
    },
    LeftChildEggs {
        path: String,
        expected: u32,
        found: u32,
    },
    RightChildEggs {
        path: String,
        expected: u32,
        found: u32,
    },
    /// The inorder walk diverged from the table `[0] (1) [1] ... (N) [N]`.
    InorderMismatch {
        position: u64,
        expected: String,
        found: String,
    },
    InorderLength {
        expected: u64,
        found: u64,
    },
    PathTooDeep {
        path: String,
        depth: u32,
        limit: u32,
    },
    /// A standard-egg path branched left more often than there are eggs.
    TooManyBreaks {
        path: String,
        breaks: u32,
        eggs: u32,
    },
    InnerCount {
        expected: u64,
        found: u64,
    },
    /// An inner node's inorder successor is not the first element of its
    /// right subtree.
    SuccessorNotInRightSubtree {
        path: String,
    },
    /// A leaf's inorder successor is not an ancestor holding the leaf in its
    /// left subtree.
    LeafSuccessorNotAncestor {
        path: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RootEggs { found, expected } => {
                write!(f, "root holds {found} eggs, tree declares {expected}")
            }
            Violation::InnerWithoutEgg { path } => {
                write!(f, "inner node at {path} holds no egg")
            }
            Violation::LeftChildEggs {
                path,
                expected,
                found,
            } => write!(
                f,
                "left child at {path} holds {found} eggs, rule gives {expected}"
            ),
            Violation::RightChildEggs {
                path,
                expected,
                found,
            } => write!(
                f,
                "right child at {path} holds {found} eggs, rule gives {expected}"
            ),
            Violation::InorderMismatch {
                position,
                expected,
                found,
            } => write!(
                f,
                "inorder position {position}: expected {expected}, found {found}"
            ),
            Violation::InorderLength { expected, found } => {
                write!(f, "inorder walk has {found} entries, expected {expected}")
            }
            Violation::PathTooDeep { path, depth, limit } => {
                write!(f, "leaf at {path} sits at depth {depth}, above limit {limit}")
            }
            Violation::TooManyBreaks { path, breaks, eggs } => {
                write!(f, "path {path} breaks {breaks} eggs but only {eggs} exist")
            }
            Violation::InnerCount { expected, found } => {
                write!(f, "tree has {found} inner nodes, expected {expected}")
            }
            Violation::SuccessorNotInRightSubtree { path } => write!(
                f,
                "inorder successor of inner node {path} is not the first element of its right subtree"
            ),
            Violation::LeafSuccessorNotAncestor { path } => write!(
                f,
                "inorder successor of leaf {path} is not an ancestor covering it on the left"
            ),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Token {
    Inner(u64),
    Leaf(u64),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Inner(x) => write!(f, "({x})"),
            Token::Leaf(x) => write!(f, "[{x}]"),
        }
    }
}

/// Inorder sequence of (path, token), iteratively.
fn inorder_tokens(root: &Node) -> Vec<(Vec<Step>, Token)> {
    enum Visit<'a> {
        Descend(&'a Node, Vec<Step>),
        Emit(Vec<Step>, Token),
    }
    let mut out = Vec::new();
    let mut stack = vec![Visit::Descend(root, Vec::new())];
    while let Some(visit) = stack.pop() {
        match visit {
            Visit::Descend(node, path) => match node {
                Node::Leaf { solution } => out.push((path, Token::Leaf(*solution))),
                Node::Inner {
                    floor, left, right, ..
                } => {
                    let mut left_path = path.clone();
                    left_path.push(Step::Left);
                    let mut right_path = path.clone();
                    right_path.push(Step::Right);
                    stack.push(Visit::Descend(right, right_path));
                    stack.push(Visit::Emit(path, Token::Inner(*floor)));
                    stack.push(Visit::Descend(left, left_path));
                }
            },
            Visit::Emit(path, token) => out.push((path, token)),
        }
    }
    out
}

/// Check every structural invariant of a decision tree. An empty list means
/// the tree is well formed.
pub fn validate(tree: &DecisionTree) -> Vec<Violation> {
    let mut violations = Vec::new();

    // Egg bookkeeping along every edge, plus depth and break budgets.
    if let Node::Inner { eggs, .. } = &tree.root {
        if *eggs != tree.initial_eggs {
            violations.push(Violation::RootEggs {
                found: *eggs,
                expected: tree.initial_eggs,
            });
        }
    }
    let mut stack: Vec<(&Node, Vec<Step>, u32)> = vec![(&tree.root, Vec::new(), 0)];
    let mut inner_seen: u64 = 0;
    while let Some((node, path, breaks)) = stack.pop() {
        match node {
            Node::Leaf { .. } => {
                let depth = path.len() as u32;
                if depth > tree.depth {
                    violations.push(Violation::PathTooDeep {
                        path: path_label(&path),
                        depth,
                        limit: tree.depth,
                    });
                }
                if tree.variant == Variant::Standard && breaks > tree.initial_eggs {
                    violations.push(Violation::TooManyBreaks {
                        path: path_label(&path),
                        breaks,
                        eggs: tree.initial_eggs,
                    });
                }
            }
            Node::Inner {
                eggs, left, right, ..
            } => {
                inner_seen += 1;
                if *eggs == 0 {
                    violations.push(Violation::InnerWithoutEgg {
                        path: path_label(&path),
                    });
                }
                let expect_left = tree.variant.left_child_eggs(*eggs);
                let expect_right = tree.variant.right_child_eggs(*eggs, tree.initial_eggs);
                if let Node::Inner { eggs: held, .. } = left.as_ref() {
                    if *held != expect_left {
                        let mut child = path.clone();
                        child.push(Step::Left);
                        violations.push(Violation::LeftChildEggs {
                            path: path_label(&child),
                            expected: expect_left,
                            found: *held,
                        });
                    }
                }
                if let Node::Inner { eggs: held, .. } = right.as_ref() {
                    if *held != expect_right {
                        let mut child = path.clone();
                        child.push(Step::Right);
                        violations.push(Violation::RightChildEggs {
                            path: path_label(&child),
                            expected: expect_right,
                            found: *held,
                        });
                    }
                }
                let mut left_path = path.clone();
                left_path.push(Step::Left);
                let mut right_path = path;
                right_path.push(Step::Right);
                stack.push((left, left_path, breaks + 1));
                stack.push((right, right_path, breaks));
            }
        }
    }
    if inner_seen != tree.floors {
        violations.push(Violation::InnerCount {
            expected: tree.floors,
            found: inner_seen,
        });
    }

    // The inorder walk must spell out the interleaved table exactly.
    let tokens = inorder_tokens(&tree.root);
    let expected_len = 2 * tree.floors + 1;
    if tokens.len() as u64 != expected_len {
        violations.push(Violation::InorderLength {
            expected: expected_len,
            found: tokens.len() as u64,
        });
    }
    for (position, (_, token)) in tokens.iter().enumerate() {
        let expected = if position % 2 == 0 {
            Token::Leaf(position as u64 / 2)
        } else {
            Token::Inner((position as u64).div_ceil(2))
        };
        if *token != expected {
            violations.push(Violation::InorderMismatch {
                position: position as u64,
                expected: expected.to_string(),
                found: token.to_string(),
            });
        }
    }

    // Successor laws: an inner node's successor starts its right subtree; a
    // leaf's successor is an ancestor whose left subtree holds the leaf.
    for pair in tokens.windows(2) {
        let (path, token) = &pair[0];
        let (next_path, _) = &pair[1];
        match token {
            Token::Inner(_) => {
                let extends = next_path.len() > path.len()
                    && next_path[..path.len()] == path[..]
                    && next_path[path.len()] == Step::Right
                    && next_path[path.len() + 1..].iter().all(|s| *s == Step::Left);
                if !extends {
                    violations.push(Violation::SuccessorNotInRightSubtree {
                        path: path_label(path),
                    });
                }
            }
            Token::Leaf(_) => {
                let ancestor = next_path.len() < path.len()
                    && path[..next_path.len()] == next_path[..]
                    && path[next_path.len()] == Step::Left;
                if !ancestor {
                    violations.push(Violation::LeafSuccessorNotAncestor {
                        path: path_label(path),
                    });
                }
            }
        }
    }

    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_floor_tree() {
        for variant in [Variant::Standard, Variant::Replacement, Variant::Bonus] {
            let tree = build_strategy_tree(variant, 2, 1);
            assert_eq!(tree.depth, 1);
            assert_eq!(
                tree.root,
                Node::inner(1, 2, Node::leaf(0), Node::leaf(1)),
                "{variant}"
            );
        }
    }

    #[test]
    fn two_standard_eggs_ten_floors_matches_drawn_strategy() {
        let tree = build_strategy_tree(Variant::Standard, 2, 10);
        assert_eq!(tree.depth, 4);
        let Node::Inner {
            floor, left, right, ..
        } = &tree.root
        else {
            panic!("root must be inner");
        };
        assert_eq!(*floor, 4);
        let Node::Inner { floor: lf, .. } = left.as_ref() else {
            panic!()
        };
        let Node::Inner { floor: rf, .. } = right.as_ref() else {
            panic!()
        };
        assert_eq!((*lf, *rf), (1, 7));
        assert!(validate(&tree).is_empty());
    }

    #[test]
    fn left_spine_labels_descend_from_root() {
        let shape = Shape::inner(
            3,
            Shape::inner(2, Shape::inner(1, Shape::leaf(), Shape::leaf()), Shape::leaf()),
            Shape::leaf(),
        );
        let tree = label_inorder(&shape, Variant::Standard, 3);
        let Node::Inner { floor, left, .. } = &tree.root else {
            panic!()
        };
        assert_eq!(*floor, 3);
        let Node::Inner { floor, left, .. } = left.as_ref() else {
            panic!()
        };
        assert_eq!(*floor, 2);
        let Node::Inner { floor, .. } = left.as_ref() else {
            panic!()
        };
        assert_eq!(*floor, 1);
        assert!(validate(&tree).is_empty());
    }

    #[test]
    fn execution_follows_drawn_paths() {
        let tree = build_strategy_tree(Variant::Standard, 2, 10);
        let low = execute_strategy(&tree, 0).unwrap();
        assert_eq!((low.solution, low.drops), (0, 2));
        let high = execute_strategy(&tree, 10).unwrap();
        assert_eq!((high.solution, high.drops), (10, 4));
        for threshold in 0..=10 {
            assert_eq!(execute_strategy(&tree, threshold).unwrap().solution, threshold);
        }
        assert!(matches!(
            execute_strategy(&tree, 11),
            Err(ExecuteError::ThresholdOutOfRange { .. })
        ));
    }

    fn inner_eggs_by_level(tree: &DecisionTree) -> Vec<Vec<u32>> {
        let mut levels: Vec<Vec<u32>> = Vec::new();
        let mut stack = vec![(&tree.root, 0usize)];
        while let Some((node, depth)) = stack.pop() {
            if let Node::Inner {
                eggs, left, right, ..
            } = node
            {
                if levels.len() <= depth {
                    levels.resize(depth + 1, Vec::new());
                }
                levels[depth].push(*eggs);
                stack.push((left, depth + 1));
                stack.push((right, depth + 1));
            }
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        levels
    }

    #[test]
    fn replacement_annotations_reset_on_success() {
        let tree = build_strategy_tree(Variant::Replacement, 2, 11);
        assert_eq!(tree.depth, 4);
        assert!(validate(&tree).is_empty());
        // left child of the root dropped to one egg; its right child resets
        let Node::Inner { left, .. } = &tree.root else {
            panic!()
        };
        let Node::Inner { eggs, right, .. } = left.as_ref() else {
            panic!()
        };
        assert_eq!(*eggs, 1);
        let Node::Inner { eggs, .. } = right.as_ref() else {
            panic!()
        };
        assert_eq!(*eggs, 2);
        // egg counts per level match the drawn maximal tree
        assert_eq!(
            inner_eggs_by_level(&tree),
            vec![vec![2], vec![1, 2], vec![1, 2, 2], vec![1, 1, 2, 2, 2]]
        );
    }

    #[test]
    fn bonus_annotations_grow_on_success() {
        let tree = build_strategy_tree(Variant::Bonus, 1, 7);
        assert_eq!(tree.depth, 4);
        assert!(validate(&tree).is_empty());
        let Node::Inner { right, .. } = &tree.root else {
            panic!()
        };
        let Node::Inner { eggs, .. } = right.as_ref() else {
            panic!()
        };
        assert_eq!(*eggs, 2);
        assert_eq!(
            inner_eggs_by_level(&tree),
            vec![vec![1], vec![2], vec![1, 3], vec![2, 2, 4]]
        );
    }

    #[test]
    fn validate_flags_swapped_leaves() {
        let mut tree = build_strategy_tree(Variant::Standard, 2, 3);
        // swap the two deepest leaf labels
        fn first_two_leaves<'a>(node: &'a mut Node, found: &mut Vec<&'a mut u64>) {
            match node {
                Node::Leaf { solution } => {
                    if found.len() < 2 {
                        found.push(solution);
                    }
                }
                Node::Inner { left, right, .. } => {
                    first_two_leaves(left, found);
                    first_two_leaves(right, found);
                }
            }
        }
        let mut leaves = Vec::new();
        first_two_leaves(&mut tree.root, &mut leaves);
        let [a, b] = &mut leaves[..] else { panic!() };
        std::mem::swap(*a, *b);
        assert!(validate(&tree)
            .iter()
            .any(|v| matches!(v, Violation::InorderMismatch { .. })));
    }

    #[test]
    fn validate_flags_wrong_egg_annotation() {
        let mut tree = build_strategy_tree(Variant::Standard, 2, 10);
        if let Node::Inner { right, .. } = &mut tree.root {
            if let Node::Inner { eggs, .. } = right.as_mut() {
                *eggs = 1;
            }
        }
        assert!(validate(&tree)
            .iter()
            .any(|v| matches!(v, Violation::RightChildEggs { .. })));
    }

    #[test]
    fn leaves_report_depth_and_remaining_eggs() {
        let tree = build_strategy_tree(Variant::Standard, 2, 10);
        let leaves = tree.leaves();
        assert_eq!(leaves.len(), 11);
        let lowest = leaves.iter().find(|l| l.solution == 0).unwrap();
        assert_eq!((lowest.depth, lowest.eggs), (2, 0));
        let highest = leaves.iter().find(|l| l.solution == 10).unwrap();
        assert_eq!((highest.depth, highest.eggs), (4, 2));
    }

    #[test]
    fn trees_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<DecisionTree>();
        assert_send_sync::<Node>();
        assert_send_sync::<crate::nonredundancy::RawTree>();
    }

    #[test]
    fn dropping_a_spine_does_not_recurse() {
        // one standard egg forces a pure right spine as deep as the building
        let tree = build_strategy_tree(Variant::Standard, 1, 200_000);
        assert_eq!(tree.depth, 200_000);
        drop(tree);
    }
}
