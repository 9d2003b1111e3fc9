//! Tree serialization: a nested JSON document for exchange and a DOT graph
//! for rendering.
//!
//! The JSON document records the variant, initial egg count, floor count and
//! depth at the top level, and the tree as nested node objects with a
//! `"kind"` discriminator. Raw trees use the same layout with optional
//! children and no per-node egg annotations.

use std::fmt;

use crate::nonredundancy::RawTree;
use crate::tree::{DecisionTree, Node};

/// A JSON document that failed to parse or did not match the tree schema.
/// The message carries the line and column of the offending token.
#[derive(Debug)]
pub struct JsonError(serde_json::Error);

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid tree document: {}", self.0)
    }
}

impl std::error::Error for JsonError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.0)
    }
}

/// Serialize a decision tree to its JSON document.
pub fn export_json(tree: &DecisionTree) -> String {
    let mut text = serde_json::to_string_pretty(tree).expect("trees always serialize");
    text.push('\n');
    text
}

/// Parse a decision tree from its JSON document.
pub fn import_json(text: &str) -> Result<DecisionTree, JsonError> {
    serde_json::from_str(text).map_err(JsonError)
}

/// Serialize a raw (possibly redundant) tree to JSON.
pub fn export_raw_json(tree: &RawTree) -> String {
    let mut text = serde_json::to_string_pretty(tree).expect("trees always serialize");
    text.push('\n');
    text
}

/// Parse a raw tree. A full decision-tree document is accepted as well; the
/// per-node egg annotations are simply dropped.
pub fn import_raw_json(text: &str) -> Result<RawTree, JsonError> {
    serde_json::from_str(text).map_err(JsonError)
}

/// Render a tree as a DOT graph: circles for experiments, squares for
/// solutions. Node IDs are assigned in preorder, so output is stable.
pub fn export_dot(tree: &DecisionTree) -> String {
    let mut nodes = String::new();
    let mut edges = String::new();
    let mut next_id = 0usize;
    let mut stack: Vec<(&Node, Option<usize>)> = vec![(&tree.root, None)];
    while let Some((node, parent)) = stack.pop() {
        let id = next_id;
        next_id += 1;
        match node {
            Node::Inner {
                floor, left, right, ..
            } => {
                nodes.push_str(&format!(
                    "  n{id} [shape=circle, label=\"{floor}\"];\n"
                ));
                stack.push((right, Some(id)));
                stack.push((left, Some(id)));
            }
            Node::Leaf { solution } => {
                nodes.push_str(&format!(
                    "  n{id} [shape=square, label=\"{solution}\"];\n"
                ));
            }
        }
        if let Some(parent) = parent {
            edges.push_str(&format!("  n{parent} -> n{id};\n"));
        }
    }
    format!(
        "digraph strategy {{\n  // variant={} eggs={} floors={} depth={}\n{nodes}{edges}}}\n",
        tree.variant, tree.initial_eggs, tree.floors, tree.depth
    )
}
