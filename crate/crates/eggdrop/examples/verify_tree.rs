//! Execute a strategy for a few thresholds, then replay it for all of them.
//!
//! ```bash
//! cargo run -p eggdrop --example verify_tree
//! ```

use eggdrop::oracle::{exhaustive_verify, Limits};
use eggdrop::{build_strategy_tree, execute_strategy, validate, Variant};

fn main() {
    // Two bonus eggs and six drops cover a 42-story building.
    let tree = build_strategy_tree(Variant::Bonus, 2, 42);
    println!(
        "built: {} eggs={} floors={} depth={}",
        tree.variant, tree.initial_eggs, tree.floors, tree.depth
    );

    for threshold in [0, 17, 42] {
        let run = execute_strategy(&tree, threshold).unwrap();
        println!(
            "threshold {:>2}: recovered {} in {} drops",
            threshold, run.solution, run.drops
        );
    }

    let violations = validate(&tree);
    println!("invariant violations: {}", violations.len());

    let report = exhaustive_verify(&tree, &Limits::default()).unwrap();
    println!(
        "all {} thresholds replayed: ok={} worst drops={}",
        tree.floors + 1,
        report.ok,
        report.worst_drops
    );
}
