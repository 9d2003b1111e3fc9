//! Build an optimal strategy tree and emit it as DOT and JSON.
//!
//! ```bash
//! cargo run -p eggdrop --example build_tree > strategy.dot
//! dot -Tpng strategy.dot -o strategy.png   # if graphviz is installed
//! ```

use eggdrop::io::{export_dot, export_json};
use eggdrop::{build_strategy_tree, Variant};

fn main() {
    // The classic setup: two standard eggs, a ten-story building. Four
    // drops suffice; the first drop comes from floor 4.
    let tree = build_strategy_tree(Variant::Standard, 2, 10);
    print!("{}", export_dot(&tree));

    eprintln!("as JSON:");
    eprint!("{}", export_json(&tree));
    eprintln!(
        "depth {} = fewest drops that can tell floors 0..={} apart",
        tree.depth, tree.floors
    );
}
