//! Render the maximum-height tables in each supported format.
//!
//! ```bash
//! cargo run -p eggdrop --example tables
//! ```

use eggdrop::table::{compute_tables, render_tables, OutputFormat, TableRequest};

fn main() {
    // The defaults cover 2..4 eggs, all named variants, budgets 1..8.
    let tables = compute_tables(&TableRequest::default());

    println!("{}", render_tables(&tables, OutputFormat::Plain));
    println!("{}", render_tables(&tables, OutputFormat::Markdown));

    // A custom request: one egg of each style, and a generalized variant
    // that loses one egg on failure and gains two on success. The general
    // rows come from the dynamic-programming oracle and are flagged.
    let custom = TableRequest {
        egg_counts: vec![1],
        variants: vec![
            eggdrop::Variant::Standard,
            eggdrop::Variant::Bonus,
            eggdrop::Variant::General { loss: 1, gain: 2 },
        ],
        max_drops: 6,
    };
    println!("{}", render_tables(&compute_tables(&custom), OutputFormat::Plain));
}
