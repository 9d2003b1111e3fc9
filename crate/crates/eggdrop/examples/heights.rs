//! Closed-form height queries: how tall a building each variant can handle,
//! and how many drops a given building needs.
//!
//! ```bash
//! cargo run -p eggdrop --example heights
//! ```

use eggdrop::{max_height, min_drops, Variant};

fn main() {
    let variants = [Variant::Standard, Variant::Replacement, Variant::Bonus];

    println!("With 2 eggs and 8 drops:");
    for variant in variants {
        println!("  {:<12} handles {:>4} floors", variant.to_string(), max_height(variant, 2, 8));
    }

    println!("\nDrops needed for the classic 36-story building with 2 eggs:");
    for variant in variants {
        println!("  {:<12} {}", variant.to_string(), min_drops(variant, 2, 36));
    }

    println!("\nDrops needed for a 100-story building with 2 eggs:");
    for variant in variants {
        println!("  {:<12} {}", variant.to_string(), min_drops(variant, 2, 100));
    }

    // Exact arithmetic: heights grow like 2^d, far beyond machine integers.
    println!(
        "\nOne replacement egg never helps ({} drops for 100 floors),",
        min_drops(Variant::Replacement, 1, 100)
    );
    println!(
        "but 9 bonus eggs and 99 drops handle {} floors.",
        max_height(Variant::Bonus, 9, 99)
    );
}
