//! Check the closed forms against the brute-force dynamic program over a
//! small grid.
//!
//! ```bash
//! cargo run -p eggdrop --example oracle_grid
//! ```

use eggdrop::oracle::Limits;
use eggdrop::{dp_max_height, max_height, Variant};

fn main() {
    let limits = Limits::default();
    let mut cells = 0;
    for variant in [Variant::Standard, Variant::Replacement, Variant::Bonus] {
        for eggs in 1..=4 {
            for drops in 1..=12 {
                let formula = max_height(variant, eggs, drops);
                let dp = dp_max_height(variant, eggs, drops, &limits).unwrap();
                assert_eq!(formula, dp, "{variant} eggs={eggs} drops={drops}");
                cells += 1;
            }
        }
    }
    println!("closed forms and dynamic program agree on all {cells} cells");

    // The generalized constant-loss/constant-gain variants have no closed
    // form; the dispatcher hands them to the same dynamic program.
    let general = Variant::General { loss: 2, gain: 1 };
    println!(
        "{general} with 4 eggs and 10 drops handles {} floors",
        max_height(general, 4, 10)
    );
}
