//! Splice redundant experiments into a sound strategy, then normalize them
//! away again.
//!
//! ```bash
//! cargo run -p eggdrop --example normalize_tree
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use eggdrop::nonredundancy::{
    count_redundant_inner, random_redundant_tree, solution_ranges, worst_case_drops,
};
use eggdrop::{is_nonredundant, make_nonredundant, min_drops, RawTree, Variant};

fn main() {
    let (variant, eggs, floors) = (Variant::Standard, 2, 12);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let raw = random_redundant_tree(&mut rng, variant, eggs, floors, 5);

    println!(
        "redundant input: {} redundant inner nodes, worst case {} drops",
        count_redundant_inner(&raw),
        worst_case_drops(&raw).unwrap()
    );
    println!("non-redundant already? {}", is_nonredundant(&raw));

    // Solution ranges drive both the diagnosis and the repair.
    let root_range = solution_ranges(&raw)[&vec![]];
    println!("root solution range: {root_range}");

    let normalized = make_nonredundant(&raw).unwrap();
    println!(
        "normalized: depth {} (optimum for {} floors is {}), redundant nodes {}",
        normalized.depth,
        floors,
        min_drops(variant, eggs, floors),
        count_redundant_inner(&RawTree::from(&normalized))
    );
}
