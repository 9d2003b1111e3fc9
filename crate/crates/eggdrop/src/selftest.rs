//! Desk-scale property grid: every closed form against its brute-force
//! counterpart, the tree builder against exhaustive execution, and the
//! normalizer against a batch of seeded redundant trees.

use std::io::{self, Write};
use std::str::FromStr;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{
    ballot_count, bonus_dead_leaves, bonus_live_leaves, binomial, count_words_no_zero_run,
    kbonacci_partial_sum, max_height, max_height_replacement, min_drops, Count,
};
use crate::nonredundancy::{
    check_solves, is_nonredundant, make_nonredundant, random_redundant_tree, solution_ranges,
    solution_ranges_from_leaves, RawTree,
};
use crate::oracle::{
    brute_ballot_count, brute_count_words, dp_max_height, exhaustive_verify, Limits,
};
use crate::tree::{build_strategy_tree, validate};
use crate::variant::Variant;

/// How much of the grid to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scale {
    /// Trimmed grid for a fast smoke check.
    Quick,
    /// The full desk-scale grid.
    #[default]
    Default,
}

impl std::fmt::Display for Scale {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Scale::Quick => "quick",
            Scale::Default => "default",
        })
    }
}

impl FromStr for Scale {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "quick" => Ok(Scale::Quick),
            "default" | "full" => Ok(Scale::Default),
            other => Err(format!("unknown scale {other:?} (expected quick or default)")),
        }
    }
}

const NAMED: [Variant; 3] = [Variant::Standard, Variant::Replacement, Variant::Bonus];

type Check = Box<dyn Fn() -> Result<String, String>>;

/// Run every check, printing one line per check. Returns whether all passed.
pub fn run<W: Write>(scale: Scale, seed: u64, out: &mut W) -> io::Result<bool> {
    let checks: Vec<(&str, Check)> = vec![
        (
            "closed forms vs dynamic program",
            Box::new(move || closed_forms_vs_dp(scale)),
        ),
        (
            "variant monotonicity",
            Box::new(move || monotonicity(scale)),
        ),
        (
            "k-bonacci partial sums vs alternating form",
            Box::new(move || partial_sum_identity(scale)),
        ),
        (
            "word counts vs enumeration",
            Box::new(move || word_counts(scale)),
        ),
        (
            "ballot counts vs enumeration",
            Box::new(move || ballot_counts(scale)),
        ),
        ("Catalan specialization", Box::new(catalan_specialization)),
        (
            "dead-leaf summand identity",
            Box::new(dead_leaf_summands),
        ),
        (
            "threshold exhaustion",
            Box::new(move || threshold_exhaustion(scale)),
        ),
        (
            "maximal tree leaf census",
            Box::new(move || maximal_leaf_census(scale)),
        ),
        (
            "randomized normalization",
            Box::new(move || randomized_normalization(scale, seed)),
        ),
    ];
    let mut all_ok = true;
    for (name, check) in checks {
        match check() {
            Ok(summary) => writeln!(out, "ok: {name} ({summary})")?,
            Err(detail) => {
                all_ok = false;
                writeln!(out, "FAIL: {name}: {detail}")?;
            }
        }
    }
    Ok(all_ok)
}

fn closed_forms_vs_dp(scale: Scale) -> Result<String, String> {
    let (max_eggs, max_drops) = match scale {
        Scale::Quick => (4, 12),
        Scale::Default => (6, 20),
    };
    let limits = Limits::default();
    let mut cells = 0;
    for variant in NAMED {
        for eggs in 1..=max_eggs {
            for drops in 1..=max_drops {
                let formula = max_height(variant, eggs, drops);
                let dp = dp_max_height(variant, eggs, drops, &limits)
                    .map_err(|e| e.to_string())?;
                if formula != dp {
                    return Err(format!(
                        "{variant} eggs={eggs} drops={drops}: formula {formula}, dp {dp}"
                    ));
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells"))
}

fn monotonicity(scale: Scale) -> Result<String, String> {
    let (max_eggs, max_drops) = match scale {
        Scale::Quick => (4, 12),
        Scale::Default => (6, 20),
    };
    let limits = Limits::default();
    for eggs in 2..=max_eggs {
        for drops in 1..=max_drops {
            let heights: Vec<Count> = NAMED
                .iter()
                .map(|&v| dp_max_height(v, eggs, drops, &limits).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            // standard never beats the replenishing rules; bonus dominates
            // replacement only while the supply is small (replacement pulls
            // ahead from five eggs and ten drops on)
            if heights[0] > heights[1] || heights[0] > heights[2] {
                return Err(format!("eggs={eggs} drops={drops}: {heights:?}"));
            }
            if eggs <= 4 && heights[1] > heights[2] {
                return Err(format!("eggs={eggs} drops={drops}: {heights:?}"));
            }
        }
    }
    Ok(format!("eggs 2..={max_eggs}, drops 1..={max_drops}"))
}

fn partial_sum_identity(scale: Scale) -> Result<String, String> {
    let max_drops = match scale {
        Scale::Quick => 20,
        Scale::Default => 40,
    };
    for order in 1..=6u32 {
        for drops in 0..=max_drops {
            let sums = kbonacci_partial_sum(order, drops as u64 + order as u64 - 1);
            let alternating = max_height_replacement(order, drops) + Count::one();
            if sums != alternating {
                return Err(format!("order={order} drops={drops}: {sums} vs {alternating}"));
            }
        }
    }
    Ok(format!("orders 1..=6, budgets 0..={max_drops}"))
}

fn word_counts(scale: Scale) -> Result<String, String> {
    let max_len = match scale {
        Scale::Quick => 12,
        Scale::Default => 18,
    };
    let limits = Limits::default();
    for run in 1..=5u32 {
        for len in 0..=max_len {
            let formula = count_words_no_zero_run(run, len as u64);
            let brute = brute_count_words(run, len, &limits).map_err(|e| e.to_string())?;
            if formula != brute {
                return Err(format!("run={run} len={len}: {formula} vs {brute}"));
            }
        }
    }
    Ok(format!("runs 1..=5, lengths 0..={max_len}"))
}

fn ballot_counts(scale: Scale) -> Result<String, String> {
    let max_total = match scale {
        Scale::Quick => 12,
        Scale::Default => 18,
    };
    let limits = Limits::default();
    for buffer in 0..=4u64 {
        for plus in 0..=max_total {
            for minus in 0..=(max_total - plus) {
                if minus as u64 > plus as u64 + buffer {
                    continue;
                }
                let formula = ballot_count(buffer, plus as u64, minus as u64)
                    .map_err(|e| e.to_string())?;
                let brute =
                    brute_ballot_count(buffer, plus, minus, &limits).map_err(|e| e.to_string())?;
                if formula != brute {
                    return Err(format!(
                        "buffer={buffer} plus={plus} minus={minus}: {formula} vs {brute}"
                    ));
                }
            }
        }
    }
    Ok(format!("buffers 0..=4, lengths up to {max_total}"))
}

fn catalan_specialization() -> Result<String, String> {
    // independent route: the convolution recurrence
    let mut catalan: Vec<Count> = vec![Count::one()];
    for n in 0..12usize {
        let mut next = Count::from(0u32);
        for i in 0..=n {
            next += &catalan[i] * &catalan[n - i];
        }
        catalan.push(next);
    }
    for (m, expected) in catalan.iter().enumerate() {
        let got = ballot_count(1, m as u64, m as u64).map_err(|e| e.to_string())?;
        if got != *expected {
            return Err(format!("m={m}: {got} vs {expected}"));
        }
    }
    Ok("m 0..=12".to_string())
}

fn dead_leaf_summands() -> Result<String, String> {
    for eggs in 1..=6u64 {
        for m in 1..=30u64 {
            let product = binomial(2 * m + eggs, m as i64) * eggs;
            let divisor = Count::from(2 * m + eggs);
            let quotient = &product / &divisor;
            if &quotient * &divisor != product {
                return Err(format!("eggs={eggs} m={m}: division is not exact"));
            }
            let difference = binomial(2 * m + eggs - 1, (m + eggs - 1) as i64)
                - binomial(2 * m + eggs - 1, m as i64 - 1);
            if quotient != difference {
                return Err(format!("eggs={eggs} m={m}: {quotient} vs {difference}"));
            }
        }
    }
    Ok("eggs 1..=6, m 1..=30".to_string())
}

fn threshold_exhaustion(scale: Scale) -> Result<String, String> {
    let max_drops = match scale {
        Scale::Quick => 6,
        Scale::Default => 8,
    };
    let limits = Limits::default();
    let mut thresholds: u64 = 0;
    for variant in NAMED {
        for eggs in 1..=3u32 {
            for drops in 1..=max_drops {
                let height = max_height(variant, eggs, drops);
                let floors = u64::try_from(&height).expect("desk-scale height");
                let tree = build_strategy_tree(variant, eggs, floors);
                if tree.depth != drops {
                    return Err(format!(
                        "{variant} eggs={eggs} floors={floors}: depth {} instead of {drops}",
                        tree.depth
                    ));
                }
                let report = exhaustive_verify(&tree, &limits).map_err(|e| e.to_string())?;
                if !report.ok || report.worst_drops > drops {
                    return Err(format!(
                        "{variant} eggs={eggs} floors={floors}: ok={} worst={}",
                        report.ok, report.worst_drops
                    ));
                }
                thresholds += floors + 1;
            }
        }
    }
    Ok(format!("{thresholds} thresholds recovered"))
}

fn maximal_leaf_census(scale: Scale) -> Result<String, String> {
    let max_drops = match scale {
        Scale::Quick => 8,
        Scale::Default => 10,
    };
    for variant in NAMED {
        for eggs in 1..=4u32 {
            for drops in eggs..=max_drops {
                let height = max_height(variant, eggs, drops);
                let floors = u64::try_from(&height).expect("desk-scale height");
                if floors == 0 {
                    continue;
                }
                let tree = build_strategy_tree(variant, eggs, floors);
                if !validate(&tree).is_empty() {
                    return Err(format!("{variant} eggs={eggs} drops={drops}: invalid tree"));
                }
                if tree.inner_count() != floors || tree.leaf_count() != floors + 1 {
                    return Err(format!(
                        "{variant} eggs={eggs} drops={drops}: node census off"
                    ));
                }
                if variant == Variant::Bonus {
                    let leaves = tree.leaves();
                    let dead = leaves.iter().filter(|l| l.eggs == 0).count() as u64;
                    let live = leaves.len() as u64 - dead;
                    let expected_dead =
                        u64::try_from(&bonus_dead_leaves(eggs, drops).unwrap()).unwrap();
                    let expected_live =
                        u64::try_from(&bonus_live_leaves(eggs, drops).unwrap()).unwrap();
                    if dead != expected_dead || live != expected_live {
                        return Err(format!(
                            "bonus eggs={eggs} drops={drops}: dead {dead}/{expected_dead}, live {live}/{expected_live}"
                        ));
                    }
                }
            }
        }
    }
    Ok(format!("variants x eggs 1..=4 x drops ..={max_drops}"))
}

fn randomized_normalization(scale: Scale, seed: u64) -> Result<String, String> {
    let cases = match scale {
        Scale::Quick => 50,
        Scale::Default => 200,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        let variant = NAMED[rng.gen_range(0..NAMED.len())];
        let eggs = rng.gen_range(1..=4u32);
        let floors = rng.gen_range(1..=30u64);
        let raw = random_redundant_tree(&mut rng, variant, eggs, floors, 8);
        let input_worst = check_solves(&raw).map_err(|e| e.to_string())?;
        if solution_ranges(&raw) != solution_ranges_from_leaves(&raw) {
            return Err(format!("case {case}: range computations disagree"));
        }
        let normalized = make_nonredundant(&raw).map_err(|e| e.to_string())?;
        let violations = validate(&normalized);
        if !violations.is_empty() {
            return Err(format!("case {case}: {}", violations[0]));
        }
        if !is_nonredundant(&RawTree::from(&normalized)) {
            return Err(format!("case {case}: output still redundant"));
        }
        if normalized.depth > input_worst {
            return Err(format!(
                "case {case}: depth grew from {input_worst} to {}",
                normalized.depth
            ));
        }
        for threshold in 0..=floors {
            let run = crate::tree::execute_strategy(&normalized, threshold)
                .map_err(|e| format!("case {case}: {e}"))?;
            if run.solution != threshold {
                return Err(format!("case {case}: threshold {threshold} lost"));
            }
        }
        let again = make_nonredundant(&RawTree::from(&normalized))
            .map_err(|e| e.to_string())?;
        if again != normalized {
            return Err(format!("case {case}: normalization is not idempotent"));
        }
        // the optimal tree bounds the worst case from below
        if normalized.depth < min_drops(variant, eggs, floors) {
            return Err(format!("case {case}: impossibly shallow output"));
        }
    }
    Ok(format!("{cases} seeded trees (seed {seed})"))
}
