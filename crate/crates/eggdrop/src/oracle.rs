//! Brute-force ground truth.
//!
//! Nothing here is meant to be fast. The dynamic program and the enumerators
//! recount from first principles what the closed forms in
//! [`crate::combinatorics`] compute directly, so the two sides can be checked
//! against each other. Execution checks replay a strategy tree for every
//! possible threshold.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::Count;
use crate::tree::{execute_strategy, DecisionTree, ExecuteError};
use crate::variant::Variant;

/// Size caps that keep the oracles desk-scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest initial egg count accepted by the dynamic program.
    pub max_eggs: u32,
    /// Largest drop budget accepted by the dynamic program.
    pub max_drops: u32,
    /// Longest word length enumerated by [`brute_count_words`].
    pub max_word_len: u32,
    /// Longest plus/minus sequence enumerated by [`brute_ballot_count`].
    pub max_sequence_len: u32,
    /// Tallest building replayed by [`exhaustive_verify`].
    pub max_floors: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_eggs: 8,
            max_drops: 24,
            max_word_len: 20,
            max_sequence_len: 20,
            max_floors: 1_000_000,
        }
    }
}

impl Limits {
    /// Default limits widened just enough to admit the given query.
    pub fn covering(eggs: u32, drops: u32) -> Self {
        let base = Limits::default();
        Limits {
            max_eggs: base.max_eggs.max(eggs),
            max_drops: base.max_drops.max(drops),
            ..base
        }
    }
}

/// A request exceeded the configured desk-scale limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitExceeded {
    pub what: &'static str,
    pub value: u64,
    pub limit: u64,
}

impl fmt::Display for LimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "oracle limit exceeded: {} = {} is above the configured limit {}",
            self.what, self.value, self.limit
        )
    }
}

impl std::error::Error for LimitExceeded {}

/// Maximum number of inner nodes of a depth-`drops` tree under the variant's
/// egg bookkeeping, computed by direct recursion over (eggs, drops) states.
///
/// `f(e, t) = 0` when the supply or the budget is exhausted, otherwise
/// `1 + f(left, t-1) + f(right, t-1)` with the child egg counts given by the
/// variant rule. Memoized per call.
pub fn dp_max_height(
    variant: Variant,
    eggs: u32,
    drops: u32,
    limits: &Limits,
) -> Result<Count, LimitExceeded> {
    if eggs > limits.max_eggs {
        return Err(LimitExceeded {
            what: "eggs",
            value: eggs as u64,
            limit: limits.max_eggs as u64,
        });
    }
    if drops > limits.max_drops {
        return Err(LimitExceeded {
            what: "drops",
            value: drops as u64,
            limit: limits.max_drops as u64,
        });
    }
    let mut memo: HashMap<(u64, u32), Count> = HashMap::new();
    Ok(grow(variant, eggs as u64, eggs as u64, drops, &mut memo))
}

fn grow(
    variant: Variant,
    initial: u64,
    eggs: u64,
    drops: u32,
    memo: &mut HashMap<(u64, u32), Count>,
) -> Count {
    if eggs == 0 || drops == 0 {
        return Count::zero();
    }
    if let Some(hit) = memo.get(&(eggs, drops)) {
        return hit.clone();
    }
    let left = match variant {
        Variant::General { loss, .. } => eggs.saturating_sub(loss as u64),
        _ => eggs - 1,
    };
    let right = match variant {
        Variant::Standard => eggs,
        Variant::Replacement => initial,
        Variant::Bonus => eggs + 1,
        Variant::General { gain, .. } => eggs + gain as u64,
    };
    let value = Count::one()
        + grow(variant, initial, left, drops - 1, memo)
        + grow(variant, initial, right, drops - 1, memo);
    memo.insert((eggs, drops), value.clone());
    value
}

/// Count binary words of length `len` with no run of `run` consecutive
/// zeros, by checking every one of the `2^len` words.
pub fn brute_count_words(run: u32, len: u32, limits: &Limits) -> Result<Count, LimitExceeded> {
    assert!(run >= 1, "the forbidden run must have positive length");
    if len > limits.max_word_len {
        return Err(LimitExceeded {
            what: "word length",
            value: len as u64,
            limit: limits.max_word_len as u64,
        });
    }
    let mut qualifying: u64 = 0;
    for word in 0u64..1u64 << len {
        let mut zeros = 0u32;
        let mut ok = true;
        for bit in 0..len {
            if word >> bit & 1 == 0 {
                zeros += 1;
                if zeros == run {
                    ok = false;
                    break;
                }
            } else {
                zeros = 0;
            }
        }
        if ok {
            qualifying += 1;
        }
    }
    Ok(Count::from(qualifying))
}

/// Count arrangements of `plus` plus-ones and `minus` minus-ones whose
/// partial sums all stay above `-buffer`, by walking the full arrangement
/// tree.
pub fn brute_ballot_count(
    buffer: u64,
    plus: u32,
    minus: u32,
    limits: &Limits,
) -> Result<Count, LimitExceeded> {
    let total = plus as u64 + minus as u64;
    if total > limits.max_sequence_len as u64 {
        return Err(LimitExceeded {
            what: "sequence length",
            value: total,
            limit: limits.max_sequence_len as u64,
        });
    }
    fn arrangements(plus: u32, minus: u32, sum: i64, floor: i64) -> u64 {
        if plus == 0 && minus == 0 {
            return 1;
        }
        let mut total = 0;
        if plus > 0 {
            total += arrangements(plus - 1, minus, sum + 1, floor);
        }
        if minus > 0 && sum - 1 > floor {
            total += arrangements(plus, minus - 1, sum - 1, floor);
        }
        total
    }
    Ok(Count::from(arrangements(
        plus,
        minus,
        0,
        -(buffer as i64),
    )))
}

/// One threshold the tree failed to recover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    pub threshold: u64,
    pub error: ExecuteError,
}

/// Outcome of replaying a tree against every threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    /// Longest root-to-leaf path taken by any successful execution.
    pub worst_drops: u32,
    pub failures: Vec<VerifyFailure>,
}

/// Replay `tree` for every threshold from 0 through its floor count and
/// report mismatches and the worst-case number of drops.
pub fn exhaustive_verify(tree: &DecisionTree, limits: &Limits) -> Result<VerifyReport, LimitExceeded> {
    if tree.floors > limits.max_floors {
        return Err(LimitExceeded {
            what: "floors",
            value: tree.floors,
            limit: limits.max_floors,
        });
    }
    let mut worst_drops = 0;
    let mut failures = Vec::new();
    for threshold in 0..=tree.floors {
        match execute_strategy(tree, threshold) {
            Ok(execution) => worst_drops = worst_drops.max(execution.drops),
            Err(error) => failures.push(VerifyFailure { threshold, error }),
        }
    }
    Ok(VerifyReport {
        ok: failures.is_empty(),
        worst_drops,
        failures,
    })
}
