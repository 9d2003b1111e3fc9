//! Exact counting formulas for egg-drop experiments.
//!
//! Everything here is evaluated over arbitrary-precision integers: the
//! maximum-height functions grow like `2^d`, so fixed-width arithmetic is
//! not an option. Signed intermediates (the alternating sum in
//! [`max_height_replacement`]) are computed over `BigInt` and checked
//! non-negative before conversion.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::oracle;
use crate::variant::Variant;

/// Exact non-negative integer used for every counted quantity.
pub type Count = BigUint;

/// Invalid argument combination for a counting function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainError {
    /// A ballot count was requested with more minus-ones than `plus + buffer`;
    /// such a sequence always dips to `-buffer` or below.
    BallotImbalance { buffer: u64, plus: u64, minus: u64 },
    /// Dead-leaf counts only exist once the drop budget reaches the egg
    /// count; shallower trees cannot exhaust the supply.
    DropsBelowEggs { eggs: u32, drops: u32 },
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::BallotImbalance { buffer, plus, minus } => write!(
                f,
                "ballot count undefined: minus={minus} exceeds plus+buffer={}",
                plus + buffer
            ),
            DomainError::DropsBelowEggs { eggs, drops } => write!(
                f,
                "no leaf can run out of eggs: drops={drops} is below eggs={eggs}"
            ),
        }
    }
}

impl std::error::Error for DomainError {}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Count {
    if k < 0 || k as u64 > n {
        return Count::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut result = Count::one();
    for i in 0..k {
        result *= n - i;
        result /= i + 1;
    }
    result
}

/// Maximum height solvable with `eggs` standard eggs in `drops` drops:
/// the sum of `C(drops, i)` for `i = 1..=eggs`.
pub fn max_height_standard(eggs: u32, drops: u32) -> Count {
    assert!(eggs >= 1, "height queries need at least one egg");
    let mut total = Count::zero();
    for i in 1..=eggs.min(drops) {
        total += binomial(drops as u64, i as i64);
    }
    total
}

/// The `index`-th k-bonacci number of the given order: zeros up to index
/// `order - 2`, a one at `order - 1`, then each value is the sum of the
/// previous `order` values.
pub fn kbonacci(order: u32, index: u64) -> Count {
    assert!(order >= 1, "k-bonacci order must be at least 1");
    let head = (order - 1) as u64;
    if index < head {
        return Count::zero();
    }
    if index == head {
        return Count::one();
    }
    // Sliding window over the last `order` values with a running sum, so a
    // single query costs O(index) big-integer additions.
    let mut window: VecDeque<Count> = VecDeque::with_capacity(order as usize);
    for i in 0..order as u64 {
        window.push_back(if i == head { Count::one() } else { Count::zero() });
    }
    let mut sum = Count::one();
    let mut newest = Count::one();
    for _ in order as u64..=index {
        newest = sum.clone();
        sum += &newest;
        let oldest = window.pop_front().expect("window is never empty");
        sum -= &oldest;
        window.push_back(newest.clone());
    }
    newest
}

/// Number of binary words of length `len` with no run of `run` consecutive
/// zeros. Equals the k-bonacci number of order `run` at index `len + run`.
pub fn count_words_no_zero_run(run: u32, len: u64) -> Count {
    assert!(run >= 1, "the forbidden run must have positive length");
    kbonacci(run, len + run as u64)
}

/// Sum of the k-bonacci numbers of the given order from index 0 through
/// `upper` inclusive.
pub fn kbonacci_partial_sum(order: u32, upper: u64) -> Count {
    assert!(order >= 1, "k-bonacci order must be at least 1");
    let head = (order - 1) as u64;
    let mut window: VecDeque<Count> = VecDeque::new();
    let mut sum = Count::zero();
    let mut total = Count::zero();
    for i in 0..=upper {
        let value = if i < head {
            Count::zero()
        } else if i == head {
            Count::one()
        } else {
            sum.clone()
        };
        total += &value;
        sum += &value;
        if window.len() == order as usize {
            let oldest = window.pop_front().expect("window is full");
            sum -= &oldest;
        }
        window.push_back(value);
    }
    total
}

/// Maximum height solvable with `eggs` replacement eggs in `drops` drops.
///
/// Evaluates the alternating sum
/// `-1 + sum_i (-1)^i C(d - i*k, i) 2^(d - i*(k+1))` over signed exact
/// integers; the result is checked non-negative before returning.
pub fn max_height_replacement(eggs: u32, drops: u32) -> Count {
    assert!(eggs >= 1, "height queries need at least one egg");
    let k = eggs as u64;
    let d = drops as u64;
    let mut total = BigInt::from(-1);
    for i in 0..=d / (k + 1) {
        let term = BigInt::from(binomial(d - i * k, i as i64)) << (d - i * (k + 1));
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
        .to_biguint()
        .expect("replacement height is non-negative")
}

/// Number of arrangements of `plus` plus-ones and `minus` minus-ones whose
/// every partial sum stays strictly above `-buffer`.
///
/// Requires `minus <= plus + buffer`; beyond that bound no arrangement can
/// avoid dipping to `-buffer`.
pub fn ballot_count(buffer: u64, plus: u64, minus: u64) -> Result<Count, DomainError> {
    if minus > plus + buffer {
        return Err(DomainError::BallotImbalance { buffer, plus, minus });
    }
    if buffer == 0 {
        // Partial sums must stay strictly positive, so the first element is
        // forced to be a plus-one; the reflection formula below does not
        // cover this edge because the walk starts on the barrier.
        if plus == 0 {
            return Ok(Count::one()); // minus <= plus + 0 forces the empty sequence
        }
        return ballot_count(1, plus - 1, minus);
    }
    let total = plus + minus;
    if minus < buffer {
        Ok(binomial(total, minus as i64))
    } else {
        Ok(binomial(total, minus as i64) - binomial(total, (minus - buffer) as i64))
    }
}

/// Leaves of the maximal bonus-egg tree of depth `drops` that finish with no
/// eggs remaining.
///
/// Each per-depth summand is computed in its binomial-difference form and
/// cross-checked against the exact division `k * C(2m+k, m) / (2m+k)`.
pub fn bonus_dead_leaves(eggs: u32, drops: u32) -> Result<Count, DomainError> {
    assert!(eggs >= 1, "height queries need at least one egg");
    if drops < eggs {
        return Err(DomainError::DropsBelowEggs { eggs, drops });
    }
    let k = eggs as u64;
    let alpha = (drops as u64 - k) / 2;
    let mut total = Count::zero();
    for m in 0..=alpha {
        let diff = binomial(2 * m + k - 1, (m + k - 1) as i64)
            - binomial(2 * m + k - 1, m as i64 - 1);
        let product = binomial(2 * m + k, m as i64) * k;
        let divisor = Count::from(2 * m + k);
        let quotient = &product / &divisor;
        assert!(
            &quotient * &divisor == product && quotient == diff,
            "dead-leaf summand mismatch at m={m}"
        );
        total += diff;
    }
    Ok(total)
}

/// Leaves of the maximal bonus-egg tree of depth `drops` that still hold
/// eggs: the sum of `C(drops, n)` for `n` in a window of width `eggs`
/// starting at `floor((drops - eggs + 1) / 2)`.
pub fn bonus_live_leaves(eggs: u32, drops: u32) -> Result<Count, DomainError> {
    assert!(eggs >= 1, "height queries need at least one egg");
    if drops < eggs {
        return Err(DomainError::DropsBelowEggs { eggs, drops });
    }
    let k = eggs as u64;
    let d = drops as u64;
    let beta = (d - k).div_ceil(2);
    let mut total = Count::zero();
    for n in beta..beta + k {
        total += binomial(d, n as i64);
    }
    Ok(total)
}

/// Maximum height solvable with `eggs` bonus eggs in `drops` drops:
/// `2^d - 1` while the supply cannot be exhausted, otherwise dead leaves
/// minus one plus live leaves.
pub fn max_height_bonus(eggs: u32, drops: u32) -> Count {
    assert!(eggs >= 1, "height queries need at least one egg");
    if drops < eggs {
        return (Count::one() << drops) - Count::one();
    }
    let dead = bonus_dead_leaves(eggs, drops).expect("drops >= eggs");
    let live = bonus_live_leaves(eggs, drops).expect("drops >= eggs");
    dead - Count::one() + live
}

/// Maximum building height whose threshold can always be identified with
/// `eggs` eggs and `drops` drops under the given variant.
///
/// The three named variants use their closed forms; `General` variants have
/// no closed form and are delegated to the dynamic-programming oracle.
pub fn max_height(variant: Variant, eggs: u32, drops: u32) -> Count {
    assert!(eggs >= 1, "height queries need at least one egg");
    match variant {
        Variant::Standard => max_height_standard(eggs, drops),
        Variant::Replacement => max_height_replacement(eggs, drops),
        Variant::Bonus => max_height_bonus(eggs, drops),
        Variant::General { .. } => {
            let limits = oracle::Limits::covering(eggs, drops);
            oracle::dp_max_height(variant, eggs, drops, &limits)
                .expect("limits were sized to the query")
        }
    }
}

/// Smallest drop budget guaranteed to identify the threshold of a building
/// with `floors` floors.
///
/// Scans upward from one drop; `max_height` is strictly increasing in the
/// budget, so the scan terminates after at most `floors` steps. A building
/// with no floors needs no drops, even with no eggs.
pub fn min_drops(variant: Variant, eggs: u32, floors: u64) -> u32 {
    if floors == 0 {
        return 0;
    }
    assert!(eggs >= 1, "height queries need at least one egg");
    let target = Count::from(floors);
    let mut drops = 0u32;
    loop {
        drops += 1;
        if max_height(variant, eggs, drops) >= target {
            return drops;
        }
    }
}
