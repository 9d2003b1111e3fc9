//! Egg-supply rulesets.
//!
//! A variant fixes what happens to the egg supply after each drop: the
//! dropped egg is always lost on a break, and a successful drop may leave
//! the supply unchanged, restore it, or grow it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Egg-supply ruleset for an egg-drop experiment.
///
/// `General { loss, gain }` covers any rule that loses a constant number of
/// eggs on failure and gains a constant number on success. `Standard` and
/// `Bonus` coincide with `General(1, 0)` and `General(1, 1)`; `Replacement`
/// does not fit the general form because success resets the supply to the
/// initial count instead of adding a constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// You break it, you lose it; nothing is replenished.
    Standard,
    /// A successful drop restores the supply to the initial count.
    Replacement,
    /// A successful drop adds one egg to the supply.
    Bonus,
    /// Lose `loss` eggs on failure (at least 1), gain `gain` on success.
    General { loss: u32, gain: u32 },
}

impl Variant {
    /// Eggs held by the left (failure) child of a node holding `parent` eggs.
    ///
    /// Saturates at zero: a position that cannot afford the loss can only be
    /// a leaf anyway.
    pub fn left_child_eggs(self, parent: u32) -> u32 {
        match self {
            Variant::Standard | Variant::Replacement | Variant::Bonus => parent.saturating_sub(1),
            Variant::General { loss, .. } => parent.saturating_sub(loss),
        }
    }

    /// Eggs held by the right (success) child of a node holding `parent`
    /// eggs, in a tree whose root started with `initial` eggs.
    pub fn right_child_eggs(self, parent: u32, initial: u32) -> u32 {
        match self {
            Variant::Standard => parent,
            Variant::Replacement => initial,
            Variant::Bonus => parent + 1,
            Variant::General { gain, .. } => parent + gain,
        }
    }

    /// Whether the maximum height is computed by a closed form rather than
    /// the dynamic-programming oracle.
    pub fn has_closed_form(self) -> bool {
        !matches!(self, Variant::General { .. })
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Standard => write!(f, "Standard"),
            Variant::Replacement => write!(f, "Replacement"),
            Variant::Bonus => write!(f, "Bonus"),
            Variant::General { loss, gain } => write!(f, "General({loss},{gain})"),
        }
    }
}

/// Error parsing a variant name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseVariantError(String);

impl fmt::Display for ParseVariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown variant {:?} (expected standard, replacement, bonus, or general:LOSS,GAIN)",
            self.0
        )
    }
}

impl std::error::Error for ParseVariantError {}

impl FromStr for Variant {
    type Err = ParseVariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "standard" => return Ok(Variant::Standard),
            "replacement" => return Ok(Variant::Replacement),
            "bonus" => return Ok(Variant::Bonus),
            _ => {}
        }
        let rest = lower
            .strip_prefix("general:")
            .or_else(|| lower.strip_prefix("general(").and_then(|r| r.strip_suffix(')')));
        if let Some(rest) = rest {
            let mut parts = rest.splitn(2, ',');
            let loss = parts.next().and_then(|p| p.trim().parse::<u32>().ok());
            let gain = parts.next().and_then(|p| p.trim().parse::<u32>().ok());
            if let (Some(loss), Some(gain)) = (loss, gain) {
                if loss >= 1 {
                    return Ok(Variant::General { loss, gain });
                }
            }
        }
        Err(ParseVariantError(s.to_string()))
    }
}
