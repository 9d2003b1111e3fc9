//! Interactive drop-by-drop session: the tree picks the floor, the user
//! reports whether the egg broke.

use std::io::{self, BufRead, Write};

use crate::tree::{DecisionTree, Node};

/// Result of a completed walkthrough.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkOutcome {
    pub strength: u64,
    pub drops: u32,
}

/// Drive a session over arbitrary input/output streams.
///
/// Prompts for each drop and accepts `b` (the egg breaks), `s` (it
/// survives) or `q` (quit). Unrecognized input re-prompts. Returns `None`
/// when the user quits or the input ends before a leaf is reached.
pub fn run<R: BufRead, W: Write>(
    tree: &DecisionTree,
    mut input: R,
    mut output: W,
) -> io::Result<Option<WalkOutcome>> {
    let mut node = &tree.root;
    let mut drops = 0u32;
    loop {
        match node {
            Node::Leaf { solution } => {
                writeln!(output, "strength = {solution}")?;
                writeln!(output, "drops = {drops}")?;
                return Ok(Some(WalkOutcome {
                    strength: *solution,
                    drops,
                }));
            }
            Node::Inner {
                floor,
                eggs,
                left,
                right,
            } => {
                write!(
                    output,
                    "drop {} from floor {floor} (eggs: {eggs}) [b/s/q]: ",
                    drops + 1
                )?;
                output.flush()?;
                let mut line = String::new();
                if input.read_line(&mut line)? == 0 {
                    writeln!(output)?;
                    return Ok(None);
                }
                match line.trim().to_ascii_lowercase().as_str() {
                    "b" | "break" | "breaks" => {
                        drops += 1;
                        node = left;
                    }
                    "s" | "survive" | "survives" => {
                        drops += 1;
                        node = right;
                    }
                    "q" | "quit" => return Ok(None),
                    _ => {
                        writeln!(output, "please answer b (break), s (survive) or q (quit)")?;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::build_strategy_tree;
    use crate::variant::Variant;
    use std::io::Cursor;

    fn session(inputs: &str) -> (Option<WalkOutcome>, String) {
        let tree = build_strategy_tree(Variant::Standard, 2, 10);
        let mut output = Vec::new();
        let outcome = run(&tree, Cursor::new(inputs), &mut output).unwrap();
        (outcome, String::from_utf8(output).unwrap())
    }

    #[test]
    fn survive_then_two_breaks_finds_four() {
        let (outcome, transcript) = session("s\nb\nb\n");
        assert_eq!(
            outcome,
            Some(WalkOutcome {
                strength: 4,
                drops: 3
            })
        );
        assert!(transcript.contains("drop 1 from floor 4"));
        assert!(transcript.contains("strength = 4"));
    }

    #[test]
    fn two_breaks_find_zero() {
        let (outcome, transcript) = session("b\nb\n");
        assert_eq!(
            outcome,
            Some(WalkOutcome {
                strength: 0,
                drops: 2
            })
        );
        assert!(transcript.contains("strength = 0"));
    }

    #[test]
    fn quitting_yields_no_result() {
        let (outcome, _) = session("q\n");
        assert_eq!(outcome, None);
        let (outcome, _) = session("");
        assert_eq!(outcome, None);
    }

    #[test]
    fn garbage_reprompts() {
        let (outcome, transcript) = session("banana\nb\nb\n");
        assert_eq!(outcome.map(|o| o.strength), Some(0));
        assert!(transcript.contains("please answer"));
    }
}
