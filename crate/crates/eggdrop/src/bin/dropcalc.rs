//! Command-line front end: tables, height and drop-count queries, tree
//! emission, verification, normalization, an interactive walkthrough, and
//! the self-test grid.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use eggdrop::combinatorics::{max_height, min_drops};
use eggdrop::io::{export_dot, export_json, import_json, import_raw_json};
use eggdrop::nonredundancy::{count_redundant_inner, make_nonredundant, worst_case_drops, RawTree};
use eggdrop::oracle::{exhaustive_verify, Limits};
use eggdrop::selftest::{self, Scale};
use eggdrop::table::{compute_tables, render_tables, OutputFormat, TableRequest};
use eggdrop::tree::{build_strategy_tree, validate};
use eggdrop::variant::Variant;
use eggdrop::walkthrough;

// Exit codes: 2 usage (also used by argument parsing), 3 I/O,
// 4 invalid or failing input data, 5 self-test failure.
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_VALIDATION: u8 = 4;
const EXIT_SELFTEST: u8 = 5;

const MAX_TREE_FLOORS: u64 = 1_000_000;
const MAX_EMIT_DEPTH: u32 = 500;

#[derive(Parser)]
#[command(
    name = "dropcalc",
    version,
    about = "Exact answers and optimal strategies for egg-drop experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print maximum-height tables (defaults reproduce the classic grid)
    Table {
        /// Comma-separated variants: standard, replacement, bonus, general:LOSS,GAIN
        #[arg(long, value_delimiter = ',', default_values = ["standard", "replacement", "bonus"])]
        variant: Vec<Variant>,
        /// Comma-separated starting egg counts
        #[arg(long, value_delimiter = ',', default_values = ["2", "3", "4"])]
        eggs: Vec<u32>,
        /// Largest drop budget (columns run from 1 to this)
        #[arg(long, default_value_t = 8)]
        drops: u32,
        /// Output format: plain, markdown, csv or json
        #[arg(long, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum building height for a variant, egg count and drop budget
    Height {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        eggs: u32,
        #[arg(long)]
        drops: u32,
    },
    /// Minimum drops guaranteed to work for a building of the given height
    Mindrops {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        eggs: u32,
        #[arg(long)]
        floors: u64,
    },
    /// Emit the optimal strategy tree as JSON or DOT
    Tree {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        eggs: u32,
        #[arg(long)]
        floors: u64,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Interactive drop-by-drop session
    Walkthrough {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        eggs: u32,
        #[arg(long)]
        floors: u64,
    },
    /// Validate a tree file and replay it against every threshold
    Verify {
        /// Tree JSON file
        file: PathBuf,
    },
    /// Normalize a possibly redundant tree file
    Normalize {
        /// Raw tree JSON file
        file: PathBuf,
        /// Write the normalized tree here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property grid and exit nonzero on any mismatch
    Selftest {
        #[arg(long, default_value_t = Scale::Default)]
        scale: Scale,
        /// Seed for the randomized normalization batch
        #[arg(long, default_value_t = 20240901)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn usage(message: String) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn invalid(message: String) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_VALIDATION)
}

fn write_out(out: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn check_query(eggs: u32, floors: Option<u64>) -> Result<(), String> {
    if eggs == 0 {
        return Err("at least one egg is required".to_string());
    }
    if let Some(floors) = floors {
        if floors == 0 {
            return Err("the building needs at least one floor".to_string());
        }
        if floors > MAX_TREE_FLOORS {
            return Err(format!(
                "floors={floors} is above the tree limit {MAX_TREE_FLOORS}"
            ));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> io::Result<ExitCode> {
    match cli.command {
        Command::Table {
            variant,
            eggs,
            drops,
            format,
            out,
        } => {
            if eggs.contains(&0) || eggs.is_empty() || variant.is_empty() || drops == 0 {
                return Ok(usage("table needs eggs >= 1, drops >= 1 and at least one variant".into()));
            }
            let request = TableRequest {
                egg_counts: eggs,
                variants: variant,
                max_drops: drops,
            };
            let rendered = render_tables(&compute_tables(&request), format);
            write_out(out.as_ref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Height {
            variant,
            eggs,
            drops,
        } => {
            if let Err(message) = check_query(eggs, None) {
                return Ok(usage(message));
            }
            println!("{}", max_height(variant, eggs, drops));
            Ok(ExitCode::SUCCESS)
        }
        Command::Mindrops {
            variant,
            eggs,
            floors,
        } => {
            if eggs == 0 && floors > 0 {
                return Ok(usage("at least one egg is required".into()));
            }
            println!("{}", min_drops(variant, eggs, floors));
            Ok(ExitCode::SUCCESS)
        }
        Command::Tree {
            variant,
            eggs,
            floors,
            format,
            out,
        } => {
            if let Err(message) = check_query(eggs, Some(floors)) {
                return Ok(usage(message));
            }
            let depth = min_drops(variant, eggs, floors);
            if depth > MAX_EMIT_DEPTH {
                return Ok(usage(format!(
                    "tree depth {depth} is above the emission limit {MAX_EMIT_DEPTH}"
                )));
            }
            let tree = build_strategy_tree(variant, eggs, floors);
            let rendered = match format {
                TreeFormat::Json => export_json(&tree),
                TreeFormat::Dot => export_dot(&tree),
            };
            write_out(out.as_ref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Walkthrough {
            variant,
            eggs,
            floors,
        } => {
            if let Err(message) = check_query(eggs, Some(floors)) {
                return Ok(usage(message));
            }
            let tree = build_strategy_tree(variant, eggs, floors);
            let stdin = io::stdin();
            let stdout = io::stdout();
            walkthrough::run(&tree, stdin.lock(), stdout.lock())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(&file)?;
            let tree = match import_json(&text) {
                Ok(tree) => tree,
                Err(error) => return Ok(invalid(error.to_string())),
            };
            println!(
                "tree: variant={} eggs={} floors={} depth={}",
                tree.variant, tree.initial_eggs, tree.floors, tree.depth
            );
            let violations = validate(&tree);
            if violations.is_empty() {
                println!("invariants: ok");
            } else {
                for violation in &violations {
                    println!("invariant violated: {violation}");
                }
            }
            let report = match exhaustive_verify(&tree, &Limits::default()) {
                Ok(report) => report,
                Err(error) => return Ok(invalid(error.to_string())),
            };
            println!("worst drops: {}", report.worst_drops);
            for failure in report.failures.iter().take(10) {
                println!("failure: {}", failure.error);
            }
            if report.failures.len() > 10 {
                println!("... and {} more failures", report.failures.len() - 10);
            }
            if report.ok && violations.is_empty() {
                println!("result: ok");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("result: FAIL");
                Ok(ExitCode::from(EXIT_VALIDATION))
            }
        }
        Command::Normalize { file, out } => {
            let text = fs::read_to_string(&file)?;
            let raw = match import_raw_json(&text) {
                Ok(raw) => raw,
                Err(error) => return Ok(invalid(error.to_string())),
            };
            let before_worst = match worst_case_drops(&raw) {
                Ok(worst) => worst,
                Err(error) => return Ok(invalid(format!("input does not solve its problem: {error}"))),
            };
            let before_redundant = count_redundant_inner(&raw);
            let normalized = match make_nonredundant(&raw) {
                Ok(tree) => tree,
                Err(error) => return Ok(invalid(error.to_string())),
            };
            let after_redundant = count_redundant_inner(&RawTree::from(&normalized));
            eprintln!(
                "input:  floors={} worst drops={} redundant inner nodes={}",
                raw.floors, before_worst, before_redundant
            );
            eprintln!(
                "output: floors={} worst drops={} redundant inner nodes={}",
                normalized.floors, normalized.depth, after_redundant
            );
            write_out(out.as_ref(), &export_json(&normalized))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { scale, seed } => {
            let stdout = io::stdout();
            let ok = selftest::run(scale, seed, &mut stdout.lock())?;
            if ok {
                println!("selftest: pass");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("selftest: FAIL");
                Ok(ExitCode::from(EXIT_SELFTEST))
            }
        }
    }
}
