//! Maximum-height tables: one table per starting egg count, one row per
//! variant, one column per drop budget.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::{max_height, Count};
use crate::variant::Variant;

/// Rendering target for tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Markdown,
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Markdown => "markdown",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        };
        f.write_str(name)
    }
}

/// Error parsing an output format name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFormatError(String);

impl fmt::Display for ParseFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown format {:?} (expected plain, markdown, csv, or json)",
            self.0
        )
    }
}

impl std::error::Error for ParseFormatError {}

impl FromStr for OutputFormat {
    type Err = ParseFormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "plain" | "text" | "txt" => Ok(OutputFormat::Plain),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(ParseFormatError(other.to_string())),
        }
    }
}

/// What to tabulate. The default reproduces the classic reference table:
/// two through four eggs, all three named variants, budgets one through
/// eight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRequest {
    pub egg_counts: Vec<u32>,
    pub variants: Vec<Variant>,
    pub max_drops: u32,
}

impl Default for TableRequest {
    fn default() -> Self {
        TableRequest {
            egg_counts: vec![2, 3, 4],
            variants: vec![Variant::Standard, Variant::Replacement, Variant::Bonus],
            max_drops: 8,
        }
    }
}

/// One row: a variant and its heights for budgets `1..=max_drops`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub variant: Variant,
    pub heights: Vec<Count>,
}

impl TableRow {
    fn label(&self) -> String {
        if self.variant.has_closed_form() {
            self.variant.to_string()
        } else {
            format!("{} (oracle)", self.variant)
        }
    }

    fn source(&self) -> &'static str {
        if self.variant.has_closed_form() {
            "closed_form"
        } else {
            "oracle"
        }
    }
}

/// All rows for one starting egg count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggTable {
    pub eggs: u32,
    pub rows: Vec<TableRow>,
}

/// Evaluate every cell of the request.
pub fn compute_tables(request: &TableRequest) -> Vec<EggTable> {
    request
        .egg_counts
        .iter()
        .map(|&eggs| EggTable {
            eggs,
            rows: request
                .variants
                .iter()
                .map(|&variant| TableRow {
                    variant,
                    heights: (1..=request.max_drops)
                        .map(|drops| max_height(variant, eggs, drops))
                        .collect(),
                })
                .collect(),
        })
        .collect()
}

/// Render tables in the requested format. Output always ends in a newline.
pub fn render_tables(tables: &[EggTable], format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => render_plain(tables),
        OutputFormat::Markdown => render_markdown(tables),
        OutputFormat::Csv => render_csv(tables),
        OutputFormat::Json => render_json(tables),
    }
}

fn render_plain(tables: &[EggTable]) -> String {
    let mut out = String::new();
    for (i, table) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let drops = table.rows.first().map_or(0, |r| r.heights.len());
        let label_width = table
            .rows
            .iter()
            .map(|r| r.label().len())
            .chain(["Drops".len()])
            .max()
            .unwrap_or(0);
        let mut col_widths = vec![0usize; drops];
        for (j, width) in col_widths.iter_mut().enumerate() {
            *width = (j + 1).to_string().len();
            for row in &table.rows {
                *width = (*width).max(row.heights[j].to_string().len());
            }
        }
        out.push_str(&format!("Eggs: {}\n", table.eggs));
        out.push_str(&format!("{:<label_width$}", "Drops"));
        for (j, width) in col_widths.iter().enumerate() {
            out.push_str(&format!("  {:>width$}", j + 1));
        }
        out.push('\n');
        for row in &table.rows {
            out.push_str(&format!("{:<label_width$}", row.label()));
            for (j, width) in col_widths.iter().enumerate() {
                out.push_str(&format!("  {:>width$}", row.heights[j].to_string()));
            }
            out.push('\n');
        }
    }
    out
}

fn render_markdown(tables: &[EggTable]) -> String {
    let mut out = String::new();
    for (i, table) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let drops = table.rows.first().map_or(0, |r| r.heights.len());
        out.push_str(&format!("### Eggs: {}\n\n", table.eggs));
        out.push_str("| Variant |");
        for j in 1..=drops {
            out.push_str(&format!(" {j} |"));
        }
        out.push_str("\n| --- |");
        for _ in 0..drops {
            out.push_str(" ---: |");
        }
        out.push('\n');
        for row in &table.rows {
            out.push_str(&format!("| {} |", row.label()));
            for height in &row.heights {
                out.push_str(&format!(" {height} |"));
            }
            out.push('\n');
        }
    }
    out
}

fn render_csv(tables: &[EggTable]) -> String {
    let drops = tables
        .first()
        .and_then(|t| t.rows.first())
        .map_or(0, |r| r.heights.len());
    let mut out = String::from("eggs,variant,source");
    for j in 1..=drops {
        out.push_str(&format!(",{j}"));
    }
    out.push('\n');
    for table in tables {
        for row in &table.rows {
            out.push_str(&format!("{},{},{}", table.eggs, row.variant, row.source()));
            for height in &row.heights {
                out.push_str(&format!(",{height}"));
            }
            out.push('\n');
        }
    }
    out
}

#[derive(Serialize)]
struct JsonRow {
    variant: String,
    source: &'static str,
    heights: Vec<String>,
}

#[derive(Serialize)]
struct JsonTable {
    eggs: u32,
    rows: Vec<JsonRow>,
}

#[derive(Serialize)]
struct JsonDocument {
    tables: Vec<JsonTable>,
}

fn render_json(tables: &[EggTable]) -> String {
    let document = JsonDocument {
        tables: tables
            .iter()
            .map(|table| JsonTable {
                eggs: table.eggs,
                rows: table
                    .rows
                    .iter()
                    .map(|row| JsonRow {
                        variant: row.variant.to_string(),
                        source: row.source(),
                        heights: row.heights.iter().map(|h| h.to_string()).collect(),
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&document).expect("tables always serialize");
    text.push('\n');
    text
}
