//! Text forms of an [`InvariantTable`].

use crate::model::InvariantTable;
use crate::rational::format_rational;
use serde::Serialize;
use std::fmt::Write;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected markdown, csv or json)")),
        }
    }
}

pub fn render(table: &InvariantTable, format: Format) -> String {
    match format {
        Format::Markdown => markdown(table),
        Format::Csv => csv(table),
        Format::Json => json(table),
    }
}

fn title(table: &InvariantTable) -> String {
    let budget = table.budget();
    match table.class {
        Some(s) => format!("{}_{}(a,b,c;{s}), b = {budget} - a - 2c", table.family, table.d),
        None => format!("{}_{}(a,b,c), b = {budget} - a - 2c", table.family, table.d),
    }
}

/// Triangular grid: one row per `c` from the top down, one column per `a`.
/// A cell is blank when `a + 2c` exceeds the budget.
pub fn markdown(table: &InvariantTable) -> String {
    let budget = table.budget();
    let mut out = format!("{}\n\n| c \\ a |", title(table));
    for a in 0..=budget.max(0) {
        write!(out, " {a} |").unwrap();
    }
    out.push_str("\n|---|");
    for _ in 0..=budget.max(0) {
        out.push_str("---:|");
    }
    out.push('\n');
    for c in (0..=table.max_c()).rev() {
        write!(out, "| {c} |").unwrap();
        for a in 0..=budget {
            match table.get(a, c) {
                Some(v) if a + 2 * c <= budget => write!(out, " {} |", format_rational(v)).unwrap(),
                _ => out.push_str("  |"),
            }
        }
        out.push('\n');
    }
    out
}

fn rows(table: &InvariantTable) -> impl Iterator<Item = (i32, i32, i32, String)> + '_ {
    let budget = table.budget();
    (0..=table.max_c()).rev().flat_map(move |c| {
        (0..=budget - 2 * c).filter_map(move |a| {
            table.get(a, c).map(|v| (a, budget - a - 2 * c, c, format_rational(v)))
        })
    })
}

/// Long form `a,b,c,value`, rows by `c` descending then `a` ascending.
pub fn csv(table: &InvariantTable) -> String {
    let mut out = String::from("a,b,c,value\n");
    for (a, b, c, v) in rows(table) {
        writeln!(out, "{a},{b},{c},{v}").unwrap();
    }
    out
}

#[derive(Serialize)]
struct JsonCell {
    a: i32,
    b: i32,
    c: i32,
    value: String,
}

#[derive(Serialize)]
struct JsonTable {
    family: String,
    d: i32,
    class: Option<String>,
    entries: Vec<JsonCell>,
}

pub fn json(table: &InvariantTable) -> String {
    let doc = JsonTable {
        family: table.family.tag().to_string(),
        d: table.d,
        class: table.class.map(|s| s.name().to_string()),
        entries: rows(table).map(|(a, b, c, value)| JsonCell { a, b, c, value }).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("tables serialize");
    s.push('\n');
    s
}
