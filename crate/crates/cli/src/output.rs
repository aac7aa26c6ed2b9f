use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Tsv,
    Json,
    Csv,
}

/// One table cell. Floats print with 4 decimals in TSV and in full
/// (shortest round-trip) precision in CSV.
#[derive(Debug, Clone)]
pub enum Cell {
    Int(u64),
    Num(Option<f64>),
    Text(String),
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(Some(v))
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        Cell::Num(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(if v { "true" } else { "false" }.into())
    }
}

impl Cell {
    fn tsv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(Some(v)) => format!("{v:.4}"),
            Cell::Num(None) => "NA".into(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(Some(v)) => v.to_string(),
            Cell::Num(None) => String::new(),
            Cell::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: &'static str,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &'static str, header: &[&str]) -> Self {
        Table { name, header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// Everything a subcommand prints: provenance, tables for the text formats
/// and a JSON value for `--format json`.
pub struct Document {
    pub meta: Value,
    pub tables: Vec<Table>,
    pub json: Value,
}

impl Document {
    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Json => {
                let doc = serde_json::json!({ "meta": self.meta, "result": self.json });
                Ok(serde_json::to_string_pretty(&doc)? + "\n")
            }
            Format::Tsv => Ok(self.render_text(|c| c.tsv(), |cells| cells.join("\t"))),
            Format::Csv => Ok(self.render_text(|c| c.csv(), |cells| csv_line(&cells))),
        }
    }

    fn render_text(
        &self,
        cell: impl Fn(&Cell) -> String,
        line: impl Fn(Vec<String>) -> String,
    ) -> String {
        let mut out = meta_comment(&self.meta);
        for table in &self.tables {
            let _ = writeln!(out, "# table: {}", table.name);
            let _ = writeln!(out, "{}", line(table.header.clone()));
            for row in &table.rows {
                let _ = writeln!(out, "{}", line(row.iter().map(&cell).collect()));
            }
        }
        out
    }
}

fn csv_line(cells: &[String]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(cells).expect("in-memory write");
    let mut s = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells");
    s.pop();
    s
}

/// Provenance as `#` lines, one per top-level meta field.
pub fn meta_comment(meta: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = meta {
        for (k, v) in map {
            let _ = writeln!(out, "# {k}: {}", serde_json::to_string(v).unwrap_or_default());
        }
    }
    out
}
