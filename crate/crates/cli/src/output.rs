use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
pub struct OutputRecord<'a> {
    pub schema_version: &'static str,
    pub command: &'a str,
    pub settings: &'a BTreeMap<String, Value>,
    pub payload: &'a Value,
}

/// Rows for the text and CSV renderings.
#[derive(Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Left-aligned columns separated by two spaces.
    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let last = row.len() - 1;
            for (i, cell) in row.iter().enumerate() {
                if i == last {
                    out.push_str(cell);
                } else {
                    let _ = write!(out, "{:width$}  ", cell, width = widths[i]);
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Everything a command produced, before choosing a format.
pub struct Report {
    pub command: &'static str,
    pub settings: BTreeMap<String, Value>,
    pub payload: Value,
    pub text: String,
    pub table: Table,
    /// False when a check failed or a counterexample turned up.
    pub ok: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            settings: BTreeMap::new(),
            payload: Value::Null,
            text: String::new(),
            table: Table::default(),
            ok: true,
        }
    }

    pub fn setting(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.settings.insert(key.to_string(), value.into());
        self
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Text => out.write_all(self.text.as_bytes()),
            Format::Json => {
                let record = OutputRecord {
                    schema_version: SCHEMA_VERSION,
                    command: self.command,
                    settings: &self.settings,
                    payload: &self.payload,
                };
                serde_json::to_writer_pretty(&mut *out, &record)?;
                out.write_all(b"\n")
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(&mut *out);
                w.write_record(&self.table.header)?;
                for row in &self.table.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let mut t = Table::new(&["class", "si"]);
        t.push(vec!["aB".into(), "1".into()]);
        t.push(vec!["aabab".into(), "2".into()]);
        assert_eq!(t.render(), "class  si\naB     1\naabab  2\n");
    }

    #[test]
    fn csv_uses_lf() {
        let mut r = Report::new("si");
        r.table = Table::new(&["a", "b"]);
        r.table.push(vec!["x,y".into(), "1".into()]);
        let mut buf = Vec::new();
        r.write(Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b\n\"x,y\",1\n");
    }
}
