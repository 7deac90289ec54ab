use std::io::{Read, Write};

use serde_json::{Map, Value};

use crate::args::Format;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Missing,
}

impl Cell {
    /// 17 significant digits, enough to recover the f64 exactly.
    pub fn render(&self) -> String {
        match self {
            Cell::Num(x) => format_num(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Int(n) => Value::from(*n),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Missing => Value::Null,
        }
    }
}

pub fn format_num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, w: W) -> CliResult<()> {
        let mut wr = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
        let wrap = |e: csv::Error| CliError::Io { path: None, source: e.into() };
        wr.write_record(&self.header).map_err(wrap)?;
        for r in &self.rows {
            wr.write_record(r.iter().map(Cell::render)).map_err(wrap)?;
        }
        wr.flush().map_err(|e| CliError::Io { path: None, source: e })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let m: Map<String, Value> = self.header.iter().cloned().zip(r.iter().map(Cell::json)).collect();
                    Value::Object(m)
                })
                .collect(),
        )
    }

    pub fn write<W: Write>(&self, format: Format, mut w: W) -> CliResult<()> {
        match format {
            Format::Csv => self.write_csv(w),
            Format::Json => {
                serde_json::to_writer_pretty(&mut w, &self.to_json()).map_err(|e| CliError::Io { path: None, source: e.into() })?;
                writeln!(w).map_err(|e| CliError::Io { path: None, source: e })
            }
        }
    }
}

/// Raw CSV as written by [`Table::write_csv`]: header plus string cells.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvData {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvData {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// Numeric column; empty cells read as NaN.
    pub fn f64_column(&self, name: &str) -> CliResult<Vec<f64>> {
        let i = self.column(name).ok_or_else(|| CliError::Usage(format!("no column {name}")))?;
        self.rows
            .iter()
            .map(|r| {
                if r[i].is_empty() {
                    return Ok(f64::NAN);
                }
                r[i].parse::<f64>().map_err(|e| CliError::Usage(format!("column {name}: {:?}: {e}", r[i])))
            })
            .collect()
    }
}

pub fn read_csv<R: Read>(r: R) -> CliResult<CsvData> {
    let wrap = |e: csv::Error| CliError::Io { path: None, source: e.into() };
    let mut rd = csv::Reader::from_reader(r);
    let header = rd.headers().map_err(wrap)?.iter().map(String::from).collect();
    let rows = rd
        .records()
        .map(|rec| rec.map(|r| r.iter().map(String::from).collect()).map_err(wrap))
        .collect::<CliResult<_>>()?;
    Ok(CsvData { header, rows })
}
