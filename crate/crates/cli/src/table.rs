//! Row-oriented result tables rendered as CSV, JSON or plain text.

use num_rational::Rational64;
use ringbuckle::report;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    /// An exact value, shown as a decimal with the fraction alongside.
    Exact(Rational64),
    Int(u64),
    Text(String),
    Missing,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Num(x) => report::format_sig(*x),
            Cell::Exact(q) => report::format_fraction(*q),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => Number::from_f64(report::round_sig(*x)).map_or(Value::Null, Value::Number),
            Cell::Exact(q) => Value::String(report::format_fraction(*q)),
            Cell::Int(n) => Value::from(*n),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Missing => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Num)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn text_rows(&self, missing: &str) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| match c {
                        Cell::Missing => missing.to_string(),
                        other => other.text(),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn render(&self, format: Format) -> ringbuckle::Result<String> {
        match format {
            Format::Csv => report::to_csv(&self.header, &self.text_rows("")),
            Format::Table => Ok(report::to_table(&self.header, &self.text_rows("-"))),
            Format::Json => {
                let records: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let map: Map<String, Value> = self.header.iter().zip(r).map(|(k, c)| (k.to_string(), c.json())).collect();
                        Value::Object(map)
                    })
                    .collect();
                report::to_json(&records)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["load", "lambda", "fraction", "naive"]);
        t.push(vec![
            "central".into(),
            Cell::Num(4.5),
            Cell::Exact(Rational64::new(9, 2)),
            Cell::Missing,
        ]);
        t
    }

    #[test]
    fn renders_every_format() {
        let t = sample();
        assert_eq!(t.render(Format::Csv).unwrap(), "load,lambda,fraction,naive\ncentral,4.5,9/2,\n");
        let json = t.render(Format::Json).unwrap();
        assert!(json.contains("\"lambda\": 4.5") && json.contains("\"naive\": null"));
        assert!(json.find("load").unwrap() < json.find("lambda").unwrap());
        assert!(t.render(Format::Table).unwrap().lines().nth(2).unwrap().ends_with('-'));
    }
}
