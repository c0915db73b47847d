//! Number formatting and CSV/JSON writers shared by the CLI.

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Rounds to 12 significant digits and prints the shortest decimal form.
pub fn format_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    let s = if (1e-4..1e12).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// `9/2`, or `4` for integers.
pub fn format_fraction(q: Rational64) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Rounds to 12 significant digits, for embedding in JSON numbers.
pub fn round_sig(x: f64) -> f64 {
    if x.is_finite() && x != 0.0 {
        format!("{x:.11e}").parse().unwrap_or(x)
    } else {
        x
    }
}

pub fn serialize_rational<S: Serializer>(q: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_fraction(*q))
}

/// Writes rows of string cells as CSV with a header row.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Serialize(e.to_string());
    w.write_record(header).map_err(err)?;
    for row in rows {
        w.write_record(row).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
}

/// Pretty-printed JSON of any serializable value, newline terminated.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Serialize(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Left-aligned plain-text table.
pub fn to_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&rule.join("  "));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(4.5), "4.5");
        assert_eq!(format_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_sig(64.0 / 7.0), "9.14285714286");
        assert_eq!(format_sig(-0.0), "0");
        assert_eq!(format_sig(-1.7763568394e-15), "-1.7763568394e-15");
        assert_eq!(format_sig(3.0000000000000004), "3");
    }

    #[test]
    fn fractions() {
        assert_eq!(format_fraction(Rational64::new(9, 2)), "9/2");
        assert_eq!(format_fraction(Rational64::new(8, 2)), "4");
    }

    #[test]
    fn csv_and_table() {
        let rows = vec![vec!["d".to_string(), "4".to_string()]];
        assert_eq!(to_csv(&["load", "lambda"], &rows).unwrap(), "load,lambda\nd,4\n");
        let t = to_table(&["load", "lambda"], &rows);
        assert_eq!(t, "load  lambda\n----  ------\nd     4\n");
    }
}
