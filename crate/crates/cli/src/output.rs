use anyon_data::linalg::CMat;
use serde_json::Value;

use crate::error::CliError;
use crate::Format;

/// A command result in every format it supports.
pub struct Output {
    pub json: Value,
    pub csv: Option<String>,
    pub pretty: String,
    /// Set when a verification failed; the exit code becomes 1.
    pub failed: bool,
}

impl Output {
    pub fn new(json: Value, csv: Option<String>, pretty: String) -> Self {
        Output { json, csv, pretty, failed: false }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(self.json.to_string()),
            Format::Pretty => Ok(self.pretty.clone()),
            Format::Csv => self.csv.clone().ok_or_else(|| CliError::usage("this command has no CSV form")),
        }
    }
}

/// One row per line, entries as re+im i with 17 significant digits.
pub fn matrix_text(m: &CMat) -> String {
    let mut s = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{:+.16e}{:+.16e}i", m[(i, j)].re, m[(i, j)].im)).collect();
        s.push_str(&row.join("  "));
        s.push('\n');
    }
    s
}

/// Long-form matrix table with columns row, col, re, im.
pub fn matrix_csv(m: &CMat) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["row", "col", "re", "im"])?;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            w.write_record([i.to_string(), j.to_string(), format!("{:e}", m[(i, j)].re), format!("{:e}", m[(i, j)].im)])?;
        }
    }
    into_string(w)
}

pub fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
