use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde_json::{json, Value};
use weylorb::{C64, Q};

use crate::args::Format;
use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Result of one command in all output formats it supports.
pub struct Report {
    pub command: &'static str,
    pub diagram: Option<String>,
    pub parameters: Value,
    pub plain: String,
    pub payload: Value,
    pub table: Option<Table>,
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Plain => Ok(self.plain.clone()),
            Format::Json => {
                let env = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "provenance": {
                        "diagram": self.diagram,
                        "parameters": self.parameters,
                        "tool": format!("weylorb {}", env!("CARGO_PKG_VERSION")),
                    },
                    "payload": self.payload,
                });
                Ok(serde_json::to_string_pretty(&env).expect("json value") + "\n")
            }
            Format::Csv => match &self.table {
                Some(t) => t.to_csv(),
                None => Err(CliError::Usage(format!("`{}` has no CSV output", self.command))),
            },
        }
    }
}

pub fn write_out(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => File::create(p)?.write_all(text.as_bytes())?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn q_str(q: &Q) -> String {
    q.to_string()
}

pub fn q_vec(v: &[Q]) -> Vec<String> {
    v.iter().map(q_str).collect()
}

pub fn q_json(v: &[Q]) -> Value {
    Value::from(q_vec(v))
}

pub fn q_matrix(m: &[Vec<Q>]) -> Value {
    Value::from(m.iter().map(|r| q_json(r)).collect::<Vec<_>>())
}

/// Decimal text of a float, rounded to 12 significant digits after
/// dropping parts below 1e-12 of the magnitude.
pub fn real_str(v: f64, scale: f64) -> String {
    if v.abs() <= 1e-12 * scale.max(1.0) {
        return "0".into();
    }
    let digits = 12 - v.abs().log10().ceil() as i32;
    let p = 10f64.powi(digits.clamp(0, 15));
    format!("{}", (v * p).round() / p)
}

/// "a+bi" text of a complex number.
pub fn complex_str(z: C64) -> String {
    let s = z.norm();
    let re = real_str(z.re, s);
    let im = real_str(z.im, s);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

pub fn plain_matrix(name: &str, rows: &[Vec<String>]) -> String {
    let mut s = format!("{name}:\n");
    for r in rows {
        s.push_str("  [");
        s.push_str(&r.join(", "));
        s.push_str("]\n");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_text() {
        assert_eq!(complex_str(C64::new(1.2e-16, 2.0)), "0+2i");
        assert_eq!(complex_str(C64::new(-0.5, -0.25)), "-0.5-0.25i");
        assert_eq!(real_str(1.0 / 3.0, 1.0), "0.333333333333");
    }
}
