use std::io::Write;

use deephole::Field;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::{CliError, Command, ExperimentConfig, Format};

const ELEMENT_ORDER: &str = "element repr = sum of c_i p^i where c_0 + c_1 t + ... is its residue modulo the field modulus; \
polynomials and the modulus list coefficients lowest degree first; syndrome coordinate i is row i of the parity-check matrix";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub label: String,
    pub p: u32,
    pub m: u32,
    pub q: u32,
    pub modulus: Vec<u32>,
    pub element_order: String,
}

impl FieldInfo {
    pub fn of(field: &Field) -> Self {
        FieldInfo {
            label: field.label(),
            p: field.p(),
            m: field.m(),
            q: field.q(),
            modulus: field.modulus().to_vec(),
            element_order: ELEMENT_ORDER.into(),
        }
    }
}

/// A stated result checked by the run. Any failed check makes the process
/// exit with code 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

/// Rows of a report; the CSV format writes exactly this table.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Scalar results sit at the top level next to the config, so `total` of
/// `enum-deep-cosets` reads as `report["total"]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Command,
    pub config: ExperimentConfig,
    pub field: FieldInfo,
    #[serde(flatten)]
    pub result: Map<String, Value>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
}

impl Report {
    pub fn new(config: &ExperimentConfig, field: &Field) -> Self {
        Report {
            command: config.command,
            config: config.clone(),
            field: FieldInfo::of(field),
            result: Map::new(),
            checks: Vec::new(),
            table: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) -> Result<(), CliError> {
        self.result.insert(key.into(), serde_json::to_value(value)?);
        Ok(())
    }

    pub fn check(&mut self, name: &str, holds: bool) {
        self.checks.push(Check { name: name.into(), holds });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.table {
            Some(t) => {
                w.write_record(&t.columns)?;
                for row in &t.rows {
                    w.write_record(row.iter().map(cell))?;
                }
            }
            None => {
                w.write_record(["key", "value"])?;
                for (k, v) in &self.result {
                    w.write_record([k.clone(), cell(v)])?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 input"))
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

/// Arrays become space-separated lists so that polynomials and syndromes
/// fit in one cell.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            xs.iter().map(cell).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

pub fn write_report(report: &Report, format: Format, out: Option<&std::path::Path>) -> Result<(), CliError> {
    let text = report.render(format)?;
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// One differing leaf; `None` means the path is absent on that side.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiffEntry {
    pub path: String,
    pub left: Option<Value>,
    pub right: Option<Value>,
}

/// Leaf-by-leaf differences between two reports of the same command, with
/// dotted paths (`total`, `config.k`, `table.rows.3.1`). Empty exactly when
/// the reports are equal.
pub fn report_diff(a: &Report, b: &Report) -> Result<Vec<DiffEntry>, CliError> {
    if a.command != b.command {
        return Err(CliError::KindMismatch {
            left: a.command.name(),
            right: b.command.name(),
        });
    }
    let mut out = Vec::new();
    diff_values("", &serde_json::to_value(a)?, &serde_json::to_value(b)?, &mut out);
    Ok(out)
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn diff_values(path: &str, a: &Value, b: &Value, out: &mut Vec<DiffEntry>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            for k in keys {
                let p = join(path, k);
                match (x.get(k), y.get(k)) {
                    (Some(l), Some(r)) => diff_values(&p, l, r, out),
                    (l, r) => out.push(DiffEntry {
                        path: p,
                        left: l.cloned(),
                        right: r.cloned(),
                    }),
                }
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            for i in 0..x.len().max(y.len()) {
                let p = join(path, &i.to_string());
                match (x.get(i), y.get(i)) {
                    (Some(l), Some(r)) => diff_values(&p, l, r, out),
                    (l, r) => out.push(DiffEntry {
                        path: p,
                        left: l.cloned(),
                        right: r.cloned(),
                    }),
                }
            }
        }
        _ if a != b => out.push(DiffEntry {
            path: path.to_string(),
            left: Some(a.clone()),
            right: Some(b.clone()),
        }),
        _ => {}
    }
}
