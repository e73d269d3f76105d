//! Machine-readable run reports: JSON with fixed field order and fixed
//! float formatting (17 significant digits), or CSV with one check per
//! row. Identical invocations produce byte-identical output.

use std::collections::BTreeMap;
use std::io::{self, Write};

use chi4::verify::Check;
use serde::Serialize;

/// A reported input or result value.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Value {
    Num(f64),
    Int(u64),
    Str(String),
    Seq(Vec<f64>),
    /// Complex sequences as [re, im] pairs.
    Pairs(Vec<[f64; 2]>),
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub expected: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl From<&Check> for CheckRow {
    fn from(c: &Check) -> Self {
        Self {
            name: c.name.clone(),
            expected: c.expected,
            actual: c.actual,
            tolerance: c.tolerance,
            pass: c.pass,
        }
    }
}

/// Top-level report emitted by every command.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<CheckRow>,
    #[serde(rename = "overallPass")]
    pub overall_pass: bool,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            checks: Vec::new(),
            overall_pass: true,
        }
    }

    pub fn input(&mut self, key: &str, value: Value) -> &mut Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    pub fn result(&mut self, key: &str, value: Value) -> &mut Self {
        self.results.insert(key.to_string(), value);
        self
    }

    pub fn extend_checks<'a>(&mut self, checks: impl IntoIterator<Item = &'a Check>) -> &mut Self {
        for c in checks {
            self.checks.push(CheckRow::from(c));
        }
        self.finalize()
    }

    pub fn finalize(&mut self) -> &mut Self {
        self.overall_pass = self.checks.iter().all(|c| c.pass);
        self
    }
}

/// serde_json formatter writing every float with 17 significant digits so
/// numeric output is stable and full precision.
struct FixedFloatFormatter;

impl serde_json::ser::Formatter for FixedFloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }
}

/// Serializes the report as deterministic JSON with a trailing newline.
pub fn to_json(report: &RunReport) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloatFormatter);
    report
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    out.push(b'\n');
    String::from_utf8(out).expect("JSON is UTF-8")
}

/// Serializes the checks as CSV, one per row.
pub fn to_csv(report: &RunReport) -> String {
    let mut out = String::from("name,expected,actual,tolerance,pass\n");
    for c in &report.checks {
        out.push_str(&format!(
            "{},{:.16e},{:.16e},{:.16e},{}\n",
            c.name, c.expected, c.actual, c.tolerance, c.pass
        ));
    }
    out
}
