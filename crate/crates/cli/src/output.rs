use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
    /// Constructive output with nothing to verify.
    Info,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skip => "skip",
            Verdict::Info => "info",
        }
    }
}

/// One point of output, rendered in any of the three formats.
#[derive(Debug, Clone)]
pub struct Record {
    pub verdict: Verdict,
    pub text: String,
    pub fields: Map<String, Value>,
}

impl Record {
    pub fn new(verdict: Verdict, text: impl Into<String>, fields: Value) -> Self {
        let fields = match fields {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        Record {
            verdict,
            text: text.into(),
            fields,
        }
    }

    pub fn skip(reason: String, mut fields: Map<String, Value>) -> Self {
        fields.insert("reason".into(), Value::String(reason.clone()));
        Record {
            verdict: Verdict::Skip,
            text: format!("skip: {reason}"),
            fields,
        }
    }

    fn json(&self) -> Value {
        let mut m = self.fields.clone();
        m.insert("verdict".into(), Value::String(self.verdict.as_str().into()));
        Value::Object(m)
    }
}

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.replace(['\t', '\n'], " "),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Writes records in order; for TSV, the header comes from the first record.
pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    header: Option<Vec<String>>,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format) -> Self {
        Emitter {
            out,
            format,
            header: None,
        }
    }

    pub fn emit(&mut self, rec: &Record) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{}", rec.text),
            Format::Json => writeln!(self.out, "{}", rec.json()),
            Format::Tsv => {
                let Value::Object(m) = rec.json() else { unreachable!() };
                if self.header.is_none() {
                    let cols: Vec<String> = m.keys().cloned().collect();
                    writeln!(self.out, "{}", cols.join("\t"))?;
                    self.header = Some(cols);
                }
                let cols = self.header.as_ref().expect("header set");
                let row: Vec<String> = cols
                    .iter()
                    .map(|c| m.get(c).map(tsv_cell).unwrap_or_default())
                    .collect();
                writeln!(self.out, "{}", row.join("\t"))
            }
        }
    }
}
