//! Key–value reports and their two output formats.

use std::fmt::Write as _;
use std::time::Duration;

use wcilab_core::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violated,
    Unknown,
    Error,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Violated => "violated",
            Status::Unknown => "unknown",
            Status::Error => "error",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violated => 1,
            Status::Error => 2,
            Status::Unknown => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Str(String),
    Rational(Q),
    List(Vec<String>),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Int(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Str(s) => s.clone(),
            Value::Rational(q) if q.is_integer() => q.numer().to_string(),
            Value::Rational(q) => format!("{}/{}", q.numer(), q.denom()),
            Value::List(v) => v.join(","),
        }
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Str(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Str(s)
    }
}

impl From<Vec<String>> for Value {
    fn from(v: Vec<String>) -> Self {
        Value::List(v)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub entries: Vec<(String, Value)>,
    pub status: Status,
    pub elapsed: Duration,
}

impl Default for Report {
    fn default() -> Self {
        Report {
            entries: Vec::new(),
            status: Status::Ok,
            elapsed: Duration::ZERO,
        }
    }
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.entries.push((key.into(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// Raises the status; `error` beats `unknown` beats `violated`.
    pub fn escalate(&mut self, s: Status) {
        let rank = |s: Status| match s {
            Status::Ok => 0,
            Status::Violated => 1,
            Status::Unknown => 2,
            Status::Error => 3,
        };
        if rank(s) > rank(self.status) {
            self.status = s;
        }
    }

    pub fn emit(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Machine => {
                let mut lines: Vec<(String, String)> = self
                    .entries
                    .iter()
                    .map(|(k, v)| (k.clone(), v.render()))
                    .collect();
                lines.push(("status".into(), self.status.name().into()));
                lines.sort();
                for (k, v) in lines {
                    writeln!(out, "{k}={v}").unwrap();
                }
            }
            Format::Text => {
                let mut lines: Vec<(String, String)> =
                    vec![("status".into(), self.status.name().into())];
                lines.extend(self.entries.iter().map(|(k, v)| (k.clone(), v.render())));
                lines.push(("elapsed_ms".into(), self.elapsed.as_millis().to_string()));
                let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in lines {
                    writeln!(out, "{k:<width$} : {v}").unwrap();
                }
            }
        }
        out
    }
}
