//! Report rendering: one structure, three formats.
//!
//! JSON carries `params`, `result`, `bounds`, `diagnostics`, and
//! `provenance`; big counts are decimal strings and exact rationals are
//! `"num/den"` strings, so nothing is ever squeezed through a float. CSV
//! emits one row per (parameter combination, quantity) under a header line.

use serde_json::{json, Map, Value as Json};

use synthcap_core::{BigCount, Exact};

use crate::cli::Format;

/// A single reported value.
#[derive(Debug, Clone, PartialEq)]
pub enum Val {
    /// Exact count, rendered as a decimal string.
    Count(String),
    /// Exact rational, rendered as `num/den`.
    Ratio(String),
    Real(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl Val {
    pub fn count(c: &BigCount) -> Self {
        Val::Count(c.to_string())
    }

    pub fn ratio(r: &Exact) -> Self {
        Val::Ratio(r.to_string())
    }

    fn to_json(&self) -> Json {
        match self {
            Val::Count(s) | Val::Ratio(s) | Val::Text(s) => json!(s),
            Val::Real(x) => serde_json::Number::from_f64(*x)
                .map(Json::Number)
                .unwrap_or_else(|| json!(x.to_string())),
            Val::Int(i) => json!(i),
            Val::Bool(b) => json!(b),
        }
    }

    fn to_cell(&self) -> String {
        match self {
            Val::Count(s) | Val::Ratio(s) | Val::Text(s) => s.clone(),
            Val::Real(x) => x.to_string(),
            Val::Int(i) => i.to_string(),
            Val::Bool(b) => b.to_string(),
        }
    }
}

/// One command's output: parameters plus sectioned quantities.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub params: Vec<(String, Val)>,
    pub result: Vec<(String, Val)>,
    pub bounds: Vec<(String, Val)>,
    pub diagnostics: Vec<(String, Val)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            params: Vec::new(),
            result: Vec::new(),
            bounds: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn param(mut self, key: impl Into<String>, val: Val) -> Self {
        self.params.push((key.into(), val));
        self
    }

    pub fn push_result(&mut self, key: impl Into<String>, val: Val) {
        self.result.push((key.into(), val));
    }

    pub fn push_bound(&mut self, key: impl Into<String>, val: Val) {
        self.bounds.push((key.into(), val));
    }

    pub fn push_diag(&mut self, key: impl Into<String>, val: Val) {
        self.diagnostics.push((key.into(), val));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Json => self.to_json_string() + "\n",
            Format::Csv => self.to_csv(),
        }
    }

    fn to_json_string(&self) -> String {
        let section = |entries: &[(String, Val)]| {
            let mut map = Map::new();
            for (k, v) in entries {
                map.insert(k.clone(), v.to_json());
            }
            Json::Object(map)
        };
        let mut top = Map::new();
        top.insert("command".into(), json!(self.command));
        top.insert("params".into(), section(&self.params));
        top.insert("result".into(), section(&self.result));
        if !self.bounds.is_empty() {
            top.insert("bounds".into(), section(&self.bounds));
        }
        if !self.diagnostics.is_empty() {
            top.insert("diagnostics".into(), section(&self.diagnostics));
        }
        top.insert(
            "provenance".into(),
            json!({
                "version": env!("CARGO_PKG_VERSION"),
                "git": env!("SYNTHCAP_GIT_HASH"),
            }),
        );
        serde_json::to_string_pretty(&Json::Object(top)).expect("report serializes")
    }

    fn to_table(&self) -> String {
        let mut lines = vec![format!("# {}", self.command)];
        let width = self
            .params
            .iter()
            .chain(&self.result)
            .chain(&self.bounds)
            .chain(&self.diagnostics)
            .map(|(k, _)| k.len())
            .max()
            .unwrap_or(0);
        let mut push_section = |title: &str, entries: &[(String, Val)]| {
            if !entries.is_empty() {
                lines.push(format!("[{title}]"));
                for (k, v) in entries {
                    lines.push(format!("{k:<width$}  {}", v.to_cell()));
                }
            }
        };
        push_section("params", &self.params);
        push_section("result", &self.result);
        push_section("bounds", &self.bounds);
        push_section("diagnostics", &self.diagnostics);
        lines.join("\n") + "\n"
    }

    fn to_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["command".to_string()];
        header.extend(self.params.iter().map(|(k, _)| k.clone()));
        header.push("section".into());
        header.push("quantity".into());
        header.push("value".into());
        wtr.write_record(&header).expect("csv header");
        let mut write_rows = |section: &str, entries: &[(String, Val)]| {
            for (k, v) in entries {
                let mut row = vec![self.command.clone()];
                row.extend(self.params.iter().map(|(_, pv)| pv.to_cell()));
                row.push(section.into());
                row.push(k.clone());
                row.push(v.to_cell());
                wtr.write_record(&row).expect("csv row");
            }
        };
        write_rows("result", &self.result);
        write_rows("bounds", &self.bounds);
        write_rows("diagnostics", &self.diagnostics);
        let bytes = wtr.into_inner().expect("csv flush");
        String::from_utf8(bytes).expect("csv is utf-8")
    }
}
