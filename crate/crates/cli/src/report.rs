use pcore::PrecisionConfig;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::args::Format;

/// Precision metadata attached to every report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Precision {
    pub decimal_digits: u32,
    pub guard_digits: u32,
    pub snap_tolerance: String,
}

impl From<&PrecisionConfig> for Precision {
    fn from(cfg: &PrecisionConfig) -> Self {
        Precision {
            decimal_digits: cfg.decimal_digits,
            guard_digits: cfg.guard_digits,
            snap_tolerance: format!("{:e}", cfg.snap_tolerance),
        }
    }
}

/// Result of one command. Large integers and high-precision reals are
/// decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub precision: Precision,
    pub values: Map<String, Value>,
    pub residuals: Map<String, Value>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, cfg: &PrecisionConfig) -> Self {
        Report {
            command: command.to_string(),
            parameters: Map::new(),
            precision: Precision::from(cfg),
            values: Map::new(),
            residuals: Map::new(),
            pass: true,
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), v.into());
        self
    }

    pub fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    pub fn residual(&mut self, key: &str, v: impl Into<Value>) {
        self.residuals.insert(key.to_string(), v.into());
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => serde_json::to_string_pretty(self)
                .map(|s| s + "\n")
                .map_err(|e| e.to_string()),
            Format::Text => Ok(self.render_text()),
            Format::Csv => self.render_csv(),
        }
    }

    fn coefficients(&self) -> Option<&Vec<Value>> {
        match self.values.get("coefficients") {
            Some(Value::Array(a)) if self.command == "series" => Some(a),
            _ => None,
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(coeffs) = self.coefficients() {
            for (n, c) in coeffs.iter().enumerate() {
                out.push_str(&format!("{n} {}\n", scalar_text(c)));
            }
            return out;
        }
        if self.command == "count" {
            if let Some(v) = self.values.get("a_p(n)") {
                return format!("{}\n", scalar_text(v));
            }
        }
        for (k, v) in &self.values {
            out.push_str(&format!("{k}: {}\n", scalar_text(v)));
        }
        for (k, v) in &self.residuals {
            out.push_str(&format!("residual {k}: {}\n", scalar_text(v)));
        }
        out.push_str(&format!("pass: {}\n", self.pass));
        out
    }

    fn render_csv(&self) -> Result<String, String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let err = |e: csv::Error| e.to_string();
        if let Some(coeffs) = self.coefficients() {
            w.write_record(["n", "a_p(n)"]).map_err(err)?;
            for (n, c) in coeffs.iter().enumerate() {
                w.write_record([n.to_string(), scalar_text(c)]).map_err(err)?;
            }
        } else {
            w.write_record(["key", "value"]).map_err(err)?;
            for (k, v) in &self.values {
                w.write_record([k.clone(), scalar_text(v)]).map_err(err)?;
            }
            for (k, v) in &self.residuals {
                w.write_record([format!("residual.{k}"), scalar_text(v)]).map_err(err)?;
            }
            w.write_record(["pass".to_string(), self.pass.to_string()]).map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        String::from_utf8(bytes).map_err(|e| e.to_string())
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
