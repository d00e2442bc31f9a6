//! Append-only JSON-lines cache of reports. Each line carries a SHA-256 of
//! its entry; lines that fail to parse or verify are skipped.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::report::Report;

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    report: Report,
}

#[derive(Serialize, Deserialize)]
struct Line {
    sha256: String,
    entry: Value,
}

fn digest(s: &str) -> String {
    Sha256::digest(s.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Most recent valid report stored under `key`.
pub fn lookup(path: &Path, key: &str) -> Option<Report> {
    let text = fs::read_to_string(path).ok()?;
    let mut found = None;
    for line in text.lines() {
        let Ok(line) = serde_json::from_str::<Line>(line) else {
            continue;
        };
        let canonical = line.entry.to_string();
        if digest(&canonical) != line.sha256 {
            continue;
        }
        if let Ok(entry) = serde_json::from_value::<Entry>(line.entry) {
            if entry.key == key {
                found = Some(entry.report);
            }
        }
    }
    found
}

/// Appends `report` under `key`.
pub fn store(path: &Path, key: &str, report: &Report) -> std::io::Result<()> {
    let entry = serde_json::to_value(Entry {
        key: key.to_string(),
        report: report.clone(),
    })?;
    let line = serde_json::to_string(&Line {
        sha256: digest(&entry.to_string()),
        entry,
    })?;
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    f.write_all(format!("{line}\n").as_bytes())
}
