//! Plain `key: value` reports and the JSON run manifest.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;
use sha2::{Digest, Sha256};

/// An ordered list of `key: value` lines; rendering is byte-exact for
/// identical entries.
#[derive(Clone, Default, Debug)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            out.push_str(key);
            out.push_str(": ");
            out.push_str(value);
            out.push('\n');
        }
        out
    }
}

/// Everything needed to re-run a command and compare outcomes: the
/// argv, digests of every input read, the report, and any files
/// written. Identical inputs reproduce identical conclusive manifests.
#[derive(Serialize, Debug)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub seed: u64,
    /// Input path -> SHA-256 of its bytes.
    pub inputs: BTreeMap<String, String>,
    pub report: Vec<(String, String)>,
    /// Files this run wrote (certificates, graphs, colorings).
    pub outputs: Vec<String>,
    pub status: u8,
}

impl RunManifest {
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        text
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for byte in digest {
        use std::fmt::Write;
        write!(out, "{byte:02x}").unwrap();
    }
    out
}
