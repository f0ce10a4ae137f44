//! Run reports printed by every subcommand.

use std::fmt::Write as _;
use std::time::Instant;

use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Keyvalue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass(String),
    /// The computation contradicts a theorem's prediction.
    Violation(String),
    Skipped(String),
}

impl Verdict {
    fn word(&self) -> &'static str {
        match self {
            Verdict::Pass(_) => "pass",
            Verdict::Violation(_) => "VIOLATION",
            Verdict::Skipped(_) => "skipped",
        }
    }

    fn detail(&self) -> &str {
        match self {
            Verdict::Pass(s) | Verdict::Violation(s) | Verdict::Skipped(s) => s,
        }
    }
}

pub struct RunReport {
    command: String,
    inputs: Vec<(String, String)>,
    results: Vec<(String, String)>,
    verdicts: Vec<(String, Verdict)>,
    started: Instant,
    /// File contents destined for stdout; the report then goes to stderr.
    pub payload: Option<String>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

impl RunReport {
    pub fn new(command: String) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            results: Vec::new(),
            verdicts: Vec::new(),
            started: Instant::now(),
            payload: None,
        }
    }

    pub fn input(&mut self, name: &str, bytes: &[u8]) {
        self.inputs.push((name.to_string(), sha256_hex(bytes)));
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.push((key.into(), value.to_string()));
    }

    pub fn verdict(&mut self, check: impl Into<String>, v: Verdict) {
        self.verdicts.push((check.into(), v));
    }

    pub fn has_violation(&self) -> bool {
        self.verdicts.iter().any(|(_, v)| matches!(v, Verdict::Violation(_)))
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let elapsed = self.started.elapsed().as_millis();
        let mut out = String::new();
        match format {
            OutputFormat::Text => {
                let _ = writeln!(out, "command: {}", self.command);
                for (name, digest) in &self.inputs {
                    let _ = writeln!(out, "input: {name} sha256 {digest}");
                }
                for (k, v) in &self.results {
                    let _ = writeln!(out, "{k}: {v}");
                }
                for (check, v) in &self.verdicts {
                    let _ = writeln!(out, "check {check}: {} ({})", v.word(), v.detail());
                }
                let _ = writeln!(out, "elapsed: {elapsed} ms");
            }
            OutputFormat::Keyvalue => {
                let _ = writeln!(out, "command={}", self.command);
                for (i, (name, digest)) in self.inputs.iter().enumerate() {
                    let _ = writeln!(out, "input.{i}.path={name}");
                    let _ = writeln!(out, "input.{i}.sha256={digest}");
                }
                for (k, v) in &self.results {
                    let _ = writeln!(out, "{}={v}", k.replace(' ', "_"));
                }
                for (check, v) in &self.verdicts {
                    let _ = writeln!(out, "check.{check}={}", v.word().to_lowercase());
                    let _ = writeln!(out, "check.{check}.detail={}", v.detail());
                }
                let _ = writeln!(out, "elapsed_ms={elapsed}");
            }
        }
        out
    }
}
