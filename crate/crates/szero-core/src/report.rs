//! Deterministic report assembly and serialization.
//!
//! The JSON body is a pure function of the run configuration and the
//! verification results: stable key order, no timestamps. Wall-clock timing
//! is kept out of the serialized body and surfaced on the human-readable
//! side only.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::ktheory::RelationCheck;
use crate::sod::SodCertificate;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub n: usize,
    pub n_total: i64,
    /// Explicit target weight, or None for a sweep over all of C(n,N).
    pub k: Option<Vec<i64>>,
    pub side: String,
    pub jobs: Option<usize>,
    pub max_steps: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossEntry {
    pub kind: String,
    pub detail: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub config: RunConfig,
    pub certificates: Vec<SodCertificate>,
    pub relations: Vec<RelationCheck>,
    pub crosschecks: Vec<CrossEntry>,
    pub status: String,
}

impl Report {
    pub fn new(config: RunConfig) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            config,
            certificates: Vec::new(),
            relations: Vec::new(),
            crosschecks: Vec::new(),
            status: String::new(),
        }
    }

    /// Exit status as a total function of the recorded outcomes.
    pub fn exit_code(&self) -> i32 {
        let any_incomplete = self
            .certificates
            .iter()
            .any(|c| c.status == crate::sod::CertStatus::Incomplete)
            || self
                .crosschecks
                .iter()
                .any(|c| c.kind == "engine-incomplete" && !c.ok);
        let any_invalid = self
            .certificates
            .iter()
            .any(|c| c.status == crate::sod::CertStatus::Invalid)
            || self.relations.iter().any(|r| !r.pass)
            || self
                .crosschecks
                .iter()
                .any(|c| c.kind != "engine-incomplete" && !c.ok);
        if any_invalid {
            2
        } else if any_incomplete {
            3
        } else {
            0
        }
    }

    pub fn finalize(&mut self) {
        self.status = match self.exit_code() {
            0 => "ok".to_string(),
            2 => "invalid".to_string(),
            3 => "incomplete".to_string(),
            other => format!("error({other})"),
        };
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut md = String::new();
        md.push_str(&format!("# szero report — {}\n\n", self.config.command));
        md.push_str(&format!(
            "- n = {}, N = {}, side = {}\n- status: **{}**\n\n",
            self.config.n, self.config.n_total, self.config.side, self.status
        ));
        if !self.certificates.is_empty() {
            md.push_str("## Certificates\n\n");
            md.push_str("| side | target | members | pairs | status |\n");
            md.push_str("|------|--------|---------|-------|--------|\n");
            for c in &self.certificates {
                md.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    c.side,
                    c.target,
                    c.member_count,
                    c.pairs.len(),
                    c.status
                ));
            }
            md.push('\n');
        }
        if !self.relations.is_empty() {
            md.push_str("## Relation checks\n\n");
            md.push_str("| relation | cases | result |\n");
            md.push_str("|----------|-------|--------|\n");
            for r in &self.relations {
                md.push_str(&format!(
                    "| {} | {} | {} |\n",
                    r.id,
                    r.cases,
                    if r.pass {
                        "pass".to_string()
                    } else {
                        format!("FAIL ({})", r.witness.clone().unwrap_or_default())
                    }
                ));
            }
            md.push('\n');
        }
        if !self.crosschecks.is_empty() {
            md.push_str("## Cross-checks\n\n");
            for c in &self.crosschecks {
                md.push_str(&format!(
                    "- [{}] {} — {}\n",
                    if c.ok { "ok" } else { "FAIL" },
                    c.kind,
                    c.detail
                ));
            }
            md.push('\n');
        }
        md
    }
}

/// Atomic file write: temp file in the target directory, then rename.
pub fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "report".into())
    ));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{SimplifyOptions, WeightVector};
    use crate::sod::{verify_collection, CollectionSpec};

    fn sample_report() -> Report {
        let mut report = Report::new(RunConfig {
            command: "verify-sod".into(),
            n: 2,
            n_total: 3,
            k: Some(vec![1, 2]),
            side: "F".into(),
            jobs: None,
            max_steps: None,
        });
        let spec = CollectionSpec::f_side(WeightVector::new([1, 2]));
        report
            .certificates
            .push(verify_collection(&spec, &SimplifyOptions::default(), false));
        report.finalize();
        report
    }

    #[test]
    fn report_bytes_are_deterministic() {
        let a = sample_report().to_json();
        let b = sample_report().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": 1"));
    }

    #[test]
    fn exit_codes_follow_status() {
        let report = sample_report();
        assert_eq!(report.exit_code(), 0);
        assert_eq!(report.status, "ok");
    }

    #[test]
    fn atomic_write_roundtrip() {
        let dir = std::env::temp_dir().join("szero-report-test");
        let path = dir.join("report.json");
        let report = sample_report();
        write_atomic(&path, &report.to_json()).unwrap();
        let back = std::fs::read_to_string(&path).unwrap();
        assert_eq!(back, report.to_json());
        let _ = std::fs::remove_dir_all(&dir);
    }
}
