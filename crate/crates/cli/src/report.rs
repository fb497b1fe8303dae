use std::fmt::Write as _;

use serde::Serialize;

use osp_core::rewrite::Status;

/// Exit codes: every instance proved, something refuted, something
/// inconclusive with nothing refuted, bad usage, internal failure.
pub const EXIT_PROVED: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_FAILURE: i32 = 70;

pub fn exit_code(s: Status) -> i32 {
    match s {
        Status::Proved => EXIT_PROVED,
        Status::Refuted => EXIT_REFUTED,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// `Refuted` beats `Inconclusive` beats `Proved`.
pub fn combine(a: Status, b: Status) -> Status {
    match (a, b) {
        (Status::Refuted, _) | (_, Status::Refuted) => Status::Refuted,
        (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
        _ => Status::Proved,
    }
}

#[derive(Serialize, Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub proved: usize,
    pub refuted: usize,
    pub inconclusive: usize,
}

impl Counts {
    pub fn add(&mut self, s: Status) {
        match s {
            Status::Proved => self.proved += 1,
            Status::Refuted => self.refuted += 1,
            Status::Inconclusive => self.inconclusive += 1,
        }
    }

    pub fn merge(&mut self, o: Counts) {
        self.proved += o.proved;
        self.refuted += o.refuted;
        self.inconclusive += o.inconclusive;
    }

    pub fn status(&self) -> Status {
        if self.refuted > 0 {
            Status::Refuted
        } else if self.inconclusive > 0 {
            Status::Inconclusive
        } else {
            Status::Proved
        }
    }
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureInfo {
    pub m: u16,
    pub n: u16,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum QMode {
    Symbolic,
    Sampled { q0: String },
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CompletionInfo {
    pub rules: usize,
    pub rounds: usize,
    pub overlaps_resolved: usize,
    pub rules_added: usize,
    pub overlaps_skipped: usize,
    /// Normal forms are unique for words up to this length.
    pub closed_to: Option<usize>,
    pub error: Option<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SampleInfo {
    pub seed: u64,
    pub per_triple: usize,
    pub points: Vec<[String; 3]>,
    pub note: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct InstanceEntry {
    pub family: String,
    pub name: String,
    pub statement: String,
    pub status: String,
    pub reduction_steps: usize,
    pub bound_used: Option<usize>,
    pub witness: Option<String>,
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Rejected {
    pub name: String,
    pub reason: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SuiteSection {
    pub suite: String,
    pub presentation_fingerprint: Option<String>,
    pub degree_bound: Option<usize>,
    pub completion: Option<CompletionInfo>,
    pub samples: Option<SampleInfo>,
    pub status: String,
    pub counts: Counts,
    pub instances: Vec<InstanceEntry>,
    pub rejected: Vec<Rejected>,
}

impl SuiteSection {
    pub fn new(suite: &str) -> Self {
        SuiteSection {
            suite: suite.into(),
            presentation_fingerprint: None,
            degree_bound: None,
            completion: None,
            samples: None,
            status: Status::Proved.name().into(),
            counts: Counts::default(),
            instances: Vec::new(),
            rejected: Vec::new(),
        }
    }

    pub fn push(&mut self, e: InstanceEntry, s: Status) {
        self.counts.add(s);
        self.status = self.counts.status().name().into();
        self.instances.push(e);
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SuiteTiming {
    pub suite: String,
    pub ms: u64,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Timing {
    pub total_ms: u64,
    pub suites: Vec<SuiteTiming>,
}

/// The JSON report of `verify` and `converse`. Everything except `timing`
/// is a function of the inputs.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub signature: SignatureInfo,
    pub q_mode: QMode,
    pub status: String,
    pub exit_code: i32,
    pub counts: Counts,
    pub suites: Vec<SuiteSection>,
    pub timing: Timing,
}

impl Report {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let mode = match &self.q_mode {
            QMode::Symbolic => "symbolic q".to_string(),
            QMode::Sampled { q0 } => format!("q = {q0}"),
        };
        let _ = writeln!(
            out,
            "{} at (m,n) = ({},{}), {mode}",
            self.command, self.signature.m, self.signature.n
        );
        for s in &self.suites {
            let _ = write!(out, "\n[{}] {}", s.suite, s.status);
            let _ = write!(
                out,
                ": {} proved, {} refuted, {} inconclusive",
                s.counts.proved, s.counts.refuted, s.counts.inconclusive
            );
            if let Some(d) = s.degree_bound {
                let _ = write!(out, "; degree bound {d}");
            }
            if let Some(c) = &s.completion {
                let _ = write!(out, "; {} rules", c.rules);
                if let Some(e) = &c.error {
                    let _ = write!(out, " (completion stopped: {e})");
                }
            }
            out.push('\n');
            if let Some(f) = &s.presentation_fingerprint {
                let _ = writeln!(out, "  presentation sha256 {f}");
            }
            if let Some(smp) = &s.samples {
                let _ = writeln!(
                    out,
                    "  {} samples per triple, seed {}; {}",
                    smp.per_triple, smp.seed, smp.note
                );
            }
            for e in &s.instances {
                let _ = writeln!(out, "  {:<12} {:<28} {}", e.status, e.name, e.statement);
                if let Some(w) = &e.witness {
                    let _ = writeln!(out, "      witness: {w}");
                }
                if let Some(r) = &e.residual {
                    let _ = writeln!(out, "      residual: {r}");
                }
                for t in e.trace.iter().flatten() {
                    let _ = writeln!(out, "      {t}");
                }
            }
            for r in &s.rejected {
                let _ = writeln!(out, "  {:<12} {:<28} {}", "rejected", r.name, r.reason);
            }
        }
        let _ = writeln!(
            out,
            "\noverall: {} ({} proved, {} refuted, {} inconclusive) in {} ms",
            self.status,
            self.counts.proved,
            self.counts.refuted,
            self.counts.inconclusive,
            self.timing.total_ms
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuted_dominates() {
        use Status::*;
        assert_eq!(combine(Proved, Inconclusive), Inconclusive);
        assert_eq!(combine(Inconclusive, Refuted), Refuted);
        assert_eq!(combine(Proved, Proved), Proved);
        let mut c = Counts::default();
        c.add(Proved);
        c.add(Inconclusive);
        assert_eq!(exit_code(c.status()), EXIT_INCONCLUSIVE);
        c.add(Refuted);
        assert_eq!(exit_code(c.status()), EXIT_REFUTED);
    }
}
