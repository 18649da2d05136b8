//! Report envelopes and their text rendering.

use std::fmt::Write as _;

use charlab_core::conjectures::{ConjectureReport, Verdict};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Settings that can change a report. The cache directory and output
/// format are deliberately absent: they never change the content.
#[derive(Serialize)]
pub struct HashedConfig {
    pub budget_order: u64,
    pub seed: u64,
}

impl HashedConfig {
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        Sha256::digest(json.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Wrap a command's payload with the tool version and config hash.
pub fn envelope(command: &str, config: &HashedConfig, verdict: Option<Verdict>, body: Value) -> Value {
    let mut v = serde_json::json!({
        "command": command,
        "config_hash": config.hash(),
        "tool": "charlab",
        "version": VERSION,
    });
    if let Some(verdict) = verdict {
        v["verdict"] = serde_json::to_value(verdict).unwrap();
    }
    if let Value::Object(fields) = body {
        for (k, x) in fields {
            v[k] = x;
        }
    }
    v
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// Fail beats pass beats inapplicable.
pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut out = Verdict::Inapplicable;
    for v in verdicts {
        match v {
            Verdict::Fail => return Verdict::Fail,
            Verdict::Pass => out = Verdict::Pass,
            Verdict::Inapplicable => {}
        }
    }
    out
}

pub fn render_report(r: &ConjectureReport, out: &mut String) {
    let mut head = format!("{} {} p={}", r.conjecture, r.group, r.p);
    if let Some(n) = r.n {
        let _ = write!(head, " n={n}");
    }
    if let Some(b) = r.block {
        let _ = write!(head, " block={b}");
    }
    let _ = writeln!(out, "{head}: {}", r.verdict);
    for c in &r.comparisons {
        let rel = if c.lhs == c.rhs { "=" } else { "!=" };
        let tag = if c.conditional { " (conditional)" } else { "" };
        let _ = writeln!(out, "  {}: {} {rel} {}{tag}", c.label, c.lhs, c.rhs);
    }
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    for w in &r.witnesses {
        let _ = writeln!(out, "  witness: {w}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_hash_is_stable_and_sensitive() {
        let a = HashedConfig { budget_order: 1000, seed: 1 };
        let b = HashedConfig { budget_order: 1000, seed: 2 };
        assert_eq!(a.hash(), HashedConfig { budget_order: 1000, seed: 1 }.hash());
        assert_ne!(a.hash(), b.hash());
        assert_eq!(a.hash().len(), 64);
    }

    #[test]
    fn verdicts_combine() {
        use Verdict::*;
        assert_eq!(combine([]), Inapplicable);
        assert_eq!(combine([Inapplicable, Pass]), Pass);
        assert_eq!(combine([Pass, Fail, Inapplicable]), Fail);
    }
}
