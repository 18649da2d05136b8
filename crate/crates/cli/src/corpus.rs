//! Every check over the built-in corpus, one worker per group.

use std::fmt::Write as _;

use charlab_core::conjectures::{self, ConjectureReport, Verdict};
use charlab_core::corpus::{default_corpus, primes_for};
use charlab_core::workbench::Workbench;
use charlab_core::GroupSpec;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::cache::DiskCache;
use crate::report::combine;

#[derive(Serialize)]
pub struct PrimeRow {
    pub p: u64,
    pub reports: Vec<ConjectureReport>,
    pub verdict: Verdict,
}

#[derive(Serialize)]
pub struct Entry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub group: String,
    pub order: u64,
    pub primes: Vec<PrimeRow>,
}

pub struct CorpusResult {
    pub entries: Vec<Entry>,
}

pub fn run(
    filter: &[String],
    only_p: Option<u64>,
    jobs: Option<usize>,
    cache: &DiskCache,
    budget: u64,
) -> anyhow::Result<CorpusResult> {
    let specs: Vec<GroupSpec> = default_corpus()
        .iter()
        .map(|s| GroupSpec::parse(s).expect("corpus specs parse"))
        .filter(|s| filter.is_empty() || filter.contains(&s.name()))
        .collect();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build()?;
    let entries = pool.install(|| specs.par_iter().map(|s| run_entry(s, only_p, cache, budget)).collect());
    Ok(CorpusResult { entries })
}

fn run_entry(spec: &GroupSpec, only_p: Option<u64>, cache: &DiskCache, budget: u64) -> Entry {
    let mut entry = Entry { error: None, group: spec.name(), order: 0, primes: Vec::new() };
    let result = (|| -> charlab_core::Result<()> {
        let g = spec.build()?;
        entry.order = g.order_u64();
        let wb = Workbench::new(&entry.group, g, cache, budget)?;
        for p in primes_for(entry.order) {
            if only_p.is_some_and(|q| q != p) {
                continue;
            }
            let reports = conjectures::run_all(&wb, p)?;
            let verdict = combine(reports.iter().map(|r| r.verdict));
            entry.primes.push(PrimeRow { p, reports, verdict });
        }
        Ok(())
    })();
    if let Err(e) = result {
        entry.error = Some(e.to_string());
    }
    entry
}

impl CorpusResult {
    pub fn verdict(&self) -> Verdict {
        if self.entries.is_empty() {
            return Verdict::Inapplicable;
        }
        combine(self.entries.iter().flat_map(|e| e.primes.iter().map(|r| r.verdict)))
    }

    pub fn errors(&self) -> usize {
        self.entries.iter().filter(|e| e.error.is_some()).count()
    }

    /// Errors take precedence: a run with errors is incomplete.
    pub fn exit_code(&self) -> u8 {
        if self.errors() > 0 {
            2
        } else if self.verdict() == Verdict::Fail {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        let mut counts = [0usize; 3];
        for row in self.entries.iter().flat_map(|e| &e.primes) {
            counts[match row.verdict {
                Verdict::Pass => 0,
                Verdict::Fail => 1,
                Verdict::Inapplicable => 2,
            }] += 1;
        }
        serde_json::json!({
            "entries": self.entries,
            "summary": {
                "errors": self.errors(),
                "fail": counts[1],
                "groups": self.entries.len(),
                "inapplicable": counts[2],
                "pass": counts[0],
            },
        })
    }

    /// Pass/fail matrix, one line per (group, p).
    pub fn render(&self) -> String {
        let mut out = String::new();
        let header = ["A", "B", "C", "D", "A∧C", "B∧D", "Exp", "Dade"];
        let _ = writeln!(out, "{:<14} {:>3}  {}", "group", "p", header.map(|h| format!("{h:<5}")).join(" "));
        for e in &self.entries {
            if let Some(err) = &e.error {
                let _ = writeln!(out, "{:<14} error: {err}", e.group);
                continue;
            }
            for row in &e.primes {
                let cells: Vec<String> = row
                    .reports
                    .iter()
                    .map(|r| {
                        let c = match r.verdict {
                            Verdict::Pass => "pass",
                            Verdict::Fail => "FAIL",
                            Verdict::Inapplicable => "-",
                        };
                        format!("{c:<5}")
                    })
                    .collect();
                let _ = writeln!(out, "{:<14} {:>3}  {}", e.group, row.p, cells.join(" "));
            }
        }
        let _ = writeln!(
            out,
            "{} groups, {} (group, p) rows, verdict {}, {} errors",
            self.entries.len(),
            self.entries.iter().map(|e| e.primes.len()).sum::<usize>(),
            self.verdict(),
            self.errors()
        );
        out
    }
}
