//! Benchmark fixtures for the character-table engine.

use charlab_core::classdata::DEFAULT_ORDER_BUDGET;
use charlab_core::workbench::{ComputeTables, Workbench};
use charlab_core::{GroupSpec, PermGroup};

/// Group specs used by the benchmarks, smallest first.
pub const BENCH_GROUPS: &[&str] = &["A(5)", "S(5)", "GL(2,3)", "S(6)", "S(7)"];

pub fn group(spec: &str) -> PermGroup {
    GroupSpec::parse(spec).expect("bench spec parses").build().expect("bench group builds")
}

pub fn workbench(spec: &str) -> Workbench<'static> {
    Workbench::new(spec, group(spec), &ComputeTables, DEFAULT_ORDER_BUDGET).expect("bench table computes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        for spec in BENCH_GROUPS {
            assert!(workbench(spec).table().num_chars() > 1);
        }
    }
}
