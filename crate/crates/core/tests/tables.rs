use std::time::Instant;

use charlab_core::chartab::{self, verify_table, CharacterTable};
use charlab_core::classdata::DEFAULT_ORDER_BUDGET;
use charlab_core::GroupSpec;

fn table(spec: &str) -> CharacterTable {
    let g = GroupSpec::parse(spec).unwrap().build().unwrap();
    chartab::character_table(&g, spec, DEFAULT_ORDER_BUDGET).unwrap()
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `n! / Π hook lengths`.
fn hook_degree(shape: &[usize]) -> u64 {
    let n: usize = shape.iter().sum();
    let factorial: u128 = (1..=n as u128).product();
    let hooks: u128 = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| (0..row).map(move |j| (i, row, j)))
        .map(|(i, row, j)| (row - j + shape[i + 1..].iter().filter(|&&r| r > j).count()) as u128)
        .product();
    (factorial / hooks) as u64
}

#[test]
fn symmetric_group_degrees_match_hook_lengths() {
    for n in 2..=6 {
        let mut want: Vec<u64> = partitions(n, n).iter().map(|s| hook_degree(s)).collect();
        want.sort_unstable();
        let t = table(&format!("S({n})"));
        assert_eq!(t.degrees(), want.as_slice(), "S({n})");
        assert!(verify_table(&t).passed());
    }
}

#[test]
fn larger_tables_verify() {
    for spec in ["S(7)", "A(7)", "GL(2,3)", "SL(2,5)", "Q(48)", "C(64)", "A(5)xA(5)", "S(5)xS(3)"] {
        let start = Instant::now();
        let t = table(spec);
        let report = verify_table(&t);
        assert!(report.passed(), "{spec}: {:?}", report.failure);
        println!("{spec}: {} classes in {:?}", t.num_chars(), start.elapsed());
    }
}

#[test]
fn recomputation_is_byte_identical_and_round_trips() {
    for spec in ["S(4)", "GL(2,3)", "Q(12)"] {
        let a = table(spec).to_json();
        let b = table(spec).to_json();
        assert_eq!(a, b);
        let back = CharacterTable::from_json(&a).unwrap();
        assert_eq!(back.to_json(), a);
    }
}

#[test]
fn ingest_rejects_broken_files() {
    let good = table("S(3)").to_json();
    let broken = good.replacen("\"6\"", "\"7\"", 1);
    assert!(CharacterTable::from_json(&broken).is_err());
    let unknown = good.replacen("\"mode\"", "\"extra\": 1,\n  \"mode\"", 1);
    assert!(CharacterTable::from_json(&unknown).is_err());
}

#[test]
fn tables_do_not_depend_on_the_seed() {
    for spec in ["S(5)", "GL(2,3)", "Q(24)", "A(4)xA(4)"] {
        let g = GroupSpec::parse(spec).unwrap().build().unwrap();
        let a = chartab::character_table_seeded(&g, spec, DEFAULT_ORDER_BUDGET, 1).unwrap();
        let b = chartab::character_table_seeded(&g, spec, DEFAULT_ORDER_BUDGET, 0xDEAD_BEEF).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "{spec}");
    }
}
