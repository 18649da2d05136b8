//! Degree counts `M_k`, Conjectures A–D and their composites, the
//! `exp(P/P')` table criterion, the cyclic-defect bijection check and the
//! symmetric-group divisibility check.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::blocks::{self, k_range, Block, MkVector};
use crate::chartab::CharacterTable;
use crate::cyclotomic::{self, Cyclo};
use crate::error::{Error, Result};
use crate::groupspec::GroupSpec;
use crate::permutation::Permutation;
use crate::workbench::{BlockLocal, TableSource, Workbench};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConjectureId {
    A,
    B,
    C,
    D,
    #[serde(rename = "A∧C")]
    AC,
    #[serde(rename = "B∧D")]
    BD,
    SymDiv,
    Exponent,
    DadeBijection,
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConjectureId::A => "A",
            ConjectureId::B => "B",
            ConjectureId::C => "C",
            ConjectureId::D => "D",
            ConjectureId::AC => "A∧C",
            ConjectureId::BD => "B∧D",
            ConjectureId::SymDiv => "SymDiv",
            ConjectureId::Exponent => "Exponent",
            ConjectureId::DadeBijection => "DadeBijection",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    /// excluded from the verdict
    #[serde(skip_serializing_if = "is_false")]
    pub conditional: bool,
    pub label: String,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<usize>,
    pub comparisons: Vec<Comparison>,
    pub conjecture: ConjectureId,
    pub group: String,
    pub k_range: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub notes: Vec<String>,
    pub p: u64,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
}

impl ConjectureReport {
    fn new(conjecture: ConjectureId, group: &str, p: u64) -> ConjectureReport {
        ConjectureReport {
            block: None,
            comparisons: Vec::new(),
            conjecture,
            group: group.to_string(),
            k_range: k_range(p),
            n: None,
            notes: Vec::new(),
            p,
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
        }
    }

    fn inapplicable(conjecture: ConjectureId, group: &str, p: u64, why: &str) -> ConjectureReport {
        let mut r = ConjectureReport::new(conjecture, group, p);
        r.verdict = Verdict::Inapplicable;
        r.notes.push(why.to_string());
        r
    }

    fn compare(&mut self, label: String, lhs: u64, rhs: u64) {
        self.comparisons.push(Comparison { conditional: false, label, lhs, rhs });
    }

    fn compare_conditional(&mut self, label: String, lhs: u64, rhs: u64) {
        self.comparisons.push(Comparison { conditional: true, label, lhs, rhs });
    }

    fn finish(mut self) -> ConjectureReport {
        for c in &self.comparisons {
            if !c.conditional && c.lhs != c.rhs {
                self.witnesses.push(format!("{}: {} != {}", c.label, c.lhs, c.rhs));
            }
        }
        if self.verdict != Verdict::Inapplicable {
            self.verdict = if self.witnesses.is_empty() { Verdict::Pass } else { Verdict::Fail };
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Keep only the comparisons for residue `k`; comparisons not indexed by
    /// a residue are kept.
    pub fn restrict_k(mut self, k: u64) -> ConjectureReport {
        let token = format!("k={k}");
        let (keep, drop): (Vec<Comparison>, Vec<Comparison>) = std::mem::take(&mut self.comparisons)
            .into_iter()
            .partition(|c| !c.label.split_whitespace().any(|w| w.starts_with("k=")) || c.label.split_whitespace().any(|w| w == token));
        self.witnesses.retain(|w| !drop.iter().any(|c| w.starts_with(&format!("{}: ", c.label))));
        self.comparisons = keep;
        self.k_range.retain(|&x| x == k);
        if self.verdict != Verdict::Inapplicable {
            self.verdict = if self.witnesses.is_empty() { Verdict::Pass } else { Verdict::Fail };
        }
        self
    }
}

/// `M_k(G)`: characters whose degree is prime to `p` and `≡ ±k (mod p)`.
pub fn mk_group(t: &CharacterTable, p: u64, k: i64) -> Result<u64> {
    let k = arith::normalize_pm(k, p)
        .ok_or_else(|| Error::InvalidArgument(format!("k = {k} is divisible by p = {p}")))?;
    Ok(mk_vector(t, p).get(k))
}

pub fn mk_vector(t: &CharacterTable, p: u64) -> MkVector {
    MkVector::from_degrees(p, t.degrees().iter().copied().filter(|d| d % p != 0))
}

/// Rows of degree prime to `p`.
pub fn p_prime_rows(t: &CharacterTable, p: u64) -> Vec<usize> {
    (0..t.num_chars()).filter(|&r| !t.degrees()[r].is_multiple_of(p)).collect()
}

/// `n` such that `σ_n` is the identity on the values of `t`, at least 1.
pub fn sigma_trivial_from(t: &CharacterTable, p: u64) -> Result<u32> {
    Ok(arith::valuation(t.exponent()?, p).max(1))
}

/// Row permutation induced by `σ_n`: `χ^σ(g) = χ(g^t)`.
pub fn sigma_permutation(t: &CharacterTable, p: u64, n: u32) -> Result<Vec<usize>> {
    let cd = t.classes()?;
    let tt = cyclotomic::sigma_power_exponent(cd.exponent(), n, p);
    let pm = cd.power_map(tt as i64)?;
    let key = |row: &[Cyclo]| -> Vec<Vec<i64>> {
        row.iter().map(|v| v.int_coeffs().expect("character values are integral")).collect()
    };
    let index: HashMap<Vec<Vec<i64>>, usize> = t.chars().iter().enumerate().map(|(r, row)| (key(row), r)).collect();
    t.chars()
        .iter()
        .map(|row| {
            let image: Vec<Cyclo> = pm.iter().map(|&j| row[j].clone()).collect();
            index.get(&key(&image)).copied().ok_or_else(|| Error::Inconsistent("σ_n does not permute Irr".into()))
        })
        .collect()
}

/// Same permutation computed from the Galois action on values.
pub fn sigma_permutation_by_values(t: &CharacterTable, p: u64, n: u32) -> Result<Vec<usize>> {
    let e = t.exponent()?;
    let tt = cyclotomic::sigma_power_exponent(e, n, p);
    let rows = t.chars();
    rows.iter()
        .map(|row| {
            let image = row.iter().map(|v| v.apply_sigma(tt as i64)).collect::<Result<Vec<_>>>()?;
            rows.iter()
                .position(|other| *other == image)
                .ok_or_else(|| Error::Inconsistent("σ_n does not permute Irr".into()))
        })
        .collect()
}

/// Number of characters in `subset` fixed by `σ_n`.
pub fn sigma_fixed(t: &CharacterTable, p: u64, n: u32, subset: &[usize]) -> Result<u64> {
    let perm = sigma_permutation(t, p, n)?;
    Ok(subset.iter().filter(|&&r| perm[r] == r).count() as u64)
}

/// Smallest `p^n` (`n ≥ 1`) with `σ_n` fixing every member of `Irr_{p'}`.
pub fn exponent_from_table(t: &CharacterTable, p: u64) -> Result<u64> {
    let rows = p_prime_rows(t, p);
    let top = sigma_trivial_from(t, p)?;
    for n in 1..=top {
        if sigma_fixed(t, p, n, &rows)? == rows.len() as u64 {
            return Ok(p.pow(n));
        }
    }
    Err(Error::Inconsistent("σ_n is not trivial at the exponent".into()))
}

/// Exponent of `P/P'` for a Sylow `p`-subgroup `P`.
pub fn exponent_direct(wb: &Workbench, p: u64) -> Result<u64> {
    wb.sylow(p)?.sylow.abelian_exponent()
}

pub fn check_a(wb: &Workbench, p: u64) -> Result<ConjectureReport> {
    if !wb.divides_order(p) {
        return Ok(ConjectureReport::inapplicable(ConjectureId::A, wb.name(), p, "p does not divide |G|"));
    }
    let local = wb.sylow(p)?;
    let g = mk_vector(wb.table(), p);
    let n = mk_vector(&local.normalizer.table, p);
    let mut r = ConjectureReport::new(ConjectureId::A, wb.name(), p);
    for k in k_range(p) {
        r.compare(format!("k={k}"), g.get(k), n.get(k));
    }
    r.compare("|Irr_p'|".into(), g.total(), n.total());
    r.notes.push(format!("|N_G(P)| = {}", local.normalizer.group.order()));
    Ok(r.finish())
}

fn twisted_mk(t: &CharacterTable, b: &Block, c: u64, k: u64) -> u64 {
    blocks::block_mk(t, b).get((c % b.p) * k % b.p)
}

pub fn check_b(wb: &Workbench, p: u64, only: Option<usize>) -> Result<ConjectureReport> {
    if !wb.divides_order(p) {
        return Ok(ConjectureReport::inapplicable(ConjectureId::B, wb.name(), p, "p does not divide |G|"));
    }
    let bl = wb.blocks(p)?;
    let mut r = ConjectureReport::new(ConjectureId::B, wb.name(), p);
    r.block = only;
    for pair in selected(&bl, only)? {
        let b_g = &bl.g_blocks.blocks[pair.block];
        let local = &bl.locals[pair.local];
        let b_n = &local.blocks.blocks[pair.correspondent];
        if b_g.defect == bl.g_blocks.a && pair.c % p != 1 % p {
            r.witnesses.push(format!("block {}: c = {} is not 1 mod p for a block of maximal defect", pair.block, pair.c));
        }
        let mk_n = blocks::block_mk(&local.n.table, b_n);
        for k in k_range(p) {
            r.compare(format!("block {} k={k}", pair.block), twisted_mk(wb.table(), b_g, pair.c, k), mk_n.get(k));
        }
    }
    Ok(r.finish())
}

fn selected(bl: &BlockLocal, only: Option<usize>) -> Result<Vec<&crate::workbench::BlockPair>> {
    match only {
        None => Ok(bl.pairs.iter().collect()),
        Some(i) => bl
            .pairs
            .get(i)
            .map(|x| vec![x])
            .ok_or_else(|| Error::InvalidArgument(format!("block {i} out of range ({} blocks)", bl.pairs.len()))),
    }
}

fn sweep(wb: &Workbench, p: u64, n: Option<u32>) -> Result<Vec<u32>> {
    Ok(match n {
        Some(0) => return Err(Error::InvalidArgument("n must be at least 1".into())),
        Some(n) => vec![n],
        None => (1..=sigma_trivial_from(wb.table(), p)?).collect(),
    })
}

pub fn check_c(wb: &Workbench, p: u64, n: Option<u32>) -> Result<ConjectureReport> {
    if !wb.divides_order(p) {
        return Ok(ConjectureReport::inapplicable(ConjectureId::C, wb.name(), p, "p does not divide |G|"));
    }
    let local = wb.sylow(p)?;
    let tg = wb.table();
    let tn = &local.normalizer.table;
    let mut r = ConjectureReport::new(ConjectureId::C, wb.name(), p);
    r.n = n;
    for n in sweep(wb, p, n)? {
        let lhs = sigma_fixed(tg, p, n, &p_prime_rows(tg, p))?;
        let rhs = sigma_fixed(tn, p, n, &p_prime_rows(tn, p))?;
        r.compare(format!("n={n}"), lhs, rhs);
    }
    Ok(r.finish())
}

/// Whether `perm` maps every block to itself and preserves degrees.
fn sigma_respects(t: &CharacterTable, part: &blocks::BlockPartition, perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(r, &s)| part.block_of[r] == part.block_of[s] && t.degrees()[r] == t.degrees()[s])
}

pub fn check_d(wb: &Workbench, p: u64, n: Option<u32>, only: Option<usize>) -> Result<ConjectureReport> {
    if !wb.divides_order(p) {
        return Ok(ConjectureReport::inapplicable(ConjectureId::D, wb.name(), p, "p does not divide |G|"));
    }
    let bl = wb.blocks(p)?;
    let mut r = ConjectureReport::new(ConjectureId::D, wb.name(), p);
    r.n = n;
    r.block = only;
    for n in sweep(wb, p, n)? {
        let perm_g = sigma_permutation(wb.table(), p, n)?;
        if !sigma_respects(wb.table(), &bl.g_blocks, &perm_g) {
            r.witnesses.push(format!("n={n}: σ_n moves a character of G to another block or degree"));
        }
        let perms_n = bl
            .locals
            .iter()
            .map(|l| {
                let perm = sigma_permutation(&l.n.table, p, n)?;
                Ok((sigma_respects(&l.n.table, &l.blocks, &perm), perm))
            })
            .collect::<Result<Vec<_>>>()?;
        if perms_n.iter().any(|(ok, _)| !ok) {
            r.witnesses.push(format!("n={n}: σ_n moves a character of a local subgroup to another block or degree"));
        }
        for pair in selected(&bl, only)? {
            let b_g = &bl.g_blocks.blocks[pair.block];
            let b_n = &bl.locals[pair.local].blocks.blocks[pair.correspondent];
            let perm_n = &perms_n[pair.local].1;
            let lhs = b_g.height_zero().filter(|&x| perm_g[x] == x).count() as u64;
            let rhs = b_n.height_zero().filter(|&x| perm_n[x] == x).count() as u64;
            r.compare(format!("block {} n={n}", pair.block), lhs, rhs);
        }
    }
    Ok(r.finish())
}

/// Per-`k`, per-`σ_n` refinement combining A with C.
pub fn check_ac(wb: &Workbench, p: u64, n: Option<u32>) -> Result<ConjectureReport> {
    if !wb.divides_order(p) {
        return Ok(ConjectureReport::inapplicable(ConjectureId::AC, wb.name(), p, "p does not divide |G|"));
    }
    let local = wb.sylow(p)?;
    let mut r = ConjectureReport::new(ConjectureId::AC, wb.name(), p);
    r.n = n;
    for n in sweep(wb, p, n)? {
        let count = |t: &CharacterTable| -> Result<MkVector> {
            let perm = sigma_permutation(t, p, n)?;
            let fixed = p_prime_rows(t, p).into_iter().filter(|&x| perm[x] == x).map(|x| t.degrees()[x]);
            Ok(MkVector::from_degrees(p, fixed))
        };
        let g = count(wb.table())?;
        let nn = count(&local.normalizer.table)?;
        for k in k_range(p) {
            r.compare(format!("n={n} k={k}"), g.get(k), nn.get(k));
        }
    }
    Ok(r.finish())
}

/// Per-block, per-`k`, per-`σ_n` refinement combining B with D.
pub fn check_bd(wb: &Workbench, p: u64, n: Option<u32>, only: Option<usize>) -> Result<ConjectureReport> {
    if !wb.divides_order(p) {
        return Ok(ConjectureReport::inapplicable(ConjectureId::BD, wb.name(), p, "p does not divide |G|"));
    }
    let bl = wb.blocks(p)?;
    let mut r = ConjectureReport::new(ConjectureId::BD, wb.name(), p);
    r.n = n;
    r.block = only;
    for n in sweep(wb, p, n)? {
        let perm_g = sigma_permutation(wb.table(), p, n)?;
        let perms_n =
            bl.locals.iter().map(|l| sigma_permutation(&l.n.table, p, n)).collect::<Result<Vec<_>>>()?;
        for pair in selected(&bl, only)? {
            let b_g = &bl.g_blocks.blocks[pair.block];
            let local = &bl.locals[pair.local];
            let b_n = &local.blocks.blocks[pair.correspondent];
            let g_fixed = MkVector::from_degrees(
                p,
                b_g.height_zero().filter(|&x| perm_g[x] == x).map(|x| wb.table().degrees()[x]),
            );
            let n_fixed = MkVector::from_degrees(
                p,
                b_n.height_zero().filter(|&x| perms_n[pair.local][x] == x).map(|x| local.n.table.degrees()[x]),
            );
            for k in k_range(p) {
                r.compare(
                    format!("block {} n={n} k={k}", pair.block),
                    g_fixed.get((pair.c % p) * k % p),
                    n_fixed.get(k),
                );
            }
        }
    }
    Ok(r.finish())
}

pub fn check_composite(wb: &Workbench, p: u64, n: Option<u32>) -> Result<Vec<ConjectureReport>> {
    Ok(vec![check_ac(wb, p, n)?, check_bd(wb, p, n, None)?])
}

pub fn check_exponent(wb: &Workbench, p: u64) -> Result<ConjectureReport> {
    if !wb.divides_order(p) {
        return Ok(ConjectureReport::inapplicable(ConjectureId::Exponent, wb.name(), p, "p does not divide |G|"));
    }
    let local = wb.sylow(p)?;
    let direct = local.sylow.abelian_exponent()?;
    let mut r = ConjectureReport::new(ConjectureId::Exponent, wb.name(), p);
    r.compare("N-table vs exp(P/P')".into(), exponent_from_table(&local.normalizer.table, p)?, direct);
    r.compare_conditional("G-table vs exp(P/P')".into(), exponent_from_table(wb.table(), p)?, direct);
    Ok(r.finish())
}

/// Outcome of matching `Irr(B)` with `Irr(b)` by values on `xy`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DadeMatching {
    pub block: usize,
    /// `(row of G, row of N, sign)`
    pub pairs: Vec<(usize, usize, i8)>,
    pub generator_order: u64,
    pub elements_checked: usize,
}

/// Search for a sign-matching bijection `Irr(B) → Irr(b)`; `None` when the
/// defect group is not cyclic.
pub fn dade_matching(wb: &Workbench, p: u64, block: usize) -> Result<Option<std::result::Result<DadeMatching, String>>> {
    let bl = wb.blocks(p)?;
    let pair = &bl.pairs[block];
    let local = &bl.locals[pair.local];
    let d = &local.defect_group;
    let x = match cyclic_generator(d) {
        Some(x) => x,
        None => return Ok(None),
    };
    let g = wb.group();
    let cd_g = wb.table().classes()?;
    let cd_n = local.n.table.classes()?;
    let c = g.centralizer_of_element(&x)?;
    let mut class_pairs: Vec<(usize, usize)> = Vec::new();
    for y in c.elements() {
        if y.order() % p == 0 {
            continue;
        }
        let xy = &x * &y;
        let key = (cd_g.class_of(&xy)?, cd_n.class_of(&xy)?);
        if !class_pairs.contains(&key) {
            class_pairs.push(key);
        }
    }
    let e = wb.table().exponent()?;
    let b_g = &bl.g_blocks.blocks[pair.block];
    let b_n = &local.blocks.blocks[pair.correspondent];
    let vec_g: Vec<Vec<Cyclo>> =
        b_g.members.iter().map(|&r| class_pairs.iter().map(|&(k, _)| wb.table().value(r, k).clone()).collect()).collect();
    let vec_n: Vec<Vec<Cyclo>> = b_n
        .members
        .iter()
        .map(|&r| class_pairs.iter().map(|&(_, l)| local.n.table.value(r, l).lift(e)).collect())
        .collect();
    let out = DadeMatching { block, pairs: Vec::new(), generator_order: x.order(), elements_checked: class_pairs.len() };
    if vec_g.len() != vec_n.len() {
        return Ok(Some(Err(format!("|Irr(B)| = {} but |Irr(b)| = {}", vec_g.len(), vec_n.len()))));
    }
    // compatibility graph with signs
    let mut sign = vec![vec![0i8; vec_n.len()]; vec_g.len()];
    for (i, u) in vec_g.iter().enumerate() {
        for (j, v) in vec_n.iter().enumerate() {
            if u == v {
                sign[i][j] = 1;
            } else if u.iter().zip(v).all(|(a, b)| *a == -b) {
                sign[i][j] = -1;
            }
        }
    }
    let Some(matching) = perfect_matching(&sign) else {
        return Ok(Some(Err("no sign-compatible perfect matching".into())));
    };
    let pairs = matching
        .iter()
        .enumerate()
        .map(|(i, &j)| (b_g.members[i], b_n.members[j], sign[i][j]))
        .collect();
    Ok(Some(Ok(DadeMatching { pairs, ..out })))
}

/// Kuhn's augmenting-path algorithm; `adj[i][j] != 0` marks an edge.
fn perfect_matching(adj: &[Vec<i8>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    fn augment(i: usize, adj: &[Vec<i8>], seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for j in 0..adj[i].len() {
            if adj[i][j] != 0 && !seen[j] {
                seen[j] = true;
                if match_right[j].is_none_or(|k| augment(k, adj, seen, match_right)) {
                    match_right[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, adj, &mut seen, &mut match_right) {
            return None;
        }
    }
    let mut left = vec![0; n];
    for (j, i) in match_right.iter().enumerate() {
        left[i.unwrap()] = j;
    }
    Some(left)
}

fn cyclic_generator(d: &crate::permgroup::PermGroup) -> Option<Permutation> {
    let order = d.order_u64();
    if order == 1 {
        return Some(d.identity());
    }
    if !d.is_abelian() {
        return None;
    }
    d.elements().into_iter().find(|x| x.order() == order)
}

pub fn check_dade(wb: &Workbench, p: u64, only: Option<usize>) -> Result<ConjectureReport> {
    if !wb.divides_order(p) {
        return Ok(ConjectureReport::inapplicable(ConjectureId::DadeBijection, wb.name(), p, "p does not divide |G|"));
    }
    let bl = wb.blocks(p)?;
    let mut r = ConjectureReport::new(ConjectureId::DadeBijection, wb.name(), p);
    r.block = only;
    let mut any = false;
    for pair in selected(&bl, only)? {
        let Some(result) = dade_matching(wb, p, pair.block)? else {
            r.notes.push(format!("block {}: defect group is not cyclic", pair.block));
            continue;
        };
        any = true;
        let b_g = &bl.g_blocks.blocks[pair.block];
        match result {
            Err(why) => {
                r.witnesses.push(format!("block {}: {why}", pair.block));
                r.compare(format!("block {} matched", pair.block), 0, b_g.members.len() as u64);
            }
            Ok(m) => {
                r.compare(format!("block {} matched", pair.block), m.pairs.len() as u64, b_g.members.len() as u64);
                let b_n = &bl.locals[pair.local].blocks.blocks[pair.correspondent];
                let tn = &bl.locals[pair.local].n.table;
                let height = |b: &Block, row: usize| b.heights[b.members.iter().position(|&x| x == row).unwrap()];
                let mut hz = 0;
                for &(rg, rn, _) in &m.pairs {
                    let (hg, hn) = (height(b_g, rg), height(b_n, rn));
                    if (hg == 0) != (hn == 0) {
                        r.witnesses.push(format!("block {}: rows {rg} and {rn} differ in height zero", pair.block));
                        continue;
                    }
                    if hg == 0 {
                        hz += 1;
                        let lhs = arith::p_prime_part(wb.table().degrees()[rg], p) % p;
                        let rhs = (pair.c % p) * (arith::p_prime_part(tn.degrees()[rn], p) % p) % p;
                        if lhs != rhs && !(lhs + rhs).is_multiple_of(p) {
                            r.witnesses.push(format!(
                                "block {}: degrees {} and {} violate the ±c congruence with c = {}",
                                pair.block,
                                wb.table().degrees()[rg],
                                tn.degrees()[rn],
                                pair.c
                            ));
                        }
                    }
                }
                let hz_g = b_g.height_zero().count() as u64;
                let hz_n = b_n.height_zero().count() as u64;
                r.compare(format!("block {} height zero", pair.block), hz_g, hz_n);
                r.notes.push(format!(
                    "block {}: |D| = {}, {} matched pairs ({} height zero), {} class pairs checked",
                    pair.block,
                    m.generator_order,
                    m.pairs.len(),
                    hz,
                    m.elements_checked
                ));
            }
        }
    }
    if !any {
        r.verdict = Verdict::Inapplicable;
    }
    Ok(r.finish())
}

/// `p | M_k(S_n)` for all `k` and `p ≤ n ≤ n_max`.
pub fn symmetric_divisibility(n_max: usize, p: u64, source: &dyn TableSource, budget: u64) -> Result<ConjectureReport> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut r = ConjectureReport::new(ConjectureId::SymDiv, &format!("S(n), {p} <= n <= {n_max}"), p);
    if (n_max as u64) < p {
        r.verdict = Verdict::Inapplicable;
        r.notes.push("n_max < p".into());
        return Ok(r);
    }
    for n in p as usize..=n_max {
        let spec = GroupSpec::Symmetric(n);
        let g = spec.build()?;
        let t = source.table(&spec.name(), &g, budget)?;
        let mk = mk_vector(&t, p);
        for k in k_range(p) {
            let v = mk.get(k);
            r.notes.push(format!("M_{k}(S_{n}) = {v}"));
            r.compare(format!("n={n} k={k} (M_k mod p)"), v % p, 0);
        }
    }
    Ok(r.finish())
}

/// Every check that applies to `(G, p)`, in a fixed order.
pub fn run_all(wb: &Workbench, p: u64) -> Result<Vec<ConjectureReport>> {
    Ok(vec![
        check_a(wb, p)?,
        check_b(wb, p, None)?,
        check_c(wb, p, None)?,
        check_d(wb, p, None, None)?,
        check_ac(wb, p, None)?,
        check_bd(wb, p, None, None)?,
        check_exponent(wb, p)?,
        check_dade(wb, p, None)?,
    ])
}
