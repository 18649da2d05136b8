//! `p`-blocks from central characters: partition, defect, defect groups,
//! heights, Brauer correspondence and the block counts `M_k(B)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::arith;
use crate::chartab::CharacterTable;
use crate::cyclotomic::{Cyclo, FFElt, PrimeIdealContext};
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;

#[derive(Clone, Debug)]
pub struct Block {
    pub p: u64,
    pub members: Vec<usize>,
    /// `λ_B(K̂)` for every class `K`
    pub fingerprint: Vec<FFElt>,
    pub defect: u32,
    /// aligned with `members`
    pub heights: Vec<u32>,
}

impl Block {
    pub fn is_principal(&self) -> bool {
        self.members.contains(&0)
    }

    pub fn height_zero(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().zip(&self.heights).filter(|(_, &h)| h == 0).map(|(&r, _)| r)
    }
}

#[derive(Clone, Debug)]
pub struct BlockPartition {
    pub p: u64,
    /// `|G|_p = p^a`
    pub a: u32,
    pub blocks: Vec<Block>,
    /// row -> block index
    pub block_of: Vec<usize>,
}

/// Counts indexed by `k ∈ {1..(p-1)/2}` (or `{1}` for `p = 2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MkVector {
    pub p: u64,
    pub entries: BTreeMap<u64, u64>,
}

impl MkVector {
    pub fn zero(p: u64) -> MkVector {
        MkVector { p, entries: k_range(p).into_iter().map(|k| (k, 0)).collect() }
    }

    /// Count of degrees whose `p'`-part is `±k` modulo `p`.
    pub fn from_degrees(p: u64, degrees: impl IntoIterator<Item = u64>) -> MkVector {
        let mut out = MkVector::zero(p);
        for d in degrees {
            if let Some(k) = arith::normalize_pm((arith::p_prime_part(d, p) % p) as i64, p) {
                *out.entries.get_mut(&k).unwrap() += 1;
            }
        }
        out
    }

    pub fn get(&self, k: u64) -> u64 {
        arith::normalize_pm(k as i64, self.p).and_then(|k| self.entries.get(&k).copied()).unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Normalized residues `k`: `1..=(p-1)/2` for odd `p`, `[1]` for `p = 2`.
pub fn k_range(p: u64) -> Vec<u64> {
    if p == 2 { vec![1] } else { (1..=(p - 1) / 2).collect() }
}

/// `ω_χ(K̂_j) = |K_j| χ(g_j) / χ(1)`.
pub fn omega(t: &CharacterTable, r: usize, j: usize) -> Result<Cyclo> {
    let cd = t.classes()?;
    let q = BigRational::new(BigInt::from(cd.size(j)), BigInt::from(t.degrees()[r]));
    Ok(t.value(r, j).scale(&q))
}

/// Block partition with a reduction context built for the table's exponent.
pub fn block_partition(t: &CharacterTable, p: u64) -> Result<BlockPartition> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let ctx = PrimeIdealContext::new(t.exponent()?, p)?;
    block_partition_with(t, &ctx)
}

/// Block partition using a shared reduction context, whose conductor must be
/// a multiple of the table's exponent. Tables reduced with the same context
/// have comparable fingerprints.
pub fn block_partition_with(t: &CharacterTable, ctx: &PrimeIdealContext) -> Result<BlockPartition> {
    let p = ctx.p();
    let cd = t.classes()?;
    let a = arith::valuation(t.order_u64(), p);
    let mut blocks: Vec<Block> = Vec::new();
    let mut block_of = Vec::with_capacity(t.num_chars());
    for r in 0..t.num_chars() {
        let fingerprint = (0..cd.len()).map(|j| ctx.reduce(&omega(t, r, j)?)).collect::<Result<Vec<_>>>()?;
        match blocks.iter().position(|b| b.fingerprint == fingerprint) {
            Some(i) => {
                blocks[i].members.push(r);
                block_of.push(i);
            }
            None => {
                block_of.push(blocks.len());
                blocks.push(Block { p, members: vec![r], fingerprint, defect: 0, heights: Vec::new() });
            }
        }
    }
    for b in &mut blocks {
        let vals: Vec<u32> = b.members.iter().map(|&r| arith::valuation(t.degrees()[r], p)).collect();
        let min = *vals.iter().min().unwrap();
        b.defect = a - min;
        b.heights = vals.iter().map(|v| v - min).collect();
    }
    Ok(BlockPartition { p, a, blocks, block_of })
}

/// Number of height-zero members of `b` whose degree has `p'`-part `±k` mod `p`.
pub fn heights_and_mk(t: &CharacterTable, b: &Block, k: i64) -> Result<(BTreeMap<usize, u32>, u64)> {
    let p = b.p;
    let k = arith::normalize_pm(k, p)
        .ok_or_else(|| Error::InvalidArgument(format!("k = {k} is divisible by p = {p}")))?;
    let heights = b.members.iter().copied().zip(b.heights.iter().copied()).collect();
    Ok((heights, block_mk(t, b).get(k)))
}

/// `M_k(B)` for every normalized `k`.
pub fn block_mk(t: &CharacterTable, b: &Block) -> MkVector {
    MkVector::from_degrees(b.p, b.height_zero().map(|r| t.degrees()[r]))
}

/// A `p`-regular class with `λ_B(K̂) ≠ 0` and `|K|_p` maximal; ties go to the
/// smallest class index.
pub fn defect_class(t: &CharacterTable, b: &Block) -> Result<Option<usize>> {
    let cd = t.classes()?;
    let mut best: Option<(u32, usize)> = None;
    for j in cd.p_regular_classes(b.p) {
        if b.fingerprint[j].is_zero() {
            continue;
        }
        let v = arith::valuation(cd.size(j), b.p);
        if best.is_none_or(|(bv, _)| v > bv) {
            best = Some((v, j));
        }
    }
    Ok(best.map(|(_, j)| j))
}

/// A defect group: a Sylow `p`-subgroup of the centralizer of a defect-class
/// representative.
pub fn defect_group(g: &PermGroup, t: &CharacterTable, b: &Block, a: u32) -> Result<PermGroup> {
    if b.defect == 0 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    let j = defect_class(t, b)?.ok_or_else(|| Error::Inconsistent("block without a defect class".into()))?;
    let cd = t.classes()?;
    let kp = arith::valuation(cd.size(j), b.p);
    if kp != a - b.defect {
        return Err(Error::Inconsistent(format!("defect class has |K|_p = p^{kp}, expected p^{}", a - b.defect)));
    }
    let rep = cd.representative(j).ok_or(Error::PartialTable)?;
    let d = g.centralizer_of_element(rep)?.sylow_subgroup(b.p)?;
    if d.order_u64() != b.p.pow(b.defect) {
        return Err(Error::Inconsistent(format!("defect group has order {}, expected p^{}", d.order(), b.defect)));
    }
    Ok(d)
}

/// `λ_b^G(K̂) = Σ λ_b(L̂)` over the `N`-classes `L` contained in `K`.
pub fn induced_fingerprint(
    t_g: &CharacterTable,
    t_n: &CharacterTable,
    b: &Block,
    ctx: &PrimeIdealContext,
) -> Result<Vec<FFElt>> {
    let cd_g = t_g.classes()?;
    let cd_n = t_n.classes()?;
    let field = ctx.field();
    let mut out = vec![field.zero(); cd_g.len()];
    for l in 0..cd_n.len() {
        let rep = cd_n.representative(l).ok_or(Error::PartialTable)?;
        let k = cd_g.class_of(rep)?;
        out[k] = field.add(&out[k], &b.fingerprint[l]);
    }
    Ok(out)
}

/// Index of the `G`-block `B` with `b^G = B`.
pub fn brauer_correspondent(
    t_g: &CharacterTable,
    g_blocks: &BlockPartition,
    t_n: &CharacterTable,
    b: &Block,
    ctx: &PrimeIdealContext,
) -> Result<usize> {
    let induced = induced_fingerprint(t_g, t_n, b, ctx)?;
    let hits: Vec<usize> =
        g_blocks.blocks.iter().enumerate().filter(|(_, bl)| bl.fingerprint == induced).map(|(i, _)| i).collect();
    match hits.as_slice() {
        [i] => Ok(*i),
        [] => Err(Error::Inconsistent("induced central character matches no block".into())),
        _ => Err(Error::Inconsistent("induced central character matches several blocks".into())),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub blocks: Vec<BlockEntry>,
    pub p: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockEntry {
    pub defect: u32,
    pub degrees: Vec<u64>,
    pub heights: Vec<u32>,
    pub members: Vec<usize>,
    #[serde(rename = "Mk")]
    pub mk: BTreeMap<u64, u64>,
}

pub fn block_report(t: &CharacterTable, part: &BlockPartition) -> BlockReport {
    BlockReport {
        blocks: part
            .blocks
            .iter()
            .map(|b| BlockEntry {
                defect: b.defect,
                degrees: b.members.iter().map(|&r| t.degrees()[r]).collect(),
                heights: b.heights.clone(),
                members: b.members.clone(),
                mk: block_mk(t, b).entries,
            })
            .collect(),
        p: part.p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab;
    use crate::classdata::DEFAULT_ORDER_BUDGET;
    use crate::groupspec::GroupSpec;

    fn setup(spec: &str) -> (PermGroup, CharacterTable) {
        let g = GroupSpec::parse(spec).unwrap().build().unwrap();
        let t = chartab::character_table(&g, spec, DEFAULT_ORDER_BUDGET).unwrap();
        (g, t)
    }

    fn member_degrees(t: &CharacterTable, b: &Block) -> Vec<u64> {
        b.members.iter().map(|&r| t.degrees()[r]).collect()
    }

    #[test]
    fn a5_at_five() {
        let (g, t) = setup("A(5)");
        let part = block_partition(&t, 5).unwrap();
        assert_eq!(part.blocks.len(), 2);
        let principal = &part.blocks[0];
        assert!(principal.is_principal());
        assert_eq!(member_degrees(&t, principal), vec![1, 3, 3, 4]);
        assert_eq!(principal.defect, 1);
        assert_eq!(member_degrees(&t, &part.blocks[1]), vec![5]);
        assert_eq!(part.blocks[1].defect, 0);
        let mk = block_mk(&t, principal);
        assert_eq!((mk.get(1), mk.get(2)), (2, 2));
        assert_eq!(defect_group(&g, &t, principal, part.a).unwrap().order_u64(), 5);
        assert!(defect_group(&g, &t, &part.blocks[1], part.a).unwrap().is_trivial());
    }

    #[test]
    fn omega_examples() {
        let (_, t) = setup("A(5)");
        let cd = t.classes().unwrap();
        for j in 0..cd.len() {
            assert_eq!(omega(&t, 0, j).unwrap(), Cyclo::integer(1, cd.size(j) as i64));
        }
        for r in 0..t.num_chars() {
            assert_eq!(omega(&t, r, 0).unwrap(), Cyclo::integer(1, 1));
        }
        // degree 5 character vanishes on elements of order 5
        assert!(omega(&t, 4, 3).unwrap().is_zero());
    }

    #[test]
    fn coprime_prime_gives_singletons() {
        let (_, t) = setup("S(4)");
        let part = block_partition(&t, 5).unwrap();
        assert_eq!(part.blocks.len(), t.num_chars());
        assert!(part.blocks.iter().all(|b| b.defect == 0));
    }

    #[test]
    fn cyclic_group_single_block() {
        let (_, t) = setup("C(5)");
        let part = block_partition(&t, 5).unwrap();
        assert_eq!(part.blocks.len(), 1);
        assert_eq!(part.blocks[0].members.len(), 5);
    }

    #[test]
    fn s4_principal_two_block() {
        let (g, t) = setup("S(4)");
        let part = block_partition(&t, 2).unwrap();
        let principal = &part.blocks[part.block_of[0]];
        assert_eq!(principal.defect, 3);
        assert_eq!(defect_group(&g, &t, principal, part.a).unwrap().order_u64(), 8);
    }

    #[test]
    fn brauer_correspondent_in_a5() {
        let (g, t) = setup("A(5)");
        let ctx = PrimeIdealContext::new(t.exponent().unwrap(), 5).unwrap();
        let part = block_partition_with(&t, &ctx).unwrap();
        let d = defect_group(&g, &t, &part.blocks[0], part.a).unwrap();
        let n = g.normalizer(&d).unwrap();
        assert_eq!(n.order_u64(), 10);
        let t_n = chartab::character_table(&n, "N", DEFAULT_ORDER_BUDGET).unwrap();
        let n_part = block_partition_with(&t_n, &ctx).unwrap();
        assert_eq!(n_part.blocks.len(), 1);
        let mk = block_mk(&t_n, &n_part.blocks[0]);
        assert_eq!((mk.get(1), mk.get(2)), (2, 2));
        assert_eq!(brauer_correspondent(&t, &part, &t_n, &n_part.blocks[0], &ctx).unwrap(), 0);
    }

    #[test]
    fn k_is_rejected_when_divisible_by_p() {
        let (_, t) = setup("A(5)");
        let part = block_partition(&t, 5).unwrap();
        assert!(heights_and_mk(&t, &part.blocks[0], 5).is_err());
        assert_eq!(heights_and_mk(&t, &part.blocks[0], 3).unwrap().1, 2);
    }
}
