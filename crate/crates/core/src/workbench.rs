//! Lazily computed local data for one group: Sylow normalizers, block
//! partitions, defect groups and Brauer correspondents.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;

use crate::arith;
use crate::blocks::{self, BlockPartition};
use crate::chartab::{self, CharacterTable};
use crate::cyclotomic::PrimeIdealContext;
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;

/// Where character tables come from; the CLI plugs in a disk cache.
pub trait TableSource: Sync {
    fn table(&self, key: &str, group: &PermGroup, budget: u64) -> Result<CharacterTable>;
}

/// Always compute from scratch.
pub struct ComputeTables;

impl TableSource for ComputeTables {
    fn table(&self, key: &str, group: &PermGroup, budget: u64) -> Result<CharacterTable> {
        chartab::character_table(group, key, budget)
    }
}

#[derive(Debug)]
pub struct GroupTable {
    pub group: PermGroup,
    pub table: CharacterTable,
}

#[derive(Debug)]
pub struct SylowLocal {
    pub p: u64,
    pub sylow: PermGroup,
    pub normalizer: Rc<GroupTable>,
}

/// `N_G(D)` for one defect group `D` (up to `G`-conjugacy) and its blocks.
#[derive(Debug)]
pub struct LocalBlocks {
    pub defect_group: PermGroup,
    pub n: Rc<GroupTable>,
    pub blocks: BlockPartition,
}

/// A block of `G` with its Brauer correspondent.
#[derive(Debug, Clone)]
pub struct BlockPair {
    pub block: usize,
    pub local: usize,
    pub correspondent: usize,
    /// `|G : N_G(D)|_{p'}`
    pub c: u64,
}

#[derive(Debug)]
pub struct BlockLocal {
    pub p: u64,
    pub ctx: PrimeIdealContext,
    pub g_blocks: BlockPartition,
    pub locals: Vec<LocalBlocks>,
    pub pairs: Vec<BlockPair>,
}

pub struct Workbench<'a> {
    name: String,
    budget: u64,
    source: &'a dyn TableSource,
    g: Rc<GroupTable>,
    sylow: RefCell<BTreeMap<u64, Rc<SylowLocal>>>,
    blocks: RefCell<BTreeMap<u64, Rc<BlockLocal>>>,
}

impl<'a> Workbench<'a> {
    pub fn new(name: &str, group: PermGroup, source: &'a dyn TableSource, budget: u64) -> Result<Workbench<'a>> {
        let order = group.order_u64();
        if order > budget {
            return Err(Error::BudgetExceeded { what: "group order", size: order, limit: budget });
        }
        let table = source.table(name, &group, budget)?;
        Ok(Workbench {
            name: name.to_string(),
            budget,
            source,
            g: Rc::new(GroupTable { group, table }),
            sylow: RefCell::new(BTreeMap::new()),
            blocks: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn group(&self) -> &PermGroup {
        &self.g.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.g.table
    }

    pub fn order(&self) -> u64 {
        self.g.group.order_u64()
    }

    pub fn divides_order(&self, p: u64) -> bool {
        self.order().is_multiple_of(p)
    }

    fn subgroup_table(&self, key: &str, h: PermGroup) -> Result<Rc<GroupTable>> {
        if h.order() == self.g.group.order() {
            return Ok(self.g.clone());
        }
        let table = self.source.table(key, &h, self.budget)?;
        Ok(Rc::new(GroupTable { group: h, table }))
    }

    pub fn sylow(&self, p: u64) -> Result<Rc<SylowLocal>> {
        if let Some(s) = self.sylow.borrow().get(&p) {
            return Ok(s.clone());
        }
        let sylow = self.g.group.sylow_subgroup(p)?;
        let n = self.g.group.normalizer(&sylow)?;
        let normalizer = self.subgroup_table(&format!("{}.NP{p}", self.name), n)?;
        let local = Rc::new(SylowLocal { p, sylow, normalizer });
        self.sylow.borrow_mut().insert(p, local.clone());
        Ok(local)
    }

    pub fn blocks(&self, p: u64) -> Result<Rc<BlockLocal>> {
        if let Some(b) = self.blocks.borrow().get(&p) {
            return Ok(b.clone());
        }
        let local = Rc::new(self.compute_blocks(p)?);
        self.blocks.borrow_mut().insert(p, local.clone());
        Ok(local)
    }

    fn compute_blocks(&self, p: u64) -> Result<BlockLocal> {
        let g = &self.g.group;
        let t = &self.g.table;
        let ctx = PrimeIdealContext::new(t.exponent()?, p)?;
        let g_blocks = blocks::block_partition_with(t, &ctx)?;
        let a = g_blocks.a;
        let sylow_order = p.pow(a);

        let mut locals: Vec<LocalBlocks> = Vec::new();
        let mut assigned: Vec<usize> = Vec::with_capacity(g_blocks.blocks.len());
        for b in &g_blocks.blocks {
            let d = blocks::defect_group(g, t, b, a)?;
            let found = locals.iter().position(|l| {
                l.defect_group.order() == d.order()
                    && (d.order_u64() == 1 || matches!(g.conjugating_element(&d, &l.defect_group), Ok(Some(_))))
            });
            let idx = match found {
                Some(i) => i,
                None => {
                    let (defect_group, n) = if d.order_u64() == 1 {
                        (d, self.g.clone())
                    } else if d.order_u64() == sylow_order {
                        let s = self.sylow(p)?;
                        (s.sylow.clone(), s.normalizer.clone())
                    } else {
                        let n = g.normalizer(&d)?;
                        let key = format!("{}.ND{p}.{}", self.name, locals.len());
                        let n = self.subgroup_table(&key, n)?;
                        (d, n)
                    };
                    let blocks = blocks::block_partition_with(&n.table, &ctx)?;
                    locals.push(LocalBlocks { defect_group, n, blocks });
                    locals.len() - 1
                }
            };
            assigned.push(idx);
        }

        let mut pairs: Vec<Option<BlockPair>> = vec![None; g_blocks.blocks.len()];
        for (li, local) in locals.iter().enumerate() {
            let d = arith::valuation(local.defect_group.order_u64(), p);
            let c = arith::p_prime_part(self.order() / local.n.group.order_u64(), p);
            let mut hit = 0;
            for (bi, b) in local.blocks.blocks.iter().enumerate() {
                if b.defect != d {
                    continue;
                }
                let big = blocks::brauer_correspondent(t, &g_blocks, &local.n.table, b, &ctx)?;
                if assigned[big] != li || pairs[big].is_some() {
                    return Err(Error::Inconsistent(format!(
                        "Brauer correspondence is not a bijection for defect groups of order {}",
                        local.defect_group.order()
                    )));
                }
                pairs[big] = Some(BlockPair { block: big, local: li, correspondent: bi, c });
                hit += 1;
            }
            let expected = assigned.iter().filter(|&&x| x == li).count();
            if hit != expected {
                return Err(Error::Inconsistent(format!(
                    "{hit} local blocks correspond to {expected} blocks with defect groups of order {}",
                    local.defect_group.order()
                )));
            }
        }
        let pairs = pairs.into_iter().map(|x| x.expect("every block was paired")).collect();
        Ok(BlockLocal { p, ctx, g_blocks, locals, pairs })
    }
}
