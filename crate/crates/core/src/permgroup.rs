//! Permutation groups with a base and strong generating set.
//!
//! The stabilizer chain is built by deterministic Schreier–Sims. Every
//! element of a group has a dense index in `0..order` given by its
//! transversal coordinates, which is what the class and table code use to
//! tabulate functions on the group.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Largest supported degree.
pub const MAX_DEGREE: usize = 10_000;

const SYLOW_SEED: u64 = 0x5EED_0001;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// point -> position in `orbit`, `u32::MAX` outside the orbit
    position: Vec<u32>,
    reps: Vec<Permutation>,
    rep_invs: Vec<Permutation>,
}

impl Level {
    fn build(degree: usize, base_point: usize, gens: Vec<Permutation>) -> Level {
        let mut position = vec![u32::MAX; degree];
        let mut orbit = vec![base_point as u32];
        let mut reps = vec![Permutation::identity(degree)];
        position[base_point] = 0;
        let mut head = 0;
        while head < orbit.len() {
            let beta = orbit[head] as usize;
            for s in &gens {
                let gamma = s.image(beta);
                if position[gamma] == u32::MAX {
                    position[gamma] = orbit.len() as u32;
                    orbit.push(gamma as u32);
                    reps.push(&reps[head] * s);
                }
            }
            head += 1;
        }
        let rep_invs = reps.iter().map(Permutation::inverse).collect();
        Level { base_point, gens, orbit, position, reps, rep_invs }
    }
}

/// An immutable finite permutation group.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: BigUint,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup { degree, generators: Vec::new(), levels: Vec::new(), order: BigUint::one() }
    }

    /// Build a group from generators on `degree` points.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        if degree > MAX_DEGREE {
            return Err(Error::BudgetExceeded { what: "degree", size: degree as u64, limit: MAX_DEGREE as u64 });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let levels = schreier_sims(degree, &gens);
        let order = levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        Ok(PermGroup { degree, generators: gens, levels, order })
    }

    /// Build from generators, taking the degree from the first one.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<PermGroup> {
        let degree = generators.first().map_or(1, Permutation::degree);
        PermGroup::new(degree, generators)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Order as a machine integer; desk-scale groups always fit.
    pub fn order_u64(&self) -> u64 {
        self.order.to_u64().expect("group order exceeds u64")
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Sift `g` through the chain from `start`; returns the residue and the
    /// level where sifting stopped (`levels.len()` if it went through).
    fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        strip(&self.levels, g, start)
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        let (res, j) = self.strip(g, 0);
        Ok(j == self.levels.len() && res.is_identity())
    }

    /// Whether every generator of `h` lies in `self`.
    pub fn contains_group(&self, h: &PermGroup) -> Result<bool> {
        for g in h.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dense index of `g` in `0..order`, or `None` if `g` is not in the group.
    pub fn element_index(&self, g: &Permutation) -> Option<usize> {
        let mut g = g.clone();
        let mut idx = 0usize;
        for level in &self.levels {
            let beta = g.image(level.base_point);
            let pos = level.position[beta];
            if pos == u32::MAX {
                return None;
            }
            idx = idx * level.orbit.len() + pos as usize;
            g = &g * &level.rep_invs[pos as usize];
        }
        g.is_identity().then_some(idx)
    }

    /// Inverse of [`element_index`](Self::element_index).
    pub fn element(&self, mut index: usize) -> Permutation {
        let mut coords = vec![0usize; self.levels.len()];
        for (i, level) in self.levels.iter().enumerate().rev() {
            coords[i] = index % level.orbit.len();
            index /= level.orbit.len();
        }
        let mut g = Permutation::identity(self.degree);
        for (i, level) in self.levels.iter().enumerate().rev() {
            g = &g * &level.reps[coords[i]];
        }
        g
    }

    /// All elements in index order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut partial = vec![Permutation::identity(self.degree)];
        // deepest level first; the outer loop over coset reps makes the
        // position of each product equal to its element index
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(partial.len() * level.orbit.len());
            for rep in &level.reps {
                for p in &partial {
                    next.push(p * rep);
                }
            }
            partial = next;
        }
        partial
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let i = rng.gen_range(0..level.orbit.len());
            g = &g * &level.reps[i];
        }
        g
    }

    /// Orbit of `seed` under the action `act`, together with transversal
    /// elements mapping the seed to each orbit point.
    pub fn orbit_with_transversal<T, F>(&self, seed: T, act: F, limit: usize) -> Result<(Vec<T>, Vec<Permutation>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &Permutation) -> T,
    {
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(seed.clone(), 0);
        let mut orbit = vec![seed];
        let mut reps = vec![self.identity()];
        let mut head = 0;
        while head < orbit.len() {
            for s in &self.generators {
                let img = act(&orbit[head], s);
                if !index.contains_key(&img) {
                    if orbit.len() >= limit {
                        return Err(Error::BudgetExceeded { what: "orbit length", size: orbit.len() as u64 + 1, limit: limit as u64 });
                    }
                    index.insert(img.clone(), orbit.len());
                    orbit.push(img);
                    reps.push(&reps[head] * s);
                }
            }
            head += 1;
        }
        Ok((orbit, reps))
    }

    /// Stabilizer of `seed` under `act`, via Schreier generators of the
    /// orbit, stopping as soon as the order reaches `|G| / |orbit|`.
    pub fn stabilizer<T, F>(&self, seed: T, act: F) -> Result<PermGroup>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &Permutation) -> T,
    {
        let limit = self.order.to_usize().unwrap_or(usize::MAX);
        let (orbit, reps) = self.orbit_with_transversal(seed, &act, limit)?;
        let target = &self.order / BigUint::from(orbit.len());
        let mut stab = PermGroup::trivial(self.degree);
        if target.is_one() {
            return Ok(stab);
        }
        let index: HashMap<&T, usize> = orbit.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut gens: Vec<Permutation> = Vec::new();
        for (i, point) in orbit.iter().enumerate() {
            for s in &self.generators {
                let j = index[&act(point, s)];
                let h = &(&reps[i] * s) * &reps[j].inverse();
                if h.is_identity() || stab.contains(&h)? {
                    continue;
                }
                gens.push(h);
                stab = PermGroup::new(self.degree, gens.clone())?;
                if stab.order == target {
                    return Ok(stab);
                }
            }
        }
        Err(Error::Inconsistent("stabilizer order below orbit-stabilizer bound".into()))
    }

    /// Centralizer of a single element of the group.
    pub fn centralizer_of_element(&self, s: &Permutation) -> Result<PermGroup> {
        if !self.contains(s)? {
            return Err(Error::NotInGroup);
        }
        self.stabilizer(s.clone(), |x, g| x.conjugate_by(g))
    }

    /// Centralizer of a subgroup (elementwise).
    pub fn centralizer(&self, sub: &PermGroup) -> Result<PermGroup> {
        if sub.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: sub.degree });
        }
        if !self.contains_group(sub)? {
            return Err(Error::NotInGroup);
        }
        let gens = sub.generators.clone();
        if gens.is_empty() {
            return Ok(self.clone());
        }
        self.stabilizer(gens, |xs, g| xs.iter().map(|x| x.conjugate_by(g)).collect())
    }

    /// Canonical key of a subgroup: its sorted element list.
    fn subgroup_key(h: &PermGroup) -> Vec<Permutation> {
        let mut els = h.elements();
        els.sort();
        els
    }

    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: h.degree });
        }
        if !self.contains_group(h)? {
            return Err(Error::NotASubgroup);
        }
        let normal = self.generators.iter().all(|g| {
            h.generators.iter().all(|x| h.contains(&x.conjugate_by(g)).unwrap_or(false))
        });
        if normal {
            return Ok(self.clone());
        }
        self.stabilizer(Self::subgroup_key(h), conjugate_key)
    }

    /// An element `g` of `self` with `h^g = k`, if the subgroups are conjugate.
    pub fn conjugating_element(&self, h: &PermGroup, k: &PermGroup) -> Result<Option<Permutation>> {
        if h.order != k.order {
            return Ok(None);
        }
        let target = Self::subgroup_key(k);
        let limit = self.order.to_usize().unwrap_or(usize::MAX);
        let (orbit, reps) = self.orbit_with_transversal(Self::subgroup_key(h), conjugate_key, limit)?;
        Ok(orbit.iter().position(|x| *x == target).map(|i| reps[i].clone()))
    }

    /// A Sylow `p`-subgroup, grown inside successive normalizers.
    pub fn sylow_subgroup(&self, p: u64) -> Result<PermGroup> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = arith::p_part(self.order_u64(), p);
        let mut rng = ChaCha8Rng::seed_from_u64(SYLOW_SEED);
        let mut sylow = PermGroup::trivial(self.degree);
        while sylow.order_u64() < target {
            let norm = self.normalizer(&sylow)?;
            let mut found = None;
            for _ in 0..256 {
                let (gp, _) = norm.random_element(&mut rng).p_parts(p);
                if !sylow.contains(&gp)? {
                    found = Some(gp);
                    break;
                }
            }
            if found.is_none() {
                for g in norm.elements() {
                    let (gp, _) = g.p_parts(p);
                    if !sylow.contains(&gp)? {
                        found = Some(gp);
                        break;
                    }
                }
            }
            let gp = found.ok_or_else(|| Error::Inconsistent("no p-element extends a non-Sylow p-subgroup".into()))?;
            let mut gens = sylow.generators.clone();
            gens.push(gp);
            sylow = PermGroup::new(self.degree, gens)?;
        }
        Ok(sylow)
    }

    /// The commutator subgroup, as the normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut gens = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() {
                    gens.push(c);
                }
            }
        }
        self.normal_closure(gens)
    }

    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        let mut closure = PermGroup::new(self.degree, gens)?;
        loop {
            let mut added = None;
            'search: for k in &closure.generators {
                for g in &self.generators {
                    let c = k.conjugate_by(g);
                    if !closure.contains(&c)? {
                        added = Some(c);
                        break 'search;
                    }
                }
            }
            match added {
                Some(c) => {
                    let mut gens = closure.generators.clone();
                    gens.push(c);
                    closure = PermGroup::new(self.degree, gens)?;
                }
                None => return Ok(closure),
            }
        }
    }

    /// Exponent of the abelianization `H/H'`.
    pub fn abelian_exponent(&self) -> Result<u64> {
        let derived = self.derived_subgroup()?;
        let mut exp = 1;
        for g in &self.generators {
            let o = g.order();
            let m = arith::divisors(o)
                .into_iter()
                .find(|&m| derived.contains(&g.pow(m as i64)).unwrap_or(false))
                .unwrap_or(o);
            exp = arith::lcm(exp, m);
        }
        Ok(exp)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..].iter().all(|b| (a * b) == (b * a))
        })
    }

    /// Exponent of the group (lcm of element orders); enumerates elements.
    pub fn exponent(&self) -> u64 {
        self.elements().iter().fold(1, |acc, g| arith::lcm(acc, g.order()))
    }
}

#[allow(clippy::ptr_arg)]
fn conjugate_key(key: &Vec<Permutation>, g: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = key.iter().map(|x| x.conjugate_by(g)).collect();
    out.sort();
    out
}

fn strip(levels: &[Level], g: &Permutation, start: usize) -> (Permutation, usize) {
    let mut g = g.clone();
    for (i, level) in levels.iter().enumerate().skip(start) {
        let beta = g.image(level.base_point);
        let pos = level.position[beta];
        if pos == u32::MAX {
            return (g, i);
        }
        g = &g * &level.rep_invs[pos as usize];
    }
    (g, levels.len())
}

fn fixes_all(g: &Permutation, points: &[usize]) -> bool {
    points.iter().all(|&b| g.image(b) == b)
}

/// Deterministic Schreier–Sims.
fn schreier_sims(degree: usize, gens: &[Permutation]) -> Vec<Level> {
    let mut base: Vec<usize> = Vec::new();
    for g in gens {
        if fixes_all(g, &base) {
            base.push(g.first_moved_point().expect("non-identity"));
        }
    }
    let mut strong: Vec<Permutation> = gens.to_vec();
    let level_gens = |strong: &[Permutation], base: &[usize], i: usize| -> Vec<Permutation> {
        strong.iter().filter(|s| fixes_all(s, &base[..i])).cloned().collect()
    };
    let mut levels: Vec<Level> =
        (0..base.len()).map(|i| Level::build(degree, base[i], level_gens(&strong, &base, i))).collect();

    let mut i = levels.len() as isize - 1;
    while i >= 0 {
        let iu = i as usize;
        let mut jump = None;
        'scan: for (pos, &beta) in levels[iu].orbit.iter().enumerate() {
            for s in &levels[iu].gens {
                let gamma = s.image(beta as usize);
                let gpos = levels[iu].position[gamma] as usize;
                let h = &(&levels[iu].reps[pos] * s) * &levels[iu].rep_invs[gpos];
                if h.is_identity() {
                    continue;
                }
                let (y, j) = strip(&levels, &h, iu + 1);
                if j < levels.len() || !y.is_identity() {
                    jump = Some((y, j));
                    break 'scan;
                }
            }
        }
        match jump {
            Some((y, j)) => {
                if j == levels.len() {
                    base.push(y.first_moved_point().expect("non-identity residue"));
                    levels.push(Level::build(degree, *base.last().unwrap(), Vec::new()));
                }
                strong.push(y);
                for l in iu + 1..=j {
                    levels[l] = Level::build(degree, base[l], level_gens(&strong, &base, l));
                }
                i = j as isize;
            }
            None => i -= 1,
        }
    }
    levels
}
