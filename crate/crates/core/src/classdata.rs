//! Conjugacy classes, power maps and class-multiplication coefficients.

use std::collections::{BTreeMap, HashMap};

use crate::arith;
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;
use crate::permutation::Permutation;

/// Default ceiling on `|G|` for the enumeration path.
pub const DEFAULT_ORDER_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub representative: Option<Permutation>,
    pub size: u64,
    pub order: u64,
    /// prime `q` -> index of the class containing `rep^q`
    pub power_maps: BTreeMap<u64, usize>,
}

/// Element-level lookup, available when the classes were computed from a group.
#[derive(Clone, Debug)]
struct Lookup {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    class_of: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct ClassData {
    group_order: u64,
    exponent: u64,
    classes: Vec<ClassInfo>,
    lookup: Option<Lookup>,
}

/// Primes at which power maps are stored. Together they generate every
/// power map modulo `e`.
pub fn stored_primes(e: u64) -> Vec<u64> {
    (2..=e.max(1)).filter(|&q| arith::is_prime(q)).collect()
}

/// Conjugacy classes of `g` by full enumeration.
pub fn conjugacy_classes(g: &PermGroup, budget: u64) -> Result<ClassData> {
    let order = g.order_u64();
    if order > budget {
        return Err(Error::BudgetExceeded { what: "group order", size: order, limit: budget });
    }
    let elements = g.elements();
    let index: HashMap<Permutation, u32> = elements.iter().enumerate().map(|(i, x)| (x.clone(), i as u32)).collect();
    let gens = g.generators();
    let mut raw_class = vec![u32::MAX; elements.len()];
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    for start in 0..elements.len() {
        if raw_class[start] != u32::MAX {
            continue;
        }
        let id = orbits.len() as u32;
        raw_class[start] = id;
        let mut orbit = vec![start as u32];
        let mut head = 0;
        while head < orbit.len() {
            let x = &elements[orbit[head] as usize];
            for s in gens {
                let y = index[&x.conjugate_by(s)];
                if raw_class[y as usize] == u32::MAX {
                    raw_class[y as usize] = id;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        orbits.push(orbit);
    }

    let mut keyed: Vec<(u64, Permutation, usize)> = orbits
        .iter()
        .enumerate()
        .map(|(i, orbit)| {
            let rep = orbit.iter().map(|&x| &elements[x as usize]).min().unwrap().clone();
            (rep.order(), rep, i)
        })
        .collect();
    keyed.sort();
    let mut renumber = vec![0u32; orbits.len()];
    for (new, (_, _, old)) in keyed.iter().enumerate() {
        renumber[*old] = new as u32;
    }
    let class_of: Vec<u32> = raw_class.iter().map(|&c| renumber[c as usize]).collect();
    let exponent = keyed.iter().fold(1, |acc, (o, _, _)| arith::lcm(acc, *o));
    let primes = stored_primes(exponent);
    let classes = keyed
        .into_iter()
        .map(|(o, rep, old)| {
            let power_maps = primes.iter().map(|&q| (q, class_of[index[&rep.pow(q as i64)] as usize] as usize)).collect();
            ClassInfo { representative: Some(rep), size: orbits[old].len() as u64, order: o, power_maps }
        })
        .collect();
    Ok(ClassData { group_order: order, exponent, classes, lookup: Some(Lookup { elements, index, class_of }) })
}

impl ClassData {
    /// Class data without element lookup, e.g. from an ingested table.
    pub fn from_parts(group_order: u64, classes: Vec<ClassInfo>) -> Result<ClassData> {
        let exponent = classes.iter().fold(1, |acc, c| arith::lcm(acc, c.order));
        let total: u64 = classes.iter().map(|c| c.size).sum();
        if total != group_order {
            return Err(Error::Inconsistent(format!("class sizes sum to {total}, expected {group_order}")));
        }
        for (i, c) in classes.iter().enumerate() {
            if c.size == 0 || !group_order.is_multiple_of(c.size) {
                return Err(Error::Inconsistent(format!("class {i} size {} does not divide {group_order}", c.size)));
            }
            if c.power_maps.values().any(|&k| k >= classes.len()) {
                return Err(Error::Inconsistent(format!("class {i} has a power map out of range")));
            }
        }
        Ok(ClassData { group_order, exponent, classes, lookup: None })
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn size(&self, i: usize) -> u64 {
        self.classes[i].size
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.classes[i].order
    }

    pub fn centralizer_order(&self, i: usize) -> u64 {
        self.group_order / self.classes[i].size
    }

    pub fn representative(&self, i: usize) -> Option<&Permutation> {
        self.classes[i].representative.as_ref()
    }

    pub fn has_elements(&self) -> bool {
        self.lookup.is_some()
    }

    /// Index of the class containing `rep_i^m`, composed from prime power maps.
    pub fn power(&self, i: usize, m: i64) -> Result<usize> {
        let e = self.exponent;
        let m = m.rem_euclid(e as i64) as u64;
        if m == 0 {
            return Ok(0);
        }
        let mut cur = i;
        for (q, k) in arith::factorize(m) {
            for _ in 0..k {
                cur = *self.classes[cur].power_maps.get(&q).ok_or_else(|| {
                    Error::Inconsistent(format!("no power map stored for {q}"))
                })?;
            }
        }
        Ok(cur)
    }

    /// Full power map `i -> class of rep_i^m`.
    pub fn power_map(&self, m: i64) -> Result<Vec<usize>> {
        (0..self.len()).map(|i| self.power(i, m)).collect()
    }

    pub fn inverse_class(&self, i: usize) -> usize {
        self.power(i, -1).expect("power maps cover all primes up to the exponent")
    }

    pub fn p_regular_classes(&self, p: u64) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.classes[i].order.is_multiple_of(p)).collect()
    }

    fn lookup(&self) -> Result<&Lookup> {
        self.lookup.as_ref().ok_or_else(|| Error::InvalidArgument("class data carries no group elements".into()))
    }

    /// Class index of a group element.
    pub fn class_of(&self, g: &Permutation) -> Result<usize> {
        let l = self.lookup()?;
        let idx = l.index.get(g).ok_or(Error::NotInGroup)?;
        Ok(l.class_of[*idx as usize] as usize)
    }

    pub fn members(&self, i: usize) -> Result<Vec<&Permutation>> {
        let l = self.lookup()?;
        Ok(l.elements.iter().zip(&l.class_of).filter(|(_, &c)| c as usize == i).map(|(x, _)| x).collect())
    }

    /// `a_{ijk} = #{(x, y) ∈ K_i × K_j : xy = z_k}` for the representative `z_k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Result<u64> {
        let l = self.lookup()?;
        let z = self.representative(k).expect("lookup implies representatives");
        let mut count = 0;
        for (x, &c) in l.elements.iter().zip(&l.class_of) {
            if c as usize == i && l.class_of[l.index[&(&x.inverse() * z)] as usize] as usize == j {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Row `j` of the class-multiplication coefficients: entry `[i][k]` is
    /// `a_{jik}`, so that `K_j K_i = Σ_k a_{jik} K_k` in the class algebra.
    pub fn class_matrix(&self, j: usize) -> Result<Vec<Vec<u64>>> {
        let l = self.lookup()?;
        let r = self.len();
        let mut m = vec![vec![0u64; r]; r];
        let members: Vec<&Permutation> =
            l.elements.iter().zip(&l.class_of).filter(|(_, &c)| c as usize == j).map(|(x, _)| x).collect();
        for (k, info) in self.classes.iter().enumerate() {
            let z = info.representative.as_ref().expect("lookup implies representatives");
            for x in &members {
                let y = &x.inverse() * z;
                let i = l.class_of[l.index[&y] as usize] as usize;
                m[i][k] += 1;
            }
        }
        Ok(m)
    }
}

/// Commuting `p`- and `p'`-parts of `g`, both powers of `g`.
pub fn p_decomposition(g: &Permutation, p: u64) -> (Permutation, Permutation) {
    g.p_parts(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::GroupSpec;

    fn classes(spec: &str) -> ClassData {
        conjugacy_classes(&GroupSpec::parse(spec).unwrap().build().unwrap(), DEFAULT_ORDER_BUDGET).unwrap()
    }

    #[test]
    fn class_sizes() {
        let sizes = |cd: &ClassData| cd.classes().iter().map(|c| c.size).collect::<Vec<_>>();
        assert_eq!(sizes(&classes("A(5)")), vec![1, 15, 20, 12, 12]);
        assert_eq!(sizes(&classes("S(4)")), vec![1, 6, 3, 8, 6]);
        assert_eq!(sizes(&classes("C(1)")), vec![1]);
    }

    #[test]
    fn p_regular() {
        let a5 = classes("A(5)");
        assert_eq!(a5.p_regular_classes(5), vec![0, 1, 2]);
        assert_eq!(a5.p_regular_classes(7).len(), 5);
        assert_eq!(classes("C(5)").p_regular_classes(5), vec![0]);
    }

    #[test]
    fn power_maps_compose() {
        let cd = classes("S(5)");
        let e = cd.exponent() as i64;
        for i in 0..cd.len() {
            for m in 0..e {
                for m2 in 0..e {
                    assert_eq!(cd.power(cd.power(i, m).unwrap(), m2).unwrap(), cd.power(i, m * m2).unwrap());
                }
                let rep = cd.representative(i).unwrap();
                assert_eq!(cd.power(i, m).unwrap(), cd.class_of(&rep.pow(m)).unwrap());
            }
        }
    }

    #[test]
    fn structure_constants() {
        let s3 = classes("S(3)");
        // classes: identity, transpositions, 3-cycles
        assert_eq!(s3.structure_constant(0, 0, 0).unwrap(), 1);
        assert_eq!(s3.structure_constant(1, 1, 2).unwrap(), 3);
        assert_eq!(s3.structure_constant(1, 0, 1).unwrap(), 1);
        assert_eq!(s3.structure_constant(1, 0, 2).unwrap(), 0);
        let m = s3.class_matrix(1).unwrap();
        for i in 0..3 {
            for k in 0..3 {
                assert_eq!(m[i][k], s3.structure_constant(1, i, k).unwrap());
            }
        }
    }

    #[test]
    fn p_decomposition_parts() {
        let g = Permutation::parse("(1 2 3)(4 5 6 7 8)", 0).unwrap();
        let (a, b) = p_decomposition(&g, 3);
        assert_eq!((a.order(), b.order()), (3, 5));
        assert_eq!(&a * &b, g);
    }
}
