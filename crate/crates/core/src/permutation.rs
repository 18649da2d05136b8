//! Permutations on `0..degree` and the cycle-notation parser.
//!
//! Composition is left to right: `(a * b).image(x) == b.image(a.image(x))`,
//! i.e. points are acted on from the right.

use std::fmt;
use std::ops::Mul;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u32).collect() })
    }

    /// Build from disjoint or overlapping cycles of 0-based points; cycles are
    /// multiplied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = std::collections::HashSet::new();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::Parse(format!("point {} exceeds degree {degree}", x + 1)));
                }
                if !seen.insert(x) {
                    return Err(Error::Parse(format!("point {} repeated in a cycle", x + 1)));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
            acc = &acc * &Permutation::from_images(images)?;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &x)| i as u32 != x).map(|(i, _)| i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out }
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Self {
        &(&a.inverse() * &b.inverse()) * &(a * b)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, c| arith::lcm(acc, c.len() as u64))
    }

    pub fn is_odd(&self) -> bool {
        self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1
    }

    /// Split into commuting `p`- and `p'`-parts, both powers of `self`.
    pub fn p_parts(&self, p: u64) -> (Permutation, Permutation) {
        let o = self.order();
        let op = arith::p_part(o, p);
        let opp = o / op;
        // a = 1 mod o_p, a = 0 mod o_p'
        let a = arith::crt(1 % op, op, 0, opp);
        let b = (o + 1 - a % o) % o;
        (self.pow(a as i64), self.pow(b as i64))
    }

    /// Parse 1-based cycle notation such as `(1 2 3)(4 5)` or `(1,2,3)`.
    /// `()` is the identity. The degree is `max(degree, largest point)`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let max_point = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
        Permutation::from_cycles(degree.max(max_point), &cycles)
    }

    /// Extend to a larger degree by fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }
}

pub(crate) fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(after) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' at {rest:?}")));
        };
        let close = after.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
        let body = &after[..close];
        let mut cycle = Vec::new();
        for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let x: usize = tok.parse().map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
            if x == 0 {
                return Err(Error::Parse("points are 1-based".into()));
            }
            cycle.push(x - 1);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = after[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation { images: self.images.iter().map(|&x| rhs.images[x as usize]).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let g = Permutation::parse("(1 2 3)(4 5)", 0).unwrap();
        assert_eq!(g.degree(), 5);
        assert_eq!(g.image(0), 1);
        assert_eq!(g.image(2), 0);
        assert_eq!(g.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::parse(" ( 1,2 , 3 ) ( 4 5 ) ", 0).unwrap(), g);
        assert!(Permutation::parse("()", 3).unwrap().is_identity());
        assert!(Permutation::parse("(1 2", 0).is_err());
        assert!(Permutation::parse("(0 1)", 0).is_err());
        assert!(Permutation::parse("(1 1)", 0).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        // 1 -> 2 under a, then 2 -> 3 under b
        assert_eq!((&a * &b).image(0), 2);
        assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn p_parts_of_order_six_and_fifteen() {
        let g = Permutation::parse("(1 2 3 4 5 6)", 0).unwrap();
        let (gp, gq) = g.p_parts(2);
        assert_eq!(gp, g.pow(3));
        assert_eq!(gq, g.pow(4));
        let h = Permutation::parse("(1 2 3)(4 5 6 7 8)", 0).unwrap();
        let (hp, hq) = h.p_parts(3);
        assert_eq!(hp, h.pow(10));
        assert_eq!(hq, h.pow(6));
        assert_eq!((hp.order(), hq.order()), (3, 5));
        assert_eq!(&hp * &hq, h);
        assert_eq!(&hq * &hp, h);
    }

    #[test]
    fn conjugation_matches_definition() {
        let s = Permutation::parse("(1 2 3)", 4).unwrap();
        let g = Permutation::parse("(1 4)(2 3)", 4).unwrap();
        assert_eq!(s.conjugate_by(&g), &(&g.inverse() * &s) * &g);
    }
}
