//! Linear algebra and polynomials over a prime field `F_ℓ`, `ℓ < 2^62`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        debug_assert!(arith::is_prime(p));
        Fp { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.p - a }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, a: u64, e: u64) -> u64 {
        arith::pow_mod(a, e, self.p)
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn to_signed(self, a: u64) -> i64 {
        if a > self.p / 2 { a as i64 - self.p as i64 } else { a as i64 }
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(f: Fp, m: &mut [Vec<u64>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for k in c..cols {
                    let t = f.mul(factor, m[r][k]);
                    m[i][k] = f.sub(m[i][k], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : A v = 0}` for a square or rectangular `A` (rows × cols).
pub fn nullspace(f: Fp, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[r][fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, ascending coefficients, via
/// reduction to upper Hessenberg form.
pub fn charpoly(f: Fp, a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = f.mul(u, h[m][j]);
                h[i][j] = f.sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[i]);
                row[m] = f.add(row[m], t);
            }
        }
    }
    // p_k = char poly of the leading k×k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // p_k = (x - h[k-1][k-1]) p_{k-1} - Σ_{i<k-1} h[i][k-1] (Π_{j=i+1}^{k-1} h[j][j-1]) p_i
        let prev = &polys[k - 1];
        let mut pk = vec![0u64; k + 1];
        for (d, &c) in prev.iter().enumerate() {
            pk[d + 1] = f.add(pk[d + 1], c);
            pk[d] = f.sub(pk[d], f.mul(h[k - 1][k - 1], c));
        }
        let mut t = 1u64;
        for i in (0..k - 1).rev() {
            t = f.mul(t, h[i + 1][i]);
            let coef = f.mul(t, h[i][k - 1]);
            if coef != 0 {
                for (d, &c) in polys[i].iter().enumerate() {
                    pk[d] = f.sub(pk[d], f.mul(coef, c));
                }
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

pub fn mat_mul(f: Fp, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).fold(0, |acc, k| f.add(acc, f.mul(row[k], b[k][c]))))
                .collect()
        })
        .collect()
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn poly_mul(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub fn poly_rem(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    poly_divmod(f, a, b).1
}

pub fn poly_divmod(f: Fp, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let inv = f.inv(b[db]);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = f.mul(*r.last().unwrap(), inv);
        q[shift] = c;
        for (i, &y) in b.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, y));
        }
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub fn poly_gcd(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = f.inv(lead);
        for x in a.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
    a
}

/// `base^e mod m`.
pub fn poly_powmod(f: Fp, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(f, &poly_mul(f, &acc, &b), m);
        }
        b = poly_rem(f, &poly_mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// Distinct roots in `F_ℓ` of `g`, sorted ascending. `seed` drives the
/// random splitting only; the result does not depend on it.
pub fn distinct_roots(f: Fp, g: &[u64], seed: u64) -> Vec<u64> {
    let g = trim(g.to_vec());
    if g.len() <= 1 {
        return vec![];
    }
    // product of the distinct linear factors: gcd(g, x^ℓ - x)
    let mut xl = poly_powmod(f, &[0, 1], f.p, &g);
    xl.resize(xl.len().max(2), 0);
    xl[1] = f.sub(xl[1], 1);
    let split = poly_gcd(f, &g, &xl);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut roots = Vec::new();
    equal_degree_split(f, split, &mut rng, &mut roots);
    roots.sort_unstable();
    roots
}

fn equal_degree_split(f: Fp, g: Vec<u64>, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(f.neg(f.mul(g[0], f.inv(g[1])))),
        _ => {
            if f.p == 2 {
                // only possible roots are 0 and 1
                for x in 0..2 {
                    if eval(f, &g, x) == 0 {
                        out.push(x);
                    }
                }
                return;
            }
            loop {
                let a = rng.gen_range(0..f.p);
                let mut h = poly_powmod(f, &[a, 1], (f.p - 1) / 2, &g);
                h.resize(h.len().max(1), 0);
                h[0] = f.sub(h[0], 1);
                let d = poly_gcd(f, &g, &h);
                if d.len() > 1 && d.len() < g.len() {
                    let (q, _) = poly_divmod(f, &g, &d);
                    equal_degree_split(f, d, rng, out);
                    equal_degree_split(f, q, rng, out);
                    return;
                }
            }
        }
    }
}

pub fn eval(f: Fp, g: &[u64], x: u64) -> u64 {
    g.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_matches_roots() {
        let f = Fp::new(101);
        // companion-like matrix with eigenvalues 2, 3, 3
        let a = vec![vec![2, 1, 0], vec![0, 3, 0], vec![0, 0, 3]];
        let cp = charpoly(f, &a);
        assert_eq!(cp.len(), 4);
        assert_eq!(eval(f, &cp, 2), 0);
        assert_eq!(eval(f, &cp, 3), 0);
        assert_eq!(distinct_roots(f, &cp, 1), vec![2, 3]);
    }

    #[test]
    fn charpoly_dense() {
        let f = Fp::new(10007);
        let a = vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8], vec![2, 0, 1, 9], vec![3, 3, 1, 0]];
        let cp = charpoly(f, &a);
        // Cayley–Hamilton
        let n = a.len();
        let mut acc = vec![vec![0u64; n]; n];
        let mut power: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
        for &c in &cp {
            for i in 0..n {
                for j in 0..n {
                    acc[i][j] = f.add(acc[i][j], f.mul(c, power[i][j]));
                }
            }
            power = mat_mul(f, &power, &a);
        }
        assert!(acc.iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn nullspace_dimension() {
        let f = Fp::new(7);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(f, &a);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(a[0].iter().zip(&v).fold(0, |acc, (x, y)| f.add(acc, f.mul(*x, *y))), 0);
        }
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = Fp::new(61);
        let mut g = vec![1u64];
        for r in [5u64, 17, 17, 40, 60] {
            g = poly_mul(f, &g, &[f.neg(r), 1]);
        }
        // an irreducible quadratic factor x^2 - 2 (2 is a non-residue mod 61)
        g = poly_mul(f, &g, &[f.neg(2), 0, 1]);
        assert_eq!(distinct_roots(f, &g, 7), vec![5, 17, 40, 60]);
    }
}
