//! A small expression language naming permutation groups.
//!
//! ```text
//! S(n) | Sym(n)          symmetric group on n points
//! A(n) | Alt(n)          alternating group
//! D(2n) | Dihedral(2n)   dihedral group of order 2n
//! C(n) | Cyclic(n)       cyclic group of order n
//! Q(4n) | Dic(4n)        dicyclic group of order 4n (Q(8) is quaternion)
//! GL(d,q) | SL(d,q)      matrix groups over a prime field, acting on nonzero vectors
//! perm:"(1 2 3),(1 2)"   explicit generators in 1-based cycle notation
//! X x Y                  direct product
//! ```

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith;
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;
use crate::permutation::{parse_cycles, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    GL,
    SL,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    /// dihedral group of the given order
    Dihedral(usize),
    Cyclic(usize),
    /// dicyclic group of the given order
    Dicyclic(usize),
    Matrix { kind: MatrixKind, dim: usize, q: u64 },
    Explicit(Vec<String>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty group spec".into()));
        }
        let factors = split_product(text)?;
        let mut specs = factors.into_iter().map(parse_atom).collect::<Result<Vec<_>>>()?;
        let mut acc = specs.remove(0);
        for s in specs {
            acc = GroupSpec::Product(Box::new(acc), Box::new(s));
        }
        Ok(acc)
    }

    /// Short canonical name, e.g. `A5`, `GL(2,3)`, `S4xC3`.
    pub fn name(&self) -> String {
        match self {
            GroupSpec::Symmetric(n) => format!("S{n}"),
            GroupSpec::Alternating(n) => format!("A{n}"),
            GroupSpec::Dihedral(n) => format!("D{n}"),
            GroupSpec::Cyclic(n) => format!("C{n}"),
            GroupSpec::Dicyclic(n) => format!("Q{n}"),
            GroupSpec::Matrix { kind, dim, q } => format!("{kind:?}({dim},{q})"),
            GroupSpec::Explicit(gens) => format!("perm:{}", gens.join(",")),
            GroupSpec::Product(a, b) => format!("{}x{}", a.name(), b.name()),
        }
    }

    /// Closed-form order of the named family; `None` for explicit generators.
    pub fn expected_order(&self) -> Option<BigUint> {
        let fact = |n: usize| (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
        Some(match self {
            GroupSpec::Symmetric(n) => fact(*n),
            GroupSpec::Alternating(n) => {
                if *n < 2 {
                    BigUint::one()
                } else {
                    fact(*n) / BigUint::from(2u32)
                }
            }
            GroupSpec::Dihedral(n) | GroupSpec::Cyclic(n) | GroupSpec::Dicyclic(n) => BigUint::from(*n),
            GroupSpec::Matrix { kind, dim, q } => {
                let qd = BigUint::from(*q).pow(*dim as u32);
                let gl = (0..*dim).fold(BigUint::one(), |acc, i| acc * (&qd - BigUint::from(*q).pow(i as u32)));
                match kind {
                    MatrixKind::GL => gl,
                    MatrixKind::SL => gl / BigUint::from(q - 1),
                }
            }
            GroupSpec::Explicit(_) => return None,
            GroupSpec::Product(a, b) => a.expected_order()? * b.expected_order()?,
        })
    }

    pub fn build(&self) -> Result<PermGroup> {
        let (degree, gens) = self.generators()?;
        PermGroup::new(degree, gens)
    }

    fn generators(&self) -> Result<(usize, Vec<Permutation>)> {
        let cyc = |n: usize, cycles: Vec<Vec<usize>>| Permutation::from_cycles(n, &cycles);
        match *self {
            GroupSpec::Symmetric(n) => {
                let n = n.max(1);
                if n == 1 {
                    return Ok((1, vec![]));
                }
                Ok((n, vec![cyc(n, vec![vec![0, 1]])?, cyc(n, vec![(0..n).collect()])?]))
            }
            GroupSpec::Alternating(n) => {
                let n = n.max(1);
                if n < 3 {
                    return Ok((n, vec![]));
                }
                let mut gens = vec![cyc(n, vec![vec![0, 1, 2]])?];
                if n > 3 {
                    let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
                    gens.push(cyc(n, vec![long])?);
                }
                Ok((n, gens))
            }
            GroupSpec::Dihedral(order) => {
                if order == 0 || order % 2 == 1 {
                    return Err(Error::Parse(format!("dihedral order must be even, got {order}")));
                }
                match order / 2 {
                    1 => Ok((2, vec![cyc(2, vec![vec![0, 1]])?])),
                    2 => Ok((4, vec![cyc(4, vec![vec![0, 1], vec![2, 3]])?, cyc(4, vec![vec![0, 2], vec![1, 3]])?])),
                    n => {
                        let rot = cyc(n, vec![(0..n).collect()])?;
                        let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
                        Ok((n, vec![rot, refl]))
                    }
                }
            }
            GroupSpec::Cyclic(n) => {
                if n == 0 {
                    return Err(Error::Parse("cyclic order must be positive".into()));
                }
                if n == 1 {
                    return Ok((1, vec![]));
                }
                Ok((n, vec![cyc(n, vec![(0..n).collect()])?]))
            }
            GroupSpec::Dicyclic(order) => {
                if order == 0 || order % 4 != 0 {
                    return Err(Error::Parse(format!("dicyclic order must be a multiple of 4, got {order}")));
                }
                dicyclic(order / 4)
            }
            GroupSpec::Matrix { kind, dim, q } => matrix_group(kind, dim, q),
            GroupSpec::Explicit(ref gens) => {
                let cycles = gens.iter().map(|g| parse_cycles(g)).collect::<Result<Vec<_>>>()?;
                let degree = cycles.iter().flatten().flatten().map(|&x| x + 1).max().unwrap_or(1);
                let perms = cycles.iter().map(|c| Permutation::from_cycles(degree, c)).collect::<Result<Vec<_>>>()?;
                Ok((degree, perms))
            }
            GroupSpec::Product(ref a, ref b) => {
                let (da, ga) = a.generators()?;
                let (db, gb) = b.generators()?;
                let n = da + db;
                let mut gens: Vec<Permutation> = ga.iter().map(|g| g.extend_to(n)).collect();
                for g in gb {
                    let mut images: Vec<usize> = (0..da).collect();
                    images.extend(g.images().iter().map(|&x| x as usize + da));
                    gens.push(Permutation::from_images(images)?);
                }
                Ok((n, gens))
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Left-regular representation of `<a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>`.
fn dicyclic(n: usize) -> Result<(usize, Vec<Permutation>)> {
    let m = 2 * n;
    let idx = |k: usize, j: usize| k % m + m * j;
    let mut left_a = vec![0; 2 * m];
    let mut left_x = vec![0; 2 * m];
    for j in 0..2 {
        for k in 0..m {
            left_a[idx(k, j)] = idx(k + 1, j);
            left_x[idx(k, j)] = if j == 0 { idx(m - k, 1) } else { idx(m - k + n, 0) };
        }
    }
    Ok((2 * m, vec![Permutation::from_images(left_a)?, Permutation::from_images(left_x)?]))
}

/// Matrices acting on the right of nonzero row vectors of `F_q^dim`.
fn matrix_group(kind: MatrixKind, dim: usize, q: u64) -> Result<(usize, Vec<Permutation>)> {
    if !arith::is_prime(q) {
        return Err(Error::Parse(format!("matrix groups are supported over prime fields only, got q = {q}")));
    }
    if dim == 0 {
        return Err(Error::Parse("matrix dimension must be positive".into()));
    }
    let points = (q as usize).pow(dim as u32) - 1;
    let decode = |mut code: usize| -> Vec<u64> {
        let mut v = vec![0; dim];
        for c in v.iter_mut() {
            *c = (code % q as usize) as u64;
            code /= q as usize;
        }
        v
    };
    let encode = |v: &[u64]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * q as usize + c as usize) };
    let act = |m: &[Vec<u64>]| -> Result<Permutation> {
        let images = (1..=points)
            .map(|code| {
                let v = decode(code);
                let w: Vec<u64> = (0..dim).map(|j| (0..dim).map(|i| v[i] * m[i][j]).sum::<u64>() % q).collect();
                encode(&w) - 1
            })
            .collect();
        Permutation::from_images(images)
    };
    let identity = || -> Vec<Vec<u64>> { (0..dim).map(|i| (0..dim).map(|j| u64::from(i == j)).collect()).collect() };
    let mut gens = Vec::new();
    if kind == MatrixKind::GL && q > 2 {
        let mut m = identity();
        m[0][0] = arith::primitive_root(q);
        gens.push(act(&m)?);
    }
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                let mut m = identity();
                m[i][j] = 1;
                gens.push(act(&m)?);
            }
        }
    }
    Ok((points.max(1), if points == 0 { vec![] } else { gens }))
}

fn split_product(text: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut in_quote = false;
    let mut start = 0;
    let mut prev_sig: Option<char> = None;
    for (i, c) in text.char_indices() {
        match c {
            '"' => in_quote = !in_quote,
            '(' if !in_quote => depth += 1,
            ')' if !in_quote => depth -= 1,
            'x' | '×' if !in_quote && depth == 0 && matches!(prev_sig, Some(')') | Some('"')) => {
                parts.push(text[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
        if !c.is_whitespace() {
            prev_sig = Some(c);
        }
    }
    if depth != 0 || in_quote {
        return Err(Error::Parse(format!("unbalanced group spec {text:?}")));
    }
    parts.push(text[start..].trim());
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("empty factor in {text:?}")));
    }
    Ok(parts)
}

fn parse_atom(text: &str) -> Result<GroupSpec> {
    if let Some(rest) = text.strip_prefix("perm:") {
        let body = rest.trim().trim_matches('"');
        let mut gens = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, c) in body.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    gens.push(body[start..i].trim().to_string());
                    start = i + 1;
                }
                _ => {}
            }
        }
        gens.push(body[start..].trim().to_string());
        gens.retain(|g| !g.is_empty());
        for g in &gens {
            parse_cycles(g)?;
        }
        return Ok(GroupSpec::Explicit(gens));
    }
    if text.starts_with('(') && text.ends_with(')') {
        return GroupSpec::parse(&text[1..text.len() - 1]);
    }
    let open = text.find('(').ok_or_else(|| Error::Parse(format!("unknown group {text:?}")))?;
    if !text.ends_with(')') {
        return Err(Error::Parse(format!("expected ')' at end of {text:?}")));
    }
    let head = text[..open].trim();
    let args: Vec<usize> = text[open + 1..text.len() - 1]
        .split(',')
        .map(|a| a.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad argument {a:?} in {text:?}"))))
        .collect::<Result<_>>()?;
    let one = |args: &[usize]| -> Result<usize> {
        match args {
            [n] => Ok(*n),
            _ => Err(Error::Parse(format!("{head} takes one argument"))),
        }
    };
    Ok(match head {
        "S" | "Sym" => GroupSpec::Symmetric(one(&args)?),
        "A" | "Alt" => GroupSpec::Alternating(one(&args)?),
        "D" | "Dihedral" => GroupSpec::Dihedral(one(&args)?),
        "C" | "Cyclic" => GroupSpec::Cyclic(one(&args)?),
        "Q" | "Dic" | "Dicyclic" => GroupSpec::Dicyclic(one(&args)?),
        "GL" | "SL" => match args[..] {
            [dim, q] => GroupSpec::Matrix {
                kind: if head == "GL" { MatrixKind::GL } else { MatrixKind::SL },
                dim,
                q: q as u64,
            },
            _ => return Err(Error::Parse(format!("{head} takes (dim, q)"))),
        },
        "MatrixGroup" => return Err(Error::Parse("use GL(d,q) or SL(d,q)".into())),
        _ => return Err(Error::Parse(format!("unknown group family {head:?}"))),
    })
}
