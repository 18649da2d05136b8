//! Ordinary character tables: Dixon–Schneider computation, exact
//! verification and the canonical JSON file format.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::classdata::{self, ClassData, ClassInfo};
use crate::cyclotomic::{self, Cyclo, CycloJson};
use crate::error::{Error, Result};
use crate::modp::{self, Fp};
use crate::permgroup::PermGroup;
use crate::permutation::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableMode {
    Full,
    Degrees,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Computed,
    Ingested,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    name: String,
    order: BigUint,
    degree: Option<usize>,
    mode: TableMode,
    provenance: Provenance,
    classes: Option<ClassData>,
    chars: Vec<Vec<Cyclo>>,
    degrees: Vec<u64>,
}

/// Seed for the randomized root splitting in Dixon–Schneider.
pub const DEFAULT_SEED: u64 = 0x00C0_FFEE;

/// Compute the character table of `g`.
pub fn character_table(g: &PermGroup, name: &str, budget: u64) -> Result<CharacterTable> {
    character_table_seeded(g, name, budget, DEFAULT_SEED)
}

pub fn character_table_seeded(g: &PermGroup, name: &str, budget: u64, seed: u64) -> Result<CharacterTable> {
    let cd = classdata::conjugacy_classes(g, budget)?;
    CharacterTable::from_class_data_seeded(name, g.degree(), cd, seed)
}

impl CharacterTable {
    /// Run Dixon–Schneider on precomputed class data (which must carry elements).
    pub fn from_class_data(name: &str, degree: usize, cd: ClassData) -> Result<CharacterTable> {
        Self::from_class_data_seeded(name, degree, cd, DEFAULT_SEED)
    }

    pub fn from_class_data_seeded(name: &str, degree: usize, cd: ClassData, seed: u64) -> Result<CharacterTable> {
        let chars = dixon_schneider_seeded(&cd, seed)?;
        let degrees = chars.iter().map(|row| row[0].as_integer().unwrap() as u64).collect();
        Ok(CharacterTable {
            name: name.to_string(),
            order: BigUint::from(cd.group_order()),
            degree: Some(degree),
            mode: TableMode::Full,
            provenance: Provenance::Computed,
            classes: Some(cd),
            chars,
            degrees,
        })
    }

    /// A degree-list-only table, usable for degree counts.
    pub fn from_degrees(name: &str, order: BigUint, mut degrees: Vec<u64>) -> Result<CharacterTable> {
        degrees.sort_unstable();
        let sum: BigUint = degrees.iter().map(|&d| BigUint::from(d) * BigUint::from(d)).sum();
        if sum != order {
            return Err(Error::Verification(format!("sum of squared degrees is {sum}, group order is {order}")));
        }
        if degrees.first() != Some(&1) {
            return Err(Error::Verification("a degree list must contain the trivial degree 1".into()));
        }
        Ok(CharacterTable {
            name: name.to_string(),
            order,
            degree: None,
            mode: TableMode::Degrees,
            provenance: Provenance::Ingested,
            classes: None,
            chars: Vec::new(),
            degrees,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> u64 {
        self.order.to_u64().expect("group order exceeds u64")
    }

    pub fn mode(&self) -> TableMode {
        self.mode
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_full(&self) -> bool {
        self.mode == TableMode::Full
    }

    pub fn classes(&self) -> Result<&ClassData> {
        self.classes.as_ref().ok_or(Error::PartialTable)
    }

    pub fn chars(&self) -> &[Vec<Cyclo>] {
        &self.chars
    }

    pub fn value(&self, r: usize, j: usize) -> &Cyclo {
        &self.chars[r][j]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn num_chars(&self) -> usize {
        self.degrees.len()
    }

    /// Conductor of the stored values, `exp(G)`.
    pub fn exponent(&self) -> Result<u64> {
        Ok(self.classes()?.exponent())
    }

    /// Replace ingested class data by class data carrying group elements,
    /// after checking that both describe the same classes.
    pub fn attach_classes(&mut self, cd: ClassData) -> Result<()> {
        let own = self.classes()?;
        let same = own.len() == cd.len()
            && own.classes().iter().zip(cd.classes()).all(|(a, b)| {
                a.size == b.size && a.order == b.order && a.representative == b.representative
            });
        if !same {
            return Err(Error::Inconsistent(format!("class data does not match the table of {}", self.name)));
        }
        self.classes = Some(cd);
        Ok(())
    }

    /// Whether class data with element lookup is attached.
    pub fn has_group_data(&self) -> bool {
        self.classes.as_ref().is_some_and(ClassData::has_elements)
    }

    /// Canonical JSON text (sorted keys, trailing newline).
    pub fn to_json(&self) -> String {
        let file = TableFile {
            classes: self
                .classes
                .iter()
                .flat_map(|cd| cd.classes())
                .map(|c| ClassFile {
                    order: c.order,
                    powermaps: c.power_maps.iter().map(|(q, k)| (q.to_string(), *k)).collect(),
                    representative: c.representative.as_ref().map(ToString::to_string),
                    size: c.size,
                })
                .collect(),
            degrees: (self.mode == TableMode::Degrees).then(|| self.degrees.clone()),
            group: GroupFile {
                degree: self.degree,
                exponent: self.classes.as_ref().map(ClassData::exponent),
                name: self.name.clone(),
                order: self.order.to_string(),
            },
            irreducibles: self.chars.iter().map(|row| row.iter().map(Cyclo::to_json).collect()).collect(),
            mode: self.mode,
        };
        let value = serde_json::to_value(&file).expect("table serializes");
        let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
        text.push('\n');
        text
    }

    /// Parse and verify a table file.
    pub fn from_json(text: &str) -> Result<CharacterTable> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| Error::Schema {
            field: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let schema = |field: &str, message: String| Error::Schema { field: field.to_string(), message };
        let order: BigUint =
            file.group.order.parse().map_err(|_| schema("group.order", format!("bad order {:?}", file.group.order)))?;
        match file.mode {
            TableMode::Degrees => {
                if !file.classes.is_empty() || !file.irreducibles.is_empty() {
                    return Err(schema("mode", "degrees mode carries no classes or irreducibles".into()));
                }
                let degrees = file.degrees.ok_or_else(|| schema("degrees", "missing in degrees mode".into()))?;
                CharacterTable::from_degrees(&file.group.name, order, degrees)
            }
            TableMode::Full => {
                if file.degrees.is_some() {
                    return Err(schema("degrees", "only allowed in degrees mode".into()));
                }
                let n = order.to_u64().ok_or_else(|| schema("group.order", "too large for a full table".into()))?;
                let mut infos = Vec::with_capacity(file.classes.len());
                for (i, c) in file.classes.iter().enumerate() {
                    let representative = match &c.representative {
                        Some(text) => Some(Permutation::parse(text, file.group.degree.unwrap_or(0)).map_err(|e| {
                            schema(&format!("classes[{i}].representative"), e.to_string())
                        })?),
                        None => None,
                    };
                    let mut power_maps = BTreeMap::new();
                    for (q, k) in &c.powermaps {
                        let q: u64 = q
                            .parse()
                            .map_err(|_| schema(&format!("classes[{i}].powermaps"), format!("bad key {q:?}")))?;
                        power_maps.insert(q, *k);
                    }
                    infos.push(ClassInfo { representative, size: c.size, order: c.order, power_maps });
                }
                let cd = ClassData::from_parts(n, infos).map_err(|e| schema("classes", e.to_string()))?;
                let e = cd.exponent();
                if file.group.exponent.is_some_and(|x| x != e) {
                    return Err(schema("group.exponent", format!("does not match class orders (lcm {e})")));
                }
                if let Some(i) = cd.classes().iter().position(|c| classdata::stored_primes(e).iter().any(|q| !c.power_maps.contains_key(q))) {
                    return Err(schema(&format!("classes[{i}].powermaps"), format!("a map for every prime up to {e} is required")));
                }
                let mut chars = Vec::with_capacity(file.irreducibles.len());
                for (r, row) in file.irreducibles.iter().enumerate() {
                    if row.len() != cd.len() {
                        return Err(schema(&format!("irreducibles[{r}]"), format!("expected {} entries", cd.len())));
                    }
                    let mut out = Vec::with_capacity(row.len());
                    for (j, v) in row.iter().enumerate() {
                        let value = Cyclo::from_json(v).map_err(|err| schema(&format!("irreducibles[{r}][{j}]"), err.to_string()))?;
                        if e % value.conductor() != 0 {
                            return Err(schema(&format!("irreducibles[{r}][{j}]"), format!("conductor does not divide {e}")));
                        }
                        out.push(value.lift(e));
                    }
                    chars.push(out);
                }
                let degrees = chars
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        row.first()
                            .and_then(Cyclo::as_integer)
                            .filter(|&d| d > 0)
                            .map(|d| d as u64)
                            .ok_or_else(|| schema(&format!("irreducibles[{r}][0]"), "degree must be a positive integer".into()))
                    })
                    .collect::<Result<Vec<u64>>>()?;
                let table = CharacterTable {
                    name: file.group.name,
                    order,
                    degree: file.group.degree,
                    mode: TableMode::Full,
                    provenance: Provenance::Ingested,
                    classes: Some(cd),
                    chars,
                    degrees,
                };
                let check = verify_table(&table);
                if let Some(failure) = check.failure {
                    return Err(Error::Verification(failure));
                }
                Ok(table)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    classes: Vec<ClassFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<u64>>,
    group: GroupFile,
    irreducibles: Vec<Vec<CycloJson>>,
    mode: TableMode,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassFile {
    order: u64,
    powermaps: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    representative: Option<String>,
    size: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exponent: Option<u64>,
    name: String,
    order: String,
}

pub fn write_table(t: &CharacterTable) -> String {
    t.to_json()
}

pub fn read_table(text: &str) -> Result<CharacterTable> {
    CharacterTable::from_json(text)
}

/// Parse a degree list: `name = ...` and `order = ...` lines, `#` comments,
/// and degrees separated by whitespace or commas (optionally after `degrees =`).
pub fn parse_degree_list(text: &str) -> Result<CharacterTable> {
    let mut name = None;
    let mut order = None;
    let mut degrees = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut body = line;
        if let Some((key, value)) = line.split_once('=') {
            match key.trim() {
                "name" => {
                    name = Some(value.trim().to_string());
                    continue;
                }
                "order" => {
                    let v: BigUint = value
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("line {}: bad order {:?}", lineno + 1, value.trim())))?;
                    order = Some(v);
                    continue;
                }
                "degrees" => body = value,
                other => return Err(Error::Parse(format!("line {}: unknown key {other:?}", lineno + 1))),
            }
        }
        for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let d: u64 = tok.parse().map_err(|_| Error::Parse(format!("line {}: bad degree {tok:?}", lineno + 1)))?;
            if d == 0 {
                return Err(Error::Parse(format!("line {}: degree 0", lineno + 1)));
            }
            degrees.push(d);
        }
    }
    let name = name.ok_or_else(|| Error::Parse("missing `name = ...`".into()))?;
    let order = order.ok_or_else(|| Error::Parse("missing `order = ...`".into()))?;
    CharacterTable::from_degrees(&name, order, degrees)
}

// ---------------------------------------------------------------------------
// Dixon–Schneider

/// Smallest prime `ℓ ≡ 1 (mod e)` with `ℓ > bound`.
pub fn dixon_prime(e: u64, bound: u64) -> u64 {
    let mut k = bound / e + 1;
    loop {
        let l = k * e + 1;
        if arith::is_prime(l) {
            return l;
        }
        k += 1;
    }
}

/// Irreducible characters, as rows over the classes of `cd`, sorted by
/// degree with the trivial character first and ties broken by descending
/// value vectors.
pub fn dixon_schneider(cd: &ClassData) -> Result<Vec<Vec<Cyclo>>> {
    dixon_schneider_seeded(cd, DEFAULT_SEED)
}

pub fn dixon_schneider_seeded(cd: &ClassData, seed: u64) -> Result<Vec<Vec<Cyclo>>> {
    let r = cd.len();
    let n = cd.group_order();
    let e = cd.exponent();
    let f = Fp::new(dixon_prime(e, 2 * n));
    let ell = f.p;
    let z = f.pow(arith::primitive_root(ell), (ell - 1) / e);

    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m: Vec<Vec<u64>> =
            cd.class_matrix(j)?.into_iter().map(|row| row.into_iter().map(|x| x % ell).collect()).collect();
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split_space(f, &m, space, seed)?);
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() != 1) {
        return Err(Error::SplittingFailure(format!("a common eigenspace of dimension {} remains", s.len())));
    }

    let sizes_inv: Vec<u64> = (0..r).map(|j| f.inv(cd.size(j) % ell)).collect();
    let inverse: Vec<usize> = (0..r).map(|j| cd.inverse_class(j)).collect();
    let powers: Vec<Vec<usize>> = (0..r)
        .map(|j| (0..cd.element_order(j)).map(|t| cd.power(j, t as i64)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let mut rows = Vec::with_capacity(r);
    for space in spaces {
        let w0 = space[0][0];
        if w0 == 0 {
            return Err(Error::SplittingFailure("eigenvector vanishes on the identity class".into()));
        }
        let scale = f.inv(w0);
        let w: Vec<u64> = space[0].iter().map(|&x| f.mul(x, scale)).collect();
        let s = (0..r).fold(0, |acc, j| f.add(acc, f.mul(f.mul(w[j], w[inverse[j]]), sizes_inv[j])));
        if s == 0 {
            return Err(Error::SplittingFailure("degenerate central character".into()));
        }
        let d2 = f.mul(n % ell, f.inv(s));
        let d = arith::isqrt(d2);
        if d == 0 || d * d != d2 || !n.is_multiple_of(d) {
            return Err(Error::SplittingFailure(format!("no integral degree for squared degree residue {d2}")));
        }
        let values: Vec<u64> = (0..r).map(|j| f.mul(f.mul(w[j], d % ell), sizes_inv[j])).collect();
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            let o = cd.element_order(j);
            let zo = f.pow(z, e / o);
            let o_inv = f.inv(o % ell);
            let mut poly = vec![0i128; e as usize];
            let mut total = 0u64;
            for m in 0..o {
                // c_m = o^-1 Σ_t χ(g^t) ζ^(-mt)
                let step = f.pow(zo, (o - m) % o);
                let mut acc = 0u64;
                let mut root = 1u64;
                for t in 0..o as usize {
                    acc = f.add(acc, f.mul(values[powers[j][t]], root));
                    root = f.mul(root, step);
                }
                let c = f.mul(acc, o_inv);
                if c > d {
                    return Err(Error::SplittingFailure(format!("eigenvalue multiplicity {c} exceeds degree {d}")));
                }
                total += c;
                poly[(m * (e / o)) as usize] += c as i128;
            }
            if total != d {
                return Err(Error::SplittingFailure(format!("multiplicities sum to {total}, degree is {d}")));
            }
            row.push(Cyclo::from_int_poly(e, poly));
        }
        rows.push((d, row));
    }

    let one = Cyclo::integer(e, 1);
    let is_trivial = |row: &[Cyclo]| row.iter().all(|v| *v == one);
    rows.sort_by(|(da, a), (db, b)| {
        da.cmp(db).then_with(|| is_trivial(b).cmp(&is_trivial(a))).then_with(|| {
            a.iter().zip(b).map(|(x, y)| y.cmp_canonical(x)).find(|o| *o != Ordering::Equal).unwrap_or(Ordering::Equal)
        })
    });
    Ok(rows.into_iter().map(|(_, row)| row).collect())
}

/// Split an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of `m` restricted to it.
fn split_space(f: Fp, m: &[Vec<u64>], basis: Vec<Vec<u64>>, seed: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let r = m.len();
    let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).unwrap()).collect();
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..r).map(|i| (0..r).fold(0, |acc, k| f.add(acc, f.mul(m[i][k], b[k])))).collect())
        .collect();
    // restricted[t][s]: coordinate t of the image of basis vector s
    let restricted: Vec<Vec<u64>> = (0..d).map(|t| (0..d).map(|s| images[s][pivots[t]]).collect()).collect();
    let cp = modp::charpoly(f, &restricted);
    let roots = modp::distinct_roots(f, &cp, seed);
    if roots.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().map(|(k, &x)| if i == k { f.sub(x, lambda) } else { x }).collect())
            .collect();
        let coords = modp::nullspace(f, &shifted);
        let mut vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                (0..r).map(|i| (0..d).fold(0, |acc, s| f.add(acc, f.mul(c[s], basis[s][i])))).collect()
            })
            .collect();
        modp::rref(f, &mut vectors);
        total += vectors.len();
        out.push(vectors);
    }
    if total != d {
        return Err(Error::SplittingFailure(format!("eigenspaces span {total} of {d} dimensions")));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Verification

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<String>,
    pub failure: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exact check of the table invariants; stops at the first failure.
pub fn verify_table(t: &CharacterTable) -> VerifyReport {
    let mut report = VerifyReport { checks: Vec::new(), failure: None };
    if let Err(msg) = run_checks(t, &mut report.checks) {
        report.failure = Some(msg);
    }
    report
}

fn run_checks(t: &CharacterTable, checks: &mut Vec<String>) -> std::result::Result<(), String> {
    let sum: BigUint = t.degrees.iter().map(|&d| BigUint::from(d) * BigUint::from(d)).sum();
    checks.push("sum of squared degrees".into());
    if sum != t.order {
        return Err(format!("sum of squared degrees is {sum}, group order is {}", t.order));
    }
    if !t.is_full() {
        return Ok(());
    }
    let cd = t.classes.as_ref().ok_or("full table without classes")?;
    let r = cd.len();
    checks.push("square table".into());
    if t.chars.len() != r || t.chars.iter().any(|row| row.len() != r) {
        return Err(format!("{} rows for {r} classes", t.chars.len()));
    }
    checks.push("degrees".into());
    for (i, row) in t.chars.iter().enumerate() {
        if row[0].as_integer() != Some(t.degrees[i] as i64) {
            return Err(format!("row {i}: identity value {} is not the degree {}", row[0], t.degrees[i]));
        }
    }
    checks.push("integrality".into());
    let e = cd.exponent();
    let mut sparse: Vec<Vec<Vec<(usize, i64)>>> = Vec::with_capacity(r);
    for (i, row) in t.chars.iter().enumerate() {
        let mut out = Vec::with_capacity(r);
        for (j, v) in row.iter().enumerate() {
            let coeffs = v.lift(e).int_coeffs().ok_or_else(|| format!("entry ({i},{j}) = {v} is not an algebraic integer"))?;
            out.push(coeffs.into_iter().enumerate().filter(|(_, c)| *c != 0).collect());
        }
        sparse.push(out);
    }
    let n = t.order_u64() as i128;
    let eu = e as usize;
    let pair = |terms: &mut dyn Iterator<Item = (i128, &Vec<(usize, i64)>, &Vec<(usize, i64)>)>| {
        let mut acc = vec![0i128; eu];
        for (w, a, b) in terms {
            for &(x, cx) in a {
                for &(y, cy) in b {
                    acc[(x + eu - y) % eu] += w * cx as i128 * cy as i128;
                }
            }
        }
        cyclotomic::reduce_int(acc, e)
    };
    checks.push("row orthogonality".into());
    for a in 0..r {
        for b in a..r {
            let got = pair(&mut (0..r).map(|j| (cd.size(j) as i128, &sparse[a][j], &sparse[b][j])));
            let want = if a == b { n } else { 0 };
            if got[0] != want || got[1..].iter().any(|&c| c != 0) {
                return Err(format!("rows {a} and {b} are not orthogonal"));
            }
        }
    }
    checks.push("column orthogonality".into());
    for i in 0..r {
        for j in i..r {
            let got = pair(&mut (0..r).map(|row| (1i128, &sparse[row][i], &sparse[row][j])));
            let want = if i == j { cd.centralizer_order(i) as i128 } else { 0 };
            if got[0] != want || got[1..].iter().any(|&c| c != 0) {
                return Err(format!("columns {i} and {j} are not orthogonal"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::GroupSpec;

    fn table(spec: &str) -> CharacterTable {
        let g = GroupSpec::parse(spec).unwrap().build().unwrap();
        character_table(&g, spec, classdata::DEFAULT_ORDER_BUDGET).unwrap()
    }

    #[test]
    fn small_tables() {
        assert_eq!(table("A(5)").degrees(), &[1, 3, 3, 4, 5]);
        assert_eq!(table("S(4)").degrees(), &[1, 1, 2, 3, 3]);
        let c2 = table("C(2)");
        let vals: Vec<Vec<i64>> = c2.chars().iter().map(|r| r.iter().map(|v| v.as_integer().unwrap()).collect()).collect();
        assert_eq!(vals, vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(table("C(1)").degrees(), &[1]);
    }

    #[test]
    fn verification_detects_fault() {
        let t = table("S(4)");
        assert!(verify_table(&t).passed());
        let mut bad = t.clone();
        bad.chars[1][2] = &bad.chars[1][2] + &Cyclo::integer(1, 1);
        let report = verify_table(&bad);
        assert!(report.failure.unwrap().contains("rows"));
    }

    #[test]
    fn dixon_prime_choice() {
        let l = dixon_prime(30, 120);
        assert_eq!(l % 30, 1);
        assert!(l > 120 && arith::is_prime(l));
        assert_eq!(l, 151);
    }

    #[test]
    fn degree_list_parsing() {
        let t = parse_degree_list("name = S3\norder = 6\n# comment\n1, 1\n2\n").unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(t.mode(), TableMode::Degrees);
        assert!(parse_degree_list("name = X\norder = 7\n1 1 2").is_err());
        assert!(parse_degree_list("order = 6\n1 1 2").is_err());
    }
}
