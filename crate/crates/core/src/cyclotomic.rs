//! Exact arithmetic in cyclotomic fields `Q(ζ_e)`.
//!
//! An element is stored in the power basis `1, ζ, …, ζ^(φ(e)-1)`, obtained by
//! reducing modulo the cyclotomic polynomial `Φ_e`. Values of different
//! conductors are compared and combined in the field of the lcm conductor.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Coefficients of `Φ_e`, ascending, monic.
pub fn cyclotomic_polynomial(e: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&e) {
        return found.clone();
    }
    let phi = Arc::new(compute_cyclotomic(e));
    cache.lock().unwrap().entry(e).or_insert(phi).clone()
}

/// `Φ_e = Π_{d | e} (x^d - 1)^μ(e/d)`, multiplying the numerator factors first.
fn compute_cyclotomic(e: u64) -> Vec<i64> {
    let divs = arith::divisors(e);
    let mut poly: Vec<i64> = vec![1];
    for &d in &divs {
        if arith::mobius(e / d) == 1 {
            // multiply by x^d - 1
            let d = d as usize;
            let mut out = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                out[i + d] += c;
                out[i] -= c;
            }
            poly = out;
        }
    }
    for &d in &divs {
        if arith::mobius(e / d) == -1 {
            // exact division by x^d - 1: q[i] = q[i - d] - poly[i], run from the bottom
            let d = d as usize;
            let n = poly.len() - d;
            let mut q = vec![0i64; n];
            for i in 0..n {
                q[i] = -poly[i] + if i >= d { q[i - d] } else { 0 };
            }
            poly = q;
        }
    }
    poly
}

pub fn phi(e: u64) -> usize {
    cyclotomic_polynomial(e).len() - 1
}

/// Reduce an integer polynomial modulo `Φ_e`.
pub(crate) fn reduce_int(mut poly: Vec<i128>, e: u64) -> Vec<i128> {
    let cp = cyclotomic_polynomial(e);
    let deg = cp.len() - 1;
    for k in (deg..poly.len()).rev() {
        let c = poly[k];
        if c != 0 {
            for (i, &f) in cp.iter().enumerate() {
                if f != 0 {
                    poly[k - deg + i] -= c * f as i128;
                }
            }
        }
    }
    poly.resize(deg, 0);
    poly
}

fn reduce_rat(mut poly: Vec<BigRational>, e: u64) -> Vec<BigRational> {
    let cp = cyclotomic_polynomial(e);
    let deg = cp.len() - 1;
    for k in (deg..poly.len()).rev() {
        if poly[k].is_zero() {
            continue;
        }
        let c = poly[k].clone();
        for (i, &f) in cp.iter().enumerate() {
            if f != 0 {
                poly[k - deg + i] -= &c * BigRational::from_integer(BigInt::from(f));
            }
        }
    }
    poly.resize(deg, BigRational::zero());
    poly
}

/// An exact element of `Q(ζ_e)` in canonical power-basis form.
#[derive(Clone)]
pub struct Cyclo {
    e: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero(e: u64) -> Cyclo {
        Cyclo { e, coeffs: vec![BigRational::zero(); phi(e)] }
    }

    pub fn rational(e: u64, q: BigRational) -> Cyclo {
        let mut c = Cyclo::zero(e);
        c.coeffs[0] = q;
        c
    }

    pub fn integer(e: u64, n: i64) -> Cyclo {
        Cyclo::rational(e, BigRational::from_integer(BigInt::from(n)))
    }

    /// `ζ_e^k`.
    pub fn root_of_unity(e: u64, k: i64) -> Cyclo {
        let k = k.rem_euclid(e as i64) as usize;
        let mut poly = vec![0i128; k.max(phi(e) - 1) + 1];
        poly[k] = 1;
        Cyclo::from_int_poly(e, poly)
    }

    /// `Σ c_k ζ_e^k` for integer coefficients indexed by exponent.
    pub fn from_int_poly(e: u64, poly: Vec<i128>) -> Cyclo {
        let reduced = reduce_int(poly, e);
        Cyclo { e, coeffs: reduced.into_iter().map(|c| BigRational::from_integer(BigInt::from(c))).collect() }
    }

    /// `Σ c_k ζ_e^k` for `(k, c_k)` pairs with arbitrary exponents.
    pub fn from_terms(e: u64, terms: &[(u64, BigRational)]) -> Cyclo {
        let mut poly = vec![BigRational::zero(); (e as usize).max(1)];
        for (k, c) in terms {
            poly[(*k % e) as usize] += c;
        }
        Cyclo { e, coeffs: reduce_rat(poly, e) }
    }

    pub fn conductor(&self) -> u64 {
        self.e
    }

    /// Canonical coefficients; index `i` is the coefficient of `ζ_e^i`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().filter(|q| q.is_integer()).and_then(|q| q.to_integer().to_i64())
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn int_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }

    /// Same value viewed in `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn lift(&self, m: u64) -> Cyclo {
        assert!(m.is_multiple_of(self.e), "conductor {} does not divide {m}", self.e);
        if m == self.e {
            return self.clone();
        }
        let step = (m / self.e) as usize;
        let mut poly = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(i * step) % m as usize] = c.clone();
            }
        }
        Cyclo { e: m, coeffs: reduce_rat(poly, m) }
    }

    fn common(&self, other: &Cyclo) -> (Cyclo, Cyclo) {
        if self.e == other.e {
            return (self.clone(), other.clone());
        }
        let m = arith::lcm(self.e, other.e);
        (self.lift(m), other.lift(m))
    }

    pub fn scale(&self, q: &BigRational) -> Cyclo {
        Cyclo { e: self.e, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Image under the automorphism `ζ_e ↦ ζ_e^t`.
    pub fn apply_sigma(&self, t: i64) -> Result<Cyclo> {
        let e = self.e;
        let t = t.rem_euclid(e as i64) as u64;
        if arith::gcd(t, e) != 1 {
            return Err(Error::InvalidArgument(format!("exponent {t} is not coprime to conductor {e}")));
        }
        let mut poly = vec![BigRational::zero(); e as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[((i as u64 * t) % e) as usize] += c;
            }
        }
        Ok(Cyclo { e, coeffs: reduce_rat(poly, e) })
    }

    /// Complex conjugate, `ζ ↦ ζ^-1`.
    pub fn conj(&self) -> Cyclo {
        self.apply_sigma(-1).expect("-1 is a unit")
    }

    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // extended Euclid: s·a + t·Φ = g with g a nonzero constant
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.e)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r1.is_empty() {
            return Err(Error::Inconsistent("element shares a factor with Φ_e".into()));
        }
        let c = r1[0].recip();
        let mut poly: Vec<BigRational> = s1.into_iter().map(|x| x * &c).collect();
        poly.resize(poly.len().max(phi(self.e)), BigRational::zero());
        Ok(Cyclo { e: self.e, coeffs: reduce_rat(poly, self.e) })
    }

    /// Lexicographic order on canonical coefficient vectors at a common conductor.
    pub fn cmp_canonical(&self, other: &Cyclo) -> Ordering {
        let (a, b) = self.common(other);
        a.coeffs.cmp(&b.coeffs)
    }

    pub fn to_json(&self) -> CycloJson {
        CycloJson {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u64, format!("{}/{}", c.numer(), c.denom())))
                .collect(),
            e: self.e,
        }
    }

    pub fn from_json(json: &CycloJson) -> Result<Cyclo> {
        if json.e == 0 {
            return Err(Error::Schema { field: "e".into(), message: "conductor must be positive".into() });
        }
        let mut out = Cyclo::zero(json.e);
        let mut last = None;
        for (i, text) in &json.coeffs {
            if *i as usize >= out.coeffs.len() || last.is_some_and(|l| l >= *i) {
                return Err(Error::Schema {
                    field: "coeffs".into(),
                    message: format!("exponent {i} is not canonical for e = {}", json.e),
                });
            }
            last = Some(*i);
            out.coeffs[*i as usize] = parse_rational(text)?;
        }
        Ok(out)
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Schema { field: "coeffs".into(), message: format!("bad rational {text:?}") };
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = b.last().expect("nonzero divisor").clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        if self.e == other.e {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = self.common(rhs);
        Cyclo { e: a.e, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { e: self.e, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = self.common(rhs);
        let n = a.coeffs.len();
        let mut poly = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Cyclo { e: a.e, coeffs: reduce_rat(poly, a.e) }
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let abs = c.abs();
            let mag = if i > 0 && abs.is_one() { String::new() } else { abs.to_string() };
            let root = match i {
                0 => String::new(),
                1 => format!("z{}", self.e),
                _ => format!("z{}^{i}", self.e),
            };
            let join = if !mag.is_empty() && !root.is_empty() { "*" } else { "" };
            write!(f, "{sign}{mag}{join}{root}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// File representation: `{"coeffs": [[i, "num/den"], ...], "e": e}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycloJson {
    pub coeffs: Vec<(u64, String)>,
    pub e: u64,
}

/// Exponent `t` of `σ_n: ζ ↦ ζ^t` on `Q(ζ_e)`: fixes `p'`-roots of unity and
/// raises `p`-power roots of unity to the power `p^n + 1`.
pub fn sigma_power_exponent(e: u64, n: u32, p: u64) -> u64 {
    let ep = arith::p_part(e, p);
    let epp = e / ep;
    let high = (arith::pow_mod(p, n as u64, ep) + 1) % ep;
    arith::crt(1 % epp, epp, high, ep)
}

// ---------------------------------------------------------------------------
// Finite fields and reduction modulo a prime above p

/// Element of `F_{p^d}`, coefficients of `1, x, …, x^(d-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FFElt(pub Vec<u64>);

impl FFElt {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

/// `F_p[x] / (f)` for a monic irreducible `f` of degree `d`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    modulus: Vec<u64>,
}

impl FiniteField {
    /// The field of order `p^d` defined by the smallest monic irreducible,
    /// comparing `(c_{d-1}, …, c_0)` lexicographically.
    pub fn new(p: u64, d: usize) -> Result<FiniteField> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d == 0 {
            return Err(Error::InvalidArgument("field degree must be positive".into()));
        }
        let total = p.checked_pow(d as u32).ok_or(Error::BudgetExceeded {
            what: "field size",
            size: u64::MAX,
            limit: u64::MAX,
        })?;
        for code in 0..total {
            let mut modulus = vec![0u64; d + 1];
            let mut c = code;
            for i in 0..d {
                modulus[i] = c % p;
                c /= p;
            }
            modulus[d] = 1;
            if is_irreducible(&modulus, p) {
                return Ok(FiniteField { p, modulus });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.degree() as u32)
    }

    pub fn zero(&self) -> FFElt {
        FFElt(vec![0; self.degree()])
    }

    pub fn one(&self) -> FFElt {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FFElt {
        let mut v = vec![0; self.degree()];
        v[0] = n.rem_euclid(self.p as i64) as u64;
        FFElt(v)
    }

    /// Element with coefficient vector given by the base-`p` digits of `code`.
    pub fn from_code(&self, mut code: u64) -> FFElt {
        let mut v = vec![0; self.degree()];
        for c in v.iter_mut() {
            *c = code % self.p;
            code /= self.p;
        }
        FFElt(v)
    }

    pub fn add(&self, a: &FFElt, b: &FFElt) -> FFElt {
        FFElt(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % self.p).collect())
    }

    pub fn neg(&self, a: &FFElt) -> FFElt {
        FFElt(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }

    pub fn scale(&self, a: &FFElt, k: u64) -> FFElt {
        FFElt(a.0.iter().map(|x| arith::mul_mod(*x, k % self.p, self.p)).collect())
    }

    pub fn mul(&self, a: &FFElt, b: &FFElt) -> FFElt {
        let p = self.p;
        let d = self.degree();
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..d {
                    prod[k - d + i] = (prod[k - d + i] + (p - c) * self.modulus[i]) % p;
                }
                prod[k] = 0;
            }
        }
        prod.truncate(d);
        FFElt(prod)
    }

    pub fn pow(&self, a: &FFElt, mut e: u64) -> FFElt {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FFElt) -> Result<FFElt> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.size() - 2))
    }

    pub fn multiplicative_order(&self, a: &FFElt) -> u64 {
        let n = self.size() - 1;
        let mut ord = n;
        for q in arith::prime_divisors(n) {
            while ord.is_multiple_of(q) && self.pow(a, ord / q) == self.one() {
                ord /= q;
            }
        }
        ord
    }

    /// Smallest primitive element in code order.
    pub fn primitive_element(&self) -> FFElt {
        let n = self.size() - 1;
        (1..self.size())
            .map(|c| self.from_code(c))
            .find(|a| self.multiplicative_order(a) == n)
            .expect("finite fields are cyclic")
    }
}

fn poly_mod_p(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let lead_inv = arith::inv_mod(f[d], p).expect("nonzero lead");
    while a.len() > d {
        let c = arith::mul_mod(a[a.len() - 1], lead_inv, p);
        let shift = a.len() - 1 - d;
        if c != 0 {
            for i in 0..=d {
                a[shift + i] = (a[shift + i] + (p - arith::mul_mod(c, f[i], p))) % p;
            }
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn polymulmod_p(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + arith::mul_mod(x, y, p)) % p;
        }
    }
    poly_mod_p(prod, f, p)
}

/// `x^(p^k) mod f`.
fn frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut x = poly_mod_p(vec![0, 1], f, p);
    for _ in 0..k {
        // raise to the p-th power by repeated squaring
        let mut acc = vec![1u64];
        let mut base = x.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = polymulmod_p(&acc, &base, f, p);
            }
            base = polymulmod_p(&base, &base, f, p);
            e >>= 1;
        }
        x = acc;
    }
    x
}

fn poly_gcd_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    while b.last() == Some(&0) {
        b.pop();
    }
    while !b.is_empty() {
        let r = poly_mod_p(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's irreducibility test for a monic polynomial over `F_p`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    let xp = frobenius_power(f, p, d);
    if xp != poly_mod_p(vec![0, 1], f, p) {
        return false;
    }
    for q in arith::prime_divisors(d as u64) {
        let mut h = frobenius_power(f, p, d / q as usize);
        // h - x
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = (h[1] + p - 1) % p;
        let g = poly_gcd_p(f.to_vec(), h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// A fixed prime ideal above `p` in `Z[ζ_e]`, realized as the ring map
/// `Z_(p)[ζ_e] → F_{p^d}` sending `ζ_{e'}` to a fixed root of order `e'`
/// (`e'` the `p'`-part of `e`) and every `p`-power root of unity to 1.
#[derive(Clone, Debug)]
pub struct PrimeIdealContext {
    p: u64,
    e: u64,
    e_pprime: u64,
    field: FiniteField,
    root: FFElt,
    /// images of ζ_e^i for i in 0..e
    zeta_powers: Vec<FFElt>,
}

impl PrimeIdealContext {
    pub fn new(e: u64, p: u64) -> Result<PrimeIdealContext> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let ep = arith::p_part(e, p);
        let e_pprime = e / ep;
        let d = arith::multiplicative_order(p % e_pprime.max(1), e_pprime) as usize;
        let field = FiniteField::new(p, d.max(1))?;
        let gen = field.primitive_element();
        let step = (field.size() - 1) / e_pprime;
        let root = (1..=e_pprime)
            .filter(|&k| arith::gcd(k, e_pprime) == 1)
            .map(|k| field.pow(&gen, k * step))
            .min()
            .expect("at least one primitive root");
        // ζ_e ↦ root^u with u·e_p ≡ 1 mod e'
        let u = arith::inv_mod(ep % e_pprime.max(1), e_pprime).unwrap_or(0);
        let theta = field.pow(&root, u);
        let mut zeta_powers = Vec::with_capacity(e as usize);
        let mut acc = field.one();
        for _ in 0..e {
            zeta_powers.push(acc.clone());
            acc = field.mul(&acc, &theta);
        }
        Ok(PrimeIdealContext { p, e, e_pprime, field, root, zeta_powers })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn conductor(&self) -> u64 {
        self.e
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// The fixed root of unity of order `e'`.
    pub fn root(&self) -> &FFElt {
        &self.root
    }

    pub fn root_order(&self) -> u64 {
        self.e_pprime
    }

    /// Reduce a `p`-integral value whose conductor divides this context's.
    pub fn reduce(&self, a: &Cyclo) -> Result<FFElt> {
        if !self.e.is_multiple_of(a.conductor()) {
            return Err(Error::InvalidArgument(format!(
                "conductor {} does not divide {}",
                a.conductor(),
                self.e
            )));
        }
        let step = (self.e / a.conductor()) as usize;
        let f = &self.field;
        let mut acc = f.zero();
        for (i, c) in a.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = self.reduce_rational(c)?;
            if r != 0 {
                acc = f.add(&acc, &f.scale(&self.zeta_powers[(i * step) % self.e as usize], r));
            }
        }
        Ok(acc)
    }

    pub fn reduce_rational(&self, q: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let den = (q.denom() % &p).to_u64().unwrap();
        if den == 0 {
            return Err(Error::NotPIntegral(self.p));
        }
        let num = (q.numer() % &p + &p) % &p;
        Ok(arith::mul_mod(num.to_u64().unwrap(), arith::inv_mod(den, self.p).unwrap(), self.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: u64, k: i64) -> Cyclo {
        Cyclo::root_of_unity(e, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(phi(420), 96);
        // Φ_105 is the first with a coefficient -2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn field_identities() {
        let s = &(&(&z(5, 1) + &z(5, 2)) + &z(5, 3)) + &z(5, 4);
        assert_eq!(s, Cyclo::integer(5, -1));
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclo::integer(4, -1));
        let one_plus = |k| &Cyclo::integer(3, 1) + &z(3, k);
        assert_eq!(&one_plus(1) * &one_plus(2), Cyclo::integer(3, 1));
    }

    #[test]
    fn equality_across_conductors() {
        assert_eq!(z(4, 2), Cyclo::integer(1, -1));
        assert_eq!(z(12, 3), z(4, 1));
        assert_ne!(z(12, 3), z(4, 3));
        assert_eq!(z(10, 2), z(5, 1));
    }

    #[test]
    fn inverse() {
        let a = &Cyclo::integer(7, 2) + &z(7, 3);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, Cyclo::integer(7, 1));
        assert!(matches!(Cyclo::zero(7).inv(), Err(Error::ZeroInverse)));
    }

    #[test]
    fn sigma_exponents() {
        assert_eq!(sigma_power_exponent(30, 1, 5), 1);
        assert_eq!(sigma_power_exponent(4, 1, 2), 3);
        assert_eq!(sigma_power_exponent(40, 1, 2), 11);
        assert_eq!(sigma_power_exponent(8, 2, 2), 5);
        assert_eq!(sigma_power_exponent(8, 3, 2), 1);
    }

    #[test]
    fn sigma_action() {
        assert_eq!(Cyclo::integer(12, 7).apply_sigma(5).unwrap(), Cyclo::integer(12, 7));
        assert_eq!(z(4, 1).apply_sigma(3).unwrap(), -&z(4, 1));
        // (-1 + √5)/2 = ζ5 + ζ5^4
        let golden = &z(5, 1) + &z(5, 4);
        assert_eq!(golden.apply_sigma(11).unwrap(), golden);
        assert_ne!(golden.apply_sigma(2).unwrap(), golden);
        assert!(z(6, 1).apply_sigma(2).is_err());
    }

    #[test]
    fn json_round_trip_and_format() {
        let a = (&z(12, 5) + &Cyclo::integer(12, 3)).scale(&BigRational::new(1.into(), 2.into()));
        let json = a.to_json();
        assert_eq!(json.e, 12);
        assert!(json.coeffs.windows(2).all(|w| w[0].0 < w[1].0));
        assert_eq!(Cyclo::from_json(&json).unwrap(), a);
        let text = serde_json::to_string(&Cyclo::integer(3, 1).to_json()).unwrap();
        assert_eq!(text, r#"{"coeffs":[[0,"1/1"]],"e":3}"#);
        let bad = CycloJson { coeffs: vec![(2, "1/1".into())], e: 3 };
        assert!(Cyclo::from_json(&bad).is_err());
    }

    #[test]
    fn reduction_examples() {
        let ctx = PrimeIdealContext::new(15, 5).unwrap();
        assert_eq!(ctx.reduce(&Cyclo::integer(1, 7)).unwrap(), ctx.field().from_int(2));
        assert_eq!(ctx.reduce(&z(5, 1)).unwrap(), ctx.field().one());
        let img = ctx.reduce(&z(3, 1)).unwrap();
        assert_eq!(ctx.field().degree(), 2);
        assert_eq!(ctx.field().multiplicative_order(&img), 3);
        let third = Cyclo::rational(1, BigRational::new(1.into(), 5.into()));
        assert!(matches!(ctx.reduce(&third), Err(Error::NotPIntegral(5))));
        let half = Cyclo::rational(1, BigRational::new(1.into(), 2.into()));
        assert_eq!(ctx.reduce(&half).unwrap(), ctx.field().from_int(3));
    }

    #[test]
    fn finite_field_root_has_exact_order() {
        for (e, p) in [(420, 2), (420, 5), (420, 7), (24, 3), (120, 5), (64, 3)] {
            let ctx = PrimeIdealContext::new(e, p).unwrap();
            assert_eq!(ctx.field().multiplicative_order(ctx.root()), ctx.root_order(), "e={e} p={p}");
        }
    }
}
