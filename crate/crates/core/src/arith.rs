//! Small integer number theory shared by the group and field code.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    // deterministic Miller-Rabin for u64
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors with multiplicity, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            let mut k = 0;
            while n.is_multiple_of(q) {
                n /= q;
                k += 1;
            }
            out.push((q, k));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(q, _)| q).collect()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut upper: Vec<u64> = ds.iter().rev().map(|d| n / d).filter(|&q| q * q != n).collect();
    ds.append(&mut upper);
    ds
}

/// Largest power of `p` dividing `n` (`n > 0`).
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        part *= p;
    }
    part
}

pub fn p_prime_part(n: u64, p: u64) -> u64 {
    n / p_part(n, p)
}

pub fn valuation(n: u64, p: u64) -> u32 {
    let mut k = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    k
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// Solve `x = r1 mod m1`, `x = r2 mod m2` for coprime moduli.
pub fn crt(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    let m = m1 as u128 * m2 as u128;
    let inv = inv_mod(m1 % m2.max(1), m2).unwrap_or(0) as u128;
    let diff = (r2 as i128 - r1 as i128).rem_euclid(m2 as i128) as u128;
    let x = r1 as u128 + m1 as u128 * ((diff * inv) % m2 as u128);
    (x % m) as u64
}

/// Multiplicative order of `a` modulo `m` (`gcd(a, m) = 1`, `m >= 1`).
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let phi = totient(m);
    let mut ord = phi;
    for (q, _) in factorize(phi) {
        while ord.is_multiple_of(q) && pow_mod(a, ord / q, m) == 1 {
            ord /= q;
        }
    }
    ord
}

pub fn totient(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (q, _)| acc / q * (q - 1))
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let qs = prime_divisors(p - 1);
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("a prime has a primitive root")
}

pub fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Representative of `±k mod p` in `1..=(p-1)/2` (or `1` when `p = 2`).
pub fn normalize_pm(k: i64, p: u64) -> Option<u64> {
    let r = k.rem_euclid(p as i64) as u64;
    if r == 0 {
        None
    } else {
        Some(r.min(p - r))
    }
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}
