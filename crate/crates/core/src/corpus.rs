//! The built-in verification corpus.

use crate::arith;

/// Primes considered for every corpus group.
pub const CORPUS_PRIMES: [u64; 4] = [2, 3, 5, 7];

const PRODUCTS: &[&str] = &[
    "A(5)xC(2)",
    "S(4)xC(3)",
    "SL(2,3)xC(2)",
    "GL(2,3)xC(2)",
    "S(3)xS(3)",
    "S(4)xS(3)",
    "Q(8)xD(8)",
    "D(10)xC(5)",
    "A(4)xA(4)",
    "S(5)xS(3)",
    "A(5)xA(5)",
    "S(6)xC(2)",
    "S(7)xC(2)",
    "S(5)xS(5)",
    "A(6)xS(4)",
];

/// Group specs of the default corpus, in a fixed order.
pub fn default_corpus() -> Vec<String> {
    let mut out = Vec::new();
    for n in 2..=7 {
        out.push(format!("S({n})"));
    }
    for n in 3..=7 {
        out.push(format!("A({n})"));
    }
    for order in (4..=48).step_by(2) {
        out.push(format!("D({order})"));
    }
    for order in (8..=48).step_by(4) {
        out.push(format!("Q({order})"));
    }
    for m in 1..=64 {
        out.push(format!("C({m})"));
    }
    for m in ["GL(2,2)", "GL(2,3)", "SL(2,3)", "SL(2,5)"] {
        out.push(m.to_string());
    }
    out.extend(PRODUCTS.iter().map(|s| s.to_string()));
    out
}

/// Corpus primes dividing `order`.
pub fn primes_for(order: u64) -> Vec<u64> {
    CORPUS_PRIMES.iter().copied().filter(|&p| order.is_multiple_of(p) && arith::is_prime(p)).collect()
}
