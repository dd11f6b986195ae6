#![forbid(unsafe_code)]

//! Brute-force cross-checks for the ncrit test suites.
//!
//! Everything here is deliberately naive: factorization walks every
//! candidate divisor one by one, and the subgraph check is a nested
//! membership loop. These functions exist to validate the fast paths
//! in ncrit and are never part of the decision procedure.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use ncrit::{CriticalGraph, Prime};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("exponent {k} exceeds the desk-scale bound 64")]
    ExponentTooLarge { k: u32 },
    #[error("base {base} is outside the supported range {{2, 3}}")]
    UnsupportedBase { base: u64 },
    #[error("2^0 - 1 has no factorization")]
    ValueIsZero,
}

/// Offset applied to `base^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delta {
    MinusOne,
    PlusOne,
}

/// Full factorization by incremental trial division, returned as a
/// plain exponent map so comparisons do not go through any ncrit
/// constructor.
pub fn brute_factor(m: &BigUint) -> BTreeMap<u64, u32> {
    let mut rest = m.clone();
    let mut factors = BTreeMap::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut e = 0u32;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            factors.insert(
                u64::try_from(&d).expect("divisor below sqrt of a desk-scale value"),
                e,
            );
        }
        d += 1u32;
    }
    if !rest.is_one() && !rest.is_zero() {
        factors.insert(u64::try_from(&rest).expect("desk-scale cofactor"), 1);
    }
    factors
}

/// Factorization of `base^k + delta` for base 2 or 3 and k at desk
/// scale.
pub fn brute_factor_power(
    base: u64,
    k: u32,
    delta: Delta,
) -> Result<BTreeMap<u64, u32>, OracleError> {
    if !(2..=3).contains(&base) {
        return Err(OracleError::UnsupportedBase { base });
    }
    if k > 64 {
        return Err(OracleError::ExponentTooLarge { k });
    }
    let value = match delta {
        Delta::MinusOne => BigUint::from(base).pow(k) - BigUint::one(),
        Delta::PlusOne => BigUint::from(base).pow(k) + BigUint::one(),
    };
    if value.is_zero() {
        return Err(OracleError::ValueIsZero);
    }
    Ok(brute_factor(&value))
}

/// Element-by-element containment, written without the set machinery
/// of the graph type.
pub fn brute_is_subgraph(g1: &CriticalGraph, g2: &CriticalGraph) -> bool {
    for v in g1.vertices() {
        if !g2.vertices().any(|w| w == v) {
            return false;
        }
    }
    for e in g1.edges() {
        if !g2.edges().any(|f| f == e) {
            return false;
        }
    }
    true
}

fn prime(v: u64) -> Prime {
    Prime::new(v).expect("oracle rebuilds only see prime divisors")
}

/// Graph of PSL(2, 2^p) rebuilt from brute-force factoring:
/// vertices 2 and the prime divisors of 2^{2p} - 1, edges (2, q) for
/// q | 2^p - 1 and (q, 2) for q | 2^{2p} - 1.
pub fn rebuild_char_two(p: u64) -> CriticalGraph {
    let low = brute_factor_power(2, p as u32, Delta::MinusOne).unwrap();
    let high = brute_factor_power(2, 2 * p as u32, Delta::MinusOne).unwrap();
    let mut g = CriticalGraph::new();
    g.insert_vertex(prime(2));
    for &q in high.keys() {
        g.insert_vertex(prime(q));
    }
    for &q in low.keys() {
        g.insert_edge(prime(2), prime(q)).unwrap();
    }
    for &q in high.keys() {
        g.insert_edge(prime(q), prime(2)).unwrap();
    }
    g
}

/// Graph of PSL(2, 3^p), p odd, rebuilt from brute-force factoring:
/// vertices 3 and the prime divisors of 3^{2p} - 1, edges (3, q) for
/// odd q | 3^p - 1, the fixed edge (2, 3), and (q, 2) for odd
/// q | 3^{2p} - 1.
pub fn rebuild_char_three(p: u64) -> CriticalGraph {
    let low = brute_factor_power(3, p as u32, Delta::MinusOne).unwrap();
    let high = brute_factor_power(3, 2 * p as u32, Delta::MinusOne).unwrap();
    let mut g = CriticalGraph::new();
    g.insert_vertex(prime(3));
    for &q in high.keys() {
        g.insert_vertex(prime(q));
    }
    for &q in low.keys().filter(|&&q| q != 2) {
        g.insert_edge(prime(3), prime(q)).unwrap();
    }
    g.insert_edge(prime(2), prime(3)).unwrap();
    for &q in high.keys().filter(|&&q| q != 2) {
        g.insert_edge(prime(q), prime(2)).unwrap();
    }
    g
}

/// Graph of Sz(2^p), p odd, rebuilt from brute-force factoring:
/// vertices 2 and the prime divisors of (2^p - 1)(2^{2p} + 1), edges
/// (2, q) for q | 2^p - 1 and (q, 2) for q | (2^p - 1)(2^{2p} + 1).
pub fn rebuild_suzuki(p: u64) -> CriticalGraph {
    let low = brute_factor_power(2, p as u32, Delta::MinusOne).unwrap();
    let plus = brute_factor_power(2, 2 * p as u32, Delta::PlusOne).unwrap();
    let mut g = CriticalGraph::new();
    g.insert_vertex(prime(2));
    for &q in low.keys().chain(plus.keys()) {
        g.insert_vertex(prime(q));
    }
    for &q in low.keys() {
        g.insert_edge(prime(2), prime(q)).unwrap();
    }
    for &q in low.keys().chain(plus.keys()) {
        g.insert_edge(prime(q), prime(2)).unwrap();
    }
    g
}

/// Graph of PSL(2, p) rebuilt from brute-force factoring: vertices p
/// and the prime divisors of p^2 - 1, edges (p, q) for q | (p-1)/2,
/// the fixed edge (2, 3), and (q, 2) for odd q | p^2 - 1.
pub fn rebuild_psl2_prime(p: u64) -> CriticalGraph {
    let half = brute_factor(&BigUint::from((p - 1) / 2));
    let square = brute_factor(&BigUint::from(p * p - 1));
    let mut g = CriticalGraph::new();
    g.insert_vertex(prime(p));
    for &q in square.keys() {
        g.insert_vertex(prime(q));
    }
    for &q in half.keys() {
        g.insert_edge(prime(p), prime(q)).unwrap();
    }
    g.insert_edge(prime(2), prime(3)).unwrap();
    for &q in square.keys().filter(|&&q| q != 2) {
        g.insert_edge(prime(q), prime(2)).unwrap();
    }
    g
}
