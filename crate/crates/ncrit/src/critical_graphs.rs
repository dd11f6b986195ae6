//! Closed-form graphs for the minimal simple non-abelian groups.
//!
//! Up to isomorphism these groups are PSL(2, 2^p) for a prime p,
//! PSL(2, 3^p) and Sz(2^p) for an odd prime p, PSL(2, p) for a prime
//! p > 5 with 5 | p^2 + 1, and PSL(3, 3). Each generator builds the
//! graph whose edge (p, q) records a minimal non-nilpotent subgroup
//! with normal Sylow p-subgroup and cyclic Sylow q-subgroup.
//!
//! The generators factor `base^k ± 1` exactly, so they are meant for
//! small parameters (tests, worked examples, witness verification).
//! The decision procedure itself never factors blindly; it reaches the
//! same edge sets through divide-out and multiplicative orders.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::graph::CriticalGraph;
use crate::primes::{factorize_big, Prime, PrimeSet};
use crate::Error;

/// One minimal simple non-abelian group, identified by family and
/// parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum CandidateGroup {
    /// PSL(2, 2^p), p prime.
    #[serde(rename = "PSL2_2p")]
    Psl2CharTwo { p: Prime },
    /// PSL(2, 3^p), p an odd prime.
    #[serde(rename = "PSL2_3p")]
    Psl2CharThree { p: Prime },
    /// PSL(2, p), p > 5 prime with 5 | p^2 + 1.
    #[serde(rename = "PSL2_p")]
    Psl2Prime { p: Prime },
    /// Sz(2^p), p an odd prime.
    #[serde(rename = "Sz_2p")]
    Suzuki { p: Prime },
    /// PSL(3, 3).
    #[serde(rename = "PSL3_3")]
    Psl3Three,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CandidateError {
    #[error("{family} requires an odd prime parameter, got p = 2")]
    RequiresOddPrime { family: &'static str },
    #[error("PSL(2, p) requires p > 5, got p = {p}")]
    ParameterTooSmall { p: u64 },
    #[error("PSL(2, p) requires 5 | p^2 + 1, got p = {p} with p mod 5 = {rem}")]
    FiveDividesCondition { p: u64, rem: u64 },
}

impl CandidateGroup {
    pub fn psl2_char_two(p: Prime) -> Self {
        CandidateGroup::Psl2CharTwo { p }
    }

    pub fn psl2_char_three(p: Prime) -> Result<Self, CandidateError> {
        if !p.is_odd() {
            return Err(CandidateError::RequiresOddPrime {
                family: "PSL(2, 3^p)",
            });
        }
        Ok(CandidateGroup::Psl2CharThree { p })
    }

    /// Valid for p > 5 with p = 2 or 3 mod 5; that congruence is
    /// exactly the condition 5 | p^2 + 1.
    pub fn psl2_prime(p: Prime) -> Result<Self, CandidateError> {
        if p.get() <= 5 {
            return Err(CandidateError::ParameterTooSmall { p: p.get() });
        }
        let rem = p.get() % 5;
        if rem != 2 && rem != 3 {
            return Err(CandidateError::FiveDividesCondition { p: p.get(), rem });
        }
        Ok(CandidateGroup::Psl2Prime { p })
    }

    pub fn suzuki(p: Prime) -> Result<Self, CandidateError> {
        if !p.is_odd() {
            return Err(CandidateError::RequiresOddPrime { family: "Sz(2^p)" });
        }
        Ok(CandidateGroup::Suzuki { p })
    }

    pub fn parameter(self) -> Option<Prime> {
        match self {
            CandidateGroup::Psl2CharTwo { p }
            | CandidateGroup::Psl2CharThree { p }
            | CandidateGroup::Psl2Prime { p }
            | CandidateGroup::Suzuki { p } => Some(p),
            CandidateGroup::Psl3Three => None,
        }
    }

    /// The group's graph, via the matching generator.
    pub fn graph(self) -> Result<CriticalGraph, Error> {
        match self {
            CandidateGroup::Psl2CharTwo { p } => gamma_psl2_2p(p),
            CandidateGroup::Psl2CharThree { p } => gamma_psl2_3p(p),
            CandidateGroup::Psl2Prime { p } => gamma_psl2_p(p),
            CandidateGroup::Suzuki { p } => gamma_sz_2p(p),
            CandidateGroup::Psl3Three => Ok(gamma_psl33()),
        }
    }
}

impl fmt::Display for CandidateGroup {
    /// Prints the field size in evaluated form while it stays readable
    /// ("PSL(2,8)", "Sz(32)") and as a power otherwise ("PSL(2,2^31)").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn field(base: u64, p: Prime) -> String {
            match base.checked_pow(u32::try_from(p.get()).unwrap_or(u32::MAX)) {
                Some(q) if q <= 1_000_000 => q.to_string(),
                _ => format!("{base}^{p}"),
            }
        }
        match self {
            CandidateGroup::Psl2CharTwo { p } => write!(f, "PSL(2,{})", field(2, *p)),
            CandidateGroup::Psl2CharThree { p } => write!(f, "PSL(2,{})", field(3, *p)),
            CandidateGroup::Psl2Prime { p } => write!(f, "PSL(2,{p})"),
            CandidateGroup::Suzuki { p } => write!(f, "Sz({})", field(2, *p)),
            CandidateGroup::Psl3Three => write!(f, "PSL(3,3)"),
        }
    }
}

/// `base^k`, exponent cast-checked.
pub(crate) fn pow_u(base: u32, k: u64) -> BigUint {
    let k = u32::try_from(k).expect("exponent exceeds the intended scale of this crate");
    BigUint::from(base).pow(k)
}

/// `2^k - 1`.
pub(crate) fn two_pow_minus_one(k: u64) -> BigUint {
    pow_u(2, k) - BigUint::one()
}

/// Graph of PSL(2, 2^p):
/// vertices pi(2(2^{2p}-1)),
/// edges (2, q) for q in pi(2^p-1) and (q, 2) for q in pi(2^{2p}-1).
pub fn gamma_psl2_2p(p: Prime) -> Result<CriticalGraph, Error> {
    let pi_low = factorize_big(&two_pow_minus_one(p.get()))?.primes();
    let pi_high = factorize_big(&two_pow_minus_one(2 * p.get()))?.primes();
    let mut g = CriticalGraph::new();
    g.insert_vertex(Prime::TWO);
    for q in pi_high.iter() {
        g.insert_vertex(q);
    }
    for q in pi_low.iter() {
        g.insert_edge(Prime::TWO, q)?;
    }
    for q in pi_high.iter() {
        g.insert_edge(q, Prime::TWO)?;
    }
    Ok(g)
}

/// Graph of PSL(2, 3^p), p odd:
/// vertices pi(3(3^{2p}-1)),
/// edges (3, q) for q in pi(3^p-1) minus 2, then (2, 3), then (q, 2)
/// for q in pi(3^{2p}-1) minus 2.
pub fn gamma_psl2_3p(p: Prime) -> Result<CriticalGraph, Error> {
    if !p.is_odd() {
        return Err(CandidateError::RequiresOddPrime {
            family: "PSL(2, 3^p)",
        }
        .into());
    }
    let pi_low = factorize_big(&(pow_u(3, p.get()) - BigUint::one()))?.primes();
    let pi_high = factorize_big(&(pow_u(3, 2 * p.get()) - BigUint::one()))?.primes();
    let mut g = CriticalGraph::new();
    g.insert_vertex(Prime::THREE);
    for q in pi_high.iter() {
        g.insert_vertex(q);
    }
    for q in pi_low.iter().filter(|q| q.is_odd()) {
        g.insert_edge(Prime::THREE, q)?;
    }
    g.insert_edge(Prime::TWO, Prime::THREE)?;
    for q in pi_high.iter().filter(|q| q.is_odd()) {
        g.insert_edge(q, Prime::TWO)?;
    }
    Ok(g)
}

/// Graph of PSL(2, p), p > 5 prime with 5 | p^2 + 1:
/// vertices pi(p(p^2-1)),
/// edges (p, q) for q in pi((p-1)/2), then (2, 3), then (q, 2) for q
/// in pi(p^2-1) minus 2.
pub fn gamma_psl2_p(p: Prime) -> Result<CriticalGraph, Error> {
    CandidateGroup::psl2_prime(p)?;
    let pi_half = factorize_big(&BigUint::from((p.get() - 1) / 2))?.primes();
    let p_sq_minus_1 = BigUint::from(p.get()) * BigUint::from(p.get()) - BigUint::one();
    let pi_square = factorize_big(&p_sq_minus_1)?.primes();
    let mut g = CriticalGraph::new();
    g.insert_vertex(p);
    for q in pi_square.iter() {
        g.insert_vertex(q);
    }
    for q in pi_half.iter() {
        g.insert_edge(p, q)?;
    }
    g.insert_edge(Prime::TWO, Prime::THREE)?;
    for q in pi_square.iter().filter(|q| q.is_odd()) {
        g.insert_edge(q, Prime::TWO)?;
    }
    Ok(g)
}

/// Graph of Sz(2^p), p odd:
/// vertices pi(2(2^{2p}+1)(2^p-1)),
/// edges (2, q) for q in pi(2^p-1) and (q, 2) for q in
/// pi((2^p-1)(2^{2p}+1)).
pub fn gamma_sz_2p(p: Prime) -> Result<CriticalGraph, Error> {
    if !p.is_odd() {
        return Err(CandidateError::RequiresOddPrime { family: "Sz(2^p)" }.into());
    }
    let pi_low = factorize_big(&two_pow_minus_one(p.get()))?.primes();
    let pi_plus = factorize_big(&(pow_u(2, 2 * p.get()) + BigUint::one()))?.primes();
    let pi_product: PrimeSet = pi_low.union(&pi_plus);
    let mut g = CriticalGraph::new();
    g.insert_vertex(Prime::TWO);
    for q in pi_product.iter() {
        g.insert_vertex(q);
    }
    for q in pi_low.iter() {
        g.insert_edge(Prime::TWO, q)?;
    }
    for q in pi_product.iter() {
        g.insert_edge(q, Prime::TWO)?;
    }
    Ok(g)
}

/// Graph of PSL(3, 3): vertices {2, 3, 13}, edges {(2,3), (3,2), (13,3)}.
pub fn gamma_psl33() -> CriticalGraph {
    let p13 = Prime::new_unchecked(13);
    CriticalGraph::graph_from(
        [Prime::TWO, Prime::THREE, p13],
        [
            (Prime::TWO, Prime::THREE),
            (Prime::THREE, Prime::TWO),
            (p13, Prime::THREE),
        ],
    )
    .expect("fixed edge list is loop-free and closed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn expect(g: &CriticalGraph, vertices: &[u64], edges: &[(u64, u64)]) {
        let want = CriticalGraph::graph_from(
            vertices.iter().map(|&v| p(v)),
            edges.iter().map(|&(a, b)| (p(a), p(b))),
        )
        .unwrap();
        assert_eq!(g, &want);
    }

    #[test]
    fn psl2_char_two_small_parameters() {
        expect(
            &gamma_psl2_2p(p(2)).unwrap(),
            &[2, 3, 5],
            &[(2, 3), (3, 2), (5, 2)],
        );
        expect(
            &gamma_psl2_2p(p(3)).unwrap(),
            &[2, 3, 7],
            &[(2, 7), (3, 2), (7, 2)],
        );
        expect(
            &gamma_psl2_2p(p(5)).unwrap(),
            &[2, 3, 11, 31],
            &[(2, 31), (3, 2), (11, 2), (31, 2)],
        );
    }

    #[test]
    fn psl2_char_three_small_parameters() {
        expect(
            &gamma_psl2_3p(p(3)).unwrap(),
            &[2, 3, 7, 13],
            &[(3, 13), (2, 3), (7, 2), (13, 2)],
        );
        expect(
            &gamma_psl2_3p(p(5)).unwrap(),
            &[2, 3, 11, 61],
            &[(3, 11), (2, 3), (11, 2), (61, 2)],
        );
        assert!(matches!(
            gamma_psl2_3p(p(2)),
            Err(Error::Candidate(CandidateError::RequiresOddPrime { .. }))
        ));
    }

    #[test]
    fn psl2_prime_small_parameters() {
        expect(
            &gamma_psl2_p(p(7)).unwrap(),
            &[2, 3, 7],
            &[(7, 3), (2, 3), (3, 2)],
        );
        expect(
            &gamma_psl2_p(p(13)).unwrap(),
            &[2, 3, 7, 13],
            &[(13, 2), (13, 3), (2, 3), (3, 2), (7, 2)],
        );
        expect(
            &gamma_psl2_p(p(17)).unwrap(),
            &[2, 3, 17],
            &[(17, 2), (2, 3), (3, 2)],
        );
        assert!(matches!(
            gamma_psl2_p(p(11)),
            Err(Error::Candidate(CandidateError::FiveDividesCondition {
                p: 11,
                rem: 1
            }))
        ));
        assert!(matches!(
            gamma_psl2_p(p(5)),
            Err(Error::Candidate(CandidateError::ParameterTooSmall { p: 5 }))
        ));
    }

    #[test]
    fn suzuki_small_parameters() {
        expect(
            &gamma_sz_2p(p(3)).unwrap(),
            &[2, 5, 7, 13],
            &[(2, 7), (5, 2), (7, 2), (13, 2)],
        );
        expect(
            &gamma_sz_2p(p(5)).unwrap(),
            &[2, 5, 31, 41],
            &[(2, 31), (5, 2), (31, 2), (41, 2)],
        );
        assert!(gamma_sz_2p(p(2)).is_err());
    }

    #[test]
    fn psl33_fixed_graph() {
        let g = gamma_psl33();
        expect(&g, &[2, 3, 13], &[(2, 3), (3, 2), (13, 3)]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn hardcoded_a5_line_matches_generator() {
        // the smallest case of the char-2 family is the alternating
        // group on 5 letters; its triple is checked directly by the
        // decision procedure
        let a5 = gamma_psl2_2p(p(2)).unwrap();
        expect(&a5, &[2, 3, 5], &[(2, 3), (3, 2), (5, 2)]);
    }

    #[test]
    fn vertex_sets_match_group_orders() {
        // |PSL(2,2^p)| = 2^p (2^{2p}-1)
        for pr in [2u64, 3, 5, 7] {
            let order = pow_u(2, pr) * two_pow_minus_one(2 * pr);
            let support = factorize_big(&order).unwrap().primes();
            assert_eq!(gamma_psl2_2p(p(pr)).unwrap().vertex_set(), support);
        }
        // |PSL(2,3^p)| = 3^p (3^{2p}-1) / 2
        for pr in [3u64, 5, 7] {
            let order = pow_u(3, pr) * (pow_u(3, 2 * pr) - BigUint::one()) / BigUint::from(2u32);
            let support = factorize_big(&order).unwrap().primes();
            assert_eq!(gamma_psl2_3p(p(pr)).unwrap().vertex_set(), support);
        }
        // |PSL(2,p)| = p (p^2-1) / 2
        for pr in [7u64, 13, 17] {
            let order = BigUint::from(pr * (pr * pr - 1) / 2);
            let support = factorize_big(&order).unwrap().primes();
            assert_eq!(gamma_psl2_p(p(pr)).unwrap().vertex_set(), support);
        }
        // |Sz(2^p)| = 2^{2p} (2^{2p}+1) (2^p-1)
        for pr in [3u64, 5, 7] {
            let order =
                pow_u(2, 2 * pr) * (pow_u(2, 2 * pr) + BigUint::one()) * two_pow_minus_one(pr);
            let support = factorize_big(&order).unwrap().primes();
            assert_eq!(gamma_sz_2p(p(pr)).unwrap().vertex_set(), support);
        }
        // |PSL(3,3)| = 5616 = 2^4 * 3^3 * 13
        let support = crate::primes::prime_set(5616).unwrap();
        assert_eq!(gamma_psl33().vertex_set(), support);
    }

    #[test]
    fn every_non_defining_vertex_points_at_two() {
        // in the char-2 families every odd vertex has an edge to 2
        for pr in [3u64, 5, 7, 11, 13] {
            for g in [gamma_psl2_2p(p(pr)).unwrap(), gamma_sz_2p(p(pr)).unwrap()] {
                for v in g.vertices().filter(|v| *v != Prime::TWO) {
                    assert!(g.has_edge(v, Prime::TWO), "({v}, 2) missing for p = {pr}");
                }
            }
        }
    }

    #[test]
    fn candidate_constructors_enforce_preconditions() {
        assert!(CandidateGroup::psl2_char_three(p(2)).is_err());
        assert!(CandidateGroup::suzuki(p(2)).is_err());
        assert!(CandidateGroup::psl2_prime(p(7)).is_ok());
        assert!(CandidateGroup::psl2_prime(p(11)).is_err()); // 11 mod 5 = 1
        assert!(CandidateGroup::psl2_prime(p(19)).is_err()); // 19 mod 5 = 4
        assert!(CandidateGroup::psl2_prime(p(3)).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(CandidateGroup::psl2_char_two(p(2)).to_string(), "PSL(2,4)");
        assert_eq!(CandidateGroup::psl2_char_two(p(3)).to_string(), "PSL(2,8)");
        assert_eq!(
            CandidateGroup::psl2_char_three(p(3)).unwrap().to_string(),
            "PSL(2,27)"
        );
        assert_eq!(CandidateGroup::suzuki(p(3)).unwrap().to_string(), "Sz(8)");
        assert_eq!(
            CandidateGroup::psl2_prime(p(7)).unwrap().to_string(),
            "PSL(2,7)"
        );
        assert_eq!(CandidateGroup::Psl3Three.to_string(), "PSL(3,3)");
        // past a million the field size stays in power form
        assert_eq!(
            CandidateGroup::psl2_char_two(p(31)).to_string(),
            "PSL(2,2^31)"
        );
        assert_eq!(
            CandidateGroup::psl2_char_three(p(13)).unwrap().to_string(),
            "PSL(2,3^13)"
        );
        assert_eq!(
            CandidateGroup::suzuki(p(23)).unwrap().to_string(),
            "Sz(2^23)"
        );
    }

    #[test]
    fn serde_tags() {
        let c = CandidateGroup::psl2_char_two(p(3));
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"family":"PSL2_2p","p":3}"#
        );
        let c = CandidateGroup::Psl3Three;
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"family":"PSL3_3"}"#);
        let back: CandidateGroup = serde_json::from_str(r#"{"family":"Sz_2p","p":5}"#).unwrap();
        assert_eq!(back, CandidateGroup::suzuki(p(5)).unwrap());
    }
}
