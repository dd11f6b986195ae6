//! The decision procedure.
//!
//! A graph on a prime set pi describes a formation of soluble groups
//! with the property that every minimal counterexample is a Schmidt
//! group or of prime order exactly when no minimal simple non-abelian
//! group has its graph contained in it. Only a bounded list of
//! candidate groups can possibly embed:
//!
//! - PSL(3, 3) and PSL(2, 4) (checked against fixed edge triples),
//! - PSL(2, p) for p in pi with p > 5 and 5 | p^2 + 1,
//! - PSL(2, 2^p), Sz(2^p), PSL(2, 3^p) for p in rho(pi), the odd
//!   primes dividing some q - 1 with q in pi.
//!
//! The rho bound comes from Fermat's little theorem: an edge (2, q) or
//! (3, q) forces the multiplicative order p of the base mod q, which
//! divides q - 1.
//!
//! Each candidate is checked in two stages. The vertex stage divides
//! the candidate's support value (for example 2(2^{2p}-1)) by the
//! members of pi; a residual of 1 means vertex containment. Only then
//! does the edge stage reconstruct the candidate's edges, deciding
//! memberships like q | 2^p - 1 through multiplicative orders, so no
//! value is ever factored blindly.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::critical_graphs::{pow_u, two_pow_minus_one, CandidateGroup};
use crate::formation::{formation_graph, LocalFormationSpec};
use crate::graph::{CriticalGraph, Edge};
use crate::primes::{divide_out, divides_mersenne_like, factorize, Prime, PrimeSet};

/// The parameter pool for the power families: odd primes dividing
/// q - 1 for some q in pi. Members may lie outside pi.
pub fn rho(pi: &PrimeSet) -> PrimeSet {
    let mut out = PrimeSet::new();
    for q in pi.iter() {
        if q.get() == 2 {
            continue;
        }
        let divisors = factorize(q.get() - 1).expect("q - 1 >= 1").primes();
        for d in divisors.iter().filter(|d| d.is_odd()) {
            out.insert(d);
        }
    }
    out
}

/// The full candidate list for a support set, in the order the
/// procedure checks them: PSL(3,3), then PSL(2,4), then PSL(2,p) for
/// eligible p in pi ascending, then for each p in rho(pi) ascending
/// the groups PSL(2,2^p), Sz(2^p), PSL(2,3^p).
///
/// The list never exceeds 2 + |pi| + 3|rho|.
pub fn enumerate_candidates(pi: &PrimeSet) -> Vec<CandidateGroup> {
    let mut out = vec![
        CandidateGroup::Psl3Three,
        CandidateGroup::psl2_char_two(Prime::TWO),
    ];
    for p in pi.iter() {
        if let Ok(c) = CandidateGroup::psl2_prime(p) {
            out.push(c);
        }
    }
    for p in rho(pi).iter() {
        out.push(CandidateGroup::psl2_char_two(p));
        out.push(CandidateGroup::suzuki(p).expect("rho members are odd"));
        out.push(CandidateGroup::psl2_char_three(p).expect("rho members are odd"));
    }
    out
}

/// Which containment stage a check record describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStage {
    VertexContainment,
    EdgeContainment,
    HardcodedLine,
}

impl fmt::Display for CheckStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStage::VertexContainment => "vertex-containment",
            CheckStage::EdgeContainment => "edge-containment",
            CheckStage::HardcodedLine => "hardcoded-line",
        })
    }
}

/// The first element found to block an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CheckFailure {
    /// The candidate graph has this vertex, pi does not. Reported as
    /// the smallest prime dividing the vertex-stage residual.
    MissingVertex { prime: Prime },
    /// The vertex-stage residual resisted the bounded factor search;
    /// all of its prime divisors are vertices outside pi.
    UnresolvedCofactor { cofactor: String },
    /// The candidate graph requires this edge, the input lacks it.
    MissingEdge { from: Prime, to: Prime },
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFailure::MissingVertex { prime } => write!(f, "missing vertex {prime}"),
            CheckFailure::UnresolvedCofactor { cofactor } => {
                write!(f, "unresolved cofactor {cofactor}")
            }
            CheckFailure::MissingEdge { from, to } => {
                write!(f, "missing edge ({from}, {to})")
            }
        }
    }
}

/// One stage of one candidate check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub candidate: CandidateGroup,
    pub stage: CheckStage,
    pub passed: bool,
    /// Present exactly when the stage failed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub missing: Option<CheckFailure>,
    /// The support value whose prime divisors the vertex stage tested,
    /// as a human-readable expression.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub support: Option<String>,
    /// Prime divisors of the support, known once the vertex stage
    /// passed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub support_primes: Option<PrimeSet>,
    /// The candidate's edges in check order, attached to edge-stage
    /// and hardcoded records.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub required_edges: Option<Vec<Edge>>,
}

/// All records produced for one candidate: a single hardcoded or
/// vertex-stage failure, or a vertex-stage pass followed by the edge
/// stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateCheck {
    pub records: Vec<CheckRecord>,
}

impl CandidateCheck {
    /// True when the candidate's graph embeds in the input, which
    /// happens exactly when the final stage passed.
    pub fn embedded(&self) -> bool {
        self.records
            .last()
            .is_some_and(|r| r.passed && r.stage != CheckStage::VertexContainment)
    }
}

/// The procedure's answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// True when the formation is soluble with the Shemetkov property,
    /// that is when no candidate graph embeds.
    #[serde(rename = "verdict")]
    pub is_soluble_shemetkov: bool,
    /// The first embedded candidate in check order, if any.
    pub witness: Option<CandidateGroup>,
    /// Every embedded candidate; recorded only in exhaustive mode.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witnesses: Option<Vec<CandidateGroup>>,
    pub trace: Vec<CheckRecord>,
    pub candidates_checked: usize,
    pub rho: PrimeSet,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecideOptions {
    /// Keep checking after the first witness and report all of them.
    pub all_witnesses: bool,
}

/// Runs the two-stage check for one candidate against the input graph.
pub fn check_candidate(cand: CandidateGroup, gamma: &CriticalGraph) -> CandidateCheck {
    match cand {
        CandidateGroup::Psl3Three => hardcoded_line(cand, gamma, [(2, 3), (3, 2), (13, 3)]),
        CandidateGroup::Psl2CharTwo { p } if p == Prime::TWO => {
            hardcoded_line(cand, gamma, [(2, 3), (3, 2), (5, 2)])
        }
        CandidateGroup::Psl2CharTwo { p } => {
            let k = p.get();
            staged(
                cand,
                gamma,
                two_pow_minus_one(2 * k) * BigUint::from(2u32),
                format!("2(2^{}-1)", 2 * k),
                |pi| char_two_edges(k, pi),
            )
        }
        CandidateGroup::Suzuki { p } => {
            let k = p.get();
            staged(
                cand,
                gamma,
                two_pow_minus_one(k) * (pow_u(2, 2 * k) + BigUint::one()) * BigUint::from(2u32),
                format!("2(2^{}-1)(2^{}+1)", k, 2 * k),
                |pi| suzuki_edges(k, pi),
            )
        }
        CandidateGroup::Psl2CharThree { p } => {
            let k = p.get();
            staged(
                cand,
                gamma,
                (pow_u(3, 2 * k) - BigUint::one()) * BigUint::from(3u32) / BigUint::from(2u32),
                format!("3(3^{}-1)/2", 2 * k),
                |pi| char_three_edges(k, pi),
            )
        }
        CandidateGroup::Psl2Prime { p } => {
            let pb = BigUint::from(p.get());
            staged(
                cand,
                gamma,
                (&pb * &pb - BigUint::one()) * &pb / BigUint::from(2u32),
                format!("({p}^3-{p})/2"),
                |_| psl2_prime_edges(p),
            )
        }
    }
}

/// Checks a fixed edge triple directly; edge containment alone decides
/// the embedding because every vertex of these two candidates is an
/// edge endpoint.
fn hardcoded_line(
    cand: CandidateGroup,
    gamma: &CriticalGraph,
    triple: [(u64, u64); 3],
) -> CandidateCheck {
    let required: Vec<Edge> = triple
        .iter()
        .map(|&(a, b)| {
            Edge::new(Prime::new(a).unwrap(), Prime::new(b).unwrap())
                .expect("fixed triples are loop-free")
        })
        .collect();
    let missing = required
        .iter()
        .find(|e| !gamma.has_edge(e.from, e.to))
        .copied();
    CandidateCheck {
        records: vec![CheckRecord {
            candidate: cand,
            stage: CheckStage::HardcodedLine,
            passed: missing.is_none(),
            missing: missing.map(|e| CheckFailure::MissingEdge {
                from: e.from,
                to: e.to,
            }),
            support: None,
            support_primes: None,
            required_edges: Some(required),
        }],
    }
}

/// Vertex stage then edge stage. `edges_within` is invoked only after
/// the vertex stage passed, when every prime the edge formulas can
/// produce is known to lie in pi.
fn staged(
    cand: CandidateGroup,
    gamma: &CriticalGraph,
    support: BigUint,
    support_expr: String,
    edges_within: impl FnOnce(&PrimeSet) -> Vec<Edge>,
) -> CandidateCheck {
    let pi = gamma.vertex_set();
    let out = divide_out(&support, &pi).expect("support values are positive");
    if !out.residual.is_one() {
        return CandidateCheck {
            records: vec![CheckRecord {
                candidate: cand,
                stage: CheckStage::VertexContainment,
                passed: false,
                missing: Some(diagnose_residual(&out.residual)),
                support: Some(support_expr),
                support_primes: None,
                required_edges: None,
            }],
        };
    }
    let support_primes: PrimeSet = out.factors.keys().copied().collect();
    let vertex_record = CheckRecord {
        candidate: cand,
        stage: CheckStage::VertexContainment,
        passed: true,
        missing: None,
        support: Some(support_expr),
        support_primes: Some(support_primes),
        required_edges: None,
    };
    let required = edges_within(&pi);
    let missing = required
        .iter()
        .find(|e| !gamma.has_edge(e.from, e.to))
        .copied();
    let edge_record = CheckRecord {
        candidate: cand,
        stage: CheckStage::EdgeContainment,
        passed: missing.is_none(),
        missing: missing.map(|e| CheckFailure::MissingEdge {
            from: e.from,
            to: e.to,
        }),
        support: None,
        support_primes: None,
        required_edges: Some(required),
    };
    CandidateCheck {
        records: vec![vertex_record, edge_record],
    }
}

/// Smallest prime divisor of the residual by bounded trial division;
/// past the bound the cofactor is reported as is.
fn diagnose_residual(residual: &BigUint) -> CheckFailure {
    const TRIAL_CAP: u64 = 10_000;
    let mut d = 2u64;
    while d <= TRIAL_CAP {
        if (residual % d).is_zero() {
            return CheckFailure::MissingVertex {
                prime: Prime::new(d).expect("first divisor found is prime"),
            };
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if let Some(v) = residual.to_u64() {
        if v <= TRIAL_CAP * TRIAL_CAP {
            // no divisor up to the cap, so the value itself is prime
            return CheckFailure::MissingVertex {
                prime: Prime::new(v).expect("residual below cap squared is prime"),
            };
        }
    }
    CheckFailure::UnresolvedCofactor {
        cofactor: residual.to_string(),
    }
}

/// Edges of PSL(2, 2^p) restricted to a pi that contains all of them:
/// (2, q) for q | 2^p - 1, then (q, 2) for q | 2^{2p} - 1.
fn char_two_edges(p: u64, pi: &PrimeSet) -> Vec<Edge> {
    let mut edges = Vec::new();
    for q in pi.iter().filter(|q| q.is_odd()) {
        if divides_mersenne_like(q, 2, p).expect("odd q is coprime to 2") {
            edges.push(Edge::new(Prime::TWO, q).expect("q is odd"));
        }
    }
    for q in pi.iter().filter(|q| q.is_odd()) {
        if divides_mersenne_like(q, 2, 2 * p).expect("odd q is coprime to 2") {
            edges.push(Edge::new(q, Prime::TWO).expect("q is odd"));
        }
    }
    edges
}

/// Edges of Sz(2^p) within pi: (2, q) for q | 2^p - 1, then (q, 2)
/// for q dividing (2^p - 1)(2^{2p} + 1). Divisibility by 2^{2p} + 1
/// holds when the order of 2 mod q divides 4p but not 2p.
fn suzuki_edges(p: u64, pi: &PrimeSet) -> Vec<Edge> {
    let divides_plus_part = |q: Prime| {
        divides_mersenne_like(q, 2, 4 * p).expect("odd q is coprime to 2")
            && !divides_mersenne_like(q, 2, 2 * p).expect("odd q is coprime to 2")
    };
    let mut edges = Vec::new();
    for q in pi.iter().filter(|q| q.is_odd()) {
        if divides_mersenne_like(q, 2, p).expect("odd q is coprime to 2") {
            edges.push(Edge::new(Prime::TWO, q).expect("q is odd"));
        }
    }
    for q in pi.iter().filter(|q| q.is_odd()) {
        if divides_mersenne_like(q, 2, p).expect("odd q is coprime to 2") || divides_plus_part(q) {
            edges.push(Edge::new(q, Prime::TWO).expect("q is odd"));
        }
    }
    edges
}

/// Edges of PSL(2, 3^p) within pi: (3, q) for odd q | 3^p - 1, then
/// (2, 3), then (q, 2) for odd q | 3^{2p} - 1.
fn char_three_edges(p: u64, pi: &PrimeSet) -> Vec<Edge> {
    let eligible = |q: &Prime| q.is_odd() && q.get() != 3;
    let mut edges = Vec::new();
    for q in pi.iter().filter(eligible) {
        if divides_mersenne_like(q, 3, p).expect("q is coprime to 3") {
            edges.push(Edge::new(Prime::THREE, q).expect("q != 3"));
        }
    }
    edges.push(Edge::new(Prime::TWO, Prime::THREE).expect("2 != 3"));
    for q in pi.iter().filter(eligible) {
        if divides_mersenne_like(q, 3, 2 * p).expect("q is coprime to 3") {
            edges.push(Edge::new(q, Prime::TWO).expect("q is odd"));
        }
    }
    edges
}

/// Edges of PSL(2, p): (p, q) for q | (p-1)/2, then (2, 3), then
/// (q, 2) for odd q | p^2 - 1. Everything here is machine-word scale.
fn psl2_prime_edges(p: Prime) -> Vec<Edge> {
    let v = p.get();
    let half = factorize((v - 1) / 2).expect("p > 5").primes();
    let square = u64::try_from(u128::from(v) * u128::from(v) - 1)
        .expect("p^2 - 1 fits a machine word at this crate's scale");
    let around = factorize(square).expect("p > 5").primes();
    let mut edges = Vec::new();
    for q in half.iter() {
        edges.push(Edge::new(p, q).expect("q <= (p-1)/2 < p"));
    }
    edges.push(Edge::new(Prime::TWO, Prime::THREE).expect("2 != 3"));
    for q in around.iter().filter(|q| q.is_odd()) {
        edges.push(Edge::new(q, Prime::TWO).expect("q is odd"));
    }
    edges
}

/// Decides the graph form of the question with default options.
pub fn decide_graph(gamma: &CriticalGraph) -> Verdict {
    decide_graph_with(gamma, DecideOptions::default())
}

/// Decides the graph form of the question: true exactly when no
/// minimal simple non-abelian group's graph is a subgraph of `gamma`.
pub fn decide_graph_with(gamma: &CriticalGraph, options: DecideOptions) -> Verdict {
    let pi = gamma.vertex_set();
    let rho_set = rho(&pi);
    let mut trace = Vec::new();
    let mut witnesses = Vec::new();
    let mut checked = 0usize;
    for cand in enumerate_candidates(&pi) {
        checked += 1;
        let check = check_candidate(cand, gamma);
        let embedded = check.embedded();
        trace.extend(check.records);
        if embedded {
            witnesses.push(cand);
            if !options.all_witnesses {
                break;
            }
        }
    }
    Verdict {
        is_soluble_shemetkov: witnesses.is_empty(),
        witness: witnesses.first().copied(),
        witnesses: options.all_witnesses.then_some(witnesses),
        trace,
        candidates_checked: checked,
        rho: rho_set,
    }
}

/// Decides a local formation definition with default options.
pub fn decide(spec: &LocalFormationSpec) -> Verdict {
    decide_graph(&formation_graph(spec))
}

/// Decides a local formation definition.
pub fn decide_with(spec: &LocalFormationSpec, options: DecideOptions) -> Verdict {
    decide_graph_with(&formation_graph(spec), options)
}
