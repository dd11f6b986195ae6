//! Randomized invariants: the graph algebra, the two equivalent views
//! of a local definition, the number-theory helpers, and the decision
//! procedure, each cross-checked against brute-force oracles where one
//! exists.

use std::collections::BTreeMap;

use ncrit::critical_graphs::{gamma_psl2_2p, gamma_psl2_3p, gamma_psl33, gamma_sz_2p};
use ncrit::decider::{check_candidate, enumerate_candidates};
use ncrit::primes::{
    divide_out, divides_mersenne_like, factorize, is_prime, mod_pow, multiplicative_order,
    prime_divisors_within,
};
use ncrit::{
    decide, decide_graph, decide_graph_with, formation_graph, spec_from_graph, CandidateGroup,
    CheckStage, CriticalGraph, DecideOptions, LocalFormationSpec, Prime, PrimeSet,
};
use ncrit_oracle::{
    brute_factor, brute_is_subgraph, rebuild_char_three, rebuild_char_two, rebuild_suzuki,
};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Vertex pool for random graphs: the primes below 50.
const POOL: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

fn p(v: u64) -> Prime {
    Prime::new(v).unwrap()
}

fn graph_from_masks(vmask: &[bool], emask: &[bool]) -> CriticalGraph {
    let mut g = CriticalGraph::new();
    for (i, &v) in POOL.iter().enumerate() {
        if vmask[i] {
            g.insert_vertex(p(v));
        }
    }
    for (i, &a) in POOL.iter().enumerate() {
        for (j, &b) in POOL.iter().enumerate() {
            if i != j && vmask[i] && vmask[j] && emask[i * POOL.len() + j] {
                g.insert_edge(p(a), p(b)).unwrap();
            }
        }
    }
    g
}

fn shrink_by_masks(g: &CriticalGraph, vmask: &[bool], emask: &[bool]) -> CriticalGraph {
    let index = |v: Prime| POOL.iter().position(|&x| x == v.get()).unwrap();
    let mut sub = CriticalGraph::new();
    for v in g.vertices() {
        if vmask[index(v)] {
            sub.insert_vertex(v);
        }
    }
    for e in g.edges() {
        let (i, j) = (index(e.from), index(e.to));
        if vmask[i] && vmask[j] && emask[i * POOL.len() + j] {
            sub.insert_edge(e.from, e.to).unwrap();
        }
    }
    sub
}

prop_compose! {
    fn arb_graph()(
        vmask in prop::collection::vec(any::<bool>(), POOL.len()),
        emask in prop::collection::vec(any::<bool>(), POOL.len() * POOL.len()),
    ) -> CriticalGraph {
        graph_from_masks(&vmask, &emask)
    }
}

prop_compose! {
    fn arb_nested_pair()(
        g in arb_graph(),
        vmask in prop::collection::vec(any::<bool>(), POOL.len()),
        emask in prop::collection::vec(any::<bool>(), POOL.len() * POOL.len()),
    ) -> (CriticalGraph, CriticalGraph) {
        let sub = shrink_by_masks(&g, &vmask, &emask);
        (sub, g)
    }
}

prop_compose! {
    fn arb_nested_chain()(
        (middle, outer) in arb_nested_pair(),
        vmask in prop::collection::vec(any::<bool>(), POOL.len()),
        emask in prop::collection::vec(any::<bool>(), POOL.len() * POOL.len()),
    ) -> (CriticalGraph, CriticalGraph, CriticalGraph) {
        let inner = shrink_by_masks(&middle, &vmask, &emask);
        (inner, middle, outer)
    }
}

prop_compose! {
    fn arb_spec()(
        vmask in prop::collection::vec(any::<bool>(), POOL.len()),
        smask in prop::collection::vec(any::<bool>(), POOL.len() * POOL.len()),
    ) -> LocalFormationSpec {
        let mut members: Vec<u64> = POOL
            .iter()
            .zip(&vmask)
            .filter(|&(_, &keep)| keep)
            .map(|(&v, _)| v)
            .collect();
        if members.is_empty() {
            members.push(2);
        }
        let mut entries: BTreeMap<Prime, PrimeSet> = BTreeMap::new();
        for &head in &members {
            let i = POOL.iter().position(|&x| x == head).unwrap();
            let mut set = PrimeSet::new();
            set.insert(p(head));
            for &q in &members {
                let j = POOL.iter().position(|&x| x == q).unwrap();
                if smask[i * POOL.len() + j] {
                    set.insert(p(q));
                }
            }
            entries.insert(p(head), set);
        }
        LocalFormationSpec::new(entries).unwrap()
    }
}

proptest! {
    #[test]
    fn containment_is_reflexive(g in arb_graph()) {
        prop_assert!(g.is_subgraph(&g));
    }

    #[test]
    fn containment_is_antisymmetric(a in arb_graph(), b in arb_graph()) {
        if a.is_subgraph(&b) && b.is_subgraph(&a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn containment_is_transitive((inner, middle, outer) in arb_nested_chain()) {
        prop_assert!(inner.is_subgraph(&middle));
        prop_assert!(middle.is_subgraph(&outer));
        prop_assert!(inner.is_subgraph(&outer));
    }

    #[test]
    fn union_laws(a in arb_graph(), b in arb_graph(), c in arb_graph()) {
        prop_assert_eq!(a.union(&a), a.clone());
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
        prop_assert!(a.is_subgraph(&a.union(&b)));
        prop_assert!(b.is_subgraph(&a.union(&b)));
    }

    #[test]
    fn union_absorbs_exactly_the_subgraphs(a in arb_graph(), b in arb_graph()) {
        prop_assert_eq!(a.is_subgraph(&b), a.union(&b) == b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn subgraph_matches_brute_on_arbitrary_pairs(a in arb_graph(), b in arb_graph()) {
        prop_assert_eq!(a.is_subgraph(&b), brute_is_subgraph(&a, &b));
        prop_assert_eq!(b.is_subgraph(&a), brute_is_subgraph(&b, &a));
    }

    #[test]
    fn subgraph_matches_brute_on_nested_pairs((sub, g) in arb_nested_pair()) {
        prop_assert!(sub.is_subgraph(&g));
        prop_assert!(brute_is_subgraph(&sub, &g));
        prop_assert_eq!(g.is_subgraph(&sub), brute_is_subgraph(&g, &sub));
    }
}

proptest! {
    #[test]
    fn spec_to_graph_round_trip(spec in arb_spec()) {
        let graph = formation_graph(&spec);
        prop_assert_eq!(graph.vertex_set(), spec.pi().clone());
        for e in graph.edges() {
            prop_assert_ne!(e.from, e.to);
        }
        prop_assert_eq!(spec_from_graph(&graph), spec);
    }

    #[test]
    fn graph_to_spec_round_trip(g in arb_graph()) {
        prop_assert_eq!(formation_graph(&spec_from_graph(&g)), g);
    }

    #[test]
    fn decide_agrees_with_graph_mode(spec in arb_spec()) {
        prop_assert_eq!(decide(&spec), decide_graph(&formation_graph(&spec)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn witness_is_sound(g in arb_graph()) {
        let verdict = decide_graph(&g);
        prop_assert_eq!(verdict.witness.is_some(), !verdict.is_soluble_shemetkov);
        if let Some(witness) = verdict.witness {
            let generated = witness.graph().unwrap();
            prop_assert!(
                generated.is_subgraph(&g),
                "witness {} reported for {} but {} does not embed",
                witness, g, generated
            );
        }
    }

    #[test]
    fn exhaustive_mode_extends_the_default(g in arb_graph()) {
        let default = decide_graph(&g);
        let exhaustive = decide_graph_with(&g, DecideOptions { all_witnesses: true });
        prop_assert_eq!(
            default.is_soluble_shemetkov,
            exhaustive.is_soluble_shemetkov
        );
        let witnesses = exhaustive.witnesses.expect("exhaustive mode lists witnesses");
        prop_assert_eq!(default.witness, witnesses.first().copied().or(exhaustive.witness));
        prop_assert_eq!(exhaustive.is_soluble_shemetkov, witnesses.is_empty());
        for witness in witnesses {
            prop_assert!(witness.graph().unwrap().is_subgraph(&g));
        }
    }

    #[test]
    fn failed_vertex_stage_skips_the_edge_stage(g in arb_graph()) {
        let verdict = decide_graph_with(&g, DecideOptions { all_witnesses: true });
        for window in verdict.trace.windows(2) {
            if window[0].stage == CheckStage::VertexContainment && !window[0].passed {
                let follow_up = &window[1];
                prop_assert!(
                    !(follow_up.candidate == window[0].candidate
                        && follow_up.stage == CheckStage::EdgeContainment),
                    "candidate {} got an edge check after failing vertex containment",
                    window[0].candidate
                );
            }
        }
    }

    #[test]
    fn hardcoded_lines_equal_subgraph_checks(g in arb_graph()) {
        let psl33 = check_candidate(CandidateGroup::Psl3Three, &g);
        prop_assert_eq!(psl33.embedded(), gamma_psl33().is_subgraph(&g));
        let a5 = check_candidate(CandidateGroup::psl2_char_two(p(2)), &g);
        prop_assert_eq!(a5.embedded(), gamma_psl2_2p(p(2)).unwrap().is_subgraph(&g));
    }

    #[test]
    fn rejection_is_monotone((sub, g) in arb_nested_pair()) {
        if decide_graph(&g).is_soluble_shemetkov {
            prop_assert!(decide_graph(&sub).is_soluble_shemetkov);
        }
    }
}

proptest! {
    #[test]
    fn candidate_count_stays_linear(mask in prop::collection::vec(any::<bool>(), 46)) {
        let all: Vec<u64> = (2u64..=200).filter(|&v| is_prime(v)).collect();
        let mut members: Vec<u64> = all
            .iter()
            .zip(&mask)
            .filter(|&(_, &keep)| keep)
            .map(|(&v, _)| v)
            .collect();
        if members.is_empty() {
            members.push(2);
        }
        let pi = PrimeSet::try_from_values(members.iter().copied()).unwrap();
        let count = enumerate_candidates(&pi).len() as u64;
        let bound = 4 * pi.max().unwrap().get();
        prop_assert!(count <= bound, "{count} candidates for pi = {pi}, bound {bound}");
    }

    #[test]
    fn factorize_round_trips(m in 2u64..200_000) {
        let f = factorize(m).unwrap();
        prop_assert_eq!(f.reconstruct(), BigUint::from(m));
        for (q, e) in f.iter() {
            prop_assert!(is_prime(q.get()));
            prop_assert!(e >= 1);
        }
    }

    #[test]
    fn order_divides_group_order_and_is_minimal(
        qi in 0usize..46,
        base in 2u64..1000,
    ) {
        let primes: Vec<u64> = (2u64..=200).filter(|&v| is_prime(v)).collect();
        let q = primes[qi];
        prop_assume!(base % q != 0);
        let order = multiplicative_order(base, p(q)).unwrap();
        prop_assert_eq!((q - 1) % order, 0);
        prop_assert_eq!(mod_pow(base, order, q), 1);
        for d in 1..order {
            if order % d == 0 {
                prop_assert_ne!(mod_pow(base, d, q), 1);
            }
        }
    }

    #[test]
    fn mersenne_divisibility_matches_big_integers(
        qi in 0usize..46,
        base in prop::sample::select(vec![2u64, 3]),
        k in 1u64..200,
    ) {
        let primes: Vec<u64> = (2u64..=200).filter(|&v| is_prime(v)).collect();
        let q = primes[qi];
        prop_assume!(base % q != 0);
        let value = BigUint::from(base).pow(k as u32) - BigUint::one();
        let expected = (&value % q).is_zero();
        prop_assert_eq!(divides_mersenne_like(p(q), base, k).unwrap(), expected);
    }

    #[test]
    fn divide_out_reconstructs(
        m in 1u64..1_000_000_000,
        vmask in prop::collection::vec(any::<bool>(), POOL.len()),
    ) {
        let members: Vec<u64> = POOL
            .iter()
            .zip(&vmask)
            .filter(|&(_, &keep)| keep)
            .map(|(&v, _)| v)
            .collect();
        let pi = PrimeSet::try_from_values(members.iter().copied()).unwrap();
        let value = BigUint::from(m);
        let out = divide_out(&value, &pi).unwrap();
        let mut rebuilt = out.residual.clone();
        for (q, e) in &out.factors {
            prop_assert!(pi.contains(*q));
            rebuilt *= BigUint::from(q.get()).pow(*e);
        }
        prop_assert_eq!(rebuilt, value);
        for q in pi.iter() {
            prop_assert!(!(&out.residual % q.get()).is_zero() || out.residual.is_one());
        }
    }

    #[test]
    fn divisor_containment_agrees_with_oracle(
        m in 2u64..100_000,
        vmask in prop::collection::vec(any::<bool>(), POOL.len()),
    ) {
        let members: Vec<u64> = POOL
            .iter()
            .zip(&vmask)
            .filter(|&(_, &keep)| keep)
            .map(|(&v, _)| v)
            .collect();
        let pi = PrimeSet::try_from_values(members.iter().copied()).unwrap();
        let value = BigUint::from(m);
        let brute = brute_factor(&value);
        let contained = brute.keys().all(|&q| pi.contains_value(q));
        match prime_divisors_within(&value, &pi).unwrap() {
            Some(f) => {
                prop_assert!(contained);
                prop_assert_eq!(f.reconstruct(), value);
                let rebuilt: BTreeMap<u64, u32> =
                    f.iter().map(|(q, e)| (q.get(), e)).collect();
                prop_assert_eq!(rebuilt, brute);
            }
            None => prop_assert!(!contained),
        }
    }
}

/// Generators agree with the oracle rebuilds across the whole desk
/// range, not just the values frozen in the unit tests.
#[test]
fn generators_match_oracle_rebuilds_up_to_13() {
    for pp in [2u64, 3, 5, 7, 11, 13] {
        assert_eq!(
            gamma_psl2_2p(p(pp)).unwrap(),
            rebuild_char_two(pp),
            "PSL(2,2^{pp})"
        );
    }
    for pp in [3u64, 5, 7, 11, 13] {
        assert_eq!(
            gamma_psl2_3p(p(pp)).unwrap(),
            rebuild_char_three(pp),
            "PSL(2,3^{pp})"
        );
        assert_eq!(
            gamma_sz_2p(p(pp)).unwrap(),
            rebuild_suzuki(pp),
            "Sz(2^{pp})"
        );
    }
}
