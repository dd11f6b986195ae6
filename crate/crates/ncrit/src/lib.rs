#![forbid(unsafe_code)]

//! Decide whether a locally defined formation is a formation of
//! soluble groups with the Shemetkov property.
//!
//! A local definition is a finite set of primes pi together with a
//! subset pi_i of pi for each p_i in pi (containing p_i). Such data
//! also determines a directed graph on pi with an edge (p_i, p_j) for
//! every p_j in pi_i other than p_i, and the question only depends on
//! that graph: the answer is yes exactly when no minimal simple
//! non-abelian group has its own graph contained in it. Since the
//! candidate groups form five explicit families and only boundedly
//! many parameters can occur, the whole decision runs in polynomial
//! time in the largest prime of pi.
//!
//! ```
//! use ncrit::{decide_graph, CriticalGraph, Prime};
//!
//! let p = |v| Prime::new(v).unwrap();
//! // the graph of PSL(3,3) embeds in itself, so the answer is no
//! let gamma = CriticalGraph::graph_from(
//!     [p(2), p(3), p(13)],
//!     [(p(2), p(3)), (p(3), p(2)), (p(13), p(3))],
//! )
//! .unwrap();
//! let verdict = decide_graph(&gamma);
//! assert!(!verdict.is_soluble_shemetkov);
//! assert_eq!(verdict.witness.unwrap().to_string(), "PSL(3,3)");
//! ```

pub mod cli;
pub mod critical_graphs;
pub mod decider;
pub mod formation;
pub mod graph;
pub mod primes;

#[cfg(doctest)]
mod book;

pub use critical_graphs::{CandidateError, CandidateGroup};
pub use decider::{
    decide, decide_graph, decide_graph_with, decide_with, CheckFailure, CheckRecord, CheckStage,
    DecideOptions, Verdict,
};
pub use formation::{formation_graph, spec_from_graph, FormationError, LocalFormationSpec};
pub use graph::{CriticalGraph, Edge, GraphError};
pub use primes::{Factorization, NumberError, Prime, PrimeSet};

/// Any validation or arithmetic error this crate can produce.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Candidate(#[from] CandidateError),
    #[error(transparent)]
    Formation(#[from] FormationError),
}
