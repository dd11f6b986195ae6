//! Locally defined formations and their graphs.
//!
//! A local definition assigns to each prime `p_i` of a support set pi
//! a subset `pi_i` of pi containing `p_i`; the formation consists of
//! the soluble groups whose chief factors obey the corresponding local
//! membership conditions. For the decision procedure the only thing
//! that matters is the induced graph: an edge `(p_i, p_j)` for every
//! `p_j` in `pi_i` other than `p_i` itself.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::CriticalGraph;
use crate::primes::{Prime, PrimeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormationError {
    #[error("the set assigned to {p} must contain {p} itself")]
    HeadNotMember { p: u64 },
    #[error("the set assigned to {p} contains {q}, which is outside the support")]
    OutsideSupport { p: u64, q: u64 },
}

/// A local formation definition: the support pi together with the map
/// `p_i -> pi_i`.
///
/// Validated at construction: there is exactly one entry per member of
/// pi (the map keys are pi), each `pi_i` contains its own `p_i`, and
/// each `pi_i` is a subset of pi.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    try_from = "BTreeMap<Prime, PrimeSet>",
    into = "BTreeMap<Prime, PrimeSet>"
)]
pub struct LocalFormationSpec {
    pi: PrimeSet,
    local_def: BTreeMap<Prime, PrimeSet>,
}

impl LocalFormationSpec {
    pub fn new(local_def: BTreeMap<Prime, PrimeSet>) -> Result<Self, FormationError> {
        let pi: PrimeSet = local_def.keys().copied().collect();
        for (p, set) in &local_def {
            if !set.contains(*p) {
                return Err(FormationError::HeadNotMember { p: p.get() });
            }
            if let Some(q) = set.iter().find(|q| !pi.contains(*q)) {
                return Err(FormationError::OutsideSupport {
                    p: p.get(),
                    q: q.get(),
                });
            }
        }
        Ok(LocalFormationSpec { pi, local_def })
    }

    pub fn pi(&self) -> &PrimeSet {
        &self.pi
    }

    /// The set assigned to `p`, if `p` is in the support.
    pub fn local_set(&self, p: Prime) -> Option<&PrimeSet> {
        self.local_def.get(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Prime, &PrimeSet)> + '_ {
        self.local_def.iter().map(|(p, s)| (*p, s))
    }
}

impl TryFrom<BTreeMap<Prime, PrimeSet>> for LocalFormationSpec {
    type Error = FormationError;
    fn try_from(map: BTreeMap<Prime, PrimeSet>) -> Result<Self, Self::Error> {
        LocalFormationSpec::new(map)
    }
}

impl From<LocalFormationSpec> for BTreeMap<Prime, PrimeSet> {
    fn from(spec: LocalFormationSpec) -> Self {
        spec.local_def
    }
}

/// The graph of a local definition: vertices pi, and an edge
/// `(p_i, p_j)` for every `p_j` in `pi_i` with `p_j != p_i`.
pub fn formation_graph(spec: &LocalFormationSpec) -> CriticalGraph {
    let mut g = CriticalGraph::new();
    for p in spec.pi().iter() {
        g.insert_vertex(p);
    }
    for (p, set) in spec.iter() {
        for q in set.iter().filter(|q| *q != p) {
            g.insert_edge(p, q)
                .expect("members are distinct validated primes");
        }
    }
    g
}

/// The inverse construction: `pi_i` is `p_i` together with the targets
/// of the edges leaving `p_i`. Composing with [`formation_graph`] in
/// either order gives the identity.
pub fn spec_from_graph(g: &CriticalGraph) -> LocalFormationSpec {
    let mut local_def: BTreeMap<Prime, PrimeSet> = BTreeMap::new();
    for v in g.vertices() {
        let mut set = PrimeSet::new();
        set.insert(v);
        local_def.insert(v, set);
    }
    for e in g.edges() {
        local_def
            .get_mut(&e.from)
            .expect("edge endpoints are vertices")
            .insert(e.to);
    }
    LocalFormationSpec::new(local_def).expect("construction satisfies the invariants")
}
