//! Directed loop-free graphs on prime vertices.
//!
//! A [`CriticalGraph`] records, for a group or a class of groups, which
//! ordered pairs of primes `(p, q)` admit a minimal non-nilpotent
//! subgroup whose normal Sylow subgroup is a `p`-group and whose cyclic
//! Sylow subgroup is a `q`-group. Only the set structure matters here;
//! the group-theoretic meaning is supplied by the callers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::primes::Prime;

/// An ordered edge `(from, to)` between two distinct primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: Prime,
    pub to: Prime,
}

impl Edge {
    pub fn new(from: Prime, to: Prime) -> Result<Self, GraphError> {
        if from == to {
            return Err(GraphError::Loop(from.get()));
        }
        Ok(Edge { from, to })
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.from, self.to)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("loops are not allowed: ({0}, {0})")]
    Loop(u64),
    #[error("edge ({from}, {to}) uses a vertex outside the vertex set")]
    DanglingEdge { from: u64, to: u64 },
}

/// A finite directed graph whose vertices are primes and whose edges
/// are loop-free ordered pairs of vertices.
///
/// Vertices and edges are kept in sorted order, so iteration order,
/// equality, and serialization are all canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct CriticalGraph {
    vertices: std::collections::BTreeSet<Prime>,
    edges: std::collections::BTreeSet<Edge>,
}

/// Serialization image of [`CriticalGraph`]; re-validated on the way in.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<u64>,
    edges: Vec<(u64, u64)>,
}

impl TryFrom<RawGraph> for CriticalGraph {
    type Error = crate::Error;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        let mut g = CriticalGraph::new();
        for v in raw.vertices {
            g.insert_vertex(Prime::new(v)?);
        }
        for (a, b) in raw.edges {
            g.insert_edge_checked(Prime::new(a)?, Prime::new(b)?)?;
        }
        Ok(g)
    }
}

impl From<CriticalGraph> for RawGraph {
    fn from(g: CriticalGraph) -> RawGraph {
        RawGraph {
            vertices: g.vertices.iter().map(|p| p.get()).collect(),
            edges: g.edges.iter().map(|e| (e.from.get(), e.to.get())).collect(),
        }
    }
}

impl CriticalGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex and edge lists.
    ///
    /// Every edge endpoint must already appear among the vertices;
    /// loops are rejected.
    pub fn graph_from<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = Prime>,
        E: IntoIterator<Item = (Prime, Prime)>,
    {
        let mut g = CriticalGraph::new();
        for v in vertices {
            g.insert_vertex(v);
        }
        for (a, b) in edges {
            g.insert_edge_checked(a, b)?;
        }
        Ok(g)
    }

    pub fn insert_vertex(&mut self, p: Prime) -> bool {
        self.vertices.insert(p)
    }

    /// Inserts an edge, adding missing endpoints as vertices.
    pub fn insert_edge(&mut self, from: Prime, to: Prime) -> Result<bool, GraphError> {
        let e = Edge::new(from, to)?;
        self.vertices.insert(from);
        self.vertices.insert(to);
        Ok(self.edges.insert(e))
    }

    /// Inserts an edge only if both endpoints are already vertices.
    fn insert_edge_checked(&mut self, from: Prime, to: Prime) -> Result<bool, GraphError> {
        let e = Edge::new(from, to)?;
        if !self.vertices.contains(&from) || !self.vertices.contains(&to) {
            return Err(GraphError::DanglingEdge {
                from: from.get(),
                to: to.get(),
            });
        }
        Ok(self.edges.insert(e))
    }

    pub fn has_vertex(&self, p: Prime) -> bool {
        self.vertices.contains(&p)
    }

    pub fn has_edge(&self, from: Prime, to: Prime) -> bool {
        from != to && self.edges.contains(&Edge { from, to })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = Prime> + '_ {
        self.vertices.iter().copied()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_set(&self) -> crate::primes::PrimeSet {
        self.vertices.iter().copied().collect()
    }

    /// Subgraph containment: all vertices and all edges of `self`
    /// appear in `other`.
    pub fn is_subgraph(&self, other: &CriticalGraph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    /// Vertex-and-edge union of two graphs.
    pub fn union(&self, other: &CriticalGraph) -> CriticalGraph {
        CriticalGraph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    /// First edge of `self` missing from `other`, if any, in
    /// lexicographic order. `None` means edge containment holds.
    pub fn first_missing_edge(&self, other: &CriticalGraph) -> Option<Edge> {
        self.edges
            .iter()
            .find(|e| !other.edges.contains(e))
            .copied()
    }
}

impl fmt::Display for CriticalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V = {{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}, E = {{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
