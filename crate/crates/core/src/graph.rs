//! Simple undirected graphs on up to 64 labeled vertices.
//!
//! Adjacency is a `Vec<u64>` of neighbor bitsets, one word per vertex, which
//! keeps the Hamiltonian oracles and the exhaustive enumeration allocation-
//! free in their inner loops. Values are immutable; "mutation" is adding an
//! edge to a copy via [`Graph::with_edge`].

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest vertex count the bitset representation supports.
pub const MAX_VERTICES: usize = 64;

/// Bitset with the low `n` bits set.
pub(crate) fn mask_all(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of a word in ascending order.
pub(crate) fn bits(mask: u64) -> BitIter {
    BitIter(mask)
}

pub(crate) struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// An unordered pair of distinct vertices, held with `u < v`.
///
/// The name reflects the intended use: pairs produced by [`Graph::non_edge`]
/// and [`Graph::non_edges`] are guaranteed absent from the graph they came
/// from. The type itself only enforces distinctness and ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonEdge {
    u: usize,
    v: usize,
}

impl NonEdge {
    /// Normalizes the pair; `a == b` is rejected.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(NonEdge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

impl std::fmt::Display for NonEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Degree sequence summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    /// Degree of each vertex, indexed by label.
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

/// Wire form of a graph: vertex count plus a sorted, deduplicated edge list
/// with each pair written smaller-endpoint first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// A simple undirected graph on `n ≤ 64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may appear in either
    /// orientation and repeats are ignored; self-loops and out-of-range
    /// endpoints are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { n, adj })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        let full = mask_all(n);
        let adj = (0..n).map(|v| full & !(1 << v)).collect();
        Ok(Graph { n, adj })
    }

    /// The cycle `C_n` (`n ≥ 3`) on vertices `0, 1, …, n-1` in order.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderTooSmall { n, min: 3 });
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|v| (v, v + 1)).collect();
        edges.push((n - 1, 0));
        Self::new(n, &edges)
    }

    /// The path `P_n` on vertices `0, 1, …, n-1` in order.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|v| (v, v + 1)).collect();
        Self::new(n, &edges)
    }

    /// Wraps a prebuilt adjacency table. Callers must guarantee symmetry,
    /// no self-loops, and no bits at or above `n`.
    pub(crate) fn from_adj(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert!(adj.iter().all(|&row| row & !mask_all(n) == 0));
        debug_assert!((0..n).all(|v| adj[v] & (1 << v) == 0));
        debug_assert!((0..n).all(|v| bits(adj[v]).all(|w| adj[w] & (1 << v) != 0)));
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// True iff `u` and `v` are distinct in-range vertices joined by an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            degrees,
            min_degree,
            max_degree,
        }
    }

    /// Edge list, lexicographically sorted with `u < v` in each pair.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !mask_all(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Validates that `a`-`b` is a non-edge of this graph.
    pub fn non_edge(&self, a: usize, b: usize) -> Result<NonEdge> {
        if a >= self.n {
            return Err(Error::VertexOutOfRange { v: a, n: self.n });
        }
        if b >= self.n {
            return Err(Error::VertexOutOfRange { v: b, n: self.n });
        }
        let e = NonEdge::new(a, b)?;
        if self.has_edge(a, b) {
            return Err(Error::NotANonEdge { u: e.u, v: e.v });
        }
        Ok(e)
    }

    /// All non-edges in lexicographic order.
    pub fn non_edges(&self) -> Vec<NonEdge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let missing = mask_all(self.n) & !self.adj[u] & !mask_all(u + 1);
            for v in bits(missing) {
                out.push(NonEdge { u, v });
            }
        }
        out
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, e: NonEdge) -> Result<Graph> {
        let e = self.non_edge(e.u, e.v)?;
        let mut g = self.clone();
        g.adj[e.u] |= 1 << e.v;
        g.adj[e.v] |= 1 << e.u;
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let full = mask_all(self.n);
        let mut reach = 1u64;
        loop {
            let mut next = reach;
            for v in bits(reach) {
                next |= self.adj[v];
            }
            if next == reach {
                return reach == full;
            }
            reach = next;
        }
    }

    /// Wire representation (sorted edge list).
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    /// Accepts any wire-form graph; edge order and orientation are free and
    /// duplicates collapse.
    pub fn from_json(wire: &GraphJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = wire.edges.iter().map(|&[a, b]| (a, b)).collect();
        Self::new(wire.n, &edges)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph wire form always serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let wire: GraphJson = serde_json::from_str(s).map_err(|e| Error::BadJson(e.to_string()))?;
        Self::from_json(&wire)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
