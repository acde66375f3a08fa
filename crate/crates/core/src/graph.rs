//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are labeled `0..n` and each vertex stores its neighbourhood as a
//! single `u64` bitset. Graphs are values: every edit returns a new graph.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order representable with single-word neighbour sets.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// An unordered vertex pair `{u, v}` with `u != v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the pair so that `u < v`.
    pub fn new(u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(Edge {
            u: u.min(v),
            v: u.max(v),
        })
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|e| e.to_string()).collect();
        write!(f, "Graph(n={}, [{}])", self.order(), edges.join(", "))
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds a graph from vertex pairs. Repeated pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbour bitsets, validating symmetry and the
    /// absence of loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    order: n,
                });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for w in iter_bits(row) {
                if adj[w] & bit(v) == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency is not symmetric at {v}-{w}"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbour bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & bit(v) != 0
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Bitset of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order())
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order()).flat_map(move |u| {
            iter_bits(self.adj[u] & !low_mask(u + 1)).map(move |v| Edge { u, v })
        })
    }

    /// Number of edges between the vertex sets `a` and `b`.
    pub fn edges_between(&self, a: u64, b: u64) -> usize {
        iter_bits(a)
            .map(|u| (self.adj[u] & b).count_ones() as usize)
            .sum()
    }

    /// Outer boundary of `set`: vertices outside it with a neighbour inside.
    pub fn boundary(&self, set: u64) -> u64 {
        iter_bits(set).fold(0, |acc, v| acc | self.adj[v]) & !set
    }

    pub fn isolated_vertices(&self) -> usize {
        self.adj.iter().filter(|&&r| r == 0).count()
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen & bit(start) != 0 {
                continue;
            }
            let comp = self.component_of(start, self.vertex_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Component containing `start` in the subgraph induced by `alive`.
    pub(crate) fn component_of(&self, start: usize, alive: u64) -> u64 {
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp
    }

    /// Number of components of the subgraph induced by `alive`.
    pub fn count_components_in(&self, alive: u64) -> usize {
        let mut rest = alive;
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !self.component_of(v, alive);
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced by `set`, relabeled in increasing vertex order.
    pub fn induced_subgraph(&self, set: u64) -> Graph {
        let keep: Vec<usize> = iter_bits(set & self.vertex_mask()).collect();
        let mut adj = vec![0u64; keep.len()];
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    adj[a] |= bit(b);
                }
            }
        }
        Graph { adj }
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::Precondition(format!(
                "permutation has length {} for a graph of order {n}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != self.vertex_mask() {
            return Err(Error::Precondition("relabeling is not a permutation".into()));
        }
        Graph::from_edges(n, self.edges().map(|e| (perm[e.u], perm[e.v])))
    }

    // ---- edits ---------------------------------------------------------

    /// `self ⊎ other`; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.order();
        let n = n1 + other.order();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << n1));
        Ok(Graph { adj })
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.order();
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(n1);
        let right = g.vertex_mask() & !left;
        for v in 0..g.order() {
            g.adj[v] |= if v < n1 { right } else { left };
        }
        Ok(g)
    }

    /// `P₂ ⊙ {self, other}`: hub `a = n₁ + n₂` is joined to every vertex of
    /// `self`, hub `b = n₁ + n₂ + 1` to every vertex of `other`, and `ab` is
    /// an edge.
    pub fn corona_p2(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.order();
        let n12 = n1 + other.order();
        let mut g = self.disjoint_union(other)?.add_isolated_vertex()?.add_isolated_vertex()?;
        let (a, b) = (n12, n12 + 1);
        for v in 0..n1 {
            g = g.add_edge(a, v)?;
        }
        for v in n1..n12 {
            g = g.add_edge(b, v)?;
        }
        g.add_edge(a, b)
    }

    pub fn add_isolated_vertex(&self) -> Result<Graph> {
        if self.order() >= MAX_ORDER {
            return Err(Error::OrderTooLarge(self.order() + 1));
        }
        let mut adj = self.adj.clone();
        adj.push(0);
        Ok(Graph { adj })
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = Edge::new(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists { u: e.u, v: e.v });
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Graph { adj })
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::NotAnEdge { u: e.u, v: e.v });
        }
        let mut adj = self.adj.clone();
        adj[e.u] &= !bit(e.v);
        adj[e.v] &= !bit(e.u);
        Ok(Graph { adj })
    }

    /// Removes `v` and relabels the remaining vertices in increasing order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(self.vertex_mask() & !bit(v)))
    }

    /// Replaces `uv` by the path `u – w – v` where `w` is the new vertex
    /// `self.order()`.
    pub fn subdivide_edge(&self, e: Edge) -> Result<Graph> {
        let w = self.order();
        self.delete_edge(e)?
            .add_isolated_vertex()?
            .add_edge(e.u, w)?
            .add_edge(w, e.v)
    }

    /// `self ⊎ other` plus the edge from `u ∈ self` to `v ∈ other`.
    pub fn bridge(&self, u: usize, other: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        self.disjoint_union(other)?.add_edge(u, self.order() + v)
    }
}

/// Iterates the set bits of `mask` in increasing order.
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
