//! Undirected simple graphs on at most 64 vertices, stored as one `u64`
//! neighbourhood bitset per vertex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of vertex indices `0..64` packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 64, "vertex sets hold at most 64 vertices");
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < 64);
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < 64);
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.0 &= !(1u64 << v);
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// What an induced subgraph looks like, as far as the NG characterization
/// cares. On at most one vertex a set is both a clique and independent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedShape {
    pub clique: bool,
    pub independent: bool,
    pub five_cycle: bool,
}

impl InducedShape {
    /// None of the three recognised shapes.
    pub fn is_other(self) -> bool {
        !(self.clique || self.independent || self.five_cycle)
    }
}

/// Undirected simple graph with `n <= 64` vertices.
///
/// `adj[v]` holds the neighbours of `v`; the relation is symmetric and
/// irreflexive, and no bit at or above `n` is ever set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub const MAX_VERTICES: usize = 64;

    /// Edgeless graph `I_n`. Panics if `n > 64`.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= Self::MAX_VERTICES, "graphs hold at most 64 vertices");
        Graph { n, adj: vec![0; n] }
    }

    /// Complete graph `K_n`. Panics if `n > 64`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > Self::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: Self::MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood words, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n > Self::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: Self::MAX_VERTICES,
            });
        }
        let mask = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency is not symmetric: {v} -> {u} without {u} -> {v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| {
            VertexSet(self.adj[v] & ((1u64 << v) - 1)).iter().map(move |u| (u, v))
        })
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// The complement graph: `uv` is an edge iff `u != v` and `uv` is not an
    /// edge here.
    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// `G[S]`, with the members of `s` relabelled `0..|s|` in increasing order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if let Some(v) = s.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let verts = s.to_vec();
        let mut h = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    h.add_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut s = self.vertices();
        s.remove(v);
        self.induced_subgraph(s)
    }

    /// Applies `perm` as a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.adj[v] & s.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & s.0 & !seen.0);
            seen = seen.union(frontier);
        }
        seen == s
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Classifies `G[s]` as clique / independent set / 5-cycle.
    ///
    /// A 5-cycle is recognised as five vertices, five edges, 2-regular and
    /// connected.
    pub fn classify_induced(&self, s: VertexSet) -> InducedShape {
        let k = s.len();
        let e = self.edges_within(s);
        let five_cycle = k == 5
            && e == 5
            && s.iter().all(|v| (self.adj[v] & s.0).count_ones() == 2)
            && self.is_connected_within(s);
        InducedShape {
            clique: e == k * k.saturating_sub(1) / 2,
            independent: e == 0,
            five_cycle,
        }
    }

    /// Every member of `t` is adjacent to every member of `s` (and `s`, `t`
    /// are disjoint). Returns a missing pair otherwise.
    pub fn missing_cross_edge(&self, s: VertexSet, t: VertexSet) -> Option<(usize, usize)> {
        for u in s {
            let missing = t.difference(self.neighbors(u));
            if let Some(v) = missing.iter().find(|&v| v != u) {
                return Some((u, v));
            }
        }
        None
    }

    /// Some edge between `s` and `t`, if one exists.
    pub fn cross_edge(&self, s: VertexSet, t: VertexSet) -> Option<(usize, usize)> {
        s.iter()
            .find_map(|u| self.neighbors(u).intersection(t).first().map(|v| (u, v)))
    }

    /// Disjoint union, with `other`'s vertices shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > Self::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: Self::MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
