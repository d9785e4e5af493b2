//! Simple undirected graphs and the loop/multi-edge carrier used by the
//! factor reduction.
//!
//! Vertices are dense ids `0..n`. Every operation here is a pure function of
//! an immutable graph, so graphs can be shared freely between threads.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite, simple, undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge; self-loops and out-of-range ids are
    /// rejected with the position of the offending entry.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (position, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { position, vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { position, vertex: u });
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                true
            }
        }
    }

    /// Returns a copy with the edge `uv` added (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidVertex { vertex: u.max(v), n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop { position: 0, vertex: u });
        }
        let mut g = self.clone();
        g.insert(u, v);
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    /// Cycle C_n (n ≥ 3).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { needed: 3, actual: n });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Star K_{1,leaves} with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    /// Graph whose edges are the set bits of an upper-triangular mask, in the
    /// order (0,1), (0,2), .., (0,n-1), (1,2), ...
    pub fn from_upper_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    g.insert(u, v);
                }
                bit += 1;
            }
        }
        g
    }

    /// Inverse of [`Graph::from_upper_mask`]; requires n ≤ 11.
    pub fn upper_mask(&self) -> u64 {
        assert!(self.n * self.n.saturating_sub(1) / 2 <= 64, "graph too large for a u64 mask");
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|ns| ns.len() + 1 == self.n)
    }

    /// Two-colouring when the graph is bipartite; `colour[v]` is 0 or 1.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if colour[root] != u8::MAX {
                continue;
            }
            colour[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || components_of(self, &vec![false; self.n]).len() == 1
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_list())
            .finish()
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set, sorting and removing duplicates.
    pub fn from_iter_unchecked(items: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Builds a set and checks every member is a vertex of a graph on `n` vertices.
    pub fn within(n: usize, items: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set = Self::from_iter_unchecked(items);
        match set.0.last() {
            Some(&v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
            _ => Ok(set),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub(crate) fn membership(&self, n: usize) -> Vec<bool> {
        let mut mark = vec![false; n];
        for v in self.iter() {
            mark[v] = true;
        }
        mark
    }

    pub(crate) fn check_in(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) => g.check_vertex(v),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_iter_unchecked(iter)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(items: [usize; N]) -> Self {
        Self::from_iter_unchecked(items)
    }
}

pub(crate) fn check_disjoint(s: &VertexSet, t: &VertexSet) -> Result<()> {
    match s.iter().find(|&v| t.contains(v)) {
        Some(vertex) => Err(Error::OverlappingSets { vertex }),
        None => Ok(()),
    }
}

/// Per-vertex degrees together with the minimum and maximum degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

pub fn degree_profile(g: &Graph) -> Result<DegreeProfile> {
    let degrees: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let min = *degrees.iter().min().ok_or(Error::EmptyGraph)?;
    let max = *degrees.iter().max().ok_or(Error::EmptyGraph)?;
    Ok(DegreeProfile { degrees, min, max })
}

/// Minimum degree δ(G).
pub fn min_degree(g: &Graph) -> Result<usize> {
    (0..g.n).map(|v| g.degree(v)).min().ok_or(Error::EmptyGraph)
}

/// A non-negative integer or +∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinity,
}

impl Serialize for Extended {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u64(*v as u64),
            Extended::Infinity => s.serialize_str("infinity"),
        }
    }
}

/// σ₂(G): minimum of d(u)+d(v) over non-adjacent distinct pairs, or
/// [`Extended::Infinity`] when no such pair exists.
pub fn sigma2(g: &Graph) -> Extended {
    let mut best = Extended::Infinity;
    for u in 0..g.n {
        for v in u + 1..g.n {
            if !g.has_edge(u, v) {
                best = best.min(Extended::Finite(g.degree(u) + g.degree(v)));
            }
        }
    }
    best
}

fn components_of(g: &Graph, removed: &[bool]) -> Vec<VertexSet> {
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    for root in 0..g.n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut members = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &g.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(VertexSet::from_iter_unchecked(members));
    }
    out
}

/// Connected components of G − X, ordered by smallest member.
pub fn components_after_deletion(g: &Graph, removed: &VertexSet) -> Result<Vec<VertexSet>> {
    removed.check_in(g)?;
    Ok(components_of(g, &removed.membership(g.n)))
}

/// |[S,T]|, the number of edges with one end in S and the other in T.
pub fn edge_cut(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<usize> {
    s.check_in(g)?;
    t.check_in(g)?;
    check_disjoint(s, t)?;
    let in_t = t.membership(g.n);
    Ok(s.iter().map(|u| g.adj[u].iter().filter(|&&w| in_t[w]).count()).sum())
}

/// Undirected multigraph with loops. A loop adds 2 to the degree of its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    multiplicity: BTreeMap<(usize, usize), usize>,
    loops: Vec<usize>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            n,
            multiplicity: BTreeMap::new(),
            loops: vec![0; n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut mg = MultiGraph::new(g.n);
        for e in g.edges() {
            mg.multiplicity.insert(e, 1);
        }
        mg
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(Error::InvalidVertex { vertex, n: self.n });
            }
        }
        if u == v {
            self.loops[u] += 1;
        } else {
            *self.multiplicity.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
        Ok(())
    }

    pub fn add_loops(&mut self, v: usize, count: usize) {
        self.loops[v] += count;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn loops(&self, v: usize) -> usize {
        self.loops[v]
    }

    /// Non-loop edges with multiplicity, `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.multiplicity.iter().map(|(&e, &c)| (e, c))
    }

    pub fn degree(&self, v: usize) -> usize {
        let incident: usize = self
            .multiplicity
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, &c)| c)
            .sum();
        incident + 2 * self.loops[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = self.loops.iter().map(|l| 2 * l).collect();
        for (&(u, v), &c) in &self.multiplicity {
            deg[u] += c;
            deg[v] += c;
        }
        deg
    }

    /// The underlying simple graph, if every edge has multiplicity one and
    /// there are no loops.
    pub fn to_simple(&self) -> Option<Graph> {
        if self.loops.iter().any(|&l| l > 0) || self.multiplicity.values().any(|&c| c != 1) {
            return None;
        }
        let edges: Vec<_> = self.multiplicity.keys().copied().collect();
        Graph::from_edges(self.n, &edges).ok()
    }
}
