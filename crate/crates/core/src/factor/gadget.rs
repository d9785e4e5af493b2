//! Reduction of even [a,b]-factors to perfect matchings.
//!
//! Adding (b − a)/2 loops at every vertex turns even [a,b]-factors of G into
//! b-factors of the loop-augmented multigraph (a vertex of factor degree d
//! uses (b − d)/2 loops). A b-factor is then encoded by the classical gadget:
//! every vertex v gets one node per incident edge end (two per loop) and a
//! core of d′(v) − b nodes joined to all of v's edge nodes. Each host edge
//! becomes a twin edge between its two end nodes, each loop an edge between
//! its two nodes. In a perfect matching the core absorbs exactly
//! d′(v) − b edge nodes at v, so exactly b of them are matched through twin
//! or loop edges.

use std::collections::BTreeMap;

use super::matching::{matching_size, maximum_matching};
use super::Factor;
use crate::criteria::check_even_range;
use crate::error::{Error, Result};
use crate::graph::{Graph, MultiGraph};

/// G with (b − a)/2 loops added at every vertex.
pub fn loop_augment(g: &Graph, a: usize, b: usize) -> Result<MultiGraph> {
    check_even_range(a, b)?;
    let mut mg = MultiGraph::from_graph(g);
    for v in 0..g.vertex_count() {
        mg.add_loops(v, (b - a) / 2);
    }
    Ok(mg)
}

/// What a gadget edge stands for in the host multigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRole {
    /// Twin of copy `copy` of host edge `(u, v)`, `u < v`.
    HostEdge { u: usize, v: usize, copy: usize },
    /// Copy `copy` of a loop at `v`.
    Loop { v: usize, copy: usize },
    /// Core node to edge node inside one vertex gadget.
    Internal { v: usize },
}

#[derive(Debug, Clone)]
pub struct MatchingInstance {
    host_n: usize,
    b: usize,
    node_count: usize,
    edges: Vec<(usize, usize)>,
    roles: Vec<EdgeRole>,
    /// first edge node and first core node of every host vertex
    edge_base: Vec<usize>,
    core_base: Vec<usize>,
    core_size: Vec<usize>,
    twins: BTreeMap<(usize, usize), Vec<usize>>,
    loop_edges: Vec<Vec<usize>>,
}

/// A maximum matching of a gadget, as a mate vector.
#[derive(Debug, Clone)]
pub struct GadgetMatching {
    pub mate: Vec<Option<usize>>,
    pub size: usize,
}

impl GadgetMatching {
    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }
}

/// Builds the b-factor gadget of `mg`. Fails naming the first vertex whose
/// augmented degree is below `b`.
pub fn tutte_gadget(mg: &MultiGraph, b: usize) -> Result<MatchingInstance> {
    let n = mg.vertex_count();
    let degrees = mg.degrees();
    if let Some(v) = (0..n).find(|&v| degrees[v] < b) {
        return Err(Error::DeficientVertex {
            vertex: v,
            degree: degrees[v],
            needed: b,
        });
    }
    let mut edge_base = Vec::with_capacity(n);
    let mut core_base = Vec::with_capacity(n);
    let mut core_size = Vec::with_capacity(n);
    let mut next = 0;
    for &d in &degrees {
        edge_base.push(next);
        core_base.push(next + d);
        core_size.push(d - b);
        next += 2 * d - b;
    }

    let mut free: Vec<usize> = edge_base.clone();
    let mut take = |v: usize| {
        let id = free[v];
        free[v] += 1;
        id
    };
    let mut edges = Vec::new();
    let mut roles = Vec::new();
    let mut twins: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut loop_edges = vec![Vec::new(); n];
    for ((u, v), count) in mg.edges() {
        for copy in 0..count {
            let (x, y) = (take(u), take(v));
            twins.entry((u, v)).or_default().push(edges.len());
            edges.push((x, y));
            roles.push(EdgeRole::HostEdge { u, v, copy });
        }
    }
    for v in 0..n {
        for copy in 0..mg.loops(v) {
            let (x, y) = (take(v), take(v));
            loop_edges[v].push(edges.len());
            edges.push((x, y));
            roles.push(EdgeRole::Loop { v, copy });
        }
    }
    for v in 0..n {
        for c in core_base[v]..core_base[v] + core_size[v] {
            for e in edge_base[v]..core_base[v] {
                edges.push((c, e));
                roles.push(EdgeRole::Internal { v });
            }
        }
    }
    Ok(MatchingInstance {
        host_n: n,
        b,
        node_count: next,
        edges,
        roles,
        edge_base,
        core_base,
        core_size,
        twins,
        loop_edges,
    })
}

impl MatchingInstance {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn roles(&self) -> &[EdgeRole] {
        &self.roles
    }

    pub fn max_matching(&self) -> GadgetMatching {
        let mate = maximum_matching(self.node_count, &self.edges);
        let size = matching_size(&mate);
        GadgetMatching { mate, size }
    }

    fn matched(&self, mate: &[Option<usize>], edge: usize) -> bool {
        let (x, y) = self.edges[edge];
        mate[x] == Some(y)
    }

    /// Host edges whose twin edge is matched. With a perfect matching these
    /// form a factor in which every vertex has degree b minus twice its
    /// matched loops.
    pub fn decode(&self, mate: &[Option<usize>], host: &Graph) -> Result<Factor> {
        let chosen: Vec<(usize, usize)> = self
            .twins
            .iter()
            .filter(|(_, ids)| ids.iter().any(|&e| self.matched(mate, e)))
            .map(|(&e, _)| e)
            .collect();
        Factor::new(host, chosen)
    }

    /// Perfect matching that encodes an even factor with degrees in
    /// [b − 2·loops(v), b]. Used to check the reduction in the other direction.
    pub fn encode(&self, factor: &Factor) -> Result<Vec<(usize, usize)>> {
        if factor.vertex_count() != self.host_n {
            return Err(Error::params("factor and gadget have different host sizes"));
        }
        let mut pairs = Vec::new();
        let mut used = vec![false; self.node_count];
        for &(u, v) in factor.edges() {
            let ids = self.twins.get(&(u, v)).ok_or(Error::ForeignEdge { u, v })?;
            let (x, y) = self.edges[ids[0]];
            used[x] = true;
            used[y] = true;
            pairs.push((x, y));
        }
        for v in 0..self.host_n {
            let d = factor.degree(v);
            if d > self.b || (self.b - d) % 2 == 1 || (self.b - d) / 2 > self.loop_edges[v].len() {
                return Err(Error::params(format!(
                    "vertex {v}: factor degree {d} is not encodable with target {}",
                    self.b
                )));
            }
            for &e in &self.loop_edges[v][..(self.b - d) / 2] {
                let (x, y) = self.edges[e];
                used[x] = true;
                used[y] = true;
                pairs.push((x, y));
            }
            let spare = (self.edge_base[v]..self.core_base[v]).filter(|&x| !used[x]);
            let core = self.core_base[v]..self.core_base[v] + self.core_size[v];
            for (x, c) in spare.zip(core) {
                pairs.push((c, x));
            }
        }
        Ok(pairs)
    }

    /// True when `pairs` is a perfect matching made of gadget edges.
    pub fn is_perfect_matching(&self, pairs: &[(usize, usize)]) -> bool {
        let mut covered = vec![false; self.node_count];
        let edge_set: std::collections::HashSet<(usize, usize)> =
            self.edges.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        for &(x, y) in pairs {
            if !edge_set.contains(&(x.min(y), x.max(y))) || covered[x] || covered[y] {
                return false;
            }
            covered[x] = true;
            covered[y] = true;
        }
        covered.iter().all(|&c| c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn augmentation_counts() {
        let c4 = Graph::cycle(4).unwrap();
        let same = loop_augment(&c4, 2, 2).unwrap();
        assert_eq!(same.to_simple(), Some(c4.clone()));
        let mg = loop_augment(&c4, 2, 4).unwrap();
        assert_eq!(mg.degrees(), vec![4; 4]);
        assert!(loop_augment(&c4, 2, 3).is_err());
    }

    #[test]
    fn cycle_gadget_has_empty_cores() {
        let mg = loop_augment(&Graph::cycle(4).unwrap(), 2, 2).unwrap();
        let inst = tutte_gadget(&mg, 2).unwrap();
        assert_eq!(inst.node_count(), 8);
        assert_eq!(inst.edges().len(), 4);
        let m = inst.max_matching();
        assert!(m.is_perfect());
        assert_eq!(inst.decode(&m.mate, &Graph::cycle(4).unwrap()).unwrap().edges().len(), 4);
    }

    #[test]
    fn single_loop_gadget() {
        let mut mg = MultiGraph::new(1);
        mg.add_loops(0, 1);
        let inst = tutte_gadget(&mg, 2).unwrap();
        assert_eq!(inst.node_count(), 2);
        assert!(inst.max_matching().is_perfect());
    }

    #[test]
    fn k4_gadget_size() {
        let mg = loop_augment(&Graph::complete(4), 2, 4).unwrap();
        let inst = tutte_gadget(&mg, 4).unwrap();
        assert_eq!(inst.node_count(), 24);
    }

    #[test]
    fn deficient_vertex_is_named() {
        let mg = MultiGraph::from_graph(&Graph::path(3));
        assert_eq!(
            tutte_gadget(&mg, 2).unwrap_err(),
            Error::DeficientVertex { vertex: 0, degree: 1, needed: 2 }
        );
    }

    #[test]
    fn encode_round_trip_on_k5() {
        let k5 = Graph::complete(5);
        let mg = loop_augment(&k5, 2, 4).unwrap();
        let inst = tutte_gadget(&mg, 4).unwrap();
        let c5 = Factor::new(&k5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let pairs = inst.encode(&c5).unwrap();
        assert!(inst.is_perfect_matching(&pairs));
        let mut mate = vec![None; inst.node_count()];
        for &(x, y) in &pairs {
            mate[x] = Some(y);
            mate[y] = Some(x);
        }
        assert_eq!(inst.decode(&mate, &k5).unwrap(), c5);
    }
}
