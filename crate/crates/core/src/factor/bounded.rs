//! Parity-free [a,b]-factor search: exact lower-bounded flow for bipartite
//! hosts, budgeted branch-and-bound otherwise.

use super::Factor;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;

/// Decides an [a,b]-factor of a bipartite graph by a feasible flow with
/// lower bounds: source → left side with bounds [a, b], one unit per edge,
/// right side → sink with bounds [a, b].
pub fn bipartite_factor(g: &Graph, colour: &[u8], a: usize, b: usize) -> Result<Option<Factor>> {
    let n = g.vertex_count();
    let (s, t, super_s, super_t) = (n, n + 1, n + 2, n + 3);
    let mut net = FlowNetwork::new(n + 4);
    let mut excess = vec![0i64; n + 4];
    let (a, b) = (a as i64, b as i64);
    let mut lower_bounded = |net: &mut FlowNetwork, from: usize, to: usize| {
        net.add_arc(from, to, b - a);
        excess[to] += a;
        excess[from] -= a;
    };
    for v in 0..n {
        if colour[v] == 0 {
            lower_bounded(&mut net, s, v);
        } else {
            lower_bounded(&mut net, v, t);
        }
    }
    let mut edge_arcs = Vec::new();
    for (u, v) in g.edges() {
        let (left, right) = if colour[u] == 0 { (u, v) } else { (v, u) };
        edge_arcs.push(((u, v), net.add_arc(left, right, 1)));
    }
    net.add_arc(t, s, i64::MAX / 4);
    let mut demand = 0;
    for (v, &e) in excess.iter().enumerate() {
        if e > 0 {
            net.add_arc(super_s, v, e);
            demand += e;
        } else if e < 0 {
            net.add_arc(v, super_t, -e);
        }
    }
    if net.max_flow(super_s, super_t, demand) < demand {
        return Ok(None);
    }
    let chosen = edge_arcs
        .into_iter()
        .filter(|&(_, id)| net.flow_on(id) == 1)
        .map(|(e, _)| e)
        .collect();
    Factor::new(g, chosen).map(Some)
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    a: usize,
    b: usize,
    forward: Vec<Vec<usize>>,
    /// reach[u][v] = |N(u) ∩ {v+1, .., n−1}|
    reach: Vec<Vec<usize>>,
    degree: Vec<usize>,
    picked: Vec<(usize, usize)>,
    nodes: u64,
    budget: u64,
}

impl BranchAndBound<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExhausted { budget: self.budget })
        } else {
            Ok(())
        }
    }

    fn vertex(&mut self, v: usize) -> Result<bool> {
        if v == self.g.vertex_count() {
            return Ok(true);
        }
        self.choose(v, 0)
    }

    /// Decides the edges from `v` to later vertices, one at a time.
    fn choose(&mut self, v: usize, idx: usize) -> Result<bool> {
        self.tick()?;
        let remaining = self.forward[v].len() - idx;
        if self.degree[v] + remaining < self.a {
            return Ok(false);
        }
        if idx == self.forward[v].len() {
            let n = self.g.vertex_count();
            if (v + 1..n).any(|u| self.degree[u] + self.reach[u][v] < self.a) {
                return Ok(false);
            }
            return self.vertex(v + 1);
        }
        let w = self.forward[v][idx];
        if self.degree[v] < self.b && self.degree[w] < self.b {
            self.degree[v] += 1;
            self.degree[w] += 1;
            self.picked.push((v, w));
            if self.choose(v, idx + 1)? {
                return Ok(true);
            }
            self.picked.pop();
            self.degree[v] -= 1;
            self.degree[w] -= 1;
        }
        self.choose(v, idx + 1)
    }
}

/// Vertex-by-vertex branch-and-bound. Each vertex settles its edges to
/// higher ids; a branch dies as soon as some vertex can no longer reach
/// degree `a` or would exceed `b`. Exceeding `budget` search nodes is an
/// error, distinct from absence.
pub fn branch_and_bound_factor(g: &Graph, a: usize, b: usize, budget: u64) -> Result<Option<Factor>> {
    let n = g.vertex_count();
    let forward: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| w > v).collect())
        .collect();
    let reach = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| g.neighbors(u).iter().filter(|&&w| w > v).count())
                .collect()
        })
        .collect();
    let mut search = BranchAndBound {
        g,
        a,
        b,
        forward,
        reach,
        degree: vec![0; n],
        picked: Vec::new(),
        nodes: 0,
        budget,
    };
    if search.vertex(0)? {
        let picked = std::mem::take(&mut search.picked);
        Factor::new(g, picked).map(Some)
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::brute::exhaustive_factor;

    fn kxy(x: usize, y: usize) -> Graph {
        let edges: Vec<_> = (0..x).flat_map(|i| (x..x + y).map(move |j| (i, j))).collect();
        Graph::from_edges(x + y, &edges).unwrap()
    }

    #[test]
    fn flow_on_complete_bipartite() {
        let g = kxy(3, 3);
        let colour = g.bipartition().unwrap();
        assert!(bipartite_factor(&g, &colour, 2, 4).unwrap().is_some());
        let g = kxy(2, 6);
        let colour = g.bipartition().unwrap();
        assert!(bipartite_factor(&g, &colour, 2, 2).unwrap().is_none());
    }

    #[test]
    fn branch_and_bound_agrees_with_enumeration() {
        let graphs = [
            Graph::petersen(),
            Graph::complete(5),
            Graph::star(4),
            Graph::cycle(7).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap(),
        ];
        for g in &graphs {
            for (a, b) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)] {
                let bb = branch_and_bound_factor(g, a, b, 1_000_000).unwrap();
                let ex = exhaustive_factor(g, a, b, false).unwrap();
                assert_eq!(bb.is_some(), ex.is_some(), "{g:?} a={a} b={b}");
            }
        }
    }

    #[test]
    fn budget_is_reported() {
        let err = branch_and_bound_factor(&Graph::complete(9), 7, 7, 5).unwrap_err();
        assert_eq!(err, Error::BudgetExhausted { budget: 5 });
    }
}
