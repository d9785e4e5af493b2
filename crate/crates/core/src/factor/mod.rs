//! Construction and verification of (even) [a,b]-factors.

mod bounded;
mod brute;
mod gadget;
mod matching;

pub use bounded::{bipartite_factor, branch_and_bound_factor};
pub use brute::{brute_force_even_factor, exhaustive_factor, BRUTE_FORCE_EDGE_LIMIT};
pub use gadget::{loop_augment, tutte_gadget, EdgeRole, GadgetMatching, MatchingInstance};
pub use matching::{matching_size, maximum_matching};

use serde::{Deserialize, Serialize};

use crate::criteria::check_even_range;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A spanning subgraph of a host graph: chosen edges plus induced degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Factor {
    /// Normalises and checks `edges` against the host. Every edge must belong
    /// to `host`.
    pub fn new(host: &Graph, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut degrees = vec![0; host.vertex_count()];
        for &(u, v) in &edges {
            if !host.has_edge(u, v) {
                return Err(Error::ForeignEdge { u, v });
            }
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Factor {
            n: host.vertex_count(),
            edges,
            degrees,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Chosen edges, `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn as_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("factor edges are host edges")
    }
}

/// True iff every vertex has factor degree in [a, b] (and even, when
/// `require_even`). Degrees are recomputed from the edge list.
pub fn verify_factor(g: &Graph, factor: &Factor, a: usize, b: usize, require_even: bool) -> Result<bool> {
    if factor.n != g.vertex_count() {
        return Err(Error::params(format!(
            "factor spans {} vertices, host has {}",
            factor.n,
            g.vertex_count()
        )));
    }
    let mut degree = vec![0usize; g.vertex_count()];
    for &(u, v) in &factor.edges {
        if !g.has_edge(u, v) {
            return Err(Error::ForeignEdge { u, v });
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    Ok(degree
        .iter()
        .all(|&d| a <= d && d <= b && (!require_even || d % 2 == 0)))
}

/// Why no factor was returned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Absence {
    /// δ(G) < a
    MinDegree { vertex: usize, degree: usize, needed: usize },
    /// The gadget has no perfect matching.
    NoPerfectMatching { matched: usize, nodes: usize },
    /// The lower-bounded flow is infeasible.
    InfeasibleFlow,
    /// The complete search space was explored.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorSearch {
    Found(Factor),
    Absent(Absence),
}

impl FactorSearch {
    pub fn factor(&self) -> Option<&Factor> {
        match self {
            FactorSearch::Found(f) => Some(f),
            FactorSearch::Absent(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, FactorSearch::Found(_))
    }
}

fn min_degree_gap(g: &Graph, a: usize) -> Option<Absence> {
    (0..g.vertex_count())
        .find(|&v| g.degree(v) < a)
        .map(|v| Absence::MinDegree {
            vertex: v,
            degree: g.degree(v),
            needed: a,
        })
}

fn checked(g: &Graph, factor: Factor, a: usize, b: usize, even: bool) -> Result<FactorSearch> {
    if verify_factor(g, &factor, a, b, even)? {
        Ok(FactorSearch::Found(factor))
    } else {
        unreachable!("search returned an invalid factor {factor:?} for a={a} b={b}")
    }
}

/// Finds an even [a,b]-factor through loop augmentation, the b-factor gadget
/// and maximum matching. Absence is exact.
pub fn find_even_factor(g: &Graph, a: usize, b: usize) -> Result<FactorSearch> {
    check_even_range(a, b)?;
    if let Some(gap) = min_degree_gap(g, a) {
        return Ok(FactorSearch::Absent(gap));
    }
    let instance = tutte_gadget(&loop_augment(g, a, b)?, b)?;
    let matching = instance.max_matching();
    if !matching.is_perfect() {
        return Ok(FactorSearch::Absent(Absence::NoPerfectMatching {
            matched: matching.size,
            nodes: instance.node_count(),
        }));
    }
    let factor = instance.decode(&matching.mate, g)?;
    checked(g, factor, a, b, true)
}

/// Search strategy for parity-free [a,b]-factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Regime {
    /// Flow for bipartite hosts, branch-and-bound otherwise.
    #[default]
    Auto,
    /// Edge-subset enumeration, at most [`BRUTE_FORCE_EDGE_LIMIT`] edges.
    Exhaustive,
    /// Lower-bounded flow; the host must be bipartite.
    BipartiteFlow,
    BranchAndBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbSearch {
    pub regime: Regime,
    /// Node budget for branch-and-bound.
    pub budget: u64,
}

impl Default for AbSearch {
    fn default() -> Self {
        AbSearch {
            regime: Regime::Auto,
            budget: 10_000_000,
        }
    }
}

/// Finds a spanning subgraph with a ≤ d_H(v) ≤ b (no parity constraint).
/// Budget exhaustion is returned as [`Error::BudgetExhausted`], never as
/// absence.
pub fn find_ab_factor(g: &Graph, a: usize, b: usize, options: AbSearch) -> Result<FactorSearch> {
    if a > b {
        return Err(Error::params(format!("a = {a} exceeds b = {b}")));
    }
    if let Some(gap) = min_degree_gap(g, a) {
        return Ok(FactorSearch::Absent(gap));
    }
    let colour = g.bipartition();
    let regime = match (options.regime, &colour) {
        (Regime::Auto, Some(_)) => Regime::BipartiteFlow,
        (Regime::Auto, None) => Regime::BranchAndBound,
        (r, _) => r,
    };
    let (found, absence) = match regime {
        Regime::BipartiteFlow => {
            let colour = colour.ok_or_else(|| Error::params("bipartite flow needs a bipartite host"))?;
            (bipartite_factor(g, &colour, a, b)?, Absence::InfeasibleFlow)
        }
        Regime::Exhaustive => (exhaustive_factor(g, a, b, false)?, Absence::Exhausted),
        Regime::BranchAndBound | Regime::Auto => {
            (branch_and_bound_factor(g, a, b, options.budget)?, Absence::Exhausted)
        }
    };
    match found {
        Some(f) => checked(g, f, a, b, false),
        None => Ok(FactorSearch::Absent(absence)),
    }
}
