//! Exact vertex- and edge-connectivity via unit-capacity max-flow.

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;

fn require_two(g: &Graph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            actual: g.vertex_count(),
        });
    }
    Ok(())
}

/// Number of edge-disjoint s-t paths, capped at `cutoff`.
pub fn local_edge_connectivity(g: &Graph, s: usize, t: usize, cutoff: usize) -> usize {
    let mut net = FlowNetwork::new(g.vertex_count());
    for (u, v) in g.edges() {
        net.add_edge(u, v, 1);
    }
    net.max_flow(s, t, cutoff as i64) as usize
}

/// Number of internally vertex-disjoint s-t paths for non-adjacent s, t,
/// capped at `cutoff`. Each vertex v is split into v_in = 2v and v_out = 2v+1.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, cutoff: usize) -> usize {
    let n = g.vertex_count();
    let mut net = FlowNetwork::new(2 * n);
    let big = n as i64;
    for v in 0..n {
        let cap = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, cutoff as i64) as usize
}

/// κ′(G): the minimum number of edges whose removal disconnects G.
///
/// Vertex 0 lies on one side of every cut, so the minimum over t of the
/// 0-t max-flow is the global minimum cut.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    require_two(g)?;
    let mut best = (0..g.vertex_count()).map(|v| g.degree(v)).min().unwrap_or(0);
    for t in 1..g.vertex_count() {
        if best == 0 {
            break;
        }
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    Ok(best)
}

/// κ(G): `n − 1` for complete graphs, otherwise the minimum vertex cut over
/// non-adjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    require_two(g)?;
    let n = g.vertex_count();
    if g.is_complete() {
        return Ok(n - 1);
    }
    let mut best = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    for s in 0..n {
        for t in s + 1..n {
            if best == 0 {
                return Ok(0);
            }
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(edge_connectivity(&Graph::complete(4)), Ok(3));
        assert_eq!(vertex_connectivity(&Graph::complete(5)), Ok(4));
    }

    #[test]
    fn paths_and_stars() {
        assert_eq!(edge_connectivity(&Graph::path(3)), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::star(3)), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::cycle(7).unwrap()), Ok(2));
        assert_eq!(edge_connectivity(&Graph::petersen()), Ok(3));
        assert_eq!(vertex_connectivity(&Graph::petersen()), Ok(3));
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&g), Ok(0));
        assert_eq!(vertex_connectivity(&g), Ok(0));
    }

    #[test]
    fn needs_two_vertices() {
        assert!(matches!(
            edge_connectivity(&Graph::empty(1)),
            Err(Error::TooFewVertices { .. })
        ));
        assert!(vertex_connectivity(&Graph::empty(0)).is_err());
    }

    #[test]
    fn bowtie_has_cut_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(vertex_connectivity(&g), Ok(1));
        assert_eq!(edge_connectivity(&g), Ok(2));
    }
}
