//! Exhaustive edge-subset enumeration, the ground-truth oracle for factor
//! existence on small graphs.

use super::Factor;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest edge count enumerated exhaustively (2^24 subsets).
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 24;

/// Enumerates all spanning subgraphs in Gray-code order, updating degrees
/// one edge at a time, and returns the first whose degrees all lie in
/// [a, b] (and are even when `even` is set).
pub fn exhaustive_factor(g: &Graph, a: usize, b: usize, even: bool) -> Result<Option<Factor>> {
    let edges = g.edge_list();
    if edges.len() > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::Scale {
            what: "exhaustive factor enumeration",
            limit: BRUTE_FORCE_EDGE_LIMIT,
            actual: edges.len(),
        });
    }
    let ok = |d: usize| a <= d && d <= b && (!even || d % 2 == 0);
    let n = g.vertex_count();
    if (0..n).any(|v| g.degree(v) < a) {
        return Ok(None);
    }
    let mut degree = vec![0usize; n];
    let mut bad = (0..n).filter(|_| !ok(0)).count();
    let mut chosen = 0u32;
    let found = |chosen: u32| {
        let picked = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| chosen >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Factor::new(g, picked).map(Some)
    };
    if bad == 0 {
        return found(chosen);
    }
    for step in 1u32..1 << edges.len() {
        let i = step.trailing_zeros() as usize;
        let (u, v) = edges[i];
        let adding = chosen >> i & 1 == 0;
        chosen ^= 1 << i;
        for w in [u, v] {
            let before = ok(degree[w]);
            if adding {
                degree[w] += 1;
            } else {
                degree[w] -= 1;
            }
            match (before, ok(degree[w])) {
                (true, false) => bad += 1,
                (false, true) => bad -= 1,
                _ => {}
            }
        }
        if bad == 0 {
            return found(chosen);
        }
    }
    Ok(None)
}

/// Exhaustive search for an even [a,b]-factor; `None` means none exists.
pub fn brute_force_even_factor(g: &Graph, a: usize, b: usize) -> Result<Option<Factor>> {
    exhaustive_factor(g, a, b, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::verify_factor;

    #[test]
    fn cycle_is_its_own_two_factor() {
        let c5 = Graph::cycle(5).unwrap();
        let f = brute_force_even_factor(&c5, 2, 2).unwrap().unwrap();
        assert_eq!(f.edges().len(), 5);
    }

    #[test]
    fn k4_two_factor_is_a_four_cycle() {
        let k4 = Graph::complete(4);
        let f = brute_force_even_factor(&k4, 2, 2).unwrap().unwrap();
        assert_eq!(f.edges().len(), 4);
        assert!(verify_factor(&k4, &f, 2, 2, true).unwrap());
    }

    #[test]
    fn star_has_no_two_factor() {
        assert_eq!(brute_force_even_factor(&Graph::star(3), 2, 2), Ok(None));
    }

    #[test]
    fn edge_cap() {
        assert!(matches!(
            brute_force_even_factor(&Graph::complete(8), 2, 2),
            Err(Error::Scale { .. })
        ));
    }

    #[test]
    fn parity_free_variant() {
        // P3 has a [1,2]-factor but no even one
        let p = Graph::path(3);
        assert!(exhaustive_factor(&p, 1, 2, false).unwrap().is_some());
        assert!(exhaustive_factor(&p, 1, 2, true).unwrap().is_none());
    }
}
