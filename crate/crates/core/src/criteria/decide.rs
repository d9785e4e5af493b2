//! Exhaustive maximisation of the even-factor deficiency over disjoint (S, T).
//!
//! Vertices are assigned to S, T or neither in id order. A node of the search
//! is pruned when an optimistic bound on every completion cannot reach the
//! current target. Exploration is single-threaded so the reported witness is
//! deterministic.

use serde::Serialize;

use super::{check_even_range, CriterionWitness};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count accepted by [`criterion_decide`].
pub const CRITERION_LIMIT: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    /// True iff the deficiency is ≤ 0 for every disjoint pair.
    pub holds: bool,
    /// Maximum deficiency over all pairs (0 is always attained by S = T = ∅).
    pub max_value: i64,
    /// Lexicographically smallest maximiser by (|S|, |T|, S, T), present when
    /// the criterion fails.
    pub witness: Option<CriterionWitness>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    S,
    T,
    Neither,
}

struct Search {
    n: usize,
    a: i64,
    b: i64,
    adj: Vec<u32>,
    deg: Vec<i64>,
    /// vertices with larger id than v
    later: Vec<u32>,
}

#[derive(Clone, Copy)]
struct State {
    s: u32,
    t: u32,
    neither: u32,
    /// −b|S| + |[S,T]| + Σ_{v∈T}(a − d(v)) over decided vertices
    partial: i64,
}

type Key = (usize, usize, Vec<usize>, Vec<usize>);

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

impl Search {
    fn new(g: &Graph, a: usize, b: usize) -> Self {
        let n = g.vertex_count();
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        Search {
            n,
            a: a as i64,
            b: b as i64,
            adj,
            deg: (0..n).map(|v| g.degree(v) as i64).collect(),
            later: (0..n).map(|v| full & !((2u32 << v) - 1)).collect(),
        }
    }

    /// Components of the subgraph induced by `mask`, as masks.
    fn components(&self, mut mask: u32) -> Vec<u32> {
        let mut out = Vec::new();
        while mask != 0 {
            let root = mask.trailing_zeros();
            let mut comp = 1u32 << root;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            mask &= !comp;
            out.push(comp);
        }
        out
    }

    fn cut(&self, comp: u32, other: u32) -> u32 {
        members(comp).into_iter().map(|v| (self.adj[v] & other).count_ones()).sum()
    }

    fn value(&self, st: &State) -> i64 {
        let q = self
            .components(st.neither)
            .into_iter()
            .filter(|&c| self.cut(c, st.t) % 2 == 1)
            .count() as i64;
        q + st.partial
    }

    /// Upper bound on the value of any completion once vertices `0..next`
    /// are decided.
    fn bound(&self, st: &State, next: usize) -> i64 {
        let undecided = if next >= self.n { 0 } else { (u32::MAX << next) & ((1u64 << self.n) - 1) as u32 };
        let mut total = st.partial;
        for comp in self.components(st.neither) {
            let touches_undecided = members(comp).iter().any(|&v| self.adj[v] & undecided != 0);
            if touches_undecided || self.cut(comp, st.t) % 2 == 1 {
                total += 1;
            }
        }
        for u in next..self.n {
            let ahead = (self.adj[u] & self.later[u]).count_ones() as i64;
            let as_s = -self.b + (self.adj[u] & st.t).count_ones() as i64 + ahead;
            let as_t = self.a - self.deg[u] + (self.adj[u] & st.s).count_ones() as i64 + ahead;
            total += as_s.max(as_t).max(1);
        }
        total
    }

    fn assign(&self, st: &State, v: usize, role: Role) -> State {
        let bit = 1u32 << v;
        let mut next = *st;
        match role {
            Role::S => {
                next.s |= bit;
                next.partial += -self.b + (self.adj[v] & st.t).count_ones() as i64;
            }
            Role::T => {
                next.t |= bit;
                next.partial += self.a - self.deg[v] + (self.adj[v] & st.s).count_ones() as i64;
            }
            Role::Neither => next.neither |= bit,
        }
        next
    }

    /// Largest value reachable below `st`, pruning subtrees whose bound does
    /// not exceed `best`.
    fn maximise(&self, st: State, v: usize, best: &mut i64) {
        if v == self.n {
            *best = (*best).max(self.value(&st));
            return;
        }
        if self.bound(&st, v) <= *best {
            return;
        }
        for role in [Role::Neither, Role::T, Role::S] {
            self.maximise(self.assign(&st, v, role), v + 1, best);
        }
    }

    /// Lexicographically smallest key among pairs attaining `target`.
    fn smallest_maximiser(&self, st: State, v: usize, target: i64, found: &mut Option<Key>) {
        if v == self.n {
            if self.value(&st) == target {
                let key = (
                    st.s.count_ones() as usize,
                    st.t.count_ones() as usize,
                    members(st.s),
                    members(st.t),
                );
                if found.as_ref().is_none_or(|k| key < *k) {
                    *found = Some(key);
                }
            }
            return;
        }
        if self.bound(&st, v) < target {
            return;
        }
        for role in [Role::Neither, Role::T, Role::S] {
            self.smallest_maximiser(self.assign(&st, v, role), v + 1, target, found);
        }
    }
}

/// Decides whether q(S,T) − b|S| + a|T| − Σ_{v∈T} d_{G−S}(v) ≤ 0 for every
/// disjoint pair (S, T), which guarantees an even [a,b]-factor.
///
/// `max_n` caps the vertex count (itself at most [`CRITERION_LIMIT`]); larger
/// graphs are rejected with [`Error::Scale`] rather than sampled.
pub fn criterion_decide(g: &Graph, a: usize, b: usize, max_n: usize) -> Result<CriterionOutcome> {
    check_even_range(a, b)?;
    if max_n > CRITERION_LIMIT {
        return Err(Error::params(format!(
            "max_n = {max_n} exceeds the hard limit {CRITERION_LIMIT}"
        )));
    }
    if g.vertex_count() > max_n {
        return Err(Error::Scale {
            what: "exhaustive criterion enumeration",
            limit: max_n,
            actual: g.vertex_count(),
        });
    }
    let search = Search::new(g, a, b);
    let root = State {
        s: 0,
        t: 0,
        neither: 0,
        partial: 0,
    };
    let mut best = 0;
    search.maximise(root, 0, &mut best);
    if best <= 0 {
        return Ok(CriterionOutcome {
            holds: true,
            max_value: best,
            witness: None,
        });
    }
    let mut found = None;
    search.smallest_maximiser(root, 0, best, &mut found);
    let (_, _, s, t) = found.expect("a maximiser exists");
    Ok(CriterionOutcome {
        holds: false,
        max_value: best,
        witness: Some(CriterionWitness {
            s: VertexSet::from_iter_unchecked(s),
            t: VertexSet::from_iter_unchecked(t),
            value: best,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::even_factor_deficiency;

    fn brute_max(g: &Graph, a: usize, b: usize) -> (i64, Key) {
        let n = g.vertex_count();
        let mut best = (0, (0, 0, vec![], vec![]));
        for code in 0..3usize.pow(n as u32) {
            let (mut s, mut t, mut c) = (vec![], vec![], code);
            for v in 0..n {
                match c % 3 {
                    1 => t.push(v),
                    2 => s.push(v),
                    _ => {}
                }
                c /= 3;
            }
            let value = even_factor_deficiency(
                g,
                a,
                b,
                &VertexSet::from_iter_unchecked(s.clone()),
                &VertexSet::from_iter_unchecked(t.clone()),
            )
            .unwrap();
            let key = (s.len(), t.len(), s, t);
            if value > best.0 || (value == best.0 && key < best.1) {
                best = (value, key);
            }
        }
        best
    }

    #[test]
    fn star_fails_with_centre_witness() {
        let out = criterion_decide(&Graph::star(3), 2, 2, 18).unwrap();
        assert!(!out.holds);
        let w = out.witness.unwrap();
        assert_eq!(w.value, out.max_value);
        // the brute-force maximiser agrees with the pruned search
        let (value, key) = brute_max(&Graph::star(3), 2, 2);
        assert_eq!(value, w.value);
        assert_eq!((key.2, key.3), (w.s.as_slice().to_vec(), w.t.as_slice().to_vec()));
    }

    #[test]
    fn regular_graphs_hold() {
        assert!(criterion_decide(&Graph::complete(5), 4, 4, 18).unwrap().holds);
        assert!(criterion_decide(&Graph::cycle(6).unwrap(), 2, 2, 18).unwrap().holds);
        let out = criterion_decide(&Graph::petersen(), 2, 2, 18).unwrap();
        assert!(out.holds && out.witness.is_none());
    }

    #[test]
    fn pruned_search_matches_enumeration() {
        let graphs = [
            Graph::path(5),
            Graph::petersen(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap(),
            Graph::complete(6),
            Graph::empty(4),
        ];
        for g in graphs.iter().filter(|g| g.vertex_count() <= 7) {
            for (a, b) in [(2, 2), (2, 4), (4, 4)] {
                let out = criterion_decide(g, a, b, 18).unwrap();
                let (value, key) = brute_max(g, a, b);
                assert_eq!(out.max_value, value, "{g:?} a={a} b={b}");
                if let Some(w) = out.witness {
                    assert_eq!((w.s.as_slice().to_vec(), w.t.as_slice().to_vec()), (key.2, key.3));
                }
            }
        }
    }

    #[test]
    fn scale_limit_is_explicit() {
        let g = Graph::complete(19);
        assert!(matches!(criterion_decide(&g, 2, 2, 18), Err(Error::Scale { .. })));
        assert!(matches!(criterion_decide(&Graph::complete(6), 2, 2, 5), Err(Error::Scale { .. })));
        assert!(matches!(criterion_decide(&Graph::complete(6), 2, 2, 40), Err(Error::InvalidParameters(_))));
    }
}
