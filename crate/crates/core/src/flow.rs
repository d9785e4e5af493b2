//! Augmenting-path maximum flow (Dinic's blocking flows) over integer capacities.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

/// A flow network. Arcs are stored in pairs so `id ^ 1` is the reverse arc.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    initial: Vec<i64>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            initial: Vec::new(),
        }
    }

    /// Adds a directed arc and returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.initial.push(cap);
        self.initial.push(0);
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Adds an undirected edge: capacity `cap` in both directions.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) {
        let id = self.arcs.len();
        self.arcs.push(Arc { to: v, cap });
        self.arcs.push(Arc { to: u, cap });
        self.initial.push(cap);
        self.initial.push(cap);
        self.out[u].push(id);
        self.out[v].push(id + 1);
    }

    /// Flow currently carried by arc `id`.
    pub fn flow_on(&self, id: usize) -> i64 {
        self.initial[id] - self.arcs[id].cap
    }

    #[cfg(test)]
    pub fn reset(&mut self) {
        for (arc, &cap) in self.arcs.iter_mut().zip(&self.initial) {
            arc.cap = cap;
        }
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.out.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &id in &self.out[v] {
                let arc = &self.arcs[id];
                if arc.cap > 0 && level[arc.to] == u32::MAX {
                    level[arc.to] = level[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        (level[t] != u32::MAX).then_some(level)
    }

    fn push(&mut self, v: usize, t: usize, limit: i64, level: &[u32], next: &mut [usize]) -> i64 {
        if v == t {
            return limit;
        }
        while next[v] < self.out[v].len() {
            let id = self.out[v][next[v]];
            let (to, cap) = (self.arcs[id].to, self.arcs[id].cap);
            if cap > 0 && level[to] == level[v] + 1 {
                let pushed = self.push(to, t, limit.min(cap), level, next);
                if pushed > 0 {
                    self.arcs[id].cap -= pushed;
                    self.arcs[id ^ 1].cap += pushed;
                    return pushed;
                }
            }
            next[v] += 1;
        }
        0
    }

    /// Maximum s-t flow, stopping early once `cutoff` units have been routed.
    pub fn max_flow(&mut self, s: usize, t: usize, cutoff: i64) -> i64 {
        let mut total = 0;
        while total < cutoff {
            let Some(level) = self.levels(s, t) else { break };
            let mut next = vec![0; self.out.len()];
            loop {
                let pushed = self.push(s, t, cutoff - total, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
                if total >= cutoff {
                    break;
                }
            }
        }
        total
    }
}
