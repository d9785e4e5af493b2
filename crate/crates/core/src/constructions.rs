//! Deterministic generators for the extremal graph families.
//!
//! Vertex layouts are fixed so callers can address named vertices directly:
//!
//! * `example1(a, b, t)`: cliques H₁ = `0..t` (x₁ⱼ = j − 1) and
//!   H₂ = `t..2t` (x₂ⱼ = t + j − 1), then y = 2t and z = 2t + 1.
//! * `example2(a, b, t)`: independent y₁..y_{a−1} = `0..a−1`, then cliques
//!   L₁..L_a of size a + 2, then the clique L_{a+1} of size t.
//! * `h_na(n, a)`: vertex 0 is joined to `1..a`; `1..n` is a clique.
//! * `complete_bipartite(x, y)`: parts `0..x` and `x..x+y`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, Rational};

/// Parameters of one named family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Construction {
    Example1 { a: usize, b: usize, t: usize },
    Example2 { a: usize, b: usize, t: usize },
    Hna { n: usize, a: usize },
    CompleteBipartite { x: usize, y: usize },
}

impl Construction {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Construction::Example1 { a, b, t } => example1(a, b, t),
            Construction::Example2 { a, b, t } => example2(a, b, t),
            Construction::Hna { n, a } => h_na(n, a),
            Construction::CompleteBipartite { x, y } => complete_bipartite(x, y),
        }
    }
}

fn finish(problems: Vec<String>) -> Result<()> {
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParameters(problems))
    }
}

fn show(r: Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Smallest admissible t for the edge-connectivity family:
/// ((a+b)² − 3a − 4b)/(2b).
pub fn example1_t_bound(a: usize, b: usize) -> Rational {
    let (a, b) = (a as i64, b as i64);
    Rational::new((a + b) * (a + b) - 3 * a - 4 * b, 2 * b)
}

pub fn example1_constraints(a: usize, b: usize, t: usize) -> Result<()> {
    let mut problems = Vec::new();
    if a % 2 == 1 || b % 2 == 1 {
        problems.push(format!("a = {a} and b = {b} must both be even"));
    }
    if 3 * a < 12 {
        problems.push(format!("12 <= 3a fails: 3a = {}", 3 * a));
    }
    if 3 * a > b {
        problems.push(format!("3a <= b fails: 3a = {} > b = {b}", 3 * a));
    }
    if b > 0 {
        let bound = example1_t_bound(a, b);
        if int(t as i64) < bound {
            problems.push(format!(
                "t >= ((a+b)^2 - 3a - 4b)/(2b) fails: t = {t} < {}",
                show(bound)
            ));
        }
    }
    finish(problems)
}

/// Named vertices of `example1(a, b, t)`.
#[derive(Debug, Clone, Copy)]
pub struct Example1Layout {
    pub t: usize,
}

impl Example1Layout {
    /// x_{ij}, i ∈ {1, 2}, j ∈ 1..=t.
    pub fn x(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.t + j - 1
    }
    pub fn y(&self) -> usize {
        2 * self.t
    }
    pub fn z(&self) -> usize {
        2 * self.t + 1
    }
    pub fn clique(&self, i: usize) -> std::ops::Range<usize> {
        (i - 1) * self.t..i * self.t
    }
}

/// Two t-cliques H₁, H₂ and an edge yz; y is joined to x₁₁..x₁(a/2−1) and
/// x₂(a/2)..x₂(a−1), z symmetrically to x₂₁..x₂(a/2−1) and
/// x₁(a/2)..x₁(a−1). Edge-connectivity a − 1, no even [a,b]-factor.
pub fn example1(a: usize, b: usize, t: usize) -> Result<Graph> {
    example1_constraints(a, b, t)?;
    let layout = Example1Layout { t };
    let mut g = Graph::empty(2 * t + 2);
    for i in 1..=2 {
        let clique = layout.clique(i);
        for u in clique.clone() {
            for v in u + 1..clique.end {
                g.insert(u, v);
            }
        }
    }
    let (y, z) = (layout.y(), layout.z());
    g.insert(y, z);
    for j in 1..a / 2 {
        g.insert(y, layout.x(1, j));
        g.insert(z, layout.x(2, j));
    }
    for j in a / 2..a {
        g.insert(y, layout.x(2, j));
        g.insert(z, layout.x(1, j));
    }
    Ok(g)
}

/// Inclusive interval for t in the vertex-connectivity family:
/// [−a² − a + b + (a² − 3a)/b − 1, −a² − 2a + b + b/a + 2].
pub fn example2_t_interval(a: usize, b: usize) -> (Rational, Rational) {
    let (a, b) = (a as i64, b as i64);
    let lo = int(-a * a - a + b - 1) + Rational::new(a * a - 3 * a, b);
    let hi = int(-a * a - 2 * a + b + 2) + Rational::new(b, a);
    (lo, hi)
}

/// b ≥ (a² − 3a + a√((a−3)(a+1)))/2, decided in integers.
pub fn example2_b_admissible(a: usize, b: usize) -> bool {
    let (a, b) = (a as i128, b as i128);
    let lhs = 2 * b - a * a + 3 * a;
    let radicand = (a - 3) * (a + 1);
    radicand >= 0 && lhs >= 0 && lhs * lhs >= a * a * radicand
}

pub fn example2_constraints(a: usize, b: usize, t: usize) -> Result<()> {
    let mut problems = Vec::new();
    if a % 2 == 1 || b % 2 == 1 {
        problems.push(format!("a = {a} and b = {b} must both be even"));
    }
    if a < 4 || b < 4 {
        problems.push(format!("a = {a} and b = {b} must both be at least 4"));
    }
    if a >= 3 && !example2_b_admissible(a, b) {
        let approx = (a * a) as f64 - 3.0 * a as f64 + a as f64 * (((a - 3) * (a + 1)) as f64).sqrt();
        problems.push(format!(
            "b >= (a^2 - 3a + a*sqrt((a-3)(a+1)))/2 fails: b = {b} < {:.4}",
            approx / 2.0
        ));
    }
    if a > 0 && b > 0 {
        let (lo, hi) = example2_t_interval(a, b);
        let t_q = int(t as i64);
        if lo > hi {
            problems.push(format!(
                "the t-interval [{}, {}] is empty for a = {a}, b = {b}",
                show(lo),
                show(hi)
            ));
        } else if t_q < lo || t_q > hi {
            problems.push(format!("t = {t} outside [{}, {}]", show(lo), show(hi)));
        }
        if hi < int(a as i64 + 2) {
            problems.push(format!(
                "no t satisfies both t >= a + 2 = {} and t <= {}",
                a + 2,
                show(hi)
            ));
        }
    }
    if t < a + 2 {
        problems.push(format!("t >= a + 2 fails: t = {t} < {}", a + 2));
    }
    finish(problems)
}

/// Named vertices of `example2(a, b, t)`.
#[derive(Debug, Clone, Copy)]
pub struct Example2Layout {
    pub a: usize,
    pub t: usize,
}

impl Example2Layout {
    /// y_j, j ∈ 1..a.
    pub fn y(&self, j: usize) -> usize {
        j - 1
    }
    /// x_{ij}, i ∈ 1..=a+1.
    pub fn x(&self, i: usize, j: usize) -> usize {
        self.clique(i).start + j - 1
    }
    pub fn clique(&self, i: usize) -> std::ops::Range<usize> {
        let start = self.a - 1 + (i - 1) * (self.a + 2);
        let len = if i <= self.a { self.a + 2 } else { self.t };
        start..start + len
    }
    pub fn vertex_count(&self) -> usize {
        self.a - 1 + self.a * (self.a + 2) + self.t
    }
}

/// Independent vertices y₁..y_{a−1}, cliques L₁..L_a on a + 2 vertices and
/// L_{a+1} on t vertices, with y_j joined to x_{ij} for every i ≤ a + 1.
/// Vertex-connectivity a − 1, no even [a,b]-factor.
pub fn example2(a: usize, b: usize, t: usize) -> Result<Graph> {
    example2_constraints(a, b, t)?;
    let layout = Example2Layout { a, t };
    let mut g = Graph::empty(layout.vertex_count());
    for i in 1..=a + 1 {
        let clique = layout.clique(i);
        for u in clique.clone() {
            for v in u + 1..clique.end {
                g.insert(u, v);
            }
        }
        for j in 1..a {
            g.insert(layout.y(j), layout.x(i, j));
        }
    }
    Ok(g)
}

/// H_{n,a}: K_{n−1} on `1..n` plus vertex 0 joined to `1..a`.
pub fn h_na(n: usize, a: usize) -> Result<Graph> {
    let mut problems = Vec::new();
    if a < 1 {
        problems.push("a >= 1 fails".to_string());
    }
    if n < a + 1 {
        problems.push(format!("n >= a + 1 fails: n = {n}, a = {a}"));
    }
    finish(problems)?;
    let mut g = Graph::empty(n);
    for u in 1..n {
        for v in u + 1..n {
            g.insert(u, v);
        }
    }
    for v in 1..a {
        g.insert(0, v);
    }
    Ok(g)
}

pub fn complete_bipartite(x: usize, y: usize) -> Result<Graph> {
    if x == 0 || y == 0 {
        return Err(Error::params(format!("part sizes must be positive, got {x} and {y}")));
    }
    let mut g = Graph::empty(x + y);
    for u in 0..x {
        for v in x..x + y {
            g.insert(u, v);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn example1_size() {
        let g = example1(4, 12, 9).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (20, 79));
        let l = Example1Layout { t: 9 };
        assert_eq!((g.degree(l.y()), g.degree(l.z())), (4, 4));
    }

    #[test]
    fn example1_rejections() {
        assert_eq!(example1_t_bound(4, 12), frac(49, 6));
        let err = example1(4, 12, 8).unwrap_err();
        assert!(err.to_string().contains("49/6"), "{err}");
        assert!(example1(4, 10, 20).unwrap_err().to_string().contains("3a <= b"));
        match example1(3, 7, 1) {
            Err(Error::InvalidParameters(p)) => assert_eq!(p.len(), 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn example2_size_and_interval() {
        let g = example2(4, 24, 6).unwrap();
        assert_eq!(g.vertex_count(), 33);
        let (lo, hi) = example2_t_interval(4, 24);
        assert_eq!((lo, hi), (frac(19, 6), int(8)));
        assert!(example2(4, 24, 9).unwrap_err().to_string().contains("outside [19/6, 8]"));
        assert!(example2(4, 24, 5).unwrap_err().to_string().contains("t >= a + 2"));
    }

    #[test]
    fn example2_b_threshold() {
        // (16 − 12 + 4√5)/2 ≈ 6.47
        assert!(!example2_b_admissible(4, 6));
        assert!(example2_b_admissible(4, 8));
        let err = example2(4, 6, 6).unwrap_err().to_string();
        assert!(err.contains("6.4721"), "{err}");
    }

    #[test]
    fn example2_small_b_has_empty_region() {
        // a = 4, b = 8: the interval is [-25/2, -12]
        let (lo, hi) = example2_t_interval(4, 8);
        assert_eq!((lo, hi), (frac(-25, 2), int(-12)));
        let err = example2(4, 8, 6).unwrap_err().to_string();
        assert!(err.contains("no t satisfies"), "{err}");
    }

    #[test]
    fn h_na_degrees() {
        let g = h_na(6, 4).unwrap();
        let mut degrees: Vec<_> = (0..6).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![3, 4, 4, 5, 5, 5]);
        let g = h_na(5, 2).unwrap();
        assert_eq!(g.degree(0), 1);
        assert!(h_na(3, 3).is_err());
    }

    #[test]
    fn bipartite_family() {
        assert_eq!(complete_bipartite(3, 3).unwrap().edge_count(), 9);
        assert_eq!(complete_bipartite(1, 3).unwrap(), Graph::star(3));
        assert!(complete_bipartite(0, 3).is_err());
    }
}
