//! Deficiency criteria from (g,f)-factor theory, specialised to even
//! [a,b]-factors, plus the hypothesis checkers for the sufficient conditions.

mod conditions;
mod decide;

pub use conditions::{
    conjecture_conditions, main_theorem_conditions, order_bound, ConditionCheck, ConditionReport,
    Statement,
};
pub use decide::{criterion_decide, CriterionOutcome, CRITERION_LIMIT};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{check_disjoint, components_after_deletion, Graph, VertexSet};
use crate::rational::{int, Rational};

/// A disjoint pair (S, T) together with the deficiency it produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionWitness {
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "T")]
    pub t: VertexSet,
    pub value: i64,
}

/// Validates `2 ≤ a ≤ b` with both even.
pub fn check_even_range(a: usize, b: usize) -> Result<()> {
    let mut problems = Vec::new();
    if a < 2 {
        problems.push(format!("a = {a} must be at least 2"));
    }
    if a > b {
        problems.push(format!("a = {a} exceeds b = {b}"));
    }
    if a % 2 == 1 {
        problems.push(format!("a = {a} must be even"));
    }
    if b % 2 == 1 {
        problems.push(format!("b = {b} must be even"));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParameters(problems))
    }
}

fn check_pair(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<()> {
    s.check_in(g)?;
    t.check_in(g)?;
    check_disjoint(s, t)
}

/// q(S,T): components Q of G − (S ∪ T) with |[Q,T]| odd.
pub fn odd_cut_q(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<usize> {
    check_pair(g, s, t)?;
    Ok(odd_cut_q_unchecked(g, s, t))
}

fn odd_cut_q_unchecked(g: &Graph, s: &VertexSet, t: &VertexSet) -> usize {
    let removed: VertexSet = s.iter().chain(t.iter()).collect();
    let in_t = t.membership(g.vertex_count());
    components_after_deletion(g, &removed)
        .expect("S and T were range-checked")
        .iter()
        .filter(|q| {
            let cut: usize = q.iter().map(|v| g.neighbors(v).iter().filter(|&&w| in_t[w]).count()).sum();
            cut % 2 == 1
        })
        .count()
}

/// q(S,T) − b|S| + a|T| − Σ_{v∈T} d_{G−S}(v), with no restriction on a, b.
fn deficiency_expression(g: &Graph, a: usize, b: usize, s: &VertexSet, t: &VertexSet) -> i64 {
    let in_s = s.membership(g.vertex_count());
    let degree_sum: usize = t
        .iter()
        .map(|v| g.neighbors(v).iter().filter(|&&w| !in_s[w]).count())
        .sum();
    odd_cut_q_unchecked(g, s, t) as i64 - (b * s.len()) as i64 + (a * t.len()) as i64 - degree_sum as i64
}

/// The even-factor deficiency q(S,T) − b|S| + a|T| − Σ_{v∈T} d_{G−S}(v).
///
/// G has an even [a,b]-factor if this is ≤ 0 for every disjoint pair.
pub fn even_factor_deficiency(g: &Graph, a: usize, b: usize, s: &VertexSet, t: &VertexSet) -> Result<i64> {
    check_even_range(a, b)?;
    check_pair(g, s, t)?;
    Ok(deficiency_expression(g, a, b, s, t))
}

/// Checks that the deficiency has the parity of `a` (and `b`). Requires
/// positive `a`, `b` of equal parity.
pub fn parity_check(g: &Graph, a: usize, b: usize, s: &VertexSet, t: &VertexSet) -> Result<bool> {
    if a == 0 || b == 0 || a % 2 != b % 2 {
        return Err(Error::params(format!(
            "a = {a} and b = {b} must be positive with the same parity"
        )));
    }
    check_pair(g, s, t)?;
    let value = deficiency_expression(g, a, b, s, t);
    Ok(value.rem_euclid(2) == (a % 2) as i64)
}

/// The (g,f)-factor deficiency
/// Σ_{v∈T}(d(v) − g(v)) + Σ_{u∈S} f(u) − |[S,T]| − q(S,T),
/// where q counts components Q of G − (S ∪ T) on which g = f everywhere and
/// |[Q,T]| + Σ_{v∈Q} f(v) is odd. Non-negative for all pairs iff a
/// (g,f)-factor exists.
pub fn lovasz_deficiency(
    g: &Graph,
    lower: &[usize],
    upper: &[usize],
    s: &VertexSet,
    t: &VertexSet,
) -> Result<i64> {
    let n = g.vertex_count();
    if lower.len() != n || upper.len() != n {
        return Err(Error::params(format!(
            "degree functions have lengths {} and {}, graph has {n} vertices",
            lower.len(),
            upper.len()
        )));
    }
    let violations: Vec<String> = (0..n)
        .filter(|&v| !(lower[v] <= upper[v] && upper[v] <= g.degree(v)))
        .map(|v| {
            format!(
                "vertex {v}: need 0 <= g = {} <= f = {} <= d = {}",
                lower[v],
                upper[v],
                g.degree(v)
            )
        })
        .collect();
    if !violations.is_empty() {
        return Err(Error::DegreeBounds(violations));
    }
    check_pair(g, s, t)?;

    let in_t = t.membership(n);
    let removed: VertexSet = s.iter().chain(t.iter()).collect();
    let q = components_after_deletion(g, &removed)?
        .iter()
        .filter(|comp| {
            if comp.iter().any(|v| lower[v] != upper[v]) {
                return false;
            }
            let cut: usize = comp.iter().map(|v| g.neighbors(v).iter().filter(|&&w| in_t[w]).count()).sum();
            let f_sum: usize = comp.iter().map(|v| upper[v]).sum();
            (cut + f_sum) % 2 == 1
        })
        .count();
    let t_term: i64 = t.iter().map(|v| g.degree(v) as i64 - lower[v] as i64).sum();
    let s_term: i64 = s.iter().map(|v| upper[v] as i64).sum();
    let cut = crate::graph::edge_cut(g, s, t)? as i64;
    Ok(t_term + s_term - cut - q as i64)
}

/// f(x) = n + (a − 1 − an/(a+b))·x + (x − 1 − b)·(ax − p)/b, evaluated
/// exactly. Intended for 4 ≤ a ≤ b and p > 0.
pub fn prop_f_eval(a: i64, b: i64, n: i64, p: i64, x: i64) -> Rational {
    assert!(b > 0 && a + b > 0, "b and a + b must be positive");
    let slope = int(a - 1) - Rational::new(a * n, a + b);
    int(n) + slope * int(x) + int(x - 1 - b) * Rational::new(a * x - p, b)
}
