use serde::Serialize;

use super::check_even_range;
use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::error::{Error, Result};
use crate::graph::{min_degree, sigma2, Extended, Graph};
use crate::rational::{int, Quantity, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statement {
    /// κ(G) ≥ a, order bound, δ(G) ≥ an/(a+b)
    MainTheorem,
    /// κ′(G) ≥ 2, order bound, δ(G) ≥ a, σ₂(G) ≥ 2an/(a+b)
    Conjecture,
}

/// One hypothesis `lhs ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub id: &'static str,
    pub description: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub holds: bool,
}

impl ConditionCheck {
    fn at_least(id: &'static str, description: String, lhs: Quantity, rhs: Quantity) -> Self {
        ConditionCheck {
            id,
            description,
            holds: lhs >= rhs,
            lhs,
            rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub statement: Statement,
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub conditions: Vec<ConditionCheck>,
    /// Conjunction of every individual verdict.
    pub holds: bool,
}

impl ConditionReport {
    fn new(statement: Statement, g: &Graph, a: usize, b: usize, conditions: Vec<ConditionCheck>) -> Self {
        ConditionReport {
            statement,
            a,
            b,
            n: g.vertex_count(),
            holds: conditions.iter().all(|c| c.holds),
            conditions,
        }
    }

    pub fn get(&self, id: &str) -> Option<&ConditionCheck> {
        self.conditions.iter().find(|c| c.id == id)
    }
}

/// 2a + b + (a² − 3a)/b − 2.
pub fn order_bound(a: usize, b: usize) -> Rational {
    let (a, b) = (a as i64, b as i64);
    int(2 * a + b - 2) + Rational::new(a * a - 3 * a, b)
}

fn connectivity_or_zero(g: &Graph, f: fn(&Graph) -> Result<usize>) -> Result<usize> {
    match g.vertex_count() {
        0 => Err(Error::EmptyGraph),
        1 => Ok(0),
        _ => f(g),
    }
}

/// Hypotheses of the sufficient condition: (i) κ(G) ≥ a,
/// (ii) n ≥ 2a + b + (a² − 3a)/b − 2 (n ≥ b + 3 when a = 2) and
/// (iii) δ(G) ≥ an/(a+b). All comparisons are exact.
pub fn main_theorem_conditions(g: &Graph, a: usize, b: usize) -> Result<ConditionReport> {
    check_even_range(a, b)?;
    let n = g.vertex_count();
    let kappa = connectivity_or_zero(g, vertex_connectivity)?;
    let delta = min_degree(g)?;
    let (order_rhs, order_text) = if a == 2 {
        (int(b as i64 + 3), "n >= b + 3".to_string())
    } else {
        (order_bound(a, b), "n >= 2a + b + (a^2 - 3a)/b - 2".to_string())
    };
    let conditions = vec![
        ConditionCheck::at_least("i", "kappa(G) >= a".into(), Quantity::int(kappa as i64), Quantity::int(a as i64)),
        ConditionCheck::at_least("ii", order_text, Quantity::int(n as i64), order_rhs.into()),
        ConditionCheck::at_least(
            "iii",
            "delta(G) >= an/(a+b)".into(),
            Quantity::int(delta as i64),
            Rational::new((a * n) as i64, (a + b) as i64).into(),
        ),
    ];
    Ok(ConditionReport::new(Statement::MainTheorem, g, a, b, conditions))
}

/// Hypotheses of the σ₂ conjecture: (i) κ′(G) ≥ 2, (ii) the order bound,
/// (iii) δ(G) ≥ a and (iv) σ₂(G) ≥ 2an/(a+b).
pub fn conjecture_conditions(g: &Graph, a: usize, b: usize) -> Result<ConditionReport> {
    check_even_range(a, b)?;
    let n = g.vertex_count();
    let kappa_edge = connectivity_or_zero(g, edge_connectivity)?;
    let delta = min_degree(g)?;
    let s2 = match sigma2(g) {
        Extended::Finite(v) => Quantity::int(v as i64),
        Extended::Infinity => Quantity::Infinity,
    };
    let conditions = vec![
        ConditionCheck::at_least("i", "kappa'(G) >= 2".into(), Quantity::int(kappa_edge as i64), Quantity::int(2)),
        ConditionCheck::at_least(
            "ii",
            "n >= 2a + b + (a^2 - 3a)/b - 2".into(),
            Quantity::int(n as i64),
            order_bound(a, b).into(),
        ),
        ConditionCheck::at_least("iii", "delta(G) >= a".into(), Quantity::int(delta as i64), Quantity::int(a as i64)),
        ConditionCheck::at_least(
            "iv",
            "sigma2(G) >= 2an/(a+b)".into(),
            s2,
            Rational::new((2 * a * n) as i64, (a + b) as i64).into(),
        ),
    ];
    Ok(ConditionReport::new(Statement::Conjecture, g, a, b, conditions))
}
