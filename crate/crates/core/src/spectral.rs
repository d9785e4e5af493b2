//! Largest adjacency eigenvalue, the complete-bipartite factor threshold and
//! the cubic whose largest root is λ₁(H_{n,a}).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{find_ab_factor, AbSearch};
use crate::graph::{components_after_deletion, Graph, VertexSet};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const CUBIC_TOLERANCE: f64 = 1e-12;
/// Half-width of the band in which a comparison is reported as a tie.
pub const GUARD_BAND: f64 = 1e-9;

const ITERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralResult {
    pub lambda1: f64,
    pub iterations: usize,
    /// ‖Av − λv‖∞ for the returned unit eigenvector estimate.
    pub residual: f64,
}

fn component_lambda(g: &Graph, members: &[usize], tol: f64) -> Result<SpectralResult> {
    let k = members.len();
    if k == 1 {
        return Ok(SpectralResult {
            lambda1: 0.0,
            iterations: 0,
            residual: 0.0,
        });
    }
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in members.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = members
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&w| local[w]).collect())
        .collect();
    let mut v = vec![1.0 / (k as f64).sqrt(); k];
    let mut w = vec![0.0; k];
    let mut residual = f64::INFINITY;
    for iteration in 1..=ITERATION_CAP {
        for (i, row) in adj.iter().enumerate() {
            w[i] = row.iter().map(|&j| v[j]).sum();
        }
        let lambda: f64 = v.iter().zip(&w).map(|(x, y)| x * y).sum();
        residual = v
            .iter()
            .zip(&w)
            .map(|(x, y)| (y - lambda * x).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok(SpectralResult {
                lambda1: lambda,
                iterations: iteration,
                residual,
            });
        }
        // iterate with A + I so bipartite components do not oscillate
        for (x, y) in v.iter_mut().zip(&w) {
            *x += y;
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
    }
    Err(Error::NonConvergence {
        iterations: ITERATION_CAP,
        residual,
        tolerance: tol,
    })
}

/// λ₁(G) by power iteration from the all-ones vector, taken as the maximum
/// over connected components.
pub fn lambda1(g: &Graph, tolerance: f64) -> Result<SpectralResult> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(tolerance > 0.0) {
        return Err(Error::params(format!("tolerance must be positive, got {tolerance}")));
    }
    let mut best: Option<SpectralResult> = None;
    let mut iterations = 0;
    for component in components_after_deletion(g, &VertexSet::new())? {
        let r = component_lambda(g, component.as_slice(), tolerance)?;
        iterations += r.iterations;
        if best.is_none_or(|b| r.lambda1 > b.lambda1) {
            best = Some(r);
        }
    }
    let best = best.expect("a non-empty graph has a component");
    Ok(SpectralResult { iterations, ..best })
}

/// Outcome of comparing a computed value against a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Relation {
    Above,
    Boundary,
    Below,
}

/// Compares with a [`GUARD_BAND`] tie zone.
pub fn compare(value: f64, threshold: f64) -> Relation {
    if (value - threshold).abs() <= GUARD_BAND {
        Relation::Boundary
    } else if value > threshold {
        Relation::Above
    } else {
        Relation::Below
    }
}

/// √(a(n−a)) for n < a + b, otherwise √(ab)·n/(a+b). Undefined (an error)
/// when n < a.
pub fn bipartite_threshold(a: usize, b: usize, n: usize) -> Result<f64> {
    if a == 0 || a > b || n < 2 {
        return Err(Error::params(format!("need 0 < a <= b and n >= 2, got a = {a}, b = {b}, n = {n}")));
    }
    if n < a {
        return Err(Error::params(format!("sqrt(a(n - a)) is undefined for n = {n} < a = {a}")));
    }
    let (a, b, n) = (a as f64, b as f64, n as f64);
    Ok(if n < a + b {
        (a * (n - a)).sqrt()
    } else {
        (a * b).sqrt() / (a + b) * n
    })
}

/// Closed-form decision for K_{x,y}: x ≥ a and x ≥ an/(a+b) with x the
/// smaller part.
pub fn observation_decide(x: usize, y: usize, a: usize, b: usize) -> bool {
    let (x, y) = (x.min(y), x.max(y));
    x >= a && x * (a + b) >= a * (x + y)
}

/// The three decisions for one complete bipartite graph.
#[derive(Debug, Clone, Serialize)]
pub struct ObservationCheck {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
    pub closed_form: bool,
    pub lambda1: f64,
    /// `None` when the threshold is undefined (n < a).
    pub threshold: Option<f64>,
    pub relation: Option<Relation>,
    /// λ₁ ≥ threshold within the guard band; `None` when undefined.
    pub spectral: Option<bool>,
    pub search: bool,
}

impl ObservationCheck {
    pub fn consistent(&self) -> bool {
        self.spectral == Some(self.closed_form) && self.closed_form == self.search
    }
}

pub fn observation_check(x: usize, y: usize, a: usize, b: usize) -> Result<ObservationCheck> {
    let g = crate::constructions::complete_bipartite(x, y)?;
    let lambda1 = lambda1(&g, DEFAULT_TOLERANCE)?.lambda1;
    let threshold = bipartite_threshold(a, b, x + y).ok();
    let relation = threshold.map(|t| compare(lambda1, t));
    let search = find_ab_factor(&g, a, b, AbSearch::default())?.is_found();
    Ok(ObservationCheck {
        x,
        y,
        a,
        b,
        closed_form: observation_decide(x, y, a, b),
        lambda1,
        threshold,
        relation,
        spectral: relation.map(|r| r != Relation::Below),
        search,
    })
}

/// x³ − (n−3)x² − (a+n−3)x − a² + (a−1)n + 1.
pub fn cubic(n: usize, a: usize, x: f64) -> f64 {
    let (n, a) = (n as f64, a as f64);
    ((x - (n - 3.0)) * x - (a + n - 3.0)) * x - a * a + (a - 1.0) * n + 1.0
}

fn check_rho_params(n: usize, a: usize) -> Result<()> {
    let mut problems = Vec::new();
    if a == 0 {
        problems.push("a >= 1 fails".to_string());
    }
    if n < a + 1 {
        problems.push(format!("n >= a + 1 fails: n = {n}, a = {a}"));
    }
    if (a * n) % 2 == 1 {
        problems.push(format!("a*n = {} must be even", a * n));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParameters(problems))
    }
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// ρ(n,a): the largest root of the cubic, by bisection on [n−3, n−1],
/// widened to the monotone branch beyond the larger critical point when the
/// default bracket has no sign change.
pub fn rho(n: usize, a: usize, tolerance: f64) -> Result<f64> {
    check_rho_params(n, a)?;
    if !(tolerance > 0.0) {
        return Err(Error::params(format!("tolerance must be positive, got {tolerance}")));
    }
    let f = |x: f64| cubic(n, a, x);
    let (nf, af) = (n as f64, a as f64);
    // f'(x) = 3x² − 2(n−3)x − (a+n−3); its discriminant is always positive
    let p = nf - 3.0;
    let q = af + nf - 3.0;
    let disc = (p * p + 3.0 * q).sqrt();
    let (c_low, c_high) = ((p - disc) / 3.0, (p + disc) / 3.0);
    let cauchy = 1.0 + [p, q, af * af - (af - 1.0) * nf - 1.0]
        .iter()
        .fold(0.0f64, |m, c| m.max(c.abs()));

    let lo = (nf - 3.0).max(c_high);
    let hi = nf - 1.0;
    if lo < hi && f(lo) <= 0.0 && f(hi) > 0.0 {
        return Ok(bisect(f, lo, hi, tolerance));
    }
    if f(c_high) <= 0.0 && f(cauchy) > 0.0 {
        return Ok(bisect(f, c_high, cauchy, tolerance));
    }
    // local minimum above the axis: the only real root lies left of c_low
    if f(-cauchy) <= 0.0 && f(c_low) > 0.0 {
        return Ok(bisect(f, -cauchy, c_low, tolerance));
    }
    Err(Error::NoBracket { lo: nf - 3.0, hi: nf - 1.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, h_na};

    fn newton(n: usize, a: usize, mut x: f64) -> f64 {
        let (nf, af) = (n as f64, a as f64);
        for _ in 0..100 {
            let d = 3.0 * x * x - 2.0 * (nf - 3.0) * x - (af + nf - 3.0);
            x -= cubic(n, a, x) / d;
        }
        x
    }

    #[test]
    fn regular_and_bipartite_values() {
        for n in 2..9 {
            let r = lambda1(&Graph::complete(n), DEFAULT_TOLERANCE).unwrap();
            assert!((r.lambda1 - (n - 1) as f64).abs() < 1e-9);
            assert!(r.residual <= DEFAULT_TOLERANCE);
        }
        let k33 = lambda1(&complete_bipartite(3, 3).unwrap(), DEFAULT_TOLERANCE).unwrap();
        assert!((k33.lambda1 - 3.0).abs() < 1e-9);
        let c6 = lambda1(&Graph::cycle(6).unwrap(), DEFAULT_TOLERANCE).unwrap();
        assert!((c6.lambda1 - 2.0).abs() < 1e-9);
        let k26 = lambda1(&complete_bipartite(2, 6).unwrap(), DEFAULT_TOLERANCE).unwrap();
        assert!((k26.lambda1 - 12f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn disconnected_takes_the_largest_component() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert!((lambda1(&g, DEFAULT_TOLERANCE).unwrap().lambda1 - 2.0).abs() < 1e-9);
        assert_eq!(lambda1(&Graph::empty(3), DEFAULT_TOLERANCE).unwrap().lambda1, 0.0);
        assert_eq!(lambda1(&Graph::empty(0), DEFAULT_TOLERANCE), Err(Error::EmptyGraph));
    }

    #[test]
    fn threshold_branches() {
        let t = bipartite_threshold(2, 4, 6).unwrap();
        assert!((t - 8f64.sqrt()).abs() < 1e-12);
        let t = bipartite_threshold(2, 4, 5).unwrap();
        assert!((t - 6f64.sqrt()).abs() < 1e-12);
        for a in 1..8 {
            assert!((bipartite_threshold(a, a, 2 * a).unwrap() - a as f64).abs() < 1e-12);
        }
        assert!(bipartite_threshold(4, 4, 3).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert!(observation_decide(3, 3, 2, 4));
        assert!(!observation_decide(2, 6, 2, 2));
        assert!(!observation_decide(1, 3, 2, 2));
    }

    #[test]
    fn rho_matches_newton() {
        let r = rho(5, 2, CUBIC_TOLERANCE).unwrap();
        assert!(cubic(5, 2, 3.0) < 0.0 && cubic(5, 2, 3.2) > 0.0);
        assert!((r - newton(5, 2, 4.0)).abs() < 1e-11);
        assert!((r - 3.086130).abs() < 1e-6);
        assert!((rho(6, 1, CUBIC_TOLERANCE).unwrap() - 4.0).abs() < 1e-11);
    }

    #[test]
    fn rho_agrees_with_power_iteration() {
        for n in 5..12 {
            for a in 1..n {
                if a * n % 2 == 1 {
                    continue;
                }
                let r = rho(n, a, CUBIC_TOLERANCE).unwrap();
                let l = lambda1(&h_na(n, a).unwrap(), DEFAULT_TOLERANCE).unwrap().lambda1;
                assert!((r - l).abs() < 1e-6, "n={n} a={a}: {r} vs {l}");
            }
        }
    }

    #[test]
    fn rho_rejects_bad_parameters() {
        assert!(rho(5, 5, CUBIC_TOLERANCE).is_err());
        assert!(rho(5, 3, CUBIC_TOLERANCE).is_err());
        assert!(rho(5, 2, 0.0).is_err());
    }

    #[test]
    fn guard_band() {
        assert_eq!(compare(1.0, 1.0 + 1e-10), Relation::Boundary);
        assert_eq!(compare(1.0, 0.9), Relation::Above);
        assert_eq!(compare(0.9, 1.0), Relation::Below);
    }
}
