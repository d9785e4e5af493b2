//! One-call reproduction of every checkable claim, as a table of rows.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::constructions::{example1, example2, h_na};
use crate::criteria::{conjecture_conditions, order_bound, parity_check, prop_f_eval};
use crate::error::{Error, Result};
use crate::factor::find_even_factor;
use crate::graph::{Graph, VertexSet};
use crate::rational::{int, Rational};
use crate::spectral::{
    compare, cubic, lambda1, observation_check, rho, Relation, CUBIC_TOLERANCE, DEFAULT_TOLERANCE,
};
use crate::sweep::{conjecture_sweep, Source, SweepOptions};

#[derive(Debug, Clone, Serialize)]
pub struct ClaimRow {
    pub id: &'static str,
    pub claim: &'static str,
    pub parameters: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

type Check = fn() -> Result<(String, bool)>;

struct Claim {
    id: &'static str,
    claim: &'static str,
    parameters: &'static str,
    expected: &'static str,
    check: Check,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "edge-family-connectivity",
        claim: "edge-connectivity family has kappa' = a - 1",
        parameters: "a=4 b=12 t=9",
        expected: "kappa' = 3",
        check: edge_family_connectivity,
    },
    Claim {
        id: "edge-family-conditions",
        claim: "edge-connectivity family meets every conjecture hypothesis",
        parameters: "a=4 b=12 t=9",
        expected: "kappa' >= 2, n >= 55/3, delta >= 4, sigma2 >= 10",
        check: edge_family_conditions,
    },
    Claim {
        id: "edge-family-no-factor",
        claim: "edge-connectivity family has no even [a,b]-factor",
        parameters: "a=4 b=12 t=9",
        expected: "absent",
        check: edge_family_no_factor,
    },
    Claim {
        id: "vertex-family-connectivity",
        claim: "vertex-connectivity family has kappa = a - 1",
        parameters: "a=4 b=24 t=6",
        expected: "kappa = 3",
        check: vertex_family_connectivity,
    },
    Claim {
        id: "vertex-family-conditions",
        claim: "vertex-connectivity family meets every conjecture hypothesis",
        parameters: "a=4 b=24 t=6",
        expected: "kappa' >= 2, n >= 181/6, delta >= 4, sigma2 >= 66/7",
        check: vertex_family_conditions,
    },
    Claim {
        id: "vertex-family-no-factor",
        claim: "vertex-connectivity family has no even [a,b]-factor",
        parameters: "a=4 b=24 t=6",
        expected: "absent",
        check: vertex_family_no_factor,
    },
    Claim {
        id: "sign-grid",
        claim: "f is negative at the four test points under the order bounds",
        parameters: "a in {4,6}, b in a..=a+20 step 2, p in {1,2,3}",
        expected: "0 failures",
        check: sign_grid_claim,
    },
    Claim {
        id: "parity",
        claim: "even-factor deficiency is congruent to a mod 2",
        parameters: "10^4 random (G,S,T), n <= 10, (a,b) in {(2,2),(2,4),(4,4),(4,6)}",
        expected: "0 violations",
        check: parity_claim,
    },
    Claim {
        id: "bipartite-observation",
        claim: "closed form, lambda1 threshold and factor search agree on K_{x,y}",
        parameters: "x + y <= 14, (a,b) in {(2,2),(2,4),(3,5),(4,4)}",
        expected: "0 disagreements",
        check: observation_claim,
    },
    Claim {
        id: "cubic",
        claim: "lambda1(H_{n,a}) is the largest root of the cubic",
        parameters: "n in 5..=20, 1 <= a <= n-1, a*n even",
        expected: "|lambda1 - rho| <= 1e-6",
        check: cubic_claim,
    },
    Claim {
        id: "conjecture-smoke",
        claim: "no graph above rho(n,a) lacks an [a,b]-factor",
        parameters: "exhaustive n=5 a=2 b=2",
        expected: "0 counterexample candidates, H_{n,a} not a candidate",
        check: conjecture_smoke,
    },
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

fn row(claim: &Claim) -> ClaimRow {
    let (observed, pass) = match (claim.check)() {
        Ok(outcome) => outcome,
        Err(e) => (format!("error: {e}"), false),
    };
    ClaimRow {
        id: claim.id,
        claim: claim.claim,
        parameters: claim.parameters.to_string(),
        expected: claim.expected.to_string(),
        observed,
        pass,
    }
}

pub fn run_claim(id: &str) -> Result<ClaimRow> {
    CLAIMS
        .iter()
        .find(|c| c.id == id)
        .map(row)
        .ok_or_else(|| Error::params(format!("unknown claim '{id}'; known: {}", claim_ids().join(", "))))
}

/// Every claim in order. Failures are rows, never panics.
pub fn repro_report() -> Vec<ClaimRow> {
    CLAIMS.iter().map(row).collect()
}

/// Plain-text table of a report.
pub fn render_table(rows: &[ClaimRow]) -> String {
    let width = rows.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{:<4}  {:<width$}  expected: {}; observed: {}\n",
            if r.pass { "PASS" } else { "FAIL" },
            r.id,
            r.expected,
            r.observed
        ));
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    out.push_str(&format!("{passed}/{} claims pass\n", rows.len()));
    out
}

fn edge_family_connectivity() -> Result<(String, bool)> {
    let k = edge_connectivity(&example1(4, 12, 9)?)?;
    Ok((format!("kappa' = {k}"), k == 3))
}

fn conditions_summary(g: &Graph, a: usize, b: usize) -> Result<(String, bool)> {
    let report = conjecture_conditions(g, a, b)?;
    let parts: Vec<String> = report
        .conditions
        .iter()
        .map(|c| format!("({}) {}", c.id, if c.holds { "holds" } else { "fails" }))
        .collect();
    Ok((parts.join(", "), report.holds))
}

fn edge_family_conditions() -> Result<(String, bool)> {
    conditions_summary(&example1(4, 12, 9)?, 4, 12)
}

fn absent(g: &Graph, a: usize, b: usize) -> Result<(String, bool)> {
    let found = find_even_factor(g, a, b)?.is_found();
    Ok((if found { "present" } else { "absent" }.to_string(), !found))
}

fn edge_family_no_factor() -> Result<(String, bool)> {
    absent(&example1(4, 12, 9)?, 4, 12)
}

fn vertex_family_connectivity() -> Result<(String, bool)> {
    let k = vertex_connectivity(&example2(4, 24, 6)?)?;
    Ok((format!("kappa = {k}"), k == 3))
}

fn vertex_family_conditions() -> Result<(String, bool)> {
    conditions_summary(&example2(4, 24, 6)?, 4, 24)
}

fn vertex_family_no_factor() -> Result<(String, bool)> {
    absent(&example2(4, 24, 6)?, 4, 24)
}

/// Grid points (a, b, p, n, x) at which f(x) < 0 fails although the
/// matching order bound holds.
pub fn sign_grid_failures() -> Vec<(i64, i64, i64, i64, i64)> {
    let mut failures = Vec::new();
    for a in [4i64, 6] {
        for b in (a..=a + 20).step_by(2) {
            let bound = order_bound(a as usize, b as usize);
            let start = bound.ceil().to_integer();
            for p in 1..=3 {
                for n in start..=start + 7 {
                    let mut points = Vec::new();
                    if int(n) >= bound {
                        points.extend([b + 1, a + b - 3]);
                    }
                    if int(n) >= bound + int(3) {
                        points.extend([a + b - 1, a + b - 2]);
                    }
                    for x in points {
                        if prop_f_eval(a, b, n, p, x) >= Rational::from_integer(0) {
                            failures.push((a, b, p, n, x));
                        }
                    }
                }
            }
        }
    }
    failures
}

fn sign_grid_claim() -> Result<(String, bool)> {
    let failures = sign_grid_failures();
    Ok((format!("{} failures", failures.len()), failures.is_empty()))
}

/// Seeded random (G, S, T) samples; returns (samples, violations).
pub fn parity_trials(samples: usize, seed: u64) -> Result<(usize, usize)> {
    const PAIRS: [(usize, usize); 4] = [(2, 2), (2, 4), (4, 4), (4, 6)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    for i in 0..samples {
        let n = rng.random_range(1..=10);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        let (mut s, mut t) = (Vec::new(), Vec::new());
        for v in 0..n {
            match rng.random_range(0..3) {
                0 => s.push(v),
                1 => t.push(v),
                _ => {}
            }
        }
        let (a, b) = PAIRS[i % PAIRS.len()];
        if !parity_check(&g, a, b, &VertexSet::from_iter(s), &VertexSet::from_iter(t))? {
            violations += 1;
        }
    }
    Ok((samples, violations))
}

fn parity_claim() -> Result<(String, bool)> {
    let (samples, violations) = parity_trials(10_000, 0x5eed)?;
    Ok((format!("{violations} violations in {samples} samples"), violations == 0))
}

fn observation_claim() -> Result<(String, bool)> {
    let mut cases = 0;
    let mut disagreements = Vec::new();
    for (a, b) in [(2, 2), (2, 4), (3, 5), (4, 4)] {
        for n in 2..=14 {
            for x in 1..=n / 2 {
                let check = observation_check(x, n - x, a, b)?;
                cases += 1;
                if !check.consistent() {
                    disagreements.push(format!("K_{{{},{}}} a={a} b={b}", x, n - x));
                }
            }
        }
    }
    let shown: Vec<&str> = disagreements.iter().take(3).map(String::as_str).collect();
    let mut observed = format!("{} disagreements in {cases} cases", disagreements.len());
    if !shown.is_empty() {
        observed.push_str(&format!(" (first: {})", shown.join("; ")));
    }
    Ok((observed, disagreements.is_empty()))
}

fn cubic_claim() -> Result<(String, bool)> {
    let mut worst: f64 = 0.0;
    let mut residual: f64 = 0.0;
    for n in 5..=20usize {
        for a in (1..n).filter(|a| a * n % 2 == 0) {
            let l = lambda1(&h_na(n, a)?, DEFAULT_TOLERANCE)?.lambda1;
            worst = worst.max((l - rho(n, a, CUBIC_TOLERANCE)?).abs());
            residual = residual.max(cubic(n, a, l).abs());
        }
    }
    Ok((
        format!("max |lambda1 - rho| = {worst:.2e}, max cubic residual = {residual:.2e}"),
        worst <= 1e-6 && residual <= 1e-6,
    ))
}

fn conjecture_smoke() -> Result<(String, bool)> {
    let report = conjecture_sweep(5, 2, 2, Source::Exhaustive, SweepOptions::default())?;
    let h = lambda1(&h_na(5, 2)?, DEFAULT_TOLERANCE)?.lambda1;
    let h_relation = compare(h, report.rho);
    let s = report.summary;
    Ok((
        format!(
            "{} candidates, {} absent, {} boundary, {} budget-exhausted; H_{{5,2}} is {:?}",
            s.candidates, s.absent, s.boundary, s.budget_exhausted, h_relation
        ),
        s.absent == 0 && s.budget_exhausted == 0 && h_relation != Relation::Above,
    ))
}
