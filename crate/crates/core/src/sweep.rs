//! Search for counterexamples to the spectral [a,b]-factor conjecture.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{find_ab_factor, AbSearch};
use crate::graph::Graph;
use crate::spectral::{compare, lambda1, rho, Relation, CUBIC_TOLERANCE, DEFAULT_TOLERANCE, GUARD_BAND};

pub const EXHAUSTIVE_LIMIT: usize = 8;
/// Largest n whose upper triangle fits the u64 graph descriptor.
pub const DESCRIPTOR_LIMIT: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Exhaustive,
    Random { seed: u64, count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Present,
    Absent,
    BudgetExhausted,
}

/// One graph at or above the threshold. The graph is `from_upper_mask(n, mask)`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub mask: u64,
    pub edges: usize,
    pub lambda1: f64,
    pub rho: f64,
    pub relation: Relation,
    pub verdict: Verdict,
}

impl SweepRecord {
    /// λ₁ > ρ and no factor exists.
    pub fn is_counterexample(&self) -> bool {
        self.relation == Relation::Above && self.verdict == Verdict::Absent
    }

    pub fn graph(&self) -> Graph {
        Graph::from_upper_mask(self.n, self.mask)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    /// Graphs generated after the isomorph filter.
    pub examined: usize,
    /// Graphs with λ₁ > ρ(n,a).
    pub candidates: usize,
    pub verified: usize,
    pub absent: usize,
    pub budget_exhausted: usize,
    /// Graphs within the guard band of ρ(n,a); never counted as candidates.
    pub boundary: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub rho: f64,
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            budget: AbSearch::default().budget,
            jobs: None,
        }
    }
}

fn check_params(n: usize, a: usize, b: usize) -> Result<()> {
    let mut problems = Vec::new();
    if a == 0 {
        problems.push("a >= 1 fails".to_string());
    }
    if b < a {
        problems.push(format!("b >= a fails: a = {a}, b = {b}"));
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

/// Keeps one labelling per degree-ordered class: degrees must be
/// non-increasing in vertex id. Every graph has such a relabelling.
fn degree_ordered(n: usize, mask: u64) -> bool {
    let mut degree = [0u8; EXHAUSTIVE_LIMIT];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                degree[u] += 1;
                degree[v] += 1;
            }
            bit += 1;
        }
    }
    degree[..n].windows(2).all(|w| w[0] >= w[1])
}

/// Cheap upper bound on λ₁: min(Δ, (√(8m+1) − 1)/2).
fn lambda_upper_bound(g: &Graph) -> f64 {
    let max_degree = (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap_or(0) as f64;
    let m = g.edge_count() as f64;
    max_degree.min(((8.0 * m + 1.0).sqrt() - 1.0) / 2.0)
}

fn examine(n: usize, a: usize, b: usize, mask: u64, rho: f64, budget: u64) -> Result<Option<SweepRecord>> {
    let g = Graph::from_upper_mask(n, mask);
    if lambda_upper_bound(&g) < rho - GUARD_BAND {
        return Ok(None);
    }
    let l = lambda1(&g, DEFAULT_TOLERANCE)?.lambda1;
    let relation = compare(l, rho);
    if relation == Relation::Below {
        return Ok(None);
    }
    let verdict = match find_ab_factor(&g, a, b, AbSearch { budget, ..AbSearch::default() }) {
        Ok(found) if found.is_found() => Verdict::Present,
        Ok(_) => Verdict::Absent,
        Err(Error::BudgetExhausted { .. }) => Verdict::BudgetExhausted,
        Err(e) => return Err(e),
    };
    Ok(Some(SweepRecord {
        n,
        a,
        b,
        mask,
        edges: g.edge_count(),
        lambda1: l,
        rho,
        relation,
        verdict,
    }))
}

fn masks(n: usize, source: Source) -> Result<Vec<u64>> {
    let bits = n * n.saturating_sub(1) / 2;
    match source {
        Source::Exhaustive => {
            if n > EXHAUSTIVE_LIMIT {
                return Err(Error::Scale {
                    what: "exhaustive sweep",
                    limit: EXHAUSTIVE_LIMIT,
                    actual: n,
                });
            }
            Ok((0..1u64 << bits)
                .into_par_iter()
                .filter(|&mask| degree_ordered(n, mask))
                .collect())
        }
        Source::Random { seed, count } => {
            if n > DESCRIPTOR_LIMIT {
                return Err(Error::Scale {
                    what: "random sweep",
                    limit: DESCRIPTOR_LIMIT,
                    actual: n,
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let keep = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
            Ok((0..count).map(|_| rng.random::<u64>() & keep).collect())
        }
    }
}

/// Runs the sweep. Records appear in mask order (exhaustive) or generation
/// order (random), independent of the thread count.
pub fn conjecture_sweep(n: usize, a: usize, b: usize, source: Source, options: SweepOptions) -> Result<SweepReport> {
    check_params(n, a, b)?;
    let rho = rho(n, a, CUBIC_TOLERANCE)?;
    let run = || -> Result<(usize, Vec<SweepRecord>)> {
        let masks = masks(n, source)?;
        let records: Vec<Option<SweepRecord>> = masks
            .par_iter()
            .map(|&mask| examine(n, a, b, mask, rho, options.budget))
            .collect::<Result<_>>()?;
        Ok((masks.len(), records.into_iter().flatten().collect()))
    };
    let (examined, records) = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::params(format!("cannot start {jobs} workers: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let mut summary = SweepSummary {
        examined,
        ..SweepSummary::default()
    };
    for r in &records {
        if r.relation == Relation::Boundary {
            summary.boundary += 1;
            continue;
        }
        summary.candidates += 1;
        match r.verdict {
            Verdict::Present => summary.verified += 1,
            Verdict::Absent => summary.absent += 1,
            Verdict::BudgetExhausted => summary.budget_exhausted += 1,
        }
    }
    Ok(SweepReport { rho, records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::h_na;

    #[test]
    fn h_na_sits_on_the_boundary() {
        let g = h_na(5, 2).unwrap();
        let rho = rho(5, 2, CUBIC_TOLERANCE).unwrap();
        let record = examine(5, 2, 2, g.upper_mask(), rho, 1000).unwrap().unwrap();
        assert_eq!(record.relation, Relation::Boundary);
        assert_eq!(record.verdict, Verdict::Absent);
        assert!(!record.is_counterexample());
    }

    #[test]
    fn small_exhaustive_sweep() {
        let report = conjecture_sweep(5, 2, 2, Source::Exhaustive, SweepOptions::default()).unwrap();
        assert_eq!(report.summary.absent, 0);
        assert!(report.summary.candidates > 0);
        assert!(report.records.windows(2).all(|w| w[0].mask < w[1].mask));
    }

    #[test]
    fn random_sweep_is_seeded() {
        let source = Source::Random { seed: 7, count: 40 };
        let one = conjecture_sweep(6, 2, 4, source, SweepOptions { jobs: Some(1), ..Default::default() }).unwrap();
        let two = conjecture_sweep(6, 2, 4, source, SweepOptions { jobs: Some(3), ..Default::default() }).unwrap();
        let masks = |r: &SweepReport| r.records.iter().map(|r| r.mask).collect::<Vec<_>>();
        assert_eq!(masks(&one), masks(&two));
        assert_eq!(one.summary, two.summary);
        assert_eq!(one.summary.examined, 40);
    }

    #[test]
    fn parameters_are_checked() {
        assert!(conjecture_sweep(5, 3, 3, Source::Exhaustive, SweepOptions::default()).is_err());
        assert!(matches!(
            conjecture_sweep(10, 2, 2, Source::Exhaustive, SweepOptions::default()),
            Err(Error::Scale { .. })
        ));
    }
}
