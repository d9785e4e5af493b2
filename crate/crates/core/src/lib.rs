//! Exact algorithms for (even) [a,b]-factors of simple graphs.
//!
//! * [`graph`], [`connectivity`], [`io`]: graphs, invariants and file formats.
//! * [`criteria`]: deficiency formulas, the parity check, hypothesis checkers
//!   and the exhaustive criterion decision.
//! * [`factor`]: factor search through a perfect-matching reduction, plus
//!   brute force and bounded parity-free search.
//! * [`constructions`]: the extremal graph families.
//! * [`spectral`], [`sweep`]: λ₁, thresholds, ρ(n,a) and conjecture sweeps.
//! * [`repro`], [`cli`]: claim table and command-line front end.

pub mod cli;
pub mod connectivity;
pub mod constructions;
pub mod criteria;
pub mod error;
pub mod factor;
mod flow;
pub mod graph;
pub mod io;
pub mod rational;
pub mod repro;
pub mod spectral;
pub mod sweep;

pub use error::{Error, Result};
pub use factor::{find_ab_factor, find_even_factor, AbSearch, Factor, FactorSearch};
pub use graph::{Graph, VertexSet};
