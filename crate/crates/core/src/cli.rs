//! Command-line front end. Exit codes: 0 decided or constructed, 1 the
//! answer is "absent" or "fails", 2 usage or input error, 3 scale or budget.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::Construction;
use crate::criteria::{conjecture_conditions, criterion_decide, main_theorem_conditions, CRITERION_LIMIT};
use crate::error::Error;
use crate::factor::{find_ab_factor, find_even_factor, verify_factor, AbSearch, Factor, FactorSearch};
use crate::graph::Graph;
use crate::io::{parse_graph, to_dot, to_edge_list};
use crate::repro::{render_table, repro_report, run_claim};
use crate::spectral::{lambda1, DEFAULT_TOLERANCE};
use crate::sweep::{conjecture_sweep, Source, SweepOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCALE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "abfactor", version, about = "Exact toolkit for even [a,b]-factors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a named graph family
    Construct(ConstructArgs),
    /// Evaluate the hypotheses of the sufficient condition or the conjecture
    CheckConditions(CheckArgs),
    /// Decide the deficiency criterion exhaustively
    Criterion(CriterionArgs),
    /// Search for an [a,b]-factor
    FindFactor(FindArgs),
    /// Check a factor file against a graph
    Verify(VerifyArgs),
    /// Largest adjacency eigenvalue
    Spectral(SpectralArgs),
    /// Search for counterexamples to the spectral conjecture
    Sweep(SweepArgs),
    /// Re-run the claim checks
    Repro(ReproArgs),
}

#[derive(Debug, Args, Serialize)]
struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
    /// Write the graph here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit DOT instead of an edge list
    #[arg(long, global = true)]
    dot: bool,
}

#[derive(Debug, Subcommand, Serialize, Clone, Copy)]
#[serde(tag = "family", rename_all = "snake_case")]
enum Family {
    Example1 {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        t: usize,
    },
    Example2 {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        t: usize,
    },
    Hna {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
    },
    Kxy {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
}

impl From<Family> for Construction {
    fn from(f: Family) -> Self {
        match f {
            Family::Example1 { a, b, t } => Construction::Example1 { a, b, t },
            Family::Example2 { a, b, t } => Construction::Example2 { a, b, t },
            Family::Hna { n, a } => Construction::Hna { n, a },
            Family::Kxy { x, y } => Construction::CompleteBipartite { x, y },
        }
    }
}

#[derive(Debug, Args, Serialize)]
struct CheckArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, conflicts_with = "conjecture", required_unless_present = "conjecture")]
    theorem: bool,
    #[arg(long)]
    conjecture: bool,
}

#[derive(Debug, Args, Serialize)]
struct CriterionArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, default_value_t = CRITERION_LIMIT)]
    max_n: usize,
}

#[derive(Debug, Args, Serialize)]
struct FindArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    /// Require every factor degree to be even
    #[arg(long)]
    even: bool,
    /// Node budget for the parity-free search
    #[arg(long, default_value_t = AbSearch::default().budget)]
    budget: u64,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    factor: PathBuf,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    even: bool,
}

#[derive(Debug, Args, Serialize)]
struct SpectralArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
}

#[derive(Debug, Args, Serialize)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    exhaustive: bool,
    #[arg(long, requires_all = ["count", "seed"])]
    random: bool,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = AbSearch::default().budget)]
    budget: u64,
}

#[derive(Debug, Args, Serialize)]
struct ReproArgs {
    #[arg(long, conflicts_with = "claim")]
    all: bool,
    #[arg(long)]
    claim: Option<String>,
    /// Print rows as JSON instead of a table
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Run(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn envelope(command: &str, params: &impl Serialize, result: Value) -> Value {
    json!({
        "tool": {"name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION")},
        "command": command,
        "params": params,
        "result": result,
    })
}

fn emit(out: &mut dyn Write, value: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("JSON values serialize"))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_graph(&read_text(path)?)?)
}

fn construct(args: &ConstructArgs, out: &mut dyn Write) -> Outcome {
    let construction = Construction::from(args.family);
    let g = construction.build()?;
    let header = envelope(
        "construct",
        args,
        json!({"vertices": g.vertex_count(), "edges": g.edge_count()}),
    );
    let body = if args.dot {
        to_dot(&g)
    } else {
        let line = serde_json::to_string(&header).expect("JSON values serialize");
        format!("# {line}\n{}", to_edge_list(&g))
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            emit(out, &header)?;
        }
        None => out.write_all(body.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn check_conditions(args: &CheckArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    let report = if args.theorem {
        main_theorem_conditions(&g, args.a, args.b)?
    } else {
        conjecture_conditions(&g, args.a, args.b)?
    };
    emit(out, &envelope("check-conditions", args, json!(report)))?;
    Ok(if report.holds { EXIT_OK } else { EXIT_NEGATIVE })
}

fn criterion(args: &CriterionArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    let outcome = criterion_decide(&g, args.a, args.b, args.max_n)?;
    emit(out, &envelope("criterion", args, json!(outcome)))?;
    Ok(if outcome.holds { EXIT_OK } else { EXIT_NEGATIVE })
}

fn search_json(search: &FactorSearch) -> Value {
    match search {
        FactorSearch::Found(f) => json!({"status": "present", "factor": f}),
        FactorSearch::Absent(reason) => json!({"status": "absent", "absence": reason}),
    }
}

fn find_factor(args: &FindArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    let search = if args.even {
        find_even_factor(&g, args.a, args.b)?
    } else {
        let options = AbSearch {
            budget: args.budget,
            ..AbSearch::default()
        };
        find_ab_factor(&g, args.a, args.b, options)?
    };
    emit(out, &envelope("find-factor", args, search_json(&search)))?;
    Ok(if search.is_found() { EXIT_OK } else { EXIT_NEGATIVE })
}

/// Accepts `{"edges": [[u, v], ..]}`, a `find-factor` output, or a bare
/// edge array.
fn factor_edges(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    let value: Value = serde_json::from_str(text).map_err(|e| Failure::Run(Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }))?;
    let edges = [
        value.pointer("/edges"),
        value.pointer("/factor/edges"),
        value.pointer("/result/factor/edges"),
        Some(&value).filter(|v| v.is_array()),
    ]
    .into_iter()
    .flatten()
    .next()
    .cloned()
    .ok_or_else(|| Failure::Run(Error::params("factor file has no edge list")))?;
    serde_json::from_value(edges).map_err(|e| Failure::Run(Error::params(format!("bad factor edge list: {e}"))))
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    let edges = factor_edges(&read_text(&args.factor)?)?;
    let result = Factor::new(&g, edges).and_then(|f| verify_factor(&g, &f, args.a, args.b, args.even));
    let (valid, reason) = match result {
        Ok(valid) => (valid, None),
        Err(e @ Error::ForeignEdge { .. }) => (false, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    emit(out, &envelope("verify", args, json!({"valid": valid, "reason": reason})))?;
    Ok(if valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn spectral(args: &SpectralArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    let result = lambda1(&g, args.tol)?;
    emit(out, &envelope("spectral", args, json!(result)))?;
    Ok(EXIT_OK)
}

fn sweep(args: &SweepArgs, out: &mut dyn Write) -> Outcome {
    let source = if args.exhaustive {
        Source::Exhaustive
    } else {
        match (args.seed, args.count) {
            (Some(seed), Some(count)) => Source::Random { seed, count },
            _ => return Err(Failure::Usage("--random needs --count and --seed".into())),
        }
    };
    let options = SweepOptions {
        budget: args.budget,
        jobs: args.jobs,
    };
    let report = conjecture_sweep(args.n, args.a, args.b, source, options)?;
    for record in &report.records {
        writeln!(out, "{}", serde_json::to_string(record).expect("records serialize"))?;
    }
    let summary = envelope("sweep", args, json!({"rho": report.rho, "summary": report.summary}));
    writeln!(out, "{}", serde_json::to_string(&summary).expect("JSON values serialize"))?;
    Ok(if report.summary.absent > 0 {
        EXIT_NEGATIVE
    } else if report.summary.budget_exhausted > 0 {
        EXIT_SCALE
    } else {
        EXIT_OK
    })
}

fn repro(args: &ReproArgs, out: &mut dyn Write) -> Outcome {
    let rows = match &args.claim {
        Some(id) => vec![run_claim(id)?],
        None => repro_report(),
    };
    if args.json {
        emit(out, &envelope("repro", args, json!(rows)))?;
    } else {
        out.write_all(render_table(&rows).as_bytes())?;
    }
    Ok(if rows.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_NEGATIVE })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Construct(args) => construct(args, out),
        Command::CheckConditions(args) => check_conditions(args, out),
        Command::Criterion(args) => criterion(args, out),
        Command::FindFactor(args) => find_factor(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Spectral(args) => spectral(args, out),
        Command::Sweep(args) => sweep(args, out),
        Command::Repro(args) => repro(args, out),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) | Failure::Io(m) => (EXIT_USAGE, m),
                Failure::Run(e) if e.is_scale() => (EXIT_SCALE, e.to_string()),
                Failure::Run(e) => (EXIT_USAGE, e.to_string()),
            };
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}
