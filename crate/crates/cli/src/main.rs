//! `condcolor`: generate family graphs, emit closed-form conditional
//! colorings, verify colorings, solve `χ_r` exactly, and run theorem sweeps.
//!
//! Machine output is JSON on stdout (or `--output`). Exit codes: 0 ok,
//! 1 invalid coloring, 2 input or usage error, 3 solver budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use condcolor_core::solver::{
    chi_r_exact, SolveOptions, SolveOutcome, DEFAULT_BUDGET, MAX_SOLVER_VERTICES,
};
use condcolor_core::sweep::{
    parse_r_list, parse_range, run_sweep, SweepConfig, DEFAULT_SOLVER_CAP,
};
use condcolor_core::{
    construct, io, verify_conditional, Coloring, CondParams, Error, Family, FamilyParams,
    FamilySpec, Graph, Theorem, Verdict,
};
use serde_json::{json, Value};

const EXIT_INVALID: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "condcolor",
    version,
    about = "Conditional graph coloring toolkit"
)]
struct Cli {
    /// Output format for `gen` (other commands always emit JSON).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write machine output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Solver node budget per instance.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Largest vertex count the sweep hands to the exact solver.
    #[arg(long, global = true, default_value_t = DEFAULT_SOLVER_CAP)]
    solver_cap: usize,

    /// Report palette colors that no vertex uses.
    #[arg(long, global = true)]
    strict_surjective: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dimacs,
    Dot,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// path, cycle, complete, wheel, cycle-square, grid2n, strong-grid, web, power-of
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Base family for power-of.
    #[arg(long)]
    base: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a family graph.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Emit the closed-form coloring for a family at order r, with its verdict.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        r: usize,
    },
    /// Check a coloring file against a graph file.
    Verify {
        /// Graph as JSON or DIMACS.
        #[arg(long)]
        graph: PathBuf,
        /// Coloring as {"k": .., "colors": [..]}, a JSON array, or whitespace-separated colors.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        r: usize,
        /// Palette size; defaults to the file's k, else the largest color.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Compute chi_r exactly.
    Solve {
        #[command(flatten)]
        family: FamilyArgs,
        /// Read the graph from a file instead of a family.
        #[arg(long, conflicts_with = "family")]
        graph: Option<PathBuf>,
        #[arg(long)]
        r: usize,
        /// Search independent subtrees in parallel (same result as serial).
        #[arg(long)]
        parallel: bool,
    },
    /// Check a theorem's claims over parameter ranges.
    Sweep {
        /// prop1, thm1, thm2 or thm3
        theorem: String,
        /// Range such as 3..12 or 13,14,19.
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        t: Option<String>,
        /// Orders to check, e.g. 2,3 or 2,3,delta.
        #[arg(long)]
        r: Option<String>,
    },
}

/// A failure with its exit code; the message goes to stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::TooLarge { .. } => format!(
                "{e}; the exact solver handles at most {MAX_SOLVER_VERTICES} vertices, and graphs beyond ~30 may not finish within the budget"
            ),
            _ => e.to_string(),
        };
        Failure {
            code: EXIT_INPUT,
            message,
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, Failure> {
    let name = args
        .family
        .as_deref()
        .ok_or_else(|| input_error("a family name (or --graph for solve) is required"))?;
    let family: Family = name.parse()?;
    let base = args.base.as_deref().map(str::parse::<Family>).transpose()?;
    let params = FamilyParams {
        n: args.n,
        m: args.m,
        t: args.t,
        p: args.p,
        base,
    };
    Ok(FamilySpec::from_params(family, &params)?)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn read_coloring(text: &str, k: Option<u32>) -> Result<Coloring, Failure> {
    let bad = |e: String| input_error(format!("coloring file: {e}"));
    let trimmed = text.trim_start();
    let (colors, file_k): (Vec<u32>, Option<u32>) = if trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let colors =
            serde_json::from_value(value["colors"].clone()).map_err(|e| bad(e.to_string()))?;
        let file_k = value.get("k").and_then(Value::as_u64).map(|k| k as u32);
        (colors, file_k)
    } else if trimmed.starts_with('[') {
        (
            serde_json::from_str(text).map_err(|e| bad(e.to_string()))?,
            None,
        )
    } else {
        let colors = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| bad(format!("'{tok}' is not a color")))
            })
            .collect::<Result<_, _>>()?;
        (colors, None)
    };
    let k = k
        .or(file_k)
        .or_else(|| colors.iter().copied().max())
        .ok_or_else(|| bad("no colors".into()))?;
    if let Some(&c) = colors.iter().find(|&&c| c > k) {
        return Err(bad(format!("color {c} exceeds k = {k}")));
    }
    Ok(Coloring::new(colors, k)?)
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| input_error(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| input_error(format!("stdout: {e}"))),
    }
}

fn emit_json(cli: &Cli, value: &Value) -> Result<(), Failure> {
    emit(
        cli,
        &serde_json::to_string_pretty(value).expect("JSON value serializes"),
    )
}

fn require_json(cli: &Cli, command: &str) -> Result<(), Failure> {
    if cli.format != Format::Json {
        return Err(input_error(format!(
            "{command} only emits JSON; --format applies to gen"
        )));
    }
    Ok(())
}

fn cmd_gen(cli: &Cli, args: &FamilyArgs) -> Outcome {
    let spec = family_spec(args)?;
    let g = spec.build()?;
    let text = match cli.format {
        Format::Json => io::to_json(&g, Some(&spec)),
        Format::Dimacs => io::to_dimacs(&g),
        Format::Dot => io::to_dot(&g, &spec.to_string()),
    };
    emit(cli, &text)?;
    Ok(0)
}

fn describe_violations(g: &Graph, verdict: &Verdict) {
    for line in verdict.describe(g) {
        eprintln!("  {line}");
    }
}

fn cmd_construct(cli: &Cli, args: &FamilyArgs, r: usize) -> Outcome {
    require_json(cli, "construct")?;
    let spec = family_spec(args)?;
    let g = spec.build()?;
    let cc = construct(&spec, r)?;
    let verdict = verify_conditional(
        &g,
        &cc.coloring,
        CondParams::new(cc.claimed_k, r)?,
        cli.strict_surjective,
    )?;
    emit_json(
        cli,
        &json!({
            "family": spec.family().name(),
            "params": spec.params_json(),
            "r": r,
            "claimed_k": cc.claimed_k,
            "claimed_r": cc.claimed_r,
            "source": cc.source,
            "coloring": cc.coloring,
            "verdict": verdict,
        }),
    )?;
    if verdict.is_valid() {
        eprintln!(
            "{spec}: conditional ({}, {r})-coloring verified ({})",
            cc.claimed_k, cc.source
        );
        Ok(0)
    } else {
        eprintln!("{spec}: {} coloring FAILS at r={r}:", cc.source);
        describe_violations(&g, &verdict);
        Ok(EXIT_INVALID)
    }
}

fn cmd_verify(cli: &Cli, graph: &Path, coloring: &Path, r: usize, k: Option<u32>) -> Outcome {
    require_json(cli, "verify")?;
    let g = io::read_graph(&read_file(graph)?)?;
    let c = read_coloring(&read_file(coloring)?, k)?;
    let verdict = verify_conditional(&g, &c, CondParams::new(c.k(), r)?, cli.strict_surjective)?;
    emit_json(
        cli,
        &serde_json::to_value(&verdict).expect("verdict serializes"),
    )?;
    if verdict.is_valid() {
        Ok(0)
    } else {
        eprintln!("invalid conditional ({}, {r})-coloring: {verdict}", c.k());
        describe_violations(&g, &verdict);
        Ok(EXIT_INVALID)
    }
}

fn cmd_solve(
    cli: &Cli,
    args: &FamilyArgs,
    graph: Option<&Path>,
    r: usize,
    parallel: bool,
) -> Outcome {
    require_json(cli, "solve")?;
    let (g, described) = match graph {
        Some(path) => (
            io::read_graph(&read_file(path)?)?,
            json!({ "file": path.display().to_string() }),
        ),
        None => {
            let spec = family_spec(args)?;
            let g = spec.build()?;
            (
                g,
                json!({ "family": spec.family().name(), "params": spec.params_json() }),
            )
        }
    };
    let options = SolveOptions {
        budget: cli.budget,
        parallel,
    };
    match chi_r_exact(&g, r, options)? {
        SolveOutcome::Solved(res) => {
            emit_json(
                cli,
                &json!({
                    "status": "solved",
                    "graph": described,
                    "r": r,
                    "chi": res.chi,
                    "witness": res.witness,
                    "bounds": res.lower_bounds,
                    "nodes": res.nodes_explored,
                    "elapsed_ms": res.elapsed.as_millis() as u64,
                }),
            )?;
            Ok(0)
        }
        SolveOutcome::BudgetExhausted(ex) => {
            emit_json(
                cli,
                &json!({
                    "status": "budget-exhausted",
                    "graph": described,
                    "r": r,
                    "chi": null,
                    "lower_bound": ex.lower_bound,
                    "upper_bound": ex.upper_bound,
                    "bounds": ex.lower_bounds,
                    "nodes": ex.nodes_explored,
                    "elapsed_ms": ex.elapsed.as_millis() as u64,
                }),
            )?;
            eprintln!(
                "budget of {} nodes exhausted: {} <= chi_{r} <= {}",
                cli.budget, ex.lower_bound, ex.upper_bound
            );
            Ok(EXIT_BUDGET)
        }
    }
}

fn cmd_sweep(
    cli: &Cli,
    theorem: &str,
    n: Option<&str>,
    m: Option<&str>,
    t: Option<&str>,
    r: Option<&str>,
) -> Outcome {
    require_json(cli, "sweep")?;
    let theorem: Theorem = theorem.parse()?;
    let mut config = SweepConfig::new(theorem);
    if let Some(n) = n {
        config.n = parse_range(n)?;
    }
    if let Some(m) = m {
        config.m = parse_range(m)?;
    }
    if let Some(t) = t {
        config.t = parse_range(t)?;
    }
    if let Some(r) = r {
        config.r = parse_r_list(r)?;
    }
    config.solver_cap = cli.solver_cap;
    config.budget = cli.budget;
    let report = run_sweep(&config)?;
    emit_json(
        cli,
        &serde_json::to_value(&report).expect("report serializes"),
    )?;
    let counts: Vec<String> = report
        .summary
        .by_agreement
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect();
    eprintln!(
        "{theorem}: {} rows ({})",
        report.summary.total,
        counts.join(", ")
    );
    Ok(0)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gen { family } => cmd_gen(cli, family),
        Command::Construct { family, r } => cmd_construct(cli, family, *r),
        Command::Verify {
            graph,
            coloring,
            r,
            k,
        } => cmd_verify(cli, graph, coloring, *r, *k),
        Command::Solve {
            family,
            graph,
            r,
            parallel,
        } => cmd_solve(cli, family, graph.as_deref(), *r, *parallel),
        Command::Sweep {
            theorem,
            n,
            m,
            t,
            r,
        } => cmd_sweep(
            cli,
            theorem,
            n.as_deref(),
            m.as_deref(),
            t.as_deref(),
            r.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
