//! Command-line front end: builds the graph families and their edge-ideal
//! powers, verifies or searches linear-quotient orderings, runs the
//! composite construction, and reproduces the library's named claims.
//!
//! Exit codes: 0 claim confirmed / verdict true / ordering found;
//! 1 refuted / no ordering exists; 2 search budget exhausted;
//! 3 invalid input.

mod cases;
mod common;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use linquot::compose::{compose, CompositePlan};
use linquot::quotients::{replay_certificate, verify, Criterion, OrderedGenerators};
use linquot::search::{find_ordering_with_cache, SearchOutcome};
use linquot::{Error, Graph, Monomial, MonomialIdeal};

use common::{
    exit_code, load_ideal, search_config, BudgetArgs, CacheArgs, FamilyArgs, JsonOut,
    CONFIRMED, EXHAUSTED, INVALID, REFUTED,
};

#[derive(Parser)]
#[command(
    name = "linquot",
    version,
    about = "Linear-quotient orderings of monomial ideals: build, verify, search, compose, reproduce"
)]
struct Cli {
    /// Cap for internal parallelism (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph from one of the built-in families.
    Graph(GraphCmd),
    /// Construct an edge-ideal power as JSON.
    Ideal(IdealCmd),
    /// Verify a proposed linear-quotient ordering.
    Verify(VerifyCmd),
    /// Search for a linear-quotient ordering.
    Search(SearchCmd),
    /// Build and verify the composite ordering for the modified anticycle.
    Compose(ComposeCmd),
    /// Re-run one of the named reproduction cases.
    Reproduce(ReproduceCmd),
}

#[derive(Args)]
struct GraphCmd {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    out: JsonOut,
}

#[derive(Args)]
struct IdealCmd {
    #[command(flatten)]
    family: FamilyArgs,
    /// Path to a graph JSON file instead of a family.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Power of the edge ideal.
    #[arg(long, default_value_t = 1)]
    power: u32,
    /// Embed the ideal in this many variables (defaults to the graph order).
    #[arg(long)]
    ambient: Option<usize>,
    #[command(flatten)]
    out: JsonOut,
}

#[derive(Args)]
struct VerifyCmd {
    /// Path to an ideal JSON file.
    #[arg(long, conflicts_with = "family")]
    ideal: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1)]
    power: u32,
    #[arg(long)]
    ambient: Option<usize>,
    /// `lex` for the descending-lex ordering, or a path to a JSON array of
    /// exponent vectors.
    #[arg(long, default_value = "lex")]
    order: String,
    #[arg(long, value_enum, default_value_t = CriterionArg::Colon)]
    criterion: CriterionArg,
    #[command(flatten)]
    out: JsonOut,
}

#[derive(Clone, Copy, ValueEnum)]
enum CriterionArg {
    Colon,
    Works,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Self {
        match c {
            CriterionArg::Colon => Criterion::Colon,
            CriterionArg::Works => Criterion::Works,
        }
    }
}

#[derive(Args)]
struct SearchCmd {
    #[arg(long, conflicts_with = "family")]
    ideal: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1)]
    power: u32,
    #[arg(long)]
    ambient: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    cache: CacheArgs,
    #[command(flatten)]
    out: JsonOut,
}

#[derive(Args)]
struct ComposeCmd {
    /// Number of vertices of the modified anticycle.
    #[arg(long)]
    n: usize,
    /// Power (2 or 3 are the proven range; larger values are attempted).
    #[arg(long)]
    s: u32,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    cache: CacheArgs,
    #[command(flatten)]
    out: JsonOut,
}

#[derive(Args)]
struct ReproduceCmd {
    /// Which claim to re-check.
    #[arg(long, value_enum)]
    case: cases::Case,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    cache: CacheArgs,
    #[command(flatten)]
    out: JsonOut,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not input errors.
            use clap::error::ErrorKind;
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(INVALID),
            };
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(INVALID);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Graph(cmd) => run_graph(cmd),
        Command::Ideal(cmd) => run_ideal(cmd),
        Command::Verify(cmd) => run_verify(cmd),
        Command::Search(cmd) => run_search(cmd),
        Command::Compose(cmd) => run_compose(cmd),
        Command::Reproduce(cmd) => cases::run(cmd.case, cases::Params {
            n: cmd.n,
            s: cmd.s,
            a: cmd.a,
            b: cmd.b,
            budget: cmd.budget,
            cache: cmd.cache,
            out: cmd.out,
        }),
    }
}

fn run_graph(cmd: GraphCmd) -> anyhow::Result<u8> {
    let value = match cmd.family.build()? {
        common::BuiltGraph::Plain(graph) => serde_json::to_value(&graph)?,
        common::BuiltGraph::WithPermutation(graph, perm) => json!({
            "graph": graph,
            "permutation": perm,
        }),
    };
    cmd.out.emit_or_stdout(&value)?;
    Ok(CONFIRMED)
}

fn run_ideal(cmd: IdealCmd) -> anyhow::Result<u8> {
    let graph = match &cmd.graph {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            serde_json::from_str::<Graph>(&text)?
        }
        None => cmd.family.build()?.into_plain()?,
    };
    let ambient = cmd.ambient.unwrap_or(graph.n());
    let ideal = graph.edge_ideal_in(ambient)?.power(cmd.power)?;
    cmd.out.emit_or_stdout(&serde_json::to_value(&ideal)?)?;
    Ok(CONFIRMED)
}

fn resolve_ideal(
    path: &Option<PathBuf>,
    family: &FamilyArgs,
    power: u32,
    ambient: Option<usize>,
) -> anyhow::Result<MonomialIdeal> {
    match path {
        Some(p) => {
            let ideal = load_ideal(p)?;
            Ok(ideal.power(power)?)
        }
        None => {
            let graph = family.build()?.into_plain()?;
            let ambient = ambient.unwrap_or(graph.n());
            Ok(graph.edge_ideal_in(ambient)?.power(power)?)
        }
    }
}

fn run_verify(cmd: VerifyCmd) -> anyhow::Result<u8> {
    let ideal = resolve_ideal(&cmd.ideal, &cmd.family, cmd.power, cmd.ambient)?;
    let og = if cmd.order == "lex" {
        OrderedGenerators::lex(ideal)
    } else {
        let text = std::fs::read_to_string(&cmd.order)
            .with_context(|| format!("cannot read ordering {}", cmd.order))?;
        let order: Vec<Monomial> = serde_json::from_str(&text)?;
        OrderedGenerators::new(ideal, order)?
    };
    let cert = verify(&og, cmd.criterion.into());
    replay_certificate(&og, &cert).context("emitted certificate failed replay")?;
    println!(
        "verdict: {} ({} generators, {:?} criterion)",
        cert.verdict,
        og.len(),
        cert.criterion
    );
    if let Some(f) = &cert.failure {
        println!("failure: i={} j={} witness={}", f.i, f.j, f.witness);
    }
    cmd.out.emit(&serde_json::to_value(&cert)?)?;
    Ok(if cert.verdict { CONFIRMED } else { REFUTED })
}

fn run_search(cmd: SearchCmd) -> anyhow::Result<u8> {
    let ideal = resolve_ideal(&cmd.ideal, &cmd.family, cmd.power, cmd.ambient)?;
    let cfg = search_config(&cmd.budget);
    let cache = cmd.cache.open()?;
    let result = find_ordering_with_cache(&ideal, &cfg, cache.as_ref())?;
    let (outcome, ordering, certificate, stop_reason) = match &result.outcome {
        SearchOutcome::Found(og) => {
            let cert = verify(og, Criterion::Colon);
            replay_certificate(og, &cert).context("emitted certificate failed replay")?;
            (
                "found",
                Some(og.order().to_vec()),
                Some(cert),
                None,
            )
        }
        SearchOutcome::NoneExists => ("none-exists", None, None, None),
        SearchOutcome::BudgetExhausted(reason) => {
            ("budget-exhausted", None, None, Some(*reason))
        }
    };
    println!(
        "outcome: {outcome} (nodes={}, elapsed={:.3}s)",
        result.nodes,
        result.elapsed.as_secs_f64()
    );
    cmd.out.emit(&json!({
        "outcome": outcome,
        "nodes": result.nodes,
        "elapsed_seconds": result.elapsed.as_secs_f64(),
        "stop_reason": stop_reason,
        "ordering": ordering,
        "certificate": certificate,
    }))?;
    Ok(match result.outcome {
        SearchOutcome::Found(_) => CONFIRMED,
        SearchOutcome::NoneExists => REFUTED,
        SearchOutcome::BudgetExhausted(_) => EXHAUSTED,
    })
}

fn run_compose(cmd: ComposeCmd) -> anyhow::Result<u8> {
    let cfg = search_config(&cmd.budget);
    let cache = cmd.cache.open()?;
    let plan = CompositePlan::standard(cmd.n, cmd.s, &cfg, cache.as_ref())?;
    let outcome = compose(&plan)?;
    replay_certificate(&outcome.ordering, &outcome.certificate)
        .context("composite certificate failed replay")?;
    println!(
        "composite ordering of {} generators verified: {}",
        outcome.ordering.len(),
        outcome.certificate.verdict
    );
    for (k, sub) in outcome.sub_certificates.iter().enumerate() {
        println!(
            "  stratum j={}: {} generators, verdict {}",
            cmd.s - k as u32,
            plan.sub_orderings[k].len(),
            sub.verdict
        );
    }
    cmd.out.emit(&serde_json::to_value(&outcome)?)?;
    Ok(CONFIRMED)
}

/// Maps library errors onto the documented exit codes.
impl common::HasExitCode for Error {
    fn code(&self) -> u8 {
        match self {
            Error::BaseOrderingUnavailable(_) => EXHAUSTED,
            _ => INVALID,
        }
    }
}
