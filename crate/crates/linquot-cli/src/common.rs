//! Shared CLI plumbing: graph-family construction, budgets, cache and JSON
//! output handling, and exit-code mapping.

use std::path::PathBuf;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, ValueEnum};

use linquot::graphs::VertexPermutation;
use linquot::search::{OrderingCache, SearchConfig, Strategy};
use linquot::{Error, Graph, MonomialIdeal};

pub const CONFIRMED: u8 = 0;
pub const REFUTED: u8 = 1;
pub const EXHAUSTED: u8 = 2;
pub const INVALID: u8 = 3;

pub trait HasExitCode {
    fn code(&self) -> u8;
}

/// Exit code for a failed run: library errors map through [`HasExitCode`],
/// everything else is invalid input.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(e) => e.code(),
        None => INVALID,
    }
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
pub enum Family {
    Cycle,
    Anticycle,
    StarF,
    #[value(name = "h-n")]
    HN,
    #[value(name = "g-n")]
    GN,
    HFamily,
}

/// A constructed family graph; `h-family` also carries its normalizing
/// relabeling.
pub enum BuiltGraph {
    Plain(Graph),
    WithPermutation(Graph, VertexPermutation),
}

impl BuiltGraph {
    pub fn into_plain(self) -> anyhow::Result<Graph> {
        Ok(match self {
            BuiltGraph::Plain(g) => g,
            BuiltGraph::WithPermutation(g, _) => g,
        })
    }
}

#[derive(Args)]
pub struct FamilyArgs {
    /// Graph family to construct.
    #[arg(long)]
    pub family: Option<Family>,
    /// Number of vertices.
    #[arg(long)]
    pub n: Option<usize>,
    /// First removed-chord endpoint (h-family only).
    #[arg(long)]
    pub a: Option<usize>,
    /// Second removed-chord endpoint (h-family only).
    #[arg(long)]
    pub b: Option<usize>,
}

impl FamilyArgs {
    pub fn build(&self) -> anyhow::Result<BuiltGraph> {
        let family = self
            .family
            .ok_or_else(|| anyhow::anyhow!("--family (or --ideal/--graph) is required"))?;
        let n = self
            .n
            .ok_or_else(|| anyhow::anyhow!("--n is required with --family"))?;
        Ok(match family {
            Family::Cycle => BuiltGraph::Plain(Graph::cycle(n)?),
            Family::Anticycle => BuiltGraph::Plain(Graph::anticycle(n)?),
            Family::StarF => BuiltGraph::Plain(Graph::star_f(n)?),
            Family::HN => BuiltGraph::Plain(Graph::h_n(n)?),
            Family::GN => BuiltGraph::Plain(Graph::g_n(n)?),
            Family::HFamily => {
                let a = self
                    .a
                    .ok_or_else(|| anyhow::anyhow!("--a is required for h-family"))?;
                let b = self
                    .b
                    .ok_or_else(|| anyhow::anyhow!("--b is required for h-family"))?;
                let (g, perm) = Graph::h_family(n, a, b)?;
                BuiltGraph::WithPermutation(g, perm)
            }
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Greedy,
    Backtrack,
    Exhaustive,
}

#[derive(Args)]
pub struct BudgetArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::Backtrack)]
    pub strategy: StrategyArg,
    /// Node limit (one node per attempted prefix extension).
    #[arg(long, default_value_t = 10_000_000)]
    pub budget_nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    /// Seed for candidate-order randomization; 0 keeps the canonical order.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn search_config(budget: &BudgetArgs) -> SearchConfig {
    SearchConfig {
        strategy: match budget.strategy {
            StrategyArg::Greedy => Strategy::Greedy,
            StrategyArg::Backtrack => Strategy::Backtrack,
            StrategyArg::Exhaustive => Strategy::Exhaustive,
        },
        max_nodes: budget.budget_nodes,
        max_time: budget.budget_seconds.map(Duration::from_secs_f64),
        seed: budget.seed,
        ..SearchConfig::default()
    }
}

#[derive(Args)]
pub struct CacheArgs {
    /// Directory for searched-ordering cache files.
    #[arg(long, env = "LINQUOT_CACHE")]
    pub cache_dir: Option<PathBuf>,
}

impl CacheArgs {
    pub fn open(&self) -> anyhow::Result<Option<OrderingCache>> {
        match &self.cache_dir {
            Some(dir) => Ok(Some(OrderingCache::new(dir)?)),
            None => Ok(None),
        }
    }
}

#[derive(Args)]
pub struct JsonOut {
    /// Write the JSON result to this path (`-` for stdout).
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

impl JsonOut {
    pub fn emit(&self, value: &serde_json::Value) -> anyhow::Result<()> {
        write_json(&self.json_out, value)
    }

    /// Like [`Self::emit`], but prints to stdout when no path was given;
    /// used where the JSON itself is the command's whole output.
    pub fn emit_or_stdout(&self, value: &serde_json::Value) -> anyhow::Result<()> {
        match &self.json_out {
            Some(_) => self.emit(value),
            None => write_json(&Some(PathBuf::from("-")), value),
        }
    }
}

pub fn write_json(target: &Option<PathBuf>, value: &serde_json::Value) -> anyhow::Result<()> {
    let Some(path) = target else { return Ok(()) };
    let text = serde_json::to_string_pretty(value)?;
    if path.as_os_str() == "-" {
        println!("{text}");
    } else {
        std::fs::write(path, text.as_bytes())
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

pub fn load_ideal(path: &PathBuf) -> anyhow::Result<MonomialIdeal> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    Ok(serde_json::from_str(&text)?)
}
