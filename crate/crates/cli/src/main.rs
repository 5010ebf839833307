use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use comblab::census::{empirical_exponent, CensusEntry, ScanMode};
use comblab::report::csv_field;
use comblab::suites::{run_suite, SuiteConfig};
use comblab_core::blockade::{blockparty, is_cograph, Blockade, PURE_PAIR_BUDGET};
use comblab_core::comb::extract_comb;
use comblab_core::decompose::{accounting, c5_scenario, c5hat_pipeline, comb_with_apex, sparse_decomposition, ApexRule};
use comblab_core::extremal::{is_tau_critical, kappa, CRITICALITY_CAP};
use comblab_core::format::parse_graph;
use comblab_core::random::rng;
use comblab_core::search::PatternGraph;
use comblab_core::sparsify::{density_subset_scaled, rodl_subset, DensityOptions};
use comblab_core::{Error, Graph, Rational, VertexSet};

#[derive(Parser)]
#[command(name = "comblab", version, about = "Exact combs, blockades and sparse decompositions on small graphs")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Alpha, omega, kappa and family flags for each input graph.
    Analyze {
        /// graph6 string, JSON object, or a file of either.
        #[arg(long)]
        graph: String,
        /// Also decide tau-criticality (small graphs only).
        #[arg(long)]
        tau: Option<Rational>,
    },
    /// The comb dichotomy on a bipartite pair (A, B).
    Comb {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        gamma: Rational,
        #[arg(long)]
        d: Rational,
    },
    /// A sparse induced subgraph: an m-set below eps (m-1), or with
    /// --delta a large set of small degree in G or its complement.
    Sparsify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        eps: Rational,
        /// Multiplies the degree contract.
        #[arg(long)]
        scale: Option<Rational>,
        #[arg(long)]
        delta: Option<Rational>,
    },
    /// Sparse decomposition, accounting, and the comb scenarios.
    Decompose {
        #[arg(long)]
        graph: String,
        /// "all" or a comma-separated vertex list.
        #[arg(long, default_value = "all")]
        x: String,
        #[arg(long)]
        eps: Rational,
        #[arg(long)]
        delta: Rational,
        #[arg(long)]
        tau: Rational,
        /// "scaled" or "fixed:GAMMA:MIN_TEETH".
        #[arg(long, default_value = "scaled")]
        rule: String,
    },
    /// Pure blockade or rainbow copy from a blockade.
    Blockparty {
        #[arg(long)]
        graph: String,
        /// JSON list of vertex lists, inline or as a file.
        #[arg(long)]
        blocks: String,
        #[arg(long)]
        pattern: PatternGraph,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = PURE_PAIR_BUDGET)]
        budget: u64,
    },
    /// Minimum kappa per order over family-free graphs.
    Scan {
        /// Comma-separated pattern names; "none" for all graphs.
        #[arg(long, default_value = "C5")]
        family: String,
        /// An order or a range such as 5..8.
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Run a verification suite; exits 1 when it finds violations.
    Verify {
        #[arg(long)]
        suite: String,
        /// JSON suite config file.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        n_cap: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

/// What a command produced and whether it found problems.
struct Output {
    records: Vec<Value>,
    text: Option<String>,
    violations: bool,
}

impl Output {
    fn records(records: Vec<Value>) -> Self {
        Output {
            records,
            text: None,
            violations: false,
        }
    }
}

fn read_graphs(arg: &str) -> anyhow::Result<Vec<Graph>> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        if text.trim_start().starts_with('{') {
            return Ok(vec![parse_graph(&text)?]);
        }
        return text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| Ok(parse_graph(l)?))
            .collect();
    }
    Ok(vec![parse_graph(arg)?])
}

fn read_graph(arg: &str) -> anyhow::Result<Graph> {
    let mut gs = read_graphs(arg)?;
    match gs.len() {
        1 => Ok(gs.remove(0)),
        k => Err(anyhow!("expected one graph, found {k}")),
    }
}

fn parse_set(s: &str) -> anyhow::Result<VertexSet> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| anyhow!("bad vertex {t:?}: {e}")))
        .collect()
}

fn parse_range(s: &str) -> anyhow::Result<RangeInclusive<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| anyhow!("bad order {t:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

fn parse_rule(s: &str) -> anyhow::Result<ApexRule> {
    if s == "scaled" {
        return Ok(ApexRule::Scaled);
    }
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["fixed", gamma, min] => Ok(ApexRule::Fixed {
            gamma: gamma.parse()?,
            min_teeth: min.parse()?,
        }),
        _ => Err(anyhow!("unknown rule {s:?}; use scaled or fixed:GAMMA:MIN_TEETH")),
    }
}

fn analyze(graph: &str, tau: Option<&Rational>) -> anyhow::Result<Output> {
    let mut records = Vec::new();
    for g in read_graphs(graph)? {
        let entry = CensusEntry::of(&g);
        let k = kappa(&g, &g.vertices())?;
        let mut rec = serde_json::to_value(&entry)?;
        rec["exponent"] = json!(entry.exponent());
        rec["cograph"] = json!(is_cograph(&g));
        rec["witness_stable"] = json!(k.witness_stable);
        rec["witness_clique"] = json!(k.witness_clique);
        if let Some(tau) = tau {
            rec["criticality"] = serde_json::to_value(is_tau_critical(&g, tau, CRITICALITY_CAP)?)?;
        }
        records.push(rec);
    }
    Ok(Output::records(records))
}

fn decompose(g: &Graph, x: &str, eps: &Rational, delta: &Rational, tau: &Rational, rule: &str) -> anyhow::Result<Value> {
    let x = if x == "all" { g.vertices() } else { parse_set(x)? };
    let rule = parse_rule(rule)?;
    let dec = sparse_decomposition(g, &x, eps, delta, tau)?;
    let acc = (!x.is_empty()).then(|| accounting(&dec)).transpose()?;
    let comb = comb_with_apex(g, &dec, &rule)?;
    let (c5, c5hat) = match &comb {
        Some(ac) => (
            Some(c5_scenario(g, &ac.comb)?),
            Some(c5hat_pipeline(g, &ac.comb, tau, Some(&dec.gamma))?),
        ),
        None => (None, None),
    };
    Ok(json!({
        "decomposition": dec,
        "accounting": acc,
        "comb": comb,
        "c5": c5,
        "c5hat": c5hat,
    }))
}

fn sparsify(g: &Graph, m: Option<usize>, eps: &Rational, scale: Option<&Rational>, delta: Option<&Rational>, seed: u64) -> anyhow::Result<Output> {
    let found = match (m, delta) {
        (Some(m), None) => {
            let scale = scale.cloned().unwrap_or_else(Rational::one);
            match density_subset_scaled(g, m, eps, &scale, &mut rng(seed), &DensityOptions::default()) {
                Ok(x) => serde_json::to_value(x)?,
                Err(e @ (Error::SearchFailed(_) | Error::SizeCap { .. })) => {
                    return Ok(Output {
                        records: vec![json!({"error": e.to_string()})],
                        text: None,
                        violations: true,
                    })
                }
                Err(e) => return Err(e.into()),
            }
        }
        (None, Some(delta)) => serde_json::to_value(rodl_subset(g, eps, delta, PURE_PAIR_BUDGET)?)?,
        _ => bail!("give exactly one of --m and --delta"),
    };
    Ok(Output::records(vec![found]))
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    let seed = cli.seed.unwrap_or(1);
    match cli.command {
        Command::Analyze { graph, tau } => analyze(&graph, tau.as_ref()),
        Command::Comb { graph, a, b, gamma, d } => {
            let g = read_graph(&graph)?;
            let outcome = extract_comb(&g, &parse_set(&a)?, &parse_set(&b)?, &gamma, &d)?;
            Ok(Output::records(vec![serde_json::to_value(outcome)?]))
        }
        Command::Sparsify { graph, m, eps, scale, delta } => {
            sparsify(&read_graph(&graph)?, m, &eps, scale.as_ref(), delta.as_ref(), seed)
        }
        Command::Decompose {
            graph,
            x,
            eps,
            delta,
            tau,
            rule,
        } => Ok(Output::records(vec![decompose(&read_graph(&graph)?, &x, &eps, &delta, &tau, &rule)?])),
        Command::Blockparty {
            graph,
            blocks,
            pattern,
            d,
            s,
            budget,
        } => {
            let g = read_graph(&graph)?;
            let text = if Path::new(&blocks).is_file() {
                fs::read_to_string(&blocks)?
            } else {
                blocks
            };
            let sets: Vec<VertexSet> = serde_json::from_str(&text)?;
            let b = Blockade::new(&g, sets)?;
            let outcome = blockparty(&g, &b, &pattern, d, s, budget)?;
            Ok(Output::records(vec![serde_json::to_value(outcome)?]))
        }
        Command::Scan {
            family,
            n,
            mode,
            p,
            trials,
        } => {
            let fam: Vec<PatternGraph> = if family == "none" {
                Vec::new()
            } else {
                family.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?
            };
            let mode = match mode {
                Mode::Exhaustive => ScanMode::Exhaustive,
                Mode::Random => ScanMode::Random { p, trials },
            };
            let rows = empirical_exponent(&fam, parse_range(&n)?, mode, seed)?;
            Ok(Output::records(rows.iter().map(serde_json::to_value).collect::<Result<_, _>>()?))
        }
        Command::Verify {
            suite,
            config,
            cases,
            n_cap,
        } => {
            let mut cfg = match config {
                Some(path) => SuiteConfig::from_json(&fs::read_to_string(&path)?)?,
                None => SuiteConfig::default(),
            };
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            cfg.cases = cases.or(cfg.cases);
            cfg.n_cap = n_cap.or(cfg.n_cap);
            let report = run_suite(&suite, &cfg)?;
            let text = match cli.format {
                Format::Json => report.to_json_lines(),
                Format::Csv => report.to_csv(),
            };
            Ok(Output {
                records: Vec::new(),
                text: Some(text),
                violations: !report.clean(),
            })
        }
    }
}

fn to_csv(records: &[Value]) -> String {
    let Some(Value::Object(first)) = records.first() else {
        return String::new();
    };
    let keys: Vec<&String> = first.keys().collect();
    let mut out = keys.iter().map(|k| csv_field(k)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for r in records {
        let cells: Vec<String> = keys
            .iter()
            .map(|k| match &r[k.as_str()] {
                Value::String(s) => csv_field(s),
                Value::Null => String::new(),
                v => csv_field(&v.to_string()),
            })
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn emit(out: &Output, format: Format, path: Option<&Path>) -> anyhow::Result<()> {
    let text = match (&out.text, format) {
        (Some(t), _) => t.clone(),
        (None, Format::Json) => out.records.iter().map(|r| format!("{r}\n")).collect(),
        (None, Format::Csv) => to_csv(&out.records),
    };
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (format, path) = (cli.format, cli.out.clone());
    let result = run(cli).and_then(|out| emit(&out, format, path.as_deref()).map(|_| out));
    match result {
        Ok(out) if out.violations => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
