//! The verification suites. Each suite runs numbered cases in parallel and
//! collects violations in case order, so a seed fixes the whole report.

use std::collections::BTreeMap;
use std::time::Instant;

use comblab_core::blockade::{kappa_superadditive_check, Blockade};
use comblab_core::comb::{extract_comb, meets_comb_threshold, CombOutcome};
use comblab_core::decompose::{
    accounting, c5_scenario, c5hat_pipeline, comb_with_apex, sparse_decomposition, ApexComb, ApexRule, C5Outcome,
    PipelineOutcome,
};
use comblab_core::format::to_graph6;
use comblab_core::random::{gnp_with, rng};
use comblab_core::search::{contains_induced, hat_c5, is_family_free, rainbow_copy, star_expansion};
use comblab_core::sparsify::{density_subset, density_subset_scaled, DensityOptions};
use comblab_core::{Error, Graph, Rational, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::census::family;
use crate::enumerate::{enumerate_free, enumerate_graphs};
use crate::error::{HarnessError, Result};
use crate::random::case_seed;
use crate::report::{SuiteReport, Violation};

pub const SUITES: [&str; 7] = [
    "comb-dichotomy",
    "superadditivity",
    "density",
    "c5-scenario",
    "c5hat-scenario",
    "rainbow-oracle",
    "decomposition-invariants",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Number of random cases, overriding the suite's default.
    pub cases: Option<usize>,
    /// Size cap for exhaustive parts: `|A| + |B|` for the comb suite,
    /// host order for the census suites.
    pub n_cap: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            cases: None,
            n_cap: None,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| HarnessError::Config(e.to_string()))
    }
}

#[derive(Default)]
struct Outcome {
    violations: Vec<(Value, String)>,
    counts: BTreeMap<String, u64>,
}

impl Outcome {
    fn bump(&mut self, key: &str) {
        self.add(key, 1);
    }

    fn add(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    fn fail(&mut self, input: Value, message: impl Into<String>) {
        self.violations.push((input, message.into()));
    }
}

struct Tally {
    cases: usize,
    violations: Vec<Violation>,
    stats: BTreeMap<String, u64>,
}

fn run_cases(n: usize, f: impl Fn(usize) -> Outcome + Sync + Send) -> Tally {
    let outcomes: Vec<Outcome> = (0..n).into_par_iter().map(f).collect();
    let mut violations = Vec::new();
    let mut stats = BTreeMap::new();
    for (case, o) in outcomes.into_iter().enumerate() {
        violations.extend(o.violations.into_iter().map(|(input, message)| Violation { case, input, message }));
        for (k, v) in o.counts {
            *stats.entry(k).or_default() += v;
        }
    }
    Tally {
        cases: n,
        violations,
        stats,
    }
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let tally = match name {
        "comb-dichotomy" => comb_dichotomy(config),
        "superadditivity" => superadditivity(config),
        "density" => density(config),
        "c5-scenario" => c5_suite(config)?,
        "c5hat-scenario" => c5hat_suite(config)?,
        "rainbow-oracle" => rainbow_oracle(config),
        "decomposition-invariants" => decomposition_invariants(config),
        other => return Err(HarnessError::UnknownSuite(other.to_string(), SUITES.join(", "))),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        seed: config.seed,
        config: serde_json::to_value(config).expect("config serializes"),
        cases: tally.cases,
        violations: tally.violations,
        stats: tally.stats,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn pick<'a, T>(r: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    xs.choose(r).expect("nonempty choice")
}

fn q(s: &str) -> Rational {
    s.parse().expect("literal rational")
}

// ---- comb dichotomy ----

const GAMMAS: [&str; 7] = ["1/4", "1/2", "1", "3/2", "2", "3", "6"];
const DS: [&str; 2] = ["1/2", "1/3"];

fn check_comb(g: &Graph, a: &VertexSet, b: &VertexSet, gamma: &Rational, d: &Rational, out: &mut Outcome) {
    let input = || json!({"graph6": to_graph6(g), "a": set_json(a), "b": set_json(b), "gamma": gamma, "d": d});
    match extract_comb(g, a, b, gamma, d) {
        Err(e) => out.fail(input(), e.to_string()),
        Ok(CombOutcome::CombFound { comb, .. }) => {
            out.bump("comb_found");
            let placed = comb.a_set().is_subset(a) && comb.b_union().is_subset(b);
            if !(comb.is_valid(g) && placed && meets_comb_threshold(comb.k_min(), comb.t(), gamma, d)) {
                out.fail(input(), "comb fails verification or its threshold");
            }
        }
        Ok(CombOutcome::SparsityBound(cert)) => {
            out.bump("sparsity_bound");
            if !cert.verify(g, a, b) {
                out.fail(input(), format!("certificate fails: |B| = {} vs bound {}", cert.b_size, cert.bound_value));
            }
        }
    }
}

/// Sorted sequences of nonempty `A`-neighbourhoods, one per vertex of `B`:
/// every bipartite configuration up to reordering `B`.
fn neighbourhood_multisets(a: usize, b: usize) -> Vec<Vec<u32>> {
    fn grow(top: u32, from: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for m in from..top {
            cur.push(m);
            grow(top, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(1 << a, 1, b, &mut Vec::new(), &mut out);
    out
}

fn bipartite_host(a: usize, masks: &[u32]) -> (Graph, VertexSet, VertexSet) {
    let mut g = Graph::new(a + masks.len()).expect("small host");
    for (j, &m) in masks.iter().enumerate() {
        for i in 0..a {
            if m >> i & 1 == 1 {
                g.add_edge(i, a + j).expect("in range");
            }
        }
    }
    let av = (0..a).collect();
    let bv = (a..a + masks.len()).collect();
    (g, av, bv)
}

fn comb_dichotomy(cfg: &SuiteConfig) -> Tally {
    let cap = cfg.n_cap.unwrap_or(10);
    let configs: Vec<(usize, Vec<u32>)> = (1..=4)
        .flat_map(|a| (1..=6).filter(move |b| a + b <= cap).map(move |b| (a, b)))
        .flat_map(|(a, b)| neighbourhood_multisets(a, b).into_iter().map(move |m| (a, m)))
        .collect();
    let gammas: Vec<Rational> = GAMMAS.iter().map(|s| q(s)).collect();
    let ds: Vec<Rational> = DS.iter().map(|s| q(s)).collect();
    let exhaustive = configs.len();
    let random = cfg.cases.unwrap_or(10_000);
    let mut tally = run_cases(exhaustive + random, |case| {
        let mut out = Outcome::default();
        if case < exhaustive {
            let (a, masks) = &configs[case];
            let (g, av, bv) = bipartite_host(*a, masks);
            for gamma in &gammas {
                for d in &ds {
                    check_comb(&g, &av, &bv, gamma, d, &mut out);
                }
            }
            out.add("checks", (gammas.len() * ds.len()) as u64);
        } else {
            let mut r = rng(case_seed(cfg.seed, case));
            let p = r.gen_range(0.1..0.7);
            let masks: Vec<u32> = (0..10)
                .map(|_| {
                    let m = (0..8).fold(0u32, |m, i| m | (r.gen_bool(p) as u32) << i);
                    if m == 0 {
                        1 << r.gen_range(0..8)
                    } else {
                        m
                    }
                })
                .collect();
            let (g, av, bv) = bipartite_host(8, &masks);
            check_comb(&g, &av, &bv, pick(&mut r, &gammas), pick(&mut r, &ds), &mut out);
            out.bump("checks");
        }
        out
    });
    tally.stats.insert("exhaustive_configurations".into(), exhaustive as u64);
    tally.stats.insert("random_configurations".into(), random as u64);
    tally
}

// ---- superadditivity ----

/// A random cograph on `t` vertices from a random cotree.
fn random_cograph(t: usize, r: &mut ChaCha8Rng) -> Graph {
    fn build(labels: &mut [usize], g: &mut Graph, r: &mut ChaCha8Rng) {
        if labels.len() < 2 {
            return;
        }
        labels.shuffle(r);
        let k = r.gen_range(1..labels.len());
        let (left, right) = labels.split_at_mut(k);
        build(left, g, r);
        build(right, g, r);
        if r.gen_bool(0.5) {
            for &u in left.iter() {
                for &v in right.iter() {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
    }
    let mut g = Graph::new(t).expect("small pattern");
    build(&mut (0..t).collect::<Vec<_>>(), &mut g, r);
    g
}

/// Blocks of random graphs laid out consecutively, complete across pattern
/// edges and anticomplete otherwise.
fn substitute(pattern: &Graph, blocks: &[Graph]) -> (Graph, Vec<VertexSet>) {
    let n = blocks.iter().map(Graph::n).sum();
    let mut g = Graph::new(n).expect("within cap");
    let mut sets = Vec::new();
    let mut off = 0;
    for b in blocks {
        for (u, v) in b.edges() {
            g.add_edge(off + u, off + v).expect("in range");
        }
        sets.push((off..off + b.n()).collect::<VertexSet>());
        off += b.n();
    }
    for (i, j) in pattern.edges() {
        for u in sets[i].iter() {
            for v in sets[j].iter() {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    (g, sets)
}

fn superadditivity(cfg: &SuiteConfig) -> Tally {
    run_cases(cfg.cases.unwrap_or(2_000), |case| {
        let mut out = Outcome::default();
        let mut r = rng(case_seed(cfg.seed, case));
        let t = r.gen_range(1..=5);
        let pattern = random_cograph(t, &mut r);
        let blocks: Vec<Graph> = (0..t)
            .map(|_| {
                let s = r.gen_range(1..=7);
                let p = r.gen_range(0.0..1.0);
                gnp_with(s, p, &mut r)
            })
            .collect();
        let (g, sets) = substitute(&pattern, &blocks);
        let input = || json!({"graph6": to_graph6(&g), "blocks": sets.iter().map(set_json).collect::<Vec<_>>()});
        let b = match Blockade::new(&g, sets.clone()) {
            Ok(b) => b,
            Err(e) => {
                out.fail(input(), e.to_string());
                return out;
            }
        };
        match kappa_superadditive_check(&g, &b) {
            Err(e) => out.fail(input(), e.to_string()),
            Ok(rep) => {
                let witness = g.is_stable(&rep.witness_stable)
                    && g.is_clique(&rep.witness_clique)
                    && rep.witness_stable.len() * rep.witness_clique.len() >= rep.rhs;
                if !rep.holds || rep.lhs < rep.rhs || !witness {
                    out.fail(input(), format!("kappa(union) = {} < sum = {}", rep.lhs, rep.rhs));
                }
                if rep.lhs == rep.rhs {
                    out.bump("tight");
                }
            }
        }
        out
    })
}

// ---- density ----

const EPSILONS: [&str; 8] = ["1/10", "1/6", "1/5", "1/4", "1/3", "1/2", "2/3", "1"];

fn density(cfg: &SuiteConfig) -> Tally {
    let opts = DensityOptions::default();
    let eps_grid: Vec<Rational> = EPSILONS.iter().map(|s| q(s)).collect();
    run_cases(cfg.cases.unwrap_or(1_000), |case| {
        let mut out = Outcome::default();
        let mut r = rng(case_seed(cfg.seed, case));
        let n: usize = r.gen_range(5..=24);
        let eps = pick(&mut r, &eps_grid).clone();
        let m = r.gen_range(2..=n.div_ceil(2));
        let p = (eps.to_f64() * r.gen_range(0.5..1.0)).min(1.0);
        let mut g = gnp_with(n, p, &mut r);
        let allowed = eps.clone() * Rational::from_usize(n * (n - 1)) / Rational::from_integer(2);
        while Rational::from_usize(g.edge_count()) > allowed {
            let (u, v) = *pick(&mut r, &g.edges());
            g.remove_edge(u, v).expect("edge exists");
        }
        let input = || json!({"graph6": to_graph6(&g), "m": m, "eps": eps});
        match density_subset(&g, m, &eps, &mut r, &opts) {
            Ok(x) => {
                out.bump(&format!("method_{}", serde_json::to_value(x.method).expect("enum").as_str().unwrap_or("?")));
                let bound = eps.clone() * Rational::from_usize(m - 1);
                if x.x.len() != m || Rational::from_usize(g.max_degree(&x.x)) >= bound {
                    out.fail(input(), "returned set breaks the degree contract");
                }
            }
            Err(e) => {
                let kind = match e {
                    Error::SearchFailed(_) => "no_set_exists",
                    Error::SizeCap { .. } => "budget_exhausted",
                    _ => "error",
                };
                out.bump(kind);
                if density_subset_scaled(&g, m, &eps, &Rational::from_integer(4), &mut r, &opts).is_ok() {
                    out.bump("rescued_at_scale_4");
                }
                out.fail(input(), e.to_string());
            }
        }
        out
    })
}

// ---- decomposition-based scenarios ----

fn pipeline_rules() -> Vec<ApexRule> {
    let mut rules = vec![ApexRule::Scaled];
    rules.extend([1, 2, 4].map(|gm| ApexRule::Fixed {
        gamma: Rational::from_integer(gm),
        min_teeth: 2,
    }));
    rules
}

/// Combs with apex from decompositions of `V` and of each `V - v`, under
/// every rule, without repeats.
fn pipeline_combs(g: &Graph, with_deletions: bool) -> Result<Vec<(ApexComb, Rational)>> {
    let (eps, delta, tau) = (q("1/4"), q("1/2"), q("1/2"));
    let all = g.vertices();
    let mut xs = vec![all];
    if with_deletions {
        xs.extend(all.iter().map(|v| {
            let mut y = all;
            y.remove(v);
            y
        }));
    }
    let mut out: Vec<(ApexComb, Rational)> = Vec::new();
    for x in xs {
        let dec = sparse_decomposition(g, &x, &eps, &delta, &tau)?;
        for rule in pipeline_rules() {
            if let Some(ac) = comb_with_apex(g, &dec, &rule)? {
                if !out.iter().any(|(c, _)| c.comb == ac.comb) {
                    out.push((ac, dec.gamma.clone()));
                }
            }
        }
    }
    Ok(out)
}

fn census(n_cap: usize, free_only_c5: bool) -> Result<Vec<Graph>> {
    let c5 = family(&["C5"]);
    let mut hosts = Vec::new();
    for n in 1..=n_cap {
        if free_only_c5 {
            hosts.extend(enumerate_free(n, |g| is_family_free(g, &c5))?);
        } else {
            hosts.extend(enumerate_graphs(n)?);
        }
    }
    Ok(hosts)
}

fn check_c5(g: &Graph, ac: &ApexComb, expect_free: bool, out: &mut Outcome) {
    let input = || json!({"graph6": to_graph6(g), "comb": ac.comb});
    match c5_scenario(g, &ac.comb) {
        Err(e) => out.fail(input(), e.to_string()),
        Ok(C5Outcome::AnticompleteBlocks { blockade }) => {
            out.bump("anticomplete_blocks");
            let bl = blockade.blocks();
            let ok = (0..bl.len()).all(|j| (0..j).all(|i| g.is_anticomplete_pair(&bl[i], &bl[j])));
            if !ok {
                out.fail(input(), "blocks are not pairwise anticomplete");
            }
        }
        Ok(C5Outcome::C5Witness { embedding, .. }) => {
            out.bump("c5_witness");
            if expect_free {
                out.fail(input(), "C5 witness on a C5-free host");
            }
            let c5 = Graph::cycle(5);
            let confirmed = embedding.verify(g, &c5)
                && g.induced(&embedding.image()).is_ok_and(|(h, _)| contains_induced(&h, &c5).is_some());
            if !confirmed {
                out.fail(input(), "C5 witness is not an induced C5");
            }
        }
    }
}

fn c5_suite(cfg: &SuiteConfig) -> Result<Tally> {
    let hosts = census(cfg.n_cap.unwrap_or(8), true)?;
    let census_cases = hosts.len();
    let converse = cfg.cases.unwrap_or(200);
    let c5 = Graph::cycle(5);
    let mut tally = run_cases(census_cases + converse, |case| {
        let mut out = Outcome::default();
        let (g, deletions) = if case < census_cases {
            (hosts[case].clone(), true)
        } else {
            let mut r = rng(case_seed(cfg.seed, case));
            let n = r.gen_range(8..=14);
            let p = r.gen_range(0.25..0.6);
            let g = (0..1000)
                .map(|_| gnp_with(n, p, &mut r))
                .find(|g| contains_induced(g, &c5).is_some())
                .expect("dense enough draws contain a C5");
            (g, false)
        };
        match pipeline_combs(&g, deletions) {
            Err(e) => out.fail(json!({"graph6": to_graph6(&g)}), e.to_string()),
            Ok(combs) => {
                out.add("combs", combs.len() as u64);
                for (ac, _) in &combs {
                    check_c5(&g, ac, case < census_cases, &mut out);
                }
            }
        }
        out
    });
    tally.stats.insert("census_hosts".into(), census_cases as u64);
    tally.stats.insert("hosts_with_c5".into(), converse as u64);
    Ok(tally)
}

fn c5hat_suite(cfg: &SuiteConfig) -> Result<Tally> {
    let hosts = census(cfg.n_cap.unwrap_or(8), false)?;
    let fam = family(&["hatC5", "co:hatC5"]);
    let hat = hat_c5();
    let expansion = star_expansion(&Graph::complete(3));
    let mut tally = run_cases(hosts.len(), |case| {
        let mut out = Outcome::default();
        let g = &hosts[case];
        let free = is_family_free(g, &fam);
        let combs = match pipeline_combs(g, true) {
            Ok(c) => c,
            Err(e) => {
                out.fail(json!({"graph6": to_graph6(g)}), e.to_string());
                return out;
            }
        };
        if !combs.is_empty() {
            out.bump(if free { "free_hosts_with_comb" } else { "other_hosts_with_comb" });
        }
        for (ac, gamma) in &combs {
            let input = || json!({"graph6": to_graph6(g), "comb": ac.comb});
            let rep = match c5hat_pipeline(g, &ac.comb, &q("1/2"), Some(gamma)) {
                Ok(rep) => rep,
                Err(e) => {
                    out.fail(input(), e.to_string());
                    continue;
                }
            };
            if rep.host_free != free {
                out.fail(input(), "pipeline disagrees about freeness");
            }
            match &rep.outcome {
                PipelineOutcome::NotPure { hat_c5: h, .. } => {
                    out.bump("purity_witness");
                    if free {
                        out.fail(input(), "purity witness on a free host");
                    }
                    if !h.verify(g, &hat) {
                        out.fail(input(), "purity witness is not an induced hatted C5");
                    }
                }
                PipelineOutcome::RainbowTriangle {
                    star_expansion: s,
                    hat_c5: h,
                    ..
                } => {
                    out.bump("rainbow_triangle");
                    if free {
                        out.fail(input(), "rainbow triangle on a free host");
                    }
                    if !s.verify(g, &expansion) || !h.verify(g, &hat) {
                        out.fail(input(), "rainbow triangle witness is not induced");
                    }
                }
                PipelineOutcome::Pattern {
                    stable,
                    meets_sqrt_bound,
                    ..
                } => {
                    out.bump("pattern");
                    if !meets_sqrt_bound || 4 * stable.len() * stable.len() < ac.comb.t() {
                        out.fail(input(), "pattern stable set below t^(1/2)/2");
                    }
                }
            }
        }
        out
    });
    tally.stats.insert("census_hosts".into(), hosts.len() as u64);
    Ok(tally)
}

// ---- rainbow oracle ----

/// Every injective map into `V(B)`, checked directly.
fn naive_rainbow(g: &Graph, b: &Blockade, h: &Graph) -> bool {
    fn place(g: &Graph, b: &Blockade, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<usize>) -> bool {
        let p = map.len();
        if p == h.n() {
            return true;
        }
        for x in b.union().iter() {
            let blk = b.block_of(x).expect("x is in a block");
            if used.contains(&blk) || (0..p).any(|q| h.adjacent(p, q) != g.adjacent(x, map[q])) {
                continue;
            }
            map.push(x);
            used.push(blk);
            if place(g, b, h, map, used) {
                return true;
            }
            map.pop();
            used.pop();
        }
        false
    }
    place(g, b, h, &mut Vec::new(), &mut Vec::new())
}

fn rainbow_oracle(cfg: &SuiteConfig) -> Tally {
    run_cases(cfg.cases.unwrap_or(500), |case| {
        let mut out = Outcome::default();
        let mut r = rng(case_seed(cfg.seed, case));
        let n = r.gen_range(1..=8);
        let p = r.gen_range(0.0..1.0);
        let g = gnp_with(n, p, &mut r);
        let k = r.gen_range(1..=5);
        let hp = r.gen_range(0.0..1.0);
        let h = gnp_with(k, hp, &mut r);
        let len = r.gen_range(1..=6);
        let mut blocks = vec![VertexSet::new(); len];
        for v in 0..n {
            let i = r.gen_range(0..=len);
            if i < len {
                blocks[i].insert(v);
            }
        }
        blocks.retain(|b| !b.is_empty());
        let input = || {
            json!({"graph6": to_graph6(&g), "pattern": to_graph6(&h), "blocks": blocks.iter().map(set_json).collect::<Vec<_>>()})
        };
        let b = match Blockade::new(&g, blocks.clone()) {
            Ok(b) => b,
            Err(e) => {
                out.fail(input(), e.to_string());
                return out;
            }
        };
        let expect = naive_rainbow(&g, &b, &h);
        match rainbow_copy(&g, &b, &h) {
            Err(e) => out.fail(input(), e.to_string()),
            Ok(found) => {
                if found.is_some() != expect {
                    out.fail(input(), format!("search says {}, enumeration says {expect}", found.is_some()));
                }
                if let Some(e) = found {
                    out.bump("found");
                    if !(e.verify(&g, &h) && e.is_rainbow(&b)) {
                        out.fail(input(), "returned copy is not a rainbow induced copy");
                    }
                }
            }
        }
        out
    })
}

// ---- decomposition invariants ----

const DELTAS: [&str; 4] = ["1/10", "1/4", "1/2", "1"];
const TAUS: [&str; 4] = ["1/10", "1/3", "1/2", "9/10"];

fn decomposition_invariants(cfg: &SuiteConfig) -> Tally {
    let grid = |xs: &[&str]| xs.iter().map(|s| q(s)).collect::<Vec<_>>();
    let (eps_grid, delta_grid, tau_grid) = (grid(&EPSILONS), grid(&DELTAS), grid(&TAUS));
    run_cases(cfg.cases.unwrap_or(500), |case| {
        let mut out = Outcome::default();
        let mut r = rng(case_seed(cfg.seed, case));
        let n = r.gen_range(1..=24);
        let p = r.gen_range(0.0..1.0);
        let g = gnp_with(n, p, &mut r);
        let keep = r.gen_range(0.5..=1.0);
        let x: VertexSet = (0..n).filter(|_| r.gen_bool(keep)).collect();
        let (eps, delta, tau) = (pick(&mut r, &eps_grid), pick(&mut r, &delta_grid), pick(&mut r, &tau_grid));
        let input = || json!({"graph6": to_graph6(&g), "x": set_json(&x), "eps": eps, "delta": delta, "tau": tau});
        let dec = match sparse_decomposition(&g, &x, eps, delta, tau) {
            Ok(d) => d,
            Err(e) => {
                out.fail(input(), e.to_string());
                return out;
            }
        };
        for v in dec.violations(&g) {
            out.fail(input(), v);
        }
        if !x.is_empty() {
            match accounting(&dec) {
                Ok(acc) if acc.total == Rational::one() => {}
                Ok(acc) => out.fail(input(), format!("accounting sums to {}", acc.total)),
                Err(e) => out.fail(input(), e.to_string()),
            }
        }
        out.add("rounds", dec.rounds.len() as u64);
        out.add("c_bound_held", dec.rounds.iter().filter(|r| r.c_bound_held).count() as u64);
        out.add("d_bound_held", dec.rounds.iter().filter(|r| r.d_bound_held).count() as u64);
        out.add("warnings", dec.warnings.len() as u64);
        let rule = ApexRule::Fixed {
            gamma: Rational::one(),
            min_teeth: 1,
        };
        match comb_with_apex(&g, &dec, &rule) {
            Ok(Some(ac)) => {
                out.bump("apex_combs");
                if !ac.comb.is_valid(&g) {
                    out.fail(input(), "apex comb is not valid");
                }
            }
            Ok(None) => {}
            Err(e) => out.fail(input(), e.to_string()),
        }
        out
    })
}
