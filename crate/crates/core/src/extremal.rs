//! Exact clique number, stability number and `kappa = alpha * omega`.
//!
//! Maximum cliques come from a branch-and-bound with greedy colouring bounds
//! (the MCQ scheme). Witnesses are the lexicographically least maximum
//! clique, so results never depend on search order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int_ge_pow, Rational};
use crate::vertex_set::VertexSet;

/// Colour classes of a greedy sequential colouring, flattened: `order[i]`
/// gets colour `colors[i]`, colours non-decreasing along `order`.
fn color_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut colors = Vec::with_capacity(cand.len());
    let mut uncolored = *cand;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q.remove(v);
            q -= *g.neighbors(v);
            uncolored.remove(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

/// Raises `best` to the size of the largest clique `size + |K|` with
/// `K ⊆ cand`; returns true as soon as `best >= goal`.
fn expand(g: &Graph, mut cand: VertexSet, size: usize, best: &mut usize, goal: usize) -> bool {
    let (order, colors) = color_sort(g, &cand);
    for idx in (0..order.len()).rev() {
        if size + colors[idx] <= *best {
            return false;
        }
        let v = order[idx];
        let next = cand & *g.neighbors(v);
        if next.is_empty() {
            if size + 1 > *best {
                *best = size + 1;
                if *best >= goal {
                    return true;
                }
            }
        } else if expand(g, next, size + 1, best, goal) {
            return true;
        }
        cand.remove(v);
    }
    false
}

/// Size of a maximum clique of `g[s]`.
pub fn clique_number(g: &Graph, s: &VertexSet) -> usize {
    let mut best = 0;
    expand(g, *s, 0, &mut best, usize::MAX);
    best
}

/// Does `g[cand]` contain a clique on `r` vertices?
pub fn has_clique(g: &Graph, cand: &VertexSet, r: usize) -> bool {
    if r == 0 {
        return true;
    }
    if cand.len() < r {
        return false;
    }
    let mut best = r - 1;
    expand(g, *cand, 0, &mut best, r);
    best >= r
}

/// Lexicographically least maximum clique of `g[s]`, in host labels.
pub fn max_clique(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    Ok(lex_least_max_clique(g, s))
}

fn lex_least_max_clique(g: &Graph, s: &VertexSet) -> VertexSet {
    let k = clique_number(g, s);
    let mut chosen = VertexSet::new();
    let mut cand = *s;
    while chosen.len() < k {
        let need = k - chosen.len();
        let v = cand
            .iter()
            .find(|&v| has_clique(g, &(cand & *g.neighbors(v)).above(v), need - 1))
            .expect("a vertex extending the clique exists");
        chosen.insert(v);
        cand = (cand & *g.neighbors(v)).above(v);
    }
    chosen
}

/// Lexicographically least maximum stable set of `g[s]`.
pub fn max_stable(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    Ok(lex_least_max_clique(&g.complement(), s))
}

pub fn alpha(g: &Graph, s: &VertexSet) -> usize {
    clique_number(&g.complement(), s)
}

pub fn omega(g: &Graph, s: &VertexSet) -> usize {
    clique_number(g, s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub alpha: usize,
    pub omega: usize,
    pub kappa: usize,
    pub witness_stable: VertexSet,
    pub witness_clique: VertexSet,
}

impl ExtremalResult {
    /// Re-checks the witnesses against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.kappa == self.alpha * self.omega
            && self.witness_stable.len() == self.alpha
            && self.witness_clique.len() == self.omega
            && g.is_stable(&self.witness_stable)
            && g.is_clique(&self.witness_clique)
    }
}

/// Exact `alpha`, `omega` and `kappa` of `g[s]` with witnesses.
pub fn kappa(g: &Graph, s: &VertexSet) -> Result<ExtremalResult> {
    let witness_clique = max_clique(g, s)?;
    let witness_stable = max_stable(g, s)?;
    let (alpha, omega) = (witness_stable.len(), witness_clique.len());
    Ok(ExtremalResult {
        alpha,
        omega,
        kappa: alpha * omega,
        witness_stable,
        witness_clique,
    })
}

/// Default vertex cap for the subset-lattice criticality check.
pub const CRITICALITY_CAP: usize = 16;
/// Hard cap: the lattice tables hold `2^n` bytes each.
pub const CRITICALITY_HARD_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Criticality {
    Critical,
    /// `kappa(G) >= |G|^tau`.
    KappaNotBelowBound { kappa: usize, n: usize },
    /// Some proper induced subgraph has `kappa < |G'|^tau`.
    ProperSubgraphBelowBound { subset: VertexSet, kappa: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub tau: Rational,
    pub n: usize,
    pub kappa: usize,
    pub verdict: Criticality,
}

impl CriticalityReport {
    pub fn is_critical(&self) -> bool {
        self.verdict == Criticality::Critical
    }
}

/// `alpha` (and, on the complement, `omega`) of every vertex subset, via
/// `alpha(S) = max(alpha(S - v), 1 + alpha(S - N[v]))` with `v = min S`.
fn lattice_alpha(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut table = vec![0u8; 1 << n];
    for s in 1usize..1 << n {
        let v = s.trailing_zeros() as usize;
        let without = s & !(1 << v);
        let take = 1 + table[without & !(nbr[v] as usize)];
        table[s] = table[without].max(take);
    }
    table
}

/// Smallest integer `m` with `m >= k^tau`.
fn ceil_pow(k: usize, tau: &Rational) -> Result<usize> {
    let mut m = 0;
    loop {
        match int_ge_pow(m, k, tau) {
            Some(true) => return Ok(m),
            Some(false) => m += 1,
            None => {
                return Err(Error::precondition(format!(
                    "tau = {tau} is too fine-grained for exact comparison"
                )))
            }
        }
    }
}

/// Decides whether `g` is tau-critical: `kappa(G) < |G|^tau` while every
/// proper induced subgraph `G'` has `kappa(G') >= |G'|^tau`.
///
/// Every induced subgraph is examined through a dynamic program over the
/// subset lattice, so `|G|` is limited by `cap` (at most
/// [`CRITICALITY_HARD_CAP`]).
pub fn is_tau_critical(g: &Graph, tau: &Rational, cap: usize) -> Result<CriticalityReport> {
    if !(tau.is_positive() && *tau < Rational::one()) {
        return Err(Error::precondition(format!("tau must lie in (0, 1), got {tau}")));
    }
    let n = g.n();
    let cap = cap.min(CRITICALITY_HARD_CAP);
    if n > cap {
        return Err(Error::SizeCap {
            what: "tau-criticality lattice",
            size: n,
            cap,
        });
    }
    let alphas = lattice_alpha(g);
    let omegas = lattice_alpha(&g.complement());
    let full = (1usize << n) - 1;
    let kappa_of = |s: usize| alphas[s] as usize * omegas[s] as usize;
    let thresholds = (0..=n).map(|k| ceil_pow(k, tau)).collect::<Result<Vec<_>>>()?;
    let kappa = kappa_of(full);
    let verdict = if kappa >= thresholds[n] {
        Criticality::KappaNotBelowBound { kappa, n }
    } else {
        (1..full)
            .find(|&s| kappa_of(s) < thresholds[s.count_ones() as usize])
            .map(|s| Criticality::ProperSubgraphBelowBound {
                subset: (0..n).filter(|v| s >> v & 1 == 1).collect(),
                kappa: kappa_of(s),
            })
            .unwrap_or(Criticality::Critical)
    };
    Ok(CriticalityReport {
        tau: tau.clone(),
        n,
        kappa,
        verdict,
    })
}
