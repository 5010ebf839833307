//! The sparse decomposition of a vertex set into rounds `(v_i, A_i, C_i, D_i)`,
//! combs with an apex drawn from it, and the C5 and hatted-C5 scenarios
//! built on such combs.

use serde::Serialize;

use crate::blockade::{eh_certificate, pattern_of, Blockade, EhOutcome};
use crate::comb::{extract_comb, Comb, CombOutcome};
use crate::error::{Error, Result};
use crate::extremal::{clique_number, max_stable};
use crate::graph::Graph;
use crate::rational::{ge_pow, Rational};
use crate::search::{contains_induced, hat_c5, is_family_free, star_expansion, Embedding, PatternGraph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Round {
    pub v: usize,
    pub a: VertexSet,
    pub c: VertexSet,
    pub d: VertexSet,
    /// `X_i`.
    pub x_after: VertexSet,
    /// `|C_i| >= |A_i|^tau / omega(G)`.
    pub c_bound_held: bool,
    /// `|D_i| <= 19 (gamma |A_i| |X| / delta)^(1/2)`.
    pub d_bound_held: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub x: VertexSet,
    pub host_n: usize,
    pub epsilon: Rational,
    pub delta: Rational,
    pub tau: Rational,
    /// `delta / (400 eps)`.
    pub gamma: Rational,
    pub omega: usize,
    pub rounds: Vec<Round>,
    /// Hypotheses that did not hold; the rounds are computed regardless.
    pub warnings: Vec<String>,
}

/// Builds the rounds: `v_i` of maximum degree in `G[X_{i-1}]` (smallest id
/// on ties), `A_i` its neighbours there, `C_i` the lexicographically least
/// maximum stable set of `G[A_i]`, `D_i` the rest of `X_{i-1}` with a
/// neighbour in `C_i`, and `X_i = X_{i-1} - ({v_i} + A_i + D_i)`.
pub fn sparse_decomposition(
    g: &Graph,
    x: &VertexSet,
    eps: &Rational,
    delta: &Rational,
    tau: &Rational,
) -> Result<Decomposition> {
    g.check_set(x)?;
    if !eps.is_positive() || !delta.is_positive() {
        return Err(Error::precondition("eps and delta must be positive"));
    }
    if !(tau.is_positive() && *tau < Rational::one()) {
        return Err(Error::precondition(format!("tau must lie in (0, 1), got {tau}")));
    }
    let n = Rational::from_usize(g.n());
    let mut warnings = Vec::new();
    if Rational::from_usize(x.len()) < delta.clone() * n.clone() {
        warnings.push(format!("|X| = {} is below delta |G| = {}", x.len(), delta.clone() * n.clone()));
    }
    let cap = eps.clone() * delta.clone() * n;
    if Rational::from_usize(g.max_degree(x)) > cap {
        warnings.push(format!("G[X] has maximum degree {} above eps delta |G| = {cap}", g.max_degree(x)));
    }
    let gamma = delta.clone() / (Rational::from_integer(400) * eps.clone());
    let omega = clique_number(g, &g.vertices());
    let x_len = Rational::from_usize(x.len());
    let mut rounds = Vec::new();
    let mut rest = *x;
    while let Some(v) = g.max_degree_vertex(&rest) {
        let a = *g.neighbors(v) & rest;
        let c = max_stable(g, &a)?;
        let d = (rest - a - VertexSet::singleton(v)) & g.neighborhood_of(&c);
        let x_after = rest - a - d - VertexSet::singleton(v);
        let c_bound_held = ge_pow(
            &Rational::from_usize(c.len() * omega),
            &Rational::from_usize(a.len()),
            tau,
        );
        // |D|^2 <= 361 gamma |A| |X| / delta
        let d_bound_held = Rational::from_usize(d.len() * d.len())
            <= Rational::from_integer(361) * gamma.clone() * Rational::from_usize(a.len()) * x_len.clone() / delta.clone();
        rounds.push(Round {
            v,
            a,
            c,
            d,
            x_after,
            c_bound_held,
            d_bound_held,
        });
        rest = x_after;
    }
    let dec = Decomposition {
        x: *x,
        host_n: g.n(),
        epsilon: eps.clone(),
        delta: delta.clone(),
        tau: tau.clone(),
        gamma,
        omega,
        rounds,
        warnings,
    };
    debug_assert!(dec.violations(g).is_empty());
    Ok(dec)
}

impl Decomposition {
    /// Every structural property of the rounds that fails, as text.
    pub fn violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        let mut prev = self.x;
        let mut covered = VertexSet::new();
        let mut vs = VertexSet::new();
        let mut cs = VertexSet::new();
        for (i, r) in self.rounds.iter().enumerate() {
            let i = i + 1;
            if !prev.contains(r.v) || g.degree_in(r.v, &prev) != g.max_degree(&prev) {
                out.push(format!("round {i}: v_i is not of maximum degree in G[X_(i-1)]"));
            }
            if r.a != *g.neighbors(r.v) & prev {
                out.push(format!("round {i}: A_i is not N(v_i) within X_(i-1)"));
            }
            if !r.c.is_subset(&r.a) || !g.is_stable(&r.c) {
                out.push(format!("round {i}: C_i is not a stable subset of A_i"));
            }
            if max_stable(g, &r.a).map(|s| s.len()) != Ok(r.c.len()) {
                out.push(format!("round {i}: C_i is not a maximum stable set of G[A_i]"));
            }
            let v_only = VertexSet::singleton(r.v);
            let blockers = v_only | r.c;
            let expect_x: VertexSet = (prev - v_only)
                .iter()
                .filter(|&u| g.neighbors(u).is_disjoint(&blockers))
                .collect();
            if r.x_after != expect_x {
                out.push(format!("round {i}: X_i is not the part of X_(i-1) away from v_i and C_i"));
            }
            let expect_d: VertexSet = (prev - r.a - v_only)
                .iter()
                .filter(|&u| !g.neighbors(u).is_disjoint(&r.c))
                .collect();
            if r.d != expect_d {
                out.push(format!("round {i}: D_i does not match its definition"));
            }
            let piece = v_only | r.a | r.d;
            if !piece.is_disjoint(&covered) || piece.len() != 1 + r.a.len() + r.d.len() {
                out.push(format!("round {i}: pieces overlap"));
            }
            covered |= piece;
            vs.insert(r.v);
            cs |= r.c;
            prev = r.x_after;
        }
        if !prev.is_empty() {
            out.push("X_s is not empty".into());
        }
        if covered != self.x {
            out.push("the pieces do not partition X".into());
        }
        if !g.is_stable(&vs) {
            out.push("{v_1, ..., v_s} is not stable".into());
        }
        if !g.is_stable(&cs) {
            out.push("the union of the C_i is not stable".into());
        }
        out
    }

    pub fn s(&self) -> usize {
        self.rounds.len()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AccountingReport {
    pub s_over_x: Rational,
    pub sum_a_over_x: Rational,
    pub sum_d_over_x: Rational,
    /// The three ratios summed; always exactly 1.
    pub total: Rational,
    /// `2^(1 - 1/tau) / delta`, bounding `s / |X|` for a tau-critical host.
    pub s_bound: f64,
    /// `eps (eps delta)^(-tau)`, bounding the `A` term.
    pub a_bound: f64,
    /// `(19/20) (eps delta)^(-tau)`, bounding the `D` term.
    pub d_bound: f64,
    /// `s_bound + a_bound + d_bound`.
    pub lhs: f64,
}

pub fn accounting(dec: &Decomposition) -> Result<AccountingReport> {
    if dec.x.is_empty() {
        return Err(Error::precondition("X is empty"));
    }
    let xl = Rational::from_usize(dec.x.len());
    let s_over_x = Rational::from_usize(dec.s()) / xl.clone();
    let sum_a_over_x = Rational::from_usize(dec.rounds.iter().map(|r| r.a.len()).sum()) / xl.clone();
    let sum_d_over_x = Rational::from_usize(dec.rounds.iter().map(|r| r.d.len()).sum()) / xl;
    let total = s_over_x.clone() + sum_a_over_x.clone() + sum_d_over_x.clone();
    assert_eq!(total, Rational::one(), "rounds do not partition X");
    let (eps, delta, tau) = (dec.epsilon.to_f64(), dec.delta.to_f64(), dec.tau.to_f64());
    let s_bound = 2f64.powf(1.0 - 1.0 / tau) / delta;
    let a_bound = eps * (eps * delta).powf(-tau);
    let d_bound = 0.95 * (eps * delta).powf(-tau);
    Ok(AccountingReport {
        s_over_x,
        sum_a_over_x,
        sum_d_over_x,
        total,
        s_bound,
        a_bound,
        d_bound,
        lhs: s_bound + a_bound + d_bound,
    })
}

/// How `comb_with_apex` sets `Gamma` and judges the comb it gets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum ApexRule {
    /// `Gamma = gamma |X| / delta`, keeping combs with `t >= 1/(400 eps)`
    /// and `k >= delta |G| / (400 eps t^2)`.
    Scaled,
    /// A fixed `Gamma`, keeping combs with at least `min_teeth` teeth.
    Fixed { gamma: Rational, min_teeth: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApexComb {
    /// 1-based round index.
    pub round: usize,
    pub comb: Comb,
}

/// Runs the comb dichotomy on `(C_i, D_i)` round by round (with `d = 1/2`)
/// and returns the first comb meeting the rule, with `v_i` as its apex.
pub fn comb_with_apex(g: &Graph, dec: &Decomposition, rule: &ApexRule) -> Result<Option<ApexComb>> {
    let half = Rational::new(1, 2);
    let four_hundred_eps = Rational::from_integer(400) * dec.epsilon.clone();
    let gamma = match rule {
        ApexRule::Scaled => dec.gamma.clone() * Rational::from_usize(dec.x.len()) / dec.delta.clone(),
        ApexRule::Fixed { gamma, .. } => gamma.clone(),
    };
    for (i, r) in dec.rounds.iter().enumerate() {
        if r.c.is_empty() || r.d.is_empty() {
            continue;
        }
        let CombOutcome::CombFound { comb, .. } = extract_comb(g, &r.c, &r.d, &gamma, &half)? else {
            continue;
        };
        let t = Rational::from_usize(comb.t());
        let keep = match rule {
            ApexRule::Scaled => {
                t.clone() * four_hundred_eps.clone() >= Rational::one()
                    && Rational::from_usize(comb.k_min()) * four_hundred_eps.clone() * t.clone() * t
                        >= dec.delta.clone() * Rational::from_usize(g.n())
            }
            ApexRule::Fixed { min_teeth, .. } => comb.t() >= *min_teeth,
        };
        if keep {
            let comb = Comb {
                apex: Some(r.v),
                ..comb
            };
            assert!(comb.is_valid(g), "apex comb failed validation");
            return Ok(Some(ApexComb { round: i + 1, comb }));
        }
    }
    Ok(None)
}

fn check_apex_comb(g: &Graph, comb: &Comb) -> Result<usize> {
    let apex = comb.apex.ok_or_else(|| Error::precondition("comb has no apex"))?;
    if !comb.is_valid(g) {
        return Err(Error::precondition("comb is not valid in this graph"));
    }
    if !g.is_stable(&comb.a_set()) {
        return Err(Error::precondition("the comb's a-vertices are not stable"));
    }
    Ok(apex)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum C5Outcome {
    AnticompleteBlocks { blockade: Blockade },
    /// `map` sends the 5-cycle `0 1 2 3 4` to `v, a_i, b_i, b_j, a_j`.
    C5Witness { i: usize, j: usize, embedding: Embedding },
}

/// For a comb with an apex `v` and stable `a_i`: an edge `b_i b_j` between
/// two teeth closes the induced cycle `v a_i b_i b_j a_j`; otherwise the
/// teeth are pairwise anticomplete.
pub fn c5_scenario(g: &Graph, comb: &Comb) -> Result<C5Outcome> {
    let v = check_apex_comb(g, comb)?;
    let t = comb.t();
    for i in 0..t {
        for j in i + 1..t {
            let (bi, bj) = (&comb.teeth[i].b, &comb.teeth[j].b);
            if let Some(x) = bi.iter().find(|&x| !g.neighbors(x).is_disjoint(bj)) {
                let y = (*g.neighbors(x) & *bj).first().expect("a neighbour exists");
                let embedding = Embedding {
                    map: vec![v, comb.teeth[i].a, x, y, comb.teeth[j].a],
                };
                assert!(embedding.verify(g, &Graph::cycle(5)), "C5 witness is not induced");
                return Ok(C5Outcome::C5Witness { i, j, embedding });
            }
        }
    }
    let blockade = Blockade::new(g, comb.teeth.iter().map(|x| x.b).collect())?;
    for j in 0..t {
        for i in 0..j {
            assert!(g.is_anticomplete_pair(&blockade.blocks()[i], &blockade.blocks()[j]));
        }
    }
    Ok(C5Outcome::AnticompleteBlocks { blockade })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PipelineOutcome {
    /// `u` in `D_j` sees `x` but not `y`, with `xy` an edge inside `D_i`.
    /// The hatted 5-cycle maps `0..5` to `a_i, x, u, a_j, v` and the hat to `y`.
    NotPure {
        i: usize,
        j: usize,
        u: usize,
        x: usize,
        y: usize,
        hat_c5: Embedding,
    },
    /// A triangle meeting three components gives the star-expansion of K3
    /// (`b_1 b_2 b_3`, then `a_1 a_2 a_3`, then `v`), which contains a hatted C5.
    RainbowTriangle {
        blocks: [usize; 3],
        star_expansion: Embedding,
        hat_c5: Embedding,
    },
    /// The components form a pure blockade with a triangle-free pattern.
    Pattern {
        pattern: Graph,
        /// Maximum stable set of the pattern (block indices).
        stable: VertexSet,
        /// `|stable| >= t^(1/2) / 2`.
        meets_sqrt_bound: bool,
        sub_blockade: Blockade,
        /// The tau-bound certificate on the anticomplete sub-blockade.
        parties: Option<EhOutcome>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineReport {
    /// Whether the host avoids both the hatted C5 and its complement.
    pub host_free: bool,
    /// `D_i`: a largest component of `G[B_i]`.
    pub components: Vec<VertexSet>,
    /// `|D_i| >= gamma |G| / t^3` per tooth, when `gamma` was supplied.
    pub component_bounds: Option<Vec<bool>>,
    pub outcome: PipelineOutcome,
}

fn compose(outer: &Embedding, inner: &Embedding) -> Embedding {
    Embedding {
        map: inner.map.iter().map(|&p| outer.map[p]).collect(),
    }
}

/// The hatted-C5 argument on a comb with apex: largest components, purity,
/// rainbow triangles, and a large stable set in the pattern.
pub fn c5hat_pipeline(g: &Graph, comb: &Comb, tau: &Rational, gamma: Option<&Rational>) -> Result<PipelineReport> {
    let v = check_apex_comb(g, comb)?;
    let family: Vec<PatternGraph> = ["hatC5", "co:hatC5"].iter().map(|s| s.parse()).collect::<Result<_>>()?;
    let host_free = is_family_free(g, &family);
    let t = comb.t();
    let components: Vec<VertexSet> = comb
        .teeth
        .iter()
        .map(|x| g.components(&x.b).into_iter().next().unwrap_or_default())
        .collect();
    let component_bounds = gamma.map(|gm| {
        let need = gm.clone() * Rational::from_usize(g.n()) / Rational::from_usize(t.pow(3).max(1));
        components.iter().map(|c| Rational::from_usize(c.len()) >= need).collect()
    });
    let report = |outcome| PipelineReport {
        host_free,
        components: components.clone(),
        component_bounds: component_bounds.clone(),
        outcome,
    };
    let a = |i: usize| comb.teeth[i].a;

    for i in 0..t {
        for j in 0..t {
            if i == j {
                continue;
            }
            let (di, dj) = (&components[i], &components[j]);
            for u in dj.iter() {
                let seen = *g.neighbors(u) & *di;
                if seen.is_empty() || seen == *di {
                    continue;
                }
                let (x, y) = seen
                    .iter()
                    .find_map(|x| ((*g.neighbors(x) & *di) - seen).first().map(|y| (x, y)))
                    .expect("a connected component has an edge leaving N(u)");
                let hat = Embedding {
                    map: vec![a(i), x, u, a(j), v, y],
                };
                assert!(hat.verify(g, &hat_c5()), "purity witness is not an induced hatted C5");
                return Ok(report(PipelineOutcome::NotPure { i, j, u, x, y, hat_c5: hat }));
            }
        }
    }

    let d_blockade = Blockade::new(g, components.clone())?;
    let pattern = pattern_of(g, &d_blockade)?.expect("components are pairwise pure");
    if let Some(tri) = contains_induced(&pattern, &Graph::complete(3)) {
        let [p, q, r] = [tri.map[0], tri.map[1], tri.map[2]];
        let pick = |k: usize| components[k].first().expect("components are nonempty");
        // the rainbow triangle: one vertex from each of the three components
        let (bp, bq, br) = (pick(p), pick(q), pick(r));
        let star = Embedding {
            map: vec![bp, bq, br, a(p), a(q), a(r), v],
        };
        let expansion = star_expansion(&Graph::complete(3));
        assert!(star.verify(g, &expansion), "rainbow triangle does not give the star-expansion");
        let inner = contains_induced(&expansion, &hat_c5()).expect("the star-expansion of K3 contains a hatted C5");
        let hat = compose(&star, &inner);
        assert!(hat.verify(g, &hat_c5()));
        return Ok(report(PipelineOutcome::RainbowTriangle {
            blocks: [p, q, r],
            star_expansion: star,
            hat_c5: hat,
        }));
    }

    let stable = max_stable(&pattern, &pattern.vertices())?;
    let meets_sqrt_bound = 4 * stable.len() * stable.len() >= t;
    assert!(meets_sqrt_bound, "a triangle-free pattern has a stable set of size t^(1/2)/2");
    let sub_blockade = Blockade::new(g, stable.iter().map(|i| components[i]).collect())?;
    let parties = if sub_blockade.is_empty() || sub_blockade.blocks().iter().any(|b| b.len() == g.n()) {
        None
    } else {
        Some(eh_certificate(g, &sub_blockade, tau)?)
    };
    Ok(report(PipelineOutcome::Pattern {
        pattern,
        stable,
        meets_sqrt_bound,
        sub_blockade,
        parties,
    }))
}
