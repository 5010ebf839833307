//! Combs in a bipartite pair `(A, B)` and the stage procedure that either
//! extracts a `(t, Gamma t^(-1/d))`-comb or bounds `|B|`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ge_pow, pow_bounds, Rational};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tooth {
    pub a: usize,
    pub b: VertexSet,
}

/// Teeth `(a_i, B_i)`: `a_i` complete to `B_i` and anticomplete to every
/// other `B_j`. An apex, when present, is adjacent to every `a_i` and to
/// nothing in any `B_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comb {
    pub teeth: Vec<Tooth>,
    pub apex: Option<usize>,
}

impl Comb {
    pub fn t(&self) -> usize {
        self.teeth.len()
    }

    /// Smallest tooth; 0 for the empty comb.
    pub fn k_min(&self) -> usize {
        self.teeth.iter().map(|t| t.b.len()).min().unwrap_or(0)
    }

    pub fn a_set(&self) -> VertexSet {
        self.teeth.iter().map(|t| t.a).collect()
    }

    pub fn b_union(&self) -> VertexSet {
        self.teeth.iter().fold(VertexSet::new(), |acc, t| acc | t.b)
    }

    /// The structural conditions, without size requirements.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let a = self.a_set();
        if a.len() != self.t() || a.iter().any(|v| v >= g.n()) {
            return false;
        }
        let mut seen = VertexSet::new();
        for tooth in &self.teeth {
            if g.check_set(&tooth.b).is_err() || !seen.is_disjoint(&tooth.b) || !a.is_disjoint(&tooth.b) {
                return false;
            }
            seen |= tooth.b;
        }
        for (i, ti) in self.teeth.iter().enumerate() {
            for (j, tj) in self.teeth.iter().enumerate() {
                let hits = g.neighbors(ti.a).intersection_len(&tj.b);
                if (i == j && hits != tj.b.len()) || (i != j && hits != 0) {
                    return false;
                }
            }
        }
        match self.apex {
            None => true,
            Some(v) => {
                v < g.n()
                    && !a.contains(v)
                    && !seen.contains(v)
                    && a.is_subset(g.neighbors(v))
                    && g.neighbors(v).is_disjoint(&seen)
            }
        }
    }
}

/// Valid comb with at least `t_req` teeth, each of size at least `k_req`.
pub fn verify_comb(g: &Graph, comb: &Comb, t_req: usize, k_req: &Rational) -> bool {
    comb.is_valid(g) && comb.t() >= t_req && Rational::from_usize(comb.k_min()) >= *k_req
}

/// `k >= Gamma t^(-1/d)`, exact for exponents with small numerator and
/// denominator; otherwise ties inside the float guard band go against the comb.
pub fn meets_comb_threshold(k: usize, t: usize, gamma: &Rational, d: &Rational) -> bool {
    if t == 0 {
        return false;
    }
    let minus_inv_d = Rational::zero() - d.recip();
    ge_pow(&(Rational::from_usize(k) / gamma), &Rational::from_usize(t), &minus_inv_d)
}

/// One stage of the partition of `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub s: usize,
    /// `a_1, ..., a_k` in selection order.
    pub chosen: Vec<usize>,
    /// The good vertices among `chosen`.
    pub good: Vec<usize>,
    /// `C_s`.
    pub c: VertexSet,
    /// Largest number of neighbours any vertex of `A` keeps in the residual
    /// after this stage.
    pub residual_max: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SparsityCertificate {
    pub gamma: Rational,
    /// `Delta`: the largest number of `B`-neighbours of a vertex in `A`.
    pub delta_cap: usize,
    pub d: Rational,
    pub b_size: usize,
    /// `3^(d+1) / (3/2 - (3/2)^d) * Gamma^d * Delta^(1-d)`.
    pub bound_value: f64,
    /// A rational lower bound on `bound_value`, so `b_size <= bound_lower`
    /// proves the inequality exactly.
    pub bound_lower: Option<Rational>,
    pub stages: Vec<StageRecord>,
}

/// `count >= (2/3)^s delta`, as `count 3^s >= 2^s delta`.
fn three_pow_ge(count: usize, s: usize, delta: usize) -> bool {
    let p3 = 3u128.checked_pow(s as u32).expect("stage index stays small");
    let p2 = 2u128.pow(s as u32);
    count as u128 * p3 >= p2 * delta as u128
}

fn three_pow_le(count: usize, s: usize, delta: usize) -> bool {
    let p3 = 3u128.checked_pow(s as u32).expect("stage index stays small");
    let p2 = 2u128.pow(s as u32);
    count as u128 * p3 <= p2 * delta as u128
}

/// `(3^(d+1) / (3/2 - (3/2)^d)) Gamma^d Delta^(1-d)` as a float and as a
/// certified rational lower bound.
pub fn sparsity_bound(gamma: &Rational, delta: usize, d: &Rational) -> (f64, Option<Rational>) {
    let df = d.to_f64();
    let value = 3f64.powf(df + 1.0) / (1.5 - 1.5f64.powf(df)) * gamma.to_f64().powf(df) * (delta as f64).powf(1.0 - df);
    if delta == 0 {
        return (0.0, Some(Rational::zero()));
    }
    const BITS: u32 = 64;
    let lower = (|| {
        let three_d = pow_bounds(&Rational::from_integer(3), d, BITS)?.0;
        let half_d = pow_bounds(&Rational::new(3, 2), d, BITS)?.0;
        let gamma_d = pow_bounds(gamma, d, BITS)?.0;
        let delta_d = pow_bounds(&Rational::from_usize(delta), &(Rational::one() - d.clone()), BITS)?.0;
        let denom = Rational::new(3, 2) - half_d;
        if !denom.is_positive() {
            return None;
        }
        Some(Rational::from_integer(3) * three_d * gamma_d * delta_d / denom)
    })();
    (value, lower)
}

impl SparsityCertificate {
    /// `|B| <= bound`, exactly when the rational bound is available.
    pub fn bound_holds(&self) -> bool {
        match &self.bound_lower {
            Some(lo) => Rational::from_usize(self.b_size) <= *lo,
            None => (self.b_size as f64) <= self.bound_value * (1.0 - 1e-12),
        }
    }

    /// Replays the trace against the inputs: stage sets partition `B`, each
    /// is covered by its chosen vertices, and after stage `s` every vertex
    /// of `A` has at most `(2/3)^s Delta` neighbours left.
    pub fn verify(&self, g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
        if self.b_size != b.len() || !self.bound_holds() {
            return false;
        }
        let mut residual = *b;
        for st in &self.stages {
            if !st.c.is_subset(&residual) {
                return false;
            }
            let covered = st.chosen.iter().fold(VertexSet::new(), |acc, &x| acc | *g.neighbors(x)) & residual;
            if covered != st.c || !st.chosen.iter().all(|x| a.contains(*x)) {
                return false;
            }
            residual -= st.c;
            if a.iter().any(|x| !three_pow_le(g.neighbors(x).intersection_len(&residual), st.s, self.delta_cap)) {
                return false;
            }
        }
        residual.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum CombOutcome {
    CombFound { comb: Comb, stage: usize },
    SparsityBound(SparsityCertificate),
}

fn check_inputs(g: &Graph, a: &VertexSet, b: &VertexSet, gamma: &Rational, d: &Rational) -> Result<()> {
    g.check_set(a)?;
    g.check_set(b)?;
    if !a.is_disjoint(b) {
        return Err(Error::precondition("A and B overlap"));
    }
    if !(d.is_positive() && *d < Rational::one()) {
        return Err(Error::precondition(format!("d must lie in (0, 1), got {d}")));
    }
    if !gamma.is_positive() {
        return Err(Error::precondition(format!("Gamma must be positive, got {gamma}")));
    }
    let reach = g.neighborhood_of(a);
    if let Some(x) = (*b - reach).first() {
        return Err(Error::precondition(format!("vertex {x} of B has no neighbour in A")));
    }
    Ok(())
}

/// The dichotomy for a bipartite pair `(A, B)` where every vertex of `B`
/// has a neighbour in `A`: a `(t, Gamma t^(-1/d))`-comb, or a certificate
/// that `|B|` is at most the sparsity bound.
///
/// Stage `s` greedily picks `a_1, a_2, ...` each with at least
/// `(2/3)^s Delta` residual neighbours not seen by earlier picks (most such
/// neighbours first, smallest id on ties), runs the backward good-vertex
/// pass, and trims the teeth by the `Q_i` of good vertices. If the largest
/// `j` teeth meet `Gamma j^(-1/d)` for some `j` the comb is returned;
/// otherwise the stage is committed and the next one starts.
pub fn extract_comb(g: &Graph, a: &VertexSet, b: &VertexSet, gamma: &Rational, d: &Rational) -> Result<CombOutcome> {
    check_inputs(g, a, b, gamma, d)?;
    let delta = a.iter().map(|x| g.neighbors(x).intersection_len(b)).max().unwrap_or(0);
    let mut residual = *b;
    let mut stages = Vec::new();
    let mut s = 0;
    while !residual.is_empty() {
        s += 1;
        let d_s = residual;
        let mut covered = VertexSet::new();
        let mut chosen = Vec::new();
        let mut p_sets = Vec::new();
        let mut available = *a;
        loop {
            let best = available
                .iter()
                .map(|x| (g.neighbors(x).intersection_len(&(d_s - covered)), x))
                .max_by(|l, r| l.0.cmp(&r.0).then(r.1.cmp(&l.1)));
            match best {
                Some((count, x)) if count > 0 && three_pow_ge(count, s, delta) => {
                    let p = (*g.neighbors(x) & d_s) - covered;
                    covered |= p;
                    chosen.push(x);
                    p_sets.push(p);
                    available.remove(x);
                }
                _ => break,
            }
        }
        let k = chosen.len();
        let q_sets: Vec<VertexSet> = (0..k).map(|i| (*g.neighbors(chosen[i]) & d_s) - p_sets[i]).collect();
        for q in &q_sets {
            debug_assert!(three_pow_le(2 * q.len(), s, delta));
        }
        let mut good = vec![false; k];
        let mut good_reach = VertexSet::new();
        for i in (0..k).rev() {
            if 2 * p_sets[i].intersection_len(&good_reach) <= p_sets[i].len() {
                good[i] = true;
                good_reach |= *g.neighbors(chosen[i]);
            }
        }
        let good_idx: Vec<usize> = (0..k).filter(|&i| good[i]).collect();
        assert!(2 * good_idx.len() >= k, "fewer than half the chosen vertices are good");
        let q_union = good_idx.iter().fold(VertexSet::new(), |acc, &i| acc | q_sets[i]);
        let teeth: Vec<Tooth> = good_idx
            .iter()
            .map(|&i| Tooth {
                a: chosen[i],
                b: p_sets[i] - q_union,
            })
            .collect();
        for tooth in &teeth {
            assert!(three_pow_ge(2 * tooth.b.len(), s, delta), "tooth below (2/3)^s Delta / 2");
        }
        let mut by_size: Vec<usize> = (0..teeth.len()).collect();
        by_size.sort_by_key(|&i| std::cmp::Reverse(teeth[i].b.len()));
        if let Some(j) = (1..=teeth.len()).find(|&j| meets_comb_threshold(teeth[by_size[j - 1]].b.len(), j, gamma, d)) {
            let mut pick = by_size[..j].to_vec();
            pick.sort_unstable();
            let comb = Comb {
                teeth: pick.into_iter().map(|i| teeth[i].clone()).collect(),
                apex: None,
            };
            assert!(comb.is_valid(g) && meets_comb_threshold(comb.k_min(), comb.t(), gamma, d));
            return Ok(CombOutcome::CombFound { comb, stage: s });
        }
        residual -= covered;
        let residual_max = a.iter().map(|x| g.neighbors(x).intersection_len(&residual)).max().unwrap_or(0);
        assert!(three_pow_le(residual_max, s, delta), "residual degree above (2/3)^s Delta");
        stages.push(StageRecord {
            s,
            good: good_idx.iter().map(|&i| chosen[i]).collect(),
            chosen,
            c: covered,
            residual_max,
        });
    }
    let (bound_value, bound_lower) = sparsity_bound(gamma, delta, d);
    let cert = SparsityCertificate {
        gamma: gamma.clone(),
        delta_cap: delta,
        d: d.clone(),
        b_size: b.len(),
        bound_value,
        bound_lower,
        stages,
    };
    assert!(cert.bound_holds(), "|B| exceeds the sparsity bound");
    Ok(CombOutcome::SparsityBound(cert))
}

/// Largest `|A|` accepted by [`brute_force_best_comb`].
pub const BRUTE_FORCE_A_CAP: usize = 16;

/// `k1 t1^(1/d) > k2 t2^(1/d)`.
fn beats(k1: usize, t1: usize, k2: usize, t2: usize, d: &Rational) -> bool {
    if k1 == 0 {
        return false;
    }
    if k2 == 0 {
        return true;
    }
    let ratio = Rational::from_usize(k2) / Rational::from_usize(k1);
    !ge_pow(&ratio, &(Rational::from_usize(t1) / Rational::from_usize(t2)), &d.recip())
}

/// Exhaustive oracle: over every set `S` of at most `t_cap` vertices of `A`,
/// the comb whose teeth are the private `B`-neighbourhoods, maximising
/// `k_min t^(1/d)`. Any comb on `S` has teeth inside those neighbourhoods,
/// so some comb meets `Gamma t^(-1/d)` iff the returned one does.
pub fn brute_force_best_comb(g: &Graph, a: &VertexSet, b: &VertexSet, d: &Rational, t_cap: usize) -> Result<Option<Comb>> {
    g.check_set(a)?;
    g.check_set(b)?;
    if a.len() > BRUTE_FORCE_A_CAP {
        return Err(Error::SizeCap {
            what: "brute-force comb |A|",
            size: a.len(),
            cap: BRUTE_FORCE_A_CAP,
        });
    }
    let verts = a.to_vec();
    let mut best: Option<(usize, usize, u32)> = None;
    for mask in 1u32..1 << verts.len() {
        let t = mask.count_ones() as usize;
        if t > t_cap {
            continue;
        }
        let members: Vec<usize> = (0..verts.len()).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        let k = private_teeth(g, &members, b).iter().map(|x| x.len()).min().unwrap_or(0);
        if best.is_none_or(|(bk, bt, _)| beats(k, t, bk, bt, d)) && k > 0 {
            best = Some((k, t, mask));
        }
    }
    Ok(best.map(|(_, _, mask)| {
        let members: Vec<usize> = (0..verts.len()).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        let teeth = private_teeth(g, &members, b);
        Comb {
            teeth: members.into_iter().zip(teeth).map(|(a, b)| Tooth { a, b }).collect(),
            apex: None,
        }
    }))
}

fn private_teeth(g: &Graph, members: &[usize], b: &VertexSet) -> Vec<VertexSet> {
    members
        .iter()
        .map(|&x| {
            let others = members.iter().filter(|&&y| y != x).fold(VertexSet::new(), |acc, &y| acc | *g.neighbors(y));
            (*g.neighbors(x) & *b) - others
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    /// Bipartite host with `A = 0..na`, `B = na..na+nb` and the given edges
    /// (pairs of A-index, B-index).
    fn bipartite(na: usize, nb: usize, edges: &[(usize, usize)]) -> (Graph, VertexSet, VertexSet) {
        let mut g = Graph::edgeless(na + nb);
        for &(i, j) in edges {
            g.add_edge(i, na + j).unwrap();
        }
        (g, (0..na).collect(), (na..na + nb).collect())
    }

    fn check_outcome(g: &Graph, a: &VertexSet, b: &VertexSet, gamma: &Rational, d: &Rational, out: &CombOutcome) {
        match out {
            CombOutcome::CombFound { comb, .. } => {
                assert!(comb.is_valid(g));
                assert!(comb.a_set().is_subset(a) && comb.b_union().is_subset(b));
                assert!(comb.t() >= 1 && meets_comb_threshold(comb.k_min(), comb.t(), gamma, d));
            }
            CombOutcome::SparsityBound(cert) => assert!(cert.verify(g, a, b)),
        }
    }

    #[test]
    fn star_gives_single_tooth() {
        let (g, a, b) = bipartite(1, 3, &[(0, 0), (0, 1), (0, 2)]);
        match extract_comb(&g, &a, &b, &q("1"), &q("1/2")).unwrap() {
            CombOutcome::CombFound { comb, stage } => {
                assert_eq!((comb.t(), comb.k_min(), stage), (1, 3, 1));
            }
            other => panic!("{other:?}"),
        }
        let best = brute_force_best_comb(&g, &a, &b, &q("1/2"), 4).unwrap().unwrap();
        assert_eq!((best.t(), best.k_min()), (1, 3));
    }

    #[test]
    fn k33_is_sparse() {
        let g = Graph::complete_bipartite(3, 3);
        let (a, b) = (set(&[0, 1, 2]), set(&[3, 4, 5]));
        let (gamma, d) = (q("4"), q("1/2"));
        let out = extract_comb(&g, &a, &b, &gamma, &d).unwrap();
        check_outcome(&g, &a, &b, &gamma, &d, &out);
        match out {
            CombOutcome::SparsityBound(cert) => {
                assert_eq!(cert.delta_cap, 3);
                assert!((cert.bound_value - 65.39).abs() < 0.01, "{}", cert.bound_value);
                assert!(cert.bound_lower.unwrap().to_f64() <= cert.bound_value * (1.0 + 1e-12));
                assert_eq!(cert.stages.len(), 1);
                assert_eq!(cert.stages[0].chosen, vec![0]);
            }
            other => panic!("{other:?}"),
        }
        let best = brute_force_best_comb(&g, &a, &b, &d, 3).unwrap().unwrap();
        assert_eq!((best.t(), best.k_min()), (1, 3));
        assert!(!meets_comb_threshold(3, 1, &gamma, &d));
    }

    #[test]
    fn leading_constant_below_19() {
        let (value, lower) = sparsity_bound(&q("1"), 1, &q("1/2"));
        assert!((value - 18.8776).abs() < 1e-3);
        assert!(value <= 19.0 + 1e-12);
        assert!(lower.unwrap() <= q("19"));
    }

    #[test]
    fn bound_lower_is_below_float() {
        for (gamma, delta, d) in [("3/2", 7, "1/2"), ("10", 40, "1/3"), ("1/7", 100, "2/3"), ("5", 1, "9/10")] {
            let (value, lower) = sparsity_bound(&q(gamma), delta, &q(d));
            let lo = lower.unwrap().to_f64();
            assert!(lo <= value * (1.0 + 1e-12) && lo >= value * (1.0 - 1e-9), "{gamma} {delta} {d}");
        }
    }

    #[test]
    fn thresholds_are_exact() {
        // Gamma t^(-2) with Gamma = 8, t = 2: k >= 2
        assert!(meets_comb_threshold(2, 2, &q("8"), &q("1/2")));
        assert!(!meets_comb_threshold(1, 2, &q("8"), &q("1/2")));
        // d = 1/3: 8 * 2^(-3) = 1
        assert!(meets_comb_threshold(1, 2, &q("8"), &q("1/3")));
        // d = 2/3: 8 * 8^(-3/2) = 1/sqrt(8) < 1
        assert!(meets_comb_threshold(1, 8, &q("8"), &q("2/3")));
        // 4 * 4^(-3/2) = 1/2
        assert!(!meets_comb_threshold(0, 4, &q("4"), &q("2/3")));
        assert!(!meets_comb_threshold(5, 0, &q("1"), &q("1/2")));
    }

    #[test]
    fn verify_comb_cases() {
        let c6 = Graph::cycle(6);
        let good = Comb {
            teeth: vec![Tooth { a: 0, b: set(&[1]) }, Tooth { a: 3, b: set(&[4]) }],
            apex: None,
        };
        assert!(verify_comb(&c6, &good, 2, &q("1")));
        assert!(!verify_comb(&c6, &good, 3, &q("1")));
        assert!(!verify_comb(&c6, &good, 2, &q("3/2")));
        let bad = Comb {
            teeth: vec![Tooth { a: 1, b: set(&[0]) }, Tooth { a: 3, b: set(&[2]) }],
            apex: None,
        };
        assert!(!verify_comb(&c6, &bad, 1, &q("1")));
        // apex must see every a_i and no tooth vertex
        let p = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (2, 4)]).unwrap();
        let mut c = Comb {
            teeth: vec![Tooth { a: 1, b: set(&[3]) }, Tooth { a: 2, b: set(&[4]) }],
            apex: Some(0),
        };
        assert!(c.is_valid(&p));
        c.apex = Some(3);
        assert!(!c.is_valid(&p));
    }

    #[test]
    fn matching_oracle() {
        let (g, a, b) = bipartite(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        let best = brute_force_best_comb(&g, &a, &b, &q("1/2"), 3).unwrap().unwrap();
        assert_eq!((best.t(), best.k_min()), (3, 1));
        let out = extract_comb(&g, &a, &b, &q("9"), &q("1/2")).unwrap();
        check_outcome(&g, &a, &b, &q("9"), &q("1/2"), &out);
        assert!(matches!(out, CombOutcome::CombFound { ref comb, .. } if comb.t() == 3));
    }

    #[test]
    fn preconditions() {
        let (g, a, b) = bipartite(2, 2, &[(0, 0)]);
        assert!(extract_comb(&g, &a, &b, &q("1"), &q("1/2")).is_err());
        let (g, a, b) = bipartite(2, 2, &[(0, 0), (1, 1)]);
        assert!(extract_comb(&g, &a, &b, &q("1"), &q("1")).is_err());
        assert!(extract_comb(&g, &a, &b, &q("0"), &q("1/2")).is_err());
        assert!(extract_comb(&g, &a, &a, &q("1"), &q("1/2")).is_err());
        let big: VertexSet = (0..17).collect();
        assert!(brute_force_best_comb(&Graph::edgeless(20), &big, &set(&[18]), &q("1/2"), 3).is_err());
    }

    /// A hub adjacent to all of B plus private leaves: the stage procedure
    /// picks the hub alone, its single tooth misses Gamma, and the stage
    /// commits all of B. The certificate is valid, yet a comb on the leaves
    /// clears Gamma t^(-2) by a factor of four.
    #[test]
    fn hub_with_private_leaves_certifies_while_a_comb_exists() {
        let edges: Vec<(usize, usize)> = (0..6).map(|j| (0, j)).chain((0..6).map(|j| (j + 1, j))).collect();
        let (g, a, b) = bipartite(7, 6, &edges);
        let (gamma, d) = (q("9"), q("1/2"));
        let out = extract_comb(&g, &a, &b, &gamma, &d).unwrap();
        check_outcome(&g, &a, &b, &gamma, &d, &out);
        assert!(matches!(out, CombOutcome::SparsityBound(_)));
        let best = brute_force_best_comb(&g, &a, &b, &d, 7).unwrap().unwrap();
        assert_eq!((best.t(), best.k_min()), (6, 1));
        assert!(meets_comb_threshold(best.k_min(), best.t(), &(gamma * q("4")), &d));
    }

    #[test]
    fn empty_stage_is_skipped() {
        // Delta = 4 from vertex 0; at stage 1 only vertex 0 qualifies (needs 8/3),
        // later stages pick up the stragglers of vertex 1.
        let (g, a, b) = bipartite(2, 6, &[(0, 0), (0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
        let out = extract_comb(&g, &a, &b, &q("100"), &q("1/2")).unwrap();
        check_outcome(&g, &a, &b, &q("100"), &q("1/2"), &out);
        match out {
            CombOutcome::SparsityBound(cert) => {
                let sizes: Vec<usize> = cert.stages.iter().map(|s| s.c.len()).collect();
                assert_eq!(sizes.iter().sum::<usize>(), 6);
                assert_eq!(cert.stages[0].chosen, vec![0]);
            }
            other => panic!("{other:?}"),
        }
    }

    fn arb_config() -> impl Strategy<Value = (usize, usize, Vec<bool>, u8, bool)> {
        (1usize..=5, 1usize..=7).prop_flat_map(|(na, nb)| {
            (Just(na), Just(nb), proptest::collection::vec(any::<bool>(), na * nb), 1u8..=40, any::<bool>())
        })
    }

    proptest! {
        #[test]
        fn dichotomy_is_sound((na, nb, bits, gamma, third) in arb_config()) {
            let mut edges = Vec::new();
            for i in 0..na {
                for j in 0..nb {
                    if bits[i * nb + j] { edges.push((i, j)); }
                }
            }
            for j in 0..nb {
                if !(0..na).any(|i| bits[i * nb + j]) { edges.push((j % na, j)); }
            }
            let (g, a, b) = bipartite(na, nb, &edges);
            let gamma = Rational::new(gamma as i64, 4);
            let d = if third { q("1/3") } else { q("1/2") };
            let out = extract_comb(&g, &a, &b, &gamma, &d).unwrap();
            check_outcome(&g, &a, &b, &gamma, &d, &out);
            if let Some(best) = brute_force_best_comb(&g, &a, &b, &d, na).unwrap() {
                prop_assert!(best.is_valid(&g));
                if let CombOutcome::CombFound { comb, .. } = &out {
                    prop_assert!(!beats(comb.k_min(), comb.t(), best.k_min(), best.t(), &d));
                }
            }
        }
    }
}
