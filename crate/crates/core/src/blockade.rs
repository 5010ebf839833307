//! Blockades, pure pairs, patterns and cographs.

use std::cmp::Reverse;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extremal::{max_clique, max_stable};
use crate::graph::Graph;
use crate::rational::{ge_pow, Rational};
use crate::search::{rainbow_copy, Embedding, PatternGraph};
use crate::vertex_set::VertexSet;

/// A sequence of pairwise disjoint vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blockade {
    blocks: Vec<VertexSet>,
    union: VertexSet,
    /// `owner[x]` is the block holding `x`, `usize::MAX` if none.
    owner: Vec<usize>,
}

impl Blockade {
    /// Checks disjointness only; see [`Blockade::check`] for the host range.
    pub fn from_blocks(blocks: Vec<VertexSet>) -> Result<Self> {
        let mut union = VertexSet::new();
        for (i, b) in blocks.iter().enumerate() {
            if !union.is_disjoint(b) {
                return Err(Error::precondition(format!("block {i} overlaps an earlier block")));
            }
            union |= *b;
        }
        let mut owner = vec![usize::MAX; union.last().map_or(0, |v| v + 1)];
        for (i, b) in blocks.iter().enumerate() {
            for x in b {
                owner[x] = i;
            }
        }
        Ok(Blockade { blocks, union, owner })
    }

    pub fn new(g: &Graph, blocks: Vec<VertexSet>) -> Result<Self> {
        let b = Blockade::from_blocks(blocks)?;
        b.check(g)?;
        Ok(b)
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.union)
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Minimum block size; 0 for the empty blockade.
    pub fn width(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).min().unwrap_or(0)
    }

    /// `V(B)`.
    pub fn union(&self) -> VertexSet {
        self.union
    }

    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.owner.get(x).copied().filter(|&i| i != usize::MAX)
    }
}

impl Serialize for Blockade {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Blockade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<VertexSet>::deserialize(deserializer)?;
        Blockade::from_blocks(blocks).map_err(serde::de::Error::custom)
    }
}

/// The quotient graph on block indices, with `i ~ j` iff block `i` is
/// complete to block `j`. `None` unless every pair of blocks is pure.
pub fn pattern_of(g: &Graph, b: &Blockade) -> Result<Option<Graph>> {
    b.check(g)?;
    let t = b.len();
    let mut p = Graph::new(t)?;
    for j in 0..t {
        for i in 0..j {
            let (bi, bj) = (&b.blocks[i], &b.blocks[j]);
            if bi.is_empty() || bj.is_empty() {
                return Ok(None);
            }
            if g.is_complete_pair(bi, bj) {
                p.add_edge(i, j)?;
            } else if !g.is_anticomplete_pair(bi, bj) {
                return Ok(None);
            }
        }
    }
    Ok(Some(p))
}

/// Series/parallel decomposition of a cograph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cotree {
    Leaf(usize),
    /// Children pairwise anticomplete.
    Union(Vec<Cotree>),
    /// Children pairwise complete.
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> VertexSet {
        match self {
            Cotree::Leaf(v) => VertexSet::singleton(*v),
            Cotree::Union(c) | Cotree::Join(c) => c.iter().fold(VertexSet::new(), |acc, t| acc | t.leaves()),
        }
    }
}

fn build_cotree(g: &Graph, gc: &Graph, s: &VertexSet) -> Option<Cotree> {
    if s.len() == 1 {
        return s.first().map(Cotree::Leaf);
    }
    let parts = g.components(s);
    if parts.len() > 1 {
        return parts.iter().map(|c| build_cotree(g, gc, c)).collect::<Option<_>>().map(Cotree::Union);
    }
    let parts = gc.components(s);
    if parts.len() > 1 {
        return parts.iter().map(|c| build_cotree(g, gc, c)).collect::<Option<_>>().map(Cotree::Join);
    }
    None
}

/// The cotree of `g[s]`, or `None` if `g[s]` has an induced `P4`.
pub fn cotree(g: &Graph, s: &VertexSet) -> Option<Cotree> {
    if s.is_empty() {
        return Some(Cotree::Union(Vec::new()));
    }
    build_cotree(g, &g.complement(), s)
}

pub fn is_cograph(p: &Graph) -> bool {
    cotree(p, &p.vertices()).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    Complete,
    Anticomplete,
}

/// One step of the induction: block indices `left` are `kind` to `right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    pub kind: PairKind,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperadditivityReport {
    /// `kappa(V(B))`.
    pub lhs: usize,
    /// `sum of kappa(B_i)`.
    pub rhs: usize,
    pub block_kappas: Vec<usize>,
    pub splits: Vec<Split>,
    /// Stable set and clique in `V(B)` assembled along the splits; their
    /// sizes multiply to at least `rhs`.
    pub witness_stable: VertexSet,
    pub witness_clique: VertexSet,
    pub holds: bool,
}

struct Assembly {
    stable: VertexSet,
    clique: VertexSet,
}

/// Folds a cotree over the blocks: an anticomplete split unions the stable
/// sets and keeps the larger clique, a complete split does the reverse.
fn assemble(tree: &Cotree, base: &[Assembly], splits: &mut Vec<Split>) -> Assembly {
    match tree {
        Cotree::Leaf(i) => Assembly {
            stable: base[*i].stable,
            clique: base[*i].clique,
        },
        Cotree::Union(children) | Cotree::Join(children) => {
            let kind = if matches!(tree, Cotree::Union(_)) {
                PairKind::Anticomplete
            } else {
                PairKind::Complete
            };
            let mut acc = assemble(&children[0], base, splits);
            let mut left = children[0].leaves();
            for child in &children[1..] {
                let right = child.leaves();
                splits.push(Split {
                    kind,
                    left: left.to_vec(),
                    right: right.to_vec(),
                });
                let next = assemble(child, base, splits);
                acc = match kind {
                    PairKind::Anticomplete => Assembly {
                        stable: acc.stable | next.stable,
                        clique: larger(acc.clique, next.clique),
                    },
                    PairKind::Complete => Assembly {
                        stable: larger(acc.stable, next.stable),
                        clique: acc.clique | next.clique,
                    },
                };
                left |= right;
            }
            acc
        }
    }
}

fn larger(a: VertexSet, b: VertexSet) -> VertexSet {
    if b.len() > a.len() {
        b
    } else {
        a
    }
}

fn pure_cograph_tree(g: &Graph, b: &Blockade) -> Result<Cotree> {
    let p = pattern_of(g, b)?.ok_or_else(|| Error::precondition("blockade is not pure"))?;
    if b.is_empty() {
        return Err(Error::precondition("blockade has no blocks"));
    }
    cotree(&p, &p.vertices()).ok_or_else(|| Error::precondition("pattern is not a cograph"))
}

/// Computes both sides of `kappa(V(B)) >= sum kappa(B_i)` for a pure
/// blockade with cograph pattern, with the splits and witness from the
/// inductive argument.
pub fn kappa_superadditive_check(g: &Graph, b: &Blockade) -> Result<SuperadditivityReport> {
    let tree = pure_cograph_tree(g, b)?;
    let base = b
        .blocks()
        .iter()
        .map(|blk| {
            Ok(Assembly {
                stable: max_stable(g, blk)?,
                clique: max_clique(g, blk)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let block_kappas: Vec<usize> = base.iter().map(|a| a.stable.len() * a.clique.len()).collect();
    let rhs = block_kappas.iter().sum();
    let mut splits = Vec::new();
    let witness = assemble(&tree, &base, &mut splits);
    assert!(g.is_stable(&witness.stable) && g.is_clique(&witness.clique));
    let all = b.union();
    let lhs = max_stable(g, &all)?.len() * max_clique(g, &all)?.len();
    Ok(SuperadditivityReport {
        lhs,
        rhs,
        block_kappas,
        splits,
        holds: lhs >= rhs && witness.stable.len() * witness.clique.len() >= rhs,
        witness_stable: witness.stable,
        witness_clique: witness.clique,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhWitness {
    pub tau: Rational,
    pub stable: VertexSet,
    pub clique: VertexSet,
}

impl EhWitness {
    /// Stable set times clique is at least `|G|^tau`.
    pub fn verify(&self, g: &Graph) -> bool {
        g.is_stable(&self.stable)
            && g.is_clique(&self.clique)
            && ge_pow(
                &Rational::from_usize(self.stable.len() * self.clique.len()),
                &Rational::from_usize(g.n()),
                &self.tau,
            )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum EhOutcome {
    Witness(EhWitness),
    /// `width * t^(1/tau) < |G|`.
    TooNarrow { width: usize, length: usize },
    /// Some block has `kappa < |block|^tau`.
    BlockFailsBound { block: usize, kappa: usize, size: usize },
}

/// If a pure cograph-pattern blockade is wide enough and every block meets
/// its own `kappa >= |B_i|^tau` bound, assembles a stable set and clique
/// whose product is at least `|G|^tau`. A tau-critical graph has no such
/// blockade.
pub fn eh_certificate(g: &Graph, b: &Blockade, tau: &Rational) -> Result<EhOutcome> {
    if !tau.is_positive() {
        return Err(Error::precondition(format!("tau must be positive, got {tau}")));
    }
    let tree = pure_cograph_tree(g, b)?;
    if b.blocks().iter().any(|blk| blk.len() == g.n()) {
        return Err(Error::precondition("a block equals V(G)"));
    }
    let (t, w, n) = (b.len(), b.width(), g.n());
    // width >= n t^(-1/tau)  <=>  t >= (n / width)^tau
    let wide = w > 0 && ge_pow(&Rational::from_usize(t), &(Rational::from_usize(n) / Rational::from_usize(w)), tau);
    if !wide {
        return Ok(EhOutcome::TooNarrow { width: w, length: t });
    }
    let mut base = Vec::with_capacity(t);
    for (i, blk) in b.blocks().iter().enumerate() {
        let a = Assembly {
            stable: max_stable(g, blk)?,
            clique: max_clique(g, blk)?,
        };
        let kappa = a.stable.len() * a.clique.len();
        if !ge_pow(&Rational::from_usize(kappa), &Rational::from_usize(blk.len()), tau) {
            return Ok(EhOutcome::BlockFailsBound {
                block: i,
                kappa,
                size: blk.len(),
            });
        }
        base.push(a);
    }
    let assembled = assemble(&tree, &base, &mut Vec::new());
    let witness = EhWitness {
        tau: tau.clone(),
        stable: assembled.stable,
        clique: assembled.clique,
    };
    assert!(witness.verify(g), "assembled witness falls short of |G|^tau");
    Ok(EhOutcome::Witness(witness))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PurePair {
    pub a: VertexSet,
    pub b: VertexSet,
    pub kind: PairKind,
}

impl PurePair {
    pub fn verify(&self, g: &Graph, threshold: usize) -> bool {
        self.a.len() >= threshold
            && self.b.len() >= threshold
            && match self.kind {
                PairKind::Complete => g.is_complete_pair(&self.a, &self.b),
                PairKind::Anticomplete => g.is_anticomplete_pair(&self.a, &self.b),
            }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PurePairSearch {
    pub pair: Option<PurePair>,
    /// False when the node budget ran out, so absence is not proven.
    pub exact: bool,
    pub nodes: u64,
}

/// Default node budget for [`find_pure_pair`]; enough for exhaustive
/// search well beyond 14 vertices.
pub const PURE_PAIR_BUDGET: u64 = 1 << 22;

struct PairSearch<'a> {
    g: &'a Graph,
    domain: VertexSet,
    k: usize,
    nodes: u64,
    budget: u64,
}

impl PairSearch<'_> {
    /// Grows `a` from `rest` (ascending). `anti` and `comp` are the vertices
    /// outside `a` anticomplete / complete to it.
    fn grow(&mut self, a: VertexSet, rest: VertexSet, anti: VertexSet, comp: VertexSet) -> Option<PurePair> {
        self.nodes += 1;
        if a.len() == self.k {
            if anti.len() >= self.k {
                return Some(PurePair { a, b: anti, kind: PairKind::Anticomplete });
            }
            if comp.len() >= self.k {
                return Some(PurePair { a, b: comp, kind: PairKind::Complete });
            }
            return None;
        }
        for v in rest.iter() {
            if self.nodes >= self.budget || a.len() + (rest.above(v).len() + 1) < self.k {
                return None;
            }
            let nv = *self.g.neighbors(v);
            let anti2 = (anti - nv) - VertexSet::singleton(v);
            let comp2 = (comp & nv) - VertexSet::singleton(v);
            if anti2.len() < self.k && comp2.len() < self.k {
                continue;
            }
            let mut a2 = a;
            a2.insert(v);
            if let Some(p) = self.grow(a2, rest.above(v), anti2, comp2) {
                return Some(p);
            }
        }
        None
    }
}

/// A pure pair `(A, B)` of `g[domain]` with `|A|, |B| >= threshold`.
///
/// Branch and bound over `A`; `B` is then every vertex pure to `A` on the
/// chosen side. Exhaustive unless `budget` nodes are spent first.
pub fn find_pure_pair_in(g: &Graph, domain: &VertexSet, threshold: usize, budget: u64) -> Result<PurePairSearch> {
    g.check_set(domain)?;
    let mut search = PairSearch {
        g,
        domain: *domain,
        k: threshold,
        nodes: 0,
        budget,
    };
    let pair = if 2 * threshold > domain.len() {
        None
    } else {
        search.grow(VertexSet::new(), search.domain, search.domain, search.domain)
    };
    if let Some(p) = &pair {
        assert!(p.verify(g, threshold));
    }
    Ok(PurePairSearch {
        exact: pair.is_some() || search.nodes < budget,
        pair,
        nodes: search.nodes,
    })
}

pub fn find_pure_pair(g: &Graph, threshold: usize) -> PurePairSearch {
    find_pure_pair_in(g, &g.vertices(), threshold, PURE_PAIR_BUDGET).expect("full vertex set is in range")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum BlockpartyOutcome {
    PureBlockade { blockade: Blockade, pattern: Graph },
    RainbowCopy { pattern: String, embedding: Embedding },
}

/// `2^(s-1) d^(2s-1)`.
pub fn blockparty_length(d: usize, s: usize) -> Option<usize> {
    let e = u32::try_from(2 * s - 1).ok()?;
    2usize.checked_pow(u32::try_from(s - 1).ok()?)?.checked_mul(d.checked_pow(e)?)
}

struct Party<'a> {
    g: &'a Graph,
    h: &'a PatternGraph,
    co_h: PatternGraph,
    d: usize,
    budget: u64,
}

impl Party<'_> {
    fn rainbow(&self, b: &Blockade) -> Result<Option<BlockpartyOutcome>> {
        for p in [self.h, &self.co_h] {
            if let Some(embedding) = rainbow_copy(self.g, b, &p.graph)? {
                return Ok(Some(BlockpartyOutcome::RainbowCopy {
                    pattern: p.name.clone(),
                    embedding,
                }));
            }
        }
        Ok(None)
    }

    fn pure_pair(&self, domain: &VertexSet, threshold: usize) -> Result<PurePair> {
        let found = find_pure_pair_in(self.g, domain, threshold, self.budget)?;
        match found.pair {
            Some(p) => Ok(p),
            None if found.exact => Err(Error::SearchFailed(format!(
                "no rainbow copy and no pure pair with both sides >= {threshold} in {} vertices",
                domain.len()
            ))),
            None => Err(Error::SizeCap {
                what: "pure pair search nodes",
                size: found.nodes as usize,
                cap: self.budget as usize,
            }),
        }
    }

    fn run(&self, b: &Blockade, s: usize) -> Result<BlockpartyOutcome> {
        let d = self.d;
        let len = blockparty_length(d, s).expect("checked by caller");
        // Keep the first `len` blocks, each cut down to the common width.
        let w = b.blocks()[..len].iter().map(|x| x.len()).min().unwrap_or(0);
        let b = Blockade::from_blocks(b.blocks()[..len].iter().map(|x| x.take_smallest(w)).collect())?;
        let domain = b.union();
        if s == 1 {
            if let Some(hit) = self.rainbow(&b)? {
                return Ok(hit);
            }
            let pair = self.pure_pair(&domain, w.div_ceil(d))?;
            let blockade = Blockade::from_blocks(vec![pair.a, pair.b])?;
            let mut pattern = Graph::edgeless(2);
            if pair.kind == PairKind::Complete {
                pattern.add_edge(0, 1)?;
            }
            return Ok(BlockpartyOutcome::PureBlockade { blockade, pattern });
        }
        let mut groups = vec![VertexSet::new(); d];
        for (i, blk) in b.blocks().iter().enumerate() {
            groups[i % d] |= *blk;
        }
        if let Some(hit) = self.rainbow(&Blockade::from_blocks(groups)?)? {
            return Ok(hit);
        }
        let pair = self.pure_pair(&domain, (w * len).div_ceil(d * d))?;
        let sub_len = len / (2 * d * d);
        let mut halves = Vec::with_capacity(2);
        for side in [pair.a, pair.b] {
            let mut pieces: Vec<(usize, VertexSet)> =
                b.blocks().iter().map(|blk| *blk & side).enumerate().collect();
            pieces.sort_by_key(|(i, p)| (Reverse(p.len()), *i));
            pieces.truncate(sub_len);
            pieces.sort_by_key(|(i, _)| *i);
            let sub = Blockade::from_blocks(pieces.into_iter().map(|(_, p)| p).collect())?;
            match self.run(&sub, s - 1)? {
                BlockpartyOutcome::PureBlockade { blockade, pattern } => halves.push((blockade, pattern)),
                hit => return Ok(hit),
            }
        }
        let (right, right_pattern) = halves.pop().expect("two halves");
        let (left, left_pattern) = halves.pop().expect("two halves");
        let pattern = match pair.kind {
            PairKind::Complete => left_pattern.join(&right_pattern)?,
            PairKind::Anticomplete => left_pattern.disjoint_union(&right_pattern)?,
        };
        let blocks = left.blocks().iter().chain(right.blocks()).copied().collect();
        Ok(BlockpartyOutcome::PureBlockade {
            blockade: Blockade::from_blocks(blocks)?,
            pattern,
        })
    }
}

/// Either a pure blockade of length `2^s` with cograph pattern and width at
/// least `W / (2^(s-1) d^(2s-1))`, or a `b`-rainbow copy of `h` or its
/// complement.
///
/// Rainbow copies and pure pairs are found by exhaustive search, so the
/// dichotomy can fail for a `d` that is too small, and large inputs can hit
/// the search budget.
pub fn blockparty(g: &Graph, b: &Blockade, h: &PatternGraph, d: usize, s: usize, budget: u64) -> Result<BlockpartyOutcome> {
    b.check(g)?;
    if d == 0 || s == 0 {
        return Err(Error::precondition("d and s must be positive"));
    }
    let len = blockparty_length(d, s).ok_or_else(|| Error::precondition("2^(s-1) d^(2s-1) overflows"))?;
    if b.len() < len {
        return Err(Error::precondition(format!(
            "blockade has {} blocks, need 2^(s-1) d^(2s-1) = {len}",
            b.len()
        )));
    }
    let party = Party {
        g,
        h,
        co_h: h.complement(),
        d,
        budget,
    };
    let out = party.run(b, s)?;
    match &out {
        BlockpartyOutcome::PureBlockade { blockade, pattern } => {
            assert_eq!(blockade.len(), 1 << s);
            assert_eq!(pattern_of(g, blockade)?.as_ref(), Some(pattern));
            assert!(is_cograph(pattern));
        }
        BlockpartyOutcome::RainbowCopy { embedding, .. } => assert!(embedding.is_rainbow(b)),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::kappa;
    use crate::search::contains_induced;
    use crate::testutil::{arb_graph, random_graph};
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn blockade(g: &Graph, blocks: &[&[usize]]) -> Blockade {
        Blockade::new(g, blocks.iter().map(|b| set(b)).collect()).unwrap()
    }

    #[test]
    fn construction() {
        let g = Graph::path(5);
        let b = blockade(&g, &[&[0, 1], &[3]]);
        assert_eq!((b.len(), b.width()), (2, 1));
        assert_eq!(b.block_of(3), Some(1));
        assert_eq!(b.block_of(2), None);
        assert_eq!(b.block_of(99), None);
        assert!(Blockade::new(&g, vec![set(&[0, 1]), set(&[1])]).is_err());
        assert!(Blockade::new(&g, vec![set(&[7])]).is_err());
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, "[[0,1],[3]]");
        assert_eq!(serde_json::from_str::<Blockade>(&json).unwrap(), b);
        assert!(serde_json::from_str::<Blockade>("[[0],[0]]").is_err());
    }

    #[test]
    fn patterns() {
        let k33 = Graph::complete_bipartite(3, 3);
        let p = pattern_of(&k33, &blockade(&k33, &[&[0, 1, 2], &[3, 4, 5]])).unwrap();
        assert_eq!(p, Some(Graph::complete(2)));
        let p3 = Graph::path(3);
        assert_eq!(pattern_of(&p3, &blockade(&p3, &[&[0], &[2]])).unwrap(), Some(Graph::edgeless(2)));
        let p4 = Graph::path(4);
        assert_eq!(pattern_of(&p4, &blockade(&p4, &[&[0, 1], &[2, 3]])).unwrap(), None);
    }

    #[test]
    fn cographs() {
        assert!(!is_cograph(&Graph::path(4)));
        assert!(is_cograph(&Graph::cycle(4)));
        assert!(!is_cograph(&Graph::cycle(5)));
        assert!(is_cograph(&Graph::complete(5)));
        assert!(is_cograph(&Graph::edgeless(0)));
        let t = cotree(&Graph::cycle(4), &Graph::cycle(4).vertices()).unwrap();
        assert!(matches!(t, Cotree::Join(ref c) if c.len() == 2));
    }

    #[test]
    fn superadditivity_examples() {
        let two_c5 = Graph::cycle(5).disjoint_union(&Graph::cycle(5)).unwrap();
        let r = kappa_superadditive_check(&two_c5, &blockade(&two_c5, &[&[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]])).unwrap();
        assert_eq!((r.lhs, r.rhs), (8, 8));
        assert!(r.holds);
        assert_eq!(r.splits, vec![Split { kind: PairKind::Anticomplete, left: vec![0], right: vec![1] }]);

        let k4 = Graph::complete(4);
        let r = kappa_superadditive_check(&k4, &blockade(&k4, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 4));

        let c5 = Graph::cycle(5);
        let r = kappa_superadditive_check(&c5, &blockade(&c5, &[&[0, 1, 2, 3, 4]])).unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 4));
        assert!(r.splits.is_empty());

        let p4 = Graph::path(4);
        let single: Vec<&[usize]> = vec![&[0], &[1], &[2], &[3]];
        assert!(kappa_superadditive_check(&p4, &blockade(&p4, &single)).is_err());
        assert!(kappa_superadditive_check(&p4, &blockade(&p4, &[&[0, 1], &[2, 3]])).is_err());
    }

    #[test]
    fn eh_examples() {
        let g = Graph::perfect_matching(2);
        let b = blockade(&g, &[&[0, 1], &[2, 3]]);
        for tau in ["1/2", "1"] {
            let tau: Rational = tau.parse().unwrap();
            match eh_certificate(&g, &b, &tau).unwrap() {
                EhOutcome::Witness(w) => {
                    assert!(w.verify(&g));
                    assert_eq!((w.stable.len(), w.clique.len()), (2, 2));
                }
                other => panic!("{other:?}"),
            }
        }
        // kappa(C5) = 4 < 5^(9/10)
        let two_c5 = Graph::cycle(5).disjoint_union(&Graph::cycle(5)).unwrap();
        let b = blockade(&two_c5, &[&[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]]);
        let r = eh_certificate(&two_c5, &b, &"9/10".parse().unwrap()).unwrap();
        assert_eq!(r, EhOutcome::BlockFailsBound { block: 0, kappa: 4, size: 5 });
        // 2 < (9/1)^(1/2)
        let e9 = Graph::edgeless(9);
        let b = blockade(&e9, &[&[0], &[1]]);
        let r = eh_certificate(&e9, &b, &"1/2".parse().unwrap()).unwrap();
        assert_eq!(r, EhOutcome::TooNarrow { width: 1, length: 2 });
        let whole = blockade(&g, &[&[0, 1, 2, 3]]);
        assert!(eh_certificate(&g, &whole, &"1/2".parse().unwrap()).is_err());
    }

    fn brute_pure_pair(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let all: Vec<VertexSet> = (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
            .collect();
        all.iter().any(|a| {
            all.iter()
                .any(|b| a.is_disjoint(b) && (g.is_complete_pair(a, b) || g.is_anticomplete_pair(a, b)))
        })
    }

    #[test]
    fn pure_pair_examples() {
        let e6 = Graph::edgeless(6);
        assert!(find_pure_pair(&e6, 3).pair.is_some());
        let c5 = find_pure_pair(&Graph::cycle(5), 2);
        assert!(c5.pair.is_none() && c5.exact);
        assert!(!brute_pure_pair(&Graph::cycle(5), 2));
        let k33 = Graph::complete_bipartite(3, 3);
        let p = find_pure_pair(&k33, 3).pair.unwrap();
        assert!(p.verify(&k33, 3));
        assert_eq!(find_pure_pair(&Graph::edgeless(5), 3).pair, None);
        for seed in 0..10 {
            let g = random_graph(10, 0.5, seed);
            for k in 2..=4 {
                let r = find_pure_pair(&g, k);
                assert!(r.exact);
                assert_eq!(r.pair.is_some(), brute_pure_pair(&g, k), "seed {seed} k {k}");
            }
        }
        let tiny = find_pure_pair_in(&Graph::cycle(12), &Graph::cycle(12).vertices(), 5, 3).unwrap();
        assert!(!tiny.exact);
    }

    #[test]
    fn blockparty_examples() {
        let p4: PatternGraph = "P4".parse().unwrap();
        let e = Graph::edgeless(4);
        let b = blockade(&e, &[&[0, 1], &[2, 3]]);
        match blockparty(&e, &b, &p4, 2, 1, PURE_PAIR_BUDGET).unwrap() {
            BlockpartyOutcome::PureBlockade { blockade, pattern } => {
                assert_eq!(blockade.len(), 2);
                assert_eq!(pattern, Graph::edgeless(2));
            }
            other => panic!("{other:?}"),
        }

        let k2: PatternGraph = "K2".parse().unwrap();
        let g = Graph::from_edges(4, &[(1, 2)]).unwrap();
        let b = blockade(&g, &[&[0, 1], &[2, 3]]);
        let out = blockparty(&g, &b, &k2, 2, 1, PURE_PAIR_BUDGET).unwrap();
        assert!(matches!(out, BlockpartyOutcome::RainbowCopy { ref pattern, .. } if pattern == "K2"));

        // s = 2, d = 2: 16 blocks of width 4 in an edgeless host
        let e = Graph::edgeless(64);
        let blocks = (0..16).map(|i| (4 * i..4 * i + 4).collect()).collect();
        let b = Blockade::new(&e, blocks).unwrap();
        match blockparty(&e, &b, &p4, 2, 2, PURE_PAIR_BUDGET).unwrap() {
            BlockpartyOutcome::PureBlockade { blockade, pattern } => {
                assert_eq!(blockade.len(), 4);
                assert!(blockade.width() * 16 >= 4);
                assert_eq!(pattern, Graph::edgeless(4));
            }
            other => panic!("{other:?}"),
        }

        assert!(blockparty(&e, &b, &p4, 2, 3, PURE_PAIR_BUDGET).is_err());
        assert_eq!(blockparty_length(2, 2), Some(16));
        assert_eq!(blockparty_length(3, 1), Some(3));
    }

    #[test]
    fn blockparty_on_random_hosts() {
        let h: PatternGraph = "P3".parse().unwrap();
        for seed in 0..20 {
            let g = random_graph(48, 0.5, seed);
            let blocks = (0..16).map(|i| (3 * i..3 * i + 3).collect()).collect();
            let b = Blockade::new(&g, blocks).unwrap();
            match blockparty(&g, &b, &h, 2, 2, PURE_PAIR_BUDGET) {
                Ok(BlockpartyOutcome::PureBlockade { blockade, .. }) => assert!(blockade.width() * 16 >= 3),
                Ok(BlockpartyOutcome::RainbowCopy { pattern, embedding }) => {
                    let p: PatternGraph = pattern.parse().unwrap();
                    assert!(embedding.verify(&g, &p.graph));
                }
                Err(Error::SearchFailed(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }

    /// A random cograph on `t` vertices by series/parallel composition.
    fn random_cograph(t: usize, choices: &[bool]) -> Graph {
        let mut parts: Vec<Graph> = (0..t).map(|_| Graph::edgeless(1)).collect();
        let mut k = 0;
        while parts.len() > 1 {
            let b = parts.pop().unwrap();
            let a = parts.pop().unwrap();
            let joined = if choices[k % choices.len()] { a.join(&b) } else { a.disjoint_union(&b) };
            parts.insert(0, joined.unwrap());
            k += 1;
        }
        parts.pop().unwrap_or_else(|| Graph::edgeless(0))
    }

    proptest! {
        #[test]
        fn cotree_agrees_with_p4_search(g in arb_graph(9)) {
            prop_assert_eq!(is_cograph(&g), contains_induced(&g, &Graph::path(4)).is_none());
        }

        #[test]
        fn pattern_matches_pairwise_checks(g in arb_graph(9), labels in proptest::collection::vec(0usize..4, 9)) {
            let mut blocks = vec![VertexSet::new(); 3];
            for x in 0..g.n() {
                if labels[x] < 3 { blocks[labels[x]].insert(x); }
            }
            blocks.retain(|b| !b.is_empty());
            let b = Blockade::new(&g, blocks.clone()).unwrap();
            let pure = (0..blocks.len()).all(|j| (0..j).all(|i|
                g.is_complete_pair(&blocks[i], &blocks[j]) || g.is_anticomplete_pair(&blocks[i], &blocks[j])));
            let p = pattern_of(&g, &b).unwrap();
            prop_assert_eq!(p.is_some(), pure);
            if let Some(p) = p {
                prop_assert_eq!(pattern_of(&g.complement(), &b).unwrap(), Some(p.complement()));
            }
        }

        #[test]
        fn superadditivity_holds(t in 1usize..5, choices in proptest::collection::vec(any::<bool>(), 4),
                                 blocks in proptest::collection::vec(arb_graph(5), 5)) {
            let pattern = random_cograph(t, &choices);
            let parts: Vec<Graph> = blocks.into_iter().take(t).filter(|g| g.n() > 0).collect();
            prop_assume!(parts.len() == t);
            let mut host = Graph::edgeless(0);
            let mut sets = Vec::new();
            for p in &parts {
                let off = host.n();
                host = host.disjoint_union(p).unwrap();
                sets.push((off..host.n()).collect::<VertexSet>());
            }
            for j in 0..t {
                for i in 0..j {
                    if pattern.adjacent(i, j) {
                        for u in sets[i] { for v in sets[j] { host.add_edge(u, v).unwrap(); } }
                    }
                }
            }
            let b = Blockade::new(&host, sets).unwrap();
            let r = kappa_superadditive_check(&host, &b).unwrap();
            prop_assert!(r.holds);
            prop_assert_eq!(r.lhs, kappa(&host, &host.vertices()).unwrap().kappa);
        }
    }
}
