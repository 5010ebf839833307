//! Named pattern graphs and induced-subgraph search.
//!
//! One backtracking engine serves both plain induced search and rainbow
//! search inside a blockade; the latter just forbids reusing a block.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::blockade::Blockade;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `h` plus a pendant `a_i` on each vertex `b_i` and a vertex `v` adjacent
/// to every `a_i`. Layout: `b_i = i`, `a_i = k + i`, `v = 2k`.
pub fn star_expansion(h: &Graph) -> Graph {
    let k = h.n();
    let mut g = Graph::edgeless(2 * k + 1);
    for (u, w) in h.edges() {
        g.add_edge(u, w).expect("in range");
    }
    for i in 0..k {
        g.add_edge(i, k + i).expect("in range");
        g.add_edge(k + i, 2 * k).expect("in range");
    }
    g
}

/// A 5-cycle `0..5` plus vertex 5 adjacent to the consecutive vertices 0 and 1.
pub fn hat_c5() -> Graph {
    let mut g = Graph::edgeless(6);
    for (u, v) in Graph::cycle(5).edges() {
        g.add_edge(u, v).expect("in range");
    }
    g.add_edge(5, 0).expect("in range");
    g.add_edge(5, 1).expect("in range");
    g
}

/// Triangle `0 1 2` with pendants `3 - 0` and `4 - 1`.
pub fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).expect("in range")
}

/// A small graph with the name it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    pub name: String,
    pub graph: Graph,
}

impl PatternGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        PatternGraph {
            name: name.into(),
            graph,
        }
    }

    pub fn complement(&self) -> PatternGraph {
        PatternGraph::new(format!("co:{}", self.name), self.graph.complement())
    }
}

fn base_pattern(s: &str) -> Option<Graph> {
    match s {
        "bull" => return Some(bull()),
        "hatC5" | "hat_c5" => return Some(hat_c5()),
        "petersen" => return Some(Graph::petersen()),
        _ => {}
    }
    let mut chars = s.chars();
    let kind = chars.next()?;
    let k: usize = chars.as_str().parse().ok()?;
    if k > 64 {
        return None;
    }
    match kind {
        'C' if k >= 3 => Some(Graph::cycle(k)),
        'P' if k >= 1 => Some(Graph::path(k)),
        'K' => Some(Graph::complete(k)),
        'E' => Some(Graph::edgeless(k)),
        _ => None,
    }
}

impl FromStr for PatternGraph {
    type Err = Error;

    /// Accepts `C5`, `P4`, `K3`, `E2`, `bull`, `hatC5`, `petersen`, and the
    /// prefixes `co:` and `star:` applied right to left.
    fn from_str(s: &str) -> Result<Self> {
        let name = s.trim();
        let graph = if let Some(rest) = name.strip_prefix("co:") {
            rest.parse::<PatternGraph>()?.graph.complement()
        } else if let Some(rest) = name.strip_prefix("star:") {
            star_expansion(&rest.parse::<PatternGraph>()?.graph)
        } else {
            base_pattern(name).ok_or_else(|| Error::UnknownPattern(name.to_string()))?
        };
        Ok(PatternGraph::new(name, graph))
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Serialize for PatternGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name)
    }
}

/// `map[p]` is the host vertex playing pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }

    /// Injective, and adjacency and non-adjacency both preserved.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        let n = h.n();
        self.map.len() == n
            && self.map.iter().all(|&x| x < g.n())
            && self.image().len() == n
            && (0..n).all(|p| (0..p).all(|q| h.adjacent(p, q) == g.adjacent(self.map[p], self.map[q])))
    }

    /// Every image vertex lies in some block, no two in the same block.
    pub fn is_rainbow(&self, b: &Blockade) -> bool {
        let mut seen = Vec::new();
        for &x in &self.map {
            match b.block_of(x) {
                Some(i) if !seen.contains(&i) => seen.push(i),
                _ => return false,
            }
        }
        true
    }
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    domain: VertexSet,
    /// For rainbow search: the block containing each host vertex.
    blocks: Option<&'a Blockade>,
    host_deg: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, domain: VertexSet, blocks: Option<&'a Blockade>) -> Self {
        // Most-constrained-first: each next pattern vertex has the most
        // already-placed neighbours, then the highest degree.
        let k = h.n();
        let mut order = Vec::with_capacity(k);
        let mut placed = VertexSet::new();
        for _ in 0..k {
            let next = (0..k)
                .filter(|p| !placed.contains(*p))
                .max_by_key(|&p| (h.neighbors(p).intersection_len(&placed), h.degree(p), std::cmp::Reverse(p)))
                .expect("unplaced vertex remains");
            order.push(next);
            placed.insert(next);
        }
        let host_deg = (0..g.n()).map(|x| g.degree_in(x, &domain)).collect();
        Matcher {
            g,
            h,
            order,
            domain,
            blocks,
            host_deg,
        }
    }

    fn run(&self) -> Option<Embedding> {
        if self.h.n() > self.domain.len() {
            return None;
        }
        let mut map = vec![usize::MAX; self.h.n()];
        if self.extend(0, &mut map, VertexSet::new()) {
            Some(Embedding { map })
        } else {
            None
        }
    }

    fn extend(&self, depth: usize, map: &mut [usize], forbidden: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.domain - forbidden;
        for &q in &self.order[..depth] {
            if self.h.adjacent(p, q) {
                cand &= *self.g.neighbors(map[q]);
            } else {
                cand -= *self.g.neighbors(map[q]);
            }
        }
        let deg = self.h.degree(p);
        let non_deg = self.h.n() - 1 - deg;
        let dom = self.domain.len();
        for x in cand.iter() {
            let hd = self.host_deg[x];
            if hd < deg || dom - 1 - hd < non_deg {
                continue;
            }
            let used = match self.blocks {
                Some(b) => b.blocks()[b.block_of(x).expect("domain is V(b)")],
                None => VertexSet::singleton(x),
            };
            map[p] = x;
            if self.extend(depth + 1, map, forbidden | used) {
                return true;
            }
        }
        false
    }
}

/// An induced copy of `h` inside `g[domain]`, if one exists.
pub fn find_induced_in(g: &Graph, domain: &VertexSet, h: &Graph) -> Result<Option<Embedding>> {
    g.check_set(domain)?;
    let found = Matcher::new(g, h, *domain, None).run();
    if let Some(e) = &found {
        assert!(e.verify(g, h), "induced search returned a non-embedding");
    }
    Ok(found)
}

/// An induced copy of `h` in `g`, if one exists.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Embedding> {
    find_induced_in(g, &g.vertices(), h).expect("full vertex set is in range")
}

/// An induced copy of `h` inside `V(b)` using each block at most once.
pub fn rainbow_copy(g: &Graph, b: &Blockade, h: &Graph) -> Result<Option<Embedding>> {
    b.check(g)?;
    let found = Matcher::new(g, h, b.union(), Some(b)).run();
    if let Some(e) = &found {
        assert!(e.verify(g, h), "rainbow search returned a non-embedding");
        assert!(e.is_rainbow(b), "rainbow search reused a block");
    }
    Ok(found)
}

/// True iff `g` contains no member of `family` as an induced subgraph.
pub fn is_family_free(g: &Graph, family: &[PatternGraph]) -> bool {
    family.iter().all(|p| contains_induced(g, &p.graph).is_none())
}
