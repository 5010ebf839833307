//! Finite simple graphs on `0..n` with bitset neighbourhoods.

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An undirected graph without loops or parallel edges.
///
/// Symmetry and irreflexivity are maintained by every constructor, so all
/// methods may assume them.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Number of neighbours of `v` inside `s`.
    #[inline]
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.adj[v].intersection_len(s)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].above(u).iter().map(move |v| (u, v)))
            .collect()
    }

    /// Number of edges of `g[s]`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).sum::<usize>() / 2
    }

    /// Union of the neighbourhoods of the members of `s`.
    pub fn neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::new(), |acc, v| acc | self.adj[v])
    }

    /// Vertices adjacent to every member of `s` (all vertices if `s` is empty).
    pub fn common_neighbors(&self, s: &VertexSet) -> VertexSet {
        s.iter().fold(self.vertices(), |acc, v| acc & self.adj[v])
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n() => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n())
            .map(|v| {
                let mut s = all - self.adj[v];
                s.remove(v);
                s
            })
            .collect();
        Graph { adj }
    }

    /// `g[s]` relabelled onto `0..|s|`; `map[i]` is the host vertex of new vertex `i`.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & *s).iter().map(|u| index[u]).collect())
            .collect();
        Ok((Graph { adj }, map))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::new(); self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = *s;
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// `a` and `b` are disjoint and every cross pair is adjacent.
    pub fn is_complete_pair(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.is_disjoint(b) && a.iter().all(|v| b.is_subset(&self.adj[v]))
    }

    /// `a` and `b` are disjoint and no cross pair is adjacent.
    pub fn is_anticomplete_pair(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.is_disjoint(b) && a.iter().all(|v| self.adj[v].is_disjoint(b))
    }

    /// Connected components of `g[s]`, largest first; ties go to the
    /// component holding the smaller vertex.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = *s;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = (self.neighborhood_of(&frontier) & rest) - comp;
                comp |= next;
                frontier = next;
            }
            rest -= comp;
            out.push(comp);
        }
        // stable sort keeps discovery order (= min-vertex order) among equal sizes
        out.sort_by_key(|c| std::cmp::Reverse(c.len()));
        out
    }

    pub fn is_connected(&self, s: &VertexSet) -> bool {
        self.components(s).len() <= 1
    }

    /// Maximum over `v in s` of `|N(v) ∩ s|`; zero for empty `s`.
    pub fn max_degree(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).max().unwrap_or(0)
    }

    /// Vertex of maximum degree in `g[s]`, smallest id on ties.
    pub fn max_degree_vertex(&self, s: &VertexSet) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in s {
            let d = self.degree_in(v, s);
            if best.is_none_or(|(bd, _)| d > bd) {
                best = Some((d, v));
            }
        }
        best.map(|(_, v)| v)
    }

    /// Vertices `0..n` followed by `other` shifted by `n`; no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n();
        let mut g = Graph::new(n + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n, v + n)?;
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n();
        let mut g = self.disjoint_union(other)?;
        for u in 0..n {
            for v in 0..other.n() {
                g.add_edge(u, v + n)?;
            }
        }
        Ok(g)
    }

    // Named graphs. These panic only if asked for more than MAX_VERTICES vertices.

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n).expect("vertex count within capacity")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::edgeless(n).complement()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// Cycle `0-1-...-(n-1)-0`; for `n < 3` this is the path.
    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("valid cycle");
        }
        g
    }

    /// Sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::edgeless(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).expect("valid bipartite edge");
            }
        }
        g
    }

    /// `k` disjoint edges `(2i, 2i+1)`.
    pub fn perfect_matching(k: usize) -> Graph {
        let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edges(2 * k, &edges).expect("valid matching")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("valid petersen")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn complement_examples() {
        let c5 = Graph::cycle(5);
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
        assert!(cc.is_connected(&cc.vertices()));
        assert_eq!(Graph::complete(4).complement(), Graph::edgeless(4));
    }

    #[test]
    fn induced_examples() {
        let c5 = Graph::cycle(5);
        let (p, map) = c5.induced(&[0, 1, 2, 3].iter().collect()).unwrap();
        assert_eq!(p, Graph::path(4));
        assert_eq!(map, vec![0, 1, 2, 3]);
        let (e, map) = c5.induced(&VertexSet::new()).unwrap();
        assert_eq!(e.n(), 0);
        assert!(map.is_empty());
        let (same, _) = c5.induced(&c5.vertices()).unwrap();
        assert_eq!(same, c5);
        assert_eq!(
            c5.induced(&VertexSet::singleton(7)),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        );
    }

    #[test]
    fn pair_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        let a: VertexSet = (0..3).collect();
        let b: VertexSet = (3..6).collect();
        assert!(k33.is_complete_pair(&a, &b));
        assert!(!k33.is_anticomplete_pair(&a, &b));
        let e = Graph::edgeless(4);
        assert!(e.is_anticomplete_pair(&[0, 1].iter().collect(), &[2, 3].iter().collect()));
        assert!(!k33.is_complete_pair(&a, &a));
        assert!(!k33.is_anticomplete_pair(&a, &a));
        assert!(!e.is_anticomplete_pair(&a, &a));
    }

    #[test]
    fn component_examples() {
        let p4 = Graph::path(4);
        assert_eq!(p4.components(&p4.vertices()), vec![p4.vertices()]);
        let m = Graph::perfect_matching(3);
        let comps = m.components(&m.vertices());
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert!(m.components(&VertexSet::new()).is_empty());
        // size ordering beats vertex ordering
        let g = Graph::from_edges(5, &[(2, 3), (3, 4)]).unwrap();
        let comps = g.components(&g.vertices());
        assert_eq!(comps[0].to_vec(), vec![2, 3, 4]);
        assert_eq!(comps[1].to_vec(), vec![0]);
        assert_eq!(comps[2].to_vec(), vec![1]);
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::cycle(5).max_degree(&VertexSet::full(5)), 2);
        assert_eq!(Graph::complete(5).max_degree(&VertexSet::full(5)), 4);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.max_degree(&[0, 2].iter().collect()), 0);
        assert_eq!(c5.max_degree(&VertexSet::new()), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::edgeless(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert!(g.add_edge(0, 3).is_err());
        assert!(Graph::new(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(12)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn complete_pair_duality(g in arb_graph(10), mask in any::<u32>()) {
            let n = g.n();
            let a: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1 && v % 2 == 0).collect();
            let b: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1 && v % 2 == 1).collect();
            prop_assert_eq!(g.is_complete_pair(&a, &b), g.complement().is_anticomplete_pair(&a, &b));
        }

        #[test]
        fn components_partition(g in arb_graph(12), mask in any::<u16>()) {
            let s: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            let comps = g.components(&s);
            let mut union = VertexSet::new();
            for (i, c) in comps.iter().enumerate() {
                prop_assert!(union.is_disjoint(c));
                union |= *c;
                prop_assert!(g.is_connected(c));
                for d in &comps[i + 1..] {
                    prop_assert!(g.is_anticomplete_pair(c, d));
                }
            }
            prop_assert_eq!(union, s);
        }

        #[test]
        fn induced_commutes_with_complement(g in arb_graph(10), mask in any::<u16>()) {
            let s: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            let (a, ma) = g.induced(&s).unwrap();
            let (b, mb) = g.complement().induced(&s).unwrap();
            prop_assert_eq!(ma, mb);
            prop_assert_eq!(a.complement(), b);
        }
    }
}
