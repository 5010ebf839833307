//! One graph per isomorphism class by canonical augmentation: a graph on
//! `n + 1` vertices is kept only when its newest vertex lies in the orbit
//! of its canonical deletion vertex.

use std::collections::HashSet;

use comblab_core::Graph;
use rayon::prelude::*;

use crate::canon::{canonical_coloured, canonical_form};
use crate::error::{HarnessError, Result};

pub const ENUMERATION_CAP: usize = 9;

/// A cheap isomorphism invariant of a vertex: its degree and the sorted
/// degrees of its neighbours.
fn vertex_invariant(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Whether `v` is in the orbit chosen for deletion: the vertices maximising
/// the invariant, then the marked canonical code.
fn is_canonical_deletion(g: &Graph, v: usize) -> bool {
    let inv: Vec<_> = (0..g.n()).map(|u| vertex_invariant(g, u)).collect();
    let top = inv.iter().max().expect("nonempty graph");
    if inv[v] != *top {
        return false;
    }
    let candidates: Vec<usize> = (0..g.n()).filter(|&u| inv[u] == *top).collect();
    if candidates.len() == 1 {
        return true;
    }
    let marked = |u: usize| {
        let mut colours = vec![0u32; g.n()];
        colours[u] = 1;
        canonical_coloured(g, &colours).code
    };
    let mine = marked(v);
    candidates.iter().all(|&u| u == v || marked(u) <= mine)
}

fn children(parent: &Graph) -> Vec<Graph> {
    let k = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << k {
        let mut g = Graph::new(k + 1).expect("within cap");
        for (u, v) in parent.edges() {
            g.add_edge(u, v).expect("in range");
        }
        for u in 0..k {
            if mask >> u & 1 == 1 {
                g.add_edge(u, k).expect("in range");
            }
        }
        if is_canonical_deletion(&g, k) && seen.insert(canonical_form(&g).code) {
            out.push(g);
        }
    }
    out
}

/// Every graph on `n` vertices up to isomorphism, in a fixed order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CAP {
        return Err(HarnessError::Cap {
            what: "enumeration vertex count",
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut level = vec![Graph::new(0).expect("empty graph")];
    for _ in 0..n {
        level = level.par_iter().flat_map_iter(children).collect();
    }
    Ok(level)
}

/// Classes on `n` vertices with no induced member of a hereditary family:
/// only free graphs are extended.
pub fn enumerate_free(n: usize, free: impl Fn(&Graph) -> bool + Sync) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CAP {
        return Err(HarnessError::Cap {
            what: "enumeration vertex count",
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut level = vec![Graph::new(0).expect("empty graph")];
    for _ in 0..n {
        level = level
            .par_iter()
            .flat_map_iter(|p| children(p).into_iter().filter(|g| free(g)))
            .collect();
    }
    Ok(level)
}

/// Labeled dedup: every graph on `n` vertices reduced by canonical code.
/// Only for cross-checking at small `n`.
pub fn count_by_labeled_dedup(n: usize) -> usize {
    assert!(n <= 7, "labeled dedup is only feasible for tiny n");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut codes = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        codes.insert(canonical_form(&Graph::from_edges(n, &edges).expect("in range")).code);
    }
    codes.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn matches_labeled_dedup() {
        for n in 1..=5 {
            assert_eq!(enumerate_graphs(n).unwrap().len(), count_by_labeled_dedup(n));
        }
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let gs = enumerate_graphs(5).unwrap();
        for i in 0..gs.len() {
            for j in 0..i {
                assert!(!isomorphic(&gs[i], &gs[j]));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_graphs(10), Err(HarnessError::Cap { .. })));
    }

    #[test]
    fn hereditary_filter_agrees_with_post_filter() {
        let triangle_free = |g: &Graph| comblab_core::extremal::omega(g, &g.vertices()) < 3;
        for n in 3..=6 {
            let direct = enumerate_free(n, triangle_free).unwrap().len();
            let post = enumerate_graphs(n).unwrap().iter().filter(|g| triangle_free(g)).count();
            assert_eq!(direct, post);
        }
    }
}
