//! Exact algorithms around the Erdős–Hajnal property for small graphs:
//! `alpha * omega`, induced-subgraph search, combs and sparsity
//! certificates, blockades, sparsification and sparse decompositions.

pub mod blockade;
pub mod comb;
pub mod decompose;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod random;
pub mod rational;
pub mod search;
pub mod sparsify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
pub use vertex_set::VertexSet;

#[cfg(test)]
pub(crate) mod testutil {
    use proptest::prelude::*;

    use crate::graph::Graph;
    use crate::vertex_set::VertexSet;

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::edgeless(n);
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    pub(crate) fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        crate::random::gnp(n, p, seed)
    }

    /// `(alpha, omega)` of `g[s]` by enumerating every subset.
    pub(crate) fn brute_alpha_omega(g: &Graph, s: &VertexSet) -> (usize, usize) {
        let verts = s.to_vec();
        assert!(verts.len() <= 22);
        let (mut a, mut w) = (0, 0);
        for mask in 0u32..1 << verts.len() {
            let sub: VertexSet = verts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            if g.is_stable(&sub) {
                a = a.max(sub.len());
            }
            if g.is_clique(&sub) {
                w = w.max(sub.len());
            }
        }
        (a, w)
    }
}
