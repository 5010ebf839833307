//! Seeded random graphs. All randomness in the crate flows through ChaCha8.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` drawn from `rng`, edges visited in `(u, v)`, `u < v` order.
pub fn gnp_with<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::edgeless(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("vertices in range");
            }
        }
    }
    g
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gnp_with(n, p, &mut rng(seed))
}
